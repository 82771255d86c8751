#include "ggal/skew.hpp"

namespace ggal {

Vec SkewRing::embed_cell(int g, const Vec& x) const {
  auto coords = local[(std::size_t)g].coords_of(x);
  if (!coords) throw error("skew embed: vector not in E_g");
  Vec out(ring.dim, 0);
  for (std::size_t i = 0; i < coords->size(); ++i) out[cell_start[(std::size_t)g] + i] = (*coords)[i];
  return out;
}

Vec SkewRing::embed_algebra(const Action& act, const Vec& r) const {
  Vec out(ring.dim, 0);
  for (int e = 0; e < act.gpd.n_objects; ++e) {
    int id = act.gpd.identity[(std::size_t)e];
    Vec cell = embed_cell(id, act.alg.mul(r, act.one_of_object(e)));
    out = vec_add(ring.f, out, cell);
  }
  return out;
}

Subalg SkewRing::embedded_subalgebra(const Action& act, const Subalg& sub) const {
  std::vector<Vec> span;
  for (std::size_t i = 0; i < sub.dim(); ++i) span.push_back(embed_algebra(act, sub.space.basis_row(i)));
  return make_subalg(ring, Subspace::from_spanning(ring.f, ring.dim, span));
}

SkewRing build_skew(const Action& act) {
  const Algebra& a = act.alg;
  const Groupoid& g = act.gpd;

  SkewRing s;
  s.cell_start.assign((std::size_t)g.size(), 0);
  for (int m = 0; m < g.size(); ++m) {
    s.local.push_back(act.ideal_of(m));
    s.cell_start[(std::size_t)m] = s.cells.size();
    for (std::size_t i = 0; i < s.local.back().dim(); ++i) s.cells.emplace_back(m, i);
  }

  const std::size_t dim = s.cells.size();
  s.ring = Algebra(a.f, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto [gm, gi] = s.cells[i];
    s.ring.basis_names.push_back(g.name(gm) + "#" + std::to_string(gi));
  }

  // (x u_g)(y u_h) = x beta_g(y 1_{g^-1}) u_{gh} when composable, else 0
  for (std::size_t i = 0; i < dim; ++i) {
    auto [gm, gi] = s.cells[i];
    Vec x = s.local[(std::size_t)gm].basis_row(gi);
    for (std::size_t j = 0; j < dim; ++j) {
      auto [hm, hj] = s.cells[j];
      if (!g.composable(gm, hm)) continue;
      int ghm = g.compose(gm, hm);
      if (ghm < 0) throw error("build_skew: composition table incomplete");
      Vec y = s.local[(std::size_t)hm].basis_row(hj);
      Vec prod = a.mul(x, act.apply(gm, y));
      auto coords = s.local[(std::size_t)ghm].coords_of(prod);
      if (!coords) throw error("build_skew: product leaves E_{gh} (invalid action)");
      for (std::size_t k = 0; k < coords->size(); ++k)
        s.ring.set_c(i, j, s.cell_start[(std::size_t)ghm] + k, (*coords)[k]);
    }
  }

  for (int e = 0; e < g.n_objects; ++e) {
    int id = g.identity[(std::size_t)e];
    Vec cell = s.embed_cell(id, act.one_of_object(e));
    s.ring.unit = vec_add(a.f, s.ring.unit, cell);
  }

  ValidationReport rep = s.ring.validate();
  if (!rep.ok())
    throw error("build_skew: " + rep.violations.front().axiom + " failed at " +
                rep.violations.front().witness);
  return s;
}

CosetCheckReport coset_decomposition_check(const SkewRing& skew, const Action& act, Subgroupoid h) {
  const Groupoid& g = act.gpd;
  CosetDecomposition cosets = coset_decomposition(g, h);
  const std::size_t dim = skew.ring.dim;

  // basis of R*H inside R*G
  std::vector<Vec> rh_basis;
  for (std::size_t i = 0; i < dim; ++i)
    if (h.mask >> skew.cells[i].first & 1) {
      Vec v(dim, 0);
      v[i] = 1;
      rh_basis.push_back(std::move(v));
    }

  CosetCheckReport rep;
  auto run_side = [&](const std::vector<int>& reps, bool right_side, std::vector<CosetSummand>& out,
                      bool& direct, bool& spans) {
    Subspace running = Subspace::zero(skew.ring.f, dim);
    direct = true;
    for (int r : reps) {
      Vec u_rep = skew.embed_cell(r, act.one_of(r));
      std::vector<Vec> span;
      for (const Vec& b : rh_basis)
        span.push_back(right_side ? skew.ring.mul(b, u_rep) : skew.ring.mul(u_rep, b));
      Subspace summand = Subspace::from_spanning(skew.ring.f, dim, span);
      if (intersect(running, summand).dim() != 0) direct = false;
      running = sum(running, summand);
      out.push_back({r, summand.dim()});
    }
    spans = running.dim() == dim;
  };

  run_side(cosets.right_reps, true, rep.right, rep.right_direct, rep.right_spans);
  run_side(cosets.left_reps, false, rep.left, rep.left_direct, rep.left_spans);
  rep.pass = rep.right_direct && rep.right_spans && rep.left_direct && rep.left_spans;
  return rep;
}

}  // namespace ggal
