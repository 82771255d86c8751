#include "ggal/action.hpp"

namespace ggal {

Subspace Action::ideal_of_object(int e) const {
  std::vector<Vec> span;
  const Vec& one = one_of_object(e);
  for (std::size_t i = 0; i < alg.dim; ++i) {
    Vec b(alg.dim, 0);
    b[i] = 1;
    span.push_back(alg.mul(b, one));
  }
  return Subspace::from_spanning(alg.f, alg.dim, span);
}

Vec Action::apply(int g, const Vec& x) const {
  int e = gpd.dom[(std::size_t)g];
  return mat_apply(beta[(std::size_t)g], alg.mul(x, one_of_object(e)));
}

ValidationReport validate_action(const Action& act) {
  ValidationReport rep;
  const Algebra& a = act.alg;
  const Groupoid& g = act.gpd;
  const std::size_t d = a.dim;

  if ((int)act.unit_idem.size() != g.n_objects || (int)act.beta.size() != g.size()) {
    rep.add("tables", "idempotent or beta table has wrong length");
    return rep;
  }

  Vec total(d, 0);
  for (int e = 0; e < g.n_objects; ++e) {
    const Vec& one = act.one_of_object(e);
    if (a.mul(one, one) != one) rep.add("idempotent", "object " + std::to_string(e));
    for (std::size_t i = 0; i < d; ++i) {
      Vec b(d, 0);
      b[i] = 1;
      if (a.mul(one, b) != a.mul(b, one)) {
        rep.add("idempotent-central", "object " + std::to_string(e) + ", basis " + a.basis_name(i));
        break;
      }
    }
    total = vec_add(a.f, total, one);
    for (int f2 = e + 1; f2 < g.n_objects; ++f2)
      if (!vec_is_zero(a.mul(one, act.one_of_object(f2))))
        rep.add("idempotent-orthogonal", "objects " + std::to_string(e) + "," + std::to_string(f2));
  }
  if (total != a.unit) rep.add("idempotent-sum", "sum of unit idempotents differs from 1_R");

  std::vector<Subspace> ideals;
  for (int e = 0; e < g.n_objects; ++e) ideals.push_back(act.ideal_of_object(e));

  for (int m = 0; m < g.size(); ++m) {
    const Mat& bm = act.beta[(std::size_t)m];
    int de = g.dom[(std::size_t)m], re = g.ran[(std::size_t)m];
    const Subspace& src = ideals[(std::size_t)de];
    const Subspace& dst = ideals[(std::size_t)re];

    // annihilates every other block
    for (int e = 0; e < g.n_objects; ++e) {
      if (e == de) continue;
      for (std::size_t i = 0; i < ideals[(std::size_t)e].dim(); ++i)
        if (!vec_is_zero(mat_apply(bm, ideals[(std::size_t)e].basis_row(i)))) {
          rep.add("beta-domain", g.name(m) + " does not annihilate E_" + std::to_string(e));
          break;
        }
    }

    std::vector<Vec> image;
    bool img_ok = true;
    for (std::size_t i = 0; i < src.dim(); ++i) {
      Vec w = mat_apply(bm, src.basis_row(i));
      if (!dst.contains(w)) {
        rep.add("beta-domain", g.name(m) + " image leaves E_" + std::to_string(re));
        img_ok = false;
        break;
      }
      image.push_back(std::move(w));
    }
    if (img_ok) {
      Subspace img = Subspace::from_spanning(a.f, d, image);
      if (img.dim() != src.dim() || img.dim() != dst.dim())
        rep.add("beta-bijective", g.name(m) + " rank " + std::to_string(img.dim()) + " of " +
                                      std::to_string(dst.dim()));
    }

    for (std::size_t i = 0; i < src.dim(); ++i)
      for (std::size_t j = 0; j < src.dim(); ++j) {
        Vec x = src.basis_row(i), y = src.basis_row(j);
        Vec lhs = mat_apply(bm, a.mul(x, y));
        Vec rhs = a.mul(mat_apply(bm, x), mat_apply(bm, y));
        if (lhs != rhs) rep.add("beta-multiplicative", g.name(m) + " on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }

    if (mat_apply(bm, act.one_of_object(de)) != act.one_of_object(re))
      rep.add("beta-unital", g.name(m));

    if (g.is_identity(m)) {
      for (std::size_t i = 0; i < src.dim(); ++i)
        if (mat_apply(bm, src.basis_row(i)) != src.basis_row(i)) {
          rep.add("beta-identity", g.name(m));
          break;
        }
    }
  }

  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) {
      if (!g.composable(x, y)) continue;
      int xy = g.compose(x, y);
      if (xy < 0) continue;  // reported by the groupoid validator
      const Subspace& src = ideals[(std::size_t)g.dom[(std::size_t)y]];
      for (std::size_t i = 0; i < src.dim(); ++i) {
        Vec v = src.basis_row(i);
        if (mat_apply(act.beta[(std::size_t)x], mat_apply(act.beta[(std::size_t)y], v)) !=
            mat_apply(act.beta[(std::size_t)xy], v)) {
          rep.add("beta-compose", g.name(x) + "*" + g.name(y));
          break;
        }
      }
    }

  return rep;
}

namespace {

Subspace invariants_space(const Action& act, u64 mask) {
  const Algebra& a = act.alg;
  const Groupoid& g = act.gpd;
  const std::size_t d = a.dim;
  std::vector<int> ms;
  for (int m = 0; m < g.size(); ++m)
    if (mask >> m & 1) ms.push_back(m);

  Mat stacked(a.f, ms.size() * d, d);
  std::size_t r0 = 0;
  for (int m : ms) {
    // beta_m(r 1_{dom}) - r 1_{ran} = 0, linear in r
    Mat lhs = mat_mul(act.beta[(std::size_t)m], a.right_mult(act.one_of_object(g.dom[(std::size_t)m])));
    Mat rhs = a.right_mult(act.one_of_object(g.ran[(std::size_t)m]));
    Mat diff = mat_sub(lhs, rhs);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked.at(r0 + r, c) = diff.at(r, c);
    r0 += d;
  }
  auto sol = solve(stacked, Vec(stacked.rows, 0));
  return Subspace::from_spanning(a.f, d, sol->kernel);
}

}  // namespace

Subalg invariants_subalgebra(const Action& act) {
  return invariants_over(act, act.gpd.size() == 0 ? 0 : (u64(1) << act.gpd.size()) - 1);
}

Subalg invariants_over(const Action& act, u64 mask) {
  if (mask == 0) {
    Subalg whole;
    whole.space = Subspace::full(act.alg.f, act.alg.dim);
    whole.unital = true;
    return whole;
  }
  return make_subalg(act.alg, invariants_space(act, mask));
}

Action restrict_action(const Action& act, Subgroupoid h) {
  if (!is_closed_subset(act.gpd, h.mask)) throw error("restrict_action: subset is not a subgroupoid");
  if (!is_wide(act.gpd, h.mask)) throw error("restrict_action: subgroupoid is not wide");
  std::vector<int> olds;
  Action out;
  out.gpd = act.gpd.sub(h.mask, &olds);
  out.alg = act.alg;
  out.unit_idem = act.unit_idem;
  for (int old : olds) out.beta.push_back(act.beta[(std::size_t)old]);
  return out;
}

JModule j_module(const Action& act, int g) {
  const Algebra& a = act.alg;
  const std::size_t d = a.dim;
  Mat stacked(a.f, d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec x(d, 0);
    x[i] = 1;
    // r * beta_g(x 1_{g^-1}) - x * r = 0, linear in r
    Mat diff = mat_sub(a.right_mult(act.apply(g, x)), a.left_mult(x));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked.at(i * d + r, c) = diff.at(r, c);
  }
  auto sol = solve(stacked, Vec(stacked.rows, 0));
  Subspace raw = Subspace::from_spanning(a.f, d, sol->kernel);
  JModule j;
  j.morphism = g;
  j.space = intersect(raw, act.ideal_of(g));
  return j;
}

std::vector<JModule> j_table(const Action& act) {
  std::vector<JModule> tab;
  for (int g = 0; g < act.gpd.size(); ++g) tab.push_back(j_module(act, g));
  return tab;
}

u64 s_set(const std::vector<JModule>& jtab, u64 h_mask) {
  u64 s = 0;
  for (const JModule& j : jtab)
    if ((h_mask >> j.morphism & 1) && j.space.dim() > 0) s |= u64(1) << j.morphism;
  return s;
}

u64 t_set(const std::vector<JModule>& jtab, u64 h_mask) {
  return h_mask & ~s_set(jtab, h_mask);
}

std::vector<Subgroupoid> h_bar_class(const std::vector<JModule>& jtab,
                                     const std::vector<Subgroupoid>& wide_list, Subgroupoid h) {
  u64 sh = s_set(jtab, h.mask);
  std::vector<Subgroupoid> cls;
  for (const Subgroupoid& l : wide_list)
    if (s_set(jtab, l.mask) == sh) cls.push_back(l);
  return cls;
}

}  // namespace ggal
