#include "ggal/algebra.hpp"

#include <algorithm>

namespace ggal {

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim) throw error("algebra mul: length mismatch");
  Vec z(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      u32 xy = f.mul(x[i], y[j]);
      const u32* row = &sc[(i * dim + j) * dim];
      for (std::size_t k = 0; k < dim; ++k)
        if (row[k]) z[k] = f.add(z[k], f.mul(xy, row[k]));
    }
  }
  return z;
}

Vec Algebra::basis_mul(std::size_t i, std::size_t j) const {
  Vec z(dim);
  const u32* row = &sc[(i * dim + j) * dim];
  std::copy(row, row + dim, z.begin());
  return z;
}

Mat Algebra::left_mult(const Vec& x) const {
  Mat m(f, dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j) {
      u32 acc = 0;
      for (std::size_t i = 0; i < dim; ++i) acc = f.add(acc, f.mul(x[i], c(i, j, k)));
      m.at(k, j) = acc;
    }
  return m;
}

Mat Algebra::right_mult(const Vec& y) const {
  Mat m(f, dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < dim; ++i) {
      u32 acc = 0;
      for (std::size_t j = 0; j < dim; ++j) acc = f.add(acc, f.mul(y[j], c(i, j, k)));
      m.at(k, i) = acc;
    }
  return m;
}

std::string Algebra::basis_name(std::size_t i) const {
  if (i < basis_names.size() && !basis_names[i].empty()) return basis_names[i];
  return "b" + std::to_string(i);
}

ValidationReport Algebra::validate() const {
  ValidationReport rep;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec bi(dim, 0);
    bi[i] = 1;
    if (mul(unit, bi) != bi || mul(bi, unit) != bi) rep.add("unit-law", basis_name(i));
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vec ij = basis_mul(i, j);
      for (std::size_t k = 0; k < dim; ++k) {
        Vec bk(dim, 0);
        bk[k] = 1;
        Vec jk = basis_mul(j, k);
        Vec bi(dim, 0);
        bi[i] = 1;
        if (mul(ij, bk) != mul(bi, jk))
          rep.add("associativity", "(" + basis_name(i) + "*" + basis_name(j) + ")*" + basis_name(k));
      }
    }
  return rep;
}

Subalg make_subalg(const Algebra& a, Subspace s) {
  Subalg v;
  v.unital = s.contains(a.unit);
  v.space = std::move(s);
  return v;
}

bool is_mult_closed(const Algebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(a.mul(s.basis_row(i), s.basis_row(j)))) return false;
  return true;
}

namespace {

// kernel of the stacked commuting constraints [x, s] = 0 over the rows s
Subspace commutant_space(const Algebra& a, const std::vector<Vec>& with) {
  const std::size_t d = a.dim;
  Mat stacked(a.f, with.size() * d, d);
  std::size_t r0 = 0;
  for (const Vec& s : with) {
    Mat diff = mat_sub(a.right_mult(s), a.left_mult(s));  // x -> xs - sx
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked.at(r0 + r, c) = diff.at(r, c);
    r0 += d;
  }
  auto sol = solve(stacked, Vec(stacked.rows, 0));
  return Subspace::from_spanning(a.f, d, sol->kernel);
}

}  // namespace

Subalg center(const Algebra& a) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec b(a.dim, 0);
    b[i] = 1;
    basis.push_back(std::move(b));
  }
  return make_subalg(a, commutant_space(a, basis));
}

Subalg centralizer(const Algebra& a, const Subalg& inner, const Subalg& outer) {
  std::vector<Vec> with;
  for (std::size_t i = 0; i < inner.dim(); ++i) with.push_back(inner.space.basis_row(i));
  Subspace cent = with.empty() ? Subspace::full(a.f, a.dim) : commutant_space(a, with);
  return make_subalg(a, intersect(cent, outer.space));
}

Subalg centralizer_in_full(const Algebra& a, const Subalg& inner) {
  Subalg full;
  full.space = Subspace::full(a.f, a.dim);
  full.unital = true;
  return centralizer(a, inner, full);
}

Subalg subalgebra_closure(const Algebra& a, const std::vector<Vec>& seed, bool include_unit) {
  std::vector<Vec> gen = seed;
  if (include_unit) gen.push_back(a.unit);
  Subspace cur = Subspace::from_spanning(a.f, a.dim, gen);
  for (;;) {
    std::vector<Vec> more;
    for (std::size_t i = 0; i < cur.dim(); ++i)
      for (std::size_t j = 0; j < cur.dim(); ++j) {
        Vec p = a.mul(cur.basis_row(i), cur.basis_row(j));
        if (!cur.contains(p)) more.push_back(std::move(p));
      }
    if (more.empty()) return make_subalg(a, cur);
    for (std::size_t i = 0; i < cur.dim(); ++i) more.push_back(cur.basis_row(i));
    cur = Subspace::from_spanning(a.f, a.dim, more);
  }
}

Subalg product_subalgebra(const Algebra& a, const Subalg& s, const Subalg& c) {
  Subalg ctr = center(a);
  if (!ctr.space.contains(c.space)) throw error("product_subalgebra: factor is not central");
  std::vector<Vec> span;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j)
      span.push_back(a.mul(s.space.basis_row(i), c.space.basis_row(j)));
  return make_subalg(a, Subspace::from_spanning(a.f, a.dim, span));
}

bool double_centralizer_check(const Algebra& a, const Subalg& sub) {
  Subalg once = centralizer_in_full(a, sub);
  Subalg twice = centralizer_in_full(a, once);
  return twice.space == sub.space;
}

Vec TensorQuotient::project(const Vec& raw) const {
  Vec reduced = relations.reduce(raw);
  Vec q(free_cols.size());
  for (std::size_t i = 0; i < free_cols.size(); ++i) q[i] = reduced[free_cols[i]];
  return q;
}

Vec TensorQuotient::lift(const Vec& q) const {
  Vec raw(raw_dim(), 0);
  for (std::size_t i = 0; i < free_cols.size(); ++i) raw[free_cols[i]] = q[i];
  return raw;
}

Vec TensorQuotient::raw_of_pair(const Vec& x, const Vec& y) const {
  auto xc = left.space.coords_of(x);
  auto yc = right.space.coords_of(y);
  if (!xc || !yc) throw error("tensor: pair component outside its factor");
  const std::size_t dr = right.dim();
  Vec raw(raw_dim(), 0);
  for (std::size_t a = 0; a < xc->size(); ++a)
    for (std::size_t b = 0; b < dr; ++b) raw[a * dr + b] = alg->f.mul((*xc)[a], (*yc)[b]);
  return raw;
}

TensorQuotient tensor_over_subring(const Algebra& a, const Subalg& left, const Subalg& right,
                                   const Subalg& base) {
  for (std::size_t i = 0; i < base.dim(); ++i)
    for (std::size_t j = 0; j < base.dim(); ++j) {
      Vec bi = base.space.basis_row(i), bj = base.space.basis_row(j);
      if (a.mul(bi, bj) != a.mul(bj, bi)) throw error("tensor_over_subring: base not commutative");
    }
  if (!left.space.contains(base.space) || !right.space.contains(base.space))
    throw error("tensor_over_subring: base not contained in both factors");
  if (!base.space.contains(a.unit)) throw error("tensor_over_subring: base does not contain the unit");

  const std::size_t dl = left.dim(), dr = right.dim();
  TensorQuotient t;
  t.alg = &a;
  t.left = left;
  t.right = right;
  t.base = base;

  std::vector<Vec> rels;
  for (std::size_t ia = 0; ia < dl; ++ia)
    for (std::size_t ic = 0; ic < base.dim(); ++ic) {
      Vec xc = a.mul(left.space.basis_row(ia), base.space.basis_row(ic));
      auto xc_coords = left.space.coords_of(xc);
      if (!xc_coords) throw error("tensor_over_subring: left factor not closed under base");
      for (std::size_t ib = 0; ib < dr; ++ib) {
        Vec cy = a.mul(base.space.basis_row(ic), right.space.basis_row(ib));
        auto cy_coords = right.space.coords_of(cy);
        if (!cy_coords) throw error("tensor_over_subring: right factor not closed under base");
        Vec rel(dl * dr, 0);
        for (std::size_t j = 0; j < dl; ++j)
          rel[j * dr + ib] = a.f.add(rel[j * dr + ib], (*xc_coords)[j]);
        for (std::size_t j = 0; j < dr; ++j)
          rel[ia * dr + j] = a.f.sub(rel[ia * dr + j], (*cy_coords)[j]);
        if (!vec_is_zero(rel)) rels.push_back(std::move(rel));
      }
    }
  t.relations = Subspace::from_spanning(a.f, dl * dr, rels);

  std::vector<char> is_pivot(dl * dr, 0);
  for (std::size_t p : t.relations.pivots) is_pivot[p] = 1;
  for (std::size_t c = 0; c < dl * dr; ++c)
    if (!is_pivot[c]) t.free_cols.push_back(c);
  return t;
}

namespace {

// mult-map image of a raw tensor coordinate vector, as an ambient vector
Vec tensor_mult_image(const TensorQuotient& t, const Vec& raw) {
  const Algebra& a = *t.alg;
  const std::size_t dr = t.right.dim();
  Vec out(a.dim, 0);
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    if (raw[idx] == 0) continue;
    Vec prod = a.mul(t.left.space.basis_row(idx / dr), t.right.space.basis_row(idx % dr));
    out = vec_add(a.f, out, vec_scale(a.f, raw[idx], prod));
  }
  return out;
}

// raw coordinates of r.z - z.r for a raw tensor z (left and right factors
// must both contain r and be closed under it)
Vec tensor_commutator(const TensorQuotient& t, const Vec& r, const Vec& raw) {
  const Algebra& a = *t.alg;
  const std::size_t dr = t.right.dim();
  Vec out(raw.size(), 0);
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    if (raw[idx] == 0) continue;
    std::size_t ia = idx / dr, ib = idx % dr;
    Vec rx = a.mul(r, t.left.space.basis_row(ia));
    Vec yr = a.mul(t.right.space.basis_row(ib), r);
    auto rxc = t.left.space.coords_of(rx);
    auto yrc = t.right.space.coords_of(yr);
    if (!rxc || !yrc) throw error("tensor commutator: factor not closed under r");
    for (std::size_t j = 0; j < rxc->size(); ++j)
      out[j * dr + ib] = a.f.add(out[j * dr + ib], a.f.mul(raw[idx], (*rxc)[j]));
    for (std::size_t j = 0; j < yrc->size(); ++j)
      out[ia * dr + j] = a.f.sub(out[ia * dr + j], a.f.mul(raw[idx], (*yrc)[j]));
  }
  return out;
}

void check_separability_preconditions(const Algebra& a, const Subalg& sub, const Subalg& base) {
  if (!sub.space.contains(base.space)) throw error("separability: base not contained in sub");
  for (std::size_t i = 0; i < base.dim(); ++i)
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      Vec c = base.space.basis_row(i), s = sub.space.basis_row(j);
      if (a.mul(c, s) != a.mul(s, c)) throw error("separability: base does not centralize sub");
    }
}

}  // namespace

std::optional<TensorElement> separability_element(const Algebra& a, const Subalg& sub,
                                                  const Subalg& base) {
  check_separability_preconditions(a, sub, base);
  TensorQuotient t = tensor_over_subring(a, sub, sub, base);
  const std::size_t q = t.dim();

  // unknown z in quotient coordinates; conditions: mult(z) = 1_R and
  // r z - z r = 0 in the quotient for each basis r of sub
  const std::size_t dsub = sub.dim();
  Mat system(a.f, a.dim + dsub * q, q);
  Vec rhs(system.rows, 0);
  for (std::size_t col = 0; col < q; ++col) {
    Vec raw = t.lift([&] { Vec e(q, 0); e[col] = 1; return e; }());
    Vec mu = tensor_mult_image(t, raw);
    for (std::size_t r = 0; r < a.dim; ++r) system.at(r, col) = mu[r];
    for (std::size_t i = 0; i < dsub; ++i) {
      Vec comm = t.project(tensor_commutator(t, sub.space.basis_row(i), raw));
      for (std::size_t r = 0; r < q; ++r) system.at(a.dim + i * q + r, col) = comm[r];
    }
  }
  for (std::size_t r = 0; r < a.dim; ++r) rhs[r] = a.unit[r];

  auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;

  TensorElement z;
  const std::size_t dr = t.right.dim();
  for (std::size_t i = 0; i < q; ++i) {
    if (sol->particular[i] == 0) continue;
    std::size_t raw_idx = t.free_cols[i];
    Vec x = sub.space.basis_row(raw_idx / dr);
    Vec y = vec_scale(a.f, sol->particular[i], sub.space.basis_row(raw_idx % dr));
    z.pairs.emplace_back(std::move(x), std::move(y));
  }
  if (!verify_separability_element(a, sub, base, z))
    throw error("separability: solver output failed substitution check");
  return z;
}

bool verify_separability_element(const Algebra& a, const Subalg& sub, const Subalg& base,
                                 const TensorElement& z) {
  check_separability_preconditions(a, sub, base);
  TensorQuotient t = tensor_over_subring(a, sub, sub, base);

  Vec prod_sum(a.dim, 0);
  Vec raw(t.raw_dim(), 0);
  for (const auto& [x, y] : z.pairs) {
    if (!sub.space.contains(x) || !sub.space.contains(y)) return false;
    prod_sum = vec_add(a.f, prod_sum, a.mul(x, y));
    raw = vec_add(a.f, raw, t.raw_of_pair(x, y));
  }
  if (prod_sum != a.unit) return false;
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    Vec comm = tensor_commutator(t, sub.space.basis_row(i), raw);
    if (!t.relations.contains(comm)) return false;
  }
  return true;
}

}  // namespace ggal
