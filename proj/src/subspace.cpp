#include "ggal/subspace.hpp"

namespace ggal {

namespace {

std::vector<std::size_t> pivot_columns(const Mat& m) {
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::size_t c = 0;
    while (c < m.cols && m.at(r, c) == 0) ++c;
    if (c < m.cols) piv.push_back(c);
  }
  return piv;
}

}  // namespace

Subspace Subspace::zero(Fp f, std::size_t n) {
  Subspace s;
  s.f = f;
  s.ambient = n;
  s.basis = Mat(f, 0, n);
  return s;
}

Subspace Subspace::full(Fp f, std::size_t n) {
  Subspace s;
  s.f = f;
  s.ambient = n;
  s.basis = Mat::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) s.pivots.push_back(i);
  return s;
}

Subspace Subspace::from_spanning(Fp f, std::size_t ambient, const std::vector<Vec>& spanning) {
  return from_spanning(Mat::from_rows(f, ambient, spanning));
}

Subspace Subspace::from_spanning(const Mat& rows) {
  auto [red, rank] = rref(rows);
  Subspace s;
  s.f = red.f;
  s.ambient = red.cols;
  s.basis = Mat(red.f, rank, red.cols);
  for (std::size_t r = 0; r < rank; ++r) s.basis.set_row(r, red.row(r));
  s.pivots = pivot_columns(s.basis);
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient) throw error("subspace reduce: ambient mismatch");
  for (std::size_t r = 0; r < basis.rows; ++r) {
    u32 c = v[pivots[r]];
    if (c == 0) continue;
    u32 nc = f.neg(c);
    for (std::size_t j = 0; j < ambient; ++j) v[j] = f.add(v[j], f.mul(nc, basis.at(r, j)));
  }
  return v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) throw error("subspace contains: ambient mismatch");
  for (std::size_t r = 0; r < other.basis.rows; ++r)
    if (!contains(other.basis_row(r))) return false;
  return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots[r]];
  return c;
}

std::string Subspace::key() const {
  std::string k = std::to_string(ambient);
  k += ':';
  for (u32 v : basis.a) {
    k += std::to_string(v);
    k += ',';
  }
  return k;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient) throw error("subspace sum: ambient mismatch");
  Mat stacked(u.f, u.dim() + v.dim(), u.ambient);
  for (std::size_t r = 0; r < u.dim(); ++r) stacked.set_row(r, u.basis_row(r));
  for (std::size_t r = 0; r < v.dim(); ++r) stacked.set_row(u.dim() + r, v.basis_row(r));
  return Subspace::from_spanning(stacked);
}

// Zassenhaus: rref of [U U; V 0]; rows with zero left half carry the
// intersection in the right half.
Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient) throw error("subspace intersect: ambient mismatch");
  std::size_t n = u.ambient;
  Mat block(u.f, u.dim() + v.dim(), 2 * n);
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      block.at(r, j) = u.basis.at(r, j);
      block.at(r, n + j) = u.basis.at(r, j);
    }
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j) block.at(u.dim() + r, j) = v.basis.at(r, j);

  auto [red, rank] = rref(std::move(block));
  std::vector<Vec> inter;
  for (std::size_t r = 0; r < rank; ++r) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = red.at(r, j) == 0;
    if (!left_zero) continue;
    Vec w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = red.at(r, n + j);
    inter.push_back(std::move(w));
  }
  return Subspace::from_spanning(u.f, n, inter);
}

}  // namespace ggal
