#include "ggal/mat.hpp"

#include <algorithm>

namespace ggal {

void Mat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::scale_row(std::size_t i, u32 s) {
  for (std::size_t c = 0; c < cols; ++c) at(i, c) = f.mul(at(i, c), s);
}

void Mat::add_multiple(std::size_t i, std::size_t j, u32 s) {
  for (std::size_t c = 0; c < cols; ++c) at(i, c) = f.add(at(i, c), f.mul(s, at(j, c)));
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols) throw error("set_row: length mismatch");
  std::copy(v.begin(), v.end(), a.begin() + (long)(i * cols));
}

Mat Mat::identity(Fp f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Fp f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw error("mat_mul: dimension mismatch");
  Mat z(x.f, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      u32 v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        z.at(i, j) = z.f.add(z.at(i, j), z.f.mul(v, y.at(k, j)));
    }
  return z;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  if (m.cols != v.size()) throw error("mat_apply: dimension mismatch");
  Vec out(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    u64 acc = 0;
    for (std::size_t c = 0; c < m.cols; ++c) acc += (u64)m.at(r, c) * v[c];
    out[r] = (u32)(acc % m.f.p);
  }
  return out;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw error("mat_sub: dimension mismatch");
  Mat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = z.f.sub(x.a[i], y.a[i]);
  return z;
}

Vec vec_add(Fp f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw error("vec_add: length mismatch");
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = f.add(x[i], y[i]);
  return z;
}

Vec vec_sub(Fp f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw error("vec_sub: length mismatch");
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = f.sub(x[i], y[i]);
  return z;
}

Vec vec_scale(Fp f, u32 s, const Vec& x) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = f.mul(s, x[i]);
  return z;
}

bool vec_is_zero(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](u32 v) { return v == 0; });
}

std::pair<Mat, std::size_t> rref(Mat m) {
  const Fp f = m.f;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    m.swap_rows(piv, r);
    m.scale_row(r, f.inv(m.at(r, c)));
    for (std::size_t i = 0; i < m.rows; ++i)
      if (i != r && m.at(i, c) != 0) m.add_multiple(i, r, f.neg(m.at(i, c)));
    ++r;
  }
  return {std::move(m), r};
}

std::optional<Mat> mat_inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  Mat aug(m.f, m.rows, 2 * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  auto [red, rank] = rref(std::move(aug));
  if (rank != m.rows) return std::nullopt;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if ((j == i ? 1u : 0u) != red.at(i, j)) return std::nullopt;
  Mat inv(m.f, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = red.at(i, m.cols + j);
  return inv;
}

std::optional<LinearSolution> solve(const Mat& a, const Vec& b) {
  if (a.rows != b.size()) throw error("solve: dimension mismatch");
  Mat aug(a.f, a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  auto [red, rank] = rref(std::move(aug));

  std::vector<long> pivot_of_col(a.cols, -1);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t c = 0;
    while (c < red.cols && red.at(r, c) == 0) ++c;
    if (c == a.cols) return std::nullopt;  // pivot in the rhs column
    pivot_of_col[c] = (long)r;
  }

  LinearSolution sol;
  sol.particular.assign(a.cols, 0);
  for (std::size_t c = 0; c < a.cols; ++c)
    if (pivot_of_col[c] >= 0) sol.particular[c] = red.at((std::size_t)pivot_of_col[c], a.cols);

  for (std::size_t fc = 0; fc < a.cols; ++fc) {
    if (pivot_of_col[fc] >= 0) continue;
    Vec k(a.cols, 0);
    k[fc] = 1;
    for (std::size_t c = 0; c < a.cols; ++c)
      if (pivot_of_col[c] >= 0) k[c] = a.f.neg(red.at((std::size_t)pivot_of_col[c], fc));
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace ggal
