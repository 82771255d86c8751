#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ggal/fp.hpp"

namespace ggal {

using Vec = std::vector<u32>;

// Dense row-major matrix over F_p. Matrices act on column vectors from the
// left: (M*v)_r = sum_c M(r,c) v_c.
struct Mat {
  Fp f;
  std::size_t rows = 0, cols = 0;
  std::vector<u32> a;

  Mat() = default;
  Mat(Fp field, std::size_t r, std::size_t c) : f(field), rows(r), cols(c), a(r * c, 0) {}

  u32& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  u32 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  void swap_rows(std::size_t i, std::size_t j);
  void scale_row(std::size_t i, u32 s);
  // row i += s * row j
  void add_multiple(std::size_t i, std::size_t j, u32 s);

  Vec row(std::size_t i) const { return Vec(a.begin() + (long)(i * cols), a.begin() + (long)((i + 1) * cols)); }
  void set_row(std::size_t i, const Vec& v);

  static Mat identity(Fp f, std::size_t n);
  static Mat from_rows(Fp f, std::size_t cols, const std::vector<Vec>& rows);

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_sub(const Mat& x, const Mat& y);

Vec vec_add(Fp f, const Vec& x, const Vec& y);
Vec vec_sub(Fp f, const Vec& x, const Vec& y);
Vec vec_scale(Fp f, u32 s, const Vec& x);
bool vec_is_zero(const Vec& x);

// Reduced row echelon form; returns (rref, rank). Row space is preserved.
std::pair<Mat, std::size_t> rref(Mat m);

std::optional<Mat> mat_inverse(const Mat& m);

struct LinearSolution {
  Vec particular;
  // kernel basis rows are returned raw (not canonicalized); callers wanting a
  // canonical subspace go through Subspace::from_spanning
  std::vector<Vec> kernel;
};

// Solve a*x = b. Empty optional iff inconsistent.
std::optional<LinearSolution> solve(const Mat& a, const Vec& b);

}  // namespace ggal
