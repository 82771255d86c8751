#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ggal/subspace.hpp"
#include "helpers.hpp"

using namespace ggal;
using testhelp::all_vectors;
using testhelp::rand_mat;
using testhelp::rand_vec;
using testhelp::Rng;

namespace {

// oracle: the full row space of a matrix as a set of vectors, by enumerating
// every coefficient combination
std::set<Vec> row_space_elements(const Mat& m) {
  std::set<Vec> out;
  for (const Vec& coeff : all_vectors(m.f, m.rows)) {
    Vec v(m.cols, 0);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        v[c] = m.f.add(v[c], m.f.mul(coeff[r], m.at(r, c)));
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("rref fixed cases") {
  Fp f5(5);

  Mat id = Mat::identity(f5, 2);
  auto [r1, rank1] = rref(id);
  CHECK(rank1 == 2);
  CHECK(r1 == id);

  Mat zero(f5, 3, 3);
  auto [r2, rank2] = rref(zero);
  CHECK(rank2 == 0);
  CHECK(r2 == zero);

  Mat m = Mat::from_rows(f5, 2, {{2, 4}, {1, 2}});
  auto [r3, rank3] = rref(m);
  CHECK(rank3 == 1);
  CHECK(r3 == Mat::from_rows(f5, 2, {{1, 2}, {0, 0}}));
  // row space preserved: exhaustive over all 25 coefficient vectors
  CHECK(row_space_elements(m) == row_space_elements(r3));
}

TEST_CASE("rref idempotent and row-space preserving on random input") {
  Rng rng(7);
  for (u32 p : {2u, 3u, 5u}) {
    Fp f(p);
    for (int trial = 0; trial < 30; ++trial) {
      Mat m = rand_mat(rng, f, 1 + rng() % 4, 1 + rng() % 4);
      auto [r, rank] = rref(m);
      auto [rr, rank2] = rref(r);
      CHECK(r == rr);
      CHECK(rank == rank2);
      if (m.rows <= 3) CHECK(row_space_elements(m) == row_space_elements(r));
    }
  }
}

TEST_CASE("solve fixed cases") {
  Fp f5(5);

  Mat id = Mat::identity(f5, 3);
  Vec v = {1, 4, 2};
  auto s1 = solve(id, v);
  REQUIRE(s1.has_value());
  CHECK(s1->particular == v);
  CHECK(s1->kernel.empty());

  Mat zero(f5, 2, 2);
  auto s2 = solve(zero, {0, 0});
  REQUIRE(s2.has_value());
  CHECK(s2->particular == Vec{0, 0});
  CHECK(Subspace::from_spanning(f5, 2, s2->kernel) == Subspace::full(f5, 2));

  CHECK(!solve(zero, {1, 0}).has_value());

  // x + y = 3 over F_5: enumerate all 25 pairs as the oracle
  Mat row = Mat::from_rows(f5, 2, {{1, 1}});
  auto s3 = solve(row, {3});
  REQUIRE(s3.has_value());
  CHECK(s3->kernel.size() == 1);
  std::set<Vec> oracle;
  for (const Vec& xy : all_vectors(f5, 2))
    if (f5.add(xy[0], xy[1]) == 3) oracle.insert(xy);
  std::set<Vec> produced;
  for (u32 t = 0; t < 5; ++t)
    produced.insert(vec_add(f5, s3->particular, vec_scale(f5, t, s3->kernel[0])));
  CHECK(produced == oracle);
}

TEST_CASE("solve consistency on random systems") {
  Rng rng(11);
  for (u32 p : {2u, 3u, 5u}) {
    Fp f(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
      Mat a = rand_mat(rng, f, rows, cols);
      Vec x = rand_vec(rng, f, cols);
      Vec b = mat_apply(a, x);
      auto s = solve(a, b);
      REQUIRE(s.has_value());
      CHECK(mat_apply(a, s->particular) == b);
      for (const Vec& k : s->kernel) CHECK(vec_is_zero(mat_apply(a, k)));
      auto [r, rank] = rref(a);
      CHECK(s->kernel.size() == cols - rank);
    }
  }
}

TEST_CASE("subspace fixed cases") {
  Fp f2(2);
  Subspace u = Subspace::from_spanning(f2, 3, {{1, 0, 0}, {0, 1, 0}});
  Subspace v = Subspace::from_spanning(f2, 3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(intersect(u, v) == Subspace::from_spanning(f2, 3, {{0, 1, 0}}));
  CHECK(sum(u, v) == Subspace::full(f2, 3));

  // oracle: classify all 8 vectors of F_2^3
  for (const Vec& w : all_vectors(f2, 3)) {
    bool in_u = (w[2] == 0), in_v = (w[0] == 0);
    CHECK(u.contains(w) == in_u);
    CHECK(v.contains(w) == in_v);
    CHECK(intersect(u, v).contains(w) == (in_u && in_v));
  }

  Subspace z = Subspace::zero(f2, 3);
  CHECK(sum(z, v) == v);
  CHECK(intersect(z, v) == z);
  CHECK(u == u);
}

TEST_CASE("canonical form is independent of the spanning set") {
  Rng rng(23);
  for (u32 p : {2u, 3u, 5u}) {
    Fp f(p);
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 2 + rng() % 3;
      Mat m = rand_mat(rng, f, 1 + rng() % 3, n);
      Subspace s = Subspace::from_spanning(m);
      // random invertible row operations on a padded spanning set
      std::vector<Vec> shuffled;
      for (std::size_t r = 0; r < m.rows; ++r) shuffled.push_back(m.row(r));
      for (int ops = 0; ops < 6; ++ops) {
        std::size_t i = rng() % shuffled.size(), j = rng() % shuffled.size();
        u32 c = 1 + rng() % (f.p - 1 == 0 ? 1 : f.p - 1);
        if (i != j) shuffled[i] = vec_add(f, shuffled[i], vec_scale(f, c, shuffled[j]));
      }
      shuffled.push_back(vec_add(f, shuffled[0], shuffled[0]));  // dependent extra row
      CHECK(Subspace::from_spanning(f, n, shuffled) == s);
    }
  }
}

TEST_CASE("dimension formula dim u + dim v = dim(u+v) + dim(u cap v)") {
  Rng rng(31);
  for (u32 p : {2u, 3u}) {
    Fp f(p);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t n = 2 + rng() % 4;
      Subspace u = Subspace::from_spanning(rand_mat(rng, f, rng() % 4, n));
      Subspace v = Subspace::from_spanning(rand_mat(rng, f, rng() % 4, n));
      CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());
      CHECK(sum(u, v).contains(u));
      CHECK(u.contains(intersect(u, v)));
    }
  }
}

TEST_CASE("coords_of reconstructs members") {
  Fp f3(3);
  Subspace s = Subspace::from_spanning(f3, 4, {{1, 2, 0, 1}, {0, 1, 1, 1}});
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Vec c = rand_vec(rng, f3, s.dim());
    Vec v(4, 0);
    for (std::size_t i = 0; i < s.dim(); ++i) v = vec_add(f3, v, vec_scale(f3, c[i], s.basis_row(i)));
    auto back = s.coords_of(v);
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK(!s.coords_of({1, 0, 0, 0}).has_value());
}
