#pragma once

#include <random>
#include <vector>

#include "ggal/mat.hpp"

namespace ggal::testhelp {

using Rng = std::mt19937;

inline u32 rand_scalar(Rng& rng, Fp f) { return (u32)(rng() % f.p); }

inline Vec rand_vec(Rng& rng, Fp f, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = rand_scalar(rng, f);
  return v;
}

inline Mat rand_mat(Rng& rng, Fp f, std::size_t r, std::size_t c) {
  Mat m(f, r, c);
  for (auto& x : m.a) x = rand_scalar(rng, f);
  return m;
}

inline Mat rand_invertible(Rng& rng, Fp f, std::size_t n) {
  for (;;) {
    Mat m = rand_mat(rng, f, n, n);
    if (mat_inverse(m)) return m;
  }
}

// all p^n vectors of F_p^n, in lexicographic order
inline std::vector<Vec> all_vectors(Fp f, std::size_t n) {
  std::vector<Vec> out;
  Vec cur(n, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == f.p) cur[i++] = 0;
    if (i == n) return out;
  }
}

}  // namespace ggal::testhelp
