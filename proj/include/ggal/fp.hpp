#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ggal {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic in the prime field F_p, p < 2^31.
struct Fp {
  u32 p = 2;

  Fp() = default;
  explicit Fp(u32 prime) : p(prime) {
    if (!is_prime(prime)) throw error("modulus not prime: " + std::to_string(prime));
  }

  u32 reduce(long long v) const {
    long long r = v % (long long)p;
    return (u32)(r < 0 ? r + p : r);
  }
  u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p ? s - p : s; }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }
  u32 mul(u32 a, u32 b) const { return (u32)((u64)a * b % p); }

  u32 inv(u32 a) const {
    if (a == 0) throw error("division by zero in F_p");
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt; std::swap(t, nt);
      r -= q * nr; std::swap(r, nr);
    }
    return (u32)(t < 0 ? t + p : t);
  }

  bool operator==(const Fp& o) const { return p == o.p; }

  static bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

}  // namespace ggal
