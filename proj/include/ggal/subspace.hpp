#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggal/mat.hpp"

namespace ggal {

// Linear subspace of F_p^n with a canonical basis: reduced row echelon form,
// one basis vector per row, no zero rows. Equal subspaces compare equal.
struct Subspace {
  Fp f;
  std::size_t ambient = 0;
  Mat basis;                    // dim x ambient, RREF
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.rows; }

  static Subspace zero(Fp f, std::size_t n);
  static Subspace full(Fp f, std::size_t n);
  static Subspace from_spanning(Fp f, std::size_t ambient, const std::vector<Vec>& spanning);
  static Subspace from_spanning(const Mat& rows);

  // v reduced modulo the space; zero iff v is a member
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  bool contains(const Subspace& other) const;

  // Coefficients of v in the canonical basis (read off the pivot columns);
  // empty optional if v is not in the space.
  std::optional<Vec> coords_of(const Vec& v) const;

  Vec basis_row(std::size_t i) const { return basis.row(i); }

  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }

  // order/dedup key; two subspaces are equal iff their keys are equal
  std::string key() const;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

}  // namespace ggal
