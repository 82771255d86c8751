#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggal/subspace.hpp"
#include "ggal/validation.hpp"

namespace ggal {

/// Finite-dimensional associative unital algebra over F_p, given by structure
/// constants: basis_i * basis_j = sum_k c(i,j,k) basis_k.
struct Algebra {
  Fp f;
  std::size_t dim = 0;
  std::vector<u32> sc;  // dim^3, flattened (i*dim+j)*dim+k
  Vec unit;
  std::vector<std::string> basis_names;

  Algebra() = default;
  Algebra(Fp field, std::size_t d) : f(field), dim(d), sc(d * d * d, 0), unit(d, 0) {}

  u32 c(std::size_t i, std::size_t j, std::size_t k) const { return sc[(i * dim + j) * dim + k]; }
  void set_c(std::size_t i, std::size_t j, std::size_t k, u32 v) { sc[(i * dim + j) * dim + k] = v; }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis_mul(std::size_t i, std::size_t j) const;

  Mat left_mult(const Vec& x) const;   // y -> x*y
  Mat right_mult(const Vec& y) const;  // x -> x*y

  std::string basis_name(std::size_t i) const;

  /// Associativity on all basis triples plus the two unit laws.
  ValidationReport validate() const;
};

/// Subspace of an algebra that the caller asserts (or has verified) to be
/// closed under multiplication; `unital` records whether it carries 1_R.
/// Non-unital views are allowed (J_g is only a C(R)-submodule).
struct Subalg {
  Subspace space;
  bool unital = false;

  std::size_t dim() const { return space.dim(); }
  bool operator==(const Subalg& o) const { return space == o.space; }
};

Subalg make_subalg(const Algebra& a, Subspace s);
bool is_mult_closed(const Algebra& a, const Subspace& s);

Subalg center(const Algebra& a);

/// { r in outer | rs = sr for all s in inner }.
Subalg centralizer(const Algebra& a, const Subalg& inner, const Subalg& outer);
Subalg centralizer_in_full(const Algebra& a, const Subalg& inner);

Subalg subalgebra_closure(const Algebra& a, const std::vector<Vec>& seed, bool include_unit);

/// Span of pairwise products s_i * c_j for central c; throws if c is not
/// contained in the center.
Subalg product_subalgebra(const Algebra& a, const Subalg& s, const Subalg& c);

bool double_centralizer_check(const Algebra& a, const Subalg& sub);

/// left (x)_base right: the dim(left)*dim(right) coordinate space modulo the
/// balancing relations (x*c)(x)y - x(x)(c*y). Raw index (a,b) <-> a*dim(right)+b.
struct TensorQuotient {
  const Algebra* alg = nullptr;
  Subalg left, right, base;
  Subspace relations;            // subspace of the raw coordinate space
  std::vector<std::size_t> free_cols;  // raw coords surviving as quotient coords

  std::size_t raw_dim() const { return left.dim() * right.dim(); }
  std::size_t dim() const { return free_cols.size(); }

  Vec project(const Vec& raw) const;  // raw -> quotient coordinates
  Vec lift(const Vec& q) const;       // section of project
  Vec raw_of_pair(const Vec& x, const Vec& y) const;  // ambient x,y -> raw coords of x(x)y
};

TensorQuotient tensor_over_subring(const Algebra& a, const Subalg& left, const Subalg& right,
                                   const Subalg& base);

/// Element of sub (x)_base sub presented as a pair list (ambient vectors).
struct TensorElement {
  std::vector<std::pair<Vec, Vec>> pairs;
};

/// Separability witness z for sub over base: mult(z) = 1_R and rz = zr in the
/// quotient for every r in sub. Exact linear decision; the returned witness
/// has been re-verified by substitution.
std::optional<TensorElement> separability_element(const Algebra& a, const Subalg& sub,
                                                  const Subalg& base);
bool verify_separability_element(const Algebra& a, const Subalg& sub, const Subalg& base,
                                 const TensorElement& z);

}  // namespace ggal
