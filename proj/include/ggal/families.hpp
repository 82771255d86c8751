#pragma once

#include "ggal/action.hpp"

namespace ggal {

// Building blocks for bundled fixtures, randomized test instances and the
// benchmark families.

Groupoid trivial_groupoid(int n_objects);
Groupoid cyclic_group(int m);
Groupoid pair_groupoid(int n);
Groupoid disjoint_union_groupoid(const Groupoid& a, const Groupoid& b);

Algebra product_field_algebra(Fp f, std::size_t k);  // F_p^k componentwise
Algebra matrix_algebra(Fp f, std::size_t n);         // M_n(F_p)
Algebra direct_sum(const Algebra& a, const Algebra& b);

Action direct_sum(const Action& a, const Action& b);

/// Same action in a different basis: new coordinates x' represent T x'.
Action transform_basis(const Action& act, const Mat& t);

// bundled fixtures
Action ex1_action(u32 p);  // pair groupoid transporting F_p x F_p
Action ex2_action(u32 p);  // Z_2 on M_2 by conjugation with diag(1,-1)
Action ex3_action(u32 p);  // disjoint union of the two

// further families
Action pair_transport_action(int n, u32 p);          // pair groupoid, fiber F_p
Action z2_swap_action(u32 p);                        // Z_2 swapping F_p x F_p
Action z2_trivial_field_action(u32 p);               // Z_2 acting trivially on F_p (valid, not Galois)
Action elementary_abelian_perm_action(int k, u32 p); // (Z_2)^k translating F_p^{2^k}

}  // namespace ggal
