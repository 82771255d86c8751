#pragma once

#include "ggal/action.hpp"

namespace ggal {

/// Skew groupoid ring R*G = (+)_g E_g u_g as a structure-constant algebra.
/// Basis cells are pairs (morphism g, local basis vector of E_g), ordered by
/// morphism id then by the canonical local basis of E_g.
struct SkewRing {
  Algebra ring;
  std::vector<std::pair<int, std::size_t>> cells;  // flat index -> (g, local row)
  std::vector<Subspace> local;                     // per morphism, E_g basis
  std::vector<std::size_t> cell_start;             // per morphism, first flat index

  // x u_g as a skew-ring vector; x must lie in E_g
  Vec embed_cell(int g, const Vec& x) const;
  // r |-> sum_e (r 1_e) u_e
  Vec embed_algebra(const Action& act, const Vec& r) const;
  Subalg embedded_subalgebra(const Action& act, const Subalg& sub) const;
};

/// Builds the skew ring and verifies associativity on all basis triples and
/// the two-sided unit; throws on failure (an invalid action slipped through).
SkewRing build_skew(const Action& act);

struct CosetSummand {
  int rep = -1;
  std::size_t dim = 0;
};

struct CosetCheckReport {
  bool pass = false;
  bool right_direct = false, right_spans = false;
  bool left_direct = false, left_spans = false;
  std::vector<CosetSummand> right, left;
};

/// Lemma-style decomposition of R*G into (R*H)u_{g'} over right coset reps
/// and u_{g}(R*H) over left coset reps, checked as subspaces.
CosetCheckReport coset_decomposition_check(const SkewRing& skew, const Action& act, Subgroupoid h);

}  // namespace ggal
