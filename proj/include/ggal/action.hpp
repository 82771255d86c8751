#pragma once

#include <vector>

#include "ggal/algebra.hpp"
#include "ggal/groupoid.hpp"

namespace ggal {

/// Unital groupoid action on an algebra R with R = (+)_e E_e. Each object
/// carries a central idempotent 1_e with E_e = R*1_e; beta_g is stored as a
/// full dim x dim matrix that annihilates the complement of E_{dom(g)} and
/// restricts to an algebra isomorphism E_{dom(g)} -> E_{ran(g)}.
struct Action {
  Groupoid gpd;
  Algebra alg;
  std::vector<Vec> unit_idem;  // per object, 1_e
  std::vector<Mat> beta;       // per morphism

  const Vec& one_of_object(int e) const { return unit_idem[(std::size_t)e]; }
  const Vec& one_of(int g) const { return unit_idem[(std::size_t)gpd.ran[(std::size_t)g]]; }
  Subspace ideal_of_object(int e) const;  // E_e
  Subspace ideal_of(int g) const { return ideal_of_object(gpd.ran[(std::size_t)g]); }
  // beta_g applied to x*1_{dom g}
  Vec apply(int g, const Vec& x) const;
};

ValidationReport validate_action(const Action& act);

/// R^beta: solutions of beta_g(r 1_{g^-1}) = r 1_g for every morphism.
Subalg invariants_subalgebra(const Action& act);

/// Same constraint set restricted to the morphisms of `mask` (R^{beta_H}).
Subalg invariants_over(const Action& act, u64 mask);

/// Action of a wide subgroupoid on the same algebra.
Action restrict_action(const Action& act, Subgroupoid h);

/// J_g = { r in E_g | r beta_g(x 1_{g^-1}) = x r for all x }.
struct JModule {
  int morphism = -1;
  Subspace space;
};

JModule j_module(const Action& act, int g);
std::vector<JModule> j_table(const Action& act);

u64 s_set(const std::vector<JModule>& jtab, u64 h_mask);  // { g in H | J_g != 0 }
u64 t_set(const std::vector<JModule>& jtab, u64 h_mask);  // complement within H

/// All wide subgroupoids L with S_L = S_H.
std::vector<Subgroupoid> h_bar_class(const std::vector<JModule>& jtab,
                                     const std::vector<Subgroupoid>& wide_list, Subgroupoid h);

}  // namespace ggal
