#pragma once

#include "ggal/families.hpp"
#include "helpers.hpp"

namespace ggal::testhelp {

// Random valid actions with dim(R) <= 4: direct sums drawn from a menu of
// known-valid components, optionally pushed through a random change of basis
// so the solvers never see the construction's preferred coordinates.
inline Action random_small_action(Rng& rng, u32 p) {
  auto pick = [&](int budget) -> Action {
    std::vector<int> menu;
    menu.push_back(0);                              // one-point trivial groupoid on F_p
    menu.push_back(1);                              // Z_2 acting trivially on F_p (not Galois)
    if (budget >= 2) menu.push_back(2);             // pair groupoid transporting F_p^2
    if (budget >= 2) menu.push_back(3);             // Z_2 swapping F_p x F_p
    if (budget >= 3) menu.push_back(4);             // pair groupoid on 3 objects
    if (budget >= 4 && p % 2 == 1) menu.push_back(5);  // Z_2 on M_2 by conjugation
    switch (menu[rng() % menu.size()]) {
      case 0: return pair_transport_action(1, p);
      case 1: return z2_trivial_field_action(p);
      case 2: return pair_transport_action(2, p);
      case 3: return z2_swap_action(p);
      case 4: return pair_transport_action(3, p);
      default: return ex2_action(p);
    }
  };

  int budget = 4;
  int components = 1 + (int)(rng() % 3);
  std::optional<Action> acc;
  for (int i = 0; i < components && budget > 0; ++i) {
    Action part = pick(budget);
    budget -= (int)part.alg.dim;
    acc = acc ? direct_sum(*acc, part) : std::move(part);
  }
  Action act = std::move(*acc);
  if (rng() % 2) act = transform_basis(act, rand_invertible(rng, act.alg.f, act.alg.dim));
  return act;
}

}  // namespace ggal::testhelp
