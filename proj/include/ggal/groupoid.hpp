#pragma once

#include <string>
#include <vector>

#include "ggal/fp.hpp"
#include "ggal/validation.hpp"

namespace ggal {

/// Finite groupoid given by explicit tables. Morphisms are dense integer ids
/// 0..size()-1; objects 0..n_objects-1. The composition table stores compose
/// entries for composable pairs only (dom(g) == ran(h)) and -1 elsewhere.
struct Groupoid {
  int n_objects = 0;
  std::vector<int> dom, ran, inv;
  std::vector<int> identity;          // object -> identity morphism
  std::vector<std::string> names;     // per morphism
  std::vector<short> comp;            // size^2 flattened, -1 = undefined

  int size() const { return (int)dom.size(); }
  bool composable(int g, int h) const { return dom[g] == ran[h]; }
  int compose(int g, int h) const { return comp[(std::size_t)g * dom.size() + (std::size_t)h]; }
  void set_compose(int g, int h, int gh) { comp[(std::size_t)g * dom.size() + (std::size_t)h] = (short)gh; }
  bool is_identity(int g) const { return identity[(std::size_t)ran[g]] == g && dom[g] == ran[g]; }
  u64 identity_mask() const;
  const std::string& name(int g) const { return names[(std::size_t)g]; }

  /// Groupoid on the morphisms of `mask`, re-indexed in increasing id order.
  /// Every object of the parent must own an identity in the mask (wide case).
  Groupoid sub(u64 mask, std::vector<int>* old_ids = nullptr) const;
};

/// Morphism subset of a fixed parent groupoid, as a bitmask. Handles returned
/// by the operations below are closed under composition and inverse.
struct Subgroupoid {
  u64 mask = 0;
  bool operator==(const Subgroupoid&) const = default;
};

ValidationReport validate_groupoid(const Groupoid& g);

bool is_closed_subset(const Groupoid& g, u64 mask);
bool is_wide(const Groupoid& g, u64 mask);

Subgroupoid isotropy_group(const Groupoid& g, int object);

/// Least subset containing `seed` closed under composition and inverse, with
/// id_{dom(m)}, id_{ran(m)} adjoined for every member. Empty seed -> empty.
Subgroupoid generated_subgroupoid(const Groupoid& g, u64 seed);

/// All wide subgroupoids, sorted by bitmask. Throws if size() exceeds the
/// cap (enumeration is exponential in the non-identity morphism count).
std::vector<Subgroupoid> wide_subgroupoids(const Groupoid& g, int max_morphisms = 16);
std::vector<Subgroupoid> wide_subgroupoids_serial(const Groupoid& g, int max_morphisms = 16);

/// Left cosets gH and right cosets Hg' of a wide subgroupoid. A coset
/// containing an identity is represented by that identity and listed first;
/// otherwise the smallest morphism id represents.
struct CosetDecomposition {
  std::vector<int> left_reps, right_reps;
  std::vector<u64> left_cosets, right_cosets;  // aligned with the reps
};

CosetDecomposition coset_decomposition(const Groupoid& g, Subgroupoid h);

std::string morphism_set_to_string(const Groupoid& g, u64 mask);

}  // namespace ggal
