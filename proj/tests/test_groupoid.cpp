#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <numeric>

#include "ggal/families.hpp"
#include "helpers.hpp"

using namespace ggal;

namespace {

u64 mask_of(std::initializer_list<int> ids) {
  u64 m = 0;
  for (int i : ids) m |= u64(1) << i;
  return m;
}

// independent oracle: enumerate every subset and test closure/wideness from
// the definitions directly
std::vector<u64> brute_force_wide(const Groupoid& g) {
  std::vector<u64> out;
  for (u64 mask = 0; mask < (u64(1) << g.size()); ++mask) {
    if ((mask & g.identity_mask()) != g.identity_mask()) continue;
    bool closed = true;
    for (int a = 0; a < g.size() && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      if (!(mask >> g.inv[(std::size_t)a] & 1)) closed = false;
      for (int b = 0; b < g.size() && closed; ++b)
        if ((mask >> b & 1) && g.composable(a, b) && !(mask >> g.compose(a, b) & 1)) closed = false;
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

}  // namespace

TEST_CASE("validate accepts the bundled groupoids") {
  CHECK(validate_groupoid(trivial_groupoid(1)).ok());
  CHECK(validate_groupoid(ex1_action(5).gpd).ok());
  CHECK(validate_groupoid(ex2_action(5).gpd).ok());
  CHECK(validate_groupoid(ex3_action(5).gpd).ok());
  CHECK(validate_groupoid(pair_groupoid(3)).ok());
  CHECK(validate_groupoid(cyclic_group(4)).ok());
  CHECK(validate_groupoid(elementary_abelian_perm_action(2, 3).gpd).ok());
}

TEST_CASE("validate reports a redirected inverse composition") {
  Groupoid g = ex1_action(5).gpd;
  g.set_compose(2, 3, 0);  // g * gi = e instead of f
  ValidationReport rep = validate_groupoid(g);
  CHECK(!rep.ok());
  CHECK(rep.has("inverse-law"));
}

TEST_CASE("validate reports associativity damage") {
  Groupoid g = cyclic_group(3);
  g.set_compose(1, 1, 1);  // a*a = a instead of a^2
  ValidationReport rep = validate_groupoid(g);
  CHECK(!rep.ok());
  CHECK(rep.has("associativity"));
}

TEST_CASE("isotropy groups") {
  Groupoid ex1 = ex1_action(5).gpd;
  CHECK(isotropy_group(ex1, 0).mask == mask_of({0}));
  Groupoid ex2 = ex2_action(5).gpd;
  CHECK(isotropy_group(ex2, 0).mask == mask_of({0, 1}));
  Groupoid ex3 = ex3_action(5).gpd;
  CHECK(isotropy_group(ex3, 2).mask == mask_of({4, 5}));
  CHECK_THROWS_AS(isotropy_group(ex1, 7), error);
}

TEST_CASE("generated subgroupoid") {
  Groupoid ex1 = ex1_action(5).gpd;
  CHECK(generated_subgroupoid(ex1, 0).mask == 0);
  CHECK(generated_subgroupoid(ex1, mask_of({2})).mask == mask_of({0, 1, 2, 3}));
  Groupoid ex2 = ex2_action(5).gpd;
  CHECK(generated_subgroupoid(ex2, mask_of({0})).mask == mask_of({0}));

  // idempotent and monotone
  Groupoid ex3 = ex3_action(5).gpd;
  for (u64 seed = 0; seed < (u64(1) << ex3.size()); seed += 7) {
    u64 closed = generated_subgroupoid(ex3, seed).mask;
    CHECK(generated_subgroupoid(ex3, closed).mask == closed);
    CHECK((closed & seed) == seed);
    CHECK(is_closed_subset(ex3, closed));
    u64 bigger = generated_subgroupoid(ex3, seed | 1).mask;
    CHECK((bigger & closed) == closed);
  }
}

TEST_CASE("wide subgroupoid enumeration matches the brute-force oracle") {
  for (const Groupoid& g : {ex1_action(5).gpd, ex2_action(5).gpd, ex3_action(5).gpd,
                            pair_groupoid(2), cyclic_group(4), cyclic_group(6),
                            elementary_abelian_perm_action(2, 3).gpd, trivial_groupoid(3)}) {
    auto fast = wide_subgroupoids(g);
    auto slow = wide_subgroupoids_serial(g);
    auto oracle = brute_force_wide(g);
    REQUIRE(fast.size() == slow.size());
    REQUIRE(fast.size() == oracle.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].mask == slow[i].mask);
      CHECK(fast[i].mask == oracle[i]);
      CHECK(is_closed_subset(g, fast[i].mask));
      CHECK(is_wide(g, fast[i].mask));
    }
  }
}

TEST_CASE("wide subgroupoid fixed counts") {
  CHECK(wide_subgroupoids(ex1_action(5).gpd).size() == 2);
  CHECK(wide_subgroupoids(ex2_action(5).gpd).size() == 2);
  CHECK(wide_subgroupoids(ex3_action(5).gpd).size() == 4);
  CHECK(wide_subgroupoids(trivial_groupoid(2)).size() == 1);
  // equivalence relations on 3 points
  CHECK(wide_subgroupoids(pair_groupoid(3)).size() == 5);
}

TEST_CASE("wide enumeration cap") {
  CHECK_THROWS_AS(wide_subgroupoids(pair_groupoid(5), 16), error);
}

TEST_CASE("coset decomposition examples") {
  Groupoid ex2 = ex2_action(5).gpd;
  {
    // h = G on a one-object groupoid: single coset
    auto d = coset_decomposition(ex2, Subgroupoid{mask_of({0, 1})});
    REQUIRE(d.right_reps.size() == 1);
    CHECK(ex2.is_identity(d.right_reps[0]));
    CHECK(d.right_cosets[0] == mask_of({0, 1}));
  }
  {
    // h = {e}: two right cosets with reps {e, g}
    auto d = coset_decomposition(ex2, Subgroupoid{mask_of({0})});
    REQUIRE(d.right_reps.size() == 2);
    CHECK(d.right_reps == std::vector<int>{0, 1});
  }
  {
    Groupoid ex1 = ex1_action(5).gpd;
    auto d = coset_decomposition(ex1, Subgroupoid{ex1.identity_mask()});
    CHECK(d.left_reps.size() == 4);
    CHECK(d.right_reps.size() == 4);
  }
  CHECK_THROWS_AS(coset_decomposition(ex2, Subgroupoid{mask_of({1})}), error);
}

TEST_CASE("cosets partition the groupoid") {
  for (const Groupoid& g :
       {ex1_action(5).gpd, ex2_action(5).gpd, ex3_action(5).gpd, pair_groupoid(3), cyclic_group(6)}) {
    const u64 all = (u64(1) << g.size()) - 1;
    for (const Subgroupoid& h : wide_subgroupoids(g)) {
      auto d = coset_decomposition(g, h);
      for (auto side : {std::make_pair(&d.left_reps, &d.left_cosets),
                        std::make_pair(&d.right_reps, &d.right_cosets)}) {
        u64 seen = 0;
        std::size_t total = 0;
        for (u64 c : *side.second) {
          CHECK((seen & c) == 0);
          seen |= c;
          total += (std::size_t)std::popcount(c);
        }
        CHECK(seen == all);
        CHECK(total == (std::size_t)g.size());
        CHECK(g.is_identity((*side.first)[0]));  // first representative is an identity
        for (std::size_t i = 0; i < side.first->size(); ++i)
          CHECK((side.second->at(i) >> side.first->at(i) & 1) == 1);
      }
    }
  }
}

TEST_CASE("sub groupoid extraction keeps structure") {
  Groupoid ex3 = ex3_action(5).gpd;
  for (const Subgroupoid& h : wide_subgroupoids(ex3)) {
    std::vector<int> olds;
    Groupoid s = ex3.sub(h.mask, &olds);
    CHECK(validate_groupoid(s).ok());
    CHECK(s.size() == std::popcount(h.mask));
    for (int m = 0; m < s.size(); ++m) {
      CHECK(s.dom[(std::size_t)m] == ex3.dom[(std::size_t)olds[(std::size_t)m]]);
      CHECK(s.ran[(std::size_t)m] == ex3.ran[(std::size_t)olds[(std::size_t)m]]);
    }
  }
}
