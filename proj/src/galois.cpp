#include "ggal/galois.hpp"

#include <algorithm>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ggal {

CoordinateCheck verify_coordinates(const Action& act, const Coordinates& cand) {
  const Algebra& a = act.alg;
  for (const auto& [x, y] : cand.pairs)
    if (x.size() != a.dim || y.size() != a.dim) throw error("verify_coordinates: vector length mismatch");

  CoordinateCheck out;
  out.ok = true;
  for (int g = 0; g < act.gpd.size(); ++g) {
    Vec acc(a.dim, 0);
    for (const auto& [x, y] : cand.pairs) acc = vec_add(a.f, acc, a.mul(x, act.apply(g, y)));
    Vec target = act.gpd.is_identity(g) ? act.one_of(g) : Vec(a.dim, 0);
    Vec residual = vec_sub(a.f, acc, target);
    if (!vec_is_zero(residual)) out.ok = false;
    out.residuals.push_back(std::move(residual));
  }
  return out;
}

std::optional<Coordinates> find_coordinates(const Action& act) {
  const Algebra& a = act.alg;
  const std::size_t d = a.dim;
  const std::size_t n = (std::size_t)act.gpd.size();

  // unknown tensor w_{ab}; per morphism g and output coordinate k:
  // sum_{ab} w_{ab} (b_a * beta_g(b_b 1_{g^-1}))_k = (target_g)_k
  Mat system(a.f, n * d, d * d);
  Vec rhs(n * d, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t b = 0; b < d; ++b) {
      Vec eb(d, 0);
      eb[b] = 1;
      Vec moved = act.apply((int)g, eb);
      for (std::size_t aa = 0; aa < d; ++aa) {
        Vec ea(d, 0);
        ea[aa] = 1;
        Vec prod = a.mul(ea, moved);
        for (std::size_t k = 0; k < d; ++k) system.at(g * d + k, aa * d + b) = prod[k];
      }
    }
    if (act.gpd.is_identity((int)g)) {
      const Vec& one = act.one_of((int)g);
      for (std::size_t k = 0; k < d; ++k) rhs[g * d + k] = one[k];
    }
  }

  auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;

  Coordinates coords;
  for (std::size_t aa = 0; aa < d; ++aa) {
    Vec y(d, 0);
    bool nonzero = false;
    for (std::size_t b = 0; b < d; ++b) {
      y[b] = sol->particular[aa * d + b];
      nonzero = nonzero || y[b] != 0;
    }
    if (!nonzero) continue;
    Vec x(d, 0);
    x[aa] = 1;
    coords.pairs.emplace_back(std::move(x), std::move(y));
  }
  if (!verify_coordinates(act, coords).ok)
    throw error("find_coordinates: solver output failed verification");
  return coords;
}

GaloisInstance GaloisInstance::build(Action act, std::optional<Coordinates> supplied, GaloisOptions opts) {
  GaloisInstance inst;
  inst.act = std::move(act);
  inst.opts = opts;
  const Action& A = inst.act;

  inst.center_r = center(A.alg);
  inst.jmod = j_table(A);
  const u64 all = (u64(1) << A.gpd.size()) - 1;
  inst.s_g = s_set(inst.jmod, all);
  inst.r_beta = invariants_over(A, all);

  if (supplied) {
    if (!verify_coordinates(A, *supplied).ok)
      throw error("GaloisInstance: supplied coordinate system fails verification");
    inst.coords = std::move(supplied);
  } else if (opts.search_coordinates) {
    inst.coords = find_coordinates(A);
  }

  inst.wide = opts.parallel ? wide_subgroupoids(A.gpd, opts.max_morphisms)
                            : wide_subgroupoids_serial(A.gpd, opts.max_morphisms);

  const std::size_t nw = inst.wide.size();
  inst.theta_tab.resize(nw);
  inst.sigma_tab.resize(nw);
  inst.gamma_tab.resize(nw);
  inst.s_mask.resize(nw);

  Subalg full;
  full.space = Subspace::full(A.alg.f, A.alg.dim);
  full.unital = true;

  auto fill = [&](std::size_t i) {
    inst.theta_tab[i] = invariants_over(A, inst.wide[i].mask);
    inst.sigma_tab[i] = product_subalgebra(A.alg, inst.theta_tab[i], inst.center_r);
    inst.gamma_tab[i] = centralizer(A.alg, inst.theta_tab[i], full);
    inst.s_mask[i] = s_set(inst.jmod, inst.wide[i].mask);
  };
  if (opts.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < (long long)nw; ++i) fill((std::size_t)i);
  } else {
    for (std::size_t i = 0; i < nw; ++i) fill(i);
  }

  std::map<u64, std::vector<std::size_t>> by_s;
  for (std::size_t i = 0; i < nw; ++i) by_s[inst.s_mask[i]].push_back(i);
  inst.class_of.resize(nw);
  for (auto& [s, members] : by_s) {
    for (std::size_t i : members) inst.class_of[i] = inst.classes.size();
    inst.classes.push_back(members);
  }
  return inst;
}

std::size_t GaloisInstance::wide_index(u64 mask) const {
  auto it = std::lower_bound(wide.begin(), wide.end(), mask,
                             [](const Subgroupoid& s, u64 m) { return s.mask < m; });
  if (it == wide.end() || it->mask != mask) throw error("unknown wide subgroupoid handle");
  return (std::size_t)(it - wide.begin());
}

namespace {

Subalg common_class_value(const GaloisInstance& inst, const std::vector<Subalg>& tab,
                          std::size_t class_idx, const char* map_name, std::string* disagreement) {
  const auto& members = inst.classes[class_idx];
  const Subalg& first = tab[members[0]];
  for (std::size_t i : members)
    if (!(tab[i] == first) && disagreement) {
      *disagreement = std::string(map_name) + " differs on " +
                      morphism_set_to_string(inst.act.gpd, inst.wide[members[0]].mask) + " vs " +
                      morphism_set_to_string(inst.act.gpd, inst.wide[i].mask);
      break;
    }
  return first;
}

}  // namespace

Subalg GaloisInstance::sigma_bar(std::size_t class_idx, std::string* disagreement) const {
  return common_class_value(*this, sigma_tab, class_idx, "sigma", disagreement);
}

Subalg GaloisInstance::gamma_bar(std::size_t class_idx, std::string* disagreement) const {
  return common_class_value(*this, gamma_tab, class_idx, "gamma", disagreement);
}

Subspace GaloisInstance::phi(u64 subset) const {
  if (subset & ~s_g)
    throw error("phi: subset contains a morphism with J_g = {0} (or outside the groupoid)");
  Subspace acc = Subspace::zero(act.alg.f, act.alg.dim);
  for (const JModule& j : jmod) {
    if (!(subset >> j.morphism & 1)) continue;
    if (intersect(acc, j.space).dim() != 0)
      throw error("phi: sum is not direct at " + act.gpd.name(j.morphism));
    acc = sum(acc, j.space);
  }
  return acc;
}

bool standing_hypothesis(const GaloisInstance& inst) {
  if (!inst.is_galois()) return false;
  Subalg crb = make_subalg(inst.act.alg, intersect(inst.center_r.space, inst.r_beta.space));
  return separability_element(inst.act.alg, inst.r_beta, crb).has_value();
}

namespace {

// first colliding pair of equal table entries on distinct handles
std::optional<std::pair<std::size_t, std::size_t>> first_collision(const std::vector<Subalg>& tab) {
  for (std::size_t i = 0; i < tab.size(); ++i)
    for (std::size_t j = i + 1; j < tab.size(); ++j)
      if (tab[i] == tab[j]) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace

CheckResult decomposition_check(const GaloisInstance& inst) {
  CheckResult res;
  res.name = "lemma-3-1";
  if (!inst.is_galois()) {
    res.status = Status::NotApplicable;
    res.details["reason"] = "no Galois coordinate system";
    return res;
  }

  bool ok = true;
  nlohmann::json per_h = nlohmann::json::array();
  for (std::size_t i = 0; i < inst.wide.size(); ++i) {
    // V_R(R^{beta_H}) vs (+)_{h in H} J_h, equality and directness
    Subspace rhs = Subspace::zero(inst.act.alg.f, inst.act.alg.dim);
    bool direct = true;
    std::size_t dim_total = 0;
    for (const JModule& j : inst.jmod) {
      if (!(inst.wide[i].mask >> j.morphism & 1)) continue;
      dim_total += j.space.dim();
      rhs = sum(rhs, j.space);
    }
    direct = rhs.dim() == dim_total;
    bool equal = inst.gamma_tab[i].space == rhs;
    ok = ok && direct && equal;
    per_h.push_back({{"subgroupoid", morphism_set_to_string(inst.act.gpd, inst.wide[i].mask)},
                     {"commutant_dim", inst.gamma_tab[i].dim()},
                     {"j_sum_dim", rhs.dim()},
                     {"direct", direct},
                     {"equal", equal}});
  }
  res.status = ok ? Status::Pass : Status::Fail;
  res.details["per_subgroupoid"] = per_h;
  return res;
}

CheckResult phi_injectivity_check(const GaloisInstance& inst) {
  CheckResult res;
  res.name = "phi";
  if (!inst.is_galois()) {
    res.status = Status::NotApplicable;
    res.details["reason"] = "no Galois coordinate system";
    return res;
  }

  std::vector<int> bits;
  for (int g = 0; g < inst.act.gpd.size(); ++g)
    if (inst.s_g >> g & 1) bits.push_back(g);
  const u64 count = u64(1) << bits.size();
  if (count > inst.opts.max_subsets)
    throw error("phi: 2^|S_G| = " + std::to_string(count) + " exceeds the subset cap; raise --max-sg-subsets");

  std::vector<std::string> keys((std::size_t)count);
  std::vector<char> direct((std::size_t)count, 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (inst.opts.parallel)
#endif
  for (long long x = 0; x < (long long)count; ++x) {
    u64 subset = 0;
    for (std::size_t b = 0; b < bits.size(); ++b)
      if ((u64)x >> b & 1) subset |= u64(1) << bits[b];
    Subspace img = Subspace::zero(inst.act.alg.f, inst.act.alg.dim);
    std::size_t dims = 0;
    for (const JModule& j : inst.jmod) {
      if (!(subset >> j.morphism & 1)) continue;
      dims += j.space.dim();
      img = sum(img, j.space);
    }
    direct[(std::size_t)x] = img.dim() == dims;
    keys[(std::size_t)x] = img.key();
  }

  bool all_direct = std::all_of(direct.begin(), direct.end(), [](char c) { return c != 0; });
  bool distinct = true;
  nlohmann::json witness;
  std::vector<std::size_t> order((std::size_t)count);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (keys[order[i]] == keys[order[i + 1]]) {
      distinct = false;
      witness = {{"subset_a", order[i]}, {"subset_b", order[i + 1]}};
      break;
    }

  res.status = (all_direct && distinct) ? Status::Pass : Status::Fail;
  res.details["subsets"] = count;
  res.details["all_direct"] = all_direct;
  res.details["pairwise_distinct"] = distinct;
  if (!witness.is_null()) res.details["collision"] = witness;
  return res;
}

CheckResult induced_injectivity_check(const GaloisInstance& inst) {
  CheckResult res;
  res.name = "sigma-gamma-bar";
  if (!inst.is_galois() || !standing_hypothesis(inst)) {
    res.status = Status::NotApplicable;
    res.details["reason"] = inst.is_galois() ? "R^beta is not separable over C(R)^beta"
                                             : "no Galois coordinate system";
    return res;
  }

  bool ok = true;
  nlohmann::json classes = nlohmann::json::array();
  std::vector<Subalg> sbar, gbar;
  for (std::size_t c = 0; c < inst.classes.size(); ++c) {
    std::string dis_s, dis_g;
    Subalg sv = inst.sigma_bar(c, &dis_s);
    Subalg gv = inst.gamma_bar(c, &dis_g);
    bool well_defined = dis_s.empty() && dis_g.empty();

    // membership in B: both images separable over C(R)
    bool s_in_b = separability_element(inst.act.alg, sv, inst.center_r).has_value();
    bool g_in_b = separability_element(inst.act.alg, gv, inst.center_r).has_value();

    ok = ok && well_defined && s_in_b && g_in_b;
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t i : inst.classes[c])
      members.push_back(morphism_set_to_string(inst.act.gpd, inst.wide[i].mask));
    classes.push_back({{"s_set", morphism_set_to_string(inst.act.gpd, inst.s_mask[inst.classes[c][0]])},
                       {"members", members},
                       {"well_defined", well_defined},
                       {"sigma_bar_dim", sv.dim()},
                       {"gamma_bar_dim", gv.dim()},
                       {"sigma_bar_separable_over_center", s_in_b},
                       {"gamma_bar_separable_over_center", g_in_b}});
    sbar.push_back(std::move(sv));
    gbar.push_back(std::move(gv));
  }

  auto s_coll = first_collision(sbar);
  auto g_coll = first_collision(gbar);
  ok = ok && !s_coll && !g_coll;

  res.status = ok ? Status::Pass : Status::Fail;
  res.details["classes"] = classes;
  res.details["sigma_bar_injective"] = !s_coll.has_value();
  res.details["gamma_bar_injective"] = !g_coll.has_value();
  return res;
}

CheckResult sigma_gamma_equivalence_check(const GaloisInstance& inst) {
  CheckResult res;
  res.name = "equiv";
  if (!inst.is_galois() || !standing_hypothesis(inst)) {
    res.status = Status::NotApplicable;
    res.details["reason"] = inst.is_galois() ? "R^beta is not separable over C(R)^beta"
                                             : "no Galois coordinate system";
    return res;
  }
  auto s_coll = first_collision(inst.sigma_tab);
  auto g_coll = first_collision(inst.gamma_tab);
  bool sigma_injective = !s_coll.has_value();
  bool gamma_injective = !g_coll.has_value();
  res.status = sigma_injective == gamma_injective ? Status::Pass : Status::Fail;
  res.details["sigma_injective"] = sigma_injective;
  res.details["gamma_injective"] = gamma_injective;
  auto witness = [&](const std::optional<std::pair<std::size_t, std::size_t>>& coll) {
    if (!coll) return nlohmann::json();
    return nlohmann::json{{"a", morphism_set_to_string(inst.act.gpd, inst.wide[coll->first].mask)},
                          {"b", morphism_set_to_string(inst.act.gpd, inst.wide[coll->second].mask)}};
  };
  if (s_coll) res.details["sigma_collision"] = witness(s_coll);
  if (g_coll) res.details["gamma_collision"] = witness(g_coll);
  return res;
}

CheckResult theta_injectivity_check(const GaloisInstance& inst) {
  CheckResult res;
  res.name = "theta";

  auto t_coll = first_collision(inst.theta_tab);
  bool theta_injective = !t_coll.has_value();
  res.details["theta_injective"] = theta_injective;
  if (t_coll)
    res.details["theta_collision"] = {
        {"a", morphism_set_to_string(inst.act.gpd, inst.wide[t_coll->first].mask)},
        {"b", morphism_set_to_string(inst.act.gpd, inst.wide[t_coll->second].mask)}};

  bool sigma_injective = !first_collision(inst.sigma_tab).has_value();
  bool gamma_injective = !first_collision(inst.gamma_tab).has_value();
  bool hyp = inst.is_galois() && standing_hypothesis(inst);

  bool all_singleton = std::all_of(inst.classes.begin(), inst.classes.end(),
                                   [](const auto& c) { return c.size() == 1; });
  bool generated_back = true;
  u64 ids = inst.act.gpd.identity_mask();
  for (std::size_t i = 0; i < inst.wide.size(); ++i)
    generated_back = generated_back &&
                     generated_subgroupoid(inst.act.gpd, ids | inst.s_mask[i]).mask == inst.wide[i].mask;
  const u64 all = (u64(1) << inst.act.gpd.size()) - 1;
  bool all_j_nonzero = inst.s_g == all;

  struct Cond {
    const char* key;
    bool antecedent;
  } conds[] = {
      {"lem8", sigma_injective || gamma_injective},
      {"teo3", hyp && all_singleton},
      {"teo4", inst.is_galois() && generated_back},
      {"cor1", inst.is_galois() && all_j_nonzero},
  };

  bool ok = true;
  for (const Cond& c : conds) {
    bool violated = c.antecedent && !theta_injective;
    ok = ok && !violated;
    res.details[std::string(c.key) + "_applies"] = c.antecedent;
    res.details[std::string(c.key) + "_status"] =
        violated ? "fail" : (c.antecedent ? "pass" : "not-applicable");
  }
  res.details["lem8_consistent"] = !(conds[0].antecedent && !theta_injective);
  // teo4/cor1 need only the Galois coordinates, not the separability hypothesis
  res.details["separability_hypothesis"] = hyp;
  res.status = ok ? Status::Pass : Status::Fail;
  return res;
}

CheckResult separability_chain_check(const GaloisInstance& inst) {
  CheckResult res;
  res.name = "separability";
  if (!inst.is_galois() || !standing_hypothesis(inst)) {
    res.status = Status::NotApplicable;
    res.details["reason"] = inst.is_galois() ? "R^beta is not separable over C(R)^beta"
                                             : "no Galois coordinate system";
    return res;
  }

  const Algebra& a = inst.act.alg;
  Subalg crb = make_subalg(a, intersect(inst.center_r.space, inst.r_beta.space));
  bool ok = true;

  // skew ring separable over the embedded C(R)^beta
  SkewRing skew = build_skew(inst.act);
  Subalg skew_full;
  skew_full.space = Subspace::full(skew.ring.f, skew.ring.dim);
  skew_full.unital = true;
  Subalg emb = skew.embedded_subalgebra(inst.act, crb);
  bool skew_sep = separability_element(skew.ring, skew_full, emb).has_value();
  ok = ok && skew_sep;
  res.details["skew_ring_separable_over_invariant_center"] = skew_sep;

  nlohmann::json per_h = nlohmann::json::array();
  for (std::size_t i = 0; i < inst.wide.size(); ++i) {
    bool theta_sep = separability_element(a, inst.theta_tab[i], crb).has_value();
    bool dc = double_centralizer_check(a, inst.sigma_tab[i]);
    ok = ok && theta_sep && dc;
    per_h.push_back({{"subgroupoid", morphism_set_to_string(inst.act.gpd, inst.wide[i].mask)},
                     {"theta_separable_over_invariant_center", theta_sep},
                     {"sigma_double_centralizer", dc}});
  }
  res.details["per_subgroupoid"] = per_h;

  Subalg full;
  full.space = Subspace::full(a.f, a.dim);
  full.unital = true;
  bool azumaya = separability_element(a, full, inst.center_r).has_value();
  ok = ok && azumaya;
  res.details["azumaya"] = azumaya;

  res.status = ok ? Status::Pass : Status::Fail;
  return res;
}

std::vector<CheckResult> check_all(const GaloisInstance& inst) {
  return {decomposition_check(inst),     phi_injectivity_check(inst),
          induced_injectivity_check(inst), sigma_gamma_equivalence_check(inst),
          theta_injectivity_check(inst), separability_chain_check(inst)};
}

}  // namespace ggal
