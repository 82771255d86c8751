#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "ggal/instance.hpp"
#include "ggal/report.hpp"

using namespace ggal;

namespace {

struct Options {
  std::string path;
  std::string which = "all";
  std::optional<u32> p_override;
  int max_morphisms = 16;
  u64 max_subsets = 4096;
  std::string json_out;
  bool serial = false;
  bool search = false;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string vec_to_string(const Algebra& a, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += std::to_string(v[i]) + "*";
    s += a.basis_name(i);
  }
  return s.empty() ? "0" : s;
}

nlohmann::json violations_json(const ValidationReport& rep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : rep.violations) arr.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return arr;
}

void print_check(const CheckResult& c) {
  std::cout << "[" << to_string(c.status) << "] " << c.name;
  if (c.details.contains("reason")) std::cout << " (" << c.details["reason"].get<std::string>() << ")";
  std::cout << "\n";
}

void emit(const Report& rep, const Options& opt) {
  int pass = 0, fail = 0, na = 0;
  for (const auto& c : rep.checks) {
    if (c.status == Status::Pass) ++pass;
    else if (c.status == Status::Fail) ++fail;
    else ++na;
  }
  std::cout << rep.checks.size() << " checks: " << pass << " passed, " << fail << " failed, " << na
            << " not applicable\n";
  if (!opt.json_out.empty()) {
    std::ofstream out(opt.json_out);
    if (!out) throw error("cannot write " + opt.json_out);
    out << rep.to_json().dump(2) << "\n";
  }
}

GaloisOptions galois_options(const Options& opt, bool search_coords) {
  GaloisOptions g;
  g.max_morphisms = opt.max_morphisms;
  g.max_subsets = opt.max_subsets;
  g.parallel = !opt.serial;
  g.search_coordinates = search_coords;
  return g;
}

int cmd_validate(const Options& opt, Report& rep, const LoadResult& load) {
  CheckResult g{"validate-groupoid",
                load.groupoid_report.ok() ? Status::Pass : Status::Fail,
                {{"violations", violations_json(load.groupoid_report)}}};
  CheckResult a{"validate-action",
                load.action_report.ok() ? Status::Pass : Status::Fail,
                {{"violations", violations_json(load.action_report)}}};
  rep.checks = {g, a};
  for (const auto& v : load.groupoid_report.violations)
    std::cout << "groupoid axiom violated: " << v.axiom << " at " << v.witness << "\n";
  for (const auto& v : load.action_report.violations)
    std::cout << "action axiom violated: " << v.axiom << " at " << v.witness << "\n";
  print_check(g);
  print_check(a);
  return load.ok() ? 0 : 2;
}

int cmd_invariants(const Options& opt, Report& rep, const Action& act) {
  Subalg ctr = center(act.alg);
  Subalg rb = invariants_subalgebra(act);
  std::vector<JModule> jtab = j_table(act);
  const u64 all = (u64(1) << act.gpd.size()) - 1;
  u64 s = s_set(jtab, all), t = t_set(jtab, all);

  std::cout << "R^beta: dim " << rb.dim() << "\n";
  for (std::size_t i = 0; i < rb.dim(); ++i)
    std::cout << "  " << vec_to_string(act.alg, rb.space.basis_row(i)) << "\n";
  std::cout << "C(R): dim " << ctr.dim() << "\n";
  for (std::size_t i = 0; i < ctr.dim(); ++i)
    std::cout << "  " << vec_to_string(act.alg, ctr.space.basis_row(i)) << "\n";
  nlohmann::json jmods = nlohmann::json::array();
  for (const JModule& j : jtab) {
    std::cout << "J_" << act.gpd.name(j.morphism) << ": dim " << j.space.dim() << "\n";
    jmods.push_back({{"morphism", act.gpd.name(j.morphism)}, {"space", subspace_json(j.space)}});
  }
  std::cout << "S_G = " << morphism_set_to_string(act.gpd, s)
            << ", T_G = " << morphism_set_to_string(act.gpd, t) << "\n";

  CheckResult c{"invariants", Status::Pass,
                {{"r_beta", subspace_json(rb.space)},
                 {"center", subspace_json(ctr.space)},
                 {"j_modules", jmods},
                 {"s_g", morphism_set_to_string(act.gpd, s)},
                 {"t_g", morphism_set_to_string(act.gpd, t)}}};
  rep.checks = {c};
  return 0;
}

int cmd_skew(const Options& opt, Report& rep, const Action& act) {
  SkewRing skew = build_skew(act);
  std::cout << "skew ring dim " << skew.ring.dim << ", unit "
            << vec_to_string(skew.ring, skew.ring.unit) << "\n";
  rep.checks.push_back({"skew-build", Status::Pass, {{"dim", skew.ring.dim}}});

  auto wide = opt.serial ? wide_subgroupoids_serial(act.gpd, opt.max_morphisms)
                         : wide_subgroupoids(act.gpd, opt.max_morphisms);
  for (const Subgroupoid& h : wide) {
    CosetCheckReport cc = coset_decomposition_check(skew, act, h);
    nlohmann::json right = nlohmann::json::array(), left = nlohmann::json::array();
    for (const auto& sm : cc.right) right.push_back({{"rep", act.gpd.name(sm.rep)}, {"dim", sm.dim}});
    for (const auto& sm : cc.left) left.push_back({{"rep", act.gpd.name(sm.rep)}, {"dim", sm.dim}});
    CheckResult c{"coset-decomposition " + morphism_set_to_string(act.gpd, h.mask),
                  cc.pass ? Status::Pass : Status::Fail,
                  {{"right_summands", right},
                   {"left_summands", left},
                   {"right_direct", cc.right_direct},
                   {"right_spans", cc.right_spans},
                   {"left_direct", cc.left_direct},
                   {"left_spans", cc.left_spans}}};
    print_check(c);
    rep.checks.push_back(std::move(c));
  }
  return rep.failures() == 0 ? 0 : 1;
}

int cmd_coords(const Options& opt, Report& rep, const InstanceData& data) {
  const Action& act = data.act;
  if (opt.search) {
    auto found = find_coordinates(act);
    CheckResult c;
    c.name = "coordinates-search";
    if (found) {
      CoordinateCheck ver = verify_coordinates(act, *found);
      c.status = ver.ok ? Status::Pass : Status::Fail;
      nlohmann::json pairs = nlohmann::json::array();
      for (const auto& [x, y] : found->pairs) {
        std::cout << "pair: x = " << vec_to_string(act.alg, x) << ", y = " << vec_to_string(act.alg, y)
                  << "\n";
        pairs.push_back({{"x", x}, {"y", y}});
      }
      c.details["pairs"] = pairs;
      c.details["verified"] = ver.ok;
    } else {
      c.status = Status::Fail;
      c.details["reason"] = "no Galois coordinate system exists";
    }
    print_check(c);
    rep.checks = {c};
  } else {
    if (!data.coords) throw error("instance file has no [coordinates] section; use --search");
    CoordinateCheck ver = verify_coordinates(act, *data.coords);
    CheckResult c{"coordinates-verify", ver.ok ? Status::Pass : Status::Fail, {}};
    nlohmann::json residuals = nlohmann::json::array();
    for (int g = 0; g < act.gpd.size(); ++g) {
      if (!vec_is_zero(ver.residuals[(std::size_t)g]))
        std::cout << "residual at " << act.gpd.name(g) << ": "
                  << vec_to_string(act.alg, ver.residuals[(std::size_t)g]) << "\n";
      residuals.push_back({{"morphism", act.gpd.name(g)}, {"residual", ver.residuals[(std::size_t)g]}});
    }
    c.details["residuals"] = residuals;
    print_check(c);
    rep.checks = {c};
  }
  return rep.failures() == 0 ? 0 : 1;
}

int cmd_subgroupoids(const Options& opt, Report& rep, const InstanceData& data) {
  GaloisInstance inst = GaloisInstance::build(data.act, data.coords, galois_options(opt, false));
  nlohmann::json wide = nlohmann::json::array();
  for (std::size_t i = 0; i < inst.wide.size(); ++i) {
    std::cout << morphism_set_to_string(inst.act.gpd, inst.wide[i].mask) << "  S = "
              << morphism_set_to_string(inst.act.gpd, inst.s_mask[i]) << "  class #"
              << inst.class_of[i] << "\n";
    wide.push_back({{"morphisms", morphism_set_to_string(inst.act.gpd, inst.wide[i].mask)},
                    {"s_set", morphism_set_to_string(inst.act.gpd, inst.s_mask[i])},
                    {"class", inst.class_of[i]}});
  }
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : inst.classes) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t i : cls) members.push_back(morphism_set_to_string(inst.act.gpd, inst.wide[i].mask));
    classes.push_back(members);
  }
  rep.checks = {{"subgroupoids", Status::Pass, {{"wide", wide}, {"classes", classes}}}};
  return 0;
}

int cmd_check(const Options& opt, Report& rep, const InstanceData& data) {
  GaloisInstance inst = GaloisInstance::build(data.act, data.coords, galois_options(opt, true));
  if (opt.which == "all") {
    rep.checks = check_all(inst);
  } else if (opt.which == "lemma-3-1") {
    rep.checks = {decomposition_check(inst)};
  } else if (opt.which == "phi") {
    rep.checks = {phi_injectivity_check(inst)};
  } else if (opt.which == "sigma-gamma-bar") {
    rep.checks = {induced_injectivity_check(inst)};
  } else if (opt.which == "equiv") {
    rep.checks = {sigma_gamma_equivalence_check(inst)};
  } else if (opt.which == "theta") {
    rep.checks = {theta_injectivity_check(inst)};
  } else if (opt.which == "separability") {
    rep.checks = {separability_chain_check(inst)};
  } else {
    throw error("unknown check '" + opt.which +
                "'; expected lemma-3-1|phi|sigma-gamma-bar|equiv|theta|separability|all");
  }
  for (const auto& c : rep.checks) print_check(c);
  return rep.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ggal: groupoid actions on finite-dimensional algebras over a prime field"};
  app.require_subcommand(1);

  Options opt;
  long long p_flag = -1;

  auto add_common = [&](CLI::App* sub, bool with_instance = true) {
    if (with_instance) sub->add_option("instance", opt.path, "instance file")->required();
    sub->add_option("--p", p_flag, "override the prime modulus");
    sub->add_option("--max-morphisms", opt.max_morphisms, "subgroupoid enumeration cap (default 16)");
    sub->add_option("--max-sg-subsets", opt.max_subsets, "phi subset enumeration cap (default 4096)");
    sub->add_option("--json", opt.json_out, "write the machine-readable report here");
    sub->add_flag("--serial", opt.serial, "disable the parallel kernels");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the groupoid and action axioms");
  add_common(validate);
  CLI::App* invariants = app.add_subcommand("invariants", "print R^beta, C(R), the J_g table and S/T");
  add_common(invariants);
  CLI::App* skew = app.add_subcommand("skew", "build R*G and check its coset decompositions");
  add_common(skew);
  CLI::App* coords = app.add_subcommand("coords", "verify or search for a Galois coordinate system");
  add_common(coords);
  coords->add_flag("--search", opt.search, "search instead of verifying the bundled system");
  CLI::App* subg = app.add_subcommand("subgroupoids", "list wide subgroupoids and their classes");
  add_common(subg);
  CLI::App* check = app.add_subcommand("check", "run theorem checkers");
  check->add_option("which", opt.which, "lemma-3-1|phi|sigma-gamma-bar|equiv|theta|separability|all")
      ->required();
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (p_flag >= 0) opt.p_override = (u32)p_flag;

  Report rep;
  rep.instance_path = opt.path;
  auto t0 = std::chrono::steady_clock::now();

  try {
    LoadResult load = load_instance(opt.path, opt.p_override);
    rep.prime = load.data.act.alg.f.p;
    rep.timing_ms["load"] = ms_since(t0);
    const Action& act = load.data.act;
    std::cout << "instance " << opt.path << ": p = " << act.alg.f.p << ", dim R = " << act.alg.dim
              << ", |G| = " << act.gpd.size() << ", |G_0| = " << act.gpd.n_objects << "\n";

    if (validate->parsed()) {
      rep.command = "validate";
      int code = cmd_validate(opt, rep, load);
      rep.timing_ms["total"] = ms_since(t0);
      emit(rep, opt);
      return code;
    }
    if (!load.ok()) {
      rep.command = "error";
      for (const auto& v : load.groupoid_report.violations)
        std::cout << "groupoid axiom violated: " << v.axiom << " at " << v.witness << "\n";
      for (const auto& v : load.action_report.violations)
        std::cout << "action axiom violated: " << v.axiom << " at " << v.witness << "\n";
      std::cout << "invalid instance; run `ggal validate` for the full report\n";
      return 2;
    }

    int code = 0;
    if (invariants->parsed()) {
      rep.command = "invariants";
      code = cmd_invariants(opt, rep, act);
    } else if (skew->parsed()) {
      rep.command = "skew";
      code = cmd_skew(opt, rep, act);
    } else if (coords->parsed()) {
      rep.command = opt.search ? "coords --search" : "coords";
      code = cmd_coords(opt, rep, load.data);
    } else if (subg->parsed()) {
      rep.command = "subgroupoids";
      code = cmd_subgroupoids(opt, rep, load.data);
    } else if (check->parsed()) {
      rep.command = "check " + opt.which;
      code = cmd_check(opt, rep, load.data);
    }
    rep.timing_ms["total"] = ms_since(t0);
    emit(rep, opt);
    return code;
  } catch (const error& e) {
    std::cerr << "ggal: " << e.what() << "\n";
    return 2;
  }
}
