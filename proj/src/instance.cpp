#include "ggal/instance.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ggal {

namespace {

struct Line {
  int no = 0;
  std::vector<std::string> tok;
};

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw error(path + ":" + std::to_string(line) + ": " + msg);
}

long long to_int(const std::string& path, const Line& l, const std::string& tok) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(path, l.no, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

InstanceData parse_instance_file(const std::string& path, std::optional<u32> p_override) {
  std::ifstream in(path);
  if (!in) throw error(path + ": cannot open instance file");

  std::map<std::string, std::vector<Line>> sections;
  std::string header_version;
  std::optional<long long> prime_raw;
  int prime_line = 0;

  std::string section;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line l;
    l.no = lineno;
    for (std::string t; ss >> t;) l.tok.push_back(t);
    if (l.tok.empty()) continue;

    if (header_version.empty()) {
      if (l.tok.size() != 2 || l.tok[0] != "ggal-instance")
        fail(path, lineno, "expected header 'ggal-instance v1'");
      if (l.tok[1] != "v1") fail(path, lineno, "unsupported instance format version " + l.tok[1]);
      header_version = l.tok[1];
      continue;
    }
    if (l.tok[0] == "prime") {
      if (l.tok.size() != 2) fail(path, lineno, "prime takes one value");
      prime_raw = to_int(path, l, l.tok[1]);
      prime_line = lineno;
      continue;
    }
    if (l.tok[0].front() == '[') {
      if (l.tok.size() != 1 || l.tok[0].back() != ']') fail(path, lineno, "malformed section header");
      section = l.tok[0].substr(1, l.tok[0].size() - 2);
      if (section != "algebra" && section != "groupoid" && section != "action" && section != "coordinates")
        fail(path, lineno, "unknown section [" + section + "]");
      continue;
    }
    if (section.empty()) fail(path, lineno, "content before any section");
    sections[section].push_back(std::move(l));
  }
  if (header_version.empty()) throw error(path + ": empty instance file");
  if (!prime_raw) throw error(path + ": missing 'prime' line");

  u32 p_value = p_override ? *p_override : (u32)*prime_raw;
  Fp f(0);
  try {
    f = Fp(p_value);
  } catch (const error& e) {
    fail(path, p_override ? 0 : prime_line, e.what());
  }

  InstanceData inst;
  Algebra& alg = inst.act.alg;
  Groupoid& gpd = inst.act.gpd;

  // [algebra]
  {
    auto it = sections.find("algebra");
    if (it == sections.end()) throw error(path + ": missing [algebra] section");
    bool have_dim = false;
    for (const Line& l : it->second) {
      const auto& t = l.tok;
      if (t[0] == "dim") {
        if (t.size() != 2) fail(path, l.no, "dim takes one value");
        long long d = to_int(path, l, t[1]);
        if (d < 1 || d > 64) fail(path, l.no, "algebra dim out of range");
        alg = Algebra(f, (std::size_t)d);
        have_dim = true;
      } else if (t[0] == "basis") {
        if (!have_dim) fail(path, l.no, "basis before dim");
        if (t.size() != alg.dim + 1) fail(path, l.no, "basis needs dim names");
        alg.basis_names.assign(t.begin() + 1, t.end());
      } else if (t[0] == "unit") {
        if (!have_dim) fail(path, l.no, "unit before dim");
        if (t.size() != alg.dim + 1) fail(path, l.no, "unit needs dim entries");
        for (std::size_t i = 0; i < alg.dim; ++i) alg.unit[i] = f.reduce(to_int(path, l, t[i + 1]));
      } else if (t[0] == "mul") {
        if (!have_dim) fail(path, l.no, "mul before dim");
        if (t.size() != 5) fail(path, l.no, "mul takes i j k value");
        long long i = to_int(path, l, t[1]), j = to_int(path, l, t[2]), k = to_int(path, l, t[3]);
        if (i < 0 || j < 0 || k < 0 || i >= (long long)alg.dim || j >= (long long)alg.dim || k >= (long long)alg.dim)
          fail(path, l.no, "mul index out of range");
        alg.set_c((std::size_t)i, (std::size_t)j, (std::size_t)k, f.reduce(to_int(path, l, t[4])));
      } else {
        fail(path, l.no, "unknown keyword '" + t[0] + "' in [algebra]");
      }
    }
    if (!have_dim) throw error(path + ": [algebra] has no dim");
  }

  // [groupoid]
  std::map<std::string, int> morph_id;
  {
    auto it = sections.find("groupoid");
    if (it == sections.end()) throw error(path + ": missing [groupoid] section");
    struct RawMorph {
      std::string name, inv_name;
      int dom = 0, ran = 0, line = 0;
    };
    std::vector<RawMorph> morphs;
    std::vector<std::tuple<int, std::string, int>> identities;  // object, name, line
    std::vector<std::tuple<std::string, std::string, std::string, int>> comps;
    for (const Line& l : it->second) {
      const auto& t = l.tok;
      if (t[0] == "objects") {
        if (t.size() != 2) fail(path, l.no, "objects takes one value");
        long long n = to_int(path, l, t[1]);
        if (n < 1 || n > 62) fail(path, l.no, "object count out of range");
        gpd.n_objects = (int)n;
      } else if (t[0] == "morphism") {
        if (t.size() != 5) fail(path, l.no, "morphism takes name dom ran inverse-name");
        RawMorph m;
        m.name = t[1];
        m.dom = (int)to_int(path, l, t[2]);
        m.ran = (int)to_int(path, l, t[3]);
        m.inv_name = t[4];
        m.line = l.no;
        morphs.push_back(std::move(m));
      } else if (t[0] == "identity") {
        if (t.size() != 3) fail(path, l.no, "identity takes object morphism-name");
        identities.emplace_back((int)to_int(path, l, t[1]), t[2], l.no);
      } else if (t[0] == "comp") {
        if (t.size() != 4) fail(path, l.no, "comp takes a b ab");
        comps.emplace_back(t[1], t[2], t[3], l.no);
      } else {
        fail(path, l.no, "unknown keyword '" + t[0] + "' in [groupoid]");
      }
    }
    if (gpd.n_objects == 0) throw error(path + ": [groupoid] has no objects line");
    if (morphs.size() > 62) throw error(path + ": too many morphisms (bitmask limit)");
    for (std::size_t i = 0; i < morphs.size(); ++i) {
      if (morph_id.count(morphs[i].name)) fail(path, morphs[i].line, "duplicate morphism " + morphs[i].name);
      morph_id[morphs[i].name] = (int)i;
    }
    auto lookup = [&](const std::string& n, int line) {
      auto itm = morph_id.find(n);
      if (itm == morph_id.end()) fail(path, line, "unknown morphism '" + n + "'");
      return itm->second;
    };
    for (const RawMorph& m : morphs) {
      if (m.dom < 0 || m.dom >= gpd.n_objects || m.ran < 0 || m.ran >= gpd.n_objects)
        fail(path, m.line, "morphism endpoint out of range");
      gpd.dom.push_back(m.dom);
      gpd.ran.push_back(m.ran);
      gpd.inv.push_back(lookup(m.inv_name, m.line));
      gpd.names.push_back(m.name);
    }
    gpd.identity.assign((std::size_t)gpd.n_objects, -1);
    for (auto& [obj, name, line] : identities) {
      if (obj < 0 || obj >= gpd.n_objects) fail(path, line, "identity object out of range");
      gpd.identity[(std::size_t)obj] = lookup(name, line);
    }
    for (int e = 0; e < gpd.n_objects; ++e)
      if (gpd.identity[(std::size_t)e] < 0)
        throw error(path + ": object " + std::to_string(e) + " has no identity line");
    gpd.comp.assign((std::size_t)gpd.size() * (std::size_t)gpd.size(), -1);
    for (auto& [sa, sb, sc, line] : comps) {
      int a = lookup(sa, line), b = lookup(sb, line), c = lookup(sc, line);
      if (gpd.compose(a, b) >= 0) fail(path, line, "duplicate comp entry " + sa + "*" + sb);
      gpd.set_compose(a, b, c);
    }
  }

  // [action]
  {
    auto it = sections.find("action");
    if (it == sections.end()) throw error(path + ": missing [action] section");
    inst.act.unit_idem.assign((std::size_t)gpd.n_objects, Vec());
    inst.act.beta.assign((std::size_t)gpd.size(), Mat());
    const auto& lines = it->second;
    for (std::size_t li = 0; li < lines.size(); ++li) {
      const Line& l = lines[li];
      const auto& t = l.tok;
      if (t[0] == "idempotent") {
        if (t.size() != alg.dim + 2) fail(path, l.no, "idempotent takes object plus dim entries");
        long long e = to_int(path, l, t[1]);
        if (e < 0 || e >= gpd.n_objects) fail(path, l.no, "idempotent object out of range");
        Vec v(alg.dim);
        for (std::size_t i = 0; i < alg.dim; ++i) v[i] = f.reduce(to_int(path, l, t[i + 2]));
        inst.act.unit_idem[(std::size_t)e] = std::move(v);
      } else if (t[0] == "beta") {
        if (t.size() != 2) fail(path, l.no, "beta takes a morphism name");
        auto itm = morph_id.find(t[1]);
        if (itm == morph_id.end()) fail(path, l.no, "unknown morphism '" + t[1] + "'");
        Mat m(f, alg.dim, alg.dim);
        for (std::size_t r = 0; r < alg.dim; ++r) {
          if (++li >= lines.size()) fail(path, l.no, "beta " + t[1] + ": missing matrix rows");
          const Line& rowl = lines[li];
          if (rowl.tok.size() != alg.dim) fail(path, rowl.no, "beta row needs dim entries");
          for (std::size_t c = 0; c < alg.dim; ++c)
            m.at(r, c) = f.reduce(to_int(path, rowl, rowl.tok[c]));
        }
        inst.act.beta[(std::size_t)itm->second] = std::move(m);
      } else {
        fail(path, l.no, "unknown keyword '" + t[0] + "' in [action]");
      }
    }
    for (int e = 0; e < gpd.n_objects; ++e)
      if (inst.act.unit_idem[(std::size_t)e].empty())
        throw error(path + ": object " + std::to_string(e) + " has no idempotent line");
    for (int m = 0; m < gpd.size(); ++m)
      if (inst.act.beta[(std::size_t)m].rows == 0)
        throw error(path + ": morphism " + gpd.name(m) + " has no beta block");
  }

  // [coordinates]
  if (auto it = sections.find("coordinates"); it != sections.end()) {
    Coordinates coords;
    for (const Line& l : it->second) {
      const auto& t = l.tok;
      if (t[0] != "pair") fail(path, l.no, "unknown keyword '" + t[0] + "' in [coordinates]");
      if (t.size() != 2 * alg.dim + 1) fail(path, l.no, "pair takes 2*dim entries");
      Vec x(alg.dim), y(alg.dim);
      for (std::size_t i = 0; i < alg.dim; ++i) {
        x[i] = f.reduce(to_int(path, l, t[1 + i]));
        y[i] = f.reduce(to_int(path, l, t[1 + alg.dim + i]));
      }
      coords.pairs.emplace_back(std::move(x), std::move(y));
    }
    inst.coords = std::move(coords);
  }

  return inst;
}

LoadResult load_instance(const std::string& path, std::optional<u32> p_override) {
  LoadResult res;
  res.data = parse_instance_file(path, p_override);
  res.groupoid_report = validate_groupoid(res.data.act.gpd);
  if (res.groupoid_report.ok()) res.action_report = validate_action(res.data.act);
  return res;
}

}  // namespace ggal
