#include "ggal/groupoid.hpp"

#include <algorithm>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ggal {

u64 Groupoid::identity_mask() const {
  u64 m = 0;
  for (int e = 0; e < n_objects; ++e) m |= u64(1) << identity[(std::size_t)e];
  return m;
}

Groupoid Groupoid::sub(u64 mask, std::vector<int>* old_ids) const {
  std::vector<int> olds;
  std::vector<int> new_id(dom.size(), -1);
  for (int g = 0; g < size(); ++g)
    if (mask >> g & 1) {
      new_id[(std::size_t)g] = (int)olds.size();
      olds.push_back(g);
    }
  Groupoid s;
  s.n_objects = n_objects;
  s.identity.assign((std::size_t)n_objects, -1);
  for (int g : olds) {
    s.dom.push_back(dom[(std::size_t)g]);
    s.ran.push_back(ran[(std::size_t)g]);
    s.inv.push_back(new_id[(std::size_t)inv[(std::size_t)g]]);
    s.names.push_back(names[(std::size_t)g]);
  }
  for (int e = 0; e < n_objects; ++e) {
    int id = identity[(std::size_t)e];
    if (!(mask >> id & 1)) throw error("sub-groupoid is not wide: missing identity of object " + std::to_string(e));
    s.identity[(std::size_t)e] = new_id[(std::size_t)id];
  }
  s.comp.assign(olds.size() * olds.size(), -1);
  for (std::size_t i = 0; i < olds.size(); ++i)
    for (std::size_t j = 0; j < olds.size(); ++j) {
      int c = compose(olds[i], olds[j]);
      if (c >= 0 && (mask >> c & 1)) s.comp[i * olds.size() + j] = (short)new_id[(std::size_t)c];
    }
  if (old_ids) *old_ids = olds;
  return s;
}

ValidationReport validate_groupoid(const Groupoid& g) {
  ValidationReport rep;
  const int n = g.size();

  for (int e = 0; e < g.n_objects; ++e) {
    int id = g.identity[(std::size_t)e];
    if (id < 0 || id >= n) {
      rep.add("identity-map", "object " + std::to_string(e) + " has no identity morphism");
      return rep;  // tables unusable
    }
    if (g.dom[(std::size_t)id] != e || g.ran[(std::size_t)id] != e)
      rep.add("identity-map", "identity of object " + std::to_string(e) + " has wrong endpoints");
  }

  for (int m = 0; m < n; ++m) {
    int mi = g.inv[(std::size_t)m];
    if (g.inv[(std::size_t)mi] != m)
      rep.add("inverse-involution", g.name(m));
    if (g.dom[(std::size_t)mi] != g.ran[(std::size_t)m] || g.ran[(std::size_t)mi] != g.dom[(std::size_t)m])
      rep.add("inverse-domain", g.name(m) + " vs " + g.name(mi));
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = g.compose(a, b);
      if (g.composable(a, b)) {
        if (c < 0) {
          rep.add("comp-missing", g.name(a) + "*" + g.name(b));
          continue;
        }
        if (g.dom[(std::size_t)c] != g.dom[(std::size_t)b] || g.ran[(std::size_t)c] != g.ran[(std::size_t)a])
          rep.add("comp-endpoints", g.name(a) + "*" + g.name(b) + " = " + g.name(c));
      } else if (c >= 0) {
        rep.add("comp-extra", g.name(a) + "*" + g.name(b));
      }
    }
  if (!rep.ok()) {
    // endpoint or totality damage makes the remaining laws ill-posed in
    // places; still try them, guarding each lookup
  }

  auto comp_ok = [&](int a, int b) { return g.composable(a, b) && g.compose(a, b) >= 0; };

  for (int m = 0; m < n; ++m) {
    int de = g.identity[(std::size_t)g.dom[(std::size_t)m]];
    int re = g.identity[(std::size_t)g.ran[(std::size_t)m]];
    if (comp_ok(m, de) && g.compose(m, de) != m)
      rep.add("identity-law", g.name(m) + "*" + g.name(de) + " = " + g.name(g.compose(m, de)));
    if (comp_ok(re, m) && g.compose(re, m) != m)
      rep.add("identity-law", g.name(re) + "*" + g.name(m) + " = " + g.name(g.compose(re, m)));
  }

  for (int m = 0; m < n; ++m) {
    int mi = g.inv[(std::size_t)m];
    int re = g.identity[(std::size_t)g.ran[(std::size_t)m]];
    int de = g.identity[(std::size_t)g.dom[(std::size_t)m]];
    if (!comp_ok(m, mi) || g.compose(m, mi) != re)
      rep.add("inverse-law", g.name(m) + "*" + g.name(mi) + " != " + g.name(re));
    if (!comp_ok(mi, m) || g.compose(mi, m) != de)
      rep.add("inverse-law", g.name(mi) + "*" + g.name(m) + " != " + g.name(de));
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!comp_ok(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!comp_ok(b, c)) continue;
        int ab = g.compose(a, b), bc = g.compose(b, c);
        if (!comp_ok(ab, c) || !comp_ok(a, bc) || g.compose(ab, c) != g.compose(a, bc)) {
          rep.add("associativity", "(" + g.name(a) + "*" + g.name(b) + ")*" + g.name(c));
        }
      }
    }

  return rep;
}

bool is_closed_subset(const Groupoid& g, u64 mask) {
  for (int a = 0; a < g.size(); ++a) {
    if (!(mask >> a & 1)) continue;
    if (!(mask >> g.inv[(std::size_t)a] & 1)) return false;
    for (int b = 0; b < g.size(); ++b) {
      if (!(mask >> b & 1) || !g.composable(a, b)) continue;
      int c = g.compose(a, b);
      if (c < 0 || !(mask >> c & 1)) return false;
    }
  }
  return true;
}

bool is_wide(const Groupoid& g, u64 mask) {
  u64 ids = g.identity_mask();
  return (mask & ids) == ids;
}

Subgroupoid isotropy_group(const Groupoid& g, int object) {
  if (object < 0 || object >= g.n_objects) throw error("isotropy_group: unknown object");
  u64 m = 0;
  for (int a = 0; a < g.size(); ++a)
    if (g.dom[(std::size_t)a] == object && g.ran[(std::size_t)a] == object) m |= u64(1) << a;
  return {m};
}

Subgroupoid generated_subgroupoid(const Groupoid& g, u64 seed) {
  u64 cur = seed;
  for (;;) {
    u64 next = cur;
    for (int a = 0; a < g.size(); ++a) {
      if (!(cur >> a & 1)) continue;
      next |= u64(1) << g.inv[(std::size_t)a];
      next |= u64(1) << g.identity[(std::size_t)g.dom[(std::size_t)a]];
      next |= u64(1) << g.identity[(std::size_t)g.ran[(std::size_t)a]];
      for (int b = 0; b < g.size(); ++b) {
        if (!(cur >> b & 1) || !g.composable(a, b)) continue;
        int c = g.compose(a, b);
        if (c >= 0) next |= u64(1) << c;
      }
    }
    if (next == cur) return {cur};
    cur = next;
  }
}

namespace {

std::vector<Subgroupoid> collect_wide(const std::vector<char>& ok,
                                      const std::vector<int>& free_pos, u64 ids) {
  std::vector<Subgroupoid> out;
  for (u64 x = 0; x < ok.size(); ++x) {
    if (!ok[(std::size_t)x]) continue;
    u64 mask = ids;
    for (std::size_t b = 0; b < free_pos.size(); ++b)
      if (x >> b & 1) mask |= u64(1) << free_pos[b];
    out.push_back({mask});
  }
  // candidates are generated in increasing order of the free bits, which is
  // not mask order once identity bits interleave; sort explicitly
  std::sort(out.begin(), out.end(), [](const Subgroupoid& a, const Subgroupoid& b) { return a.mask < b.mask; });
  return out;
}

void wide_setup(const Groupoid& g, int max_morphisms, u64& ids, std::vector<int>& free_pos) {
  if (g.size() > max_morphisms)
    throw error("wide_subgroupoids: enumeration cap exceeded (" + std::to_string(g.size()) + " morphisms, cap " +
                std::to_string(max_morphisms) + "); raise --max-morphisms");
  if (g.size() >= 63) throw error("wide_subgroupoids: morphism count exceeds bitmask width");
  ids = g.identity_mask();
  for (int a = 0; a < g.size(); ++a)
    if (!(ids >> a & 1)) free_pos.push_back(a);
}

u64 candidate_mask(u64 ids, const std::vector<int>& free_pos, u64 x) {
  u64 mask = ids;
  for (std::size_t b = 0; b < free_pos.size(); ++b)
    if (x >> b & 1) mask |= u64(1) << free_pos[b];
  return mask;
}

}  // namespace

std::vector<Subgroupoid> wide_subgroupoids_serial(const Groupoid& g, int max_morphisms) {
  u64 ids = 0;
  std::vector<int> free_pos;
  wide_setup(g, max_morphisms, ids, free_pos);
  const u64 total = u64(1) << free_pos.size();
  std::vector<char> ok(total, 0);
  for (u64 x = 0; x < total; ++x) ok[(std::size_t)x] = is_closed_subset(g, candidate_mask(ids, free_pos, x));
  return collect_wide(ok, free_pos, ids);
}

std::vector<Subgroupoid> wide_subgroupoids(const Groupoid& g, int max_morphisms) {
  u64 ids = 0;
  std::vector<int> free_pos;
  wide_setup(g, max_morphisms, ids, free_pos);
  const u64 total = u64(1) << free_pos.size();
  std::vector<char> ok(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
  for (long long x = 0; x < (long long)total; ++x)
    ok[(std::size_t)x] = is_closed_subset(g, candidate_mask(ids, free_pos, (u64)x));
  return collect_wide(ok, free_pos, ids);
}

CosetDecomposition coset_decomposition(const Groupoid& g, Subgroupoid h) {
  if (!is_closed_subset(g, h.mask) || h.mask == 0) throw error("coset_decomposition: subset is not a subgroupoid");
  if (!is_wide(g, h.mask)) throw error("coset_decomposition: subgroupoid is not wide");

  // left:  a ~ b  iff  ran(a)=ran(b) and a^{-1} b in H   (classes aH)
  // right: a ~ b  iff  dom(a)=dom(b) and b a^{-1} in H   (classes Ha)
  auto classes = [&](bool left) {
    std::vector<u64> cosets;
    std::vector<int> reps;
    std::vector<char> seen((std::size_t)g.size(), 0);
    for (int a = 0; a < g.size(); ++a) {
      if (seen[(std::size_t)a]) continue;
      u64 cls = 0;
      int rep = a;
      for (int b = 0; b < g.size(); ++b) {
        bool same = false;
        if (left && g.ran[(std::size_t)a] == g.ran[(std::size_t)b]) {
          int c = g.compose(g.inv[(std::size_t)a], b);
          same = c >= 0 && (h.mask >> c & 1);
        } else if (!left && g.dom[(std::size_t)a] == g.dom[(std::size_t)b]) {
          int c = g.compose(b, g.inv[(std::size_t)a]);
          same = c >= 0 && (h.mask >> c & 1);
        }
        if (!same) continue;
        cls |= u64(1) << b;
        seen[(std::size_t)b] = 1;
        if (g.is_identity(b) && !g.is_identity(rep)) rep = b;
      }
      cosets.push_back(cls);
      reps.push_back(rep);
    }
    // identity-represented cosets first, then by representative id
    std::vector<std::size_t> order(cosets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      bool ii = g.is_identity(reps[i]), jj = g.is_identity(reps[j]);
      if (ii != jj) return ii;
      return reps[i] < reps[j];
    });
    std::pair<std::vector<int>, std::vector<u64>> out;
    for (std::size_t i : order) {
      out.first.push_back(reps[i]);
      out.second.push_back(cosets[i]);
    }
    return out;
  };

  CosetDecomposition d;
  auto l = classes(true);
  d.left_reps = std::move(l.first);
  d.left_cosets = std::move(l.second);
  auto r = classes(false);
  d.right_reps = std::move(r.first);
  d.right_cosets = std::move(r.second);
  return d;
}

std::string morphism_set_to_string(const Groupoid& g, u64 mask) {
  std::string s = "{";
  bool first = true;
  for (int a = 0; a < g.size(); ++a) {
    if (!(mask >> a & 1)) continue;
    if (!first) s += ",";
    s += g.name(a);
    first = false;
  }
  return s + "}";
}

}  // namespace ggal
