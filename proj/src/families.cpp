#include "ggal/families.hpp"

namespace ggal {

Groupoid trivial_groupoid(int n_objects) {
  Groupoid g;
  g.n_objects = n_objects;
  for (int e = 0; e < n_objects; ++e) {
    g.dom.push_back(e);
    g.ran.push_back(e);
    g.inv.push_back(e);
    g.identity.push_back(e);
    g.names.push_back("id" + std::to_string(e));
  }
  g.comp.assign((std::size_t)(n_objects * n_objects), -1);
  for (int e = 0; e < n_objects; ++e) g.set_compose(e, e, e);
  return g;
}

Groupoid cyclic_group(int m) {
  Groupoid g;
  g.n_objects = 1;
  g.identity = {0};
  for (int a = 0; a < m; ++a) {
    g.dom.push_back(0);
    g.ran.push_back(0);
    g.inv.push_back((m - a) % m);
    g.names.push_back("g" + std::to_string(a));
  }
  g.comp.assign((std::size_t)(m * m), -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.set_compose(a, b, (a + b) % m);
  return g;
}

Groupoid pair_groupoid(int n) {
  // morphism n*i+j goes j -> i; composition (i<-j)(j<-k) = (i<-k)
  Groupoid g;
  g.n_objects = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.dom.push_back(j);
      g.ran.push_back(i);
      g.inv.push_back(n * j + i);
      g.names.push_back("m" + std::to_string(i) + std::to_string(j));
    }
  for (int e = 0; e < n; ++e) g.identity.push_back(n * e + e);
  g.comp.assign((std::size_t)g.size() * (std::size_t)g.size(), -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) g.set_compose(n * i + j, n * j + k, n * i + k);
  return g;
}

Groupoid disjoint_union_groupoid(const Groupoid& a, const Groupoid& b) {
  Groupoid g;
  g.n_objects = a.n_objects + b.n_objects;
  auto shift_obj = [&](int e) { return e + a.n_objects; };
  auto shift_mor = [&](int m) { return m + a.size(); };
  g.dom = a.dom;
  g.ran = a.ran;
  g.inv = a.inv;
  g.names = a.names;
  for (int m = 0; m < b.size(); ++m) {
    g.dom.push_back(shift_obj(b.dom[(std::size_t)m]));
    g.ran.push_back(shift_obj(b.ran[(std::size_t)m]));
    g.inv.push_back(shift_mor(b.inv[(std::size_t)m]));
    g.names.push_back(b.names[(std::size_t)m] + "'");
  }
  g.identity = a.identity;
  for (int e = 0; e < b.n_objects; ++e) g.identity.push_back(shift_mor(b.identity[(std::size_t)e]));
  const int n = g.size();
  g.comp.assign((std::size_t)n * (std::size_t)n, -1);
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.compose(x, y) >= 0) g.set_compose(x, y, a.compose(x, y));
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      if (b.compose(x, y) >= 0) g.set_compose(shift_mor(x), shift_mor(y), shift_mor(b.compose(x, y)));
  return g;
}

Algebra product_field_algebra(Fp f, std::size_t k) {
  Algebra a(f, k);
  for (std::size_t i = 0; i < k; ++i) {
    a.set_c(i, i, i, 1);
    a.unit[i] = 1;
    a.basis_names.push_back("u" + std::to_string(i));
  }
  return a;
}

Algebra matrix_algebra(Fp f, std::size_t n) {
  Algebra a(f, n * n);
  auto idx = [&](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j == k) a.set_c(idx(i, j), idx(k, l), idx(i, l), 1);
      a.basis_names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i < n; ++i) a.unit[idx(i, i)] = 1;
  return a;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  Algebra s(a.f, a.dim + b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) s.set_c(i, j, k, a.c(i, j, k));
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k) s.set_c(a.dim + i, a.dim + j, a.dim + k, b.c(i, j, k));
  for (std::size_t i = 0; i < a.dim; ++i) s.unit[i] = a.unit[i];
  for (std::size_t i = 0; i < b.dim; ++i) s.unit[a.dim + i] = b.unit[i];
  for (std::size_t i = 0; i < a.dim; ++i) s.basis_names.push_back(a.basis_name(i));
  for (std::size_t i = 0; i < b.dim; ++i) s.basis_names.push_back(b.basis_name(i) + "'");
  return s;
}

Action direct_sum(const Action& a, const Action& b) {
  if (!(a.alg.f == b.alg.f)) throw error("direct_sum: mismatched fields");
  Action s;
  s.gpd = disjoint_union_groupoid(a.gpd, b.gpd);
  s.alg = direct_sum(a.alg, b.alg);
  const std::size_t da = a.alg.dim, db = b.alg.dim;
  for (const Vec& v : a.unit_idem) {
    Vec w(da + db, 0);
    std::copy(v.begin(), v.end(), w.begin());
    s.unit_idem.push_back(std::move(w));
  }
  for (const Vec& v : b.unit_idem) {
    Vec w(da + db, 0);
    std::copy(v.begin(), v.end(), w.begin() + (long)da);
    s.unit_idem.push_back(std::move(w));
  }
  auto pad = [&](const Mat& m, bool second) {
    Mat w(a.alg.f, da + db, da + db);
    std::size_t off = second ? da : 0;
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) w.at(off + r, off + c) = m.at(r, c);
    return w;
  };
  for (const Mat& m : a.beta) s.beta.push_back(pad(m, false));
  for (const Mat& m : b.beta) s.beta.push_back(pad(m, true));
  return s;
}

Action transform_basis(const Action& act, const Mat& t) {
  auto ti = mat_inverse(t);
  if (!ti) throw error("transform_basis: matrix not invertible");
  const Algebra& a = act.alg;
  auto col = [&](std::size_t j) {
    Vec v(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) v[r] = t.at(r, j);
    return v;
  };
  Action out;
  out.gpd = act.gpd;
  out.alg = Algebra(a.f, a.dim);
  out.alg.basis_names = a.basis_names;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec prod = mat_apply(*ti, a.mul(col(i), col(j)));
      for (std::size_t k = 0; k < a.dim; ++k) out.alg.set_c(i, j, k, prod[k]);
    }
  out.alg.unit = mat_apply(*ti, a.unit);
  for (const Vec& v : act.unit_idem) out.unit_idem.push_back(mat_apply(*ti, v));
  for (const Mat& m : act.beta) out.beta.push_back(mat_mul(*ti, mat_mul(m, t)));
  return out;
}

Action ex1_action(u32 p) {
  Fp f(p);
  Action act;
  act.gpd.n_objects = 2;
  act.gpd.dom = {0, 1, 0, 1};
  act.gpd.ran = {0, 1, 1, 0};
  act.gpd.inv = {0, 1, 3, 2};
  act.gpd.identity = {0, 1};
  act.gpd.names = {"e", "f", "g", "gi"};
  act.gpd.comp.assign(16, -1);
  act.gpd.set_compose(0, 0, 0);
  act.gpd.set_compose(1, 1, 1);
  act.gpd.set_compose(2, 0, 2);
  act.gpd.set_compose(1, 2, 2);
  act.gpd.set_compose(3, 1, 3);
  act.gpd.set_compose(0, 3, 3);
  act.gpd.set_compose(3, 2, 0);
  act.gpd.set_compose(2, 3, 1);

  act.alg = product_field_algebra(f, 2);
  act.alg.basis_names = {"1e", "1f"};
  act.unit_idem = {{1, 0}, {0, 1}};

  Mat be(f, 2, 2), bf(f, 2, 2), bg(f, 2, 2), bgi(f, 2, 2);
  be.at(0, 0) = 1;
  bf.at(1, 1) = 1;
  bg.at(1, 0) = 1;   // 1e -> 1f
  bgi.at(0, 1) = 1;  // 1f -> 1e
  act.beta = {be, bf, bg, bgi};
  return act;
}

Action ex2_action(u32 p) {
  Fp f(p);
  Action act;
  act.gpd = cyclic_group(2);
  act.gpd.names = {"e", "g"};
  act.alg = matrix_algebra(f, 2);
  act.unit_idem = {act.alg.unit};
  Mat be = Mat::identity(f, 4);
  Mat bg = Mat::identity(f, 4);  // conjugation by diag(1,-1): e12,e21 -> -e12,-e21
  bg.at(1, 1) = f.neg(1);
  bg.at(2, 2) = f.neg(1);
  act.beta = {be, bg};
  return act;
}

Action ex3_action(u32 p) { return direct_sum(ex1_action(p), ex2_action(p)); }

Action pair_transport_action(int n, u32 p) {
  Fp f(p);
  Action act;
  act.gpd = pair_groupoid(n);
  act.alg = product_field_algebra(f, (std::size_t)n);
  for (int e = 0; e < n; ++e) {
    Vec one((std::size_t)n, 0);
    one[(std::size_t)e] = 1;
    act.unit_idem.push_back(std::move(one));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat m(f, (std::size_t)n, (std::size_t)n);
      m.at((std::size_t)i, (std::size_t)j) = 1;  // transport 1_j -> 1_i
      act.beta.push_back(std::move(m));
    }
  return act;
}

Action z2_swap_action(u32 p) {
  Fp f(p);
  Action act;
  act.gpd = cyclic_group(2);
  act.alg = product_field_algebra(f, 2);
  act.unit_idem = {act.alg.unit};
  Mat swap(f, 2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  act.beta = {Mat::identity(f, 2), swap};
  return act;
}

Action z2_trivial_field_action(u32 p) {
  Fp f(p);
  Action act;
  act.gpd = cyclic_group(2);
  act.alg = product_field_algebra(f, 1);
  act.unit_idem = {act.alg.unit};
  act.beta = {Mat::identity(f, 1), Mat::identity(f, 1)};
  return act;
}

Action elementary_abelian_perm_action(int k, u32 p) {
  Fp f(p);
  const int n = 1 << k;
  Action act;
  act.gpd.n_objects = 1;
  act.gpd.identity = {0};
  for (int a = 0; a < n; ++a) {
    act.gpd.dom.push_back(0);
    act.gpd.ran.push_back(0);
    act.gpd.inv.push_back(a);
    act.gpd.names.push_back("t" + std::to_string(a));
  }
  act.gpd.comp.assign((std::size_t)n * (std::size_t)n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) act.gpd.set_compose(a, b, a ^ b);

  act.alg = product_field_algebra(f, (std::size_t)n);
  act.unit_idem = {act.alg.unit};
  for (int a = 0; a < n; ++a) {
    Mat m(f, (std::size_t)n, (std::size_t)n);
    for (int x = 0; x < n; ++x) m.at((std::size_t)(a ^ x), (std::size_t)x) = 1;
    act.beta.push_back(std::move(m));
  }
  return act;
}

}  // namespace ggal
