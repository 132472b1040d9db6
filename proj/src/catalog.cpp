#include "ybelab/catalog.hpp"

#include "ybelab/elliptic.hpp"
#include "ybelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace ybelab {

// su(2)+su(2) models live in catalog_su22.cpp
ModelSpec build_su22(const std::string& id, const Params& ov);
ModelSpec build_ghub(const Params& ov);

std::string to_string(Form f) {
  switch (f) {
    case Form::difference: return "difference";
    case Form::quasi_difference: return "quasi-difference";
    case Form::non_difference: return "non-difference";
  }
  return "non-difference";
}

bool Box::contains(cplx z) const {
  return z.real() >= re_lo && z.real() <= re_hi && z.imag() >= im_lo && z.imag() <= im_hi;
}

cplx Box::at(double x, double y) const { return {re_lo + x * (re_hi - re_lo), im_lo + y * (im_hi - im_lo)}; }

CMat unit(int d, int i, int j) {
  CMat E = CMat::Zero(d, d);
  E(i - 1, j - 1) = 1.0;
  return E;
}

CMat eight_vertex_H(const std::array<cplx, 8>& h) {
  CMat sp = CMat::Zero(2, 2), sm = CMat::Zero(2, 2), sz = CMat::Zero(2, 2), id = identity(2);
  sp(0, 1) = 1.0;
  sm(1, 0) = 1.0;
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  return h[0] * identity(4) + h[1] * (kron(sz, id) - kron(id, sz)) + h[2] * kron(sp, sm) + h[3] * kron(sm, sp) +
         h[4] * (kron(sz, id) + kron(id, sz)) + h[5] * kron(sz, sz) + h[6] * kron(sm, sm) + h[7] * kron(sp, sp);
}

namespace {

using std::exp;

CMat mat4(std::initializer_list<cplx> rows) {
  CMat M(4, 4);
  auto it = rows.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M(i, j) = *it++;
  return M;
}

void merge(Params& p, const Params& ov, const std::string& id) {
  for (auto& [k, v] : ov) {
    if (!p.count(k)) throw UsageError("model " + id + " has no parameter '" + k + "'");
    p[k] = v;
  }
}

void attach(ModelSpec& m, const std::string& preset_id, const std::vector<std::string>& names) {
  for (auto& name : names) m.functions.emplace_back(name, Fn::from(m.params, name));
  m.preset = preset_id;
}

Params with_preset(const std::string& preset_id, Params extra = {}, const std::vector<std::string>& only = {}) {
  for (auto& [name, fn] : preset(preset_id).fns)
    if (only.empty() || std::find(only.begin(), only.end(), name) != only.end()) fn.store(extra, name);
  return extra;
}

ModelSpec build_6va(const Params& ov) {
  ModelSpec m;
  m.id = "6vA-xxz";
  m.n = 2;
  m.form = Form::difference;
  m.summary = "XXZ density (0,1,c;c,1,0) with its difference-form R";
  m.params = {{"c", 1.5}};
  m.domain = {-0.6, 0.6, -0.2, 0.2};
  merge(m.params, ov, m.id);
  const cplx c = m.params["c"];
  const cplx w = std::sqrt(c * c - 1.0);
  m.eval_H = [c](cplx) { return mat4({0, 0, 0, 0, 0, 1, c, 0, 0, c, 1, 0, 0, 0, 0, 0}); };
  m.eval_R = [c, w](cplx u, cplx v) {
    cplx x = u - v;
    cplx s = sinw(w, x);
    cplx a = std::cos(w * x) - s, b = c * s;
    return CMat(exp(x) * mat4({a, 0, 0, 0, 0, b, 1, 0, 0, 1, b, 0, 0, 0, 0, a}));
  };
  m.eval_dH = [](cplx) { return CMat(CMat::Zero(4, 4)); };
  return m;
}

ModelSpec build_xxz_nondiff(const Params& ov) {
  ModelSpec m;
  m.id = "xxz-nondiff";
  m.n = 2;
  m.form = Form::quasi_difference;
  m.summary = "XXZ ansatz with free h1(theta), h2(theta); R in H1, H2 differences";
  m.params = with_preset("xxz-nondiff-default", {{"c3", 2.0}, {"c4", 0.5}});
  merge(m.params, ov, m.id);
  attach(m, "xxz-nondiff-default", {"h1", "h2"});
  const cplx c3 = m.params["c3"], c4 = m.params["c4"];
  const Fn h1 = Fn::from(m.params, "h1"), h2 = Fn::from(m.params, "h2");
  m.eval_H = [=](cplx t) {
    cplx a = h1.f(t), b = h2.f(t);
    return mat4({0, 0, 0, 0, 0, a, c3 / 2.0 * (a + b), 0, 0, c4 / 2.0 * (a + b), b, 0, 0, 0, 0, 0});
  };
  m.eval_dH = [=](cplx t) {
    cplx a = h1.df(t), b = h2.df(t);
    return mat4({0, 0, 0, 0, 0, a, c3 / 2.0 * (a + b), 0, 0, c4 / 2.0 * (a + b), b, 0, 0, 0, 0, 0});
  };
  const cplx w = std::sqrt(c3 * c4 - 1.0);
  m.eval_R = [=](cplx u, cplx v) {
    cplx d1 = h1.F(u) - h1.F(v), d2 = h2.F(u) - h2.F(v);
    cplx hp = (d1 + d2) / 2.0, hm = (d1 - d2) / 2.0;
    cplx s = sinw(w, hp);
    cplx a = std::cos(w * hp) - s;
    return CMat(exp(hp) * mat4({a, 0, 0, 0, 0, c4 * s, exp(-hm), 0, 0, exp(hm), c3 * s, 0, 0, 0, 0, a}));
  };
  return m;
}

ModelSpec build_6vb(const Params& ov) {
  ModelSpec m;
  m.id = "6vB";
  m.n = 2;
  m.form = Form::non_difference;
  m.summary = "six-vertex B after reparameterization; free h4, h5";
  m.params = with_preset("6vB-default");
  merge(m.params, ov, m.id);
  attach(m, "6vB-default", {"h4", "h5"});
  const Fn h4 = Fn::from(m.params, "h4"), h5 = Fn::from(m.params, "h5");
  m.eval_H = [=](cplx t) {
    cplx a = h4.f(t), b = h5.f(t);
    return mat4({a * b, 0, 0, 0, 0, 0, a * b * b - h5.df(t), 0, 0, a, 0, 0, 0, 0, 0, -a * b});
  };
  m.eval_dH = [=](cplx t) {
    cplx a = h4.f(t), b = h5.f(t), da = h4.df(t), db = h5.df(t);
    cplx d11 = da * b + a * db;
    cplx d23 = da * b * b + 2.0 * a * b * db - h5.d2f(t);
    return mat4({d11, 0, 0, 0, 0, 0, d23, 0, 0, da, 0, 0, 0, 0, 0, -d11});
  };
  m.eval_R = [=](cplx x, cplx y) {
    cplx H = h4.F(x) - h4.F(y), a = h5.f(x), b = h5.f(y);
    CMat R = mat4({1, 0, 0, 0, 0, 0, 1, 0, 0, 1, b - a, 0, 0, 0, 0, 1});
    R(0, 0) += H * a;
    R(1, 1) += H;
    R(2, 2) += H * a * b;
    R(3, 3) += -H * b;
    return R;
  };
  return m;
}

ModelSpec build_8va(const Params& ov) {
  ModelSpec m;
  m.id = "8vA";
  m.n = 2;
  m.form = Form::non_difference;
  m.summary = "eight-vertex A density (XYZ type); Hamiltonian only";
  m.params = with_preset("8vA-default", {{"c3", 0.6}, {"c7", 0.7}, {"c8", 1.3}});
  merge(m.params, ov, m.id);
  attach(m, "8vA-default", {"h1", "h2", "h6"});
  const cplx c3 = m.params["c3"], c7 = m.params["c7"], c8 = m.params["c8"];
  const Fn h1 = Fn::from(m.params, "h1"), h2 = Fn::from(m.params, "h2"), h6 = Fn::from(m.params, "h6");
  m.eval_H = [=](cplx t) {
    cplx s = h6.f(t), e = exp(4.0 * h2.F(t));
    return eight_vertex_H({h1.f(t), h2.f(t), c3 * s, c3 * s, 0.0, s, c7 * s * e, c8 * s / e});
  };
  m.eval_dH = [=](cplx t) {
    cplx s = h6.f(t), ds = h6.df(t), e = exp(4.0 * h2.F(t)), de = 4.0 * h2.f(t) * e;
    return eight_vertex_H({h1.df(t), h2.df(t), c3 * ds, c3 * ds, 0.0, ds, c7 * (ds * e + s * de),
                           c8 * (ds / e - s * de / (e * e))});
  };
  return m;
}

ModelSpec build_8vb(const Params& ov) {
  ModelSpec m;
  m.id = "8vB";
  m.n = 2;
  m.summary = "eight-vertex B with elliptic R, free eta(theta), modulus k";
  m.params = with_preset("8vB-default", {{"k", 0.4}});
  merge(m.params, ov, m.id);
  attach(m, "8vB-default", {"eta"});
  const Fn eta = Fn::from(m.params, "eta");
  const cplx k = m.params["k"];
  const cplx mm = k * k;
  m.form = (eta.c1 == 0.0 && eta.c2 == 0.0 && (eta.a == 0.0 || eta.b == 0.0)) ? Form::difference : Form::non_difference;
  m.eval_H = [=](cplx t) {
    cplx s = std::sin(eta.f(t)), ct = std::cos(eta.f(t)) / s, d = eta.df(t);
    return mat4({-ct, 0, 0, k, 0, 0, (1.0 - d / 2.0) / s, 0, 0, (1.0 + d / 2.0) / s, 0, 0, k, 0, 0, ct});
  };
  m.eval_R = [=](cplx u, cplx v) {
    JacobiTriple j = jacobi_all(u - v, mm);
    cplx eu = eta.f(u), ev = eta.f(v);
    cplx ep = (eu + ev) / 2.0, em = (eu - ev) / 2.0;
    cplx p = 1.0 / (std::sqrt(std::sin(eu)) * std::sqrt(std::sin(ev)));
    cplx cd = j.cn / j.dn;
    cplx r1 = p * (std::sin(ep) * cd - std::cos(ep) * j.sn);
    cplx r2 = p * (std::cos(em) * j.sn + std::sin(em) * cd);
    cplx r3 = p * (std::cos(em) * j.sn - std::sin(em) * cd);
    cplx r4 = p * (std::sin(ep) * cd + std::cos(ep) * j.sn);
    cplx r8 = k * j.sn * cd;
    return mat4({r1, 0, 0, r8, 0, r2, 1, 0, 0, 1, r3, 0, r8, 0, 0, r4});
  };
  return m;
}

ModelSpec build_offdiag(const Params& ov) {
  ModelSpec m;
  m.id = "offdiag";
  m.n = 2;
  m.form = Form::quasi_difference;
  m.summary = "off-diagonal model with free h3, h7";
  m.params = with_preset("offdiag-default");
  merge(m.params, ov, m.id);
  attach(m, "offdiag-default", {"h3", "h7"});
  const Fn h3 = Fn::from(m.params, "h3"), h7 = Fn::from(m.params, "h7");
  m.eval_H = [=](cplx t) {
    cplx a = h3.f(t), b = h7.f(t);
    return mat4({0, 0, 0, b, 0, 0, a, 0, 0, -a, 0, 0, b, 0, 0, 0});
  };
  m.eval_dH = [=](cplx t) {
    cplx a = h3.df(t), b = h7.df(t);
    return mat4({0, 0, 0, b, 0, 0, a, 0, 0, -a, 0, 0, b, 0, 0, 0});
  };
  m.eval_R = [=](cplx u, cplx v) {
    cplx A = h3.F(u) - h3.F(v), B = h7.F(u) - h7.F(v);
    cplx ch = std::cosh(A), sh = std::sinh(A), sb = std::sin(B), cb = std::cos(B);
    return mat4({ch, 0, 0, sb, 0, -sh, cb, 0, 0, cb, sh, 0, sb, 0, 0, ch});
  };
  return m;
}

ModelSpec build_15v_c1(int model, const Params& ov) {
  static const int AB[4][2] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};
  ModelSpec m;
  m.id = "15v-c1-m" + std::to_string(model);
  m.n = 3;
  m.form = Form::non_difference;
  m.summary = "fifteen-vertex class 1, R = f d + p";
  m.params = {{"a", 0.7}, {"b", 1.3}, {"c", 0.4}};
  merge(m.params, ov, m.id);
  const cplx a = m.params["a"], b = m.params["b"], c = m.params["c"];
  const double A = AB[model - 1][0], B = AB[model - 1][1];
  m.eval_H = [=](cplx t) {
    return CMat(b * exp(-t) * unit(9, 2, 4) + a * exp(t) * unit(9, 7, 3) + c * unit(9, 8, 6) + A * unit(9, 5, 5) +
                unit(9, 6, 6) + B * unit(9, 9, 9));
  };
  m.eval_dH = [=](cplx t) { return CMat(-b * exp(-t) * unit(9, 2, 4) + a * exp(t) * unit(9, 7, 3)); };
  m.eval_R = [=](cplx u, cplx v) {
    cplx f = 2.0 * std::sinh((u - v) / 2.0);
    cplx eh = exp((u - v) / 2.0);
    CMat d = a * exp((u + v) / 2.0) * unit(9, 3, 3) + b * exp(-(u + v) / 2.0) * unit(9, 4, 4) +
             A * eh * unit(9, 5, 5) + c * eh * unit(9, 6, 6) + B * eh * unit(9, 9, 9);
    CMat p = permutation(3) - (1.0 - exp(u - v)) * unit(9, 8, 6);
    return CMat(f * d + p);
  };
  return m;
}

ModelSpec build_15v_c2_m5(const Params& ov) {
  ModelSpec m;
  m.id = "15v-c2-m5";
  m.n = 3;
  m.form = Form::non_difference;
  m.summary = "fifteen-vertex class 2 model 5, p = P";
  m.params = with_preset("15v-c2-default", {}, {"g1", "g2"});
  merge(m.params, ov, m.id);
  attach(m, "15v-c2-default", {"g1", "g2"});
  const Fn g1 = Fn::from(m.params, "g1"), g2 = Fn::from(m.params, "g2");
  m.eval_H = [=](cplx t) {
    cplx a = g1.f(t), b = g2.f(t);
    return CMat(-2.0 / 3.0 * (a - b) * exp(2.0 * (g1.F(t) - g2.F(t))) * unit(9, 4, 2) + 2.0 * (a - b) * unit(9, 5, 5) +
                2.0 * (2.0 * a + b) * unit(9, 9, 9));
  };
  m.eval_R = [=](cplx u, cplx v) {
    cplx G1p = g1.F(u) + g1.F(v), G1m = g1.F(u) - g1.F(v);
    cplx G2p = g2.F(u) + g2.F(v), G2m = g2.F(u) - g2.F(v);
    cplx Hp = G1p - G2p, Hm = G1m - G2m, F = 2.0 * G1m + G2m;
    cplx f = 2.0 * std::sinh(Hm);
    return CMat(f * (-1.0 / 3.0 * exp(Hp) * unit(9, 2, 2) + exp(Hm) * unit(9, 5, 5)) +
                2.0 * exp(F) * std::sinh(F) * unit(9, 9, 9) + permutation(3));
  };
  return m;
}

ModelSpec build_15v_c2_m6(int s, const Params& ov) {
  ModelSpec m;
  m.id = s > 0 ? "15v-c2-m6p" : "15v-c2-m6m";
  m.n = 3;
  m.form = Form::non_difference;
  m.summary = "fifteen-vertex class 2 model 6, branch-fixed I(theta)";
  m.params = with_preset("15v-c2-default", {{"a", 0.6}, {"b", 0.2}}, {"g"});
  merge(m.params, ov, m.id);
  attach(m, "15v-c2-default", {"g"});
  const Fn g = Fn::from(m.params, "g");
  const cplx a = m.params["a"], b = m.params["b"];
  const cplx mid = m.domain.at(0.5, 0.5);
  const int branch = std::sqrt(1.0 + b * exp(4.0 * g.F(mid))).real() > 1.0 ? 1 : 0;
  auto br = [=](cplx t) { return m6_branch(g.F(t), g.f(t), b, branch); };
  m.eval_H = [=](cplx t) {
    BranchI B = br(t);
    cplx q = g.f(t) + double(s) * B.Idot;
    cplx e = exp(2.0 * (g.F(t) + double(s) * B.I));
    return CMat(-2.0 / 3.0 * q * e * unit(9, 4, 2) - 2.0 / 3.0 * a * q * e * unit(9, 7, 3) + 2.0 * q * unit(9, 5, 5) +
                2.0 * (g.f(t) - double(s) * B.Idot) * unit(9, 9, 9));
  };
  m.eval_R = [=](cplx u, cplx v) {
    BranchI Bu = br(u), Bv = br(v);
    cplx Gm = g.F(u) - g.F(v), Gp = g.F(u) + g.F(v);
    cplx Im = Bu.I - Bv.I, Ip = Bu.I + Bv.I;
    double sd = s;
    cplx f = -2.0 / 3.0 * std::sinh(Gm + sd * Im);
    return CMat(f * (exp(Gp + sd * Ip) * (unit(9, 2, 2) + a * unit(9, 3, 3)) - 3.0 * exp(Gm + sd * Im) * unit(9, 5, 5)) +
                2.0 * exp(Gm - sd * Im) * std::sinh(Gm - sd * Im) * unit(9, 9, 9) + permutation(3));
  };
  return m;
}

CMat so4_K() {
  CMat K = CMat::Zero(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) K(i * 4 + i, j * 4 + j) = 1.0;
  return K;
}

CMat so4_eps() {
  CMat E = CMat::Zero(16, 16);
  int idx[4] = {0, 1, 2, 3};
  do {
    int inv = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (idx[x] > idx[y]) ++inv;
    double sg = inv % 2 ? -1.0 : 1.0;
    int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    // E_ik (x) E_jl
    E(i * 4 + j, k * 4 + l) += sg;
  } while (std::next_permutation(idx, idx + 4));
  return E;
}

ModelSpec build_so4(const Params& ov) {
  ModelSpec m;
  m.id = "so4";
  m.n = 4;
  m.form = Form::quasi_difference;
  m.summary = "so(4) chain with free h1, h2, h4";
  m.params = with_preset("so4-default");
  merge(m.params, ov, m.id);
  attach(m, "so4-default", {"h1", "h2", "h4"});
  const Fn h1 = Fn::from(m.params, "h1"), h2 = Fn::from(m.params, "h2"), h4 = Fn::from(m.params, "h4");
  const CMat P = permutation(4), K = so4_K(), Eps = so4_eps(), Id = identity(16);
  m.eval_H = [=](cplx t) { return CMat(h1.f(t) * Id + h2.f(t) * (P - K) + h4.f(t) * Eps); };
  m.eval_dH = [=](cplx t) { return CMat(h1.df(t) * Id + h2.df(t) * (P - K) + h4.df(t) * Eps); };
  m.eval_R = [=](cplx u, cplx v) {
    cplx H1 = h1.F(u) - h1.F(v), H2 = h2.F(u) - h2.F(v), H4 = h4.F(u) - h4.F(v);
    return CMat(exp(H1) * ((H2 - H4 * H4 / (H2 + 1.0)) * Id + P - (H2 * K + H4 * Eps) / (H2 + 1.0)));
  };
  return m;
}

using Factory = ModelSpec (*)(const Params&);

const std::vector<std::pair<std::string, Factory>>& registry() {
  static const std::vector<std::pair<std::string, Factory>> r = {
      {"6vA-xxz", build_6va},
      {"xxz-nondiff", build_xxz_nondiff},
      {"6vB", build_6vb},
      {"8vA", build_8va},
      {"8vB", build_8vb},
      {"offdiag", build_offdiag},
      {"15v-c1-m1", [](const Params& p) { return build_15v_c1(1, p); }},
      {"15v-c1-m2", [](const Params& p) { return build_15v_c1(2, p); }},
      {"15v-c1-m3", [](const Params& p) { return build_15v_c1(3, p); }},
      {"15v-c1-m4", [](const Params& p) { return build_15v_c1(4, p); }},
      {"15v-c2-m5", build_15v_c2_m5},
      {"15v-c2-m6p", [](const Params& p) { return build_15v_c2_m6(1, p); }},
      {"15v-c2-m6m", [](const Params& p) { return build_15v_c2_m6(-1, p); }},
      {"so4", build_so4},
      {"su22-m1", [](const Params& p) { return build_su22("su22-m1", p); }},
      {"su22-m2", [](const Params& p) { return build_su22("su22-m2", p); }},
      {"su22-m3", [](const Params& p) { return build_su22("su22-m3", p); }},
      {"su22-m4", [](const Params& p) { return build_su22("su22-m4", p); }},
      {"su22-m5", [](const Params& p) { return build_su22("su22-m5", p); }},
      {"su22-m6", [](const Params& p) { return build_su22("su22-m6", p); }},
      {"su22-m7-H", [](const Params& p) { return build_su22("su22-m7-H", p); }},
      {"su22-m8", [](const Params& p) { return build_su22("su22-m8", p); }},
      {"ghub", build_ghub},
  };
  return r;
}

bool finite(const CMat& M) { return M.allFinite(); }

}  // namespace

BranchI m6_branch(cplx G, cplx g, cplx b, int branch) {
  cplx y = std::sqrt(1.0 + b * exp(4.0 * G));
  cplx l1m = branch ? std::log(y - 1.0) + cplx(0.0, std::numbers::pi) : std::log(1.0 - y);
  cplx at = 0.5 * (std::log(1.0 + y) - l1m);
  return {y, -0.5 * at, g / y};
}

cplx su22_m5_x_integrand(cplx f, cplx fdot, cplx g, cplx h, cplx hdot) {
  return (f * hdot - h * fdot) / (h * (f * f - g * h));
}

const std::vector<std::string>& model_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (auto& [id, f] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

bool is_model(const std::string& id) {
  for (auto& x : model_ids())
    if (x == id) return true;
  return false;
}

ModelSpec make_model(const std::string& id, const Params& overrides) {
  for (auto& [name, factory] : registry()) {
    if (name != id) continue;
    ModelSpec m = factory(overrides);
    HFun h = m.eval_H;
    m.eval_H = [h, id](cplx t) {
      CMat H = h(t);
      if (!finite(H)) throw DomainViolation("model " + id + ": singular Hamiltonian at theta=" + format_complex(t, 6));
      return H;
    };
    if (m.eval_R) {
      RFun r = m.eval_R;
      m.eval_R = [r, id](cplx u, cplx v) {
        CMat R = r(u, v);
        if (!finite(R))
          throw DomainViolation("model " + id + ": singular R at (u,v)=(" + format_complex(u, 6) + ", " +
                                format_complex(v, 6) + ")");
        return R;
      };
    }
    return m;
  }
  throw UnknownModel("unknown model id '" + id + "'");
}

std::vector<ModelSpec> list_models() {
  std::vector<ModelSpec> v;
  for (auto& id : model_ids()) v.push_back(make_model(id));
  return v;
}

namespace {
void require_in(const ModelSpec& m, cplx z, const char* what) {
  if (!m.domain.contains(z))
    throw DomainViolation("model " + m.id + ": " + what + "=" + format_complex(z, 6) + " outside sampling box");
}
}  // namespace

CMat eval_H(const ModelSpec& m, cplx theta) {
  require_in(m, theta, "theta");
  return m.eval_H(theta);
}

CMat eval_R(const ModelSpec& m, cplx u, cplx v) {
  if (!m.has_R()) throw MissingR("model " + m.id + " has no R-matrix");
  require_in(m, u, "u");
  require_in(m, v, "v");
  return m.eval_R(u, v);
}

CMat eval_H(const std::string& id, cplx theta) { return eval_H(make_model(id), theta); }
CMat eval_R(const std::string& id, cplx u, cplx v) { return eval_R(make_model(id), u, v); }

}  // namespace ybelab
