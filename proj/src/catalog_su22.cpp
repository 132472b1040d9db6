#include "ybelab/catalog.hpp"

#include "ybelab/elliptic.hpp"
#include "ybelab/errors.hpp"

#include <cmath>

namespace ybelab {

namespace {

using std::exp;
using std::sqrt;

// phi1, phi2, psi1, psi2 -> 0, 1, 2, 3
constexpr int kPhi[2] = {0, 1};
constexpr int kPsi[2] = {2, 3};

int eps2(int a, int b) { return a == b ? 0 : (a < b ? 1 : -1); }

void merge(Params& p, const Params& ov, const std::string& id) {
  for (auto& [k, v] : ov) {
    if (!p.count(k)) throw UsageError("model " + id + " has no parameter '" + k + "'");
    p[k] = v;
  }
}

int sign_param(cplx v, const std::string& what) {
  if (v == 1.0) return 1;
  if (v == -1.0) return -1;
  throw UsageError(what + " must be +1 or -1");
}

Params su22_defaults(Params extra, const std::vector<std::string>& fns, const std::string& preset_id) {
  for (auto& [name, fn] : preset(preset_id).fns)
    for (auto& want : fns)
      if (want == name) fn.store(extra, name);
  return extra;
}

}  // namespace

CMat su22_operator(const std::array<cplx, 10>& c) {
  CMat M = CMat::Zero(16, 16);
  auto idx = [](int i, int j) { return 4 * i + j; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      int col = idx(kPhi[a], kPhi[b]);
      M(col, col) += c[0];
      M(idx(kPhi[b], kPhi[a]), col) += c[1];
      for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) M(idx(kPsi[al], kPsi[be]), col) += c[2] * double(eps2(a, b) * eps2(al, be));
    }
  for (int a = 0; a < 2; ++a)
    for (int be = 0; be < 2; ++be) {
      int col = idx(kPhi[a], kPsi[be]);
      M(col, col) += c[3];
      M(idx(kPsi[be], kPhi[a]), col) += c[4];
      col = idx(kPsi[be], kPhi[a]);
      M(col, col) += c[5];
      M(idx(kPhi[a], kPsi[be]), col) += c[6];
    }
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be) {
      int col = idx(kPsi[al], kPsi[be]);
      M(col, col) += c[7];
      M(idx(kPsi[be], kPsi[al]), col) += c[8];
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) M(idx(kPhi[a], kPhi[b]), col) += c[9] * double(eps2(a, b) * eps2(al, be));
    }
  return M;
}

CMat su22_table_H(int model, const Su22TableArgs& x) {
  const cplx f = x.f, g = x.g, h = x.h, c = x.c, c1 = x.c1, c2 = x.c2, t = x.theta;
  const double s = x.s;
  const cplx e2F = exp(2.0 * x.F);
  switch (model) {
    case 1: {
      cplx q = sqrt((t + 1.0) / (t - 1.0));
      return su22_operator({1.0 / (2.0 * (t * t - 1.0)), 0.5, 0.0, t / (1.0 - t * t), s * q / 2.0, t / (t * t - 1.0),
                            s / (2.0 * q), 1.0 / (2.0 * (1.0 - t * t)), -0.5, c});
    }
    case 2: return su22_operator({f, h, 0.0, g, c * h / e2F, -g, h * e2F / c, -f, s * h, 0.0});
    case 3: return su22_operator({f, s * h, 0.0, g, c * h / e2F, -g, h * e2F / c, h - f, 0.0, 0.0});
    case 4:
      return su22_operator({(c1 + 2.0) * f, 0.0, 0.0, c1 * (f - g), c1 * (c1 + 2.0) * g / (c2 * e2F),
                            (c1 + 2.0) * (f - g), c2 * e2F * g, c1 * f, 0.0, 0.0});
    case 5: return su22_operator({f, 0.0, 0.0, 0.0, g, 0.0, h, -f, 0.0, 0.0});
    case 6:
      return su22_operator({f - h, 0.0, 0.0, f + h, 2.0 * h / (c * e2F), h - f, 2.0 * c * h * e2F, h - f, s * 2.0 * h, 0.0});
    default: throw UsageError("su22 table model must be 1..6");
  }
}

std::array<cplx, 10> su22_m7_entries(cplx theta, cplx c1, cplx c2, cplx c3, int sigma) {
  const cplx z = 0.5 * I_unit * c1 * (theta + c2);
  const cplx m = 8.0 * c3 / (c1 * c1);
  const double sg = sigma;
  cplx ns = jacobi(JacobiKind::ns, z, m);
  cplx nc = jacobi(JacobiKind::nc, z, m);
  cplx ds = jacobi(JacobiKind::ds, z, m);
  cplx h9 = -0.25 * c1 * ns * ns;
  cplx hm = I_unit * sg / 2.0 * c1 * ds;
  cplx hp = sg / 2.0 * c1 * nc * (1.0 - ns * ns);
  cplx h5 = (hp + hm) / 2.0, h7 = (hp - hm) / 2.0;
  cplx h8 = (h5 + h7) * (h5 + h7) / (4.0 * h9) - h9;
  cplx h3 = h5 * h7 - h9 * h9;
  return {-h8, -h9, h3, 0.0, h5, 0.0, h7, h8, h9, 1.0};
}

ModelSpec build_su22(const std::string& id, const Params& ov) {
  ModelSpec m;
  m.id = id;
  m.n = 4;
  m.form = Form::non_difference;

  if (id == "su22-m1") {
    m.summary = "su(2)+su(2) model 1, algebraic in theta";
    m.params = {{"c", 0.7}, {"s", 1.0}};
    merge(m.params, ov, id);
    m.domain = {1.2, 1.8, -0.05, 0.05};
    const cplx c = m.params["c"];
    const int s = sign_param(m.params["s"], "s");
    auto q = [](cplx t) { return sqrt((t + 1.0) / (t - 1.0)); };
    m.eval_H = [=](cplx t) {
      Su22TableArgs a;
      a.c = c;
      a.theta = t;
      a.s = s;
      return su22_table_H(1, a);
    };
    m.eval_R = [=](cplx u, cplx v) {
      cplx r5 = sqrt(v * v - 1.0) / sqrt(u * u - 1.0);
      cplx r7 = 1.0 / r5, r10 = c * (v - u);
      cplx r2 = sqrt(1.0 + v) / (sqrt(r5) * sqrt(1.0 + u));
      cplx r1 = (u - v) / 2.0 * r2;
      cplx r4 = double(s) * r1 * q(u), r6 = double(s) * r1 / q(v);
      cplx r9 = r2 * q(u) / q(v), r8 = (v - u) / 2.0 * r9;
      return su22_operator({r1, r2, 0.0, r4, r5, r6, r7, r8, r9, r10});
    };
    return m;
  }

  if (id == "su22-m2" || id == "su22-m3") {
    const bool two = id == "su22-m2";
    m.summary = two ? "su(2)+su(2) model 2" : "su(2)+su(2) model 3";
    m.params = su22_defaults({{"c", 0.7}, {"s", 1.0}}, {"f", "g", "h"}, "su22-default");
    merge(m.params, ov, id);
    m.preset = "su22-default";
    for (auto n : {"f", "g", "h"}) m.functions.emplace_back(n, Fn::from(m.params, n));
    const Fn f = Fn::from(m.params, "f"), g = Fn::from(m.params, "g"), h = Fn::from(m.params, "h");
    const cplx c = m.params["c"];
    const int s = sign_param(m.params["s"], "s");
    m.eval_H = [=](cplx t) {
      Su22TableArgs a;
      a.f = f.f(t);
      a.g = g.f(t);
      a.h = h.f(t);
      a.F = f.F(t);
      a.c = c;
      a.s = s;
      return su22_table_H(two ? 2 : 3, a);
    };
    m.eval_R = [=](cplx u, cplx v) {
      cplx Hm = h.F(u) - h.F(v), Fm = f.F(u) - f.F(v), Fp = f.F(u) + f.F(v), Gm = g.F(u) - g.F(v);
      double sd = s;
      if (two)
        return su22_operator({Hm * exp(Fm), exp(Fm), 0.0, c * Hm * exp(-Fp), exp(Gm), Hm * exp(Fp) / c, exp(-Gm),
                              sd * Hm * exp(-Fm), exp(-Fm), 0.0});
      return su22_operator({sd * Hm * exp(Fm), exp(Fm), 0.0, c * Hm * exp(-Fp), exp(Gm), Hm * exp(Fp) / c, exp(-Gm), 0.0,
                            (Hm + 1.0) * exp(-Fm), 0.0});
    };
    return m;
  }

  if (id == "su22-m4") {
    m.summary = "su(2)+su(2) model 4";
    m.params = su22_defaults({{"c1", 0.8}, {"c2", 1.3}}, {"f", "g"}, "su22-default");
    merge(m.params, ov, id);
    m.preset = "su22-default";
    for (auto n : {"f", "g"}) m.functions.emplace_back(n, Fn::from(m.params, n));
    const Fn f = Fn::from(m.params, "f"), g = Fn::from(m.params, "g");
    const cplx c1 = m.params["c1"], c2 = m.params["c2"];
    m.eval_H = [=](cplx t) {
      Su22TableArgs a;
      a.f = f.f(t);
      a.g = g.f(t);
      a.F = f.F(t);
      a.c1 = c1;
      a.c2 = c2;
      return su22_table_H(4, a);
    };
    m.eval_R = [=](cplx u, cplx v) {
      cplx Fm = f.F(u) - f.F(v), Fp = f.F(u) + f.F(v), Gm = g.F(u) - g.F(v);
      cplx r7 = exp((2.0 + c1) * (Fm - Gm));
      cplx r2 = ((c1 + 2.0) * exp(2.0 * Gm) - c1) * r7 / 2.0;
      cplx r4 = c1 * (c1 + 2.0) * (exp(2.0 * Gm) - 1.0) * r7 / (2.0 * c2 * exp(2.0 * f.F(u)));
      cplx r5 = exp(c1 * (Fm - Gm));
      cplx r6 = c2 * c2 * exp(2.0 * Fp) * r4 / (c1 * (c1 + 2.0));
      cplx r9 = exp(-2.0 * Fm) * r2;
      return su22_operator({0.0, r2, 0.0, r4, r5, r6, r7, 0.0, r9, 0.0});
    };
    return m;
  }

  if (id == "su22-m5") {
    m.summary = "su(2)+su(2) model 5, g fixed by f and h";
    m.params = su22_defaults({}, {"f", "h"}, "su22-m5-default");
    merge(m.params, ov, id);
    m.preset = "su22-m5-default";
    for (auto n : {"f", "h"}) m.functions.emplace_back(n, Fn::from(m.params, n));
    const Fn f = Fn::from(m.params, "f"), h = Fn::from(m.params, "h");
    auto gfun = [=](cplx t) {
      cplx ff = f.f(t), hh = h.f(t);
      return ff * ff / hh + (f.df(t) * hh - ff * h.df(t)) / (hh * hh);
    };
    m.eval_H = [=](cplx t) {
      Su22TableArgs a;
      a.f = f.f(t);
      a.g = gfun(t);
      a.h = h.f(t);
      return su22_table_H(5, a);
    };
    m.eval_R = [=](cplx u, cplx v) {
      cplx Hm = h.F(u) - h.F(v);
      cplx au = f.f(u) / h.f(u), av = f.f(v) / h.f(v);
      cplx r2 = 1.0 + Hm * av, r9 = 1.0 - Hm * au;
      cplx r4 = (au - av) + Hm * au * av;
      return su22_operator({0.0, r2, 0.0, r4, 1.0, Hm, 1.0, 0.0, r9, 0.0});
    };
    return m;
  }

  if (id == "su22-m6") {
    m.summary = "su(2)+su(2) model 6";
    m.params = su22_defaults({{"c", 0.7}, {"s", 1.0}}, {"f", "h"}, "su22-default");
    merge(m.params, ov, id);
    m.preset = "su22-default";
    for (auto n : {"f", "h"}) m.functions.emplace_back(n, Fn::from(m.params, n));
    const Fn f = Fn::from(m.params, "f"), h = Fn::from(m.params, "h");
    const cplx c = m.params["c"];
    const int s = sign_param(m.params["s"], "s");
    m.eval_H = [=](cplx t) {
      Su22TableArgs a;
      a.f = f.f(t);
      a.h = h.f(t);
      a.F = f.F(t);
      a.c = c;
      a.s = s;
      return su22_table_H(6, a);
    };
    m.eval_R = [=](cplx u, cplx v) {
      cplx Hm = h.F(u) - h.F(v), Fm = f.F(u) - f.F(v), Fp = f.F(u) + f.F(v);
      double sd = s;
      return su22_operator({0.0, exp(Fm + Hm) * (1.0 - 2.0 * Hm), 0.0, 2.0 * Hm * exp(Hm) / (c * exp(Fp)), exp(Fm + Hm),
                            2.0 * c * Hm * exp(Fp + Hm), exp(Hm - Fm), sd * 2.0 * Hm * exp(Hm - Fm), exp(Hm - Fm), 0.0});
    };
    return m;
  }

  if (id == "su22-m7-H") {
    m.summary = "su(2)+su(2) model 7 in elliptic parameterization; Hamiltonian only";
    m.params = {{"c1", 1.0}, {"c2", 0.3}, {"c3", 0.05}, {"sigma", 1.0}};
    merge(m.params, ov, id);
    const cplx c1 = m.params["c1"], c2 = m.params["c2"], c3 = m.params["c3"];
    const int sg = sign_param(m.params["sigma"], "sigma");
    m.eval_H = [=](cplx t) { return su22_operator(su22_m7_entries(t, c1, c2, c3, sg)); };
    m.eval_dH = [=](cplx t) {
      auto h = su22_m7_entries(t, c1, c2, c3, sg);
      cplx h5 = h[4], h7 = h[6], h9 = h[8], sp = h5 + h7;
      cplx d5 = 2.0 * h7 * h9 - h5 * sp * sp / (2.0 * h9);
      cplx d7 = h7 * sp * sp / (2.0 * h9) - 2.0 * h5 * h9;
      cplx d9 = h7 * h7 - h5 * h5;
      cplx d3 = d5 * h7 + h5 * d7 - 2.0 * h9 * d9;
      cplx d8 = sp * (d5 + d7) / (2.0 * h9) - sp * sp * d9 / (4.0 * h9 * h9) - d9;
      return su22_operator({-d8, -d9, d3, 0.0, d5, 0.0, d7, d8, d9, 0.0});
    };
    return m;
  }

  if (id == "su22-m8") {
    m.summary = "su(2)+su(2) model 8, limit of model 7";
    m.params = {{"c2", 0.6}, {"c3", 1.1}, {"sigma", 1.0}};
    merge(m.params, ov, id);
    const cplx c2 = m.params["c2"], c3 = m.params["c3"];
    const int sg = sign_param(m.params["sigma"], "sigma");
    m.eval_H = [=](cplx t) {
      cplx E = exp(c3 * t), hp = double(sg) * 4.0 * c2 * E / c3, hm = -double(sg) * c3 / 2.0;
      return su22_operator({0.0, -2.0 * c2 * E / c3, -c3 * c3 / 16.0, 0.0, (hp + hm) / 2.0, 0.0, (hp - hm) / 2.0, 0.0,
                            2.0 * c2 * E / c3, 1.0});
    };
    m.eval_dH = [=](cplx t) {
      cplx dE = c3 * exp(c3 * t), dhp = double(sg) * 4.0 * c2 * dE / c3;
      return su22_operator({0.0, -2.0 * c2 * dE / c3, 0.0, 0.0, dhp / 2.0, 0.0, dhp / 2.0, 0.0, 2.0 * c2 * dE / c3, 0.0});
    };
    m.eval_R = [=](cplx u, cplx v) {
      double sd = sg;
      cplx A = exp(c3 * u / 2.0) - exp(c3 * v / 2.0);
      cplx r1 = exp(-c3 * (u + v) / 4.0) * (c3 * c3 * A * A - 16.0 * c2 * exp(c3 * (u + v)) * std::sinh(c3 * (u - v) / 2.0)) /
                (2.0 * c3 * c3 * (exp(c3 * u / 2.0) + exp(c3 * v / 2.0)));
      cplx r2 = 1.0 / std::cosh(c3 * (u - v) / 4.0);
      cplx r3 = c3 / 4.0 * std::tanh(c3 * (u - v) / 4.0);
      cplx r9 = r2, r10 = -16.0 * r3 / (c3 * c3);
      cplx r4 = -exp(-c3 * (u + v) / 4.0) * A * (c3 * c3 - 8.0 * c2 * exp(c3 * (u + v) / 2.0)) / (2.0 * c3 * c3 * sd);
      cplx r6 = 8.0 * c2 * exp(c3 * (u + v) / 4.0) * A / (c3 * c3 * sd) - r4;
      cplx r8 = (r4 + r6) * sd + r1;
      return su22_operator({r1, r2, r3, r4, 1.0, r6, 1.0, r8, r9, r10});
    };
    return m;
  }

  throw UnknownModel("unknown model id '" + id + "'");
}

ModelSpec build_ghub(const Params& ov) {
  ModelSpec m;
  m.id = "ghub";
  m.n = 4;
  m.form = Form::difference;
  m.summary = "generalized Hubbard model, fermion-number preserving";
  m.params = {{"lambda", 0.6}, {"xi", 1.3}, {"tau", 0.8}};
  merge(m.params, ov, m.id);
  const cplx lam = m.params["lambda"], xi = m.params["xi"], tau = m.params["tau"];
  if (lam == 0.0 || xi == 0.0 || tau == 0.0) throw DomainViolation("ghub: lambda, xi, tau must be nonzero");
  const cplx rho1 = I_unit * sqrt(lam * lam - 1.0), rho2 = (1.0 - lam * lam) / xi;
  m.eval_H = [=](cplx) {
    CMat M = CMat::Zero(16, 16);
    auto s = [&](int r, int c, cplx v) { M(r - 1, c - 1) = v; };
    s(1, 1, -lam); s(2, 2, lam); s(2, 12, rho2); s(2, 15, -rho2); s(3, 9, rho1); s(4, 13, rho1);
    s(5, 5, lam); s(5, 12, -rho2); s(5, 15, rho2); s(6, 6, -lam); s(7, 10, rho1); s(8, 14, rho1);
    s(9, 3, -rho1); s(10, 7, -rho1); s(11, 16, tau * lam); s(12, 2, -xi); s(12, 5, xi); s(12, 15, -lam);
    s(13, 4, -rho1); s(14, 8, -rho1); s(15, 2, xi); s(15, 5, -xi); s(15, 12, -lam); s(16, 11, lam / tau);
    return M;
  };
  m.eval_dH = [](cplx) { return CMat(CMat::Zero(16, 16)); };
  m.eval_R = [=](cplx u, cplx v) {
    cplx x = u - v;
    cplx sh = std::sinh(x), ch = std::cosh(x), th = std::tanh(x), D = 1.0 - lam * th;
    cplx r1 = ch - lam * sh, r2 = (1.0 - lam * lam) * sh * th / D, r3 = I_unit * sqrt(lam * lam - 1.0) * sh, r4 = -r3;
    cplx r5 = ch, r6 = -sh * (lam - th) / D, r7 = 1.0, r10 = 1.0;
    cplx r8 = (1.0 - lam * lam) * th / (xi * D), r9 = -xi * th / D, r11 = 1.0 / ch / D;
    cplx r12 = (1.0 / ch) * (2.0 - lam * std::sinh(2.0 * x) + 2.0 * lam * lam * sh * sh) / (2.0 * D);
    cplx r13 = tau * lam * sh, r14 = lam * sh / tau;
    CMat M = CMat::Zero(16, 16);
    auto s = [&](int r, int c, cplx v) { M(r - 1, c - 1) = v; };
    s(1, 1, r1); s(2, 2, r2); s(2, 5, r11); s(2, 12, -r8); s(2, 15, r8); s(3, 3, r4); s(3, 9, r10); s(4, 4, r4);
    s(4, 13, r10); s(5, 2, r11); s(5, 5, r2); s(5, 12, r8); s(5, 15, -r8); s(6, 6, r1); s(7, 7, r4); s(7, 10, r10);
    s(8, 8, r4); s(8, 14, r10); s(9, 3, r7); s(9, 9, r3); s(10, 7, r7); s(10, 10, r3); s(11, 11, r5); s(11, 16, r13);
    s(12, 2, -r9); s(12, 5, r9); s(12, 12, r6); s(12, 15, r12); s(13, 4, r7); s(13, 13, r3); s(14, 8, r7);
    s(14, 14, r3); s(15, 2, r9); s(15, 5, -r9); s(15, 12, r12); s(15, 15, r6); s(16, 11, r14); s(16, 16, r5);
    return M;
  };
  return m;
}

}  // namespace ybelab
