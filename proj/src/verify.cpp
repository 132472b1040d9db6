#include "ybelab/verify.hpp"

#include "ybelab/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

namespace ybelab {

double ybe_residual(const RFun& R, int n, cplx u, cplx v, cplx w) {
  CMat a = op12(R(u, v), n), b = op13(R(u, w), n), c = op23(R(v, w), n);
  CMat lhs = a * b * c, rhs = c * b * a;
  double scale = std::max(max_norm(lhs), max_norm(rhs));
  double diff = max_norm(lhs - rhs);
  return scale > 0.0 ? diff / scale : diff;
}

Coefficient regularity(const RFun& R, int n, cplx u) {
  CMat P = permutation(n), r = R(u, u);
  cplx alpha = (P * r).trace() / double(n * n);
  return {alpha, max_norm(r - alpha * P)};
}

Coefficient braiding(const RFun& R, int n, cplx u, cplx v) {
  CMat P = permutation(n);
  CMat M = R(u, v) * P * R(v, u) * P;
  cplx beta = M.trace() / double(n * n);
  return {beta, max_norm(M - beta * identity(n * n))};
}

CMat recover_H(const RFun& R, int n, cplx theta) {
  CMat P = permutation(n);
  cplx alpha = (P * R(theta, theta)).trace() / double(n * n);
  if (std::abs(alpha) < 1e-300) throw DomainViolation("recover_H: vanishing regularity coefficient");
  return P * central_diff_first(R, theta, theta) / alpha;
}

Recovery compare_H(const CMat& recovered, const CMat& expected, double tol) {
  CMat D = recovered - expected;
  double exact = max_norm(D);
  if (exact <= tol) return {exact, "exact", 0.0, recovered};
  cplx s = D.trace() / double(D.rows());
  double mod = max_norm(D - s * identity(static_cast<int>(D.rows())));
  if (mod < exact) return {mod, "modulo identity", s, recovered};
  return {exact, "exact", 0.0, recovered};
}

Recovery hamiltonian_recovery(const ModelSpec& m, cplx theta, double tol) {
  if (!m.has_R()) throw MissingR("model " + m.id + " has no R-matrix");
  return compare_H(recover_H(m.eval_R, m.n, theta), m.eval_H(theta), tol);
}

double expansion_check(const RFun& R, const HFun& H, int n, cplx u, cplx v) {
  cplx d = u - v;
  if (d == 0.0) return regularity(R, n, u).residual;
  cplx alpha = regularity(R, n, v).value;
  CMat P = permutation(n);
  CMat approx = P * (identity(n * n) + d * H((u + v) / 2.0));
  return max_norm(R(u, v) / alpha - approx) / std::norm(d);
}

double expansion_check(const ModelSpec& m, cplx u, cplx v) {
  if (!m.has_R()) throw MissingR("model " + m.id + " has no R-matrix");
  return expansion_check(m.eval_R, m.eval_H, m.n, u, v);
}

namespace {
double relative(const CMat& lhs, const CMat& rhs) {
  double scale = std::max(max_norm(lhs), max_norm(rhs));
  double diff = max_norm(lhs - rhs);
  return scale > 0.0 ? diff / scale : diff;
}
}  // namespace

std::pair<double, double> sutherland_residual(const RFun& R, const HFun& H, int n, cplx u, cplx v) {
  CMat r = R(u, v);
  CMat rd = central_diff_first(R, u, v);
  CMat rp = central_diff_second(R, u, v);
  CMat R12 = op12(r, n), R13 = op13(r, n), R23 = op23(r, n);
  CMat D12 = op12(rp, n), D13d = op13(rd, n), D23d = op23(rd, n), D13p = op13(rp, n);
  CMat H12 = op12(H(u), n), H23 = op23(H(v), n);
  double a = relative(commutator(R13 * R23, H12), D13d * R23 - R13 * D23d);
  double b = relative(commutator(R13 * R12, H23), R13 * D12 - D13p * R12);
  return {a, b};
}

std::pair<double, double> sutherland_residual(const ModelSpec& m, cplx u, cplx v) {
  if (!m.has_R()) throw MissingR("model " + m.id + " has no R-matrix");
  return sutherland_residual(m.eval_R, m.eval_H, m.n, u, v);
}

double hermiticity_residual(const CMat& H) { return max_norm(H - H.adjoint()); }

double normality_residual(const CMat& H, int n, int L) {
  CMat Q = charge_Q2(H, n, L);
  return max_norm(commutator(Q, Q.adjoint()));
}

std::vector<ConditionCase> condition_cases(ConditionTable table) {
  const cplx c = std::exp(cplx(0.5, 0.2));
  const cplx Fi(0.0, 0.37);
  const cplx c2 = 0.6 * std::exp(cplx(0.0, 0.4));
  const double c1 = 0.8;
  const double F4 = 0.25 * std::log(c1 * (c1 + 2.0) / std::norm(c2));
  std::vector<ConditionCase> v;
  auto add = [&](int model, std::string label, Su22TableArgs a, bool ok) { v.push_back({model, std::move(label), a, ok}); };
  Su22TableArgs a;
  if (table == ConditionTable::hermitian) {
    a = {};
    a.c = 0.0;
    a.theta = 0.0;
    add(1, "theta=0, c=0", a, true);
    a.c = 0.7;
    add(1, "c!=0", a, false);
    for (int model : {2, 3}) {
      a = {};
      a.f = 0.3;
      a.g = 0.7;
      a.h = 1.1;
      a.c = c;
      a.F = 0.25 + Fi;
      add(model, "exp(4 Re F)=|c|^2, f,g,h real", a, true);
      a.F = 0.35 + Fi;
      add(model, "exp(4 Re F)!=|c|^2", a, false);
    }
    a = {};
    a.f = 0.3;
    a.g = 0.7;
    a.c1 = c1;
    a.c2 = c2;
    a.F = F4 + cplx(0.0, 0.3);
    add(4, "exp(4 Re F)=c1(c1+2)/|c2|^2, c1,f,g real", a, true);
    a.F = F4 + 0.05;
    add(4, "exp(4 Re F) off the condition", a, false);
    a = {};
    a.f = 0.3;
    a.h = cplx(0.4, 0.9);
    a.g = std::conj(a.h);
    add(5, "g=conj(h), f real", a, true);
    a.g = a.h;
    add(5, "g=h complex", a, false);
    a = {};
    a.f = 0.3;
    a.h = 1.1;
    a.c = c;
    a.F = -0.25 + Fi;
    add(6, "exp(-4 Re F)=|c|^2, f,h real", a, true);
    a.F = 0.25;
    add(6, "exp(-4 Re F)!=|c|^2", a, false);
    return v;
  }
  const cplx f(0.3, 0.2), g(-0.5, 0.7), h(0.9, -0.4);
  a = {};
  a.c = 0.0;
  a.theta = cplx(0.0, 0.5);
  add(1, "Re theta=0, c=0", a, true);
  a.c = 0.5;
  add(1, "c!=0", a, false);
  a.c = 0.0;
  a.theta = cplx(0.5, 0.5);
  add(1, "Re theta!=0", a, false);
  for (int model : {2, 3}) {
    a = {};
    a.f = f;
    a.g = g;
    a.h = h;
    a.c = c;
    a.F = 0.25 + Fi;
    add(model, "exp(4 Re F)=|c|^2", a, true);
    a.F = 0.4;
    add(model, "exp(4 Re F)!=|c|^2", a, false);
  }
  a = {};
  a.f = f;
  a.g = g;
  a.c2 = c2;
  const double ci = 0.7;
  a.c1 = cplx(-1.0, ci);
  a.F = 0.25 * std::log((ci * ci + 1.0) / std::norm(c2)) + cplx(0.0, 0.2);
  add(4, "exp(4 Re F)=(Im c1^2+1)/|c2|^2, Re c1=-1", a, true);
  a.c1 = c1;
  a.F = F4 + cplx(0.0, 0.2);
  add(4, "exp(4 Re F)=c1(c1+2)/|c2|^2, Im c1=0", a, true);
  a.c1 = -1.0;
  a.F = cplx(0.6, -0.3);
  add(4, "c1=-1", a, true);
  a.c1 = c1;
  a.F = F4 + 0.3;
  add(4, "exp(4 Re F) off the condition", a, false);
  a = {};
  a.f = f;
  a.g = g;
  a.h = h;
  a.F = cplx(0.2, 0.1);
  add(5, "any f,g,h", a, true);
  a = {};
  a.f = f;
  a.h = h;
  a.c = c;
  a.F = -0.25 + Fi;
  add(6, "exp(-4 Re F)=|c|^2", a, true);
  a.F = 0.25;
  add(6, "exp(-4 Re F)!=|c|^2", a, false);
  return v;
}

int su22_table_model(const std::string& id) {
  for (int k = 1; k <= 6; ++k)
    if (id == "su22-m" + std::to_string(k)) return k;
  return 0;
}

bool has_condition_set(const std::string& id) { return su22_table_model(id) != 0; }

double hermiticity_check(const ConditionCase& c) { return hermiticity_residual(su22_table_H(c.model, c.args)); }

double normality_check(const ConditionCase& c, int L) { return normality_residual(su22_table_H(c.model, c.args), 4, L); }

std::vector<std::vector<cplx>> sample_points(const Box& box, int count, int arity, std::uint64_t seed) {
  const int d = 2 * arity;
  // phi_d: unique positive root of x^(d+1) = x + 1
  double phi = 2.0;
  for (int k = 0; k < 64; ++k) phi = std::pow(1.0 + phi, 1.0 / (d + 1));
  std::vector<double> alpha(d), shift(d);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < d; ++k) {
    alpha[k] = std::fmod(std::pow(1.0 / phi, k + 1), 1.0);
    shift[k] = double(rng() >> 11) * 0x1.0p-53;
  }
  std::vector<std::vector<cplx>> pts;
  for (int i = 0; i < count; ++i) {
    std::vector<cplx> p;
    for (int a = 0; a < arity; ++a) {
      double x = std::fmod(shift[2 * a] + (i + 1) * alpha[2 * a], 1.0);
      double y = std::fmod(shift[2 * a + 1] + (i + 1) * alpha[2 * a + 1], 1.0);
      p.push_back(box.at(x, y));
    }
    pts.push_back(p);
  }
  return pts;
}

bool VerificationReport::pass() const {
  for (auto& c : checks)
    if (!c.skipped && !c.pass) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool is_check(const std::string& name) {
  for (auto& c : check_names())
    if (c == name) return true;
  return false;
}

namespace {

Box inner(const Box& b) {
  const double margin = 2e-3 * std::max({1.0, std::abs(b.re_lo), std::abs(b.re_hi)});
  return {b.re_lo + margin, b.re_hi - margin, b.im_lo, b.im_hi};
}

std::string point_text(const std::vector<cplx>& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + format_complex(p[k], 6);
  return s + ")";
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

CheckResult skipped(const std::string& name, const std::string& why) {
  CheckResult r;
  r.name = name;
  r.skipped = true;
  r.note = why;
  return r;
}

bool needs_R(const std::string& name) {
  return name == "ybe" || name == "regularity" || name == "braiding" || name == "hamiltonian" || name == "expansion" ||
         name == "sutherland" || name == "transfer";
}

}  // namespace

CheckResult run_check(const std::string& name, const ModelSpec& m, std::uint64_t seed, int samples,
                      const Tolerances& tol) {
  if (!is_check(name)) throw UsageError("unknown check '" + name + "'");
  if (needs_R(name) && !m.has_R()) return skipped(name, "H-only model");
  if ((name == "hermiticity" || name == "normality") && !has_condition_set(m.id))
    return skipped(name, "no condition table for this model");

  CheckResult r;
  r.name = name;
  const int N = std::max(1, samples);
  const Box box = inner(m.domain);
  auto track = [&](double x) {
    if (!std::isfinite(x)) x = INFINITY;
    if (x >= r.residual && !r.samples.empty()) r.worst = r.samples.back();
    r.residual = std::max(r.residual, x);
  };
  try {
    if (name == "ybe") {
      r.tol = tol.ybe;
      for (auto& p : sample_points(box, N, 3, seed)) {
        r.samples.push_back(point_text(p));
        track(ybe_residual(m.eval_R, m.n, p[0], p[1], p[2]));
      }
    } else if (name == "regularity") {
      r.tol = tol.regularity;
      for (auto& p : sample_points(box, std::max(1, N / 2), 1, seed)) {
        r.samples.push_back(point_text(p));
        Coefficient c = regularity(m.eval_R, m.n, p[0]);
        track(c.residual);
        if (r.note.empty()) r.note = "alpha=" + format_complex(c.value, 10);
      }
    } else if (name == "braiding") {
      r.tol = tol.braiding;
      for (auto& p : sample_points(box, std::max(1, N / 2), 2, seed)) {
        r.samples.push_back(point_text(p));
        Coefficient c = braiding(m.eval_R, m.n, p[0], p[1]);
        track(c.residual);
        if (r.note.empty()) r.note = "beta=" + format_complex(c.value, 10);
      }
    } else if (name == "hamiltonian") {
      r.tol = tol.recovery;
      std::string policy = "exact";
      for (auto& p : sample_points(box, std::min(N, 3), 1, seed)) {
        r.samples.push_back(point_text(p));
        Recovery rec = hamiltonian_recovery(m, p[0], tol.recovery);
        track(rec.residual);
        if (rec.policy != "exact") policy = rec.policy;
      }
      r.note = "comparison=" + policy;
    } else if (name == "expansion") {
      r.tol = m.curvature;
      for (auto& p : sample_points(box, std::min(N, 3), 1, seed)) {
        cplx v = p[0] - 1e-3;
        r.samples.push_back(point_text({p[0], v}));
        track(expansion_check(m, p[0], v));
      }
    } else if (name == "sutherland") {
      r.tol = tol.sutherland;
      for (auto& p : sample_points(box, std::min(N, 3), 2, seed)) {
        r.samples.push_back(point_text(p));
        auto [a, b] = sutherland_residual(m, p[0], p[1]);
        track(std::max(a, b));
      }
    } else if (name == "boost") {
      r.tol = tol.boost;
      for (auto& p : sample_points(box, std::min(N, 5), 1, seed)) {
        r.samples.push_back(point_text(p));
        track(integrability_residual(m, p[0]));
      }
      r.note = m.has_dH() ? "dH analytic" : "dH finite difference";
    } else if (name == "transfer") {
      r.tol = tol.transfer;
      for (int L : {2, 3}) {
        for (auto& p : sample_points(box, std::min(N, 2), 3, seed + L)) {
          r.samples.push_back("L=" + std::to_string(L) + point_text(p));
          track(transfer_commutation(m, p[0], p[1], p[2], L));
        }
      }
    } else if (name == "hermiticity" || name == "normality") {
      const bool herm = name == "hermiticity";
      r.tol = herm ? tol.hermiticity : tol.normality;
      const int model = su22_table_model(m.id);
      double worst_violation = INFINITY;
      for (auto& c : condition_cases(herm ? ConditionTable::hermitian : ConditionTable::normal)) {
        if (c.model != model) continue;
        r.samples.push_back((c.satisfied ? "holds: " : "violated: ") + c.label);
        double x = herm ? hermiticity_check(c) : normality_check(c);
        if (c.satisfied)
          track(x);
        else
          worst_violation = std::min(worst_violation, x);
      }
      if (std::isfinite(worst_violation)) {
        r.note = "min violated residual=" + sci(worst_violation);
        if (worst_violation < tol.violation_floor) r.pass = false;
      }
    }
  } catch (const DomainViolation& e) {
    r.domain_error = true;
    r.pass = false;
    r.residual = INFINITY;
    r.note = e.what();
    if (!r.samples.empty()) r.worst = r.samples.back();
    return r;
  }
  r.pass = r.pass && r.residual <= r.tol;
  return r;
}

VerificationReport run_suite(const ModelSpec& m, std::uint64_t seed, int samples, const Tolerances& tol) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.model = m.id;
  rep.seed = seed;
  rep.sample_count = samples;
  for (auto& name : check_names()) rep.checks.push_back(run_check(name, m, seed, samples, tol));
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace ybelab
