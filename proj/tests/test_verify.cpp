#include <doctest.h>

#include "ybelab/errors.hpp"
#include "ybelab/report.hpp"
#include "ybelab/verify.hpp"

using namespace ybelab;

namespace {

RFun perm_R(int n) {
  return [n](cplx, cplx) { return permutation(n); };
}

ModelSpec with_R_offset(ModelSpec m, const CMat& E) {
  RFun R = m.eval_R;
  m.eval_R = [R, E](cplx u, cplx v) { return CMat(R(u, v) + E); };
  return m;
}

ModelSpec with_H_offset(ModelSpec m, const CMat& E) {
  HFun H = m.eval_H;
  m.eval_H = [H, E](cplx t) { return CMat(H(t) + E); };
  m.eval_dH = HFun{};
  return m;
}

}  // namespace

TEST_CASE("ybe residual") {
  CHECK(ybe_residual(perm_R(3), 3, 0.1, 0.2, 0.3) == 0.0);
  ModelSpec m = make_model("8vB");
  for (auto& p : sample_points({0.02, 0.58, 0.0, 0.0}, 10, 3, 5)) CHECK(ybe_residual(m.eval_R, 2, p[0], p[1], p[2]) <= 1e-9);

  ModelSpec bad = with_R_offset(make_model("6vA-xxz"), 0.05 * unit(4, 2, 2));
  CHECK(ybe_residual(bad.eval_R, 2, 0.1, 0.35, -0.2) >= 1e-3);
}

TEST_CASE("regularity coefficients") {
  Coefficient a = regularity(make_model("xxz-nondiff").eval_R, 2, 0.3);
  CHECK(std::abs(a.value - 1.0) == 0.0);
  CHECK(a.residual == 0.0);
  CHECK(std::abs(regularity(make_model("so4").eval_R, 4, 0.2).value - 1.0) < 1e-15);
  Coefficient e = regularity(make_model("8vB").eval_R, 2, 0.25);
  CHECK(std::abs(e.value - 1.0) <= 1e-10);
  CHECK(e.residual <= 1e-10);
}

TEST_CASE("braiding coefficients") {
  Coefficient p = braiding(perm_R(2), 2, 0.1, 0.5);
  CHECK(p.value == cplx(1.0));
  CHECK(p.residual == 0.0);

  ModelSpec xxz = make_model("6vA-xxz");
  const cplx u = 0.27;
  Coefficient b = braiding(xxz.eval_R, 2, u, -u);
  CHECK(b.residual <= 1e-10);
  CMat M = xxz.eval_R(u, -u) * permutation(2) * xxz.eval_R(-u, u) * permutation(2);
  CHECK(std::abs(b.value - M(0, 0)) <= 1e-12);
  CHECK(braiding(make_model("ghub").eval_R, 4, 0.2, 0.45).residual <= 1e-9);
}

TEST_CASE("hamiltonian recovery") {
  CHECK(max_norm(recover_H(perm_R(2), 2, 0.3)) == 0.0);
  Recovery r = hamiltonian_recovery(make_model("6vA-xxz"), 0.2);
  CHECK(r.residual <= 1e-6);

  ModelSpec m = make_model("15v-c1-m2");
  const cplx t = 0.35;
  CMat H = recover_H(m.eval_R, 3, t);
  CHECK(std::abs(H(1, 3) - 1.3 * std::exp(-t)) <= 1e-6);
  CHECK(std::abs(H(6, 2) - 0.7 * std::exp(t)) <= 1e-6);
  CHECK(std::abs(H(7, 5) - 0.4) <= 1e-6);
  Recovery rc = hamiltonian_recovery(m, t);
  CHECK(rc.residual <= 1e-6);
  CHECK((rc.policy == "exact" || rc.policy == "modulo identity"));

  // an identity shift is accepted only modulo identity
  Recovery s = compare_H(H + 0.3 * identity(9), m.eval_H(t), 1e-6);
  CHECK(s.policy == "modulo identity");
  CHECK(std::abs(s.shift - 0.3) <= 1e-6);
  CHECK_THROWS_AS(hamiltonian_recovery(make_model("8vA"), 0.2), MissingR);
}

TEST_CASE("expansion check") {
  ModelSpec m8 = make_model("su22-m8");
  CHECK(expansion_check(m8, 0.3, 0.3) == regularity(m8.eval_R, 4, 0.3).residual);
  CHECK(expansion_check(m8, 0.3 + 1e-3, 0.3) <= m8.curvature);
  ModelSpec off = make_model("offdiag");
  CHECK(expansion_check(off, 0.41 + 1e-3, 0.41) <= off.curvature);
}

TEST_CASE("sutherland equations") {
  HFun zero = [](cplx) { return CMat(CMat::Zero(4, 4)); };
  auto p = sutherland_residual(perm_R(2), zero, 2, 0.2, 0.4);
  CHECK(p.first == 0.0);
  CHECK(p.second == 0.0);
  auto x = sutherland_residual(make_model("xxz-nondiff"), 0.42, 0.17);
  CHECK(x.first <= 1e-6);
  CHECK(x.second <= 1e-6);

  ModelSpec xxz = make_model("6vA-xxz");
  HFun wrong = [&](cplx t) {
    CMat H = xxz.eval_H(t);
    H(1, 2) = -H(1, 2);
    return H;
  };
  CHECK(sutherland_residual(xxz.eval_R, wrong, 2, 0.3, -0.1).first >= 1e-3);
}

TEST_CASE("detection power under 1e-2 perturbations") {
  const Tolerances tol;
  ModelSpec base = make_model("6vA-xxz");
  CMat E = 1e-2 * unit(4, 2, 3);
  CMat Ed = 1e-2 * unit(4, 1, 1);
  struct Case {
    const char* check;
    ModelSpec model;
  };
  const Case cases[] = {
      {"ybe", with_R_offset(base, Ed)},
      {"regularity", with_R_offset(base, Ed)},
      {"braiding", with_R_offset(base, Ed)},
      {"hamiltonian", with_H_offset(base, E)},
      {"expansion", with_R_offset(base, Ed)},
      {"sutherland", with_H_offset(base, E)},
      {"boost", with_H_offset(make_model("xxz-nondiff"), E)},
      {"transfer", with_R_offset(base, 1e-2 * unit(4, 1, 2))},
  };
  for (auto& c : cases) {
    CAPTURE(c.check);
    CheckResult r = run_check(c.check, c.model, 3, 6, tol);
    CHECK_FALSE(r.pass);
    CHECK(r.residual >= 1e-4);
  }
  CMat H = su22_table_H(5, {0.3, std::conj(cplx(0.4, 0.9)), cplx(0.4, 0.9)});
  CHECK(hermiticity_residual(H) <= 1e-12);
  CHECK(hermiticity_residual(H + 1e-2 * I_unit * unit(16, 1, 1)) >= 1e-4);
  CHECK(normality_residual(H + 1e-2 * unit(16, 1, 2), 4) >= 1e-4);
}

TEST_CASE("hermiticity and normality tables") {
  int herm_rows = 0, norm_rows = 0;
  for (auto& c : condition_cases(ConditionTable::hermitian)) {
    CAPTURE(c.model);
    CAPTURE(c.label);
    double r = hermiticity_check(c);
    if (c.satisfied)
      CHECK(r <= 1e-10);
    else
      CHECK(r >= 1e-4);
    ++herm_rows;
  }
  for (auto& c : condition_cases(ConditionTable::normal)) {
    CAPTURE(c.model);
    CAPTURE(c.label);
    double r = normality_check(c);
    if (c.satisfied)
      CHECK(r <= 1e-10);
    else
      CHECK(r >= 1e-4);
    ++norm_rows;
  }
  CHECK(herm_rows >= 11);
  CHECK(norm_rows >= 11);

  // model 5 normal for arbitrary complex functions
  Su22TableArgs a;
  a.f = cplx(0.3, -0.8);
  a.g = cplx(1.1, 0.2);
  a.h = cplx(-0.4, 0.6);
  CHECK(normality_residual(su22_table_H(5, a), 4) <= 1e-10);
  CHECK(has_condition_set("su22-m3"));
  CHECK_FALSE(has_condition_set("su22-m8"));
}

TEST_CASE("sampling") {
  Box b{0.1, 0.5, -0.2, 0.2};
  auto p = sample_points(b, 50, 3, 11);
  CHECK(p.size() == 50);
  for (auto& s : p) {
    CHECK(s.size() == 3);
    for (cplx z : s) CHECK(b.contains(z));
  }
  auto q = sample_points(b, 50, 3, 11), r = sample_points(b, 50, 3, 12);
  CHECK(p == q);
  CHECK(p != r);
}

TEST_CASE("suite reports") {
  VerificationReport h = run_suite(make_model("su22-m7-H"), 1, 20);
  for (auto& c : h.checks) {
    CAPTURE(c.name);
    CHECK(c.skipped == (c.name != "boost"));
  }
  CHECK(h.pass());

  VerificationReport e = run_suite(make_model("8vB"), 1, 20);
  CHECK(e.pass());
  for (auto& c : e.checks)
    if (!c.skipped) CHECK(c.pass == (c.residual <= c.tol));
  CHECK(e.find("regularity")->note.rfind("alpha=", 0) == 0);

  VerificationReport again = run_suite(make_model("8vB"), 1, 20);
  CHECK(strip_timing(to_json(e)).dump() == strip_timing(to_json(again)).dump());
  CHECK_THROWS_AS(run_check("crossing", make_model("8vB"), 1, 5), UsageError);
}
