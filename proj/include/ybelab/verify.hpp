#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ybelab/boost.hpp"
#include "ybelab/catalog.hpp"

namespace ybelab {

struct Tolerances {
  double ybe = 1e-8;
  double regularity = 1e-9;
  double braiding = 1e-8;
  double recovery = 1e-6;
  double sutherland = 1e-5;
  double boost = 1e-6;
  double transfer = 1e-8;
  double hermiticity = 1e-10;
  double normality = 1e-10;
  double violation_floor = 1e-4;
};

double ybe_residual(const RFun& R, int n, cplx u, cplx v, cplx w);

struct Coefficient {
  cplx value;
  double residual;
};
// alpha = tr(P R(u,u)) / n^2
Coefficient regularity(const RFun& R, int n, cplx u);
// beta = tr(R12(u,v) P R(v,u) P) / n^2
Coefficient braiding(const RFun& R, int n, cplx u, cplx v);

// P d_u R(u,theta)|_{u=theta} / alpha(theta)
CMat recover_H(const RFun& R, int n, cplx theta);

struct Recovery {
  double residual;
  std::string policy;  // "exact" or "modulo identity"
  cplx shift{0.0};
  CMat recovered;
};
Recovery compare_H(const CMat& recovered, const CMat& expected, double tol);
Recovery hamiltonian_recovery(const ModelSpec& m, cplx theta, double tol = 1e-6);

double expansion_check(const ModelSpec& m, cplx u, cplx v);
double expansion_check(const RFun& R, const HFun& H, int n, cplx u, cplx v);

std::pair<double, double> sutherland_residual(const RFun& R, const HFun& H, int n, cplx u, cplx v);
std::pair<double, double> sutherland_residual(const ModelSpec& m, cplx u, cplx v);

double hermiticity_residual(const CMat& H);
double normality_residual(const CMat& H, int n, int L = 4);

enum class ConditionTable { hermitian, normal };

struct ConditionCase {
  int model;  // su22 table model 1..6
  std::string label;
  Su22TableArgs args;
  bool satisfied;
};
std::vector<ConditionCase> condition_cases(ConditionTable table);
bool has_condition_set(const std::string& id);
int su22_table_model(const std::string& id);  // 0 when the id is not a table model

double hermiticity_check(const ConditionCase& c);
double normality_check(const ConditionCase& c, int L = 4);

// low-discrepancy points in a box; the seed fixes a Cranley-Patterson shift
std::vector<std::vector<cplx>> sample_points(const Box& box, int count, int arity, std::uint64_t seed);

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = true;
  bool skipped = false;
  bool domain_error = false;
  std::string note;
  std::vector<std::string> samples;
  std::string worst;  // sample with the largest residual
};

struct VerificationReport {
  std::string model;
  std::uint64_t seed = 0;
  int sample_count = 0;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;

  bool pass() const;
  const CheckResult* find(const std::string& name) const;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"ybe",        "regularity", "braiding",    "hamiltonian", "expansion",
                                                 "sutherland", "boost",      "transfer",    "hermiticity", "normality"};
  return names;
}
bool is_check(const std::string& name);

CheckResult run_check(const std::string& name, const ModelSpec& m, std::uint64_t seed, int samples,
                      const Tolerances& tol = {});
VerificationReport run_suite(const ModelSpec& m, std::uint64_t seed, int samples, const Tolerances& tol = {});

}  // namespace ybelab
