#include "ybelab/boost.hpp"

#include "ybelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ybelab {

double fd_step(cplx x) { return 1e-4 * std::max(1.0, std::abs(x)); }

CMat central_diff(const HFun& f, cplx x) {
  const double h = fd_step(x);
  return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
}

CMat central_diff_first(const RFun& f, cplx u, cplx v) {
  return central_diff([&](cplx x) { return f(x, v); }, u);
}

CMat central_diff_second(const RFun& f, cplx u, cplx v) {
  return central_diff([&](cplx x) { return f(u, x); }, v);
}

void require_stencil(const ModelSpec& m, cplx theta) {
  const double h = 2.0 * fd_step(theta);
  if (!m.domain.contains(theta - h) || !m.domain.contains(theta + h))
    throw StencilOutOfDomain("model " + m.id + ": derivative stencil at theta=" + format_complex(theta, 6) +
                             " leaves the sampling box");
}

CMat charge_Q2(const CMat& h, int n, int L) {
  SiteSpace s(n, L);
  CMat Q = CMat::Zero(s.dim(), s.dim());
  for (int j = 1; j <= L; ++j) Q += embed_pair(h, s, j);
  return Q;
}

CMat charge_Q3(const CMat& h, const CMat& dh, int n, int L) {
  SiteSpace s(n, L);
  std::vector<CMat> hs;
  for (int j = 1; j <= L; ++j) hs.push_back(embed_pair(h, s, j));
  CMat Q = CMat::Zero(s.dim(), s.dim());
  for (int j = 0; j < L; ++j) Q -= commutator(hs[j], hs[(j + 1) % L]);
  return Q + charge_Q2(dh, n, L);
}

CMat density_derivative(const ModelSpec& m, cplx theta, bool analytic) {
  if (analytic && m.has_dH()) return m.eval_dH(theta);
  return central_diff(m.eval_H, theta);
}

CMat build_Q2(const ModelSpec& m, cplx theta, int L) { return charge_Q2(m.eval_H(theta), m.n, L); }

CMat build_Q3(const ModelSpec& m, cplx theta, int L, bool analytic) {
  return charge_Q3(m.eval_H(theta), density_derivative(m, theta, analytic), m.n, L);
}

ChargePair build_charges(const ModelSpec& m, cplx theta, bool analytic) {
  CMat h = m.eval_H(theta);
  CMat dh = density_derivative(m, theta, analytic);
  return {charge_Q2(h, m.n), charge_Q3(h, dh, m.n), theta, 4};
}

double integrability_residual(const CMat& h, const CMat& dh, int n) {
  CMat Q2 = charge_Q2(h, n), Q3 = charge_Q3(h, dh, n);
  return max_norm(commutator(Q2, Q3)) / std::max(1.0, max_norm(Q2) * max_norm(Q3));
}

double integrability_residual(const ModelSpec& m, cplx theta, bool analytic) {
  return integrability_residual(m.eval_H(theta), density_derivative(m, theta, analytic), m.n);
}

CMat transfer_matrix(const RFun& R, int n, cplx u, cplx theta, int L) {
  if (L < 2 || L > 4) throw DimensionMismatch("transfer_matrix: L must be 2, 3 or 4");
  SiteSpace s(n, L + 1);
  CMat r = R(u, theta);
  CMat M = identity(s.dim());
  for (int j = 1; j <= L; ++j) M = embed_two(r, s, 1, j + 1) * M;
  return partial_trace_first(M, n);
}

CMat transfer_matrix(const ModelSpec& m, cplx u, cplx theta, int L) {
  if (!m.has_R()) throw MissingR("model " + m.id + " has no R-matrix");
  return transfer_matrix(m.eval_R, m.n, u, theta, L);
}

double transfer_commutation(const RFun& R, int n, cplx u, cplx v, cplx theta, int L) {
  CMat a = transfer_matrix(R, n, u, theta, L), b = transfer_matrix(R, n, v, theta, L);
  double scale = max_norm(a) * max_norm(b);
  return max_norm(commutator(a, b)) / (scale > 0.0 ? scale : 1.0);
}

double transfer_commutation(const ModelSpec& m, cplx u, cplx v, cplx theta, int L) {
  if (!m.has_R()) throw MissingR("model " + m.id + " has no R-matrix");
  return transfer_commutation(m.eval_R, m.n, u, v, theta, L);
}

}  // namespace ybelab
