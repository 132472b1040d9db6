#include <doctest.h>

#include <random>

#include "ybelab/boost.hpp"
#include "ybelab/errors.hpp"
#include "ybelab/verify.hpp"

using namespace ybelab;

namespace {

int digit(int index, int site, int n, int L) {
  for (int k = L; k > site; --k) index /= n;
  return index % n;
}

CMat swap_sites(int n, int L, int a, int b) {
  int D = 1;
  for (int k = 0; k < L; ++k) D *= n;
  CMat S = CMat::Zero(D, D);
  for (int col = 0; col < D; ++col) {
    std::vector<int> d(L);
    for (int s = 1; s <= L; ++s) d[s - 1] = digit(col, s, n, L);
    std::swap(d[a - 1], d[b - 1]);
    int row = 0;
    for (int s = 0; s < L; ++s) row = row * n + d[s];
    S(row, col) = 1.0;
  }
  return S;
}

CMat xxz_ansatz(cplx h1, cplx h2, cplx h3, cplx h4) {
  CMat H = CMat::Zero(4, 4);
  H(1, 1) = h1;
  H(2, 2) = h2;
  H(1, 2) = h3;
  H(2, 1) = h4;
  return H;
}

}  // namespace

TEST_CASE("Q2 oracles") {
  CHECK(max_norm(charge_Q2(CMat::Zero(4, 4), 2)) == 0.0);
  CHECK(max_norm(charge_Q2(identity(4), 2) - 4.0 * identity(16)) == 0.0);
  CMat ref = CMat::Zero(16, 16);
  for (int j = 1; j <= 4; ++j) ref += swap_sites(2, 4, j, j % 4 + 1);
  CHECK(max_norm(charge_Q2(permutation(2), 2) - ref) == 0.0);
}

TEST_CASE("Q3 oracles") {
  CMat P = permutation(2);
  CMat ref = CMat::Zero(16, 16);
  for (int j = 1; j <= 4; ++j) {
    CMat a = swap_sites(2, 4, j, j % 4 + 1), b = swap_sites(2, 4, j % 4 + 1, (j + 1) % 4 + 1);
    ref -= a * b - b * a;
  }
  CHECK(max_norm(charge_Q3(P, CMat::Zero(4, 4), 2) - ref) < 1e-14);

  ModelSpec xxz = make_model("6vA-xxz");
  CMat h = xxz.eval_H(0.2);
  CHECK(max_norm(build_Q3(xxz, 0.2) - charge_Q3(h, CMat::Zero(4, 4), 2)) == 0.0);
}

TEST_CASE("analytic and stencil derivative agree for 6vB") {
  ModelSpec m = make_model("6vB");
  CMat a = build_Q3(m, 0.3, 4, true), b = build_Q3(m, 0.3, 4, false);
  CHECK(max_norm(a - b) <= 1e-6);
}

TEST_CASE("charges are translation invariant") {
  SiteSpace s(2, 4);
  CMat S = cyclic_shift(s);
  for (const char* id : {"6vB", "8vB", "offdiag", "8vA"}) {
    ChargePair c = build_charges(make_model(id), 0.25);
    CHECK(max_norm(S * c.Q2 * S.transpose() - c.Q2) <= 1e-10);
    CHECK(max_norm(S * c.Q3 * S.transpose() - c.Q3) <= 1e-10);
  }
}

TEST_CASE("integrability residuals") {
  CHECK(integrability_residual(make_model("6vA-xxz"), 0.3) <= 1e-9);

  // 6vB with arbitrary constants h1..h5
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 5; ++k) {
    cplx h[5];
    for (auto& x : h) x = cplx(u(rng), u(rng));
    CMat H = eight_vertex_H({h[0], h[1], h[2], h[3], h[4], 0.0, 0.0, 0.0});
    CHECK(integrability_residual(H, CMat::Zero(4, 4), 2) <= 1e-9);
  }

  // xxz ansatz on and off the solution h3 = c3 (h1 + h2) / 2
  const cplx h1 = 1.0, h2 = 1.3, c3 = 2.0, c4 = 0.5;
  CMat on = xxz_ansatz(h1, h2, c3 / 2.0 * (h1 + h2), c4 / 2.0 * (h1 + h2));
  CMat dh = xxz_ansatz(0.0, 1.0, c3 / 2.0, c4 / 2.0);
  CHECK(integrability_residual(on, dh, 2) <= 1e-12);
  CMat off = xxz_ansatz(h1, h2, c3 / 2.0 * (h1 + h2) + 0.1, c4 / 2.0 * (h1 + h2));
  CHECK(integrability_residual(off, dh, 2) >= 1e-3);
}

TEST_CASE("every catalog density is integrable at L=4") {
  for (auto& m : list_models()) {
    CAPTURE(m.id);
    for (auto& p : sample_points(m.domain, 5, 1, 2)) {
      cplx t = p[0];
      double tol = m.has_dH() ? 1e-8 : 1e-6;
      if (m.domain.contains(t - 3e-4) && m.domain.contains(t + 3e-4)) CHECK(integrability_residual(m, t) <= tol);
    }
  }
}

TEST_CASE("stencil domain guard") {
  ModelSpec m = make_model("6vB");
  CHECK_THROWS_AS(require_stencil(m, cplx(m.domain.re_lo, 0.0)), StencilOutOfDomain);
  CHECK_NOTHROW(require_stencil(m, 0.3));
}

TEST_CASE("transfer matrices") {
  RFun perm = [](cplx, cplx) { return permutation(2); };
  for (int L : {2, 3, 4}) {
    SiteSpace s(2, L);
    CMat t = transfer_matrix(perm, 2, 0.1, 0.0, L);
    CMat S = cyclic_shift(s);
    bool shift = max_norm(t - S) == 0.0 || max_norm(t - S.transpose()) == 0.0;
    CHECK(shift);
    CHECK(transfer_commutation(perm, 2, 0.1, 0.4, 0.0, L) == 0.0);
  }
  ModelSpec xxz = make_model("6vA-xxz");
  CHECK(transfer_commutation(xxz, 0.13, -0.31, 0.05, 3) <= 1e-9);
  CHECK(transfer_commutation(make_model("ghub"), 0.2, 0.45, 0.1, 2) <= 1e-8);
  CHECK_THROWS_AS(transfer_commutation(make_model("8vA"), 0.1, 0.2, 0.0, 2), MissingR);
  CHECK_THROWS_AS(transfer_matrix(xxz, 0.1, 0.0, 5), DimensionMismatch);
}
