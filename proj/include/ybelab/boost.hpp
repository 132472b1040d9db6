#pragma once

#include "ybelab/catalog.hpp"

namespace ybelab {

struct ChargePair {
  CMat Q2;
  CMat Q3;
  cplx theta;
  int L = 4;
};

// 4th-order central stencil, step 1e-4 max(1,|x|) along the real axis
double fd_step(cplx x);
CMat central_diff(const HFun& f, cplx x);
CMat central_diff_first(const RFun& f, cplx u, cplx v);
CMat central_diff_second(const RFun& f, cplx u, cplx v);

CMat charge_Q2(const CMat& h, int n, int L = 4);
CMat charge_Q3(const CMat& h, const CMat& dh, int n, int L = 4);

// derivative of H from eval_dH when supplied and analytic is set, else by the stencil
CMat density_derivative(const ModelSpec& m, cplx theta, bool analytic = true);

CMat build_Q2(const ModelSpec& m, cplx theta, int L = 4);
CMat build_Q3(const ModelSpec& m, cplx theta, int L = 4, bool analytic = true);
ChargePair build_charges(const ModelSpec& m, cplx theta, bool analytic = true);

double integrability_residual(const CMat& h, const CMat& dh, int n);
double integrability_residual(const ModelSpec& m, cplx theta, bool analytic = true);

// t(u, theta) = tr_a R_{aL}(u,theta) ... R_{a1}(u,theta)
CMat transfer_matrix(const RFun& R, int n, cplx u, cplx theta, int L);
CMat transfer_matrix(const ModelSpec& m, cplx u, cplx theta, int L);
double transfer_commutation(const RFun& R, int n, cplx u, cplx v, cplx theta, int L);
double transfer_commutation(const ModelSpec& m, cplx u, cplx v, cplx theta, int L);

// throws StencilOutOfDomain if the stencil around theta leaves the box
void require_stencil(const ModelSpec& m, cplx theta);

}  // namespace ybelab
