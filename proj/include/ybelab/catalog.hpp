#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ybelab/functions.hpp"
#include "ybelab/tensor.hpp"

namespace ybelab {

enum class Form { difference, quasi_difference, non_difference };
std::string to_string(Form f);

struct Box {
  double re_lo, re_hi, im_lo, im_hi;
  bool contains(cplx z) const;
  cplx at(double x, double y) const;  // x, y in [0,1)
};

using HFun = std::function<CMat(cplx)>;
using RFun = std::function<CMat(cplx, cplx)>;

struct ModelSpec {
  std::string id;
  int n = 2;
  Form form = Form::non_difference;
  Params params;
  std::string preset;
  std::string summary;
  HFun eval_H;
  RFun eval_R;   // empty for H-only models
  HFun eval_dH;  // empty when dH/dtheta is not supplied
  Box domain{0.05, 0.6, -0.2, 0.2};
  double curvature = 100.0;
  std::vector<std::pair<std::string, Fn>> functions;

  bool has_R() const { return static_cast<bool>(eval_R); }
  bool has_dH() const { return static_cast<bool>(eval_dH); }
};

const std::vector<std::string>& model_ids();
bool is_model(const std::string& id);

// overrides must name existing parameters
ModelSpec make_model(const std::string& id, const Params& overrides = {});
std::vector<ModelSpec> list_models();

// domain-checked evaluation
CMat eval_H(const ModelSpec& m, cplx theta);
CMat eval_R(const ModelSpec& m, cplx u, cplx v);
CMat eval_H(const std::string& id, cplx theta);
CMat eval_R(const std::string& id, cplx u, cplx v);

// 1-based matrix unit of size d
CMat unit(int d, int i, int j);

// generic 4x4 density h1 1 + h2 (sz1 - 1sz) + h3 s+s- + h4 s-s+ + h5 (sz1 + 1sz) + h6 szsz + h7 s-s- + h8 s+s+
CMat eight_vertex_H(const std::array<cplx, 8>& h);

// su(2)+su(2) action-rule operator from coefficients c1..c10
CMat su22_operator(const std::array<cplx, 10>& c);

struct Su22TableArgs {
  cplx f{0.0}, g{0.0}, h{0.0}, F{0.0};
  cplx c{1.0}, c1{0.0}, c2{1.0};
  cplx theta{0.0};
  int s = 1;
};
// density of su22 table model 1..6 from pointwise function values
CMat su22_table_H(int model, const Su22TableArgs& a);

// 9x9 class-2 model 6 branch data
struct BranchI {
  cplx y;     // e^{2G} j
  cplx I;     // -artanh(y)/2 on the stored branch
  cplx Idot;  // g / y
};
// branch 1: log(1-y) continued from above the cut (y > 1); branch 0: principal
BranchI m6_branch(cplx G, cplx g, cplx b, int branch);

// integrand (f hdot - h fdot) / (h (f^2 - g h)) of the su22 model-5 reparameterization
cplx su22_m5_x_integrand(cplx f, cplx fdot, cplx g, cplx h, cplx hdot);

// model-7 entries h1..h10 from the elliptic parameterization
std::array<cplx, 10> su22_m7_entries(cplx theta, cplx c1, cplx c2, cplx c3, int sigma);

}  // namespace ybelab
