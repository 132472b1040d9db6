#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "ybelab/catalog.hpp"
#include "ybelab/verify.hpp"

namespace ybelab {

enum class Variant { LBT, Twist, TwoTwist, Normalization, Reparameterization, Discrete };
enum class DiscreteMap { PRP, T, PTP };

std::string to_string(Variant v);
std::string to_string(DiscreteMap d);

using MatFun = std::function<CMat(cplx)>;
using ScalarFun = std::function<cplx(cplx)>;
using ScalarFun2 = std::function<cplx(cplx, cplx)>;

struct TransformSpec {
  Variant variant = Variant::LBT;
  std::string label;
  MatFun V, dV;            // LBT: V; Twist: U; TwoTwist: constant U
  MatFun W;                // TwoTwist: constant V
  ScalarFun2 norm;         // Normalization: g(u,v)
  ScalarFun norm_shift;    // d_u g(u,v) at u = v = theta
  ScalarFun map, dmap;     // Reparameterization: g(u), g'(u)
  DiscreteMap discrete = DiscreteMap::PRP;
};

TransformSpec lbt(MatFun V, MatFun dV, std::string label = "LBT");
TransformSpec constant_lbt(const CMat& V, std::string label = "LBT");
TransformSpec twist(MatFun U, MatFun dU, std::string label = "twist");
TransformSpec constant_twist(const CMat& U, std::string label = "twist");
// U1 V2 R U2^-1 V1^-1 for constant U, V
TransformSpec two_twist(const CMat& U, const CMat& V, std::string label = "two-twist");
TransformSpec normalization(ScalarFun2 g, ScalarFun shift, std::string label = "normalization");
TransformSpec reparameterization(ScalarFun g, ScalarFun dg, std::string label = "reparameterization");
TransformSpec discrete(DiscreteMap d);

// throws SingularPayload when the condition estimate reaches 1e8
CMat checked_inverse(const CMat& M);
double condition_number(const CMat& M);

// payload invariants on sampled points of the box; throws SingularPayload
void validate_payload(const TransformSpec& t, const Box& box, int n);

RFun apply_to_R(const TransformSpec& t, const RFun& R, int n);
HFun apply_to_H(const TransformSpec& t, const HFun& H, int n);
ModelSpec apply(const TransformSpec& t, const ModelSpec& m, const Box* domain = nullptr);

// max_norm of [U1 U2, H] - (U1' U2 - U1 U2')
double twist_condition(const MatFun& U, const MatFun& dU, const HFun& H, cplx theta);

VerificationReport closure_suite(const TransformSpec& t, const ModelSpec& m, std::uint64_t seed, int samples = 20,
                                 const Tolerances& tol = {}, const Box* domain = nullptr);

struct ChainPayloads {
  TransformSpec untwist, reparam, unlbt;
};
ChainPayloads xxz_chain_payloads(const ModelSpec& nondiff);
// undo the identifications on the difference-form XXZ R and compare with xxz-nondiff at sampled (u,v)
double xxz_reduction_chain(const Params& overrides = {}, int count = 10, std::uint64_t seed = 1);

// 6vB density before reparameterization with h1 = h2 = 0 and h5 -> h4 h5 / 2
CMat six_vertex_b_H(cplx h3, cplx h4, cplx h5);
// conjugated 6vB density against the four 4-dim sub-blocks of the su22-m5 density
double su22_m5_embedding_residual(cplx theta, const Params& overrides = {});

// key=value transform file: variant, payload entries
TransformSpec parse_transform(const std::string& text, int n);

}  // namespace ybelab
