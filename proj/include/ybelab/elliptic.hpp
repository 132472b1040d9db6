#pragma once

#include <string>

#include "ybelab/tensor.hpp"

namespace ybelab {

// Jacobi functions sn(z|m), m the square of the modulus.
enum class JacobiKind { sn, cn, dn, ns, nc, cs, ds };

struct JacobiTriple {
  cplx sn, cn, dn;
};

inline constexpr double kPoleRadius = 1e-8;
inline constexpr int kLandenCap = 64;

JacobiTriple jacobi_all(cplx z, cplx m);
cplx jacobi(JacobiKind kind, cplx z, cplx m);
cplx jacobi(const std::string& kind, cplx z, cplx m);

double check_identities(cplx z, cplx m);

}  // namespace ybelab
