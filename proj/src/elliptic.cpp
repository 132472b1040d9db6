#include "ybelab/elliptic.hpp"

#include "ybelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ybelab {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string where(cplx z, cplx m) {
  auto s = [](cplx c) { return std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") + std::to_string(c.imag()) + "i"; };
  return " at z=" + s(z) + ", m=" + s(m);
}

}  // namespace

JacobiTriple jacobi_all(cplx z0, cplx m0) {
  cplx z = z0, m = m0, mc = 1.0 - m0;
  std::vector<cplx> ks;
  bool near_one = false;
  while (std::abs(m) >= 1e-12) {
    if (std::abs(mc) < 1e-12) {
      near_one = true;
      break;
    }
    if (static_cast<int>(ks.size()) >= kLandenCap) throw NonConvergence("jacobi: Landen iteration cap exceeded" + where(z0, m0));
    cplx kp = std::sqrt(mc);
    cplx k1 = (1.0 - kp) / (1.0 + kp);
    ks.push_back(k1);
    z /= (1.0 + k1);
    m = k1 * k1;
    mc = 4.0 * kp / ((1.0 + kp) * (1.0 + kp));
  }

  cplx sn, cn, dn;
  if (near_one) {
    cplx sh = std::sinh(z), ch = std::cosh(z), th = std::tanh(z), se = 1.0 / ch;
    cplx a = 0.25 * mc * (sh * ch - z);
    cplx b = 0.25 * mc * (sh * ch + z);
    sn = th + a * se * se;
    cn = se - a * th * se;
    dn = se + b * th * se;
  } else {
    cplx s = std::sin(z), c = std::cos(z);
    cplx a = 0.25 * m * (z - s * c);
    sn = s - a * c;
    cn = c + a * s;
    dn = 1.0 - 0.5 * m * s * s;
  }

  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    const cplx k1 = *it;
    cplx s2 = sn * sn;
    cplx den = 1.0 + k1 * s2;
    cplx nsn = (1.0 + k1) * sn / den;
    cplx ncn = cn * dn / den;
    cplx ndn = (1.0 - k1 * s2) / den;
    sn = nsn;
    cn = ncn;
    dn = ndn;
  }

  // pole test on |dn|
  if (!finite(sn) || !finite(cn) || !finite(dn) || std::abs(dn) * kPoleRadius > 1.0)
    throw PoleProximity("jacobi: too close to a pole of sn/cn/dn" + where(z0, m0));
  return {sn, cn, dn};
}

cplx jacobi(JacobiKind kind, cplx z, cplx m) {
  JacobiTriple t = jacobi_all(z, m);
  auto guard = [&](cplx den, const char* what) {
    if (std::abs(den) < kPoleRadius) throw PoleProximity(std::string("jacobi: too close to a pole of ") + what + where(z, m));
  };
  switch (kind) {
    case JacobiKind::sn: return t.sn;
    case JacobiKind::cn: return t.cn;
    case JacobiKind::dn: return t.dn;
    case JacobiKind::ns: guard(t.sn, "ns"); return 1.0 / t.sn;
    case JacobiKind::nc: guard(t.cn, "nc"); return 1.0 / t.cn;
    case JacobiKind::cs: guard(t.sn, "cs"); return t.cn / t.sn;
    case JacobiKind::ds: guard(t.sn, "ds"); return t.dn / t.sn;
  }
  return t.sn;
}

cplx jacobi(const std::string& kind, cplx z, cplx m) {
  static const std::pair<const char*, JacobiKind> names[] = {
      {"sn", JacobiKind::sn}, {"cn", JacobiKind::cn}, {"dn", JacobiKind::dn}, {"ns", JacobiKind::ns},
      {"nc", JacobiKind::nc}, {"cs", JacobiKind::cs}, {"ds", JacobiKind::ds}};
  for (auto& [name, k] : names)
    if (kind == name) return jacobi(k, z, m);
  throw UsageError("jacobi: unknown kind '" + kind + "'");
}

double check_identities(cplx z, cplx m) {
  JacobiTriple t = jacobi_all(z, m);
  double a = std::abs(t.sn * t.sn + t.cn * t.cn - 1.0);
  double b = std::abs(t.dn * t.dn + m * t.sn * t.sn - 1.0);
  return std::max(a, b);
}

}  // namespace ybelab
