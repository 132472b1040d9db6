#include "ybelab/transforms.hpp"

#include "ybelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace ybelab {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::LBT: return "LBT";
    case Variant::Twist: return "Twist";
    case Variant::TwoTwist: return "TwoTwist";
    case Variant::Normalization: return "Normalization";
    case Variant::Reparameterization: return "Reparameterization";
    case Variant::Discrete: return "Discrete";
  }
  return "LBT";
}

std::string to_string(DiscreteMap d) {
  switch (d) {
    case DiscreteMap::PRP: return "PRP";
    case DiscreteMap::T: return "T";
    case DiscreteMap::PTP: return "PTP";
  }
  return "PRP";
}

TransformSpec lbt(MatFun V, MatFun dV, std::string label) {
  TransformSpec t;
  t.variant = Variant::LBT;
  t.label = std::move(label);
  t.V = std::move(V);
  t.dV = std::move(dV);
  return t;
}

TransformSpec constant_lbt(const CMat& V, std::string label) {
  CMat Z = CMat::Zero(V.rows(), V.cols());
  return lbt([V](cplx) { return V; }, [Z](cplx) { return Z; }, std::move(label));
}

TransformSpec twist(MatFun U, MatFun dU, std::string label) {
  TransformSpec t = lbt(std::move(U), std::move(dU), std::move(label));
  t.variant = Variant::Twist;
  return t;
}

TransformSpec constant_twist(const CMat& U, std::string label) {
  TransformSpec t = constant_lbt(U, std::move(label));
  t.variant = Variant::Twist;
  return t;
}

TransformSpec two_twist(const CMat& U, const CMat& V, std::string label) {
  TransformSpec t = constant_lbt(U, std::move(label));
  t.variant = Variant::TwoTwist;
  t.W = [V](cplx) { return V; };
  return t;
}

TransformSpec normalization(ScalarFun2 g, ScalarFun shift, std::string label) {
  TransformSpec t;
  t.variant = Variant::Normalization;
  t.label = std::move(label);
  t.norm = std::move(g);
  t.norm_shift = std::move(shift);
  return t;
}

TransformSpec reparameterization(ScalarFun g, ScalarFun dg, std::string label) {
  TransformSpec t;
  t.variant = Variant::Reparameterization;
  t.label = std::move(label);
  t.map = std::move(g);
  t.dmap = std::move(dg);
  return t;
}

TransformSpec discrete(DiscreteMap d) {
  TransformSpec t;
  t.variant = Variant::Discrete;
  t.discrete = d;
  t.label = to_string(d);
  return t;
}

double condition_number(const CMat& M) {
  Eigen::JacobiSVD<CMat> svd(M);
  const auto& s = svd.singularValues();
  double lo = s(s.size() - 1);
  return lo > 0.0 ? s(0) / lo : INFINITY;
}

CMat checked_inverse(const CMat& M) {
  double k = condition_number(M);
  if (!(k < 1e8)) throw SingularPayload("payload matrix is singular (condition estimate " + std::to_string(k) + ")");
  return M.inverse();
}

namespace {

void require_size(const CMat& M, int n, const std::string& what) {
  if (M.rows() != n || M.cols() != n)
    throw DimensionMismatch(what + " payload must be " + std::to_string(n) + "x" + std::to_string(n));
}

CMat transpose_in_place(const CMat& M) { return M.transpose(); }

}  // namespace

void validate_payload(const TransformSpec& t, const Box& box, int n) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx th = box.at((i + 0.5) / 4.0, (j + 0.5) / 4.0);
      switch (t.variant) {
        case Variant::LBT:
        case Variant::Twist:
          require_size(t.V(th), n, t.label);
          require_size(t.dV(th), n, t.label);
          checked_inverse(t.V(th));
          break;
        case Variant::TwoTwist:
          require_size(t.V(th), n, t.label);
          require_size(t.W(th), n, t.label);
          checked_inverse(t.V(th));
          checked_inverse(t.W(th));
          break;
        case Variant::Normalization:
          if (std::abs(t.norm(th, th) - 1.0) > 1e-12)
            throw InvalidPayload("normalization payload violates g(theta,theta)=1 at " + format_complex(th, 6));
          break;
        case Variant::Reparameterization:
          if (std::abs(t.dmap(th)) == 0.0)
            throw InvalidPayload("reparameterization payload has vanishing derivative at " + format_complex(th, 6));
          break;
        case Variant::Discrete: break;
      }
    }
  if (t.variant == Variant::Reparameterization) {
    const double im = 0.5 * (box.im_lo + box.im_hi);
    int sign = 0;
    cplx prev = t.map({box.re_lo, im});
    for (int k = 1; k <= 32; ++k) {
      cplx cur = t.map({box.re_lo + k * (box.re_hi - box.re_lo) / 32.0, im});
      double d = cur.real() - prev.real();
      int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
      if (s == 0 || (sign != 0 && s != sign)) throw InvalidPayload("reparameterization payload is not monotone");
      sign = s;
      prev = cur;
    }
  }
}

RFun apply_to_R(const TransformSpec& t, const RFun& R, int n) {
  const CMat I = identity(n), P = permutation(n);
  switch (t.variant) {
    case Variant::LBT:
      return [=](cplx u, cplx v) {
        CMat W = kron(t.V(u), t.V(v));
        return CMat(W * R(u, v) * kron(checked_inverse(t.V(u)), checked_inverse(t.V(v))));
      };
    case Variant::Twist:
      return [=](cplx u, cplx v) { return CMat(kron(I, t.V(u)) * R(u, v) * kron(checked_inverse(t.V(v)), I)); };
    case Variant::TwoTwist:
      return [=](cplx u, cplx v) {
        CMat U = t.V(u), V = t.W(u);
        return CMat(kron(U, V) * R(u, v) * kron(checked_inverse(V), checked_inverse(U)));
      };
    case Variant::Normalization: return [=](cplx u, cplx v) { return CMat(t.norm(u, v) * R(u, v)); };
    case Variant::Reparameterization: return [=](cplx u, cplx v) { return R(t.map(u), t.map(v)); };
    case Variant::Discrete:
      switch (t.discrete) {
        case DiscreteMap::PRP: return [=](cplx u, cplx v) { return CMat(P * R(v, u) * P); };
        case DiscreteMap::T: return [=](cplx u, cplx v) { return transpose_in_place(R(u, v)); };
        case DiscreteMap::PTP: return [=](cplx u, cplx v) { return CMat(P * R(v, u).transpose() * P); };
      }
  }
  return R;
}

HFun apply_to_H(const TransformSpec& t, const HFun& H, int n) {
  const CMat I = identity(n), P = permutation(n), Id = identity(n * n);
  switch (t.variant) {
    case Variant::LBT:
      return [=](cplx th) {
        CMat V = t.V(th), Vi = checked_inverse(V);
        CMat A = t.dV(th) * Vi;
        return CMat(kron(V, V) * H(th) * kron(Vi, Vi) - (kron(A, I) - kron(I, A)));
      };
    case Variant::Twist:
      return [=](cplx th) {
        CMat U = t.V(th), Ui = checked_inverse(U);
        return CMat(kron(U, I) * H(th) * kron(Ui, I) + kron(t.dV(th) * Ui, I));
      };
    case Variant::TwoTwist:
      return [=](cplx th) {
        CMat U = t.V(th), V = t.W(th);
        return CMat(kron(V, U) * H(th) * kron(checked_inverse(V), checked_inverse(U)));
      };
    case Variant::Normalization: return [=](cplx th) { return CMat(H(th) + t.norm_shift(th) * Id); };
    case Variant::Reparameterization: return [=](cplx th) { return CMat(t.dmap(th) * H(t.map(th))); };
    case Variant::Discrete:
      switch (t.discrete) {
        case DiscreteMap::PRP: return [=](cplx th) { return CMat(-P * H(th) * P); };
        case DiscreteMap::T: return [=](cplx th) { return CMat(P * H(th).transpose() * P); };
        case DiscreteMap::PTP: return [=](cplx th) { return CMat(-H(th).transpose()); };
      }
  }
  return H;
}

ModelSpec apply(const TransformSpec& t, const ModelSpec& m, const Box* domain) {
  ModelSpec out = m;
  out.id = m.id + "|" + (t.label.empty() ? to_string(t.variant) : t.label);
  out.summary = to_string(t.variant) + " image of " + m.id;
  if (t.variant != Variant::Discrete && t.variant != Variant::TwoTwist) out.form = Form::non_difference;
  if (domain) out.domain = *domain;
  out.eval_H = apply_to_H(t, m.eval_H, m.n);
  out.eval_R = m.has_R() ? apply_to_R(t, m.eval_R, m.n) : RFun{};
  out.eval_dH = HFun{};
  return out;
}

double twist_condition(const MatFun& U, const MatFun& dU, const HFun& H, cplx theta) {
  CMat u = U(theta), du = dU(theta);
  checked_inverse(u);
  const int n = static_cast<int>(u.rows());
  const CMat I = identity(n);
  CMat U1 = kron(u, I), U2 = kron(I, u);
  CMat lhs = commutator(U1 * U2, H(theta));
  CMat rhs = kron(du, I) * U2 - U1 * kron(I, du);
  return max_norm(lhs - rhs);
}

VerificationReport closure_suite(const TransformSpec& t, const ModelSpec& m, std::uint64_t seed, int samples,
                                 const Tolerances& tol, const Box* domain) {
  ModelSpec tm = apply(t, m, domain);
  VerificationReport rep = run_suite(tm, seed, samples, tol);
  if (t.variant == Variant::Twist) {
    double worst = 0.0;
    for (auto& p : sample_points(tm.domain, 3, 1, seed)) worst = std::max(worst, twist_condition(t.V, t.dV, m.eval_H, p[0]));
    if (worst > 1e-8)
      for (auto& c : rep.checks)
        if (c.name == "ybe") c.note = "not guaranteed: twist condition residual " + std::to_string(worst);
  }
  return rep;
}

ChainPayloads xxz_chain_payloads(const ModelSpec& nd) {
  const cplx c3 = nd.params.at("c3"), c4 = nd.params.at("c4");
  const Fn h1 = Fn::from(nd.params, "h1"), h2 = Fn::from(nd.params, "h2");
  CMat Ui = CMat::Zero(2, 2);
  Ui(0, 0) = 1.0 / std::sqrt(c4);
  Ui(1, 1) = 1.0 / std::sqrt(c3);
  ChainPayloads c;
  c.untwist = constant_twist(Ui, "untwist");
  c.reparam = reparameterization([=](cplx u) { return (h1.F(u) + h2.F(u)) / 2.0; },
                                 [=](cplx u) { return (h1.f(u) + h2.f(u)) / 2.0; }, "u->H+(u)");
  auto V = [=](cplx u) {
    cplx hm = (h1.F(u) - h2.F(u)) / 2.0;
    CMat M = CMat::Zero(2, 2);
    M(0, 0) = std::exp(-hm / 2.0);
    M(1, 1) = std::exp(hm / 2.0);
    return M;
  };
  auto dV = [=](cplx u) {
    cplx dm = (h1.f(u) - h2.f(u)) / 2.0;
    CMat M = V(u);
    M(0, 0) *= -dm / 2.0;
    M(1, 1) *= dm / 2.0;
    return M;
  };
  c.unlbt = lbt(V, dV, "inverse LBT");
  return c;
}

double xxz_reduction_chain(const Params& overrides, int count, std::uint64_t seed) {
  ModelSpec nd = make_model("xxz-nondiff", overrides);
  const cplx c = std::sqrt(nd.params.at("c3")) * std::sqrt(nd.params.at("c4"));
  ModelSpec xxz = make_model("6vA-xxz", {{"c", c}});
  ChainPayloads p = xxz_chain_payloads(nd);
  RFun R = apply_to_R(p.untwist, xxz.eval_R, 2);
  R = apply_to_R(p.reparam, R, 2);
  R = apply_to_R(p.unlbt, R, 2);
  double worst = 0.0;
  for (auto& s : sample_points(nd.domain, count, 2, seed)) worst = std::max(worst, max_norm(R(s[0], s[1]) - nd.eval_R(s[0], s[1])));
  return worst;
}

CMat six_vertex_b_H(cplx h3, cplx h4, cplx h5) { return eight_vertex_H({0.0, 0.0, h3, h4, h4 * h5 / 2.0, 0.0, 0.0, 0.0}); }

double su22_m5_embedding_residual(cplx theta, const Params& overrides) {
  ModelSpec m5 = make_model("su22-m5", overrides);
  Fn f, h;
  for (auto& [name, fn] : m5.functions) {
    if (name == "f") f = fn;
    if (name == "h") h = fn;
  }
  const cplx ff = f.f(theta), hh = h.f(theta);
  const cplx h5 = -ff / hh;
  const cplx dh5 = -(f.df(theta) * hh - ff * h.df(theta)) / (hh * hh);
  const cplx h3 = hh * h5 * h5 - dh5;
  CMat sx = CMat::Zero(2, 2);
  sx(0, 1) = sx(1, 0) = 1.0;
  HFun six = [=](cplx) { return six_vertex_b_H(h3, hh, h5); };
  CMat conj = apply_to_H(constant_lbt(sx), six, 2)(theta);
  CMat H = m5.eval_H(theta);
  const int phi[2] = {0, 1}, psi[2] = {2, 3};
  double worst = 0.0;
  for (int a : phi)
    for (int b : psi) {
      const int idx[4] = {4 * a + a, 4 * a + b, 4 * b + a, 4 * b + b};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(H(idx[i], idx[j]) - conj(i, j)));
    }
  return worst;
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw UsageError("transform file: expected key=value, got '" + trim(line) + "'");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

CMat read_matrix(const std::map<std::string, std::string>& kv, const std::string& name, int n, const CMat& fallback) {
  CMat M = fallback;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto it = kv.find(name + "." + std::to_string(i) + "." + std::to_string(j));
      if (it != kv.end()) M(i - 1, j - 1) = parse_complex(it->second);
    }
  return M;
}

}  // namespace

TransformSpec parse_transform(const std::string& text, int n) {
  auto kv = parse_kv(text);
  auto get = [&](const std::string& k, const std::string& d) { return kv.count(k) ? kv.at(k) : d; };
  const std::string variant = get("variant", "");
  const std::string label = get("label", variant);
  const CMat Z = CMat::Zero(n, n);
  if (variant == "lbt" || variant == "twist") {
    // V(theta) = M exp(theta A)
    CMat M = read_matrix(kv, "M", n, identity(n)), A = read_matrix(kv, "A", n, Z);
    MatFun V = [M, A](cplx t) { return CMat(M * CMat(t * A).exp()); };
    MatFun dV = [M, A](cplx t) { return CMat(M * CMat(t * A).exp() * A); };
    return variant == "lbt" ? lbt(V, dV, label) : twist(V, dV, label);
  }
  if (variant == "two-twist") return two_twist(read_matrix(kv, "U", n, identity(n)), read_matrix(kv, "V", n, identity(n)), label);
  if (variant == "normalization") {
    // g(u,v) = exp(G(u) - G(v)), G' = g.f
    Params p;
    for (auto& [k, v] : kv)
      if (k.rfind("g.", 0) == 0) p[k] = parse_complex(v);
    Fn g = Fn::from(p, "g");
    return normalization([g](cplx u, cplx v) { return std::exp(g.F(u) - g.F(v)); }, [g](cplx t) { return g.f(t); },
                         label);
  }
  if (variant == "reparameterization") {
    cplx c[4];
    for (int k = 0; k < 4; ++k) c[k] = parse_complex(get("p" + std::to_string(k), "0"));
    return reparameterization([=](cplx u) { return c[0] + u * (c[1] + u * (c[2] + u * c[3])); },
                              [=](cplx u) { return c[1] + u * (2.0 * c[2] + 3.0 * u * c[3]); }, label);
  }
  if (variant == "discrete") {
    const std::string map = get("map", "");
    if (map == "PRP") return discrete(DiscreteMap::PRP);
    if (map == "T") return discrete(DiscreteMap::T);
    if (map == "PTP") return discrete(DiscreteMap::PTP);
    throw UsageError("transform file: map must be PRP, T or PTP");
  }
  throw UsageError("transform file: unknown variant '" + variant + "'");
}

}  // namespace ybelab
