#include "ybelab/functions.hpp"

#include "ybelab/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace ybelab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse complex literal '" + whole + "'");
  }
  if (used != s.size()) throw UsageError("cannot parse complex literal '" + whole + "'");
  return v;
}

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw UsageError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  s.pop_back();
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s, text)};
  return {parse_real(s.substr(0, split), text), parse_real(s.substr(split), text)};
}

std::string format_complex(cplx z, int precision) {
  char buf[96];
  double re = z.real(), im = z.imag();
  double eps = std::pow(10.0, -precision);
  if (std::abs(re) < eps) re = 0.0;
  if (std::abs(im) < eps) im = 0.0;
  std::snprintf(buf, sizeof buf, "%.*f%+.*fi", precision, re + 0.0, precision, im + 0.0);
  return buf;
}

Params parse_params(const std::string& text) {
  Params p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw UsageError("config line " + std::to_string(lineno) + ": empty key");
    p[key] = parse_complex(trim(line.substr(eq + 1)));
  }
  return p;
}

Params load_params(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_params(ss.str());
}

cplx param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw UsageError("missing parameter '" + key + "'");
  return it->second;
}

cplx Fn::f(cplx t) const { return c0 + c1 * t + c2 * t * t + a * std::exp(b * t); }

cplx Fn::F(cplx t) const {
  cplx poly = c0 * t + c1 * t * t / 2.0 + c2 * t * t * t / 3.0;
  if (b == 0.0) return poly + a * t;
  return poly + a / b * std::exp(b * t);
}

cplx Fn::df(cplx t) const { return c1 + 2.0 * c2 * t + a * b * std::exp(b * t); }

cplx Fn::d2f(cplx t) const { return 2.0 * c2 + a * b * b * std::exp(b * t); }

Fn Fn::constant(cplx c) { return poly(c, 0.0, 0.0); }

Fn Fn::poly(cplx c0, cplx c1, cplx c2) {
  Fn r;
  r.c0 = c0;
  r.c1 = c1;
  r.c2 = c2;
  return r;
}

Fn Fn::expo(cplx a, cplx b) {
  Fn r;
  r.a = a;
  r.b = b;
  return r;
}

Fn Fn::from(const Params& p, const std::string& name) {
  Fn r;
  auto get = [&](const char* k, cplx& dst) {
    auto it = p.find(name + "." + k);
    if (it != p.end()) dst = it->second;
  };
  get("c0", r.c0);
  get("c1", r.c1);
  get("c2", r.c2);
  get("a", r.a);
  get("b", r.b);
  return r;
}

void Fn::store(Params& p, const std::string& name) const {
  p[name + ".c0"] = c0;
  p[name + ".c1"] = c1;
  p[name + ".c2"] = c2;
  p[name + ".a"] = a;
  p[name + ".b"] = b;
}

std::vector<FunctionPreset> default_presets() {
  using std::numbers::pi;
  return {
      {"xxz-nondiff-default", {{"h1", Fn::constant(1.0)}, {"h2", Fn::poly(1.0, 1.0)}}},
      {"xxz-nondiff-constant", {{"h1", Fn::constant(1.0)}, {"h2", Fn::constant(1.5)}}},
      {"6vB-default", {{"h4", Fn::poly(1.0, 0.5)}, {"h5", Fn::expo(1.0, 1.0 / 3.0)}}},
      {"8vB-default", {{"eta", Fn::poly(pi / 2.0, 0.2)}}},
      {"offdiag-default", {{"h3", Fn::poly(0.5, 0.2)}, {"h7", Fn::expo(1.0, 0.2)}}},
      {"15v-c2-default", {{"g1", Fn::constant(0.7)}, {"g2", Fn::constant(0.3)}, {"g", Fn::constant(0.5)}}},
      {"8vA-default", {{"h1", Fn::poly(0.2, 1.0)}, {"h2", Fn::poly(0.5, 0.3)}, {"h6", Fn::poly(1.0, 0.0, 0.2)}}},
      {"so4-default", {{"h1", Fn::constant(0.3)}, {"h2", Fn::poly(1.0, 0.5)}, {"h4", Fn::expo(1.0, 0.2)}}},
      {"su22-default", {{"f", Fn::constant(0.4)}, {"g", Fn::poly(0.9, 0.1)}, {"h", Fn::expo(1.0, 0.2)}}},
      {"su22-m5-default", {{"f", Fn::poly(0.0, 1.0)}, {"h", Fn::constant(1.0)}}},
  };
}

FunctionPreset preset(const std::string& id) {
  for (auto& p : default_presets())
    if (p.id == id) return p;
  throw UsageError("unknown preset '" + id + "'");
}

cplx sinw(cplx w, cplx x) {
  cplx z = w * x;
  if (std::abs(z) < 1e-4) return x * (1.0 - z * z / 6.0 + z * z * z * z / 120.0);
  return std::sin(z) / w;
}

}  // namespace ybelab
