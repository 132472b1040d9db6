#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ybelab/tensor.hpp"

namespace ybelab {

using Params = std::map<std::string, cplx>;

// "a+bi", "a", "bi", "-i", "1e-3-2.5i"
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z, int precision = 12);

// key=value lines, '#' comments
Params parse_params(const std::string& text);
Params load_params(const std::string& path);

cplx param(const Params& p, const std::string& key);

// f(t) = c0 + c1 t + c2 t^2 + a e^{b t}, with closed-form antiderivative F
struct Fn {
  cplx c0{0.0}, c1{0.0}, c2{0.0}, a{0.0}, b{0.0};

  cplx f(cplx t) const;
  cplx F(cplx t) const;
  cplx df(cplx t) const;
  cplx d2f(cplx t) const;

  static Fn constant(cplx c);
  static Fn poly(cplx c0, cplx c1, cplx c2 = 0.0);
  static Fn expo(cplx a, cplx b);
  // reads name.c0, name.c1, name.c2, name.a, name.b
  static Fn from(const Params& p, const std::string& name);
  void store(Params& p, const std::string& name) const;
};

struct FunctionPreset {
  std::string id;
  std::vector<std::pair<std::string, Fn>> fns;
};

std::vector<FunctionPreset> default_presets();
FunctionPreset preset(const std::string& id);

// sin(w x)/w, smooth as w -> 0
cplx sinw(cplx w, cplx x);

}  // namespace ybelab
