#include "ybelab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ybelab {

namespace {

nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  return "inf";
}

std::string sci(double x) {
  if (!std::isfinite(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

nlohmann::json to_json(const CheckResult& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["residual"] = number(c.residual);
  j["tol"] = c.tol;
  j["pass"] = c.pass;
  j["skipped"] = c.skipped;
  j["domain_error"] = c.domain_error;
  j["note"] = c.note;
  j["samples"] = c.samples;
  j["worst"] = c.worst;
  return j;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["model"] = r.model;
  j["seed"] = r.seed;
  j["samples"] = r.sample_count;
  j["pass"] = r.pass();
  j["checks"] = nlohmann::json::array();
  for (auto& c : r.checks) j["checks"].push_back(to_json(c));
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::json to_json(const std::vector<VerificationReport>& rs) {
  nlohmann::json j;
  j["reports"] = nlohmann::json::array();
  for (auto& r : rs) j["reports"].push_back(to_json(r));
  return j;
}

nlohmann::json strip_timing(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

std::string summary_line(const CheckResult& c) {
  std::ostringstream o;
  o << "  " << c.name << ": ";
  if (c.skipped)
    o << "skipped";
  else
    o << (c.pass ? "pass" : "FAIL") << "  residual " << sci(c.residual) << "  tol " << sci(c.tol);
  if (!c.note.empty()) o << "  [" << c.note << "]";
  if (!c.pass && !c.worst.empty()) o << "  at " << c.worst;
  return o.str();
}

std::string summary(const VerificationReport& r) {
  std::ostringstream o;
  o << r.model << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
  for (auto& c : r.checks) o << summary_line(c) << "\n";
  return o.str();
}

}  // namespace ybelab
