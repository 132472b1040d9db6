#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ybelab/errors.hpp"
#include "ybelab/report.hpp"
#include "ybelab/transforms.hpp"

using namespace ybelab;

namespace {

struct Options {
  int samples = 20;
  std::uint64_t seed = 1;
  std::string json;
  std::string config;
  Tolerances tol;
};

Params overrides_for(const Params& all, const ModelSpec& m, bool strict) {
  if (strict) return all;
  Params p;
  for (auto& [k, v] : all)
    if (m.params.count(k)) p[k] = v;
  return p;
}

ModelSpec load_model(const std::string& id, const Params& cfg, bool strict) {
  if (!is_model(id)) throw UnknownModel("unknown model '" + id + "'");
  ModelSpec base = make_model(id);
  return cfg.empty() ? base : make_model(id, overrides_for(cfg, base, strict));
}

void print_matrix(const CMat& M) {
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) std::cout << (j ? "  " : "") << format_complex(M(i, j), 12);
    std::cout << "\n";
  }
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

int exit_code(const std::vector<VerificationReport>& rs) {
  bool failed = false, domain = false;
  for (auto& r : rs)
    for (auto& c : r.checks) {
      if (c.domain_error) domain = true;
      if (!c.skipped && !c.pass) failed = true;
    }
  return domain ? 3 : (failed ? 1 : 0);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ybelab: numerical checks for non-difference Yang-Baxter solutions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--samples", o.samples, "sample count")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--json", o.json, "write the JSON report here (- for stdout)");
  app.add_option("--config", o.config, "key=value parameter overrides")->check(CLI::ExistingFile);
  app.add_option("--tol-ybe", o.tol.ybe);
  app.add_option("--tol-regularity", o.tol.regularity);
  app.add_option("--tol-braiding", o.tol.braiding);
  app.add_option("--tol-recovery", o.tol.recovery);
  app.add_option("--tol-sutherland", o.tol.sutherland);
  app.add_option("--tol-boost", o.tol.boost);
  app.add_option("--tol-transfer", o.tol.transfer);
  app.add_option("--tol-hermiticity", o.tol.hermiticity);
  app.add_option("--tol-normality", o.tol.normality);

  auto* list = app.add_subcommand("list", "list catalog models");

  auto* eval = app.add_subcommand("eval", "print R(u,v) or H(theta)");
  std::string kind, eval_id, u_text = "0", v_text = "0", theta_text = "0";
  eval->add_option("kind", kind)->required()->check(CLI::IsMember({"rmat", "hamil"}));
  eval->add_option("model", eval_id)->required();
  eval->add_option("--u", u_text);
  eval->add_option("--v", v_text);
  eval->add_option("--theta", theta_text);

  auto* check = app.add_subcommand("check", "run one check on one model");
  std::string check_name, check_id;
  check->add_option("name", check_name)->required();
  check->add_option("model", check_id)->required();

  auto* suite = app.add_subcommand("suite", "run every check on a model or on all models");
  std::string suite_id;
  suite->add_option("model", suite_id)->required();

  auto* transform = app.add_subcommand("transform", "run the suite on a transformed model");
  std::string spec_file, transform_id;
  transform->add_option("spec-file", spec_file)->required()->check(CLI::ExistingFile);
  transform->add_option("model", transform_id)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Params cfg = o.config.empty() ? Params{} : load_params(o.config);

    if (*list) {
      for (auto& m : list_models())
        std::cout << m.id << "  n=" << m.n << "  " << to_string(m.form) << (m.has_R() ? "" : "  (H only)") << "  "
                  << m.summary << "\n";
      return 0;
    }

    if (*eval) {
      ModelSpec m = load_model(eval_id, cfg, true);
      if (kind == "rmat") {
        if (!m.has_R()) throw MissingR("model " + m.id + " has no R-matrix");
        print_matrix(eval_R(m, parse_complex(u_text), parse_complex(v_text)));
      } else {
        print_matrix(eval_H(m, parse_complex(theta_text)));
      }
      return 0;
    }

    if (*check) {
      if (!is_check(check_name)) throw UsageError("unknown check '" + check_name + "'");
      ModelSpec m = load_model(check_id, cfg, true);
      VerificationReport r;
      r.model = m.id;
      r.seed = o.seed;
      r.sample_count = o.samples;
      r.checks.push_back(run_check(check_name, m, o.seed, o.samples, o.tol));
      if (o.json != "-") std::cout << summary(r);
      write_json(o.json, to_json(r));
      return exit_code({r});
    }

    if (*suite) {
      std::vector<std::string> ids;
      if (suite_id == "all") {
        ids = model_ids();
        std::sort(ids.begin(), ids.end());
      } else {
        if (!is_model(suite_id)) throw UnknownModel("unknown model '" + suite_id + "'");
        ids = {suite_id};
      }
      std::vector<VerificationReport> reports;
      for (auto& id : ids) {
        reports.push_back(run_suite(load_model(id, cfg, suite_id != "all"), o.seed, o.samples, o.tol));
        if (o.json != "-") std::cout << summary(reports.back());
      }
      write_json(o.json, suite_id == "all" ? to_json(reports) : to_json(reports.front()));
      return exit_code(reports);
    }

    if (*transform) {
      ModelSpec m = load_model(transform_id, cfg, true);
      TransformSpec t = parse_transform(read_file(spec_file), m.n);
      validate_payload(t, m.domain, m.n);
      VerificationReport r = closure_suite(t, m, o.seed, o.samples, o.tol);
      if (o.json != "-") std::cout << summary(r);
      write_json(o.json, to_json(r));
      return exit_code({r});
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainViolation& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
