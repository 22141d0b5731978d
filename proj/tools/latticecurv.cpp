#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "latticecurv/config.hpp"
#include "latticecurv/energy.hpp"
#include "latticecurv/error.hpp"
#include "latticecurv/ground_state.hpp"
#include "latticecurv/report.hpp"
#include "latticecurv/svg.hpp"
#include "latticecurv/verify.hpp"

namespace lc = latticecurv;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;

struct ModelArgs {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string potential = "hr";
  double p = 6.0;
  std::string strategy = "ear-clip";
};

void add_model_options(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--alpha", m.alpha, "lower end of the bond range");
  cmd->add_option("--beta", m.beta, "upper end of the bond range");
  cmd->add_option("--potential", m.potential, "pair potential")->check(CLI::IsMember({"hr", "lj"}));
  cmd->add_option("--p", m.p, "Lennard-Jones exponent")->check(CLI::PositiveNumber);
  cmd->add_option("--triangulation", m.strategy, "triangulation strategy")->check(CLI::IsMember({"ear-clip", "fan"}));
}

lc::AnalysisOptions analysis_options(const ModelArgs& m) {
  lc::AnalysisOptions o;
  o.potential = m.potential == "lj" ? lc::Potential::lennard_jones(m.p) : lc::Potential::heitmann_radin();
  o.strategy = m.strategy == "fan" ? lc::TriangulationStrategy::Fan : lc::TriangulationStrategy::EarClip;
  if (m.alpha || m.beta) o.range = lc::BondRange{m.alpha.value_or(1.0), m.beta.value_or(1.0)};
  return o;
}

std::optional<double> env_tol() {
  const char* raw = std::getenv("LATTICECURV_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(tol > 0.0)) throw lc::ParseError("LATTICECURV_TOL must be a positive number");
  return tol;
}

lc::Configuration load(const std::string& path) {
  lc::Configuration config = lc::load_configuration(path);
  if (const auto tol = env_tol()) {
    config = lc::Configuration(std::vector<lc::Point>(config.points().begin(), config.points().end()), *tol);
  }
  return config;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lc::ParseError("cannot write " + path);
  out << content;
  if (!out) throw lc::ParseError("failed writing " + path);
}

nlohmann::json error_json(const lc::Error& e) {
  nlohmann::json j{{"error", e.kind()}, {"message", e.what()}};
  if (const auto* v = dynamic_cast<const lc::IdentityViolation*>(&e)) {
    j["identity"] = v->identity();
    j["lhs"] = v->lhs();
    j["rhs"] = v->rhs();
  } else if (const auto* p = dynamic_cast<const lc::PlanarityError*>(&e)) {
    j["beta"] = p->beta();
    j["d_min"] = p->dmin();
  } else if (const auto* d = dynamic_cast<const lc::DuplicatePointError*>(&e)) {
    j["first"] = d->first();
    j["second"] = d->second();
  } else if (const auto* s = dynamic_cast<const lc::SamplingError*>(&e)) {
    j["attempts"] = s->attempts();
  }
  return j;
}

int run_analyze(const std::string& input, const ModelArgs& m, const std::string& format) {
  const auto report = lc::analyze(load(input), analysis_options(m));
  if (format == "text") {
    std::cout << lc::to_text(report);
  } else {
    std::cout << lc::to_json(report).dump(2) << "\n";
  }
  return kOk;
}

int run_render(const std::string& input, const ModelArgs& m, const std::string& out, const std::string& color_by,
               bool labels) {
  const auto report = lc::analyze(load(input), analysis_options(m));
  lc::SvgOptions o;
  o.color_by = color_by == "curvature" ? lc::ColorBy::Curvature : lc::ColorBy::Class;
  o.labels = labels;
  const std::string svg = lc::render_svg(report, o);
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    write_file(out, svg);
  }
  return kOk;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, const ModelArgs& m) {
  lc::VerifyOptions o;
  o.trials = trials;
  o.seed = seed;
  if (m.potential == "lj") o.lj_exponent = m.p;
  const lc::SuiteResult r = lc::run_suite(suite, o);
  for (std::size_t k = 0; k < r.cases.size(); ++k) {
    const auto& c = r.cases[k];
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.label << ": " << c.detail << "\n";
  }
  if (suite == "decomposition") std::cout << "max relative residual " << r.max_relative_residual << "\n";
  std::cout << r.suite << ": " << r.passed() << " passed, " << r.failed() << " failed\n";
  return r.ok() ? kOk : kViolation;
}

int run_ground_state(int n, const std::string& format, const std::string& out) {
  const lc::Configuration x = lc::build_minimizer(n);
  const lc::EnergyBreakdown e = lc::energy_decomposition(x, lc::Potential::heitmann_radin());
  std::string text;
  if (format == "xy") {
    text = lc::to_string(x, lc::ConfigFormat::XyText);
    text += "# N " + std::to_string(n) + "\n# " + lc::to_json(e).dump() + "\n";
  } else {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : x.points()) points.push_back({p.x, p.y});
    const nlohmann::json doc{{"v", lc::kReportVersion},
                             {"N", n},
                             {"points", std::move(points)},
                             {"tol", x.tol()},
                             {"energy", lc::to_json(e)}};
    text = doc.dump(2) + "\n";
  }
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bond graphs, discrete curvature and energy decomposition of planar particle configurations"};
  app.require_subcommand(1);

  ModelArgs model;
  std::string input;
  std::string format = "json";
  auto* analyze = app.add_subcommand("analyze", "full analysis report of a configuration file");
  analyze->add_option("input", input, "configuration (.json or xy text)")->required();
  add_model_options(analyze, model);
  analyze->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string out;
  std::string color_by = "class";
  bool labels = false;
  auto* render = app.add_subcommand("render", "SVG drawing of the triangulated bond graph");
  render->add_option("input", input, "configuration (.json or xy text)")->required();
  add_model_options(render, model);
  render->add_option("--out", out, "SVG output path, '-' for stdout");
  render->add_option("--color-by", color_by, "vertex colouring")->check(CLI::IsMember({"class", "curvature"}));
  render->add_flag("--labels", labels, "write the curvature next to each particle");

  std::string suite;
  int trials = 100;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "run an invariant suite over generated corpora");
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"gauss-bonnet", "decomposition", "shell", "removal", "minimizers"}));
  verify->add_option("--trials", trials, "number of generated cases")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--potential", model.potential, "potential for the decomposition suite")
      ->check(CLI::IsMember({"hr", "lj"}));
  verify->add_option("--p", model.p, "Lennard-Jones exponent")->check(CLI::PositiveNumber);

  int n = 0;
  std::string gs_format = "json";
  auto* ground = app.add_subcommand("ground-state", "Heitmann-Radin ground state with N particles");
  ground->add_option("N", n, "particle count")->required()->check(CLI::PositiveNumber);
  ground->add_option("--format", gs_format, "output format")->check(CLI::IsMember({"json", "xy"}));
  ground->add_option("--out", out, "output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*analyze) return run_analyze(input, model, format);
    if (*render) return run_render(input, model, out, color_by, labels);
    if (*verify) return run_verify(suite, trials, seed, model);
    if (*ground) return run_ground_state(n, gs_format, out);
  } catch (const lc::IdentityViolation& e) {
    std::cerr << error_json(e).dump() << "\n";
    return kViolation;
  } catch (const lc::Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kViolation;
  }
  return kBadInput;
}
