// studydet: group determinants, quaternion Study determinants and seeded
// verification suites from the command line.
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 precondition.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "studydet/groupdet.hpp"
#include "studydet/io.hpp"
#include "studydet/sdet.hpp"
#include "studydet/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kPropertyFailure = 1, kInputError = 2, kPrecondition = 3 };

struct Result {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string command;
  json config = json::object();
  std::vector<Result> results;
  std::vector<std::string> lines;

  void add(std::string name, bool pass, std::string detail) {
    results.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

struct Options {
  std::string group, subgroup, matrix, irreps, suite = "all", output = "text";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

bool timing_enabled() {
  const char* v = std::getenv("STUDYDET_TIMING");
  return v != nullptr && std::string(v) == "1";
}

void emit(const Report& report, const Options& opt, std::optional<double> elapsed_ms) {
  if (opt.output == "json") {
    json results = json::array();
    for (const auto& r : report.results) results.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    json out{{"command", report.command}, {"config", report.config}, {"results", results}};
    out["elapsed_ms"] = elapsed_ms ? json(*elapsed_ms) : json(nullptr);
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const auto& line : report.lines) std::cout << line << "\n";
  if (elapsed_ms) std::cout << "elapsed_ms: " << *elapsed_ms << "\n";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void add_factors(Report& report, const studydet::FactorizationReport& f) {
  for (const auto& factor : f.factors) {
    std::string text = factor.poly.to_string();
    std::string shown = factor.multiplicity == 1 ? text : "(" + text + ")^" + std::to_string(factor.multiplicity);
    report.lines.push_back("factor " + factor.label + ": " + shown);
    report.add("factor " + factor.label, true, shown);
  }
  report.lines.push_back("degrees-check: " + yes_no(f.degrees_ok));
  report.add("degrees-check", f.degrees_ok, f.degrees_ok ? "ok" : "a factor has the wrong total degree");
  report.lines.push_back("product-check: " + yes_no(f.product_check));
  report.add("product-check", f.product_check, f.product_check ? "Theta(G) = " + f.target : f.detail);
}

void cmd_groupdet(const std::string& sub, const Options& opt, Report& report) {
  if (opt.group.empty()) throw studydet::InputError("--group PATH is required");
  report.config["group"] = opt.group;
  auto tg = studydet::io::load_group(opt.group);
  const auto& g = tg.group;
  if (!tg.cocycle.is_trivial())
    throw studydet::PreconditionError("group determinants need an untwisted group; '" + g->name() + "' has a cocycle");

  if (sub == "compute") {
    auto r = studydet::group_determinant(g);
    auto text = r.theta.to_string();
    report.lines.push_back(text);
    report.lines.push_back("routes-agree: " + yes_no(r.routes_agree));
    report.add("theta", r.theta.is_homogeneous() && r.theta.total_degree() == static_cast<int>(g->order()), text);
    report.add("routes-agree", r.routes_agree, r.routes_agree ? "Det(x_{gh^-1}) = Det(sum x_g L(g))" : "routes differ");
    return;
  }
  if (sub == "dedekind") {
    auto f = studydet::dedekind_factorize(g);
    report.lines.push_back("Theta(" + g->name() + ") = " + f.target);
    add_factors(report, f);
    return;
  }
  if (sub == "extension") {
    if (opt.subgroup.empty()) throw studydet::InputError("extension requires --subgroup NAME");
    report.config["subgroup"] = opt.subgroup;
    auto h = studydet::io::subgroup(*g, opt.subgroup);
    auto rel = studydet::theta_relative(g, h);
    auto f = studydet::extension_check(g, h);
    report.lines.push_back("Theta(" + g->name() + ") = " + f.target);
    report.lines.push_back("Theta(G:H) = " + rel.theta.to_string());
    report.add("Theta(G:H)", rel.degrees_ok, rel.theta.to_string());
    add_factors(report, f);
    return;
  }
  if (sub == "frobenius") {
    if (opt.irreps.empty()) throw studydet::InputError("frobenius requires --irreps PATH");
    report.config["irreps"] = opt.irreps;
    auto reps = studydet::io::load_irreps(opt.irreps, *g);
    auto f = studydet::frobenius_verify(g, reps);
    report.lines.push_back("Theta(" + g->name() + ") = " + f.target);
    add_factors(report, f);
    if (!opt.subgroup.empty()) {
      report.config["subgroup"] = opt.subgroup;
      auto h = studydet::io::subgroup(*g, opt.subgroup);
      bool bound = studydet::degree_bound_check(*g, h, reps);
      bool matches = studydet::frobenius_matches_extension(g, h, reps);
      report.lines.push_back("degree-bound: " + yes_no(bound));
      report.lines.push_back("matches-extension: " + yes_no(matches));
      report.add("degree-bound", bound, "deg phi <= [G:H] = " + std::to_string(g->order() / h.size()));
      report.add("matches-extension", matches, "prod Det(phi(X))^d = prod chi(Theta(G:H))");
    }
    return;
  }
  throw studydet::InputError("unknown groupdet subcommand '" + sub + "'");
}

void cmd_quaternion(const Options& opt, Report& report) {
  if (opt.matrix.empty()) throw studydet::InputError("--matrix PATH is required");
  report.config["matrix"] = opt.matrix;
  auto a = studydet::io::load_quaternion_matrix(opt.matrix);
  auto s = studydet::study_det(a);
  bool real = studydet::imaginary_part(s).is_zero();
  auto value = studydet::real_part(s).to_string();
  bool invertible = !s.is_zero();
  auto inverse = studydet::inverse_matrix_via_regrep(studydet::quaternion_tower(), a);
  bool verdict = inverse.has_value() == invertible;
  if (inverse) {
    auto id = studydet::QuaternionMatrix::identity(a.rows(), studydet::quaternion_algebra()->one());
    verdict = verdict && a * *inverse == id && *inverse * a == id;
  }
  report.lines.push_back("Sdet = " + (real ? value : s.to_string()) + "; invertible: " + yes_no(invertible));
  report.lines.push_back("real: " + yes_no(real));
  report.lines.push_back("inverse-check: " + yes_no(verdict));
  report.add("Sdet", true, real ? value : s.to_string());
  report.add("invertible", true, yes_no(invertible));
  report.add("real", real, real ? "imaginary part is 0" : "imaginary part " + studydet::imaginary_part(s).to_string());
  report.add("inverse-check", verdict, inverse ? "inverse found and verified on both sides" : "no inverse");
}

void cmd_verify(const Options& opt, Report& report) {
  report.config["suite"] = opt.suite;
  report.config["trials"] = opt.trials;
  report.config["seed"] = opt.seed;
  auto results = studydet::run_suite(opt.suite, studydet::VerifyConfig{opt.seed, opt.trials});
  for (const auto& p : results) {
    report.lines.push_back(p.name + ": " + p.detail());
    report.add(p.name, p.pass(), p.detail());
  }
  report.lines.push_back(std::string("all pass: ") + yes_no(report.all_pass()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Study-type determinants, group determinants and their verification suites"};
  app.require_subcommand(1);
  Options opt;
  std::string groupdet_sub;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* groupdet = app.add_subcommand("groupdet", "Group determinants and their factorizations");
  groupdet->add_option("action", groupdet_sub, "compute, dedekind, extension or frobenius")
      ->required()
      ->check(CLI::IsMember({"compute", "dedekind", "extension", "frobenius"}));
  groupdet->add_option("--group", opt.group, "Group file (JSON)");
  groupdet->add_option("--subgroup", opt.subgroup, "Subgroup name from the group file");
  groupdet->add_option("--irreps", opt.irreps, "Representations file (JSON)");
  add_output(groupdet);

  auto* quaternion = app.add_subcommand("quaternion", "Study determinant of a quaternion matrix");
  quaternion->add_option("--matrix", opt.matrix, "Quaternion matrix file (JSON)");
  add_output(quaternion);

  auto* verify = app.add_subcommand("verify", "Run seeded property suites");
  verify->add_option("--suite", opt.suite, "Suite name, or all");
  verify->add_option("--trials", opt.trials, "Draws per property")->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "Master seed");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (groupdet->parsed()) {
      report.command = "groupdet " + groupdet_sub;
      cmd_groupdet(groupdet_sub, opt, report);
    } else if (quaternion->parsed()) {
      report.command = "quaternion";
      cmd_quaternion(opt, report);
    } else {
      report.command = "verify";
      cmd_verify(opt, report);
    }
    code = report.all_pass() ? kOk : kPropertyFailure;
  } catch (const studydet::PreconditionError& e) {
    report.add("precondition", false, e.what());
    report.lines.push_back(std::string("precondition failed: ") + e.what());
    std::cerr << "precondition failed: " << e.what() << "\n";
    code = kPrecondition;
  } catch (const studydet::InputError& e) {
    report.add("input", false, e.what());
    report.lines.push_back(std::string("input error: ") + e.what());
    std::cerr << "input error: " << e.what() << "\n";
    code = kInputError;
  } catch (const studydet::StructuralError& e) {
    report.add("input", false, e.what());
    report.lines.push_back(std::string("input error: ") + e.what());
    std::cerr << "input error: " << e.what() << "\n";
    code = kInputError;
  }
  std::optional<double> elapsed;
  if (timing_enabled())
    elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (code == kOk || code == kPropertyFailure || opt.output == "json") emit(report, opt, elapsed);
  return code;
}
