// su2k: SU(2)_k model data, axiom verification, universality certificates and double-braid synthesis.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "su2k/io/report.hpp"
#include "su2k/regression.hpp"

namespace {

using namespace su2k;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string k_text;
  std::string format = "text";
  std::string output;
  int precision = 53;
  std::optional<double> tol;
  int k_max = 30;
  std::optional<long> order_bound;
  std::uint64_t seed = kDefaultSeed;
  int max_depth = 10;
  std::size_t beam = 0;
  double delta = 1e-6;
  std::size_t max_states = 5'000'000;
  std::size_t samples = 20;
  std::string target;
  std::string target_word;
  std::string target_name;
  std::string mode = "auto";
  bool no_f = false;
};

struct KRange {
  int from;
  int to;
};

KRange parse_k(const std::string& text, int lowest, int k_max) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("--k expects N or A..B, got '" + text + "'");
  const int from = std::stoi(m[1].str());
  const int to = m[2].matched ? std::stoi(m[2].str()) : from;
  if (from < lowest) throw UsageError("--k must be >= " + std::to_string(lowest) + " for this command, got " + std::to_string(from));
  if (to < from) throw UsageError("--k range " + text + " is empty");
  if (to > k_max) throw UsageError("--k " + std::to_string(to) + " exceeds --k-max " + std::to_string(k_max));
  return {from, to};
}

int single_k(const Options& o, int lowest) {
  const KRange r = parse_k(o.k_text, lowest, o.k_max);
  if (r.from != r.to) throw UsageError("this command takes a single level, not a range");
  return r.from;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + o.output + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_model(const Options& o) {
  const int k = single_k(o, 0);
  const ModelData model{Level(k)};
  if (o.format == "json") emit(o, dump(io::model_json(model, !o.no_f, o.precision)));
  else if (o.format == "csv") emit(o, io::model_csv(model));
  else emit(o, io::model_text(model));
  return kExitOk;
}

double default_tol(int bits) {
  switch (precision_tier(bits)) {
    case 53: return 1e-9;
    case 128: return 1e-25;
    case 256: return 1e-60;
    default: return 1e-130;
  }
}

int cmd_verify(const Options& o, bool precision_given) {
  const KRange range = parse_k(o.k_text, 0, o.k_max);
  if (o.mode != "auto" && o.mode != "exact" && o.mode != "numeric") throw UsageError("--mode must be auto, exact or numeric");
  const double tol = o.tol.value_or(o.mode == "exact" ? 1e-40 : default_tol(o.precision));
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  bool all = true;
  json levels = json::array();
  std::string csv = io::axiom_csv_header(), text;
  for (int k = range.from; k <= range.to; ++k) {
    const ModelData model{Level(k)};
    const bool exact = o.mode == "exact" || (o.mode == "auto" && !precision_given && k <= 12);
    std::vector<AxiomReport> reports{check_fusion_axioms(model)};
    AxiomReport modular{"spins-dims-S", k};
    try {
      const auto m = validate_spins_dims_smatrix(model);
      modular.checked = m.spin_conditions + static_cast<std::size_t>(2 * model.label_count());
      modular.exact = modular.checked;
    } catch (const IntegrityError& e) {
      modular.fail(e.what());
    }
    reports.push_back(modular);
    if (exact) {
      reports.push_back(verify_pentagon_exact(model, tol));
      reports.push_back(verify_hexagon_exact(model, tol));
    } else {
      dispatch_precision(o.precision, [&]<class Real>() {
        reports.push_back(verify_pentagon_numeric<Real>(model.level(), Real(tol)));
        reports.push_back(verify_hexagon_numeric<Real>(model.level(), Real(tol)));
      });
    }
    json level{{"k", k}, {"mode", exact ? "exact" : "numeric"}, {"reports", json::array()}};
    for (const auto& r : reports) {
      all = all && r.holds;
      level["reports"].push_back(io::axiom_json(r));
      csv += io::axiom_csv_row(r);
      text += io::axiom_text(r);
    }
    levels.push_back(level);
  }
  if (o.format == "json") {
    emit(o, dump({{"schema", io::kVerifySchema}, {"precision", o.precision}, {"tol", tol}, {"levels", levels}, {"all_pass", all}}));
  } else if (o.format == "csv") {
    emit(o, csv);
  } else {
    emit(o, text + (all ? "all checks pass\n" : "SOME CHECKS FAIL\n"));
  }
  return all ? kExitOk : kExitFailure;
}

int cmd_universality(const Options& o) {
  const KRange range = parse_k(o.k_text, 2, o.k_max);
  if (o.order_bound && *o.order_bound < 1) throw UsageError("--order-bound must be positive");
  json certs = json::array();
  std::string csv = io::certificate_csv_header(), text;
  for (int k = range.from; k <= range.to; ++k) {
    const Certificate c = kitaev_certificate(Level(k), o.order_bound);
    certs.push_back(io::certificate_json(c, o.precision));
    csv += io::certificate_csv_row(c);
    text += io::certificate_text(c);
  }
  if (o.format == "json") emit(o, dump({{"schema", io::kCertificateSchema}, {"certificates", certs}}));
  else if (o.format == "csv") emit(o, csv);
  else emit(o, text);
  return kExitOk;
}

int cmd_statements(const Options& o) {
  const KRange range = parse_k(o.k_text, 3, o.k_max);
  json rows = json::array();
  std::ostringstream csv, text;
  csv << "k,cos2,cos4,combination,cos_theta\n";
  for (int k = range.from; k <= range.to; ++k) {
    const auto s = statements_ABCD(k);
    rows.push_back(io::statements_json(s));
    auto q = [](const std::optional<mpq_class>& x) { return x ? x->get_str() : std::string("irrational"); };
    const std::string comb = s.combination ? s.combination->to_string(k) : std::string("none");
    csv << k << "," << q(s.cos2) << "," << q(s.cos4) << ",\"" << comb << "\"," << q(s.cos_theta) << "\n";
    text << "k=" << k << ": cos(2pi/" << k + 2 << ") " << q(s.cos2) << ", cos(4pi/" << k + 2 << ") " << q(s.cos4) << ", combination " << comb
         << ", cos(theta) " << q(s.cos_theta) << "\n";
  }
  if (o.format == "json") emit(o, dump({{"schema", io::kStatementsSchema}, {"levels", rows}}));
  else if (o.format == "csv") emit(o, csv.str());
  else emit(o, text.str());
  return kExitOk;
}

SearchConfig search_config(const Options& o, int k) {
  SearchConfig c;
  c.k = k;
  c.max_depth = o.max_depth;
  c.beam_width = o.beam;
  c.delta = o.delta;
  c.max_states = o.max_states;
  if (o.tol) c.epsilon = *o.tol;
  try {
    c.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return c;
}

CMatrixD named_target(const std::string& name) {
  const double h = 1 / std::sqrt(2.0);
  CMatrixD m = CMatrixD::identity(2);
  if (name == "identity") return m;
  if (name == "not" || name == "x") {
    m(0, 0) = m(1, 1) = ComplexD(0.0);
    m(0, 1) = m(1, 0) = ComplexD(1.0);
  } else if (name == "z") {
    m(1, 1) = ComplexD(-1.0);
  } else if (name == "hadamard") {
    m(0, 0) = m(0, 1) = m(1, 0) = ComplexD(h);
    m(1, 1) = ComplexD(-h);
  } else if (name == "t") {
    m(1, 1) = ComplexD(h, h);
  } else {
    throw UsageError("unknown --target-name '" + name + "' (identity, not, z, hadamard, t)");
  }
  return m;
}

int cmd_synth(const Options& o) {
  const int k = single_k(o, 2);
  const int given = !o.target.empty() + !o.target_word.empty() + !o.target_name.empty();
  if (given != 1) throw UsageError("synth needs exactly one of --target, --target-word, --target-name");
  const SearchConfig config = search_config(o, k);
  CMatrixD target;
  try {
    if (!o.target.empty()) target = io::read_matrix_file(o.target);
    else if (!o.target_word.empty()) target = evaluate_word(dense_qubit_basis(Level(k)), BraidWord::parse(o.target_word));
    else target = named_target(o.target_name);
    if (target.dim() != 2) throw DomainError("target must be a 2x2 matrix");
    if (unitarity_defect(target) > 1e-9) throw DomainError("target matrix is not unitary");
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const SynthResult r = synthesize(config, target);
  if (o.format == "json") emit(o, dump(io::synth_json(config, r)));
  else if (o.format == "csv") emit(o, io::synth_csv(r));
  else emit(o, io::synth_text(config, r));
  std::cerr << "synth: " << r.explored << " products in " << r.seconds << " s\n";
  return kExitOk;
}

int cmd_profile(const Options& o) {
  const int k = single_k(o, 2);
  if (o.samples < 1) throw UsageError("--samples must be >= 1");
  const SearchConfig config = search_config(o, k);
  const ErrorProfile p = error_profile(config, o.samples, o.seed);
  if (o.format == "json") emit(o, dump(io::profile_json(config, p)));
  else emit(o, io::profile_csv(p));
  return kExitOk;
}

int cmd_regression(const Options& o) {
  const auto checks = run_regression_suite(o.k_max);
  bool all = true;
  json rows = json::array();
  std::string text;
  for (const auto& c : checks) {
    all = all && c.passed;
    rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
  }
  if (o.format == "json") emit(o, dump({{"schema", "su2k.regression/1"}, {"k_max", o.k_max}, {"checks", rows}, {"all_pass", all}}));
  else emit(o, text);
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"SU(2)_k anyon model data, universality certificates and double-braid synthesis"};
  app.set_help_all_flag("--help-all", "Show help for all subcommands");
  app.fallthrough();
  bool regression = false;
  app.add_flag("--paper-regression", regression, "Run the built-in regression suite of published values");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--output,-o", o.output, "Write output to this file instead of stdout");
  auto* precision = app.add_option("--precision", o.precision, "Floating precision in bits (53, 128, 256, 512)")
                        ->check(CLI::IsMember({53, 128, 256, 512}))
                        ->envname("SU2K_PRECISION")
                        ->capture_default_str();
  app.add_option("--k-max", o.k_max, "Largest level accepted")->check(CLI::Range(0, 30))->capture_default_str();

  auto add_k = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--k", o.k_text, "Level N or range A..B");
    if (required) opt->required();
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-depth", o.max_depth, "Largest word depth")->check(CLI::Range(1, 64))->capture_default_str();
    sub->add_option("--beam", o.beam, "Beam width (0 = exhaustive)")->capture_default_str();
    sub->add_option("--delta", o.delta, "Gate identification grid")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--max-states", o.max_states, "Cap on stored gates")->check(CLI::PositiveNumber)->capture_default_str();
  };

  auto* model = app.add_subcommand("model", "Dump labels, fusion rules, R- and F-symbols, spins, dimensions and S");
  add_k(model);
  model->add_flag("--no-f", o.no_f, "Omit F-symbols from the JSON dump");

  auto* verify = app.add_subcommand("verify", "Check fusion, pentagon, hexagon, spin, dimension and S-matrix axioms");
  add_k(verify);
  verify->add_option("--tol", o.tol, "Residual tolerance");
  verify->add_option("--mode", o.mode, "exact, numeric or auto (exact for k <= 12 unless --precision is given)")->capture_default_str();

  auto* universality = app.add_subcommand("universality", "Double-braid universality certificate per level");
  add_k(universality);
  universality->add_option("--order-bound", o.order_bound, "Totient bound for the root-of-unity search");

  auto* statements = app.add_subcommand("statements", "Rationality of cos(2pi/(k+2)), cos(4pi/(k+2)), their combinations and cos(theta)");
  add_k(statements);

  auto* synth = app.add_subcommand("synth", "Best double-braid word per depth for one target gate");
  add_k(synth);
  synth->add_option("--target", o.target, "JSON file {\"entries\": [[[re, im], ...], ...]}");
  synth->add_option("--target-word", o.target_word, "Braid word such as \"s1^2 s2^-4\"");
  synth->add_option("--target-name", o.target_name, "identity, not, z, hadamard or t");
  synth->add_option("--tol", o.tol, "Stop once the error is at most this");
  add_search(synth);

  auto* profile = app.add_subcommand("profile", "Best-error statistics per depth over seeded Haar-random targets");
  add_k(profile);
  profile->add_option("--samples", o.samples, "Number of targets")->capture_default_str();
  profile->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  add_search(profile);

  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (regression) {
      if (!app.get_subcommands().empty()) throw UsageError("--paper-regression does not combine with a subcommand");
      return cmd_regression(o);
    }
    if (model->parsed()) return cmd_model(o);
    if (verify->parsed()) return cmd_verify(o, precision->count() > 0);
    if (universality->parsed()) return cmd_universality(o);
    if (statements->parsed()) return cmd_statements(o);
    if (synth->parsed()) return cmd_synth(o);
    if (profile->parsed()) return cmd_profile(o);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "su2k: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "su2k: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "su2k: check failed: " << e.what() << "\n";
    return kExitFailure;
  }
}
