#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wdiam/analysis.hpp"
#include "wdiam/asymptotics.hpp"
#include "wdiam/campaign.hpp"
#include "wdiam/io.hpp"
#include "wdiam/oracle.hpp"
#include "wdiam/sweep.hpp"

namespace wdiam::cli {

namespace {

using nlohmann::json;

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

void report(std::ostream& err, const Failure& f) {
  err << json{{"error", f.kind}, {"message", f.message}, {"exit_code", f.code}}.dump() << '\n';
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidConfig, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

WState load_state(const std::string& path, const std::vector<double>& coeffs, bool renormalize,
                  std::istream& in) {
  if (!coeffs.empty() && !path.empty()) {
    throw Error(Errc::InvalidConfig, "give either a state file or --coeffs, not both");
  }
  if (!coeffs.empty()) {
    json doc = {{"coeffs", coeffs}};
    if (renormalize) doc["renormalize"] = true;
    return io::parse_state(doc);
  }
  if (path.empty()) throw Error(Errc::InvalidConfig, "no state given");
  WState s = io::parse_state_text(read_source(path, in));
  if (renormalize && !s.renormalized()) {
    json doc = {{"coeffs", std::vector<double>(s.coeffs().begin(), s.coeffs().end())},
                {"renormalize", true}};
    return io::parse_state(doc);
  }
  return s;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      out_ = &fallback;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(Errc::InvalidConfig, "cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

void print_property(std::ostream& out, const PropertyResult& p) {
  out << "  " << (p.passed ? "ok  " : "FAIL") << ' ' << p.name << "  checked=" << p.checked
      << "  worst=" << format_double(p.measured) << "  bound=" << format_double(p.bound);
  if (!p.detail.empty()) out << "  (" << p.detail << ')';
  out << '\n';
  if (!p.passed && p.witness) {
    out << "       witness sample " << p.witness->sample_index << " seed " << p.witness->seed
        << " N=" << p.witness->coeffs.size() << '\n';
  }
}

void print_campaign(std::ostream& out, const char* title, const CampaignReport& rep) {
  const auto& e = rep.extremes;
  out << title << ": " << (rep.passed() ? "passed" : "FAILED") << "  (symmetric "
      << e.n_symmetric << ", asymmetric " << e.n_asymmetric << ", slight " << e.n_slight << ")\n";
  for (const auto& p : rep.properties) print_property(out, p);
}

void print_verify(std::ostream& out, const VerifyReport& rep) {
  print_campaign(out, "symmetric campaign", rep.symmetric);
  out << "  r^2 range " << format_double(rep.symmetric.extremes.min_r2_sym) << " .. "
      << format_double(rep.symmetric.extremes.max_r2_sym) << '\n';
  print_campaign(out, "asymmetric campaign", rep.asymmetric);
  out << "  min r^2 " << format_double(rep.asymmetric.extremes.min_r2_asym) << '\n';
  print_campaign(out, "mixed campaign", rep.mixed);
  if (rep.mixed.extremes.max_oracle_gap > 0.0) {
    out << "  max |g - g_oracle| " << format_double(rep.mixed.extremes.max_oracle_gap) << '\n';
  }
  if (rep.scaling) {
    const auto& t = *rep.scaling;
    out << "first critical value scaling: " << (t.passed ? "passed" : "FAILED")
        << "  slope=" << format_double(t.slope) << "  C=" << format_double(t.fitted_c)
        << "  above 1/3: " << (t.all_above_third ? "yes" : "no") << '\n';
    for (const auto& r : t.rows) {
      out << "  N=" << r.n << "  mean |r1^2-1/3|=" << format_double(r.mean_deviation)
          << "  max=" << format_double(r.max_deviation) << '\n';
    }
  }
  const auto& c = rep.continuity;
  out << "continuity: " << (c.passed ? "passed" : "FAILED")
      << "  jump(g, r1)=" << format_double(c.g_jump_r1)
      << "  jump(r, r1)=" << format_double(c.r_jump_r1)
      << "  jump(g, r2)=" << format_double(c.g_jump_r2) << '\n';
  out << (rep.passed() ? "verify: all properties hold\n" : "verify: FAILED\n");
}

double approx_value(const std::string& formula, const std::vector<double>& coeffs, int m, int k,
                    double theta, double c, double bz, int n) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(Errc::InvalidConfig, formula + " needs " + what);
  };
  if (formula == "g3") {
    need(coeffs.size() == 3, "--coeffs with three values");
    return g_three_qubit(coeffs[0], coeffs[1], coeffs[2]);
  }
  if (formula == "r-two-param") {
    need(m > 0 && k > 0, "--m and --k");
    return r_two_param(TwoParamFamily{m, k, theta});
  }
  if (formula == "g2-sym-limit") {
    need(!coeffs.empty(), "--coeffs");
    return g2_symmetric_limit(WState::make(coeffs));
  }
  if (formula == "r-asym") return r_asymmetric_closed(c);
  if (formula == "g2-asym") return g2_asymmetric_closed(c);
  if (formula == "g-interp") return g2_interpolating(bz);
  if (formula == "r1-estimate") return r1_large_n_estimate(n);
  throw Error(Errc::InvalidConfig, "unknown formula " + formula);
}

}  // namespace

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::ConvergenceFailure:
    case Errc::DivergedToInfinity:
    case Errc::AmbiguousRoot:
      return kSolver;
    case Errc::NoConvergedStart:
      return kOracle;
    default:
      return kInput;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Geometric entanglement of N-qubit W states", "wdiam"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "exact analysis of one state (JSON)");
  std::string analyze_path;
  std::vector<double> analyze_coeffs;
  bool analyze_renorm = false;
  analyze->add_option("state", analyze_path, "state JSON file, - for stdin");
  analyze->add_option("--coeffs", analyze_coeffs, "coefficients instead of a file");
  analyze->add_flag("--renormalize", analyze_renorm, "rescale to unit norm");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "figure or custom sweep (CSV)");
  int figure = 0;
  std::string spec_path, sweep_out;
  SweepOptions sweep_opts;
  std::size_t sweep_points = 0;
  auto* fig_opt = sweep->add_option("--figure", figure, "figure id 1-6");
  auto* spec_opt = sweep->add_option("--spec", spec_path, "custom sweep JSON file");
  fig_opt->excludes(spec_opt);
  sweep->add_option("--out,-o", sweep_out, "output CSV (default stdout)");
  sweep->add_option("--points", sweep_points, "grid points");
  sweep->add_flag("--oracle", sweep_opts.oracle, "add oracle columns");
  sweep->add_option("--starts", sweep_opts.starts, "oracle starts");
  sweep->add_option("--seed", sweep_opts.seed, "oracle seed");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force product overlap (JSON)");
  std::string oracle_path;
  std::vector<double> oracle_coeffs;
  bool oracle_renorm = false;
  OracleOptions oracle_opts;
  oracle->add_option("--state", oracle_path, "state JSON file, - for stdin");
  oracle->add_option("--coeffs", oracle_coeffs, "coefficients");
  oracle->add_flag("--renormalize", oracle_renorm, "rescale to unit norm");
  oracle->add_option("--starts", oracle_opts.starts, "number of starts");
  oracle->add_option("--seed", oracle_opts.seed, "seed");
  oracle->add_option("--tol", oracle_opts.tolerance, "per-sweep improvement tolerance");
  oracle->add_option("--max-sweeps", oracle_opts.max_sweeps, "sweep cap per start");

  // verify
  auto* verify = app.add_subcommand("verify", "randomized property campaigns");
  VerifyConfig vcfg;
  std::string verify_json_path;
  bool no_scaling = false;
  verify->add_option("--samples", vcfg.samples, "samples per campaign");
  verify->add_option("--nmin", vcfg.n_min, "smallest N");
  verify->add_option("--nmax", vcfg.n_max, "largest N");
  verify->add_option("--seed", vcfg.seed, "campaign seed");
  verify->add_option("--oracle-samples", vcfg.oracle_samples, "oracle cross-checks");
  verify->add_option("--tol", vcfg.tol.bound_slack, "slack on the r^2 bounds");
  verify->add_option("--json", verify_json_path, "write the JSON report (- for stdout)");
  verify->add_flag("--no-scaling", no_scaling, "skip the large-N first critical value fit");

  // approx
  auto* approx = app.add_subcommand("approx", "closed-form and approximate formulas");
  std::string formula;
  std::vector<double> ax_coeffs;
  int ax_m = 0, ax_k = 0, ax_n = 0;
  double ax_theta = 0.0, ax_c = 0.0, ax_bz = 0.0;
  approx
      ->add_option("formula", formula,
                   "g3 | r-two-param | g2-sym-limit | r-asym | g2-asym | g-interp | r1-estimate")
      ->required();
  approx->add_option("--coeffs", ax_coeffs, "coefficients (g3, g2-sym-limit)");
  approx->add_option("--m", ax_m, "first block size");
  approx->add_option("--k", ax_k, "second block size");
  approx->add_option("--theta", ax_theta, "mixing angle");
  approx->add_option("--c", ax_c, "largest coefficient");
  approx->add_option("--bz", ax_bz, "smallest Bloch z component");
  approx->add_option("--n", ax_n, "number of qubits");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, {kInput, "UsageError", e.what()});
    return kInput;
  }

  try {
    if (*analyze) {
      WState s = load_state(analyze_path, analyze_coeffs, analyze_renorm, in);
      out << io::analysis_json(s, wdiam::analyze(s)).dump(2) << '\n';
      return kOk;
    }
    if (*sweep) {
      if (figure == 0 && spec_path.empty()) {
        throw Error(Errc::InvalidConfig, "sweep needs --figure or --spec");
      }
      if (sweep_points > 0) sweep_opts.points = sweep_points;
      SweepTable table;
      if (!spec_path.empty()) {
        json doc;
        try {
          doc = json::parse(read_source(spec_path, in));
        } catch (const json::parse_error& e) {
          throw Error(Errc::InvalidConfig, std::string("invalid JSON: ") + e.what());
        }
        CustomSweep cs = io::parse_custom_sweep(doc);
        if (sweep_points > 0) cs.points = sweep_points;
        table = custom_sweep(cs, sweep_opts);
      } else {
        table = figure_sweep(figure, sweep_opts);
      }
      Output o(sweep_out, out);
      write_csv(o.stream(), table);
      return kOk;
    }
    if (*oracle) {
      WState s = load_state(oracle_path, oracle_coeffs, oracle_renorm, in);
      out << io::oracle_json(s, maximize_overlap(s, oracle_opts)).dump(2) << '\n';
      return kOk;
    }
    if (*verify) {
      vcfg.scaling = !no_scaling;
      VerifyReport rep = run_verify(vcfg);
      if (verify_json_path == "-") {
        out << io::verify_json(rep).dump(2) << '\n';
      } else {
        print_verify(out, rep);
        if (!verify_json_path.empty()) {
          Output o(verify_json_path, out);
          o.stream() << io::verify_json(rep).dump(2) << '\n';
        }
      }
      return rep.passed() ? kOk : kPropertyFailure;
    }
    if (*approx) {
      out << format_double(approx_value(formula, ax_coeffs, ax_m, ax_k, ax_theta, ax_c, ax_bz,
                                        ax_n))
          << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    Failure f{exit_code(e.code()), std::string(to_string(e.code())), e.what()};
    report(err, f);
    return f.code;
  } catch (const json::exception& e) {
    report(err, {kInput, "InvalidConfig", e.what()});
    return kInput;
  } catch (const std::exception& e) {
    report(err, {kInput, "InvalidInput", e.what()});
    return kInput;
  }
  return kInput;
}

}  // namespace wdiam::cli
