#include "dvnug/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dvnug/bounds.hpp"
#include "dvnug/demos.hpp"
#include "dvnug/error.hpp"
#include "dvnug/io.hpp"
#include "dvnug/perturb.hpp"
#include "dvnug/reductions.hpp"

namespace dvnug {

namespace {

struct GridFlags {
  int Q = 256;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int trials = 100;
  std::string json_path;
};

void add_grid_flags(CLI::App* cmd, GridFlags& flags) {
  cmd->add_option("--grid", flags.Q, "base grid resolution Q")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--tol", flags.tol, "verdict tolerance")->capture_default_str();
  cmd->add_option("--seed", flags.seed, "seed of the randomized energy oracle")->capture_default_str();
  cmd->add_option("--trials", flags.trials, "random signals for the energy oracle")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--json", flags.json_path, "write the report here instead of stdout");
}

ReportOptions report_options(const GridFlags& flags) { return {flags.Q, flags.tol, flags.trials, flags.seed}; }

Json report_header(const std::string& command, const GaborSpec& spec, const GridFlags& flags) {
  return Json{{"command", command}, {"config_digest", config_digest(spec)}, {"grid", flags.Q},
              {"tol", flags.tol},   {"seed", flags.seed},                   {"trials", flags.trials}};
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Frame: return kExitOk;
    case Verdict::Inconclusive: return kExitInconclusive;
    default: return kExitNotFrame;
  }
}

void print_summary(const FrameReport& r, std::ostream& out) {
  out << "verdict " << to_string(r.verdict) << (r.trivial ? " (trivial: all windows zero)" : "") << "\n"
      << "A_est " << r.A_est << "  B_est " << r.B_est << "  at Q = " << r.Q << "\n"
      << "A_est " << r.A_est_refined << "  B_est " << r.B_est_refined << "  at Q = " << 2 * r.Q << "\n"
      << "stable " << (r.stable ? "true" : "false") << "\n"
      << "B0_grid " << r.B0_grid << "  bessel_sufficient " << r.bessel_sufficient << "\n";
}

// Demo checks: one line per expectation.
class DemoLog {
 public:
  explicit DemoLog(std::ostream& out) : out_(out) {}
  void check(bool ok, const std::string& what) {
    out_ << (ok ? "PASS " : "FAIL ") << what << "\n";
    all_ = all_ && ok;
  }
  int exit_code() const { return all_ ? kExitOk : kExitNotFrame; }

 private:
  std::ostream& out_;
  bool all_ = true;
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

int demo_matrix_identity(const GridFlags& flags, std::ostream& out) {
  DemoLog log(out);
  const GaborSpec spec = two_tap_frame();
  const TransformTable table(spec);
  const XiGrid grid = make_grid(spec.params(), flags.Q);
  double deviation = 0.0;
  for (double xi : grid.base())
    for (int m = 0; m < spec.M(); ++m)
      for (int k = 0; k < spec.S(); ++k)
        for (int k2 = 0; k2 < spec.S(); ++k2) {
          const CMatrix a = build_char_matrix(spec, table, m, k, xi).entries;
          const CMatrix b = build_char_matrix(spec, table, m, k2, xi).entries;
          CMatrix expected = CMatrix::Zero(a.rows(), a.rows());
          if (k == k2) expected.diagonal().setConstant(16.0);
          deviation = std::max(deviation, (a * b.adjoint() - expected).cwiseAbs().maxCoeff());
        }
  log.check(deviation < 1e-10, "M_{m,k} M*_{m,k'} = 16 delta_{kk'} I_8, max deviation " + num(deviation));
  const GridBounds bounds = frame_bounds_grid(spec, grid);
  log.check(std::abs(bounds.A_est - 4.0) < 1e-9 && std::abs(bounds.B_est - 4.0) < 1e-9,
            "tight frame bounds A_est = " + num(bounds.A_est) + ", B_est = " + num(bounds.B_est));
  return log.exit_code();
}

int demo_bessel(const GridFlags& flags, std::ostream& out) {
  DemoLog log(out);
  const GaborSpec spec = two_tap_frame();
  const XiGrid grid = make_grid(spec.params(), flags.Q);
  const double b0 = grid_B0(spec, grid);
  log.check(std::abs(b0 - 2.0) < 1e-3, "grid_B0 = " + num(b0) + " (expected 2)");
  const double sufficient = bessel_sufficient_bound(spec, 2.0);
  log.check(sufficient == 4096.0, "sufficient Bessel bound = " + num(sufficient) + " (expected 4096)");
  const NecessaryCheck necessary = bessel_necessary_check(spec, 4.0, grid);
  log.check(necessary.pass, "necessary check with B = 4: " + num(necessary.B0_grid) + " <= " + num(necessary.threshold));
  const FrameRatio ratio = empirical_frame_ratio(spec, flags.trials, flags.seed);
  log.check(ratio.max_ratio <= sufficient, "empirical max ratio " + num(ratio.max_ratio) + " <= 4096");
  return log.exit_code();
}

int demo_perturb(const GridFlags& flags, std::ostream& out) {
  DemoLog log(out);
  const GaborSpec spec = two_tap_frame();
  const PerturbationReport report = perturbation_report(spec, two_tap_perturbation_windows(), 4.0, 4096.0, flags.Q);
  log.check(std::abs(report.theta - 1.0 / 17.0) < 1e-6, "theta = " + num(report.theta) + " (expected 1/17)");
  log.check(report.certified, "condition value " + num(report.condition_value) + " < A0 = 4");
  log.check(report.certified_refined, "certification holds at Q = " + std::to_string(2 * flags.Q));
  const PerturbedCheck check = verify_perturbed(two_tap_perturbation(), report, flags.trials, flags.seed);
  log.check(check.pass, "perturbed ratios [" + num(check.empirical_min) + ", " + num(check.empirical_max) +
                            "] inside [" + num(report.lower) + ", " + num(report.upper) + "]");
  return log.exit_code();
}

int parse_row_mode(const std::string& mode, int S) {
  const std::string value = mode.substr(4);
  int row = 0;
  try {
    std::size_t used = 0;
    row = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::Parse, "--mode: expected row:<l0>, got '" + mode + "'");
  }
  if (row < 1 || row > S)
    throw Error(ErrorCode::OutOfRange, "--mode: row " + std::to_string(row) + " outside 1.." + std::to_string(S));
  return row - 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frame analysis of discrete vector-valued nonuniform Gabor systems"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string config, second;
  GridFlags flags;

  auto* validate = app.add_subcommand("validate", "load a config and print its canonical form");
  validate->add_option("config", config, "config file or built-in name")->required();
  validate->callback([&] {
    action = [&] {
      out << spec_to_json(load_spec(config)).dump(2) << "\n";
      return kExitOk;
    };
  });

  std::string csv_path;
  auto* bounds = app.add_subcommand("bounds", "frame and Bessel bounds report");
  bounds->add_option("config", config, "config file or built-in name")->required();
  add_grid_flags(bounds, flags);
  bounds->add_option("--csv", csv_path, "write the singular value trace here");
  bounds->callback([&] {
    action = [&] {
      const GaborSpec spec = load_spec(config);
      const FrameReport report = full_report(spec, report_options(flags));
      Json doc = report_header("bounds", spec, flags);
      doc["results"] = frame_report_to_json(report);
      if (!csv_path.empty()) {
        std::ostringstream csv;
        write_trace_csv(csv, report.trace);
        write_text_file(csv_path, csv.str());
      }
      if (flags.json_path.empty()) {
        emit(doc, "", out);
      } else {
        emit(doc, flags.json_path, out);
        print_summary(report, out);
      }
      return verdict_exit(report.verdict);
    };
  });

  std::string out_path;
  auto* analyze = app.add_subcommand("analyze", "analysis coefficients of a signal");
  analyze->add_option("config", config, "config file or built-in name")->required();
  analyze->add_option("signal", second, "signal file")->required();
  analyze->add_option("--json", out_path, "write the coefficients here instead of stdout");
  analyze->callback([&] {
    action = [&] {
      const GaborSpec spec = load_spec(config);
      const NuSequence z = signal_from_json(read_json_file(second));
      Json doc{{"command", "analyze"}, {"config_digest", config_digest(spec)}};
      doc["coefficients"] = coefficients_to_json(analysis(spec, z))["coefficients"];
      emit(doc, out_path, out);
      return kExitOk;
    };
  });

  bool reconstruct = false;
  double cg_tol = 1e-10;
  auto* synthesize = app.add_subcommand("synthesize", "signal synthesized from coefficients");
  synthesize->add_option("config", config, "config file or built-in name")->required();
  synthesize->add_option("coefficients", second, "coefficient file")->required();
  synthesize->add_flag("--reconstruct", reconstruct, "apply the inverse frame operator to the synthesized signal");
  synthesize->add_option("--cg-tol", cg_tol, "relative residual target of the inversion")->capture_default_str();
  synthesize->add_option("--json", out_path, "write the signal here instead of stdout");
  synthesize->callback([&] {
    action = [&] {
      const GaborSpec spec = load_spec(config);
      NuSequence z = synthesis(spec, coefficients_from_json(read_json_file(second)));
      Json doc{{"command", "synthesize"}, {"config_digest", config_digest(spec)}};
      if (reconstruct) {
        const FrameSolveResult solved = solve_frame_operator(spec, z, cg_tol);
        z = solved.solution;
        doc["cg_iterations"] = solved.iterations;
        doc["cg_relative_residual"] = solved.relative_residual;
      }
      doc.update(signal_to_json(z));
      emit(doc, out_path, out);
      return kExitOk;
    };
  });

  std::optional<double> a0, b0;
  auto* perturb = app.add_subcommand("perturb", "certify a perturbed system");
  perturb->add_option("config", config, "unperturbed config W")->required();
  perturb->add_option("perturbation", second, "perturbation config V")->required();
  perturb->add_option("--A0", a0, "lower frame bound of W (default: grid estimate)");
  perturb->add_option("--B0", b0, "upper frame bound of W (default: grid estimate)");
  add_grid_flags(perturb, flags);
  perturb->callback([&] {
    action = [&] {
      const GaborSpec specW = load_spec(config);
      const GaborSpec specV = load_spec(second);
      if (!(specV.params() == specW.params()) || specV.M() != specW.M() || specV.S() != specW.S())
        throw Error(ErrorCode::DimensionMismatch, "perturbation config must share N, r, M and S with the system");
      double A0 = 0.0, B0 = 0.0;
      if (!a0 || !b0) {
        const FrameReport base = full_report(specW, report_options(flags));
        A0 = base.A_est;
        B0 = base.B_est;
      }
      if (a0) A0 = *a0;
      if (b0) B0 = *b0;
      const PerturbationReport report = perturbation_report(specW, specV.windows(), A0, B0, flags.Q);
      Json doc = report_header("perturb", specW, flags);
      doc["perturbation_digest"] = config_digest(specV);
      Json results = perturbation_report_to_json(report);
      bool ok = report.certified;
      if (report.certified) {
        const PerturbedCheck check = verify_perturbed(specV, report, flags.trials, flags.seed, flags.tol);
        results["verification"] = {
            {"pass", check.pass}, {"empirical_min", check.empirical_min}, {"empirical_max", check.empirical_max}};
        ok = check.pass;
      }
      doc["results"] = results;
      emit(doc, flags.json_path, out);
      return ok ? kExitOk : kExitNotFrame;
    };
  });

  std::string mode = "mean";
  auto* reduce = app.add_subcommand("reduce", "mean, row and entry reductions");
  reduce->add_option("config", config, "config file or built-in name")->required();
  reduce->add_option("--mode", mode, "mean | row:<l0> (1-based) | entries")->capture_default_str();
  add_grid_flags(reduce, flags);
  reduce->callback([&] {
    action = [&] {
      const GaborSpec spec = load_spec(config);
      Json doc = report_header("reduce", spec, flags);
      doc["mode"] = mode;
      if (mode == "entries") {
        const EntryBesselReport report = entry_bessel_report(spec, make_grid(spec.params(), flags.Q));
        Json table = Json::array();
        for (int l = 0; l < report.entry_bounds.rows(); ++l) {
          Json row = Json::array();
          for (int j = 0; j < report.entry_bounds.cols(); ++j) row.push_back(report.entry_bounds(l, j));
          table.push_back(row);
        }
        doc["results"] = {{"entry_bounds", table},
                          {"beta0", report.beta0},
                          {"aggregate", report.aggregate},
                          {"all_entries_bessel", report.all_entries_bessel},
                          {"full_bessel", report.full_bessel}};
        emit(doc, flags.json_path, out);
        return report.full_bessel ? kExitOk : kExitNotFrame;
      }
      GaborSpec derived;
      if (mode == "mean")
        derived = mean_system(spec);
      else if (mode.rfind("row:", 0) == 0)
        derived = row_system(spec, parse_row_mode(mode, spec.S()));
      else
        throw Error(ErrorCode::Parse, "--mode: expected mean, row:<l0> or entries, got '" + mode + "'");
      const FrameReport report = full_report(derived, report_options(flags));
      doc["results"] = {{"derived_config", spec_to_json(derived)}, {"report", frame_report_to_json(report)}};
      emit(doc, flags.json_path, out);
      return verdict_exit(report.verdict);
    };
  });

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "run a built-in example and check its expected values");
  demo->add_option("name", demo_name, "matrix-identity | bessel-3.4 | perturb-4.2")
      ->required()
      ->check(CLI::IsMember({"matrix-identity", "bessel-3.4", "perturb-4.2"}));
  add_grid_flags(demo, flags);
  demo->callback([&] {
    action = [&] {
      if (demo_name == "matrix-identity") return demo_matrix_identity(flags, out);
      if (demo_name == "bessel-3.4") return demo_bessel(flags, out);
      return demo_perturb(flags, out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::NotAFrameSuspected ? kExitNotFrame : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace dvnug
