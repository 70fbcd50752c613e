// Command-line front end: verification suites, angle solving, parameter
// sweeps, circuit emission, and resource estimates. JSON on stdout by
// default; exit 0 = pass, 1 = verification failure, 2 = usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybe/decomposition.hpp"
#include "ybe/errors.hpp"
#include "ybe/optics.hpp"
#include "ybe/report.hpp"
#include "ybe/temperley_lieb.hpp"
#include "ybe/yang_baxter.hpp"

namespace {

using ybe::cxd;

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  return 0;
}

struct SweepSpec {
  std::string param = "theta";
  double min = 0.0;
  double max = ybe::kPi / 2;
  int steps = 50;
  std::string observable = "concurrence";
};

double sweep_observable(const std::string& observable, double value,
                        const ybe::RunConfig& cfg) {
  using namespace ybe;
  if (observable == "concurrence") {
    CVector up_up = CVector::Zero(4);
    up_up(0) = 1.0;
    return concurrence_after_r(value, 0.0, up_up);
  }
  if (observable == "gamma_trace")
    return gamma_invariant(r_matrix_4d(value, 0.0)).trace.real();
  throw std::invalid_argument("unknown observable: " + observable);
}

double sweep_value(const SweepSpec& spec, double value,
                   const ybe::RunConfig& cfg) {
  using namespace ybe;
  if (spec.observable == "ybe2d_residual" ||
      spec.observable == "ybe4d_residual") {
    AngleParameters an;
    an.convention = cfg.convention;
    if (spec.param == "theta") {
      // sweep theta1 with theta3 fixed, theta2 solved from the constraint
      an.theta1 = value;
      an.theta3 = 0.9;
      an.theta2 = solve_theta2(an.theta1, an.theta3);
      an.phi = 0.0;
    } else {
      an.theta1 = 0.3;
      an.theta3 = 0.9;
      an.theta2 = solve_theta2(an.theta1, an.theta3);
      an.phi = value;
    }
    return spec.observable == "ybe2d_residual"
               ? verify_ybe_2d(an).frobenius_residual
               : verify_ybe_4d(an).frobenius_residual;
  }
  return sweep_observable(spec.observable, value, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yang-Baxter / Temperley-Lieb / linear-optics verifier"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key-value configuration file");

  ybe::RunConfig cfg;
  std::string out_path;
  bool csv = false;
  double nu_re = 1.0, nu_im = 0.0;
  std::string convention = "PLUS";
  app.add_option("--tolerance", cfg.tolerance, "comparison tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "random draws per suite")
      ->check(CLI::Range(1, 1000000));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--nu-re", nu_re, "real part of nu");
  app.add_option("--nu-im", nu_im, "imaginary part of nu");
  app.add_option("--epsilon", cfg.epsilon, "sign epsilon")
      ->check(CLI::IsMember({-1, 1}));
  app.add_option("--convention", convention, "spectral convention")
      ->check(CLI::IsMember({"PLUS", "MINUS"}));
  app.add_option("--out", out_path, "write output to file instead of stdout");
  app.add_flag("--csv", csv, "CSV output for sweeps");
  app.add_flag("--timing", cfg.timing, "include wall time in reports");

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::optional<double> v_t1, v_t2, v_t3;
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"braid", "tla", "ybe2d", "ybe4d", "reduction",
                             "optics2d", "optics4d", "decomposition", "all"}));
  verify->add_option("--theta1", v_t1, "fixed theta1 (ybe2d/ybe4d)");
  verify->add_option("--theta2", v_t2, "fixed theta2 (ybe2d/ybe4d)");
  verify->add_option("--theta3", v_t3, "fixed theta3 (ybe2d/ybe4d)");

  // solve-angles -----------------------------------------------------------
  auto* solve = app.add_subcommand("solve-angles",
                                   "solve theta2 from theta1, theta3");
  double s_t1 = 0.0, s_t3 = 0.0;
  solve->add_option("theta1", s_t1, "theta1 in radians")->required();
  solve->add_option("theta3", s_t3, "theta3 in radians")->required();

  // sweep ------------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "sweep a parameter");
  SweepSpec spec;
  sweep->add_option("param", spec.param, "swept parameter")
      ->required()
      ->check(CLI::IsMember({"theta", "phi"}));
  sweep->add_option("--min", spec.min, "range start");
  sweep->add_option("--max", spec.max, "range end");
  sweep->add_option("--steps", spec.steps, "number of samples")
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--observable", spec.observable, "observable column")
      ->check(CLI::IsMember({"ybe2d_residual", "ybe4d_residual",
                             "concurrence", "gamma_trace"}));

  // emit-circuit -----------------------------------------------------------
  auto* emit = app.add_subcommand("emit-circuit", "emit a circuit as JSON");
  std::string e_dims = "2D", e_side = "LHS", e_encoding = "polarization";
  double e_t1 = 0.3, e_t3 = 0.9, e_phi = 0.0;
  std::optional<double> e_t2;
  bool e_check = false;
  emit->add_option("--dims", e_dims)->check(CLI::IsMember({"2D", "4D"}));
  emit->add_option("--side", e_side)->check(CLI::IsMember({"LHS", "RHS"}));
  emit->add_option("--encoding", e_encoding)
      ->check(CLI::IsMember({"polarization", "location"}));
  emit->add_option("--theta1", e_t1);
  emit->add_option("--theta2", e_t2, "defaults to the solved constraint");
  emit->add_option("--theta3", e_t3);
  emit->add_option("--phi", e_phi);
  emit->add_flag("--check", e_check,
                 "append the residual against the closed form");

  // resources --------------------------------------------------------------
  auto* resources =
      app.add_subcommand("resources", "success probability for n CNOTs");
  int n_cnots = 0;
  resources->add_option("n", n_cnots, "number of probabilistic CNOT gates")
      ->required()
      ->check(CLI::NonNegativeNumber);

  // let global flags appear after the subcommand name
  for (CLI::App* sub : {verify, solve, sweep, emit, resources})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.nu = cxd(nu_re, nu_im);
  cfg.convention = ybe::convention_from_name(convention);

  try {
    if (*verify) {
      if ((suite == "ybe2d" || suite == "ybe4d") && v_t1 && v_t3) {
        ybe::AngleParameters an;
        an.theta1 = *v_t1;
        an.theta3 = *v_t3;
        an.theta2 = v_t2 ? *v_t2 : ybe::solve_theta2(*v_t1, *v_t3);
        an.phi = 0.7;
        an.convention = cfg.convention;
        const ybe::YbeResidual res = suite == "ybe2d"
                                         ? ybe::verify_ybe_2d(an)
                                         : ybe::verify_ybe_4d(an);
        ybe::ReportDocument doc;
        doc.suite = suite;
        doc.config = cfg;
        const bool pass = res.frobenius_residual <= cfg.tolerance;
        doc.records.push_back({suite + "_fixed_angles_residual",
                               res.frobenius_residual, cfg.tolerance, pass});
        if (write_output(ybe::report_to_json(doc), out_path) != 0) return 1;
        return doc.passed() ? 0 : 1;
      }
      const ybe::ReportDocument doc = ybe::run_suite(suite, cfg);
      if (write_output(ybe::report_to_json(doc), out_path) != 0) return 1;
      return doc.passed() ? 0 : 1;
    }

    if (*solve) {
      double theta2 = 0.0;
      try {
        theta2 = ybe::solve_theta2(s_t1, s_t3);
      } catch (const ybe::SingularConstraint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
      // residual of (e^{-2i t2} + 1)(i - sec(t1-t3) sin(t1+t3)) - 2i
      const cxd i(0.0, 1.0);
      const cxd lhs = (std::exp(-2.0 * i * theta2) + 1.0) *
                      (i - std::sin(s_t1 + s_t3) / std::cos(s_t1 - s_t3));
      const double residual = std::abs(lhs - 2.0 * i);
      nlohmann::ordered_json doc;
      doc["theta1"] = s_t1;
      doc["theta3"] = s_t3;
      doc["theta2"] = theta2;
      doc["residual"] = residual;
      return write_output(doc.dump(2) + "\n", out_path);
    }

    if (*sweep) {
      if (spec.max <= spec.min) {
        std::cerr << "error: empty sweep range\n";
        return 2;
      }
      std::ostringstream os;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      if (csv) os << spec.param << "," << spec.observable << "\n";
      for (int k = 0; k < spec.steps; ++k) {
        const double x =
            spec.min + (spec.max - spec.min) * k / (spec.steps - 1);
        const double y = sweep_value(spec, x, cfg);
        if (csv) {
          os.precision(17);
          os << x << "," << y << "\n";
        } else {
          rows.push_back({{spec.param, x}, {spec.observable, y}});
        }
      }
      const std::string text = csv ? os.str() : rows.dump(2) + "\n";
      return write_output(text, out_path);
    }

    if (*emit) {
      ybe::AngleParameters an;
      an.theta1 = e_t1;
      an.theta3 = e_t3;
      an.theta2 = e_t2 ? *e_t2 : ybe::solve_theta2(e_t1, e_t3);
      an.phi = e_phi;
      const ybe::Side side = e_side == "LHS" ? ybe::Side::kLhs
                                             : ybe::Side::kRhs;
      const ybe::YbeDims dims =
          e_dims == "2D" ? ybe::YbeDims::k2D : ybe::YbeDims::k4D;
      const ybe::ChannelEncoding enc =
          e_encoding == "polarization" ? ybe::ChannelEncoding::kPolarization
                                       : ybe::ChannelEncoding::kLocation;
      const ybe::OpticalCircuit circuit =
          ybe::build_ybe_circuit(side, dims, an, enc);
      nlohmann::ordered_json doc =
          nlohmann::ordered_json::parse(ybe::circuit_to_json(circuit));
      if (e_check) {
        const ybe::CMatrix u = ybe::circuit_unitary(circuit);
        ybe::CMatrix closed;
        if (dims == ybe::YbeDims::k2D) {
          closed = side == ybe::Side::kLhs
                       ? ybe::a_2d(an.theta1) * ybe::b_2d(an.theta2) *
                             ybe::a_2d(an.theta3)
                       : ybe::b_2d(an.theta3) * ybe::a_2d(an.theta2) *
                             ybe::b_2d(an.theta1);
        } else {
          const auto r = [&](double t) {
            return ybe::r_matrix_4d(t, an.phi);
          };
          closed = side == ybe::Side::kLhs
                       ? ybe::embed_pair(r(an.theta1), 1, 2, 3) *
                             ybe::embed_pair(r(an.theta2), 2, 3, 3) *
                             ybe::embed_pair(r(an.theta3), 1, 2, 3)
                       : ybe::embed_pair(r(an.theta3), 2, 3, 3) *
                             ybe::embed_pair(r(an.theta2), 1, 2, 3) *
                             ybe::embed_pair(r(an.theta1), 2, 3, 3);
        }
        doc["check_residual"] = ybe::phase_distance(u, closed);
      }
      return write_output(doc.dump(2) + "\n", out_path);
    }

    if (*resources) {
      nlohmann::ordered_json doc;
      doc["n_cnots"] = n_cnots;
      doc["probability"] = ybe::success_probability(n_cnots);
      return write_output(doc.dump(2) + "\n", out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
