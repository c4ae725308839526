#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include "spin7/algebra.hpp"
#include "spin7/clifford.hpp"
#include "spin7/flow.hpp"
#include "spin7/json_io.hpp"
#include "spin7/metric.hpp"
#include "spin7/polyform.hpp"
#include "spin7/potential.hpp"
#include "spin7/rng.hpp"
#include "spin7/spin7_forms.hpp"
#include "spin7/spinor_square.hpp"

namespace {

using namespace spin7;

// Exit codes: 0 success, 1 validation failure, 2 I/O or parse failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
    if (std::cin.bad()) throw IoError("failed to read standard input");
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed while reading " + path);
  }
  return buffer.str();
}

Metric8 load_metric(const std::string& spec) {
  if (spec.empty() || spec == "identity") return Metric8::identity();
  return metric_from_json(read_input(spec));
}

std::vector<double> sorted_real_eigenvalues(const Eigen::MatrixXd& m, bool symmetric) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(m.rows()));
  if (symmetric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    for (int i = 0; i < m.rows(); ++i) out.push_back(eig.eigenvalues()(i));
    return out;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> eig(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (int i = 0; i < m.rows(); ++i) {
    if (std::abs(eig.eigenvalues()(i).imag()) > 1e-8 * scale)
      throw std::runtime_error("operator spectrum is not real");
    out.push_back(eig.eigenvalues()(i).real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin(7) four-form toolkit: verdicts, spinor squares, potential, descent"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-8;
  std::uint64_t seed = 0;
  CLI::Option* tol_opt = app.add_option("--tol", tol, "Tolerance for predicates and residual checks");
  CLI::Option* seed_opt = app.add_option("--seed", seed, "Seed override for randomized commands");

  int exit_code = 0;

  auto* verify = app.add_subcommand("verify", "Test the conformal Spin(7) predicate on a four-form");
  std::string verify_form, verify_metric = "identity";
  verify->add_option("--form", verify_form, "Four-form JSON file (reads stdin when omitted)");
  verify->add_option("--metric", verify_metric, "Metric JSON file or \"identity\"");
  verify->callback([&] {
    const Polyform phi = polyform_from_json(read_input(verify_form));
    const Metric8 h = load_metric(verify_metric);
    const Spin7Verdict v = is_conformal_spin7(phi, h, tol);
    std::cout << to_json(v) << "\n";
    if (!v.conformal) exit_code = 1;
  });

  auto* cayley = app.add_subcommand("cayley", "Emit the canonical Cayley four-form");
  std::uint64_t rotate_seed = 0;
  CLI::Option* rotate_opt =
      cayley->add_option("--rotate", rotate_seed, "Pull the form back by a seeded random rotation");
  cayley->callback([&] {
    Polyform phi = canonical_cayley();
    if (rotate_opt->count() > 0) {
      Rng rng(rotate_seed);
      phi = transform(phi, random_rotation(rng));
    }
    std::cout << to_json(phi) << "\n";
  });

  auto* square = app.add_subcommand("square", "Square a spinor into a multivector");
  std::string square_spinor, square_metric = "identity";
  int square_kappa = 1;
  square->add_option("--spinor", square_spinor, "Spinor JSON file (array of 16 reals)");
  square->add_option("--kappa", square_kappa, "Pairing sign, +1 or -1");
  square->add_option("--metric", square_metric, "Metric JSON file or \"identity\"");
  square->callback([&] {
    const Spinor16 xi = spinor_from_json(read_input(square_spinor));
    const Metric8 h = load_metric(square_metric);
    const CliffordRep rep = build_rep();
    std::cout << to_json(signed_square(rep, xi, square_kappa, h)) << "\n";
  });

  auto* recover = app.add_subcommand("recover", "Recover a spinor from its square");
  std::string recover_poly, recover_metric = "identity";
  recover->add_option("--polyform", recover_poly, "Multivector JSON file (reads stdin when omitted)");
  recover->add_option("--metric", recover_metric, "Metric JSON file or \"identity\"");
  recover->callback([&] {
    const Polyform a = polyform_from_json(read_input(recover_poly));
    const Metric8 h = load_metric(recover_metric);
    const double square_tol = tol_opt->count() > 0 ? tol : 1e-9;
    const SquareReport report = check_square_conditions(a, h, square_tol);
    if (!report.is_square) {
      std::cout << "{\"report\":" << to_json(report) << "}\n";
      std::cerr << "error: the multivector fails the square conditions\n";
      exit_code = 1;
      return;
    }
    const CliffordRep rep = build_rep();
    const Spinor16 xi = recover_spinor(rep, a, report, h);
    std::cout << "{\"spinor\":" << spinor_to_json(xi) << ",\"report\":" << to_json(report) << "}\n";
  });

  auto* decompose = app.add_subcommand("decompose", "Split a self-dual four-form into isotypic parts");
  std::string dec_ref, dec_form, dec_metric = "identity";
  decompose->add_option("--ref", dec_ref, "Reference Cayley-type form JSON file");
  decompose->add_option("--form", dec_form, "Four-form JSON file to decompose (stdin when omitted)");
  decompose->add_option("--metric", dec_metric, "Metric JSON file or \"identity\"");
  decompose->callback([&] {
    if (dec_ref.empty()) throw std::invalid_argument("decompose requires --ref");
    const Polyform ref = polyform_from_json(read_input(dec_ref));
    const Polyform q = polyform_from_json(read_input(dec_form));
    const Metric8 h = load_metric(dec_metric);
    const FourFormDecomposition dec = decompose_4form(q, ref, h, tol);
    std::cout << "{\"q1\":" << to_json(dec.q1) << ",\"q7\":" << to_json(dec.q7)
              << ",\"q27\":" << to_json(dec.q27) << ",\"q35\":" << to_json(dec.q35) << "}\n";
  });

  auto* potential = app.add_subcommand("potential", "Evaluate the cubic potential on a self-dual form");
  std::string pot_form, pot_metric = "identity";
  bool pot_grad = false, pot_hessian = false;
  potential->add_option("--form", pot_form, "Self-dual four-form JSON file (stdin when omitted)");
  potential->add_option("--metric", pot_metric, "Metric JSON file or \"identity\"");
  potential->add_flag("--grad", pot_grad, "Also emit the gradient four-form");
  potential->add_flag("--hessian", pot_hessian, "Also emit the 35 Hessian eigenvalues");
  potential->callback([&] {
    const Polyform phi = polyform_from_json(read_input(pot_form));
    const Metric8 h = load_metric(pot_metric);
    std::string out = "{\"value\":" + format_real(potential_value(phi, h, tol));
    if (pot_grad) out += ",\"gradient\":" + to_json(potential_gradient(phi, h));
    if (pot_hessian) {
      const Matrix35 hess = potential_hessian(phi, h, tol);
      Eigen::SelfAdjointEigenSolver<Matrix35> eig(hess);
      std::vector<double> values(35);
      for (int i = 0; i < 35; ++i) values[static_cast<size_t>(i)] = eig.eigenvalues()(i);
      out += ",\"hessian_eigenvalues\":[";
      for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_real(values[i]);
      }
      out += ']';
    }
    out += '}';
    std::cout << out << "\n";
  });

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the quadratic product operator");
  std::string spec_form, spec_spinor, spec_metric = "identity";
  spectrum->add_option("--form", spec_form, "Four-form JSON file");
  spectrum->add_option("--spinor", spec_spinor, "Spinor JSON file; its square supplies the form");
  spectrum->add_option("--metric", spec_metric, "Metric JSON file or \"identity\"");
  spectrum->callback([&] {
    if (spec_form.empty() == spec_spinor.empty())
      throw std::invalid_argument("spectrum requires exactly one of --form and --spinor");
    const Metric8 h = load_metric(spec_metric);
    Polyform phi;
    if (!spec_form.empty()) {
      phi = polyform_from_json(read_input(spec_form));
    } else {
      const Spinor16 xi = spinor_from_json(read_input(spec_spinor));
      phi = cayley_from_spinor(build_rep(), xi, h);
    }
    // lambda_operator carries the conventional factor of two; halving it
    // gives the operator whose spectrum on a Cayley form is -12, -6, 2, 0.
    const Eigen::MatrixXd m = 0.5 * lambda_operator(phi, h);
    std::cout << eigenvalue_json("quadratic_product", sorted_real_eigenvalues(m, h.orthonormal()))
              << "\n";
  });

  auto* flow = app.add_subcommand("flow", "Run projected gradient descent on the norm sphere");
  std::string flow_config, flow_metric = "identity";
  flow->add_option("--config", flow_config, "Flow configuration JSON file (stdin when omitted)");
  flow->add_option("--metric", flow_metric, "Metric JSON file or \"identity\"");
  flow->callback([&] {
    FlowConfig cfg = flow_config_from_json(read_input(flow_config));
    if (seed_opt->count() > 0) cfg.seed = seed;
    const Metric8 h = load_metric(flow_metric);
    const std::vector<FlowReport> reports = flow_run_all(cfg, h);
    if (reports.size() == 1) {
      std::cout << to_json(reports[0]) << "\n";
      return;
    }
    size_t best = 0;
    int cone = 0, other = 0, stuck = 0;
    for (size_t i = 0; i < reports.size(); ++i) {
      if (reports[i].final_grad_norm < reports[best].final_grad_norm) best = i;
      switch (reports[i].classification) {
        case FlowClass::spin7_cone: ++cone; break;
        case FlowClass::other_critical: ++other; break;
        case FlowClass::not_converged: ++stuck; break;
      }
    }
    std::string out = "{\"best\":" + to_json(reports[best]);
    out += ",\"counts\":{\"spin7_cone\":" + std::to_string(cone) +
           ",\"other_critical\":" + std::to_string(other) +
           ",\"not_converged\":" + std::to_string(stuck) + "}";
    out += ",\"runs\":[";
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i) out += ',';
      out += "{\"classification\":\"" + std::string(to_string(reports[i].classification)) + "\"";
      out += ",\"iterations\":" + std::to_string(reports[i].iterations);
      out += ",\"final_grad_norm\":" + format_real(reports[i].final_grad_norm);
      out += ",\"final_W\":" + format_real(reports[i].final_w) + "}";
    }
    out += "]}";
    std::cout << out << "\n";
  });

  auto* stabdim = app.add_subcommand("stabdim", "Dimension of the infinitesimal stabilizer");
  std::string stab_form;
  double stab_cutoff = 1e-8;
  stabdim->add_option("--form", stab_form, "Four-form JSON file (reads stdin when omitted)");
  stabdim->add_option("--cutoff", stab_cutoff, "Singular value cutoff relative to the largest");
  stabdim->callback([&] {
    const Polyform phi = polyform_from_json(read_input(stab_form));
    std::cout << stabilizer_dimension(phi, stab_cutoff) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
