// Command-line surface: evaluate the transform, extract its t-series, and
// run the named verification suites with machine-readable reports.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcgen/cli_spec.hpp"
#include "rcgen/genop.hpp"
#include "rcgen/report.hpp"
#include "rcgen/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitAccuracy = 3;
constexpr int kExitVerifyFailed = 4;

struct Options {
  std::string fn;
  std::string z_text = "0+1i";
  std::string t_text = "0";
  int series_order = 4;
  std::string suite = "all";
  rcgen::RunConfig cfg;
};

int run_eval(const Options& opt) {
  const rcgen::Holo2 f = rcgen::parse_function_spec(opt.fn);
  const rcgen::Complex z = rcgen::parse_complex(opt.z_text);
  const rcgen::Complex t = rcgen::parse_complex(opt.t_text);
  const double radius = rcgen::default_t_radius(f.domain(), z, t);
  const rcgen::QuadResult r =
      rcgen::t_eval_quadrature(f, z, t, opt.cfg.tolerance, opt.cfg.max_nodes);
  if (opt.cfg.format == "csv") {
    std::cout << "value_re,value_im,err_estimate,contour_radius,nodes\n"
              << rcgen::format_double(r.value.real()) << ','
              << rcgen::format_double(r.value.imag()) << ','
              << rcgen::format_double(r.err_estimate) << ',' << rcgen::format_double(radius)
              << ',' << r.nodes << '\n';
  } else {
    nlohmann::json j{{"value", rcgen::complex_to_json(r.value)},
                     {"err_estimate", r.err_estimate},
                     {"contour_radius", radius},
                     {"nodes", r.nodes}};
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

int run_series(const Options& opt) {
  const rcgen::Holo2 f = rcgen::parse_function_spec(opt.fn);
  const rcgen::Complex z = rcgen::parse_complex(opt.z_text);
  const int L = opt.series_order;
  const rcgen::TSeries jet_route = rcgen::t_series(f, z, L, opt.cfg.jet_order_cap);
  double disagreement = 0.0;
  nlohmann::json rows = nlohmann::json::array();
  const double scale = std::max(jet_route.max_coeff(), 1e-12);
  for (int l = 0; l <= L; ++l) {
    const rcgen::Complex quad =
        rcgen::t_coeff_quadrature(f, l, z, opt.cfg.tolerance, opt.cfg.max_nodes);
    disagreement = std::max(disagreement, std::abs(quad - jet_route.coeffs[l]) / scale);
    rows.push_back(nlohmann::json{{"l", l},
                                  {"jet", rcgen::complex_to_json(jet_route.coeffs[l])},
                                  {"quadrature", rcgen::complex_to_json(quad)}});
  }
  if (opt.cfg.format == "csv") {
    std::cout << "l,jet_re,jet_im,quadrature_re,quadrature_im\n";
    for (const auto& row : rows) {
      std::cout << row["l"] << ',' << rcgen::format_double(row["jet"]["re"].get<double>())
                << ',' << rcgen::format_double(row["jet"]["im"].get<double>()) << ','
                << rcgen::format_double(row["quadrature"]["re"].get<double>()) << ','
                << rcgen::format_double(row["quadrature"]["im"].get<double>()) << '\n';
    }
    std::cout << "max_disagreement," << rcgen::format_double(disagreement) << ",,,\n";
  } else {
    nlohmann::json j{{"coefficients", rows}, {"max_disagreement", disagreement}};
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

int run_verify(const Options& opt) {
  const std::vector<rcgen::CheckResult> checks = rcgen::run_suite(opt.suite, opt.cfg);
  std::cout << (opt.cfg.format == "csv" ? rcgen::render_checks_csv(checks)
                                        : rcgen::render_checks_json(checks));
  for (const auto& c : checks) {
    if (!c.pass) return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating-operator numerics: contour-integral transform of the "
               "Rankin-Cohen bracket family, with verification suites"};
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "flat key=value configuration file");

  Options opt;
  app.add_option("--tol,--tolerance", opt.cfg.tolerance, "quadrature tolerance")
      ->capture_default_str();
  app.add_option("--max-nodes,--max_nodes", opt.cfg.max_nodes, "contour node cap per circle")
      ->capture_default_str();
  app.add_option("--jet-cap,--jet_order_cap", opt.cfg.jet_order_cap,
                 "maximum supported jet order")
      ->capture_default_str();
  app.add_option("--format", opt.cfg.format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", opt.cfg.seed, "seed for randomized suites")->capture_default_str();

  CLI::App* eval = app.add_subcommand("eval", "evaluate the transform at (z,t)");
  eval->add_option("--fn", opt.fn, "function spec, e.g. \"f_ell 1\" or \"poly 1,0;0,1\"")
      ->required();
  eval->add_option("--z", opt.z_text, "base point, complex literal a+bi")->required();
  eval->add_option("--t", opt.t_text, "deformation parameter, complex literal")->required();

  CLI::App* series = app.add_subcommand("series", "extract t-series coefficients c_0..c_L");
  series->add_option("--fn", opt.fn, "function spec")->required();
  series->add_option("--z", opt.z_text, "base point, complex literal")->required();
  series->add_option("--L", opt.series_order, "highest coefficient index")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("--suite", opt.suite,
                   "gate|genop|pde|holography|hardy|covariance|residues|all")
      ->capture_default_str();

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  if (const char* env_seed = std::getenv("RCGEN_SEED")) {
    try {
      opt.cfg.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "error: RCGEN_SEED is not an integer\n";
      return kExitParse;
    }
  }
  if (!(opt.cfg.tolerance > 0.0) || opt.cfg.max_nodes <= 0 || opt.cfg.jet_order_cap <= 0) {
    std::cerr << "error: tolerance and caps must be positive\n";
    return kExitParse;
  }

  try {
    if (eval->parsed()) return run_eval(opt);
    if (series->parsed()) return run_series(opt);
    return run_verify(opt);
  } catch (const rcgen::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const rcgen::accuracy_error& e) {
    std::cerr << "accuracy error: " << e.what() << " (best value " << e.best_value.real()
              << (e.best_value.imag() < 0 ? "" : "+") << e.best_value.imag()
              << "i, err_estimate " << e.err_estimate << ")\n";
    return kExitAccuracy;
  } catch (const rcgen::usage_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}
