// numrad: numerical ranges, numerical radii and reverse numerical-radius
// inequalities from the command line.
//
// Exit codes: 0 success, 1 a verified inequality failed on an instance that
// satisfies its hypothesis, 2 malformed input or usage.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "numrad/numrad.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view s, std::string_view what) {
  double x = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last || !std::isfinite(x))
    throw UsageError(std::string(what) + ": cannot parse '" + std::string(s) + "' as a real");
  return x;
}

// "RE,IM" or a bare real.
numrad::Complex parse_complex(const std::string& s, std::string_view what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_real(s, what), 0.0};
  return {parse_real(std::string_view(s).substr(0, comma), what),
          parse_real(std::string_view(s).substr(comma + 1), what)};
}

int run_compute(const std::string& path, int grid, const std::string& csv) {
  const auto a = numrad::read_matrix_file(path);
  const auto summary = numrad::summarize_range(a, grid, grid);
  std::cout << "w=" << numrad::format_real(summary.radius, false) << '\n'
            << "norm=" << numrad::format_real(summary.norm, false) << '\n';
  std::ofstream out(csv);
  if (!out) throw UsageError("cannot write " + csv);
  numrad::write_boundary_csv(out, summary.boundary);
  return kExitOk;
}

struct VerifyArgs {
  std::string path;
  std::optional<std::string> lambda;
  std::optional<double> r;
  std::optional<double> rho;
  std::optional<std::string> phi;
  std::optional<std::string> varphi;
  bool order = false;
  bool automatic = false;
};

int run_verify(const VerifyArgs& args) {
  std::vector<numrad::Certificate> certs;
  if (args.lambda || args.r || args.rho) {
    if (!args.lambda || !args.r) throw UsageError("--lambda and --r must be given together");
    numrad::DiskCertificate cert{parse_complex(*args.lambda, "--lambda"), *args.r, args.rho};
    if (auto d = cert.defect(); !d.empty()) throw UsageError(d);
    certs.emplace_back(cert);
  }
  if (args.phi || args.varphi) {
    if (!args.phi || !args.varphi) throw UsageError("--phi and --varphi must be given together");
    certs.emplace_back(numrad::SectorPair{
        parse_complex(*args.phi, "--phi"), parse_complex(*args.varphi, "--varphi"),
        args.order ? numrad::SectorMode::OperatorOrder : numrad::SectorMode::Accretive});
  }
  const auto t = numrad::read_matrix_file(args.path);
  if (args.automatic) certs.emplace_back(numrad::optimize_lambda(t));
  if (certs.empty()) throw UsageError("verify needs --lambda/--r, --phi/--varphi, or --auto");

  const auto reports = numrad::verify_all(t, certs);
  numrad::write_reports(std::cout, reports);
  const bool violated =
      std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.violated(); });
  return violated ? kExitViolation : kExitOk;
}

int run_sweep(numrad::SweepConfig cfg, const std::string& ensemble, const std::string& lambda) {
  const auto e = numrad::parse_ensemble(ensemble);
  if (!e) throw UsageError("unknown ensemble '" + ensemble + "'");
  cfg.ensemble = *e;
  cfg.lambda = parse_complex(lambda, "--lambda");
  if (auto d = cfg.defect(); !d.empty()) throw UsageError(d);
  const auto summary = numrad::run_sweep(cfg);
  std::cout << numrad::sweep_to_json(summary).dump(2) << '\n';
  return summary.sound() ? kExitOk : kExitViolation;
}

int run_search(bool problem, std::size_t n, std::size_t iters, std::uint64_t seed) {
  if (n < 2) throw UsageError("--n must be at least 2");
  if (iters < 1) throw UsageError("--iters must be at least 1");
  const auto best = problem ? numrad::search_problem(n, iters, seed)
                            : numrad::probe_equality_remark(n, iters, seed);
  std::cout << numrad::search_result_to_json(best).dump(2) << '\n';
  return kExitOk;
}

int run_plot(const std::string& path, const std::string& out_path, int grid) {
  const auto a = numrad::read_matrix_file(path);
  const auto summary = numrad::summarize_range(a, grid, grid);
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << numrad::render_range_svg(summary);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical range, numerical radius and reverse-inequality toolkit"};
  app.require_subcommand(1);

  int grid = numrad::kDefaultThetaGrid;
  std::string matrix_path;
  std::string csv_path = "boundary.csv";
  auto* compute = app.add_subcommand("compute", "Print w(A) and ||A||; write the boundary CSV");
  compute->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  compute->add_option("--grid", grid, "Theta grid size")->check(CLI::Range(8, 1 << 20));
  compute->add_option("--csv", csv_path, "Boundary CSV output path");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Evaluate the inequalities, one JSON report per line");
  verify->add_option("matrix", vargs.path, "Matrix JSON file")->required();
  verify->add_option("--lambda", vargs.lambda, "Disk center RE,IM");
  verify->add_option("--r", vargs.r, "Disk radius");
  verify->add_option("--rho", vargs.rho, "Gap rho (default: ||lambda| - w(T)|)");
  verify->add_option("--phi", vargs.phi, "Sector endpoint phi RE,IM");
  verify->add_option("--varphi", vargs.varphi, "Sector endpoint varphi RE,IM");
  verify->add_flag("--order", vargs.order, "Require the operator-order hypothesis");
  verify->add_flag("--auto", vargs.automatic, "Certify with an optimized disk center");

  numrad::SweepConfig sweep_cfg;
  std::string ensemble = "disk";
  std::string sweep_lambda = "1,0";
  auto* sweep = app.add_subcommand("sweep", "Randomized soundness sweep over an ensemble");
  sweep->add_option("--ensemble", ensemble, "disk | segment | ginibre | nilpotent");
  sweep->add_option("--n", sweep_cfg.n, "Dimension");
  sweep->add_option("--trials", sweep_cfg.trials, "Number of instances");
  sweep->add_option("--seed", sweep_cfg.seed, "Seed");
  sweep->add_option("--lambda", sweep_lambda, "Disk center RE,IM");
  sweep->add_option("--r", sweep_cfg.r, "Disk radius (disk ensemble)");
  sweep->add_option("--m", sweep_cfg.m, "Lower spectral bound (segment ensemble)");
  sweep->add_option("--M", sweep_cfg.M, "Upper spectral bound (segment ensemble)");

  bool problem = false;
  bool equality = false;
  std::size_t search_n = 3;
  std::size_t iters = 1000;
  std::uint64_t search_seed = 0;
  auto* search = app.add_subcommand("search", "Random search around the extremal cases");
  auto* problem_flag = search->add_flag("--problem", problem, "||T||=1, T^2=0, ||T-lambda I|| <= |lambda|^(1/2)");
  auto* equality_flag = search->add_flag("--equality", equality, "||T||=1, T^2=0, ||T-I|| <= 1");
  problem_flag->excludes(equality_flag);
  search->add_option("--n", search_n, "Dimension");
  search->add_option("--iters", iters, "Number of random trials");
  search->add_option("--seed", search_seed, "Seed");

  std::string svg_path;
  auto* plot = app.add_subcommand("plot", "Write an SVG of the numerical range");
  plot->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  plot->add_option("--out", svg_path, "SVG output path")->required();
  plot->add_option("--grid", grid, "Theta grid size")->check(CLI::Range(8, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*compute) return run_compute(matrix_path, grid, csv_path);
    if (*verify) return run_verify(vargs);
    if (*sweep) return run_sweep(sweep_cfg, ensemble, sweep_lambda);
    if (*search) {
      if (!problem && !equality) throw UsageError("search needs --problem or --equality");
      return run_search(problem, search_n, iters, search_seed);
    }
    if (*plot) return run_plot(matrix_path, svg_path, grid);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const numrad::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
