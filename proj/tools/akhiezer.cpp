// Command-line front end: solve / certify / ladder with machine-readable
// output. Payload goes to stdout, logs to stderr; exit codes are
// 0 success, 2 validation error, 3 numerical error, 4 certification failure.

#include "akhiezer/errors.hpp"
#include "akhiezer/solver.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitCertification = 4;

akhiezer::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return akhiezer::OutputFormat::Json;
  if (name == "csv") return akhiezer::OutputFormat::Csv;
  if (name == "text") return akhiezer::OutputFormat::Text;
  throw akhiezer::DomainError("unknown output format: " + name);
}

int run(int argc, char** argv) {
  CLI::App app{"L1-minimal monic polynomials on a two-interval set "
               "[-1, alpha] u [beta, 1]"};
  app.require_subcommand(1);

  akhiezer::SolveRequest req;
  std::string format = "json";
  double ladder_alpha = 0.0;
  int ladder_m = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", req.alpha, "left interval end alpha")->required();
    cmd->add_option("--beta", req.beta, "right interval start beta")->required();
    cmd->add_option("--degree", req.degree, "polynomial degree n >= 1")->required();
    cmd->add_option("--format", format, "output format: json, csv, text");
    cmd->add_option("--grid", req.grid, "oracle grid nodes per interval (odd)");
    cmd->add_option("--tol-pell", req.tol_pell, "scaled Pell-excess acceptance");
    cmd->add_option("--tol-cert", req.tol_cert, "relative certification tolerance");
  };

  CLI::App* solve = app.add_subcommand("solve", "synthesize the extremal polynomial");
  add_common(solve);
  solve->add_flag("--with-oracle", req.with_oracle,
                  "also run the brute-force oracle and report the gap");

  CLI::App* certify = app.add_subcommand(
      "certify", "cross-check the closed form against the brute-force oracle");
  add_common(certify);

  CLI::App* ladder = app.add_subcommand(
      "ladder", "degenerate beta ladder and uniqueness bands for fixed alpha");
  ladder->add_option("--alpha", ladder_alpha, "left interval end alpha")->required();
  ladder->add_option("--m", ladder_m, "family index m (degree n = 2m+1)")->required();
  ladder->add_option("--format", format, "output format: json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitValidation : 0;
  }

  try {
    if (solve->parsed()) {
      req.format = parse_format(format);
      const akhiezer::SolveResponse resp = akhiezer::run_solve(req);
      switch (req.format) {
        case akhiezer::OutputFormat::Json: std::cout << akhiezer::to_json(resp); break;
        case akhiezer::OutputFormat::Csv: std::cout << akhiezer::to_csv(resp); break;
        case akhiezer::OutputFormat::Text: std::cout << akhiezer::to_text(resp); break;
      }
      return 0;
    }
    if (certify->parsed()) {
      const akhiezer::CertifyRun run = akhiezer::run_certify(req);
      std::cout << akhiezer::to_json(run);
      return run.report.pass ? 0 : kExitCertification;
    }
    if (ladder->parsed()) {
      if (ladder_m < 0) throw akhiezer::DomainError("ladder: m must be >= 0");
      const akhiezer::LadderReport report = akhiezer::run_ladder(ladder_alpha, ladder_m);
      std::cout << akhiezer::to_json(report);
      return 0;
    }
  } catch (const akhiezer::DomainError& e) {
    std::cerr << akhiezer::error_json("validation", e.what());
    return kExitValidation;
  } catch (const akhiezer::CertificationError& e) {
    std::cerr << akhiezer::error_json("certification", e.what());
    return kExitCertification;
  } catch (const akhiezer::Error& e) {
    std::cerr << akhiezer::error_json("numerical", e.what());
    return kExitNumerical;
  }
  return kExitValidation;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
