// Command-line driver: computes the L-polynomial of y^2 = Q(x) mod p for
// every odd prime p below a bound, writing one record per prime.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hypzeta/errors.hpp"
#include "hypzeta/pipeline.hpp"

namespace {

// 0 success, 2 invalid input, 3 internal assertion / verification failure.
int exit_code_for(hypzeta::errc code) {
  switch (code) {
    case hypzeta::errc::valuation_overflow:
    case hypzeta::errc::integrality_failure:
    case hypzeta::errc::verification_mismatch:
    case hypzeta::errc::non_integral_newton:
    case hypzeta::errc::weil_bound_violation:
    case hypzeta::errc::functional_equation_mismatch:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-polynomials of a hyperelliptic curve y^2 = Q(x) for all odd primes p < N"};

  std::string coeffs_text, curve_file, format = "csv", out_path;
  uint64_t limit = 0, verify = 0;
  int threads = 1, budget = 25;

  auto* coeffs_opt = app.add_option("--coeffs", coeffs_text,
                                    "curve coefficients, ascending degree, e.g. \"1,1,0,1\"");
  auto* file_opt = app.add_option("--curve-file", curve_file,
                                  "file holding one line of comma-separated coefficients");
  coeffs_opt->excludes(file_opt);
  app.add_option("--limit", limit, "bound N; one record per odd prime p < N")->required();
  app.add_option("--format", format, "output format: csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--threads", threads, "worker count (default 1)");
  app.add_option("--verify", verify, "cross-check records with p <= LIMIT against the oracle");
  app.add_option("--budget", budget, "oracle budget: p^n <= 2^BITS (default 25)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // flag errors are invalid input
  }

  try {
    std::vector<mpz_class> coeffs;
    if (!curve_file.empty())
      coeffs = hypzeta::read_curve_file(curve_file);
    else if (!coeffs_text.empty())
      coeffs = hypzeta::parse_coeff_list(coeffs_text);
    else {
      std::cerr << "error: one of --coeffs or --curve-file is required\n";
      return 2;
    }

    hypzeta::curve c = hypzeta::parse_curve(coeffs);

    hypzeta::run_config cfg;
    cfg.limit = limit;
    cfg.threads = threads;
    cfg.verify_limit = verify;
    cfg.budget_bits = budget;
    cfg.format = format == "jsonl" ? hypzeta::output_format::jsonl : hypzeta::output_format::csv;

    auto records = hypzeta::run_pipeline(c, cfg);
    std::string text = hypzeta::render_records(records, c.g, cfg.format);

    if (out_path.empty()) {
      std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 2;
      }
      out << text;
    }
    return 0;
  } catch (const hypzeta::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
