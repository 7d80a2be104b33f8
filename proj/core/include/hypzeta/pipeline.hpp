#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hypzeta/curve.hpp"
#include "hypzeta/frobenius.hpp"
#include "hypzeta/zeta.hpp"

namespace hypzeta {

enum class output_format { csv, jsonl };

struct run_config {
  uint64_t limit = 0;        // N: one record per odd prime p < N
  int threads = 1;
  uint64_t verify_limit = 0; // cross-check records with p <= this against the oracle; 0 = off
  int budget_bits = 25;      // oracle p^n cap
  output_format format = output_format::csv;
};

// One record per odd prime p < N, ascending: bad when p | delta, fallback
// when good and (p <= cutoff or p | c0 with c0 != 0), computed otherwise.
// With verify_limit > 0, every good record with p <= verify_limit is
// checked against the brute-force oracle; a mismatch throws
// errc::verification_mismatch naming the prime.
std::vector<lpoly_record> run_pipeline(const curve& c, const run_config& cfg,
                                       run_stats* stats = nullptr);

// Serialization used by the CLI and the byte-reproducibility tests.
// CSV:   p,status,a_0,...,a_{2g}   (empty a-fields for bad records)
// JSONL: {"p":...,"status":"...","a":[...]}   ("a" absent for bad)
std::string record_csv_line(const lpoly_record& rec, int g);
std::string record_jsonl_line(const lpoly_record& rec);
std::string render_records(const std::vector<lpoly_record>& recs, int g, output_format fmt);

// Parses "c0,c1,...,1" (ascending degree) into coefficients; accepts
// surrounding whitespace. Throws errc::invalid_input on malformed text.
std::vector<mpz_class> parse_coeff_list(const std::string& text);

// Reads a curve file: a single line of comma-separated decimal integers.
std::vector<mpz_class> read_curve_file(const std::string& path);

}  // namespace hypzeta
