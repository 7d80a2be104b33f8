#include "hypzeta/pipeline.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>

#include "hypzeta/errors.hpp"
#include "hypzeta/oracle.hpp"
#include "hypzeta/parallel.hpp"
#include "hypzeta/rtree.hpp"
#include "hypzeta/zmod.hpp"

namespace hypzeta {

std::vector<lpoly_record> run_pipeline(const curve& c, const run_config& cfg, run_stats* stats) {
  if (cfg.limit < 3) fail(errc::invalid_input, "limit must be at least 3");
  if (cfg.threads < 1) fail(errc::invalid_input, "threads must be at least 1");

  run_stats local;
  run_stats* st = stats ? stats : &local;

  frob_context fctx = make_frob_context(c);

  std::vector<uint64_t> primes;
  for (uint64_t p : sieve_primes(cfg.limit))
    if (p >= 3) primes.push_back(p);
  st->primes_total = primes.size();

  enum class route { bad, fallback, computed };
  auto classify = [&](uint64_t p) {
    if (zmod(c.delta, p) == 0) return route::bad;
    if (p <= fctx.cutoff) return route::fallback;
    if (c.c0 != 0 && zmod(c.c0, p) == 0) return route::fallback;
    return route::computed;
  };

  bool any_computed = false;
  for (uint64_t p : primes)
    if (classify(p) == route::computed) any_computed = true;

  reduction_context rctx(c);
  u_table ut;
  if (any_computed) ut = compute_u_table(rctx, fctx, cfg.limit, cfg.threads, st);

  std::vector<std::size_t> u_index(primes.size(), SIZE_MAX);
  for (std::size_t k = 0; k < ut.primes.size(); ++k) {
    auto it = std::lower_bound(primes.begin(), primes.end(), ut.primes[k]);
    assert(it != primes.end() && *it == ut.primes[k]);
    u_index[static_cast<std::size_t>(it - primes.begin())] = k;
  }

  std::vector<lpoly_record> records(primes.size());
  parallel_for(primes.size(), cfg.threads, [&](std::size_t i) {
    const uint64_t p = primes[i];
    switch (classify(p)) {
      case route::bad: {
        records[i].p = p;
        records[i].status = lpoly_status::bad;
        st->bad += 1;
        break;
      }
      case route::fallback: {
        records[i] = fallback_lpoly(c, p, cfg.budget_bits);
        st->fallback += 1;
        break;
      }
      case route::computed: {
        assert(u_index[i] != SIZE_MAX);
        frob_matrix F = assemble_frobenius(c, p, u_index[i], ut, fctx, st);
        auto e = charpoly_mod(F, c.g);
        records[i] = lift_weil_lpoly(e, p, c.g, fctx.mu);
        st->computed += 1;
        break;
      }
    }
    validate_record(records[i], c.g);

    if (cfg.verify_limit > 0 && p <= cfg.verify_limit &&
        records[i].status != lpoly_status::bad) {
      lpoly_record check = fallback_lpoly(c, p, cfg.budget_bits);
      if (check.a != records[i].a)
        fail(errc::verification_mismatch,
             "record at p=" + std::to_string(p) + " disagrees with the point-count oracle");
      st->verified += 1;
    }
  });
  return records;
}

std::string record_csv_line(const lpoly_record& rec, int g) {
  std::string line = std::to_string(rec.p);
  line += ',';
  line += lpoly_status_name(rec.status);
  for (int i = 0; i <= 2 * g; ++i) {
    line += ',';
    if (rec.status != lpoly_status::bad) line += rec.a[static_cast<std::size_t>(i)].get_str();
  }
  return line;
}

std::string record_jsonl_line(const lpoly_record& rec) {
  std::string line = "{\"p\":" + std::to_string(rec.p) + ",\"status\":\"";
  line += lpoly_status_name(rec.status);
  line += '"';
  if (rec.status != lpoly_status::bad) {
    line += ",\"a\":[";
    for (std::size_t i = 0; i < rec.a.size(); ++i) {
      if (i) line += ',';
      line += rec.a[i].get_str();
    }
    line += ']';
  }
  line += '}';
  return line;
}

std::string render_records(const std::vector<lpoly_record>& recs, int g, output_format fmt) {
  std::string out;
  for (const auto& r : recs) {
    out += fmt == output_format::csv ? record_csv_line(r, g) : record_jsonl_line(r);
    out += '\n';
  }
  return out;
}

std::vector<mpz_class> parse_coeff_list(const std::string& text) {
  std::vector<mpz_class> out;
  std::string token;
  auto flush = [&] {
    std::size_t b = token.find_first_not_of(" \t\r\n");
    std::size_t e = token.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) fail(errc::invalid_input, "empty coefficient in list");
    std::string body = token.substr(b, e - b + 1);
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), body.c_str(), 10) != 0)
      fail(errc::invalid_input, "bad integer '" + body + "' in coefficient list");
    out.push_back(std::move(v));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      token += ch;
  }
  if (token.find_first_not_of(" \t\r\n") != std::string::npos || out.empty()) flush();
  if (out.empty()) fail(errc::invalid_input, "no coefficients given");
  return out;
}

std::vector<mpz_class> read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_input, "cannot open curve file " + path);
  std::string line;
  std::getline(in, line);
  return parse_coeff_list(line);
}

}  // namespace hypzeta
