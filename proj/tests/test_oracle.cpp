#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypzeta/oracle.hpp"

#include "hypzeta/errors.hpp"
#include "hypzeta/zmod.hpp"
#include "test_support.hpp"

using namespace hypzeta;

namespace {
std::vector<mpz_class> zv(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("point counts for y^2 = x^3 + x + 1") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  CHECK(point_count(c, 7, 1) == 5);
  CHECK(point_count(c, 5, 1) == 9);
}

TEST_CASE("point count with character zeros: y^2 = x^3 - x at p=5") {
  curve c = parse_curve(zv({0, -1, 0, 1}));
  CHECK(point_count(c, 5, 1) == 8);
}

TEST_CASE("budget guard") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  CHECK_THROWS_AS(point_count(c, 101, 4, 25), error);  // 101^4 > 2^25
  CHECK_NOTHROW(point_count(c, 101, 1, 25));
}

TEST_CASE("lpoly_from_counts worked examples") {
  lpoly_record r7 = lpoly_from_counts(7, 1, {5});
  CHECK(r7.a == zv({1, -3, 7}));
  CHECK(r7.status == lpoly_status::fallback);

  lpoly_record r5 = lpoly_from_counts(5, 1, {9});
  CHECK(r5.a == zv({1, 3, 5}));

  lpoly_record rp = lpoly_from_counts(13, 1, {14});
  CHECK(rp.a == zv({1, 0, 13}));  // s_1 = 0
}

TEST_CASE("fallback_lpoly on small primes") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  lpoly_record r7 = fallback_lpoly(c, 7);
  CHECK(r7.a == zv({1, -3, 7}));
  CHECK(r7.status == lpoly_status::fallback);

  lpoly_record r3 = fallback_lpoly(c, 3);
  CHECK(r3.p == 3);
  CHECK(r3.a[0] == 1);
  CHECK(r3.a[2] == 3);  // functional equation forces a_2 = p
}

TEST_CASE("fallback satisfies Weil bound and functional equation for g <= 2") {
  for (auto coeffs : {zv({1, 1, 0, 1}), zv({1, -1, 0, 0, 0, 1})}) {
    curve c = parse_curve(coeffs);
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 37ull, 41ull,
                       43ull, 47ull, 53ull, 59ull, 61ull}) {
      mpz_class d;
      mpz_mod(d.get_mpz_t(), c.delta.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
      if (d == 0) continue;
      lpoly_record rec = fallback_lpoly(c, p);
      CHECK_NOTHROW(validate_record(rec, c.g));  // Weil + functional equation
      // |a_1| <= 2g sqrt(p), exact integer form
      CHECK(rec.a[1] * rec.a[1] <= 4 * c.g * c.g * static_cast<long>(p));
    }
  }
}

TEST_CASE("field sanity: commutativity, associativity, Fermat") {
  testsup::rng r(606);
  for (auto [p, n] : std::vector<std::pair<uint64_t, int>>{{5, 1}, {7, 2}, {13, 3}, {3, 3}}) {
    fq F(p, n);
    for (int trial = 0; trial < 100; ++trial) {
      auto a = F.from_index(static_cast<uint64_t>(testsup::rand_int(r, 0, static_cast<long>(F.order() - 1))));
      auto b = F.from_index(static_cast<uint64_t>(testsup::rand_int(r, 0, static_cast<long>(F.order() - 1))));
      auto c = F.from_index(static_cast<uint64_t>(testsup::rand_int(r, 0, static_cast<long>(F.order() - 1))));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.pow(a, F.order()) == a);  // u^(p^n) = u
    }
  }
}

TEST_CASE("chi is multiplicative on nonzero elements") {
  testsup::rng r(707);
  for (auto [p, n] : std::vector<std::pair<uint64_t, int>>{{11, 1}, {7, 2}, {5, 3}}) {
    fq F(p, n);
    for (int trial = 0; trial < 100; ++trial) {
      auto a = F.from_index(1 + static_cast<uint64_t>(testsup::rand_int(r, 0, static_cast<long>(F.order() - 2))));
      auto b = F.from_index(1 + static_cast<uint64_t>(testsup::rand_int(r, 0, static_cast<long>(F.order() - 2))));
      CHECK(F.chi(F.mul(a, b)) == F.chi(a) * F.chi(b));
    }
  }
}

TEST_CASE("modulus is irreducible (no roots for n <= 3)") {
  for (auto [p, n] : std::vector<std::pair<uint64_t, int>>{{5, 2}, {7, 3}, {13, 2}, {3, 3}}) {
    fq F(p, n);
    const auto& mod = F.modulus();
    REQUIRE(static_cast<int>(mod.size()) == n);
    for (uint64_t x = 0; x < p; ++x) {
      // evaluate x^n + mod_{n-1} x^{n-1} + ... + mod_0 at x
      uint64_t val = 1;
      for (int i = 0; i < n; ++i) val = val * x % p;
      uint64_t xp = 1;
      for (int i = 0; i < n; ++i) {
        val = (val + mod[static_cast<std::size_t>(i)] * xp) % p;
        xp = xp * x % p;
      }
      CHECK(val != 0);
    }
  }
}

TEST_CASE("direct_mod_product examples") {
  std::vector<int_mat> id(5, int_mat::identity(3));
  CHECK(direct_mod_product(id, 7, 4, 2) == int_mat::identity(3));

  std::vector<int_mat> seq(3, int_mat(1));
  seq[0].at(0, 0) = 1;
  seq[1].at(0, 0) = 1;
  seq[2].at(0, 0) = 2;
  CHECK(direct_mod_product(seq, 5, 2, 1).at(0, 0) == 2);

  // ring homomorphism: reduce-at-each-step equals reduce-once
  testsup::rng r(1009);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int_mat> ms(6, int_mat(3));
    for (auto& m : ms)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = testsup::rand_int(r, -50, 50);
    int_mat full = ms[0];
    for (std::size_t k = 1; k < ms.size(); ++k) full = full * ms[k];
    mpz_class mod = pow_ui(mpz_class(11), 3);
    full.reduce_mod(mod);
    CHECK(direct_mod_product(ms, 11, ms.size() - 1, 3) == full);
  }
}

TEST_CASE("exact_U basic properties at small primes") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  reduction_context ctx(c);
  for (auto pr : {admissible_pair{1, 1}, admissible_pair{2, 1}, admissible_pair{1, 3}}) {
    auto u = exact_U(ctx, pr, 37);
    REQUIRE(u.size() == 3);
    CHECK(u[0] == 0);
    // denominator p-valuation is at most rho = (b-1)/2 + max(0, 2a-b)
    int rho = (pr.b - 1) / 2 + std::max(0, 2 * pr.a - pr.b);
    for (auto& q : u) {
      if (q == 0) continue;
      mpz_class den = q.get_den();
      int v = 0;
      while (mpz_divisible_ui_p(den.get_mpz_t(), 37)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 37);
        ++v;
      }
      CHECK(v <= rho);
    }
  }
  CHECK_THROWS_AS(exact_U(ctx, {1, 1}, 499), error);  // beyond the exact-rational cap
}
