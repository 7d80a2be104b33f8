#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypzeta/reduction.hpp"

#include "hypzeta/errors.hpp"
#include "test_support.hpp"

using namespace hypzeta;

namespace {

std::vector<mpz_class> zv(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

// Independent composition: collect the per-step factors first, then
// multiply left-to-right with the last-applied step leftmost (the library
// walker instead multiplies incrementally in application order).
int_mat leftmost_last_product(const reduction_context& ctx, const std::vector<step_kind>& kinds,
                        int64_t s0, int64_t t0) {
  // Collect application-order (kind, s, t), then multiply left-to-right
  // with the leftmost factor being the last step applied.
  std::vector<std::tuple<step_kind, int64_t, int64_t>> at;
  int64_t s = s0, t = t0;
  for (step_kind k : kinds) {
    at.emplace_back(k, s, t);
    switch (k) {
      case step_kind::horizontal: --s; break;
      case step_kind::diagonal: --s; --t; break;
      case step_kind::vertical: --t; break;
    }
  }
  int_mat acc = int_mat::identity(2 * ctx.c().g + 1);
  for (auto it = at.rbegin(); it != at.rend(); ++it) {
    int_mat step(acc.dim());
    ctx.step_matrix_into(step, std::get<0>(*it), std::get<1>(*it), std::get<2>(*it));
    acc = acc * step;
  }
  return acc;
}

differential_vector make_dv(int64_t s, int64_t t, std::vector<long> coords) {
  differential_vector dv;
  dv.s = s;
  dv.t = t;
  for (long v : coords) dv.coords.emplace_back(v);
  return dv;
}

}  // namespace

TEST_CASE("horizontal matrix of x^3+x+1") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  reduction_context ctx(c);

  CHECK(ctx.dh(0, 1) == 3);  // (2g+1) at (0,1)
  CHECK(ctx.dh(1, 0) == -5);
  CHECK(ctx.dh(0, 0) == -3);

  // Last column of M_H holds 2s*Ptop - (2t-1) x Ptop': entries (2s, 2s-2t+1, 0).
  const lin_mat& mh = ctx.horizontal();
  CHECK(mh.at(0, 2).c0 == 0);
  CHECK(mh.at(0, 2).cs == 2);
  CHECK(mh.at(0, 2).ct == 0);
  CHECK(mh.at(1, 2).c0 == 1);
  CHECK(mh.at(1, 2).cs == 2);
  CHECK(mh.at(1, 2).ct == -2);
  CHECK(mh.at(2, 2).c0 == 0);

  int_mat m = eval_linmat(mh, 1, 1);
  int_mat expect(3);
  expect.at(0, 2) = 2;
  expect.at(1, 0) = 1;
  expect.at(1, 2) = 1;
  expect.at(2, 1) = 1;
  CHECK(m == expect);
}

TEST_CASE("horizontal column of x^3-x") {
  curve c = parse_curve(zv({0, -1, 0, 1}));
  reduction_context ctx(c);
  const lin_mat& mh = ctx.horizontal();
  // Ptop = -x: column = coefficients of -2sx + (2t-1)x = (0, 2t-1-2s, 0).
  CHECK(mh.at(0, 2).c0 == 0);
  CHECK(mh.at(0, 2).cs == 0);
  CHECK(mh.at(1, 2).c0 == -1);
  CHECK(mh.at(1, 2).cs == -2);
  CHECK(mh.at(1, 2).ct == 2);
  CHECK(mh.at(2, 2).cs == 0);
}

TEST_CASE("eval_linmat worked entries") {
  lin_mat zero(3);
  CHECK(eval_linmat(zero, 7, -9) == int_mat(3));

  lin_mat one(1);
  one.at(0, 0) = {5, -2, 3};
  CHECK(eval_linmat(one, 2, 7).at(0, 0) == 22);
}

TEST_CASE("diagonal columns match the defining numerators") {
  testsup::rng r(313);
  curve c = testsup::random_curve(r, 2, false);
  reduction_context ctx(c);
  const bezout_data& bz = ctx.bezout();
  for (int64_t s : {0, 3, 11})
    for (int64_t t : {-2, 1, 7}) {
      int_mat m = eval_linmat(ctx.diagonal(), s, t);
      for (int i = 0; i <= 2 * c.g; ++i) {
        poly numer = (2 * mpz_class(t) - 1) * bz.R[static_cast<std::size_t>(i)].shifted(1) +
                     (2 * mpz_class(s)) * bz.S[static_cast<std::size_t>(i)] +
                     mpz_class(2) * bz.S[static_cast<std::size_t>(i)].derivative().shifted(1);
        for (int k = 0; k <= 2 * c.g; ++k)
          CHECK(m.at(k, i) == numer.coeff(static_cast<std::size_t>(k)));
      }
    }
}

TEST_CASE("vertical columns match the defining numerators") {
  testsup::rng r(626);
  curve c = testsup::random_curve(r, 1, true);
  reduction_context ctx(c);
  const bezout_data& bz = ctx.bezout();
  const poly Qd = c.Q.derivative();
  for (int64_t s : {0, 2, 9})
    for (int64_t t : {-1, 1, 5}) {
      int_mat m = eval_linmat(ctx.vertical(), s, t);
      for (int i = 0; i <= 2 * c.g; ++i) {
        const poly& S = bz.S[static_cast<std::size_t>(i)];
        mpz_class h = S.coeff(0);
        std::vector<mpz_class> tail(S.coeffs().begin() + (S.is_zero() ? 0 : 1), S.coeffs().end());
        poly T{std::move(tail)};
        poly numer = (2 * mpz_class(t) - 3) * (h * Qd) - (2 * mpz_class(s)) * (h * c.Pbot) +
                     (2 * mpz_class(t) - 1) * (c.c0 * bz.R[static_cast<std::size_t>(i)]) +
                     (2 * mpz_class(s)) * (c.c0 * T) + mpz_class(2) * (c.c0 * S.derivative());
        for (int k = 0; k <= 2 * c.g; ++k)
          CHECK(m.at(k, i) == numer.coeff(static_cast<std::size_t>(k)));
      }
    }
}

TEST_CASE("vertical requires nonzero constant term") {
  curve c = parse_curve(zv({0, -1, 0, 1}));
  reduction_context ctx(c);
  CHECK_THROWS_AS(ctx.vertical(), error);
  CHECK_THROWS_AS(build_vertical(c, ctx.bezout()), error);
}

TEST_CASE("reduction scales are odd") {
  // D_H(s,t) = (2g+1)(2t-1) - 2s and D_D = D_V = 2t-1 take odd values only.
  curve c = parse_curve(zv({1, 1, 0, 1}));
  reduction_context ctx(c);
  testsup::rng r(11);
  for (int trial = 0; trial < 200; ++trial) {
    int64_t s = testsup::rand_int(r, -50, 50), t = testsup::rand_int(r, -50, 50);
    CHECK(ctx.dh(s, t) % 2 != 0);
    CHECK((2 * t - 1) % 2 != 0);
  }
}

TEST_CASE("admissible pair enumeration") {
  auto p1 = admissible_pairs(1, 3, 1);
  CHECK(p1.size() == 15);
  int count_b1 = 0, count_b3 = 0, count_b5 = 0;
  for (auto& pr : p1) {
    if (pr.b == 1) ++count_b1;
    if (pr.b == 3) ++count_b3;
    if (pr.b == 5) ++count_b5;
    CHECK(pr.b % 2 == 1);
    CHECK(pr.a >= 1);
    CHECK(pr.a <= 3 * ((pr.b - 1) / 2 + 1) - 1);
  }
  CHECK(count_b1 == 2);
  CHECK(count_b3 == 5);
  CHECK(count_b5 == 8);

  auto p0 = admissible_pairs(1, 3, 0);
  CHECK(p0.size() == 12);
  for (auto& pr : p0) CHECK(pr.a >= (pr.b + 1) / 2);  // b <= 2a when c0 = 0

  auto pm1 = admissible_pairs(1, 1, 1);
  REQUIRE(pm1.size() == 2);
  CHECK(pm1[0] == admissible_pair{1, 1});
  CHECK(pm1[1] == admissible_pair{2, 1});

  // sorted by (b, a)
  for (std::size_t i = 1; i < p1.size(); ++i) {
    CHECK((p1[i - 1].b < p1[i].b ||
           (p1[i - 1].b == p1[i].b && p1[i - 1].a < p1[i].a)));
  }
}

TEST_CASE("reduce_to_zero worked example for pair (1,1), r=1") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  reduction_context ctx(c);
  int_mat M;
  mpz_class D;
  reduce_to_zero_matrix(ctx, {1, 1}, 1, M, D);
  CHECK(D == -155);  // D_H(1,0) * delta * D_D(1) = (-5) * 31 * 1
  int_mat expect = eval_linmat(ctx.horizontal(), 1, 0) * eval_linmat(ctx.diagonal(), 2, 1);
  CHECK(M == expect);
}

TEST_CASE("block step counts") {
  CHECK(zero_block_kinds({1, 1}).size() == 2);  // 1 diagonal + 1 horizontal
  auto k13 = zero_block_kinds({1, 3});          // b > 2a: 2 diagonal + 1 vertical
  REQUIRE(k13.size() == 3);
  CHECK(k13[0] == step_kind::diagonal);
  CHECK(k13[1] == step_kind::diagonal);
  CHECK(k13[2] == step_kind::vertical);
}

TEST_CASE("final reduction worked examples") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  reduction_context ctx(c);
  int_mat M;
  mpz_class D;

  final_reduction_matrix(ctx, {1, 1}, M, D);
  CHECK(D == -3);  // D_H(0,0)
  CHECK(M == eval_linmat(ctx.horizontal(), 0, 0));

  final_reduction_matrix(ctx, {2, 1}, M, D);
  CHECK(D == ctx.dh(0, 0) * ctx.dh(1, 0));
  CHECK(M == eval_linmat(ctx.horizontal(), 0, 0) * eval_linmat(ctx.horizontal(), 1, 0));

  // First row is zero for every pair of the mu=3 set.
  for (auto& pr : admissible_pairs(1, 3, 1)) {
    final_reduction_matrix(ctx, pr, M, D);
    for (int j = 0; j < M.dim(); ++j) CHECK(M.at(0, j) == 0);
    CHECK(D != 0);
  }
}

TEST_CASE("incremental walker equals the collected left-to-right product") {
  testsup::rng r(417);
  for (int g : {1, 2}) {
    curve c = testsup::random_curve(r, g, true);
    reduction_context ctx(c);
    for (auto& pr : admissible_pairs(g, g == 1 ? 3 : 2, c.c0)) {
      for (int64_t rr : {1, 2, 5}) {
        int_mat M;
        mpz_class D;
        reduce_to_zero_matrix(ctx, pr, rr, M, D);
        int64_t s0 = pr.a * (2 * rr + 1) - 1;
        int64_t t0 = (static_cast<int64_t>(pr.b) * (2 * rr + 1) - 1) / 2;
        CHECK(M == leftmost_last_product(ctx, zero_block_kinds(pr), s0, t0));
      }
      int_mat M0;
      mpz_class D0;
      final_reduction_matrix(ctx, pr, M0, D0);
      CHECK(M0 == leftmost_last_product(ctx, final_block_kinds(pr), pr.a - 1, (pr.b - 1) / 2));
    }
  }
}

TEST_CASE("rational_reduce is linear and sends zero to zero") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  reduction_context ctx(c);
  auto dv = make_dv(4, 2, {0, 0, 0});
  auto path = std::vector<step_kind>{step_kind::diagonal, step_kind::diagonal,
                                     step_kind::horizontal, step_kind::horizontal,
                                     step_kind::horizontal};
  auto res = rational_reduce(ctx, dv, path);
  CHECK(res.s == -1);
  CHECK(res.t == 0);
  for (auto& q : res.coords) CHECK(q == 0);
}

TEST_CASE("two explicit paths from W_{4,2} agree") {
  curve c = parse_curve(zv({1, 1, 0, 1}));
  reduction_context ctx(c);
  auto dv = make_dv(4, 2, {1, 0, 0});
  auto path1 = std::vector<step_kind>{step_kind::diagonal, step_kind::diagonal,
                                      step_kind::horizontal, step_kind::horizontal,
                                      step_kind::horizontal};
  auto path2 = std::vector<step_kind>{step_kind::horizontal, step_kind::vertical,
                                      step_kind::diagonal, step_kind::horizontal,
                                      step_kind::horizontal, step_kind::horizontal};
  auto r1 = rational_reduce(ctx, dv, path1);
  auto r2 = rational_reduce(ctx, dv, path2);
  REQUIRE(r1.s == -1);
  REQUIRE(r2.s == -1);
  REQUIRE(r2.t == 0);
  CHECK(r1.coords == r2.coords);
}

TEST_CASE("illegal steps are rejected") {
  curve c0 = parse_curve(zv({0, -1, 0, 1}));
  reduction_context ctx0(c0);
  CHECK_THROWS_AS(rational_reduce(ctx0, make_dv(2, 1, {1, 0, 0}), {step_kind::vertical}), error);

  curve c = parse_curve(zv({1, 1, 0, 1}));
  reduction_context ctx(c);
  CHECK_THROWS_AS(
      rational_reduce(ctx, make_dv(0, 0, {0, 1, 0}),
                      {step_kind::horizontal, step_kind::horizontal}),
      error);  // second step starts at s = -1
}

TEST_CASE("path independence on random differentials") {
  testsup::rng r(88001);
  for (int trial = 0; trial < 20; ++trial) {
    int g = 1 + static_cast<int>(testsup::rand_int(r, 0, 1));
    curve c = testsup::random_curve(r, g, true);
    reduction_context ctx(c);
    int64_t s = testsup::rand_int(r, 0, 8), t = testsup::rand_int(r, 0, 6);
    differential_vector dv;
    dv.s = s;
    dv.t = t;
    for (int i = 0; i <= 2 * g; ++i) dv.coords.emplace_back(testsup::rand_int(r, -9, 9));
    auto r1 = rational_reduce(ctx, dv, testsup::random_path(r, s, t));
    auto r2 = rational_reduce(ctx, dv, testsup::random_path(r, s, t));
    CHECK(r1.coords == r2.coords);
  }
}

TEST_CASE("exact forms reduce to zero") {
  testsup::rng r(55);
  for (int trial = 0; trial < 20; ++trial) {
    int g = 1 + static_cast<int>(testsup::rand_int(r, 0, 1));
    curve c = testsup::random_curve(r, g, true);
    reduction_context ctx(c);
    int64_t s = testsup::rand_int(r, 1, 6), t = testsup::rand_int(r, 0, 5);

    // 2 d(x^s y^{-2t+1}) = (2sQ - (2t-1) x Q') x^{s-1} y^{-2t} dx/y splits
    // into a W_{s-1,t} part plus G_{2g+1} times the top basis vector of W_{s,t}.
    poly G = (2 * mpz_class(s)) * c.Q - (2 * mpz_class(t) - 1) * c.Q.derivative().shifted(1);
    REQUIRE(G.degree() == 2 * g + 1);

    differential_vector low;
    low.s = s - 1;
    low.t = t;
    for (int k = 0; k <= 2 * g; ++k) low.coords.emplace_back(G.coeff(static_cast<std::size_t>(k)));

    differential_vector top;
    top.s = s;
    top.t = t;
    top.coords.assign(static_cast<std::size_t>(2 * g) + 1, mpq_class(0));
    top.coords.back() = G.coeff(static_cast<std::size_t>(2 * g + 1));

    auto r1 = rational_reduce(ctx, low, testsup::random_path(r, s - 1, t));
    auto r2 = rational_reduce(ctx, top, testsup::random_path(r, s, t));
    for (int k = 0; k <= 2 * g; ++k) CHECK(r1.coords[static_cast<std::size_t>(k)] +
                                           r2.coords[static_cast<std::size_t>(k)] == 0);
  }
}
