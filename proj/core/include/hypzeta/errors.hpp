#pragma once

#include <stdexcept>
#include <string>

namespace hypzeta {

enum class errc {
  // curve
  not_monic,
  even_degree,
  not_squarefree,
  // bezout
  not_coprime,
  // reduction
  zero_constant_term,
  illegal_step,
  // rtree
  dimension_mismatch,
  // frobenius
  non_invertible_denominator,
  valuation_overflow,
  integrality_failure,
  // zeta
  non_invertible_small_integer,
  weil_bound_violation,
  functional_equation_mismatch,
  // oracle
  budget_exceeded,
  non_integral_newton,
  // pipeline
  verification_mismatch,
  invalid_input,
};

const char* errc_name(errc code) noexcept;

// Exception carrying one of the error conditions above. Internal-assertion
// kinds (valuation_overflow, integrality_failure, verification_mismatch)
// indicate a bug or a broken run, never a bad user input.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

}  // namespace hypzeta
