#include "hypzeta/errors.hpp"

namespace hypzeta {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::not_monic: return "NotMonic";
    case errc::even_degree: return "EvenDegree";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::not_coprime: return "NotCoprime";
    case errc::zero_constant_term: return "ZeroConstantTerm";
    case errc::illegal_step: return "IllegalStep";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_invertible_denominator: return "NonInvertibleDenominator";
    case errc::valuation_overflow: return "ValuationOverflow";
    case errc::integrality_failure: return "IntegralityFailure";
    case errc::non_invertible_small_integer: return "NonInvertibleSmallInteger";
    case errc::weil_bound_violation: return "WeilBoundViolation";
    case errc::functional_equation_mismatch: return "FunctionalEquationMismatch";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::non_integral_newton: return "NonIntegralNewton";
    case errc::verification_mismatch: return "VerificationMismatch";
    case errc::invalid_input: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace hypzeta
