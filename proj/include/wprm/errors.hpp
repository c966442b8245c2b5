/*
   Copyright 2026 the wprm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WPRM_ERRORS_HPP
#define WPRM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wprm {

enum class ErrorKind {
    not_prime_power,
    reducible_modulus,
    no_builtin_modulus,
    division_by_zero,
    non_trivial_gcd,
    empty_weights,
    zero_lambda,
    zero_point,
    budget_exceeded,
    wrong_weights,
    mismatched_ambient,
    gcd_violation,
    negative_exponent,
    indivisible_term,
    unsupported_regime,
    unsupported_degree,
    oracle_disagreement,
    parse_error,
    invalid_argument,
};

inline const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::not_prime_power: return "NotPrimePower";
        case ErrorKind::reducible_modulus: return "ReducibleModulus";
        case ErrorKind::no_builtin_modulus: return "NoBuiltinModulus";
        case ErrorKind::division_by_zero: return "DivisionByZero";
        case ErrorKind::non_trivial_gcd: return "NonTrivialGcd";
        case ErrorKind::empty_weights: return "EmptyWeights";
        case ErrorKind::zero_lambda: return "ZeroLambda";
        case ErrorKind::zero_point: return "ZeroPoint";
        case ErrorKind::budget_exceeded: return "BudgetExceeded";
        case ErrorKind::wrong_weights: return "WrongWeights";
        case ErrorKind::mismatched_ambient: return "MismatchedAmbient";
        case ErrorKind::gcd_violation: return "GcdViolation";
        case ErrorKind::negative_exponent: return "NegativeExponent";
        case ErrorKind::indivisible_term: return "IndivisibleTerm";
        case ErrorKind::unsupported_regime: return "UnsupportedRegime";
        case ErrorKind::unsupported_degree: return "UnsupportedDegree";
        case ErrorKind::oracle_disagreement: return "OracleDisagreement";
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// All library failures are reported through this exception; `kind()` makes
/// the failure class testable and gives the CLI its one-line diagnostics.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace wprm

#endif
