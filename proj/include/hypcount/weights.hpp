#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "hypcount/errors.hpp"

namespace hypcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using i64 = std::int64_t;

// Hypergeometric weight system gamma = sum gamma_nu [nu] subject to
//   (1) sum nu gamma_nu = 0
//   (2) d(gamma) = -sum gamma_nu > 0
// encoding the coefficients u_n = prod (nu n)!^{gamma_nu}.  All arithmetic
// here is exact; no floating point enters this module.
class WeightSystem {
public:
    explicit WeightSystem(const std::vector<std::pair<i64, i64>>& terms);

    // sparse CLI syntax "3:1,1:-3" meaning [3] - 3[1]
    static WeightSystem parse(const std::string& text);

    const std::map<i64, i64>& terms() const { return gamma_; }
    i64 degree() const { return d_; }  // d(gamma)
    i64 max_nu() const { return gamma_.rbegin()->first; }

private:
    std::map<i64, i64> gamma_;  // nu -> gamma_nu, no zero entries
    i64 d_ = 0;
};

// Numerator/denominator parameter multisets of the associated
// hypergeometric series, entries in (0,1], coincident pairs cancelled.
// The beta multiset keeps the entry 1 that carries the n! of the series;
// the rF_{r-1} presentation drops exactly one such entry.
struct HypRationalParams {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    Rational lambda0_inv;  // prod nu^{nu gamma_nu}

    // beta with one entry 1 removed (the presentation denominators)
    std::vector<Rational> beta_presentation() const;
};

// u_n = prod (nu n)!^{gamma_nu}, exact
Rational u_coeff(const WeightSystem& gamma, i64 n);

HypRationalParams extract_params(const WeightSystem& gamma);

// Landau function L(x) = -sum gamma_nu {nu x}; integer valued, period 1
i64 landau(const WeightSystem& gamma, const Rational& x);

// true iff L >= 0 just after every discontinuity candidate in one period;
// when true, integrality of u_n is spot-verified for n <= 200
bool landau_criterion(const WeightSystem& gamma);

// v_p(u_n) two ways: exact valuation of the factorial product, and
// sum_{k>=1} L(n/p^k)
struct ValuationIdentity {
    i64 lhs, rhs;
};
ValuationIdentity valuation_identity(const WeightSystem& gamma, i64 p, i64 n);

// structural checks of L against the parameter lists on an exact grid
struct LandauReport {
    std::vector<Rational> discontinuities;  // within [0,1)
    bool jumps_at_params_only = false;
    bool counting_formula_ok = false;  // L(x) = #{alpha_i <= x} - #{0 < beta_j <= x}
    bool integer_valued = false;
    bool reflection_ok = false;  // L(-x) = d - L(x) away from discontinuities
    bool bounded_ok = false;     // L(x) <= d
    bool all_ok() const {
        return jumps_at_params_only && counting_formula_ok && integer_valued &&
               reflection_ok && bounded_ok;
    }
};
LandauReport landau_properties(const WeightSystem& gamma);

// exact p-adic valuation of m! (Legendre's formula)
i64 factorial_valuation(i64 m, i64 p);

Rational pochhammer(const Rational& x, i64 n);
BigInt factorial(i64 n);

}  // namespace hypcount
