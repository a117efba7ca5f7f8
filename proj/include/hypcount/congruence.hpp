#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypcount/counting.hpp"
#include "hypcount/padic.hpp"
#include "hypcount/weights.hpp"

namespace hypcount {

// Truncated hypergeometric sums mod p and the point-count congruences for
// the zero-dimensional family Z_lambda : x^d + y^d - d lambda x y^{d-1} = 0,
// the Dwork cubic/quartic, and the Legendre curve.  Everything here is exact
// integer arithmetic; no floating point feeds any assertion.

// exponent of -p in the Gauss-sum ratio g(a/(p-1)) g({(d-1)a/(p-1)}) /
// g({da/(p-1)}): eta(a) = a/(p-1) + {(d-1)a/(p-1)} - {da/(p-1)}, an integer
// in {0, 1}, equal to the Landau value of [d]-[1]-[d-1] at a/(p-1)
i64 eta(i64 p, i64 d, i64 a);

// Exact count of Z_lambda over F_p in Z/p^k via the p-adic gamma function
// (d | p-1, p coprime to lambda):
//   N(0) + (-1/(p-1)) sum_{a=0}^{p-2} (-p)^{eta(a)}
//          Gamma_p(a/(p-1)) Gamma_p({(d-1)a/(p-1)}) / Gamma_p({da/(p-1)})
//          w(d lambda)^{-da}
// with w the Teichmuller lift.
PadicInt zerodim_padic_count(i64 p, int k, i64 d, i64 lambda);

// Truncated series sum_{n=lo}^{hi} prod(alpha_i)_n z^n / (prod(beta_j)_n n!)
// reduced mod p^k.  Coefficients are accumulated as exact rationals, so
// paired zeros of numerator and denominator Pochhammers cancel; a
// coefficient with p left in its denominator is an error (reported with the
// offending index).
i64 truncated_hyp_mod_p(i64 p, const std::vector<Rational>& alpha,
                        const std::vector<Rational>& beta, i64 z, i64 lo, i64 hi,
                        int k = 1);

// Congruence side of the windowed theorem for Z_lambda, d(d-1) | p-1:
//   sum_{i=0}^{d-2} [ F(alpha^(i); beta^(i) | (d-1)^{-(d-1)} lambda^{-d}) ]
// truncated to [i(p-1)/(d-1), (i+1)(p-1)/d - 1], where alpha^(0) =
// (1/d, ..., (d-1)/d), beta^(0) = (1/(d-1), ..., (d-2)/(d-1)) and the
// i-th pair adds 1 to the first i entries of each.
// Congruent to N(lambda) - N(0) mod p.
i64 zerodim_congruence(i64 p, i64 d, i64 lambda);

// Dwork cubic (3 | p-1): N(lambda)-N(0) = -[2F1(1/3,2/3;1 | lambda^{-3})]
// truncated to [0, (p-1)/3 - 1], mod p
i64 dwork3_congruence(i64 p, i64 lambda);

// Dwork quartic (4 | p-1): N(lambda)-N(0) = [3F2(1/4,1/2,3/4;1,1 |
// lambda^{-4})] truncated to [0, (p-1)/4 - 1], mod p
i64 dwork4_congruence(i64 p, i64 lambda);

// Legendre curve y^2 = x(x-1)(x-lambda), lambda != 0, 1 mod p:
// N = (-1)^{(p-1)/2} [2F1(1/2,1/2;1 | lambda)] truncated to [0,(p-1)/2], mod p.
// Also checks the binomial form sum binom(-1/2, r)^2 lambda^r term by term.
i64 legendre_congruence(i64 p, i64 lambda);

enum class FamilyKind { zerodim, dwork3, dwork4, legendre };

std::string family_name(FamilyKind kind);

// One verified fiber.  lhs is the brute-force side mod p ((N(lambda)-N(0))
// for the deformation families, N(lambda) for Legendre); rhs the congruence
// side.  Singular fibers are reported but not asserted.  For the Dwork
// families the mod-p^d residues of both sides are reported as exploratory
// data, never asserted.
struct CongruenceReport {
    FamilyKind family;
    i64 p = 0;
    i64 d = 0;
    int k = 1;
    i64 lambda = 0;
    i64 lhs = 0;
    i64 rhs = 0;
    bool match = false;
    bool asserted = true;
    std::string note;
    // zerodim: exact p-adic count vs brute count mod p^k
    std::optional<i64> padic_lhs, padic_rhs;
    // dwork3/dwork4: both sides mod p^d, informational
    std::optional<i64> mod_pd_lhs, mod_pd_rhs;
};

// divisibility preconditions for a prime to admit the family
bool family_admits(FamilyKind kind, i64 p, i64 d);
std::string family_requirement(FamilyKind kind, i64 d);

// sweeps over lambda (all residues when lambdas is empty); deterministic row
// order, parallel across fibers
std::vector<CongruenceReport> verify_family(FamilyKind kind, i64 p, i64 d, int k,
                                            const std::vector<i64>& lambdas = {});

}  // namespace hypcount
