#pragma once

#include <vector>

#include "hypcount/charsums.hpp"

namespace hypcount {

// Finite-field hypergeometric function
//   H(alpha; beta | t) = sum over V_t of psi(sum x - sum y)
//                        prod chi_{alpha_i}(x_i) prod conj(chi_{beta_j})(y_j)
// where V_t = { x in (F_q^*)^n, y in (F_q^*)^m : x_1...x_n = t y_1...y_m }.
//
// Character parameters are indices mod q-1 (see charsums.hpp);
// t is a nonzero field element code.
struct HypParams {
    std::vector<i64> alpha;
    std::vector<i64> beta;
    i64 t = 1;
};

// Direct evaluation by enumerating V_t, parametrized by the first n+m-1
// torus coordinates with the last solved from the product constraint.
// Cost O(q^{n+m-1}); accepted only for n+m <= 5 at q <= 31.
complexd hyp_direct(const FieldSpec& spec, const HypParams& params);
complexd hyp_direct_serial(const FieldSpec& spec, const HypParams& params);

// Gauss-sum expansion
//   (1/(q-1)) sum_s g(s+alpha_1)...g(s+alpha_n)
//             conj(g(s+beta_1))...conj(g(s+beta_m)) conj(chi_s)(t),
// which agrees with hyp_direct exactly.  Cost O(q (n+m)).
complexd hyp_fourier(const FieldSpec& spec, const HypParams& params);
complexd hyp_fourier(const GaussTable& gt, const HypParams& params);

}  // namespace hypcount
