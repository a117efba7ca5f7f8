#pragma once

#include <cstdint>
#include <vector>

#include "hypcount/errors.hpp"

namespace hypcount {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Truncated p-adic integer: a residue mod p^k with its precision carried
// along.  Mixing precisions takes the minimum.  p odd prime, k >= 1.
class PadicInt {
public:
    PadicInt(i64 p, int k, i64 value);  // value reduced mod p^k

    i64 p() const { return p_; }
    int k() const { return k_; }
    i64 pk() const { return pk_; }
    i64 residue() const { return r_; }
    bool is_unit() const { return r_ % p_ != 0; }

    PadicInt reduced(int k_new) const;  // lower the precision

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt operator/(const PadicInt& o) const;  // o must be a unit
    PadicInt operator-() const;
    bool operator==(const PadicInt& o) const;

    PadicInt inverse() const;     // unit only
    PadicInt pow(i64 e) const;    // negative e inverts first

private:
    i64 p_;
    int k_;
    i64 pk_;
    i64 r_;
};

// rational with denominator coprime to p; embeds into Z/p^k
struct RationalInZp {
    i64 num = 0;
    i64 den = 1;

    RationalInZp() = default;
    RationalInZp(i64 n, i64 d);  // normalizes, den > 0
    PadicInt to_padic(i64 p, int k) const;
};

i64 pow_mod(i64 base, i64 exp, i64 mod);  // exp >= 0
i64 inv_mod(i64 a, i64 mod);              // gcd(a, mod) = 1

// Teichmuller lift: the unique w with w = x mod p and w^{p-1} = 1 mod p^k
PadicInt teichmuller(i64 p, int k, i64 x);

// Morita's p-adic gamma function at x in Z_p (denominator coprime to p),
// computed from the restricted factorial f(n) = (-1)^n prod_{1<=j<n, p-!|j} j
// at the congruent representative n in [2, 2 + p^k).
PadicInt padic_gamma(i64 p, int k, const RationalInZp& x);
PadicInt padic_gamma(i64 p, int k, i64 x);

// gamma(x+1) together with the shift branch check:
// gamma(x+1) = -x gamma(x) for units, -gamma(x) when p | x
struct GammaShift {
    PadicInt gamma_x1;
    bool branch_ok;
};
GammaShift gamma_shift(i64 p, int k, const RationalInZp& x);

// gamma(x) gamma(1-x) = (-1)^{R(x)}, R(x) in {1..p}, R(x) = x mod p
struct GammaReflection {
    PadicInt product;
    i64 R;
    bool ok;
};
GammaReflection gamma_reflection(i64 p, int k, const RationalInZp& x);

// Gauss multiplication formula for gamma_p, m >= 1 coprime to p:
//   prod_{0<=j<m} gamma(x + j/m)
//     = eps_m m^{1-R(mx)} (m^{p-1})^{s(mx)} gamma(mx)
// with eps_m = prod_j gamma(j/m), s(y) = (R(y)-y)/p in Z_p.
struct GaussMultiplication {
    PadicInt lhs, rhs;
    bool ok;
};
GaussMultiplication gauss_multiplication(i64 p, int k, i64 m, const RationalInZp& x);

// base-p digits of a in [0, p^f - 1): digit sum and the f cyclic rotations
struct DigitData {
    i64 digit_sum;
    std::vector<i64> digits;     // a_0 (low) .. a_{f-1}
    std::vector<i64> rotations;  // a^{(0)} = a, a^{(1)}, ...
};
DigitData digit_sum_and_rotations(i64 p, i64 f, i64 a);

}  // namespace hypcount
