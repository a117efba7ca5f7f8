#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypcount/errors.hpp"

namespace hypcount {

using i64 = std::int64_t;

// Arithmetic in F_q = F_{p^f}, p an odd prime, with eagerly built
// primitive-root and discrete-log tables.
//
// Elements are integer codes in [0, q): the element with coefficient vector
// (a_0, ..., a_{f-1}) against the power basis 1, x, ..., x^{f-1} has code
// sum a_i p^i.  Code 0 is zero, codes < p are the prime subfield.
//
// The primitive root is the smallest code generating F_q^*, so character
// indexing is reproducible across runs.  A FieldSpec is immutable after
// construction; all member functions are const and thread-safe.
class FieldSpec {
public:
    i64 p = 0;  // odd prime
    i64 f = 1;  // extension degree
    i64 q = 0;  // p^f

    // monic modulus as coefficients c_0..c_f (c_f = 1); empty when f = 1
    std::vector<i64> modulus;

    i64 generator = 0;  // code of the chosen primitive root

    // element arithmetic ------------------------------------------------
    i64 add(i64 a, i64 b) const;
    i64 sub(i64 a, i64 b) const;
    i64 neg(i64 a) const;
    i64 mul(i64 a, i64 b) const;
    i64 inv(i64 a) const;           // a != 0
    i64 pow(i64 a, i64 e) const;    // a != 0 for e < 0; 0^0 = 1
    i64 from_int(i64 n) const;      // n mod p, embedded in the prime subfield

    // discrete log base the primitive root: g^dlog(x) = x, x != 0
    i64 dlog(i64 x) const;
    // g^e for any integer e (reduced mod q-1)
    i64 exp(i64 e) const;

    // Tr(x) = x + x^p + ... + x^{p^{f-1}}, as an integer in [0, p)
    i64 trace(i64 x) const;
    i64 frobenius(i64 x) const;  // x^p

    const std::vector<i64>& trace_table() const { return trace_; }

private:
    friend FieldSpec make_field(i64 p, i64 f, const std::optional<std::vector<i64>>& modulus);

    std::vector<i64> decode(i64 code) const;
    i64 encode(const std::vector<i64>& coeffs) const;
    i64 mul_poly(i64 a, i64 b) const;  // table-free multiply, used at setup

    std::vector<i64> exp_;    // exp_[i] = g^i, size q-1
    std::vector<i64> dlog_;   // dlog_[code], size q; dlog_[0] = -1
    std::vector<i64> trace_;  // trace_[code], size q
};

// Builds F_{p^f}.  When f > 1 and no modulus is given, the monic irreducible
// polynomial with the smallest coefficient code is used.  Throws
// std::invalid_argument for non-prime or even p and reducible moduli, and
// budget_error when q exceeds the table budget (2^20).
FieldSpec make_field(i64 p, i64 f = 1,
                     const std::optional<std::vector<i64>>& modulus = std::nullopt);

bool is_prime(i64 n);

}  // namespace hypcount
