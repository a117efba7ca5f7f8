#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "hypcount/ffield.hpp"

namespace hypcount {

using complexd = std::complex<double>;

// Multiplicative characters of F_q^* are indexed by a mod (q-1): the index a
// stands for s = a/(q-1) in (1/(q-1))Z/Z, and chi_s sends the fixed
// primitive root g to e^{2 pi i a/(q-1)}.  chi_s(0) = 0 for every s,
// including s = 0.

// e^{2 pi i k/(q-1)}
complexd root_of_unity(const FieldSpec& spec, i64 k);

// chi_s(x) with s = a/(q-1)
complexd mult_char(const FieldSpec& spec, i64 a, i64 x);

// psi(x) = e^{2 pi i Tr(x)/p}
complexd add_char(const FieldSpec& spec, i64 x);

// All Gauss sums g(s) = sum_x chi_s(x) psi(x) of a field, built once (O(q^2)).
// Owns a copy of the field so cached tables outlive their creators.
// Immutable after construction; share freely between threads.
class GaussTable {
public:
    explicit GaussTable(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    complexd operator()(i64 a) const {
        a %= qm1_;
        if (a < 0) a += qm1_;
        return g_[a];
    }

private:
    FieldSpec spec_;
    i64 qm1_;
    std::vector<complexd> g_;
};

// g(s) through a process-wide cache keyed by (p, f, modulus); the table for a
// field is built once under a lock and read concurrently afterwards.
complexd gauss_sum(const FieldSpec& spec, i64 a);
std::shared_ptr<const GaussTable> gauss_table(const FieldSpec& spec);

struct JacobiSum {
    complexd value;       // direct-form value, always computed
    bool degenerate;      // sum of the indices was an integer (ratio form invalid)
};

// J(s_1,...,s_r) = sum over x_1+...+x_r = 1 of prod chi_{s_i}(x_i); J(s_1) = 1.
// Cost O(q^{r-1}).
JacobiSum jacobi_sum(const FieldSpec& spec, const std::vector<i64>& idx);

// g(s_1)...g(s_r)/g(s_1+...+s_r); requires the index sum nonzero mod q-1.
complexd jacobi_ratio(const FieldSpec& spec, const std::vector<i64>& idx);

// Hasse-Davenport product relation, d | q-1:
//   lhs = prod_{j=0}^{d-1} g(s + j/d)
//   rhs = chi_{-ds}(d) g(ds) prod_{j=1}^{d-1} g(j/d)
struct ProductRelation {
    complexd lhs, rhs;
};
ProductRelation hasse_davenport_product(const FieldSpec& spec, i64 d, i64 a);

}  // namespace hypcount
