#pragma once

#include <vector>

#include "hypcount/katz.hpp"

namespace hypcount {

inline constexpr i64 kDefaultPointBudget = 100'000'000;

// Monomial deformation of a diagonal hypersurface in P^{n-1}:
//   x_1^d + ... + x_n^d - d lambda x_1^{h_1} ... x_n^{h_n} = 0
// with sum h_i = d and gcd(d, h_1, ..., h_n) = 1.  lambda is an integer,
// reduced into each field it is counted over.
struct DeformationFamily {
    i64 d = 0;
    i64 n = 0;
    std::vector<i64> h;
    i64 lambda = 0;

    void validate() const;  // throws std::invalid_argument
};

// Exponent tuples W = { w in [0,d)^n : sum w_i = 0 mod d }, partitioned into
// equivalence classes w ~ w + k h (mod d).  Every class has exactly d members.
struct WClass {
    std::vector<i64> rep;                   // lexicographically smallest member
    std::vector<std::vector<i64>> members;  // all d members, sorted
    std::vector<i64> type_key;              // smallest sorted member; classes with
                                            // equal keys are permutations of each other
};

struct WSet {
    i64 d = 0, n = 0;
    std::vector<i64> h;
    i64 size = 0;                 // |W| = d^{n-1}
    std::vector<WClass> classes;  // sorted by representative
};

WSet build_wset(i64 d, i64 n, const std::vector<i64>& h);

// Counts points of P^{n-1}(F_q) satisfying pred, one representative per line:
// the first nonzero coordinate is normalized to 1.  pred takes a coordinate
// vector of n codes.
template <class Pred>
i64 projective_count_serial(const FieldSpec& spec, i64 n, Pred&& pred) {
    const i64 q = spec.q;
    i64 count = 0;
    std::vector<i64> x(size_t(n), 0);
    for (i64 patch = 0; patch < n; ++patch) {
        std::fill(x.begin(), x.end(), 0);
        x[size_t(patch)] = 1;
        const i64 nfree = n - 1 - patch;
        i64 total = 1;
        for (i64 i = 0; i < nfree; ++i) total *= q;
        for (i64 it = 0; it < total; ++it) {
            i64 code = it;
            for (i64 i = 0; i < nfree; ++i) {
                x[size_t(patch + 1 + i)] = code % q;
                code /= q;
            }
            if (pred(x)) ++count;
        }
    }
    return count;
}

template <class Pred>
i64 projective_count(const FieldSpec& spec, i64 n, Pred&& pred) {
    const i64 q = spec.q;
    constexpr i64 kChunk = 8192;
    i64 count = 0;
    for (i64 patch = 0; patch < n; ++patch) {
        const i64 nfree = n - 1 - patch;
        i64 total = 1;
        for (i64 i = 0; i < nfree; ++i) total *= q;
        const i64 nchunks = (total + kChunk - 1) / kChunk;
        i64 patch_count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : patch_count)
#endif
        for (i64 c = 0; c < nchunks; ++c) {
            std::vector<i64> x(size_t(n), 0);
            x[size_t(patch)] = 1;
            const i64 lo = c * kChunk;
            const i64 hi = std::min(total, lo + kChunk);
            i64 code = lo;
            for (i64 i = 0; i < nfree; ++i) {
                x[size_t(patch + 1 + i)] = code % q;
                code /= q;
            }
            for (i64 it = lo; it < hi; ++it) {
                if (pred(x)) ++patch_count;
                for (i64 i = 0; i < nfree; ++i) {
                    if (++x[size_t(patch + 1 + i)] < q) break;
                    x[size_t(patch + 1 + i)] = 0;
                }
            }
        }
        count += patch_count;
    }
    return count;
}

// Exact projective point count of the deformed hypersurface; works for any
// lambda, including lambda = 0 and singular fibers.  Cost O(q^{n-1}).
i64 brute_count(const DeformationFamily& fam, const FieldSpec& spec,
                i64 budget = kDefaultPointBudget);
i64 brute_count_serial(const DeformationFamily& fam, const FieldSpec& spec,
                       i64 budget = kDefaultPointBudget);

// Legendre curve y^2 z = x (x - z)(x - lambda z) in P^2, by enumeration.
i64 legendre_count(const FieldSpec& spec, i64 lambda, i64 budget = kDefaultPointBudget);

// One character component ofthe diagonal count (d | q-1, w in W):
//   all w_i = 0:  (q^{n-1} - 1)/(q - 1)
//   all w_i != 0: -(1/q) g(w_1/d)...g(w_n/d)/g((w_1+...+w_n)/d)
//   otherwise:    0
complexd weil_component(const FieldSpec& spec, i64 d, i64 n, const std::vector<i64>& w);

// Point count of the diagonal hypersurface x_1^d + ... + x_n^d = 0, summing
// weil_component over all of W and rounding (abort if further than 1e-4 from
// an integer).
i64 diagonal_count(const FieldSpec& spec, i64 d, i64 n);

// Per-class partial sum of the Gauss-sum count formula, summed over the full
// character group:
//   (1/(q-1)) sum_{s in (1/(q-1))Z/Z} g(h_1 s + w_1/d)...g(h_n s + w_n/d)
//             / g(ds) * chi_{ds}(d lambda)
complexd koblitz_class_partial(const GaussTable& gt, const DeformationFamily& fam,
                               const std::vector<i64>& w);

struct CountReport {
    i64 n_brute = 0;
    i64 n_diagonal = 0;
    complexd n_koblitz{0.0, 0.0};
    i64 n_koblitz_rounded = 0;
    std::vector<complexd> class_partials;  // aligned with wset.classes
    WSet wset;
    bool match = false;  // n_koblitz_rounded == n_brute
};

// Evaluates the Gauss-sum count formula N(lambda) = N(0) + sum of class
// partials (d | q-1, lambda != 0 in the field), rounds it, and compares with
// the brute-force count.
CountReport koblitz_count(const DeformationFamily& fam, const FieldSpec& spec,
                          i64 budget = kDefaultPointBudget);

// Per-class comparison of the count-formula partial sum against the value of
// a finite-field hypergeometric function.  Requires d h_1 ... h_n | q-1 and
// lambda != 0.  For a class with representative w, the H parameters are
//   numerator:   0, 1/d, ..., (d-1)/d
//   denominator: 1 - (w_i + d j)/(d h_i),  j = 0..h_i-1  for each i
// with coincident entries cancelled (c pairs), at argument
//   (-1)^c prod h_i^{h_i} (-lambda)^d,
// and the expected modulus ratio is |partial| / |H| = q^{(n-2d-1)/2 + c}.
struct ClassHypReport {
    std::vector<i64> rep;
    complexd partial{0.0, 0.0};
    std::vector<i64> alpha, beta;  // surviving parameter indices
    i64 cancelled = 0;
    i64 t_code = 0;
    complexd H{0.0, 0.0};
    double expected_ratio = 0.0;
    double ratio = 0.0;     // |partial| / |H| when testable
    complexd xi{0.0, 0.0};  // partial / (q^e H), observed root of unity
    bool testable = false;  // |H| > 1e-6
    bool empty_params = false;
};

std::vector<ClassHypReport> hyp_decomposition(const DeformationFamily& fam,
                                              const FieldSpec& spec);

}  // namespace hypcount
