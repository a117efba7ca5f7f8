#include "hypcount/katz.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypcount {

namespace {

struct DirectSum {
    const FieldSpec* spec;
    i64 nvars;            // n + m
    i64 nx;               // number of x coordinates
    i64 Q;                // q - 1
    std::vector<i64> chi;     // per-variable character index (alpha_i, then -beta_j)
    std::vector<i64> sign;    // +1 for x block, -1 for y block
    i64 dlog_t;
    std::vector<complexd> unit;  // e^{2 pi i k/Q}
    std::vector<complexd> psi;   // psi(code), indexed by element code

    // one V_t point from the exponents of the free coordinates
    complexd term(const std::vector<i64>& e_free) const {
        // solve the last coordinate from prod x = t prod y
        i64 bal = 0;  // sum of x-exponents minus y-exponents over free coords
        for (i64 i = 0; i < nvars - 1; ++i) bal += sign[i] * e_free[i];
        i64 last = (nvars - 1 < nx) ? (dlog_t - bal) : (bal - dlog_t);
        last %= Q;
        if (last < 0) last += Q;

        i64 fsum = 0;   // sum x - sum y in F_q
        i64 phase = 0;  // sum chi-index * dlog
        for (i64 i = 0; i < nvars - 1; ++i) {
            const i64 code = spec->exp(e_free[i]);
            fsum = (sign[i] > 0) ? spec->add(fsum, code) : spec->sub(fsum, code);
            phase = (phase + chi[i] * e_free[i]) % Q;
        }
        const i64 code = spec->exp(last);
        fsum = (sign[nvars - 1] > 0) ? spec->add(fsum, code) : spec->sub(fsum, code);
        phase = (phase + chi[nvars - 1] * last) % Q;
        if (phase < 0) phase += Q;
        return psi[fsum] * unit[phase];
    }
};

DirectSum prepare(const FieldSpec& spec, const HypParams& params) {
    if (params.t == 0) throw std::invalid_argument("t must be nonzero");
    const i64 n = i64(params.alpha.size()), m = i64(params.beta.size());
    if (n + m > 5 || spec.q > 31)
        throw budget_error("direct evaluation accepted only for n+m <= 5 at q <= 31");
    DirectSum ds;
    ds.spec = &spec;
    ds.nvars = n + m;
    ds.nx = n;
    ds.Q = spec.q - 1;
    for (i64 a : params.alpha) {
        ds.chi.push_back(((a % ds.Q) + ds.Q) % ds.Q);
        ds.sign.push_back(+1);
    }
    for (i64 b : params.beta) {
        ds.chi.push_back(((-b % ds.Q) + ds.Q) % ds.Q);
        ds.sign.push_back(-1);
    }
    ds.dlog_t = spec.dlog(params.t);
    ds.unit.resize(ds.Q);
    for (i64 k = 0; k < ds.Q; ++k) ds.unit[k] = root_of_unity(spec, k);
    ds.psi.resize(spec.q);
    for (i64 c = 0; c < spec.q; ++c) ds.psi[c] = add_char(spec, c);
    return ds;
}

}  // namespace

complexd hyp_direct_serial(const FieldSpec& spec, const HypParams& params) {
    const DirectSum ds = prepare(spec, params);
    if (ds.nvars == 0) return params.t == 1 ? complexd{1.0, 0.0} : complexd{0.0, 0.0};

    const i64 nfree = ds.nvars - 1;
    i64 total = 1;
    for (i64 i = 0; i < nfree; ++i) total *= ds.Q;
    std::vector<i64> e(nfree, 0);
    complexd acc{0.0, 0.0};
    for (i64 it = 0; it < total; ++it) {
        acc += ds.term(e);
        for (i64 i = 0; i < nfree; ++i) {
            if (++e[i] < ds.Q) break;
            e[i] = 0;
        }
    }
    return acc;
}

complexd hyp_direct(const FieldSpec& spec, const HypParams& params) {
    const DirectSum ds = prepare(spec, params);
    if (ds.nvars == 0) return params.t == 1 ? complexd{1.0, 0.0} : complexd{0.0, 0.0};

    const i64 nfree = ds.nvars - 1;
    i64 total = 1;
    for (i64 i = 0; i < nfree; ++i) total *= ds.Q;

    // fixed chunk size and a left-to-right merge keep the float reduction
    // order independent of the thread count
    constexpr i64 kChunk = 4096;
    const i64 nchunks = (total + kChunk - 1) / kChunk;
    std::vector<complexd> partial(nchunks, complexd{0.0, 0.0});

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (i64 c = 0; c < nchunks; ++c) {
        const i64 lo = c * kChunk;
        const i64 hi = std::min(total, lo + kChunk);
        std::vector<i64> e(nfree, 0);
        i64 idx = lo;
        for (i64 i = 0; i < nfree; ++i) {
            e[i] = idx % ds.Q;
            idx /= ds.Q;
        }
        complexd acc{0.0, 0.0};
        for (i64 it = lo; it < hi; ++it) {
            acc += ds.term(e);
            for (i64 i = 0; i < nfree; ++i) {
                if (++e[i] < ds.Q) break;
                e[i] = 0;
            }
        }
        partial[c] = acc;
    }

    complexd acc{0.0, 0.0};
    for (const auto& v : partial) acc += v;
    return acc;
}

complexd hyp_fourier(const GaussTable& gt, const HypParams& params) {
    const FieldSpec& spec = gt.spec();
    if (params.t == 0) throw std::invalid_argument("t must be nonzero");
    const i64 Q = spec.q - 1;
    const i64 dlt = spec.dlog(params.t);
    complexd acc{0.0, 0.0};
    for (i64 s = 0; s < Q; ++s) {
        complexd prod{1.0, 0.0};
        for (i64 a : params.alpha) prod *= gt(s + a);
        for (i64 b : params.beta) prod *= std::conj(gt(s + b));
        acc += prod * std::conj(root_of_unity(spec, s * dlt));
    }
    return acc / double(Q);
}

complexd hyp_fourier(const FieldSpec& spec, const HypParams& params) {
    return hyp_fourier(*gauss_table(spec), params);
}

}  // namespace hypcount
