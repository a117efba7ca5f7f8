#include "hypcount/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypcount {

namespace {

i64 round_to_integer(complexd z, double slack, const char* what) {
    const double r = std::round(z.real());
    if (std::abs(z.real() - r) > slack || std::abs(z.imag()) > slack)
        throw check_error(std::string(what) + " did not round to an integer: re=" +
                          std::to_string(z.real()) + " im=" + std::to_string(z.imag()));
    return i64(r);
}

// x^e tables over all codes; 0^0 = 1 so absent variables (h_i = 0) are inert
std::vector<i64> power_table(const FieldSpec& spec, i64 e) {
    std::vector<i64> t(size_t(spec.q));
    t[0] = (e == 0) ? 1 : 0;
    for (i64 x = 1; x < spec.q; ++x) t[size_t(x)] = spec.pow(x, e);
    return t;
}

i64 checked_budget(const FieldSpec& spec, i64 n, i64 budget) {
    i64 total = 0, patch_size = 1;
    for (i64 i = 0; i < n; ++i) {
        total += patch_size;
        if (total > budget) throw budget_error("projective enumeration exceeds point budget");
        if (patch_size > budget) throw budget_error("projective enumeration exceeds point budget");
        patch_size *= spec.q;
    }
    return total;
}

}  // namespace

void DeformationFamily::validate() const {
    if (d < 2) throw std::invalid_argument("degree d must be >= 2");
    if (n < 2) throw std::invalid_argument("need n >= 2 variables");
    if (i64(h.size()) != n) throw std::invalid_argument("h must have n entries");
    i64 sum = 0, g = d;
    for (i64 hi : h) {
        if (hi < 0) throw std::invalid_argument("h entries must be >= 0");
        sum += hi;
        g = std::gcd(g, hi);
    }
    if (sum != d) throw std::invalid_argument("sum of h must equal d");
    if (g != 1) throw std::invalid_argument("gcd(d, h_1, ..., h_n) must be 1");
}

WSet build_wset(i64 d, i64 n, const std::vector<i64>& h) {
    DeformationFamily fam{d, n, h, 0};
    fam.validate();

    WSet ws;
    ws.d = d;
    ws.n = n;
    ws.h = h;
    i64 size = 1;
    for (i64 i = 0; i < n - 1; ++i) size *= d;
    ws.size = size;

    std::map<std::vector<i64>, bool> seen;
    std::vector<i64> w(size_t(n), 0);
    for (i64 it = 0; it < size; ++it) {
        i64 code = it, s = 0;
        for (i64 i = 0; i < n - 1; ++i) {
            w[size_t(i)] = code % d;
            s += w[size_t(i)];
            code /= d;
        }
        w[size_t(n - 1)] = (d - s % d) % d;
        if (seen.count(w)) continue;

        WClass cls;
        std::vector<i64> cur = w;
        for (i64 k = 0; k < d; ++k) {
            seen[cur] = true;
            cls.members.push_back(cur);
            for (i64 i = 0; i < n; ++i) cur[size_t(i)] = (cur[size_t(i)] + h[size_t(i)]) % d;
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.rep = cls.members.front();
        std::vector<i64> key;
        for (const auto& m : cls.members) {
            std::vector<i64> sorted = m;
            std::sort(sorted.begin(), sorted.end());
            if (key.empty() || sorted < key) key = sorted;
        }
        cls.type_key = key;
        ws.classes.push_back(std::move(cls));
    }
    std::sort(ws.classes.begin(), ws.classes.end(),
              [](const WClass& a, const WClass& b) { return a.rep < b.rep; });
    return ws;
}

namespace {

struct FamilyEvaluator {
    const FieldSpec* spec;
    const DeformationFamily* fam;
    std::vector<std::vector<i64>> pow_h;
    std::vector<i64> pow_d;
    i64 dlam;

    FamilyEvaluator(const DeformationFamily& f, const FieldSpec& s) : spec(&s), fam(&f) {
        pow_d = power_table(s, f.d);
        for (i64 hi : f.h) pow_h.push_back(power_table(s, hi));
        dlam = s.mul(s.from_int(f.d), s.from_int(f.lambda));
    }

    bool operator()(const std::vector<i64>& x) const {
        i64 s = 0, mon = 1;
        for (size_t i = 0; i < x.size(); ++i) {
            s = spec->add(s, pow_d[x[i]]);
            mon = spec->mul(mon, pow_h[i][x[i]]);
        }
        return spec->sub(s, spec->mul(dlam, mon)) == 0;
    }
};

}  // namespace

i64 brute_count(const DeformationFamily& fam, const FieldSpec& spec, i64 budget) {
    fam.validate();
    checked_budget(spec, fam.n, budget);
    FamilyEvaluator eval(fam, spec);
    return projective_count(spec, fam.n, eval);
}

i64 brute_count_serial(const DeformationFamily& fam, const FieldSpec& spec, i64 budget) {
    fam.validate();
    checked_budget(spec, fam.n, budget);
    FamilyEvaluator eval(fam, spec);
    return projective_count_serial(spec, fam.n, eval);
}

i64 legendre_count(const FieldSpec& spec, i64 lambda, i64 budget) {
    checked_budget(spec, 3, budget);
    const i64 lam = spec.from_int(lambda);
    auto cubic = [&](const std::vector<i64>& v) {
        const i64 x = v[0], y = v[1], z = v[2];
        const i64 lhs = spec.mul(spec.mul(y, y), z);
        const i64 rhs =
            spec.mul(spec.mul(x, spec.sub(x, z)), spec.sub(x, spec.mul(lam, z)));
        return spec.sub(lhs, rhs) == 0;
    };
    return projective_count(spec, 3, cubic);
}

complexd weil_component(const FieldSpec& spec, i64 d, i64 n, const std::vector<i64>& w) {
    const i64 Q = spec.q - 1;
    if (d <= 0 || Q % d != 0) throw std::invalid_argument("d must divide q-1");
    if (i64(w.size()) != n) throw std::invalid_argument("w must have n entries");
    bool all_zero = true, all_nonzero = true;
    for (i64 wi : w) (wi == 0 ? all_nonzero : all_zero) = false;
    if (all_zero) {
        double v = 1.0;
        for (i64 i = 0; i < n - 1; ++i) v *= double(spec.q);
        return complexd{(v - 1.0) / double(Q), 0.0};
    }
    if (!all_nonzero) return complexd{0.0, 0.0};
    auto gt = gauss_table(spec);
    complexd prod{1.0, 0.0};
    i64 idx_sum = 0;
    for (i64 wi : w) {
        prod *= (*gt)(wi * (Q / d));
        idx_sum += wi * (Q / d);
    }
    return -prod / (*gt)(idx_sum) / double(spec.q);
}

i64 diagonal_count(const FieldSpec& spec, i64 d, i64 n) {
    const i64 Q = spec.q - 1;
    if (d <= 0 || Q % d != 0) throw std::invalid_argument("d must divide q-1");
    i64 size = 1;
    for (i64 i = 0; i < n - 1; ++i) size *= d;
    complexd acc{0.0, 0.0};
    std::vector<i64> w(size_t(n), 0);
    for (i64 it = 0; it < size; ++it) {
        i64 code = it, s = 0;
        for (i64 i = 0; i < n - 1; ++i) {
            w[size_t(i)] = code % d;
            s += w[size_t(i)];
            code /= d;
        }
        w[size_t(n - 1)] = (d - s % d) % d;
        acc += weil_component(spec, d, n, w);
    }
    return round_to_integer(acc, 1e-4, "diagonal count");
}

complexd koblitz_class_partial(const GaussTable& gt, const DeformationFamily& fam,
                               const std::vector<i64>& w) {
    const FieldSpec& spec = gt.spec();
    const i64 Q = spec.q - 1;
    const i64 step = Q / fam.d;  // index of 1/d
    const i64 dlam = spec.mul(spec.from_int(fam.d), spec.from_int(fam.lambda));
    const i64 dl = spec.dlog(dlam);

    complexd acc{0.0, 0.0};
    for (i64 t = 0; t < Q; ++t) {
        complexd num{1.0, 0.0};
        for (i64 i = 0; i < fam.n; ++i)
            num *= gt(w[size_t(i)] * step + t * fam.h[size_t(i)]);
        const complexd den = gt(fam.d * t);
        acc += num / den * root_of_unity(spec, fam.d * t % Q * dl);
    }
    return acc / double(Q);
}

CountReport koblitz_count(const DeformationFamily& fam, const FieldSpec& spec, i64 budget) {
    fam.validate();
    const i64 Q = spec.q - 1;
    if (Q % fam.d != 0) throw std::invalid_argument("d must divide q-1");
    if (spec.from_int(fam.lambda) == 0)
        throw std::invalid_argument("lambda vanishes in this field; the formula needs lambda != 0");

    CountReport rep;
    rep.wset = build_wset(fam.d, fam.n, fam.h);
    rep.n_diagonal = diagonal_count(spec, fam.d, fam.n);

    auto gt = gauss_table(spec);
    complexd acc{double(rep.n_diagonal), 0.0};
    for (const auto& cls : rep.wset.classes) {
        const complexd partial = koblitz_class_partial(*gt, fam, cls.rep);
        rep.class_partials.push_back(partial);
        acc += partial;
    }
    rep.n_koblitz = acc;
    rep.n_koblitz_rounded = round_to_integer(acc, 1e-4, "count formula");
    rep.n_brute = brute_count(fam, spec, budget);
    rep.match = (rep.n_koblitz_rounded == rep.n_brute);
    return rep;
}

std::vector<ClassHypReport> hyp_decomposition(const DeformationFamily& fam,
                                              const FieldSpec& spec) {
    fam.validate();
    const i64 Q = spec.q - 1;
    i64 hyp = fam.d;
    for (i64 hi : fam.h) hyp *= hi;
    if (hyp == 0 || Q % hyp != 0)
        throw std::invalid_argument("requires d h_1 ... h_n | q-1");
    const i64 lam = spec.from_int(fam.lambda);
    if (lam == 0) throw std::invalid_argument("lambda must be nonzero in the field");

    auto gt = gauss_table(spec);
    const WSet ws = build_wset(fam.d, fam.n, fam.h);

    std::vector<ClassHypReport> out;
    for (const auto& cls : ws.classes) {
        ClassHypReport r;
        r.rep = cls.rep;
        r.partial = koblitz_class_partial(*gt, fam, cls.rep);

        std::vector<i64> alpha, beta;
        for (i64 j = 0; j < fam.d; ++j) alpha.push_back(j * (Q / fam.d));
        for (i64 i = 0; i < fam.n; ++i) {
            const i64 hi = fam.h[size_t(i)];
            for (i64 j = 0; j < hi; ++j) {
                const i64 theta = (cls.rep[size_t(i)] + fam.d * j) * (Q / (fam.d * hi));
                beta.push_back((Q - theta % Q) % Q);
            }
        }
        std::sort(alpha.begin(), alpha.end());
        std::sort(beta.begin(), beta.end());
        // cancel coincident numerator/denominator entries
        std::vector<i64> a2, b2;
        size_t i = 0, j = 0;
        while (i < alpha.size() && j < beta.size()) {
            if (alpha[i] == beta[j]) {
                ++r.cancelled;
                ++i;
                ++j;
            } else if (alpha[i] < beta[j]) {
                a2.push_back(alpha[i++]);
            } else {
                b2.push_back(beta[j++]);
            }
        }
        while (i < alpha.size()) a2.push_back(alpha[i++]);
        while (j < beta.size()) b2.push_back(beta[j++]);
        r.alpha = std::move(a2);
        r.beta = std::move(b2);
        r.empty_params = r.alpha.empty() && r.beta.empty();

        i64 t = spec.pow(spec.from_int(-1), r.cancelled + fam.d);
        for (i64 hi : fam.h)
            if (hi > 0) t = spec.mul(t, spec.pow(spec.from_int(hi), hi));
        t = spec.mul(t, spec.pow(lam, fam.d));
        r.t_code = t;

        r.H = hyp_fourier(*gt, HypParams{r.alpha, r.beta, t});
        const double e = double(fam.n - 2 * fam.d - 1) / 2.0 + double(r.cancelled);
        r.expected_ratio = std::pow(double(spec.q), e);
        r.testable = std::abs(r.H) > 1e-6;
        if (r.testable) {
            r.ratio = std::abs(r.partial) / std::abs(r.H);
            r.xi = r.partial / (r.expected_ratio * r.H);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hypcount
