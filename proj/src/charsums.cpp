#include "hypcount/charsums.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace hypcount {

complexd root_of_unity(const FieldSpec& spec, i64 k) {
    const i64 n = spec.q - 1;
    k %= n;
    if (k < 0) k += n;
    return std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(n));
}

complexd mult_char(const FieldSpec& spec, i64 a, i64 x) {
    if (x == 0) return {0.0, 0.0};
    a %= spec.q - 1;  // keep a * dlog within 64 bits
    return root_of_unity(spec, a * spec.dlog(x));
}

complexd add_char(const FieldSpec& spec, i64 x) {
    return std::polar(1.0, 2.0 * std::numbers::pi * double(spec.trace(x)) / double(spec.p));
}

GaussTable::GaussTable(const FieldSpec& spec) : spec_(spec), qm1_(spec.q - 1) {
    // g(a) = sum_{m} e^{2 pi i a m/(q-1)} psi(g^m), summing over x = g^m != 0
    const i64 n = qm1_;
    std::vector<complexd> unit(n), psi(n);
    for (i64 k = 0; k < n; ++k) unit[k] = root_of_unity(spec, k);
    for (i64 m = 0; m < n; ++m) psi[m] = add_char(spec, spec.exp(m));
    g_.resize(n);
    for (i64 a = 0; a < n; ++a) {
        complexd acc{0.0, 0.0};
        for (i64 m = 0; m < n; ++m) acc += unit[a * m % n] * psi[m];
        g_[a] = acc;
    }
}

std::shared_ptr<const GaussTable> gauss_table(const FieldSpec& spec) {
    using Key = std::tuple<i64, i64, std::vector<i64>>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const GaussTable>> cache;
    Key key{spec.p, spec.f, spec.modulus};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<const GaussTable>(spec);
    cache.emplace(std::move(key), table);
    return table;
}

complexd gauss_sum(const FieldSpec& spec, i64 a) { return (*gauss_table(spec))(a); }

JacobiSum jacobi_sum(const FieldSpec& spec, const std::vector<i64>& idx) {
    const i64 r = i64(idx.size());
    if (r == 0) throw std::invalid_argument("empty index list");
    const i64 n = spec.q - 1;
    i64 total = 0;
    for (i64 a : idx) total = ((total + a) % n + n) % n;
    const bool degenerate = (total == 0);
    if (r == 1) return {complexd{1.0, 0.0}, degenerate};

    // enumerate nonzero x_1..x_{r-1}, solve x_r = 1 - sum; chi(0) = 0 drops
    // the boundary terms, so x_r = 0 tuples are skipped
    const i64 one = 1;
    complexd acc{0.0, 0.0};
    std::vector<i64> x(r - 1);
    const double count = std::pow(double(n), double(r - 1));
    if (count > 5e8) throw budget_error("jacobi_sum enumeration too large");
    i64 total_tuples = 1;
    for (i64 i = 0; i < r - 1; ++i) total_tuples *= n;
    for (i64 it = 0; it < total_tuples; ++it) {
        i64 code = it;
        i64 s = 0;
        i64 phase = 0;
        for (i64 i = 0; i < r - 1; ++i) {
            const i64 e = code % n;
            code /= n;
            const i64 xi = spec.exp(e);
            s = spec.add(s, xi);
            phase += idx[size_t(i)] % n * e % n;
        }
        const i64 xr = spec.sub(one, s);
        if (xr == 0) continue;
        phase += idx[size_t(r - 1)] % n * spec.dlog(xr) % n;
        acc += root_of_unity(spec, phase);
    }
    return {acc, degenerate};
}

complexd jacobi_ratio(const FieldSpec& spec, const std::vector<i64>& idx) {
    const i64 n = spec.q - 1;
    i64 total = 0;
    for (i64 a : idx) total = ((total + a) % n + n) % n;
    if (total == 0) throw std::invalid_argument("index sum is an integer; ratio form invalid");
    auto gt = gauss_table(spec);
    complexd num{1.0, 0.0};
    for (i64 a : idx) num *= (*gt)(a);
    return num / (*gt)(total);
}

ProductRelation hasse_davenport_product(const FieldSpec& spec, i64 d, i64 a) {
    const i64 n = spec.q - 1;
    if (d <= 0 || n % d != 0) throw std::invalid_argument("d must divide q-1");
    auto gt = gauss_table(spec);
    const i64 step = n / d;  // index of 1/d
    complexd lhs{1.0, 0.0};
    for (i64 j = 0; j < d; ++j) lhs *= (*gt)(a + j * step);
    complexd rhs = mult_char(spec, -d * a, spec.from_int(d)) * (*gt)(d * a);
    for (i64 j = 1; j < d; ++j) rhs *= (*gt)(j * step);
    return {lhs, rhs};
}

}  // namespace hypcount
