#include "hypcount/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hypcount {

namespace {

bool prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// fractional part in [0,1)
Rational frac(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt fl = num / den;
    if (num < 0 && fl * den != num) fl -= 1;
    return x - Rational(fl);
}

i64 to_i64(const BigInt& v) { return v.convert_to<i64>(); }

}  // namespace

WeightSystem::WeightSystem(const std::vector<std::pair<i64, i64>>& terms) {
    for (auto [nu, c] : terms) {
        if (nu < 1) throw std::invalid_argument("weight system indices must be >= 1");
        gamma_[nu] += c;
    }
    for (auto it = gamma_.begin(); it != gamma_.end();)
        it = (it->second == 0) ? gamma_.erase(it) : std::next(it);
    if (gamma_.empty()) throw std::invalid_argument("empty weight system");
    i64 weighted = 0, total = 0;
    for (auto [nu, c] : gamma_) {
        weighted += nu * c;
        total += c;
    }
    if (weighted != 0)
        throw std::invalid_argument("sum nu gamma_nu must vanish");
    d_ = -total;
    if (d_ <= 0) throw std::invalid_argument("d(gamma) must be positive");
}

WeightSystem WeightSystem::parse(const std::string& text) {
    std::vector<std::pair<i64, i64>> terms;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected nu:coeff pairs, got '" + item + "'");
        terms.emplace_back(std::stoll(item.substr(0, colon)),
                           std::stoll(item.substr(colon + 1)));
    }
    if (terms.empty()) throw std::invalid_argument("empty weight system spec");
    return WeightSystem(terms);
}

BigInt factorial(i64 n) {
    BigInt r = 1;
    for (i64 i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational pochhammer(const Rational& x, i64 n) {
    Rational r = 1;
    for (i64 k = 0; k < n; ++k) r *= (x + k);
    return r;
}

Rational u_coeff(const WeightSystem& gamma, i64 n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    Rational u = 1;
    for (auto [nu, c] : gamma.terms()) {
        const BigInt f = factorial(nu * n);
        for (i64 i = 0; i < std::abs(c); ++i) {
            if (c > 0)
                u *= f;
            else
                u /= f;
        }
    }
    return u;
}

std::vector<Rational> HypRationalParams::beta_presentation() const {
    std::vector<Rational> out = beta;
    auto it = std::find(out.begin(), out.end(), Rational(1));
    if (it == out.end())
        throw std::logic_error("no unit entry in the denominator parameters");
    out.erase(it);
    return out;
}

HypRationalParams extract_params(const WeightSystem& gamma) {
    std::vector<Rational> alpha, beta;
    Rational l0inv = 1;
    for (auto [nu, c] : gamma.terms()) {
        auto& dst = (c > 0) ? alpha : beta;
        for (i64 rep = 0; rep < std::abs(c); ++rep)
            for (i64 j = 1; j <= nu; ++j) dst.emplace_back(j, nu);
        // lambda0^{-1} = prod nu^{nu gamma_nu}
        const BigInt pw = boost::multiprecision::pow(BigInt(nu), unsigned(nu * std::abs(c)));
        if (c > 0)
            l0inv *= pw;
        else
            l0inv /= pw;
    }
    std::sort(alpha.begin(), alpha.end());
    std::sort(beta.begin(), beta.end());
    std::vector<Rational> a2, b2;
    size_t i = 0, j = 0;
    while (i < alpha.size() && j < beta.size()) {
        if (alpha[i] == beta[j]) {
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
    return HypRationalParams{std::move(a2), std::move(b2), std::move(l0inv)};
}

i64 landau(const WeightSystem& gamma, const Rational& x) {
    Rational v = 0;
    for (auto [nu, c] : gamma.terms()) v -= c * frac(nu * x);
    if (boost::multiprecision::denominator(v) != 1)
        throw check_error("Landau function returned a non-integer");
    return to_i64(boost::multiprecision::numerator(v));
}

bool landau_criterion(const WeightSystem& gamma) {
    // candidates: all j/nu within one period, evaluated at the point (right
    // continuity) and just after, with an exact epsilon between neighbours
    i64 lcm = 1;
    for (auto [nu, c] : gamma.terms()) lcm = std::lcm(lcm, nu);
    const Rational eps(1, 2 * lcm);
    for (auto [nu, c] : gamma.terms()) {
        for (i64 j = 0; j < nu; ++j) {
            const Rational x0(j, nu);
            if (landau(gamma, x0) < 0 || landau(gamma, x0 + eps) < 0) return false;
        }
    }
    for (i64 n = 0; n <= 200; ++n) {
        if (boost::multiprecision::denominator(u_coeff(gamma, n)) != 1)
            throw check_error("Landau criterion held but u_n is not integral");
    }
    return true;
}

i64 factorial_valuation(i64 m, i64 p) {
    i64 v = 0;
    for (i64 pk = p; pk <= m; pk *= p) {
        v += m / pk;
        if (pk > m / p) break;  // avoid overflow on the next multiply
    }
    return v;
}

ValuationIdentity valuation_identity(const WeightSystem& gamma, i64 p, i64 n) {
    if (!prime(p)) throw std::invalid_argument("p must be prime");
    i64 lhs = 0;
    for (auto [nu, c] : gamma.terms()) lhs += c * factorial_valuation(nu * n, p);
    i64 rhs = 0;
    const i64 numax = gamma.max_nu();
    for (BigInt pk = p; pk <= BigInt(numax) * n; pk *= p)
        rhs += landau(gamma, Rational(n, pk));
    return {lhs, rhs};
}

LandauReport landau_properties(const WeightSystem& gamma) {
    const auto params = extract_params(gamma);
    const i64 d = gamma.degree();

    // parameter points within [0,1): entries equal to 1 sit at 0 mod 1
    std::vector<Rational> points;
    for (const auto& a : params.alpha) points.push_back(frac(a));
    for (const auto& b : params.beta) points.push_back(frac(b));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    i64 lcm = 1;
    for (auto [nu, c] : gamma.terms()) lcm = std::lcm(lcm, nu);

    LandauReport rep;
    rep.discontinuities = points;
    rep.jumps_at_params_only = true;
    rep.counting_formula_ok = true;
    rep.integer_valued = true;
    rep.reflection_ok = true;
    rep.bounded_ok = true;

    const i64 N = 2 * lcm;  // grid k/N hits every candidate and a midpoint after it
    i64 prev = landau(gamma, Rational(0));
    for (i64 k = 0; k < N; ++k) {
        const Rational x(k, N);
        i64 val;
        try {
            val = landau(gamma, x);
        } catch (const check_error&) {
            rep.integer_valued = false;
            return rep;
        }
        if (val > d) rep.bounded_ok = false;

        // jumps happen only when (prev grid point, x] contains a parameter
        if (k > 0 && val != prev) {
            const Rational lo(k - 1, N);
            const bool has_param =
                std::any_of(points.begin(), points.end(),
                            [&](const Rational& t) { return lo < t && t <= x; });
            if (!has_param) rep.jumps_at_params_only = false;
        }
        prev = val;

        // counting formula with parameters in (0,1]
        i64 expect = 0;
        for (const auto& a : params.alpha)
            if (a <= x) ++expect;
        for (const auto& b : params.beta)
            if (Rational(0) < b && b <= x) --expect;
        if (val != expect) rep.counting_formula_ok = false;

        // reflection away from discontinuities (x and 1-x both off-parameter)
        const Rational mx = frac(-x);
        const bool on_param = std::binary_search(points.begin(), points.end(), x) ||
                              std::binary_search(points.begin(), points.end(), mx);
        if (!on_param && landau(gamma, mx) != d - val) rep.reflection_ok = false;
    }
    return rep;
}

}  // namespace hypcount
