#include "hypcount/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypcount {

namespace {

constexpr i64 kTableBudget = i64(1) << 20;

// dense polynomials over F_p, lowest coefficient first
using Poly = std::vector<i64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

Poly poly_mod(Poly a, const Poly& m, i64 p) {
    // m monic
    trim(a);
    const i64 dm = i64(m.size()) - 1;
    while (i64(a.size()) - 1 >= dm) {
        const i64 shift = i64(a.size()) - 1 - dm;
        const i64 c = a.back();
        for (i64 i = 0; i <= dm; ++i) {
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_powmod(Poly base, i64 e, const Poly& m, i64 p) {
    Poly r = {1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, reduce a mod b
        const i64 lead_inv = [&] {
            i64 x = b.back(), r = 1, e = p - 2;  // Fermat
            while (e) {
                if (e & 1) r = r * x % p;
                x = x * x % p;
                e >>= 1;
            }
            return r;
        }();
        Poly bm = b;
        for (auto& c : bm) c = c * lead_inv % p;
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool has_root(const Poly& m, i64 p) {
    for (i64 x = 0; x < p; ++x) {
        i64 v = 0;
        for (auto it = m.rbegin(); it != m.rend(); ++it) v = (v * x + *it) % p;
        if (v == 0) return true;
    }
    return false;
}

bool is_irreducible(const Poly& m, i64 p) {
    const i64 f = i64(m.size()) - 1;
    if (f <= 0) return false;
    if (f == 1) return true;
    if (f <= 3) return !has_root(m, p);
    // no irreducible factor of degree <= f/2: gcd(x^{p^i} - x, m) constant
    Poly xp = {0, 1};
    for (i64 i = 1; i <= f / 2; ++i) {
        xp = poly_powmod(std::move(xp), p, m, p);
        Poly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        trim(diff);
        Poly g = poly_gcd(diff, m, p);
        if (i64(g.size()) - 1 >= 1) return false;
    }
    return true;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> fs;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<i64> FieldSpec::decode(i64 code) const {
    std::vector<i64> c(f, 0);
    for (i64 i = 0; i < f; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

i64 FieldSpec::encode(const std::vector<i64>& coeffs) const {
    i64 code = 0;
    for (i64 i = f - 1; i >= 0; --i)
        code = code * p + (i < i64(coeffs.size()) ? coeffs[i] : 0);
    return code;
}

i64 FieldSpec::add(i64 a, i64 b) const {
    if (f == 1) return (a + b) % p;
    i64 code = 0, mul = 1;
    for (i64 i = 0; i < f; ++i) {
        code += (a % p + b % p) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return code;
}

i64 FieldSpec::neg(i64 a) const {
    if (f == 1) return (p - a) % p;
    i64 code = 0, mul = 1;
    for (i64 i = 0; i < f; ++i) {
        code += (p - a % p) % p * mul;
        a /= p;
        mul *= p;
    }
    return code;
}

i64 FieldSpec::sub(i64 a, i64 b) const { return add(a, neg(b)); }

i64 FieldSpec::mul(i64 a, i64 b) const {
    if (a == 0 || b == 0) return 0;
    i64 e = dlog_[a] + dlog_[b];
    if (e >= q - 1) e -= q - 1;
    return exp_[e];
}

i64 FieldSpec::inv(i64 a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const i64 e = dlog_[a];
    return exp_[e == 0 ? 0 : q - 1 - e];
}

i64 FieldSpec::pow(i64 a, i64 e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    i64 m = dlog_[a] % (q - 1) * (e % (q - 1)) % (q - 1);
    if (m < 0) m += q - 1;
    return exp_[m];
}

i64 FieldSpec::from_int(i64 n) const {
    n %= p;
    if (n < 0) n += p;
    return n;
}

i64 FieldSpec::dlog(i64 x) const {
    if (x == 0) throw std::domain_error("dlog(0)");
    return dlog_[x];
}

i64 FieldSpec::exp(i64 e) const {
    e %= (q - 1);
    if (e < 0) e += q - 1;
    return exp_[e];
}

i64 FieldSpec::frobenius(i64 x) const {
    if (x == 0) return 0;
    return exp_[dlog_[x] * p % (q - 1)];
}

i64 FieldSpec::trace(i64 x) const { return trace_[x]; }

i64 FieldSpec::mul_poly(i64 a, i64 b) const {
    if (f == 1) return a * b % p;
    Poly pa = decode(a), pb = decode(b);
    trim(pa);
    trim(pb);
    return encode(poly_mod(poly_mul(pa, pb, p), modulus, p));
}

FieldSpec make_field(i64 p, i64 f, const std::optional<std::vector<i64>>& modulus) {
    if (p <= 2 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (f < 1) throw std::invalid_argument("extension degree must be >= 1");

    i64 q = 1;
    for (i64 i = 0; i < f; ++i) {
        q *= p;
        if (q > kTableBudget)
            throw budget_error("q = p^f exceeds the table budget 2^20");
    }

    FieldSpec spec;
    spec.p = p;
    spec.f = f;
    spec.q = q;

    if (f == 1) {
        if (modulus)
            throw std::invalid_argument("a modulus is only meaningful for f > 1");
    } else if (modulus) {
        Poly m = *modulus;
        trim(m);
        if (i64(m.size()) - 1 != f || m.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree f");
        for (auto& c : m) c = (c % p + p) % p;
        if (!is_irreducible(m, p)) throw std::invalid_argument("modulus is reducible");
        spec.modulus = m;
    } else {
        // smallest monic irreducible by coefficient code
        for (i64 n = 0; n < q; ++n) {
            Poly m(f + 1, 0);
            i64 t = n;
            for (i64 i = 0; i < f; ++i) {
                m[i] = t % p;
                t /= p;
            }
            m[f] = 1;
            if (is_irreducible(m, p)) {
                spec.modulus = m;
                break;
            }
        }
        if (spec.modulus.empty()) throw std::logic_error("no irreducible polynomial found");
    }

    // smallest generator of F_q^*, checked against the prime factors of q-1
    const auto factors = prime_factors(q - 1);
    auto pow_nt = [&](i64 a, i64 e) {
        i64 r = 1;
        while (e) {
            if (e & 1) r = spec.mul_poly(r, a);
            a = spec.mul_poly(a, a);
            e >>= 1;
        }
        return r;
    };
    i64 g = 0;
    for (i64 cand = 2; cand < q; ++cand) {
        bool ok = true;
        for (i64 r : factors) {
            if (pow_nt(cand, (q - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw std::logic_error("no primitive root found");
    spec.generator = g;

    spec.exp_.resize(q - 1);
    spec.dlog_.assign(q, -1);
    i64 cur = 1;
    for (i64 i = 0; i < q - 1; ++i) {
        spec.exp_[i] = cur;
        if (spec.dlog_[cur] != -1) throw std::logic_error("generator order too small");
        spec.dlog_[cur] = i;
        cur = spec.mul_poly(cur, g);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");

    spec.trace_.resize(q);
    for (i64 x = 0; x < q; ++x) {
        i64 acc = x, t = x;
        for (i64 i = 1; i < f; ++i) {
            t = (t == 0) ? 0 : spec.exp_[spec.dlog_[t] * p % (q - 1)];
            acc = spec.add(acc, t);
        }
        if (acc >= p) throw std::logic_error("trace left the prime subfield");
        spec.trace_[x] = acc;
    }

    return spec;
}

}  // namespace hypcount
