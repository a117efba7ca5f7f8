#include "hypcount/padic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypcount {

namespace {

constexpr i64 kMaxModulus = 20'000'000;  // gamma tables are O(p^k)

i64 mulmod(i64 a, i64 b, i64 m) {
    return i64((unsigned __int128)(u64)a * (u64)b % (u64)m);
}

bool prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 checked_pk(i64 p, int k) {
    if (p <= 2 || !prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (k < 1) throw std::invalid_argument("precision k must be >= 1");
    i64 pk = 1;
    for (int i = 0; i < k; ++i) {
        pk *= p;
        if (pk > kMaxModulus) throw budget_error("p^k exceeds the precision budget");
    }
    return pk;
}

}  // namespace

i64 pow_mod(i64 base, i64 exp, i64 mod) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    base %= mod;
    if (base < 0) base += mod;
    i64 r = 1 % mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

i64 inv_mod(i64 a, i64 mod) {
    a %= mod;
    if (a < 0) a += mod;
    i64 g = mod, x = 0, x1 = 1, a1 = a;
    while (a1) {
        const i64 q = g / a1;
        x -= q * x1;
        std::swap(x, x1);
        g -= q * a1;
        std::swap(g, a1);
    }
    if (g != 1) throw std::domain_error("not invertible: gcd != 1");
    x %= mod;
    if (x < 0) x += mod;
    return x;
}

PadicInt::PadicInt(i64 p, int k, i64 value) : p_(p), k_(k), pk_(checked_pk(p, k)) {
    r_ = value % pk_;
    if (r_ < 0) r_ += pk_;
}

PadicInt PadicInt::reduced(int k_new) const {
    if (k_new > k_) throw std::invalid_argument("cannot raise precision");
    return PadicInt(p_, k_new, r_);
}

namespace {
// the lower-precision operand; precisions mix by taking the minimum
const PadicInt& coarser(const PadicInt& a, const PadicInt& b) {
    if (a.p() != b.p()) throw std::invalid_argument("mixed primes");
    return a.k() <= b.k() ? a : b;
}
}  // namespace

PadicInt PadicInt::operator+(const PadicInt& o) const {
    const PadicInt& c = coarser(*this, o);
    return PadicInt(p_, c.k(), (r_ % c.pk() + o.r_ % c.pk()) % c.pk());
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    const PadicInt& c = coarser(*this, o);
    const i64 m = c.pk();
    return PadicInt(p_, c.k(), ((r_ - o.r_) % m + m) % m);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    const PadicInt& c = coarser(*this, o);
    const i64 m = c.pk();
    return PadicInt(p_, c.k(), mulmod(r_ % m, o.r_ % m, m));
}

PadicInt PadicInt::operator/(const PadicInt& o) const { return *this * o.inverse(); }

PadicInt PadicInt::operator-() const { return PadicInt(p_, k_, pk_ - r_); }

bool PadicInt::operator==(const PadicInt& o) const {
    const PadicInt& c = coarser(*this, o);
    return r_ % c.pk() == o.r_ % c.pk();
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw std::domain_error("p-adic inverse of a non-unit");
    return PadicInt(p_, k_, inv_mod(r_, pk_));
}

PadicInt PadicInt::pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    return PadicInt(p_, k_, pow_mod(r_, e, pk_));
}

RationalInZp::RationalInZp(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

PadicInt RationalInZp::to_padic(i64 p, int k) const {
    if (den % p == 0) throw std::domain_error("denominator divisible by p");
    const i64 pk = checked_pk(p, k);
    i64 n = num % pk;
    if (n < 0) n += pk;
    return PadicInt(p, k, mulmod(n, inv_mod(den % pk, pk), pk));
}

PadicInt teichmuller(i64 p, int k, i64 x) {
    const i64 pk = checked_pk(p, k);
    i64 r = x % pk;
    if (r < 0) r += pk;
    if (r % p == 0) throw std::domain_error("Teichmuller lift needs p coprime to x");
    // x^{p^{k-1}} is fixed by the p-power map mod p^k and reduces to x mod p
    i64 e = 1;
    for (int i = 0; i < k - 1; ++i) e *= p;
    return PadicInt(p, k, pow_mod(r, e, pk));
}

namespace {

// restricted factorials f(n) = (-1)^n prod_{1<=j<n, p !| j} j for every
// residue mod p^k, built in one O(p^k) sweep: f(2) = 1 and
// f(n+1) = -f(n) * (n if p !| n else 1)
struct GammaTable {
    i64 p;
    int k;
    i64 pk;
    std::vector<i64> val;  // val[n mod p^k]

    GammaTable(i64 pp, int kk) : p(pp), k(kk), pk(checked_pk(pp, kk)) {
        val.assign(size_t(pk), 0);
        i64 f = 1;  // f(2)
        for (i64 n = 2; n < pk + 2; ++n) {
            val[size_t(n % pk)] = f;
            i64 next = (n % p == 0) ? f : mulmod(f, n % pk, pk);
            f = (pk - next) % pk;
        }
    }
};

const GammaTable& gamma_table(i64 p, int k) {
    using Key = std::pair<i64, int>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<GammaTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) slot = std::make_unique<GammaTable>(p, k);
    return *slot;
}

i64 residue_mod_p(const RationalInZp& x, i64 p) {
    if (x.den % p == 0) throw std::domain_error("denominator divisible by p");
    i64 n = x.num % p;
    if (n < 0) n += p;
    return mulmod(n, inv_mod(x.den % p, p), p);
}

// R(y) in {1..p} with R(y) = y mod p
i64 R_of(const RationalInZp& x, i64 p) {
    const i64 r = residue_mod_p(x, p);
    return r == 0 ? p : r;
}

}  // namespace

PadicInt padic_gamma(i64 p, int k, const RationalInZp& x) {
    const auto& table = gamma_table(p, k);
    return PadicInt(p, k, table.val[size_t(x.to_padic(p, k).residue())]);
}

PadicInt padic_gamma(i64 p, int k, i64 x) { return padic_gamma(p, k, RationalInZp(x, 1)); }

GammaShift gamma_shift(i64 p, int k, const RationalInZp& x) {
    const PadicInt gx = padic_gamma(p, k, x);
    const PadicInt gx1 = padic_gamma(p, k, RationalInZp(x.num + x.den, x.den));
    const PadicInt xv = x.to_padic(p, k);
    const PadicInt expect = xv.is_unit() ? -(xv * gx) : -gx;
    return {gx1, gx1 == expect};
}

GammaReflection gamma_reflection(i64 p, int k, const RationalInZp& x) {
    const PadicInt gx = padic_gamma(p, k, x);
    const PadicInt g1mx = padic_gamma(p, k, RationalInZp(x.den - x.num, x.den));
    const PadicInt prod = gx * g1mx;
    const i64 R = R_of(x, p);
    const PadicInt expect = (R % 2 == 0) ? PadicInt(p, k, 1) : PadicInt(p, k, -1);
    return {prod, R, prod == expect};
}

GaussMultiplication gauss_multiplication(i64 p, int k, i64 m, const RationalInZp& x) {
    if (m < 1 || m % p == 0) throw std::invalid_argument("m must be >= 1 and coprime to p");
    const i64 pk = checked_pk(p, k);

    PadicInt lhs(p, k, 1);
    for (i64 j = 0; j < m; ++j)
        lhs = lhs * padic_gamma(p, k, RationalInZp(x.num * m + j * x.den, x.den * m));

    PadicInt eps(p, k, 1);
    for (i64 j = 0; j < m; ++j) eps = eps * padic_gamma(p, k, RationalInZp(j, m));

    const RationalInZp mx(x.num * m, x.den);
    const i64 R = R_of(mx, p);

    // m^{1-R(mx)}, exponent <= 0 handled through the inverse
    PadicInt mpow = PadicInt(p, k, m).pow(1 - R);

    // (m^{p-1})^{s}, s = (R - mx)/p in Z_p, needed only mod p^{k-1}
    PadicInt fermat_pow(p, k, 1);
    if (k > 1) {
        const RationalInZp s((R * mx.den - mx.num), p * mx.den);
        const i64 s_mod = s.to_padic(p, k - 1).residue();
        fermat_pow = PadicInt(p, k, pow_mod(pow_mod(m % pk, p - 1, pk), s_mod, pk));
    }

    const PadicInt rhs = eps * mpow * fermat_pow * padic_gamma(p, k, mx);
    return {lhs, rhs, lhs == rhs};
}

DigitData digit_sum_and_rotations(i64 p, i64 f, i64 a) {
    if (f < 1) throw std::invalid_argument("f must be >= 1");
    i64 qm1 = 1;
    for (i64 i = 0; i < f; ++i) qm1 *= p;
    qm1 -= 1;
    if (a < 0 || a >= qm1) throw std::invalid_argument("need 0 <= a < p^f - 1");

    DigitData out;
    out.digits.resize(size_t(f));
    i64 t = a;
    out.digit_sum = 0;
    for (i64 i = 0; i < f; ++i) {
        out.digits[size_t(i)] = t % p;
        out.digit_sum += t % p;
        t /= p;
    }
    for (i64 j = 0; j < f; ++j) {
        i64 v = 0;
        for (i64 i = f - 1; i >= 0; --i) v = v * p + out.digits[size_t((i + j) % f)];
        out.rotations.push_back(v);
    }
    return out;
}

}  // namespace hypcount
