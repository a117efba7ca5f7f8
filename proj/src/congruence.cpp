#include "hypcount/congruence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypcount {

namespace {

Rational frac(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt fl = num / den;
    if (num < 0 && fl * den != num) fl -= 1;
    return x - Rational(fl);
}

// reduce a p-integral rational mod p^k
i64 rational_mod(const Rational& x, i64 p, int k, i64 term_index) {
    i64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (den % p == 0)
        throw check_error("coefficient at index " + std::to_string(term_index) +
                          " has p in its denominator");
    const i64 n = i64(((num % pk) + pk) % pk);
    const i64 d = i64(((den % pk) + pk) % pk);
    return n * inv_mod(d, pk) % pk;
}

i64 require_admissible(FamilyKind kind, i64 p, i64 d) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    if (!family_admits(kind, p, d))
        throw std::invalid_argument(family_requirement(kind, d) + " fails for p=" +
                                    std::to_string(p));
    return p;
}

}  // namespace

i64 eta(i64 p, i64 d, i64 a) {
    if (a < 0 || a > p - 2) throw std::invalid_argument("need 0 <= a <= p-2");
    const Rational x(a, p - 1);
    const Rational v = x + frac((d - 1) * x) - frac(d * x);
    if (boost::multiprecision::denominator(v) != 1)
        throw check_error("eta is not an integer");
    const i64 r = i64(boost::multiprecision::numerator(v));
    if (r != 0 && r != 1) throw check_error("eta outside {0,1}");
    return r;
}

PadicInt zerodim_padic_count(i64 p, int k, i64 d, i64 lambda) {
    require_admissible(FamilyKind::zerodim, p, d);
    if (lambda % p == 0) throw std::invalid_argument("p must not divide lambda");

    FieldSpec fp = make_field(p, 1);
    DeformationFamily diag{d, 2, {1, d - 1}, 0};
    const i64 n0 = brute_count(diag, fp);

    const PadicInt omega = teichmuller(p, k, (d % p) * (lambda % p) % p);
    PadicInt sum(p, k, 0);
    for (i64 a = 0; a <= p - 2; ++a) {
        const Rational x(a, p - 1);
        const Rational x1 = frac((d - 1) * x);
        const Rational x2 = frac(d * x);
        auto as_zp = [&](const Rational& r) {
            return RationalInZp(i64(boost::multiprecision::numerator(r)),
                                i64(boost::multiprecision::denominator(r)));
        };
        PadicInt term = padic_gamma(p, k, as_zp(x)) * padic_gamma(p, k, as_zp(x1)) /
                        padic_gamma(p, k, as_zp(x2));
        if (eta(p, d, a) == 1) term = term * PadicInt(p, k, -p);
        // w(d lambda)^{-da}; the exponent only matters mod p-1
        i64 e = (-d * a) % (p - 1);
        if (e < 0) e += p - 1;
        sum = sum + term * omega.pow(e);
    }
    const PadicInt inv_pm1 = PadicInt(p, k, p - 1).inverse();
    return PadicInt(p, k, n0) - inv_pm1 * sum;
}

i64 truncated_hyp_mod_p(i64 p, const std::vector<Rational>& alpha,
                        const std::vector<Rational>& beta, i64 z, i64 lo, i64 hi,
                        int k) {
    if (lo < 0 || lo > hi) throw std::invalid_argument("bad truncation window");
    if (hi >= p - 1) throw std::invalid_argument("truncation window must end before p-1");
    i64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    z = ((z % pk) + pk) % pk;

    // R_n = prod (alpha_i)_n / (prod (beta_j)_n n!), accumulated exactly so
    // that paired zeros mod p cancel before reduction
    Rational coeff = 1;
    for (i64 n = 0; n < lo; ++n) {
        for (const auto& a : alpha) coeff *= (a + n);
        for (const auto& b : beta) coeff /= (b + n);
        coeff /= (n + 1);
    }
    i64 acc = 0;
    i64 zn = pow_mod(z, lo, pk);
    for (i64 n = lo; n <= hi; ++n) {
        const i64 c = rational_mod(coeff, p, k, n);
        acc = i64(((unsigned __int128)c * zn + acc) % pk);
        for (const auto& a : alpha) coeff *= (a + n);
        for (const auto& b : beta) coeff /= (b + n);
        coeff /= (n + 1);
        zn = i64((unsigned __int128)zn * z % pk);
    }
    return acc;
}

i64 zerodim_congruence(i64 p, i64 d, i64 lambda) {
    require_admissible(FamilyKind::zerodim, p, d);
    if (lambda % p == 0) throw std::invalid_argument("p must not divide lambda");

    // z = (d-1)^{-(d-1)} lambda^{-d}
    const i64 lam = ((lambda % p) + p) % p;
    i64 z = inv_mod(pow_mod(d - 1, d - 1, p) * pow_mod(lam, d, p) % p, p);

    i64 acc = 0;
    for (i64 i = 0; i <= d - 2; ++i) {
        std::vector<Rational> alpha, beta;
        for (i64 t = 1; t <= d - 1; ++t) alpha.emplace_back(t <= i ? t + d : t, d);
        for (i64 t = 1; t <= d - 2; ++t) beta.emplace_back(t <= i ? t + d - 1 : t, d - 1);
        const i64 lo = i * (p - 1) / (d - 1);
        const i64 hi = (i + 1) * (p - 1) / d - 1;
        acc = (acc + truncated_hyp_mod_p(p, alpha, beta, z, lo, hi)) % p;
    }
    return acc;
}

i64 dwork3_congruence(i64 p, i64 lambda) {
    require_admissible(FamilyKind::dwork3, p, 3);
    if (lambda % p == 0) throw std::invalid_argument("p must not divide lambda");
    const i64 lam = ((lambda % p) + p) % p;
    const i64 z = inv_mod(pow_mod(lam, 3, p), p);
    const i64 s = truncated_hyp_mod_p(p, {Rational(1, 3), Rational(2, 3)},
                                      {Rational(1)}, z, 0, (p - 1) / 3 - 1);
    return (p - s) % p;
}

i64 dwork4_congruence(i64 p, i64 lambda) {
    require_admissible(FamilyKind::dwork4, p, 4);
    if (lambda % p == 0) throw std::invalid_argument("p must not divide lambda");
    const i64 lam = ((lambda % p) + p) % p;
    const i64 z = inv_mod(pow_mod(lam, 4, p), p);
    return truncated_hyp_mod_p(p, {Rational(1, 4), Rational(1, 2), Rational(3, 4)},
                               {Rational(1), Rational(1)}, z, 0, (p - 1) / 4 - 1);
}

i64 legendre_congruence(i64 p, i64 lambda) {
    require_admissible(FamilyKind::legendre, p, 2);
    const i64 lam = ((lambda % p) + p) % p;
    if (lam == 0 || lam == 1) throw std::invalid_argument("lambda must avoid 0, 1 mod p");

    const i64 s = truncated_hyp_mod_p(p, {Rational(1, 2), Rational(1, 2)},
                                      {Rational(1)}, lam, 0, (p - 1) / 2);

    // binomial form: binom(-1/2, r)^2 lambda^r must agree with the
    // Pochhammer terms one by one
    Rational binom = 1;
    Rational poch = 1;
    for (i64 r = 0; r <= (p - 1) / 2; ++r) {
        if (binom * binom != poch * poch)
            throw check_error("binomial and Pochhammer term mismatch at r=" +
                              std::to_string(r));
        binom *= (Rational(-1, 2) - r) / (r + 1);
        poch *= (Rational(1, 2) + r) / (r + 1);
    }

    // affine count = (-1)^{(p+1)/2} S mod p (x^{p-1}-coefficient of
    // f(x)^{(p-1)/2}); the point at infinity adds 1
    const i64 signed_s = ((p + 1) / 2 % 2 == 0) ? s : (p - s) % p;
    return (1 + signed_s) % p;
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::zerodim: return "zerodim";
        case FamilyKind::dwork3: return "dwork3";
        case FamilyKind::dwork4: return "dwork4";
        case FamilyKind::legendre: return "legendre";
    }
    return "?";
}

bool family_admits(FamilyKind kind, i64 p, i64 d) {
    switch (kind) {
        case FamilyKind::zerodim: return d >= 2 && (p - 1) % (d * (d - 1)) == 0;
        case FamilyKind::dwork3: return (p - 1) % 3 == 0;
        case FamilyKind::dwork4: return (p - 1) % 4 == 0;
        case FamilyKind::legendre: return p > 2;
    }
    return false;
}

std::string family_requirement(FamilyKind kind, i64 d) {
    switch (kind) {
        case FamilyKind::zerodim:
            return "d(d-1) | p-1 with d(d-1) = " + std::to_string(d * (d - 1));
        case FamilyKind::dwork3: return "3 | p-1";
        case FamilyKind::dwork4: return "4 | p-1";
        case FamilyKind::legendre: return "p odd";
    }
    return "?";
}

namespace {

CongruenceReport verify_one(FamilyKind kind, const FieldSpec& fp, i64 d, int k,
                            i64 lambda) {
    const i64 p = fp.p;
    CongruenceReport rep;
    rep.family = kind;
    rep.p = p;
    rep.d = d;
    rep.k = k;
    rep.lambda = lambda;

    if (((lambda % p) + p) % p == 0) {
        rep.asserted = false;
        rep.note = "lambda = 0 in F_p: skipped";
        return rep;
    }

    switch (kind) {
        case FamilyKind::zerodim: {
            DeformationFamily fam{d, 2, {1, d - 1}, lambda};
            DeformationFamily diag{d, 2, {1, d - 1}, 0};
            const i64 n_lam = brute_count(fam, fp);
            const i64 n_0 = brute_count(diag, fp);
            rep.lhs = ((n_lam - n_0) % p + p) % p;
            rep.rhs = zerodim_congruence(p, d, lambda);
            i64 pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            rep.padic_lhs = n_lam % pk;
            rep.padic_rhs = zerodim_padic_count(p, k, d, lambda).residue();
            rep.match = (rep.lhs == rep.rhs) && (*rep.padic_lhs == *rep.padic_rhs);
            break;
        }
        case FamilyKind::dwork3:
        case FamilyKind::dwork4: {
            const i64 d_fam = (kind == FamilyKind::dwork3) ? 3 : 4;
            rep.d = d_fam;
            std::vector<i64> ones(size_t(d_fam), 1);
            DeformationFamily fam{d_fam, d_fam, ones, lambda};
            DeformationFamily diag{d_fam, d_fam, ones, 0};
            const i64 n_lam = brute_count(fam, fp);
            const i64 n_0 = brute_count(diag, fp);
            rep.lhs = ((n_lam - n_0) % p + p) % p;
            rep.rhs = (kind == FamilyKind::dwork3) ? dwork3_congruence(p, lambda)
                                                   : dwork4_congruence(p, lambda);
            rep.match = (rep.lhs == rep.rhs);
            if (fp.pow(fp.from_int(lambda), d_fam) == 1) {
                rep.asserted = false;
                rep.note = "singular fiber (lambda^d = 1): reported, not asserted";
            }
            // exploratory residues mod p^d, never asserted
            i64 pd = 1;
            for (i64 i = 0; i < d_fam; ++i) pd *= p;
            if (pd <= 20'000'000) {
                rep.mod_pd_lhs = (((n_lam - n_0) % pd) + pd) % pd;
                const i64 lam = ((lambda % p) + p) % p;
                const i64 z = inv_mod(pow_mod(lam, d_fam, pd), pd);
                std::vector<Rational> al, be;
                for (i64 t = 1; t < d_fam; ++t) al.emplace_back(t, d_fam);
                for (i64 t = 1; t < d_fam - 1; ++t) be.emplace_back(1);
                i64 v = truncated_hyp_mod_p(p, al, be, z, 0, (p - 1) / d_fam - 1,
                                            int(d_fam));
                if (kind == FamilyKind::dwork3) v = (pd - v) % pd;
                rep.mod_pd_rhs = v;
            }
            break;
        }
        case FamilyKind::legendre: {
            const i64 n_lam = legendre_count(fp, lambda);
            rep.lhs = n_lam % p;
            const i64 lam = ((lambda % p) + p) % p;
            if (lam == 0 || lam == 1) {
                rep.asserted = false;
                rep.note = "lambda in {0,1}: excluded fiber, reported only";
                rep.rhs = -1;
                rep.match = false;
            } else {
                rep.rhs = legendre_congruence(p, lambda);
                rep.match = (rep.lhs == rep.rhs);
            }
            break;
        }
    }
    return rep;
}

}  // namespace

std::vector<CongruenceReport> verify_family(FamilyKind kind, i64 p, i64 d, int k,
                                            const std::vector<i64>& lambdas) {
    require_admissible(kind, p, d);
    FieldSpec fp = make_field(p, 1);

    // fail budget limits here, before the parallel sweep
    i64 nvars = 2;
    if (kind == FamilyKind::dwork3 || kind == FamilyKind::legendre) nvars = 3;
    if (kind == FamilyKind::dwork4) nvars = 4;
    i64 points = 0, patch = 1;
    for (i64 i = 0; i < nvars; ++i) {
        points += patch;
        patch *= p;
        if (points > kDefaultPointBudget)
            throw budget_error("enumeration for this prime exceeds the point budget");
    }
    if (kind == FamilyKind::zerodim) PadicInt(p, k, 0);  // precision budget probe

    std::vector<i64> lams = lambdas;
    if (lams.empty())
        for (i64 l = 1; l < p; ++l) lams.push_back(l);

    std::vector<CongruenceReport> out(lams.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < lams.size(); ++i)
        out[i] = verify_one(kind, fp, d, k, lams[i]);
    return out;
}

}  // namespace hypcount
