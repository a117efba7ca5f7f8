#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypcount/ffield.hpp"

using namespace hypcount;

TEST_CASE("prime field construction and primitive roots") {
    FieldSpec f5 = make_field(5, 1);
    CHECK(f5.q == 5);
    CHECK(f5.generator == 2);  // orders: 2^1=2, 2^2=4, 2^3=3, 2^4=1

    FieldSpec f7 = make_field(7, 1);
    CHECK(f7.generator == 3);

    // the generator really has order q-1
    for (i64 m = 1; m < f7.q - 1; ++m) CHECK(f7.pow(f7.generator, m) != 1);
    CHECK(f7.pow(f7.generator, f7.q - 1) == 1);
}

TEST_CASE("extension field F_9") {
    FieldSpec f9 = make_field(3, 2);
    CHECK(f9.q == 9);
    // x^2 + 1 is the smallest irreducible monic quadratic over F_3
    CHECK(f9.modulus == std::vector<i64>{1, 0, 1});

    // dlog table is a bijection on the 8 nonzero codes
    std::vector<bool> seen(8, false);
    for (i64 x = 1; x < 9; ++x) {
        const i64 d = f9.dlog(x);
        CHECK(d >= 0);
        CHECK(d < 8);
        CHECK(!seen[size_t(d)]);
        seen[size_t(d)] = true;
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);   // composite
    CHECK_THROWS_AS(make_field(2, 1), std::invalid_argument);   // even
    CHECK_THROWS_AS(make_field(-7, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(3, 0), std::invalid_argument);
    // x^2 - 1 = (x-1)(x+1) is reducible over F_3
    CHECK_THROWS_AS(make_field(3, 2, std::vector<i64>{2, 0, 1} /*x^2+2*/),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_field(5, 1, std::vector<i64>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_field(3, 21, std::nullopt), budget_error);  // 3^21 > 2^20
}

TEST_CASE("dlog is a homomorphism") {
    for (auto [p, f] : {std::pair<i64, i64>{7, 1}, {3, 2}, {5, 2}}) {
        FieldSpec spec = make_field(p, f);
        for (i64 x = 1; x < spec.q; ++x)
            for (i64 y = 1; y < spec.q; ++y)
                CHECK(spec.dlog(spec.mul(x, y)) ==
                      (spec.dlog(x) + spec.dlog(y)) % (spec.q - 1));
    }
}

TEST_CASE("field axioms, exhaustive for small q") {
    for (auto [p, f] : {std::pair<i64, i64>{5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
        FieldSpec spec = make_field(p, f);
        const i64 q = spec.q;
        for (i64 a = 0; a < q; ++a) {
            CHECK(spec.add(a, 0) == a);
            CHECK(spec.mul(a, 1) == a);
            CHECK(spec.add(a, spec.neg(a)) == 0);
            if (a != 0) CHECK(spec.mul(a, spec.inv(a)) == 1);
        }
        for (i64 a = 0; a < q; ++a)
            for (i64 b = 0; b < q; ++b)
                for (i64 c = 0; c < q; ++c) {
                    CHECK(spec.add(spec.add(a, b), c) == spec.add(a, spec.add(b, c)));
                    CHECK(spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c)));
                    CHECK(spec.mul(a, spec.add(b, c)) ==
                          spec.add(spec.mul(a, b), spec.mul(a, c)));
                }
    }
}

TEST_CASE("Frobenius is an additive and multiplicative homomorphism fixing F_p") {
    for (auto [p, f] : {std::pair<i64, i64>{3, 2}, {5, 2}, {3, 4}, {11, 2}}) {
        FieldSpec spec = make_field(p, f);
        for (i64 a = 0; a < spec.p; ++a) CHECK(spec.frobenius(a) == a);
        for (i64 x = 0; x < spec.q; ++x)
            for (i64 y = 0; y < spec.q; ++y) {
                CHECK(spec.frobenius(spec.add(x, y)) ==
                      spec.add(spec.frobenius(x), spec.frobenius(y)));
                CHECK(spec.frobenius(spec.mul(x, y)) ==
                      spec.mul(spec.frobenius(x), spec.frobenius(y)));
            }
    }
}

TEST_CASE("trace") {
    FieldSpec f7 = make_field(7, 1);
    CHECK(f7.trace(3) == 3);
    CHECK(f7.trace(0) == 0);

    FieldSpec f9 = make_field(3, 2);
    CHECK(f9.trace(1) == 2);  // Tr(1) = f mod p
    CHECK(f9.trace(0) == 0);

    // additive, and lands in the prime subfield
    for (auto [p, f] : {std::pair<i64, i64>{3, 2}, {5, 2}}) {
        FieldSpec spec = make_field(p, f);
        for (i64 x = 0; x < spec.q; ++x) {
            CHECK(spec.trace(x) < spec.p);
            for (i64 y = 0; y < spec.q; ++y)
                CHECK(spec.trace(spec.add(x, y)) ==
                      (spec.trace(x) + spec.trace(y)) % spec.p);
        }
    }
}

TEST_CASE("dlog of zero and zero powers") {
    FieldSpec f5 = make_field(5, 1);
    CHECK_THROWS_AS(f5.dlog(0), std::domain_error);
    CHECK_THROWS_AS(f5.inv(0), std::domain_error);
    CHECK(f5.pow(0, 0) == 1);
    CHECK(f5.pow(0, 3) == 0);
    CHECK(f5.from_int(-3) == 2);
}
