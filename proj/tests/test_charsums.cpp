#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypcount/charsums.hpp"

using namespace hypcount;
using doctest::Approx;

namespace {
std::vector<std::pair<i64, i64>> small_fields() {
    return {{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}};
}
}  // namespace

TEST_CASE("multiplicative character basics") {
    FieldSpec f5 = make_field(5, 1);
    CHECK(mult_char(f5, 0, 1) == complexd{1.0, 0.0});
    CHECK(mult_char(f5, 3, 0) == complexd{0.0, 0.0});
    CHECK(mult_char(f5, 0, 0) == complexd{0.0, 0.0});

    // index (q-1)/2 is the quadratic character; compare with Euler's criterion
    for (i64 p : {5, 7, 13}) {
        FieldSpec fp = make_field(p, 1);
        for (i64 x = 1; x < p; ++x) {
            const double euler = (fp.pow(x, (p - 1) / 2) == 1) ? 1.0 : -1.0;
            CHECK(mult_char(fp, (p - 1) / 2, x).real() == Approx(euler).epsilon(1e-12));
        }
    }
    // 2 is a non-residue mod 5
    CHECK(mult_char(f5, 2, 2).real() == Approx(-1.0));
}

TEST_CASE("additive character") {
    FieldSpec f5 = make_field(5, 1);
    CHECK(add_char(f5, 0) == complexd{1.0, 0.0});
    CHECK(add_char(f5, 1).real() == Approx(std::cos(2 * 3.14159265358979323846 / 5)));

    FieldSpec f9 = make_field(3, 2);
    CHECK(add_char(f9, 1).real() == Approx(std::cos(4 * 3.14159265358979323846 / 3)));

    for (auto [p, f] : small_fields()) {
        FieldSpec spec = make_field(p, f);
        for (i64 x = 0; x < spec.q; ++x)
            for (i64 y = 0; y < spec.q; ++y)
                CHECK(std::abs(add_char(spec, spec.add(x, y)) -
                               add_char(spec, x) * add_char(spec, y)) < 1e-12);
    }
}

TEST_CASE("character orthogonality") {
    for (auto [p, f] : small_fields()) {
        FieldSpec spec = make_field(p, f);
        for (i64 a = 1; a < spec.q - 1; ++a) {
            complexd sum{0.0, 0.0};
            for (i64 x = 1; x < spec.q; ++x) sum += mult_char(spec, a, x);
            CHECK(std::abs(sum) < 1e-9);
        }
    }
}

TEST_CASE("Gauss sums: g(0) = -1 and |g(s)| = sqrt(q)") {
    for (auto [p, f] : small_fields()) {
        FieldSpec spec = make_field(p, f);
        auto gt = gauss_table(spec);
        CHECK(std::abs((*gt)(0) - complexd{-1.0, 0.0}) < 1e-9);
        for (i64 a = 1; a < spec.q - 1; ++a)
            CHECK(std::abs(std::abs((*gt)(a)) - std::sqrt(double(spec.q))) <
                  1e-9 * std::sqrt(double(spec.q)));
    }
}

TEST_CASE("reflection g(s)g(-s) = q chi_s(-1)") {
    for (auto [p, f] : small_fields()) {
        FieldSpec spec = make_field(p, f);
        auto gt = gauss_table(spec);
        const i64 Q = spec.q - 1;
        for (i64 a = 1; a < Q; ++a) {
            const complexd lhs = (*gt)(a) * (*gt)(Q - a);
            const complexd rhs = double(spec.q) * mult_char(spec, a, spec.from_int(-1));
            CHECK(std::abs(lhs - rhs) < 1e-6 * spec.q);
        }
    }
}

TEST_CASE("Jacobi sums") {
    FieldSpec f5 = make_field(5, 1);
    CHECK(jacobi_sum(f5, {1}).value == complexd{1.0, 0.0});
    CHECK(jacobi_sum(f5, {3}).value == complexd{1.0, 0.0});

    // the quadratic pair has an integer index sum: flagged, direct form only
    {
        auto direct = jacobi_sum(f5, {2, 2});
        CHECK(direct.degenerate);
        // J(s, -s) = -chi_s(-1) = -1 here since -1 is a square mod 5
        CHECK(std::abs(direct.value - complexd{-1.0, 0.0}) < 1e-9);
    }
    // a non-degenerate pair: direct form vs Gauss-sum ratio
    {
        auto direct = jacobi_sum(f5, {1, 1});
        CHECK(!direct.degenerate);
        CHECK(std::abs(direct.value - jacobi_ratio(f5, {1, 1})) < 1e-6);
    }

    // |J| = q^{(r-1)/2} when no partial index sum vanishes
    {
        FieldSpec f7 = make_field(7, 1);
        auto j = jacobi_sum(f7, {1, 1, 1});
        CHECK(!j.degenerate);
        CHECK(std::abs(std::abs(j.value) - 7.0) < 1e-6);  // q^{(3-1)/2} = 7
        CHECK(std::abs(j.value - jacobi_ratio(f7, {1, 1, 1})) < 1e-6);
    }

    // index sum an integer: degenerate flag, ratio form rejected
    {
        FieldSpec f7 = make_field(7, 1);
        auto j = jacobi_sum(f7, {2, 4});
        CHECK(j.degenerate);
        CHECK_THROWS_AS(jacobi_ratio(f7, {2, 4}), std::invalid_argument);
        // J(s, -s) = -chi_s(-1)
        const complexd expect = -mult_char(f7, 2, f7.from_int(-1));
        CHECK(std::abs(j.value - expect) < 1e-9);
    }

    // ratio agreement over all non-degenerate pairs and triples, small fields
    for (auto [p, f] : {std::pair<i64, i64>{5, 1}, {7, 1}, {3, 2}}) {
        FieldSpec spec = make_field(p, f);
        const i64 Q = spec.q - 1;
        for (i64 a = 1; a < Q; ++a)
            for (i64 b = 1; b < Q; ++b) {
                if ((a + b) % Q == 0) continue;
                CHECK(std::abs(jacobi_sum(spec, {a, b}).value -
                               jacobi_ratio(spec, {a, b})) < 1e-6 * spec.q);
            }
    }
}

TEST_CASE("Hasse-Davenport product relation") {
    struct Case {
        i64 p, f, d;
    };
    for (auto c : {Case{7, 1, 2}, Case{7, 1, 3}, Case{13, 1, 3}, Case{13, 1, 4},
                   Case{3, 2, 4}, Case{5, 2, 3}}) {
        FieldSpec spec = make_field(c.p, c.f);
        const i64 Q = spec.q - 1;
        for (i64 a = 0; a < Q; ++a) {
            auto rel = hasse_davenport_product(spec, c.d, a);
            CHECK(std::abs(rel.lhs - rel.rhs) <
                  1e-6 * std::pow(double(spec.q), double(c.d) / 2.0));
        }
    }
    FieldSpec f7 = make_field(7, 1);
    CHECK_THROWS_AS(hasse_davenport_product(f7, 4, 0), std::invalid_argument);
}
