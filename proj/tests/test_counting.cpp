#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hypcount/counting.hpp"

using namespace hypcount;

TEST_CASE("family validation") {
    CHECK_THROWS_AS((DeformationFamily{3, 2, {1, 1}, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DeformationFamily{4, 2, {2, 2}, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DeformationFamily{1, 2, {1, 0}, 1}.validate()), std::invalid_argument);
    CHECK_NOTHROW((DeformationFamily{3, 2, {1, 2}, 1}.validate()));
    CHECK_NOTHROW((DeformationFamily{3, 3, {1, 2, 0}, 1}.validate()));  // h entries may vanish
}

TEST_CASE("W-set structure") {
    SUBCASE("d=3, h=(1,2): a single class") {
        WSet ws = build_wset(3, 2, {1, 2});
        CHECK(ws.size == 3);
        REQUIRE(ws.classes.size() == 1);
        CHECK(ws.classes[0].rep == std::vector<i64>{0, 0});
        std::set<std::vector<i64>> members(ws.classes[0].members.begin(),
                                           ws.classes[0].members.end());
        CHECK(members == std::set<std::vector<i64>>{{0, 0}, {1, 2}, {2, 1}});
    }
    SUBCASE("d=3, h=(1,1,1): nine tuples, three classes, two types") {
        WSet ws = build_wset(3, 3, {1, 1, 1});
        CHECK(ws.size == 9);
        REQUIRE(ws.classes.size() == 3);
        // every class has exactly d members
        std::set<std::vector<i64>> all;
        for (const auto& c : ws.classes) {
            CHECK(c.members.size() == 3);
            all.insert(c.members.begin(), c.members.end());
        }
        CHECK(all.size() == 9);
        std::set<std::vector<i64>> types;
        for (const auto& c : ws.classes) types.insert(c.type_key);
        CHECK(types.size() == 2);  // (0,0,0) and the permutation type of (1,2,0)
    }
    SUBCASE("d=4, h=(1,1,1,1): 64 tuples, 16 classes, three types") {
        WSet ws = build_wset(4, 4, {1, 1, 1, 1});
        CHECK(ws.size == 64);
        CHECK(ws.classes.size() == 16);
        std::set<std::vector<i64>> types;
        for (const auto& c : ws.classes) types.insert(c.type_key);
        CHECK(types.size() == 3);
        for (const auto& c : ws.classes) CHECK(c.members.size() == 4);
    }
}

TEST_CASE("brute-force counts of known small hypersurfaces") {
    FieldSpec f7 = make_field(7, 1);
    // x^3 + y^3 = 0 in P^1(F_7): cubes take values {1,6}
    CHECK(brute_count({3, 2, {1, 2}, 0}, f7) == 3);

    FieldSpec f5 = make_field(5, 1);
    CHECK(legendre_count(f5, 2) == 8);

    // serial reference agrees with the parallel kernel
    for (i64 lam = 0; lam < 7; ++lam) {
        DeformationFamily fam{3, 3, {1, 1, 1}, lam};
        CHECK(brute_count(fam, f7) == brute_count_serial(fam, f7));
    }
}

TEST_CASE("Weil components") {
    FieldSpec f7 = make_field(7, 1);
    CHECK(std::abs(weil_component(f7, 3, 3, {0, 0, 0}) - complexd{8.0, 0.0}) < 1e-9);
    CHECK(std::abs(weil_component(f7, 3, 3, {1, 2, 0})) < 1e-12);
    // all-nonzero component has modulus q^{(n-2)/2}
    CHECK(std::abs(std::abs(weil_component(f7, 3, 3, {1, 1, 1})) - std::sqrt(7.0)) < 1e-9);
    CHECK_THROWS_AS(weil_component(f7, 4, 3, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("diagonal counts against enumeration") {
    FieldSpec f7 = make_field(7, 1);
    FieldSpec f5 = make_field(5, 1);
    CHECK(diagonal_count(f7, 3, 2) == 3);
    CHECK(diagonal_count(f5, 2, 2) == 2);
    CHECK(diagonal_count(f7, 3, 3) == brute_count({3, 3, {1, 1, 1}, 0}, f7));
    CHECK(diagonal_count(f5, 2, 2) == brute_count({2, 2, {1, 1}, 0}, f5));
    FieldSpec f25 = make_field(5, 2);
    CHECK(diagonal_count(f25, 3, 2) == brute_count({3, 2, {1, 2}, 0}, f25));
}

TEST_CASE("count formula equals enumeration, fiber by fiber") {
    struct Case {
        i64 p, f;
        DeformationFamily fam;
    };
    std::vector<Case> cases = {
        {7, 1, {3, 2, {1, 2}, 0}},  {13, 1, {3, 2, {1, 2}, 0}},
        {7, 1, {3, 3, {1, 1, 1}, 0}}, {13, 1, {4, 4, {1, 1, 1, 1}, 0}},
        {5, 2, {2, 2, {1, 1}, 0}},  {5, 2, {3, 2, {1, 2}, 0}},
    };
    for (auto& c : cases) {
        FieldSpec spec = make_field(c.p, c.f);
        for (i64 lam = 1; lam < spec.q && lam <= 6; ++lam) {
            if (spec.from_int(lam) == 0) continue;
            DeformationFamily fam = c.fam;
            fam.lambda = lam;
            CountReport rep = koblitz_count(fam, spec);
            CHECK(rep.match);
            CHECK(rep.n_koblitz_rounded == rep.n_brute);
            CHECK(std::abs(rep.n_koblitz.real() - double(rep.n_koblitz_rounded)) < 1e-4);
            CHECK(std::abs(rep.n_koblitz.imag()) < 1e-4);
        }
    }
}

TEST_CASE("class partial sums do not depend on the representative") {
    FieldSpec f7 = make_field(7, 1);
    DeformationFamily fam{3, 3, {1, 1, 1}, 2};
    auto gt = gauss_table(f7);
    WSet ws = build_wset(3, 3, {1, 1, 1});
    for (const auto& cls : ws.classes) {
        const complexd base = koblitz_class_partial(*gt, fam, cls.rep);
        for (const auto& member : cls.members)
            CHECK(std::abs(koblitz_class_partial(*gt, fam, member) - base) < 1e-9);
    }
}

TEST_CASE("hypergeometric decomposition of the class partials") {
    FieldSpec f7 = make_field(7, 1);

    SUBCASE("empty-parameter classes vanish off the singular fibers") {
        for (i64 lam : {3, 5, 6}) {  // lambda^3 = 6 != 1
            auto reports = hyp_decomposition({3, 3, {1, 1, 1}, lam}, f7);
            REQUIRE(reports.size() == 3);
            for (const auto& r : reports) {
                if (!r.empty_params) continue;
                CHECK(std::abs(r.partial) < 1e-9);
                CHECK(std::abs(r.H) < 1e-9);
            }
        }
    }

    SUBCASE("empty-parameter classes contribute exactly q-1 on singular fibers") {
        for (i64 lam : {1, 2, 4}) {  // lambda^3 = 1
            auto reports = hyp_decomposition({3, 3, {1, 1, 1}, lam}, f7);
            int empties = 0;
            for (const auto& r : reports) {
                if (!r.empty_params) continue;
                ++empties;
                // (q-1) H is the character sum over the fiber: q-1 exactly
                const double qm1_H = 6.0 * r.H.real();
                CHECK(std::llround(qm1_H) == 6);
                CHECK(std::abs(r.H.imag()) < 1e-12);
                // and the partial is a unit times q^{(n-2d-1)/2 + c} H = q
                CHECK(std::abs(std::abs(r.partial) - 7.0) < 1e-9);
                CHECK(r.testable);
                CHECK(std::abs(std::abs(r.xi) - 1.0) < 1e-9);
            }
            CHECK(empties == 2);
        }
    }

    SUBCASE("partials plus the diagonal reproduce the count") {
        for (i64 lam = 1; lam < 7; ++lam) {
            DeformationFamily fam{3, 3, {1, 1, 1}, lam};
            auto reports = hyp_decomposition(fam, f7);
            complexd total{double(diagonal_count(f7, 3, 3)), 0.0};
            for (const auto& r : reports) total += r.partial;
            CHECK(std::llround(total.real()) == brute_count(fam, f7));
            CHECK(std::abs(total.imag()) < 1e-6);
        }
    }

    SUBCASE("hypothesis violations are rejected") {
        FieldSpec f5 = make_field(5, 1);
        CHECK_THROWS_AS(hyp_decomposition({3, 2, {1, 2}, 2}, f5), std::invalid_argument);
        CHECK_THROWS_AS(hyp_decomposition({3, 3, {1, 1, 1}, 7}, f7), std::invalid_argument);
    }
}

TEST_CASE("budget guard") {
    FieldSpec f13 = make_field(13, 1);
    CHECK_THROWS_AS(brute_count({4, 4, {1, 1, 1, 1}, 1}, f13, 100), budget_error);
}
