#include "doctest.h"
#include "oracles.hpp"
#include "partcat/category.hpp"
#include "partcat/idempotents.hpp"

using namespace partcat;

TEST_SUITE("idempotents") {
    TEST_CASE("low Jones-Wenzl idempotents") {
        const RationalFunction t = RationalFunction::variable();
        CHECK(jones_wenzl(0).e == RFMorphism::basis(identity(0)));
        CHECK(jones_wenzl(1).e == RFMorphism::basis(identity(1)));
        const JWIdempotent& e2 = jones_wenzl(2);
        RFMorphism want = RFMorphism::basis(identity(2)) - t.inverse() * RFMorphism::basis(Paabb());
        CHECK(e2.e == want);
        CHECK(e2.ladder.at(1) == t.inverse());
        CHECK_THROWS_AS(jones_wenzl(-1), std::invalid_argument);
    }

    TEST_CASE("Jones-Wenzl properties") {
        for (int k = 0; k <= 6; ++k) {
            const JWIdempotent& jw = jones_wenzl(k);
            JWReport r = check_jones_wenzl(jw);
            CHECK(r.idempotent);
            CHECK(r.cap_kill);
            CHECK(r.cup_kill);
            CHECK(r.unit_identity);
            CHECK(r.trace == RationalFunction::from_laurent(oracle::chebyshev(k)));
            for (const auto& [p, c] : jw.e.terms()) REQUIRE(family_contains(Family::NC2, p));
        }
        CHECK(jones_wenzl(4).e.terms().size() == oracle::catalan(4));
    }

    TEST_CASE("evaluation at a point") {
        RationalMorphism e = evaluate_jw(2, 1);
        CHECK(e == RationalMorphism::basis(identity(2)) - RationalMorphism::basis(Paabb()));
        // Evaluating the generic idempotent agrees with the numeric recursion.
        for (int k = 0; k <= 4; ++k) {
            RationalMorphism a = evaluate_jw(k, 3);
            RationalMorphism b = jones_wenzl(k).e.map_coefficients([](const RationalFunction& c) { return c.evaluate(3); });
            REQUIRE(a == b);
        }
        CHECK_THROWS_AS(evaluate_jw(2, 0), std::domain_error);
        CHECK_THROWS_AS(evaluate_jw(3, 1), std::domain_error);
        CHECK_NOTHROW(evaluate_jw(2, 1));
    }

    TEST_CASE("fattening examples") {
        Partition thin = Partition::from_blocks(4, 4, {{1, -1}, {2, 3}, {4, -2}, {-3, -4}});
        CHECK(fatten(thin) == Partition::from_blocks(2, 2, {{1, 2, -1}, {-2}}));
        CHECK(fatten(Partition::from_blocks(0, 4, {{-1, -4}, {-2, -3}})) == Partition::from_blocks(0, 2, {{-1, -2}}));
        CHECK(fatten(Partition::from_blocks(0, 4, {{-1, -2}, {-3, -4}})) == all_singletons(0, 2));
        CHECK(fatten_scalar(identity(2)) == LaurentPoly(1));
        CHECK_THROWS_AS(fatten(Pabab()), std::invalid_argument);
        CHECK_THROWS_AS(fatten(identity(1)), std::invalid_argument);
        CHECK_THROWS_AS(unfatten(Partition::from_blocks(0, 4, {{-1, -3}, {-2, -4}})), std::invalid_argument);
    }

    TEST_CASE("fattening agrees with face tracing") {
        Category nc2 = Category::named(Family::NC2), nc = Category::named(Family::NC);
        for (int k = 0; k <= 5; ++k)
            for (int l = 0; k + l <= 5; ++l) {
                const auto& thin = nc2.enumerate(2 * k, 2 * l);
                REQUIRE(thin.size() == nc.enumerate(k, l).size());
                for (const auto& p : thin) {
                    REQUIRE(fatten(p) == oracle::fatten_by_faces(p));
                    REQUIRE(unfatten(fatten(p)) == p);
                }
            }
    }

    TEST_CASE("fattening is monoidal") {
        FatteningReport r = check_fattening(8, 5, 11, 5);
        CHECK(r.bijective);
        CHECK(r.compose_symbolic);
        CHECK(r.compose_numeric);
        CHECK(r.tensor_symbolic);
        CHECK(r.tensor_numeric);
        CHECK(r.samples.size() == 5);
        CHECK(r.compose_pairs > 0);
    }

    TEST_CASE("fattened Jones-Wenzl idempotents") {
        CHECK(functor_G_jw_idempotent(1));
        CHECK(functor_G_jw_idempotent(2));
        RFMorphism g = functor_G(jones_wenzl(2).e);
        CHECK(g.source() == 1);
        CHECK(g.target() == 1);
    }
}
