#include "doctest.h"
#include "oracles.hpp"
#include "partcat/category.hpp"
#include "partcat/morphism.hpp"

using namespace partcat;

namespace {

const LaurentPoly t = LaurentPoly::t();

Morphism e2() { return Morphism::basis(identity(2)) - Morphism::basis(Paabb(), LaurentPoly::monomial(-1)); }

}  // namespace

TEST_SUITE("algebra") {
    TEST_CASE("scalars") {
        CHECK(parse_rational("6/4") == Rational(3, 2));
        CHECK(to_string(Rational(-3, 2)) == "-3/2");
        CHECK_THROWS(parse_rational("1/0"));
        CHECK_THROWS(parse_rational("x"));
        LaurentPoly f = t * t - 1;
        CHECK(to_string(f) == "t^2 - 1");
        CHECK(f.evaluate(3) == 8);
        CHECK_THROWS_AS(LaurentPoly::monomial(-1).evaluate(0), std::domain_error);
        RationalFunction r = RationalFunction::variable();
        CHECK((r * r.inverse()) == RationalFunction(1));
        CHECK_THROWS_AS(r.inverse().evaluate(0), std::domain_error);
    }

    TEST_CASE("pair on pair gives a loop") {
        Morphism c = mor_compose(Morphism::basis(Paabb()), Morphism::basis(Paabb()));
        CHECK(c == Morphism::basis(Paabb(), t));
        Morphism half = Morphism::basis(Paabb(), LaurentPoly::monomial(-1));
        CHECK(mor_compose(half, half) == half);
    }

    TEST_CASE("traces") {
        CHECK(mor_trace(e2()) == t * t - 1);
        CHECK(mor_trace(Morphism::basis(Pabab())) == t);
        CHECK(mor_trace(Morphism::basis(identity(3))) == t.pow(3));
        CHECK_THROWS_AS(mor_trace(Morphism::basis(upper_pair())), std::invalid_argument);
    }

    TEST_CASE("evaluation") {
        RationalMorphism e = evaluate(e2(), 1);
        RationalMorphism want = RationalMorphism::basis(identity(2)) - RationalMorphism::basis(Paabb());
        CHECK(e == want);
        CHECK_THROWS_AS(evaluate(e2(), 0), std::domain_error);
        CHECK(trace_at(e, 2) == 2);
    }

    TEST_CASE("morphism algebra is bilinear and associative") {
        std::vector<Partition> ps = all_partitions(1, 1);
        Morphism a(1, 1), b(1, 1), c(1, 1);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            a.add(ps[i], LaurentPoly(static_cast<long>(i + 1)));
            b.add(ps[i], t.pow(static_cast<int>(i)));
            c.add(ps[i], t - static_cast<long>(i));
        }
        CHECK(mor_compose(a, mor_compose(b, c)) == mor_compose(mor_compose(a, b), c));
        CHECK(mor_compose(a, b + c) == mor_compose(a, b) + mor_compose(a, c));
        CHECK(involution(involution(a)) == a);
        CHECK(mor_trace(mor_compose(a, b)) == mor_trace(mor_compose(b, a)));
        CHECK_THROWS_AS(a + Morphism(1, 2), std::invalid_argument);
    }

    TEST_CASE("x basis") {
        Category p = Category::named(Family::P);
        CHECK(x_basis(p, Pab()) == Morphism::basis(Pab()) - Morphism::basis(identity(1)));
        Category pe = Category::named(Family::P_even);
        CHECK(x_basis(pe, identity(2)) == Morphism::basis(identity(2)) - Morphism::basis(Paaaa()));
        // Unit triangular: x_q has coefficient 1 on q and otherwise only coarsenings.
        for (int k = 1; k <= 3; ++k)
            for (const auto& q : p.enumerate(k, k)) {
                Morphism x = x_basis(p, q);
                REQUIRE(x.coeff(q) == LaurentPoly(1));
                for (const auto& [r, c] : x.terms()) REQUIRE(refinement_leq(r, q));
            }
    }

    TEST_CASE("negligible morphisms") {
        Category p = Category::named(Family::P);
        CHECK(is_negligible(p, x_basis(p, identity(2)), 1));
        CHECK_FALSE(is_negligible(p, x_basis(p, identity(2)), 2));
        CHECK_FALSE(is_negligible(p, Morphism::basis(identity(2)), 1));
        Category nc2 = Category::named(Family::NC2);
        CHECK(is_negligible(nc2, e2(), 1));
        CHECK_FALSE(is_negligible(nc2, e2(), 3));
        CHECK(is_negligible(p, Morphism(2, 2), 5));
    }
}
