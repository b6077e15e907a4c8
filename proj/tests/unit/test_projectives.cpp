#include "doctest.h"
#include "oracles.hpp"
#include "partcat/category.hpp"
#include "partcat/perm_group.hpp"
#include "partcat/projectives.hpp"

using namespace partcat;

namespace {

Partition e_k1k2(int k1, int k2) { return tensor(identity(k1), tensor_power(Paaaa(), k2)); }

}  // namespace

TEST_SUITE("projectives") {
    TEST_CASE("permutation groups") {
        PermGroup s3 = PermGroup::symmetric(3);
        CHECK(s3.order() == 6);
        CHECK(s3.class_count() == 3);
        CHECK(s3.is_subgroup());
        CHECK(PermGroup::trivial(4).order() == 1);
        PermGroup prod = PermGroup::direct_product(PermGroup::symmetric(2), s3);
        CHECK(prod.degree() == 5);
        CHECK(prod.order() == 12);
        CHECK(prod.class_count() == 6);
        CHECK_FALSE(PermGroup(3, {perm_identity(3), {1, 2, 0}}).is_subgroup());
        Perm a = {1, 2, 0};
        CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
        for (int n = 0; n <= 12; ++n) CHECK(partition_count(n) == oracle::integer_partitions(n));
    }

    TEST_CASE("projective partitions") {
        CHECK(is_projective(Paaaa()));
        CHECK(is_projective(Paabb()));
        CHECK_FALSE(is_projective(Partition::from_blocks(3, 3, {{1, -3}, {2, 3}, {-1, -2}})));
        CHECK_FALSE(is_projective(Pabab()));
        CHECK_THROWS_AS(is_projective(upper_pair()), std::invalid_argument);
        CHECK(through_factor(Paaaa()) == Partition::from_blocks(2, 1, {{1, 2, -1}}));
        CHECK(through_factor(Paabb()) == upper_pair());
        CHECK_THROWS_AS(make_projective(Pabab()), std::invalid_argument);
        for (int k = 0; k <= 3; ++k)
            for (const auto& p : all_partitions(k, k))
                if (is_projective(p)) {
                    ProjectivePartition pp = make_projective(p);
                    REQUIRE(pp.T == through_blocks(p));
                    REQUIRE(twisted(pp.half, perm_identity(pp.T)) == p);
                }
    }

    TEST_CASE("groups S(p)") {
        for (Family f : {Family::P, Family::P2, Family::P_b})
            for (int k = 0; k <= 5; ++k) {
                PermGroup g = group_S(Category::named(f), make_projective(identity(k)));
                CHECK(g.order() == oracle::factorial(k));
                CHECK(g.class_count() == oracle::integer_partitions(k));
            }
        for (Family f : all_families()) {
            if (!family_is_noncrossing(f)) continue;
            Category c = Category::named(f);
            for (int k = 0; k <= 3; ++k)
                for (const auto& p : proj_C(c, k)) REQUIRE(group_S(c, make_projective(p)).order() == 1);
        }
        Category pe = Category::named(Family::P_even);
        for (int k1 = 0; k1 <= 5; ++k1)
            for (int k2 = 0; k1 + 2 * k2 <= 5; ++k2) {
                PermGroup g = group_S(pe, make_projective(e_k1k2(k1, k2)));
                CHECK(g.order() == oracle::factorial(k1) * oracle::factorial(k2));
                CHECK(g.class_count() == oracle::integer_partitions(k1) * oracle::integer_partitions(k2));
            }
        CHECK_THROWS_AS(group_S(Category::named(Family::P), make_projective(identity(8))), std::length_error);
    }

    TEST_CASE("equivalence") {
        Category pp = Category::named(Family::P_prime);
        for (int k = 2; k <= 4; ++k)
            CHECK(are_equivalent(pp, tensor(identity(k - 1), Pab()), tensor(identity(k - 2), Paaaa())));
        Category sharp = Category::named(Family::NC_b_sharp);
        const int k = 3;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                Partition pa = tensor(identity(a), tensor(Pab(), identity(k - 1 - a)));
                Partition pb = tensor(identity(b), tensor(Pab(), identity(k - 1 - b)));
                CHECK(are_equivalent(sharp, pa, pb) == (a == b));
            }
    }

    TEST_CASE("script P membership") {
        Category pe = Category::named(Family::P_even);
        auto sp = script_P(pe, 2);
        CHECK(std::find(sp.begin(), sp.end(), Paaaa()) != sp.end());
        CHECK(std::find(sp.begin(), sp.end(), Paabb()) == sp.end());
        CHECK(closed_form_in_script_P(Family::P_even, Paaaa()));
        CHECK_FALSE(closed_form_in_script_P(Family::P_even, Paabb()));
        // One through-block at k = 3, yet not a b* q b.
        Partition odd = tensor(Pab(), tensor(identity(1), Pab()));
        auto sharp = script_P(Category::named(Family::NC_b_sharp), 3);
        CHECK(std::find(sharp.begin(), sharp.end(), odd) != sharp.end());
        CHECK(through_blocks(odd) == 1);
        CHECK_FALSE(closed_form_in_script_P(Family::NC_b_sharp, tensor(Pab(), Pab())));
    }

    TEST_CASE("script P agrees with closed forms and the ideal route") {
        for (Family f : all_families()) {
            Category c = Category::named(f);
            for (int k = 0; k <= 4; ++k) {
                auto sp = script_P(c, k);
                std::set<Partition> in(sp.begin(), sp.end());
                for (const auto& p : proj_C(c, k)) REQUIRE(closed_form_in_script_P(f, p) == (in.count(p) > 0));
                if (k <= 3) REQUIRE(script_P_via_ideal(c, k) == sp);
            }
        }
    }

    TEST_CASE("census counts") {
        auto counts = [](Family f, int kmax) {
            std::vector<std::size_t> v;
            for (const auto& d : census(Category::named(f), kmax)) v.push_back(d.new_indecomposables);
            return v;
        };
        auto p = counts(Family::P, 4);
        for (int k = 0; k <= 4; ++k) CHECK(p[k] == oracle::integer_partitions(k));
        auto pe = counts(Family::P_even, 4);
        for (int k = 0; k <= 4; ++k) CHECK(pe[k] == oracle::bipartitions_split(k));
        auto ne = counts(Family::NC_even, 4);
        for (int k = 0; k <= 4; ++k) CHECK(ne[k] == oracle::fibonacci_words(k));
        for (Family f : {Family::P_prime, Family::P_b_prime}) {
            auto v = counts(f, 4);
            CHECK(v[0] == 1);
            for (int k = 1; k <= 4; ++k) CHECK(v[k] == oracle::integer_partitions(k) + oracle::integer_partitions(k - 1));
        }
        for (Family f : {Family::NC_prime, Family::NC_b_prime}) {
            auto v = counts(f, 4);
            CHECK(v[0] == 1);
            for (int k = 1; k <= 4; ++k) CHECK(v[k] == 2);
        }
        // Words in {id_1, Pab} without two adjacent Pab.
        auto sharp = counts(Family::NC_b_sharp, 5);
        for (int k = 0; k <= 5; ++k) CHECK(sharp[k] == oracle::fibonacci_words(k + 1));
        for (Family f : {Family::NC, Family::NC2, Family::NC_b})
            for (auto n : counts(f, 4)) CHECK(n == 1);
        CHECK_THROWS_AS(census(Category::named(Family::P), 2, 0), std::domain_error);
    }

    TEST_CASE("surjective description matches") {
        for (Family f : all_families()) {
            Category c = Category::named(f);
            auto cen = census(c, 3);
            for (const auto& d : surjective_census(c, cen)) {
                REQUIRE(d.bijection);
                REQUIRE(d.groups_match);
                REQUIRE(d.q_classes == d.p_classes);
            }
        }
    }
}
