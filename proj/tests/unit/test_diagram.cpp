#include "doctest.h"
#include "oracles.hpp"
#include "partcat/partition.hpp"

using namespace partcat;

namespace {

// Blocks given by positive indices of lower points.
Partition lower(int l, std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks)
        for (int& x : b) x = -x;
    return Partition::from_blocks(0, l, blocks);
}

}  // namespace

TEST_SUITE("diagram") {
    TEST_CASE("canonical labels make equal partitions identical") {
        Partition a = Partition::from_blocks(2, 2, {{1, -1}, {2, -2}});
        Partition b = Partition::from_blocks(2, 2, {{-2, 2}, {-1, 1}});
        CHECK(a == b);
        CHECK(a.hash() == b.hash());
        CHECK(a == identity(2));
        CHECK(parse_text(to_text(Pabcb())) == Pabcb());
    }

    TEST_CASE("letter shorthands") {
        CHECK(Pab() == Partition::from_blocks(1, 1, {{1}, {-1}}));
        CHECK(Paaaa() == one_block(2, 2));
        CHECK(Pabab() == Partition::from_blocks(2, 2, {{1, -2}, {2, -1}}));
        CHECK(Paabb() == Partition::from_blocks(2, 2, {{1, 2}, {-1, -2}}));
        CHECK(Paaab() == Partition::from_blocks(2, 2, {{1, 2, -2}, {-1}}));
        CHECK(Pabcb() == Partition::from_blocks(2, 2, {{1}, {2, -1}, {-2}}));
    }

    TEST_CASE("tensor example") {
        Partition p = tensor(tensor(lower_pair(), identity(1)), upper_pair());
        CHECK(p == Partition::from_blocks(3, 3, {{1, -3}, {2, 3}, {-1, -2}}));
    }

    TEST_CASE("involution") {
        CHECK(involution(lower_pair()) == upper_pair());
        CHECK(involution(Partition::from_blocks(2, 2, {{1, -1, -2}, {2}})) == Partition::from_blocks(2, 2, {{1, 2, -1}, {-2}}));
        for (const auto& p : all_partitions(2, 3)) CHECK(involution(involution(p)) == p);
    }

    TEST_CASE("compose examples") {
        CompositionResult r = compose(lower_pair(), upper_pair());
        CHECK(r.partition == Paabb());
        CHECK(r.loops == 0);
        r = compose(Paaaa(), Paaaa());
        CHECK(r.partition == Paaaa());
        CHECK(r.loops == 0);
        r = compose(upper_pair(), lower_pair());
        CHECK(r.partition == Partition());
        CHECK(r.loops == 1);
        r = compose(Paabb(), Paabb());
        CHECK(r.partition == Paabb());
        CHECK(r.loops == 1);
        CHECK(compose(Pabab(), Pabab()).partition == identity(2));
        CHECK_THROWS_AS(compose(identity(1), identity(2)), std::invalid_argument);
    }

    TEST_CASE("compose agrees with the search oracle") {
        for (int k = 0; k <= 2; ++k)
            for (int m = 0; m <= 3; ++m)
                for (int l = 0; l <= 2; ++l)
                    for (const auto& p : all_partitions(k, m))
                        for (const auto& q : all_partitions(m, l)) {
                            CompositionResult a = compose(q, p);
                            oracle::Composite b = oracle::compose(q, p);
                            REQUIRE(a.partition == b.partition);
                            REQUIRE(a.loops == b.loops);
                        }
    }

    TEST_CASE("through blocks") {
        CHECK(through_blocks(Paabb()) == 0);
        CHECK(through_blocks(Paaaa()) == 1);
        CHECK(through_blocks(identity(4)) == 4);
    }

    TEST_CASE("refinement and meet") {
        Partition a = lower(4, {{1, 3}, {2}, {4}});
        Partition b = lower(4, {{2, 4}, {1}, {3}});
        Partition ab = lower(4, {{1, 3}, {2, 4}});
        CHECK(refinement_leq(ab, a));
        CHECK(refinement_leq(ab, b));
        CHECK_FALSE(refinement_leq(a, ab));
        CHECK(meet(a, b) == ab);
        CHECK(meet(lower(4, {{1, 2}, {3, 4}}), lower(4, {{1, 4}, {2, 3}})) == one_block(0, 4));
        CHECK(is_noncrossing(a));
        CHECK_FALSE(is_noncrossing(ab));
    }

    TEST_CASE("noncrossing agrees with the quartic oracle") {
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; k + l <= 6; ++l)
                for (const auto& p : all_partitions(k, l)) REQUIRE(is_noncrossing(p) == oracle::noncrossing(p));
    }

    TEST_CASE("rotation") {
        CHECK(rotate_to_flat(identity(1)) == lower_pair());
        CHECK(rotate_to_flat(Pab()) == all_singletons(0, 2));
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; k + l <= 5; ++l)
                for (const auto& p : all_partitions(k, l)) {
                    REQUIRE(unflatten(rotate_to_flat(p), k) == p);
                    if (k > 0) REQUIRE(rotate_lower_left(rotate_upper_left(p)) == p);
                    if (l > 0) REQUIRE(rotate_upper_right(rotate_lower_right(p)) == p);
                    REQUIRE(is_noncrossing(rotate_to_flat(p)) == is_noncrossing(p));
                }
    }

    TEST_CASE("trace closure") {
        CHECK(close_trace(Pabab()) == 1);
        CHECK(close_trace(Paabb()) == 1);
        CHECK(close_trace(identity(3)) == 3);
        CHECK(close_trace(one_block(2, 2)) == 1);
        for (int k = 0; k <= 3; ++k)
            for (const auto& p : all_partitions(k, k)) REQUIRE(close_trace(p) == close_trace_nested(p));
    }

    TEST_CASE("enumeration counts") {
        for (int n = 0; n <= 8; ++n) CHECK(all_partitions(0, n).size() == oracle::bell(n));
        for (int n = 0; n <= 7; ++n) CHECK(oracle::set_partitions(n).size() == oracle::bell(n));
        CHECK(all_partitions(0, 6, 2).size() == 76);  // involutions of 6
    }

    TEST_CASE("associativity and interchange") {
        std::vector<Partition> p11 = all_partitions(1, 1), p12 = all_partitions(1, 2), p21 = all_partitions(2, 1), p22 = all_partitions(2, 2);
        for (const auto& a : p12)
            for (const auto& b : p22)
                for (const auto& c : p21) {
                    CompositionResult ab = compose(b, a), bc = compose(c, b);
                    CompositionResult left = compose(c, ab.partition), right = compose(bc.partition, a);
                    REQUIRE(left.partition == right.partition);
                    REQUIRE(left.loops + ab.loops == right.loops + bc.loops);
                }
        for (const auto& a : p11)
            for (const auto& b : p12)
                for (const auto& c : p22)
                    for (const auto& d : p21) {
                        CompositionResult ca = compose(b, a), db = compose(d, c);
                        CompositionResult lhs = compose(tensor(b, d), tensor(a, c));
                        REQUIRE(lhs.partition == tensor(ca.partition, db.partition));
                        REQUIRE(lhs.loops == ca.loops + db.loops);
                    }
    }

    TEST_CASE("blocks of the join count loops") {
        for (int k = 0; k <= 5; ++k) {
            auto ps = all_partitions(0, k);
            for (const auto& u : ps)
                for (const auto& v : ps) REQUIRE(meet(u, v).block_count() == compose(involution(u), v).loops);
        }
    }

    TEST_CASE("point cap") {
        CHECK_THROWS(identity(kMaxPoints));
        CHECK_NOTHROW(identity(kMaxPoints / 2));
    }
}
