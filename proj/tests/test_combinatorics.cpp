#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ubp/partition.hpp"
#include "ubp/setpartition.hpp"

using namespace ubp;

namespace {

VectorPartition vp(std::vector<std::vector<int>> comps) {
    std::vector<Partition> parts;
    for (auto& c : comps) parts.emplace_back(c);
    return VectorPartition(std::move(parts));
}

} // namespace

TEST_CASE("partitions of n are generated in reverse-lex order") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<int>{4});
    CHECK(p4[1].parts() == std::vector<int>{3, 1});
    CHECK(p4[2].parts() == std::vector<int>{2, 2});
    CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});
    for (std::size_t i = 0; i + 1 < p4.size(); ++i) CHECK(rl_less(p4[i], p4[i + 1]));
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
}

TEST_CASE("enumerate_Ik") {
    SUBCASE("k = 0 has the empty vector partition only") {
        auto i0 = enumerate_Ik(0);
        REQUIRE(i0.size() == 1);
        CHECK(i0[0].slots() == 0);
    }
    SUBCASE("k = 3 matches the character table row labels") {
        auto i3 = enumerate_Ik(3);
        REQUIRE(i3.size() == 5);
        CHECK(i3[0] == vp({{}, {}, {1}}));
        CHECK(i3[1] == vp({{1}, {1}}));
        CHECK(i3[2] == vp({{3}}));
        CHECK(i3[3] == vp({{2, 1}}));
        CHECK(i3[4] == vp({{1, 1, 1}}));
    }
    SUBCASE("k = 4 has 11 elements in table row order") {
        auto i4 = enumerate_Ik(4);
        REQUIRE(i4.size() == 11);
        CHECK(i4[0] == vp({{}, {}, {}, {1}}));
        CHECK(i4[1] == vp({{1}, {}, {1}}));
        CHECK(i4[2] == vp({{}, {2}}));
        CHECK(i4[3] == vp({{}, {1, 1}}));
        CHECK(i4[4] == vp({{2}, {1}}));
        CHECK(i4[5] == vp({{1, 1}, {1}}));
        CHECK(i4[6] == vp({{4}}));
        CHECK(i4[7] == vp({{3, 1}}));
        CHECK(i4[8] == vp({{2, 2}}));
        CHECK(i4[9] == vp({{2, 1, 1}}));
        CHECK(i4[10] == vp({{1, 1, 1, 1}}));
    }
    SUBCASE("strictly increasing, no duplicates, all weights k") {
        for (int k = 0; k <= 7; ++k) {
            auto ik = enumerate_Ik(k);
            for (std::size_t i = 0; i + 1 < ik.size(); ++i) CHECK(ik[i] < ik[i + 1]);
            for (const auto& v : ik) CHECK(v.weight() == k);
        }
        CHECK(enumerate_Ik(5).size() == 17);
        CHECK(enumerate_Ik(6).size() == 34);
    }
}

TEST_CASE("sp_count matches exhaustive enumeration") {
    CHECK(sp_count(3, Partition({1, 1, 1})) == 1);
    CHECK(sp_count(3, Partition({2, 1})) == 3);
    CHECK(sp_count(4, Partition({2, 2})) == 3);
    CHECK_THROWS_AS(sp_count(4, Partition({2, 1})), std::invalid_argument);
    for (int k = 0; k <= 8; ++k)
        for (const Partition& lam : partitions_of(k))
            CHECK(Int(enumerate_set_partitions(k, lam).size()) == sp_count(k, lam));
}

TEST_CASE("set partition type filter and count") {
    auto all3 = enumerate_set_partitions(3);
    CHECK(all3.size() == 5);
    auto t22 = enumerate_set_partitions(4, Partition({2, 2}));
    REQUIRE(t22.size() == 3);
    std::set<SetPartition> found(t22.begin(), t22.end());
    std::set<SetPartition> expected{SetPartition::parse("12|34", 4),
                                    SetPartition::parse("13|24", 4),
                                    SetPartition::parse("14|23", 4)};
    CHECK(found == expected);
    // graded last letter order lists {2,3} before {1,4}
    CHECK(SetPartition::parse("14|23", 4).to_string() == "23|14");
    CHECK(enumerate_set_partitions(0).size() == 1);
}

TEST_CASE("join") {
    auto p = [](const char* s, int k) { return SetPartition::parse(s, k); };
    CHECK(join(p("12|3", 3), p("1|23", 3)) == p("123", 3));
    CHECK(join(p("1|2|3", 3), p("1|2|3", 3)) == p("1|2|3", 3));
    CHECK(join(p("12|34", 4), p("13|24", 4)) == p("1234", 4));
    CHECK_THROWS_AS(join(p("12", 2), p("123", 3)), std::invalid_argument);
    SUBCASE("monoid laws on all pairs for k <= 5") {
        for (int k = 1; k <= 5; ++k) {
            auto parts = enumerate_set_partitions(k);
            SetPartition unit = SetPartition::discrete(k);
            for (const auto& a : parts) {
                CHECK(join(a, unit) == a);
                CHECK(join(a, a) == a);
                for (const auto& b : parts) {
                    CHECK(join(a, b) == join(b, a));
                    CHECK(is_finer(a, b) == (join(a, b) == b));
                }
            }
        }
    }
}

TEST_CASE("z weights") {
    CHECK(vp({{1, 1, 1}}).z() == 6);
    CHECK(vp({{2, 2}}).z() == 8);
    CHECK(vp({{}, {}, {1}}).z() == 1);
    CHECK(VectorPartition().z() == 1);
}

TEST_CASE("graded last letter order sorts blocks totally") {
    SetPartition pi = SetPartition::parse("4|16|38|257", 8);
    REQUIRE(pi.block_count() == 4);
    CHECK(pi.block(0) == std::vector<int>{4});
    CHECK(pi.block(1) == std::vector<int>{1, 6});
    CHECK(pi.block(2) == std::vector<int>{3, 8});
    CHECK(pi.block(3) == std::vector<int>{2, 5, 7});
    CHECK(pi.type().parts() == std::vector<int>{3, 2, 2, 1});
    for (const auto& sp : enumerate_set_partitions(5))
        for (int i = 0; i + 1 < sp.block_count(); ++i)
            CHECK(block_less(sp.block(i), sp.block(i + 1)));
}

TEST_CASE("vector partition display drops trailing empties") {
    VectorPartition v = vp({{2}, {}, {}, {}});
    CHECK(v.slots() == 1);
    CHECK(v.to_string() == "[[2]]");
    CHECK(VectorPartition::parse("[[2,1],[],[3,1,1],[2,2]]").to_string() == "[[2,1],[],[3,1,1],[2,2]]");
    CHECK(vp({{}, {2}}).type_up().parts() == std::vector<int>{2, 2});
}

TEST_CASE("counts are exact big integers") {
    // a value beyond 64-bit range must survive
    Int big = factorial(25);
    CHECK(big > Int("15000000000000000000000000"));
    CHECK(sp_count(20, Partition(std::vector<int>(20, 1))) == 1);
}
