#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ubp/conjugacy.hpp"

using namespace ubp;

namespace {

VectorPartition vp(std::vector<std::vector<int>> comps) {
    std::vector<Partition> parts;
    for (auto& c : comps) parts.emplace_back(c);
    return VectorPartition(std::move(parts));
}

} // namespace

TEST_CASE("omega powers") {
    SUBCASE("idempotents have omega exponent 1") {
        Diagram e = Diagram::idempotent_of(SetPartition::parse("12|3", 3));
        auto [pow, m] = omega(e);
        CHECK(pow == e);
        CHECK(m == 1);
    }
    SUBCASE("a 3-cycle has omega exponent 3") {
        auto [pow, m] = omega(Diagram::permutation({2, 3, 1}));
        CHECK(pow == Diagram::identity(3));
        CHECK(m == 3);
    }
    SUBCASE("a ten-vertex element with a late idempotent power") {
        Diagram x = Diagram::parse("1,7'|2,8'|6,6'|9,3'|3,4,4',5'|5,10,9',10'|7,8,1',2'", 10);
        Diagram e = Diagram::idempotent_of(SetPartition::parse("6|1,2|7,8|3,4,5,9,10", 10));
        // x^4 equals e, and the smallest idempotent power is in fact x^2:
        // the singleton blocks {1} and {2} already merge into {1,2} there
        Diagram x2 = multiply(x, x);
        Diagram x4 = multiply(x2, x2);
        CHECK(x4 == e);
        CHECK(x2 == e);
        CHECK(multiply(x, x) != x);
        auto [pow, m] = omega(x);
        CHECK(m == 2);
        CHECK(pow == e);
        CHECK(cycletype(x) == vp({{1}, {2}, {}, {}, {1}}));
    }
}

TEST_CASE("cycle types") {
    CHECK(cycletype(Diagram::identity(4)) == vp({{1, 1, 1, 1}}));
    SUBCASE("idempotents fix every block") {
        SetPartition pi = SetPartition::parse("1|2|34|567", 7);
        CHECK(cycletype(Diagram::idempotent_of(pi)) == vp({{1, 1}, {1}, {1}}));
    }
    SUBCASE("every cycle type lies in I_k and the classes partition U_k") {
        for (int k = 1; k <= 5; ++k) {
            auto ik = enumerate_Ik(k);
            std::set<VectorPartition> valid(ik.begin(), ik.end());
            std::map<VectorPartition, long long> sizes;
            for (const auto& d : enumerate_monoid(k, 6)) {
                VectorPartition ct = cycletype(d);
                CHECK(valid.count(ct) == 1);
                ++sizes[ct];
            }
            CHECK(sizes.size() == ik.size());
            long long total = 0;
            for (const auto& [mu, c] : sizes) total += c;
            CHECK(total == static_cast<long long>(monoid_order(k)));
        }
    }
}

TEST_CASE("class representatives") {
    CHECK(class_rep(vp({{1, 1, 1}})) == Diagram::identity(3));
    CHECK(class_rep(vp({{2, 1}})) == Diagram::parse("1,2'|2,1'|3,3'", 3));
    SUBCASE("the ((4,2),(2)) representative in U_10") {
        Diagram expected = Diagram::parse(
            "1,2'|2,3'|3,4'|4,1'|5,6'|6,5'|7,8,9',10'|9,10,7',8'", 10);
        CHECK(class_rep(vp({{4, 2}, {2}})) == expected);
    }
    SUBCASE("cycletype of class_rep is the identity map on I_k for k <= 6") {
        for (int k = 0; k <= 6; ++k)
            for (const auto& mu : enumerate_Ik(k)) CHECK(cycletype(class_rep(mu)) == mu);
    }
}

TEST_CASE("conjugacy class membership matches cycle type for k <= 3") {
    // c, d conjugate iff some x has x~x = c^w, xx~ = d^w, x c^(w+1) x~ = d^(w+1)
    for (int k = 1; k <= 3; ++k) {
        auto all = enumerate_monoid(k, 6);
        struct Data {
            Diagram e, f;
            VectorPartition ct;
        };
        std::vector<Data> data;
        for (const auto& d : all) {
            auto [e, m] = omega(d);
            data.push_back({e, multiply(e, d), cycletype(d)});
        }
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                bool conjugate = false;
                for (const auto& x : all) {
                    Diagram xi = involution(x);
                    if (multiply(xi, x) == data[i].e && multiply(x, xi) == data[j].e &&
                        multiply(multiply(x, data[i].f), xi) == data[j].f) {
                        conjugate = true;
                        break;
                    }
                }
                CHECK(conjugate == (data[i].ct == data[j].ct));
            }
    }
}

TEST_CASE("merge sets") {
    SUBCASE("three coarsenings of the (2,2) representative with top type (2,2)") {
        Diagram d = class_rep(vp({{2, 2}}));
        auto found = merge_set(d, Partition({2, 2}));
        REQUIRE(found.size() == 3);
        std::set<Diagram> expected{
            Diagram::idempotent_of(SetPartition::parse("12|34", 4)),
            Diagram::parse("1,3,2',4'|2,4,1',3'", 4),
            Diagram::parse("1,4,2',3'|2,3,1',4'", 4),
        };
        CHECK(std::set<Diagram>(found.begin(), found.end()) == expected);
    }
    SUBCASE("two elements of C(d_((4,2),(2)); (-,(2,1),-,(1)))") {
        Diagram d = class_rep(vp({{4, 2}, {2}}));
        CHECK(merge_set(d, vp({{}, {2, 1}, {}, {1}})).size() == 2);
    }
    SUBCASE("the identity merges only to itself at cycle type (1^k)") {
        Diagram one = Diagram::identity(3);
        auto found = merge_set(one, vp({{1, 1, 1}}));
        REQUIRE(found.size() == 1);
        CHECK(found[0] == one);
    }
    SUBCASE("resource guard") {
        CHECK_THROWS_AS(merge_set(Diagram::identity(5), Partition({5}), 4), std::runtime_error);
    }
}

TEST_CASE("merging one canonical r-cycle gives one s-cycle per divisor") {
    for (int r = 1; r <= 8; ++r) {
        Diagram d = class_rep(VectorPartition({Partition({r})}));
        int divisor_merges = 0;
        for (int s = 1; s <= r; ++s) {
            if (r % s) continue;
            std::vector<Partition> comps(r / s);
            comps[r / s - 1] = Partition({s});
            auto found = merge_set(d, VectorPartition(comps));
            CHECK(found.size() == 1);
            divisor_merges += static_cast<int>(found.size());
        }
        int all = 0;
        for (const Partition& lam : partitions_of(r))
            all += static_cast<int>(merge_set(d, lam).size());
        CHECK(all == divisor_merges);
    }
}

TEST_CASE("t canonical r-cycles merge into one r-cycle in r^(t-1) ways") {
    for (int r = 1; r <= 4; ++r)
        for (int t = 2; t <= 3; ++t) {
            Diagram d = class_rep(VectorPartition({Partition(std::vector<int>(t, r))}));
            std::vector<Partition> comps(t);
            comps[t - 1] = Partition({r});
            long long expected = 1;
            for (int i = 1; i < t; ++i) expected *= r;
            CHECK(static_cast<long long>(merge_set(d, VectorPartition(comps)).size()) ==
                  expected);
        }
}

TEST_CASE("b coefficients") {
    SUBCASE("three hand-enumerated values at mu = ((4,2),(2))") {
        VectorPartition mu = vp({{4, 2}, {2}});
        CHECK(b_coeff(mu, vp({{}, {2, 1}, {}, {1}})) == 2);
        CHECK(b_coeff(mu, vp({{}, {2}, {2}})) == 4);
        CHECK(b_coeff(mu, vp({{}, {2, 2, 1}})) == 1);
    }
    SUBCASE("formula equals brute-force merge count for every pair, k <= 5") {
        for (int k = 0; k <= 5; ++k) {
            auto ik = enumerate_Ik(k);
            for (const auto& mu : ik) {
                Diagram rep = class_rep(mu);
                for (const auto& nu : ik)
                    CHECK(b_coeff(mu, nu) == Int(merge_set(rep, nu).size()));
            }
        }
    }
}

TEST_CASE("B matrices match the known small tables") {
    SUBCASE("k = 2") {
        CharMatrix b = b_matrix(2);
        std::vector<std::vector<long long>> expected{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}};
        CHECK(b.entries == expected);
    }
    SUBCASE("k = 3") {
        CharMatrix b = b_matrix(3);
        std::vector<std::vector<long long>> expected{{1, 1, 1, 1, 1},
                                                     {0, 1, 0, 1, 3},
                                                     {0, 0, 1, 0, 0},
                                                     {0, 0, 0, 1, 0},
                                                     {0, 0, 0, 0, 1}};
        CHECK(b.entries == expected);
    }
    SUBCASE("k = 4") {
        CharMatrix b = b_matrix(4);
        std::vector<std::vector<long long>> expected{
            {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
            {0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 4},
            {0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 0},
            {0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 3},
            {0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0},
            {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 6},
            {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}};
        CHECK(b.entries == expected);
    }
    SUBCASE("upper unitriangular and nonnegative for k <= 5") {
        for (int k = 0; k <= 5; ++k) {
            CharMatrix b = b_matrix(k);
            CHECK(b.upper_unitriangular());
            CHECK(b.nonnegative());
        }
    }
}
