#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ubp/repmod.hpp"

using namespace ubp;

namespace {

VectorPartition vp(std::vector<std::vector<int>> comps) {
    std::vector<Partition> parts;
    for (auto& c : comps) parts.emplace_back(c);
    return VectorPartition(std::move(parts));
}

std::vector<std::vector<long long>> matprod(const std::vector<std::vector<long long>>& a,
                                            const std::vector<std::vector<long long>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<long long>> r(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long s = 0;
            for (std::size_t t = 0; t < n; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

} // namespace

TEST_CASE("module bases") {
    SUBCASE("the fifteen uniform tableaux of shape ((1),(1,1))") {
        auto basis = module_basis(vp({{1}, {1, 1}}));
        CHECK(basis.size() == 15);
        std::set<UniformTableau> dedup(basis.begin(), basis.end());
        CHECK(dedup.size() == 15);
        // spot check two hand-built tableaux
        CHECK(dedup.count(UniformTableau::parse("{1};{23}/{45}", 5)) == 1);
        CHECK(dedup.count(UniformTableau::parse("{5};{23}/{14}", 5)) == 1);
    }
    SUBCASE("shape ((1),(1)) in U_3 has exactly three tableaux") {
        auto basis = module_basis(vp({{1}, {1}}));
        REQUIRE(basis.size() == 3);
        std::set<UniformTableau> dedup(basis.begin(), basis.end());
        CHECK(dedup.count(UniformTableau::parse("{1};{23}", 3)) == 1);
        CHECK(dedup.count(UniformTableau::parse("{2};{13}", 3)) == 1);
        CHECK(dedup.count(UniformTableau::parse("{3};{12}", 3)) == 1);
    }
    SUBCASE("a single full block") {
        CHECK(module_basis(vp({{}, {}, {}, {1}})).size() == 1);
    }
}

TEST_CASE("dimension formula") {
    CHECK(module_dim(vp({{1}, {1}})) == 3);
    CHECK(module_dim(vp({{2, 1}})) == 2);
    SUBCASE("matches basis size and semisimplicity for k <= 5") {
        static const long long orders[] = {1, 1, 3, 16, 131, 1496};
        for (int k = 0; k <= 5; ++k) {
            Int total = 0;
            for (const auto& lam : enumerate_Ik(k)) {
                Int d = module_dim(lam);
                CHECK(Int(module_basis(lam).size()) == d);
                total += d * d;
            }
            CHECK(total == orders[k]);
        }
    }
}

TEST_CASE("generator actions on uniform tableaux") {
    UniformTableau S = UniformTableau::parse("{1};{23}", 3);
    SUBCASE("b_2 fixes, b_1 kills") {
        auto fixed = act(Diagram::gen_b(3, 2), S);
        REQUIRE(fixed.size() == 1);
        CHECK(fixed.begin()->first == S);
        CHECK(fixed.begin()->second == 1);
        CHECK(act(Diagram::gen_b(3, 1), S).empty());
    }
    SUBCASE("s_1 interchanges 1 and 2") {
        auto moved = act(Diagram::gen_s(3, 1), S);
        REQUIRE(moved.size() == 1);
        CHECK(moved.begin()->first == UniformTableau::parse("{2};{13}", 3));
        CHECK(moved.begin()->second == 1);
    }
}

TEST_CASE("the seventeen-vertex golden action") {
    UniformTableau S = UniformTableau::parse(
        "{2},{7}/{16} ; {1,3},{6,13}/{5,11},{9,14} ; {4,10,12}/{8,15,17}", 17);
    CHECK(S.shape() == vp({{2, 1}, {2, 2}, {1, 1}}));
    Diagram d = Diagram::parse(
        "2,8'|8,2'|9,16'|10,13'|11,7'|12,6'|14,10'|15,3'|17,1'|"
        "1,4,5',11'|6,7,9',14'|3,13,4',12'|5,16,15',17'",
        17);
    auto result = act(d, S);
    REQUIRE(result.size() == 2);
    UniformTableau plus = UniformTableau::parse(
        "{8},{11}/{9} ; {1,4},{6,7}/{10,12},{15,17} ; {3,13,14}/{2,5,16}", 17);
    UniformTableau minus = UniformTableau::parse(
        "{8},{11}/{9} ; {1,4},{10,12}/{6,7},{15,17} ; {3,13,14}/{2,5,16}", 17);
    REQUIRE(result.count(plus) == 1);
    REQUIRE(result.count(minus) == 1);
    CHECK(result.at(plus) == 1);
    CHECK(result.at(minus) == -1);
}

TEST_CASE("zero rule matches refinement for all of U_3") {
    for (const auto& lam : enumerate_Ik(3))
        for (const auto& S : module_basis(lam))
            for (const auto& d : enumerate_monoid(3, 6))
                CHECK(act(d, S).empty() == !is_finer(d.bot(), S.entries()));
}

TEST_CASE("the action is multiplicative (contravariant matrices)") {
    std::mt19937 rng(31337);
    for (int k = 2; k <= 4; ++k) {
        auto all = enumerate_monoid(k, 6);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (const auto& lam : enumerate_Ik(k))
            for (int round = 0; round < 12; ++round) {
                const Diagram& x = all[pick(rng)];
                const Diagram& y = all[pick(rng)];
                CHECK(action_matrix(multiply(x, y), lam) ==
                      matprod(action_matrix(y, lam), action_matrix(x, lam)));
            }
    }
}

TEST_CASE("presentation relations hold in every module for k <= 4") {
    for (int k = 2; k <= 4; ++k)
        for (const auto& lam : enumerate_Ik(k)) {
            std::size_t dim = module_basis(lam).size();
            std::vector<std::vector<long long>> id(dim, std::vector<long long>(dim, 0));
            for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
            for (int i = 1; i < k; ++i) {
                auto S = action_matrix(Diagram::gen_s(k, i), lam);
                auto B = action_matrix(Diagram::gen_b(k, i), lam);
                CHECK(matprod(S, S) == id);
                CHECK(matprod(B, B) == B);
                CHECK(matprod(S, B) == B);
                CHECK(matprod(B, S) == B);
                // b_i acts as a diagonal 0/1 projection
                for (std::size_t r = 0; r < dim; ++r)
                    for (std::size_t c = 0; c < dim; ++c)
                        CHECK((r == c ? (B[r][c] == 0 || B[r][c] == 1) : B[r][c] == 0));
            }
            for (int i = 1; i + 1 < k; ++i) {
                auto S1 = action_matrix(Diagram::gen_s(k, i), lam);
                auto S2 = action_matrix(Diagram::gen_s(k, i + 1), lam);
                auto B1 = action_matrix(Diagram::gen_b(k, i), lam);
                auto B2 = action_matrix(Diagram::gen_b(k, i + 1), lam);
                CHECK(matprod(matprod(S1, S2), S1) == matprod(matprod(S2, S1), S2));
                // contravariant: matrix of s_i b_{i+1} s_i is M(s_i)M(b_{i+1})M(s_i)
                CHECK(matprod(matprod(S1, B2), S1) == matprod(matprod(S2, B1), S2));
            }
        }
}

TEST_CASE("character values") {
    CHECK(char_trace(vp({{}, {1, 1}}), vp({{2, 2}})) == -1);
    CHECK(char_trace(vp({{2, 1}}), vp({{3}})) == -1);
    SUBCASE("the character table of U_2") {
        CharMatrix m = character_table_trace(2);
        std::vector<std::vector<long long>> expected{{1, 1, 1}, {0, 1, 1}, {0, -1, 1}};
        CHECK(m.entries == expected);
    }
    SUBCASE("the character table of U_3") {
        CharMatrix m = character_table_trace(3);
        std::vector<std::vector<long long>> expected{{1, 1, 1, 1, 1},
                                                     {0, 1, 0, 1, 3},
                                                     {0, 0, 1, 1, 1},
                                                     {0, 0, -1, 0, 2},
                                                     {0, 0, 1, -1, 1}};
        CHECK(m.entries == expected);
    }
    SUBCASE("identity column equals dimensions") {
        for (int k = 0; k <= 4; ++k) {
            CharMatrix m = character_table_trace(k);
            int last = m.size() - 1;
            for (int r = 0; r < m.size(); ++r)
                CHECK(Int(m.at(r, last)) == module_dim(m.order[r]));
        }
    }
    SUBCASE("class-sum formula agrees with traces for k <= 3") {
        for (int k = 0; k <= 3; ++k) {
            auto ik = enumerate_Ik(k);
            for (const auto& lam : ik)
                for (const auto& mu : ik)
                    CHECK(char_via_classsum(lam, mu) == char_trace(lam, mu));
        }
    }
    SUBCASE("parallel assembly matches serial") {
        CHECK(character_table_trace(3, 4) == character_table_trace(3));
    }
}

TEST_CASE("argument errors") {
    UniformTableau S = UniformTableau::parse("{1};{23}", 3);
    CHECK_THROWS_AS(act(Diagram::identity(4), S), std::invalid_argument);
    CHECK_THROWS_AS(multiply(Diagram::identity(3), Diagram::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("all matrix entries are integers by construction") {
    // representative sample: entries come out of straighten, which is integral
    for (const auto& lam : enumerate_Ik(4)) {
        auto m = action_matrix(class_rep(vp({{2}, {1}})), lam);
        CHECK(m.size() == module_basis(lam).size());
    }
}
