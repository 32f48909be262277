#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "cli.hpp"
#include "ubp/diagram.hpp"
#include "ubp/repmod.hpp"

using namespace ubp;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = ubpcli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("enumerate") {
    auto r = run_cli({"enumerate", "--k", "4", "--count"});
    CHECK(r.status == 0);
    CHECK(r.out == "131\n");
    auto listing = run_cli({"enumerate", "--k", "2"});
    CHECK(listing.status == 0);
    CHECK(listing.out == "1,2,1',2'\n1,1'|2,2'\n1,2'|2,1'\n");
}

TEST_CASE("multiply reproduces a hand-checked product") {
    auto r = run_cli({"multiply", "1,4,2',3'|2,1'|3,6,4',5'|5,6'",
                      "1,5,4',6'|2,2'|3,1'|4,5'|6,3'"});
    CHECK(r.status == 0);
    CHECK(r.out == Diagram::parse("1,4,1',2'|2,3,6,4',5',6'|5,3'", 6).to_string() + "\n");
}

TEST_CASE("factorize and cycletype") {
    auto f = run_cli({"factorize", "1,3,3',5'|2,4,1',2'|5,6'|6,4'"});
    CHECK(f.status == 0);
    CHECK(f.out.find("sigma:") != std::string::npos);
    auto c = run_cli({"cycletype", "1,2'|2,1'|3,3'"});
    CHECK(c.status == 0);
    CHECK(c.out == "[[2,1]]\n");
}

TEST_CASE("class-rep round-trips through cycletype") {
    auto r = run_cli({"class-rep", "--k", "4", "--mu", "[[2],[1]]"});
    CHECK(r.status == 0);
    Diagram d = Diagram::parse(r.out.substr(0, r.out.size() - 1), 4);
    auto c = run_cli({"cycletype", d.to_string()});
    CHECK(c.out == "[[2],[1]]\n");
}

TEST_CASE("green listings") {
    auto r = run_cli({"green", "--k", "3", "--list", "lclasses", "--format", "json"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"size\":6") != std::string::npos);
    auto g = run_cli({"green", "--k", "6", "--list", "subgroup", "--pi", "1|2|34|56"});
    CHECK(g.status == 0);
    CHECK(g.out.find("\"order\": 4") != std::string::npos);
}

TEST_CASE("module subcommand") {
    auto b = run_cli({"module", "--k", "3", "--shape", "[[1],[1]]", "--basis"});
    CHECK(b.status == 0);
    CHECK(b.out == "{3} ; {12}\n{2} ; {13}\n{1} ; {23}\n");
    auto a = run_cli({"module", "--k", "3", "--shape", "[[1],[1]]", "--act", "1,2'|2,1'|3,3'",
                      "--on", "{1};{23}"});
    CHECK(a.status == 0);
    CHECK(a.out == "1 * ({2} ; {13})\n");
    auto z = run_cli({"module", "--k", "3", "--shape", "[[1],[1]]", "--act",
                      "1,2,1',2'|3,3'", "--on", "{1};{23}"});
    CHECK(z.status == 0);
    CHECK(z.out == "0\n");
    auto m = run_cli({"module", "--k", "3", "--shape", "[[2,1]]", "--matrix", "1,2'|2,1'|3,3'"});
    CHECK(m.status == 0);
}

TEST_CASE("char-table both methods agree and print the table") {
    auto r = run_cli({"char-table", "--k", "2", "--method", "both"});
    CHECK(r.status == 0);
    CHECK(r.out.find("agree") != std::string::npos);
    auto json_out = run_cli({"char-table", "--k", "3", "--method", "frobenius", "--format",
                             "json"});
    CHECK(json_out.status == 0);
    CHECK(json_out.out.find("\"entries\"") != std::string::npos);
}

TEST_CASE("matrices subcommand emits all four tables") {
    auto r = run_cli({"matrices", "--k", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("X_2") != std::string::npos);
    CHECK(r.out.find("A_2") != std::string::npos);
    CHECK(r.out.find("B_2") != std::string::npos);
    CHECK(r.out.find("U_2") != std::string::npos);
}

TEST_CASE("pleth and sn-char") {
    auto p = run_cli({"pleth", "--shape", "[[],[1,1]]", "--k", "4"});
    CHECK(p.status == 0);
    CHECK(p.out == "s[3,1]: 1\n");
    auto p2 = run_cli({"pleth", "--shape", "[[],[2]]", "--k", "4"});
    CHECK(p2.out == "s[4]: 1\ns[2,2]: 1\n");  // reverse-lex order
    auto s = run_cli({"sn-char", "--lambda", "[2,1]", "--mu", "[3]"});
    CHECK(s.status == 0);
    CHECK(s.out == "-1\n");
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"nonsense"}).status == 2);
    CHECK(run_cli({"multiply", "1,2,1'|2'"}).status == 2);          // missing arg
    CHECK(run_cli({"multiply", "1,2,1'|3,2'", "1,1'|2,2'"}).status == 2);  // bad diagram
    CHECK(run_cli({"enumerate", "--k", "9"}).status == 2);          // over the bound
    CHECK(run_cli({"class-rep", "--k", "3", "--mu", "[[4]]"}).status == 2);
}

TEST_CASE("size bound overrides") {
    // --max-k raises the guard with a warning on stderr
    auto r = run_cli({"enumerate", "--k", "7", "--count", "--max-k", "7"});
    CHECK(r.status == 0);
    CHECK(r.out == "426833\n");
    auto blocked = run_cli({"module", "--k", "6", "--shape", "[[],[],[],[],[],[1]]",
                            "--basis"});
    CHECK(blocked.status == 2);
    auto allowed = run_cli({"module", "--k", "6", "--shape", "[[],[],[],[],[],[1]]",
                            "--basis", "--max-k", "6"});
    CHECK(allowed.status == 0);
    CHECK(allowed.err.find("warning") != std::string::npos);
    SUBCASE("UBP_MAX_K mirrors --max-k") {
        setenv("UBP_MAX_K", "6", 1);
        auto via_env = run_cli({"module", "--k", "6", "--shape", "[[],[],[],[],[],[1]]",
                                "--basis"});
        unsetenv("UBP_MAX_K");
        CHECK(via_env.status == 0);
    }
}

TEST_CASE("round trips over the test corpus") {
    SUBCASE("diagrams") {
        for (int k = 0; k <= 4; ++k)
            for (const auto& d : enumerate_monoid(k, 6))
                CHECK(Diagram::parse(d.to_string(), k) == d);
        std::mt19937 rng(5);
        auto all = enumerate_monoid(5, 6);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int i = 0; i < 300; ++i) {
            const Diagram& d = all[pick(rng)];
            CHECK(Diagram::parse(d.to_string()) == d);
        }
    }
    SUBCASE("vector partitions") {
        for (int k = 0; k <= 6; ++k)
            for (const auto& v : enumerate_Ik(k))
                CHECK(VectorPartition::parse(v.to_string()) == v);
    }
    SUBCASE("uniform tableaux, including multi-digit labels") {
        for (int k = 0; k <= 5; ++k)
            for (const auto& lam : enumerate_Ik(k))
                for (const auto& S : module_basis(lam))
                    CHECK(UniformTableau::parse(S.to_string(), k) == S);
        std::vector<Partition> comps(11);
        comps[0] = Partition({1});
        comps[4] = Partition({2});
        VectorPartition big(comps);  // one singleton, two 5-blocks in [11]
        for (const auto& S : module_basis(big))
            CHECK(UniformTableau::parse(S.to_string(), 11) == S);
    }
    SUBCASE("set partitions with elements above nine") {
        SetPartition pi = canonical_pi(Partition({4, 3, 2, 1, 1}));
        CHECK(SetPartition::parse(pi.to_string(), pi.k()) == pi);
        SetPartition singleton_ten = SetPartition::parse("10|1,2,3,4,5,6,7,8,9", 10);
        CHECK(SetPartition::parse(singleton_ten.to_string(), 10) == singleton_ten);
    }
}
