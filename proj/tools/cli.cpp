#include "cli.hpp"

#include <cstdlib>
#include <exception>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ubp/conjugacy.hpp"
#include "ubp/diagram.hpp"
#include "ubp/green.hpp"
#include "ubp/repmod.hpp"
#include "ubp/specht.hpp"
#include "ubp/symfunc.hpp"
#include "ubp/verify.hpp"

namespace ubpcli {

namespace {

using nlohmann::json;
using namespace ubp;

constexpr int kMonoidBound = 6;   // full-monoid operations
constexpr int kModuleBound = 5;   // module and character operations
constexpr int kSymfuncBound = 7;  // symmetric function matrices

struct Options {
    std::string format = "text";
    int max_k = 0;  // 0 = use per-area defaults
    int jobs = 1;
};

int effective_bound(const Options& opt, int area_default, std::ostream& err) {
    if (opt.max_k <= 0) return area_default;
    if (opt.max_k > area_default)
        err << "warning: raising the size bound to " << opt.max_k
            << "; expect long runtimes\n";
    return opt.max_k;
}

json vp_json(const VectorPartition& vp) {
    json arr = json::array();
    for (int i = 1; i <= vp.slots(); ++i) arr.push_back(vp.component(i).parts());
    return arr;
}

json matrix_json(const CharMatrix& m) {
    json order = json::array();
    for (const auto& vp : m.order) order.push_back(vp_json(vp));
    return json{{"k", m.k}, {"order", order}, {"entries", m.entries}};
}

json multisym_json(const MultiSym& f) {
    json arr = json::array();
    for (const auto& [key, c] : f.terms()) {
        arr.push_back(json{{"vector_partition", vp_json(key)},
                           {"numerator", boost::multiprecision::numerator(c).str()},
                           {"denominator", boost::multiprecision::denominator(c).str()}});
    }
    return arr;
}

Partition parse_partition_arg(const std::string& text) {
    std::vector<int> parts;
    std::string cleaned;
    for (char c : text)
        if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    std::stringstream ss(cleaned);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

void print_matrix(std::ostream& out, const Options& opt, const std::string& name,
                  const CharMatrix& m) {
    if (opt.format == "json") {
        json j = matrix_json(m);
        j["name"] = name;
        out << j.dump() << "\n";
    } else {
        out << name << ":\n" << m.to_text() << "\n";
    }
}

int cmd_enumerate(const Options& opt, int k, bool count_only, std::ostream& out,
                  std::ostream& err) {
    if (count_only) {
        out << monoid_order(k) << "\n";
        return 0;
    }
    int bound = effective_bound(opt, kMonoidBound, err);
    if (k > bound) {
        err << "enumerate: k exceeds the bound " << bound << " (use --max-k to override)\n";
        return 2;
    }
    auto all = enumerate_monoid(k, bound);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& d : all) arr.push_back(d.to_string());
        out << arr.dump() << "\n";
    } else {
        for (const auto& d : all) out << d.to_string() << "\n";
    }
    return 0;
}

int cmd_green(const Options& opt, int k, const std::string& what, const std::string& pi_text,
              std::ostream& out, std::ostream& err) {
    int bound = effective_bound(opt, kMonoidBound, err);
    if (what != "subgroup" && k > bound) {
        err << "green: k exceeds the bound " << bound << " (use --max-k to override)\n";
        return 2;
    }
    json result;
    if (what == "jclasses") {
        result = json::array();
        for (const Partition& lam : partitions_of(k)) {
            json cls;
            cls["type"] = lam.parts();
            json elems = json::array();
            for (const auto& d : jclass(k, lam)) elems.push_back(d.to_string());
            cls["size"] = elems.size();
            cls["elements"] = elems;
            result.push_back(cls);
        }
    } else if (what == "lclasses") {
        result = json::array();
        for (const SetPartition& pi : enumerate_set_partitions(k)) {
            json cls;
            cls["bot"] = pi.to_string();
            json elems = json::array();
            for (const auto& d : lclass(pi)) elems.push_back(d.to_string());
            cls["size"] = elems.size();
            cls["elements"] = elems;
            result.push_back(cls);
        }
    } else if (what == "subgroup") {
        SetPartition pi = SetPartition::parse(pi_text, k);
        auto G = maximal_subgroup(pi);
        result["pi"] = pi.to_string();
        json elems = json::array();
        for (const auto& g : G.elements)
            elems.push_back(json{{"diagram", g.diagram.to_string()},
                                 {"block_permutation", g.block_perm}});
        result["order"] = elems.size();
        result["elements"] = elems;
    } else {
        err << "green: unknown listing '" << what << "'\n";
        return 2;
    }
    out << result.dump(opt.format == "json" ? -1 : 2) << "\n";
    return 0;
}

int cmd_module(const Options& opt, int k, const std::string& shape_text, bool basis_flag,
               const std::string& act_text, const std::string& on_text,
               const std::string& matrix_text, std::ostream& out, std::ostream& err) {
    int bound = effective_bound(opt, kModuleBound, err);
    if (k > bound) {
        err << "module: k exceeds the bound " << bound << " (use --max-k to override)\n";
        return 2;
    }
    VectorPartition shape = VectorPartition::parse(shape_text);
    if (shape.weight() != k) {
        err << "module: shape is not in I_" << k << "\n";
        return 2;
    }
    if (basis_flag) {
        auto basis = module_basis(shape);
        if (opt.format == "json") {
            json arr = json::array();
            for (const auto& t : basis) arr.push_back(t.to_string());
            out << arr.dump() << "\n";
        } else {
            for (const auto& t : basis) out << t.to_string() << "\n";
        }
        return 0;
    }
    if (!act_text.empty()) {
        Diagram d = Diagram::parse(act_text, k);
        UniformTableau S = UniformTableau::parse(on_text, k);
        auto result = act(d, S);
        if (opt.format == "json") {
            json arr = json::array();
            for (const auto& [t, c] : result)
                arr.push_back(json{{"tableau", t.to_string()}, {"coefficient", c}});
            out << arr.dump() << "\n";
        } else if (result.empty()) {
            out << "0\n";
        } else {
            bool first = true;
            for (const auto& [t, c] : result) {
                out << (first ? "" : " + ") << c << " * (" << t.to_string() << ")";
                first = false;
            }
            out << "\n";
        }
        return 0;
    }
    if (!matrix_text.empty()) {
        Diagram d = Diagram::parse(matrix_text, k);
        auto m = action_matrix(d, shape);
        if (opt.format == "json") {
            out << json(m).dump() << "\n";
        } else {
            for (const auto& row : m) {
                for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
                out << "\n";
            }
        }
        return 0;
    }
    err << "module: one of --basis, --act/--on, --matrix is required\n";
    return 2;
}

int cmd_char_table(const Options& opt, int k, const std::string& method, std::ostream& out,
                   std::ostream& err) {
    int bound = effective_bound(opt, kModuleBound, err);
    if (method != "frobenius" && k > bound) {
        err << "char-table: k exceeds the bound " << bound << " (use --max-k to override)\n";
        return 2;
    }
    int sbound = effective_bound(opt, kSymfuncBound, err);
    if (method != "trace" && k > sbound) {
        err << "char-table: k exceeds the bound " << sbound << " (use --max-k to override)\n";
        return 2;
    }
    if (method == "trace") {
        print_matrix(out, opt, "X_" + std::to_string(k) + " (trace)",
                     character_table_trace(k, opt.jobs));
        return 0;
    }
    if (method == "frobenius") {
        print_matrix(out, opt, "X_" + std::to_string(k) + " (frobenius)", X_matrix(k));
        return 0;
    }
    CharMatrix a = character_table_trace(k, opt.jobs);
    CharMatrix b = X_matrix(k);
    print_matrix(out, opt, "X_" + std::to_string(k), a);
    if (a == b) {
        out << "trace and frobenius tables agree\n";
        return 0;
    }
    err << "char-table: trace and frobenius tables DISAGREE\n";
    for (int r = 0; r < a.size(); ++r)
        for (int c = 0; c < a.size(); ++c)
            if (a.at(r, c) != b.at(r, c))
                err << "  at (" << a.order[r].to_string() << ", " << a.order[c].to_string()
                    << "): trace " << a.at(r, c) << " vs frobenius " << b.at(r, c) << "\n";
    return 1;
}

int cmd_matrices(const Options& opt, int k, const std::string& which, std::ostream& out,
                 std::ostream& err) {
    int bound = effective_bound(opt, kSymfuncBound, err);
    if (k > bound) {
        err << "matrices: k exceeds the bound " << bound << " (use --max-k to override)\n";
        return 2;
    }
    bool all = which == "all";
    if (all || which == "X") print_matrix(out, opt, "X_" + std::to_string(k), X_matrix(k));
    if (all || which == "A") print_matrix(out, opt, "A_" + std::to_string(k), A_matrix(k));
    if (all || which == "B") print_matrix(out, opt, "B_" + std::to_string(k), b_matrix(k));
    if (all || which == "U") print_matrix(out, opt, "U_" + std::to_string(k), U_matrix(k));
    return 0;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"uniform block permutations: enumeration, representations, characters"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    if (const char* env = std::getenv("UBP_MAX_K")) opt.max_k = std::atoi(env);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-k", opt.max_k, "override the default size bounds");
    app.add_option("--jobs", opt.jobs, "worker threads for table assembly");

    int k = 0;
    bool count_only = false;
    std::string d1, d2, mu_text, shape_text, lambda_text, list_what = "jclasses", pi_text;
    std::string act_text, on_text, matrix_text, method = "both", which = "all", level = "fast";
    bool basis_flag = false;

    auto* c_enum = app.add_subcommand("enumerate", "list or count the monoid elements");
    c_enum->add_option("--k", k, "size")->required();
    c_enum->add_flag("--count", count_only, "print |U_k| from the closed formula");

    auto* c_mul = app.add_subcommand("multiply", "product of two diagrams");
    c_mul->add_option("d1", d1, "left factor")->required();
    c_mul->add_option("d2", d2, "right factor")->required();

    auto* c_fac = app.add_subcommand("factorize", "idempotent-permutation factorization");
    c_fac->add_option("d", d1, "diagram")->required();

    auto* c_cyc = app.add_subcommand("cycletype", "generalized cycle type of a diagram");
    c_cyc->add_option("d", d1, "diagram")->required();

    auto* c_rep = app.add_subcommand("class-rep", "canonical conjugacy class representative");
    c_rep->add_option("--k", k, "size")->required();
    c_rep->add_option("--mu", mu_text, "vector partition, e.g. [[2,1],[1]]")->required();

    auto* c_green = app.add_subcommand("green", "Green's class listings");
    c_green->add_option("--k", k, "size")->required();
    c_green->add_option("--list", list_what, "jclasses | lclasses | subgroup");
    c_green->add_option("--pi", pi_text, "set partition for --list subgroup");

    auto* c_mod = app.add_subcommand("module", "irreducible module operations");
    c_mod->add_option("--k", k, "size")->required();
    c_mod->add_option("--shape", shape_text, "vector partition shape")->required();
    c_mod->add_flag("--basis", basis_flag, "list the uniform tableau basis");
    c_mod->add_option("--act", act_text, "diagram to act with");
    c_mod->add_option("--on", on_text, "uniform tableau acted on");
    c_mod->add_option("--matrix", matrix_text, "diagram whose action matrix to print");

    auto* c_ct = app.add_subcommand("char-table", "character table of U_k");
    c_ct->add_option("--k", k, "size")->required();
    c_ct->add_option("--method", method, "trace | frobenius | both")
        ->check(CLI::IsMember({"trace", "frobenius", "both"}));

    auto* c_mat = app.add_subcommand("matrices", "X, A, B, U matrices and factorizations");
    c_mat->add_option("--k", k, "size")->required();
    c_mat->add_option("--which", which, "X | A | B | U | all")
        ->check(CLI::IsMember({"X", "A", "B", "U", "all"}));

    auto* c_pleth = app.add_subcommand("pleth", "Schur expansion of the plethysm product");
    c_pleth->add_option("--shape", shape_text, "vector partition")->required();
    c_pleth->add_option("--k", k, "size")->required();

    auto* c_sn = app.add_subcommand("sn-char", "symmetric group character value");
    c_sn->add_option("--lambda", lambda_text, "partition")->required();
    c_sn->add_option("--mu", mu_text, "cycle type")->required();

    auto* c_sf = app.add_subcommand("symfunc", "symmetric function building blocks");
    int e_index = 0;
    c_sf->add_option("--E", e_index, "print E_r in the power sum basis");
    c_sf->add_option("--frob", shape_text, "Frobenius image of the character at a shape");

    auto* c_ver = app.add_subcommand("verify", "run the invariant suites");
    c_ver->add_option("--level", level, "fast | full")->check(CLI::IsMember({"fast", "full"}));

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (c_enum->parsed()) return cmd_enumerate(opt, k, count_only, out, err);
        if (c_mul->parsed()) {
            Diagram a = Diagram::parse(d1);
            Diagram b = Diagram::parse(d2, a.k());
            out << multiply(a, b).to_string() << "\n";
            return 0;
        }
        if (c_fac->parsed()) {
            Diagram d = Diagram::parse(d1);
            auto f = factorize(d);
            if (opt.format == "json") {
                out << json{{"sigma", f.sigma},
                            {"sigma_diagram", f.sigma_diagram.to_string()},
                            {"top_idempotent", Diagram::idempotent_of(d.top()).to_string()},
                            {"bot_idempotent", Diagram::idempotent_of(d.bot()).to_string()}}
                           .dump()
                    << "\n";
            } else {
                out << "sigma: " << f.sigma_diagram.to_string() << "\n";
                out << "e_top: " << Diagram::idempotent_of(d.top()).to_string() << "\n";
                out << "e_bot: " << Diagram::idempotent_of(d.bot()).to_string() << "\n";
            }
            return 0;
        }
        if (c_cyc->parsed()) {
            VectorPartition ct = cycletype(Diagram::parse(d1));
            if (opt.format == "json")
                out << vp_json(ct).dump() << "\n";
            else
                out << ct.to_string() << "\n";
            return 0;
        }
        if (c_rep->parsed()) {
            VectorPartition mu = VectorPartition::parse(mu_text);
            if (mu.weight() != k) {
                err << "class-rep: mu is not in I_" << k << "\n";
                return 2;
            }
            out << class_rep(mu).to_string() << "\n";
            return 0;
        }
        if (c_green->parsed()) return cmd_green(opt, k, list_what, pi_text, out, err);
        if (c_mod->parsed())
            return cmd_module(opt, k, shape_text, basis_flag, act_text, on_text, matrix_text,
                              out, err);
        if (c_ct->parsed()) return cmd_char_table(opt, k, method, out, err);
        if (c_mat->parsed()) return cmd_matrices(opt, k, which, out, err);
        if (c_pleth->parsed()) {
            VectorPartition shape = VectorPartition::parse(shape_text);
            if (shape.weight() != k) {
                err << "pleth: shape is not in I_" << k << "\n";
                return 2;
            }
            auto expansion = plethysm_schur_expansion(shape);
            std::vector<Partition> keys;
            for (const auto& [nu, c] : expansion) keys.push_back(nu);
            std::sort(keys.begin(), keys.end(), rl_less);
            if (opt.format == "json") {
                json arr = json::array();
                for (const auto& nu : keys)
                    arr.push_back(json{{"partition", nu.parts()},
                                       {"coefficient", expansion.at(nu)}});
                out << arr.dump() << "\n";
            } else {
                for (const auto& nu : keys) {
                    out << "s[";
                    for (std::size_t i = 0; i < nu.parts().size(); ++i)
                        out << (i ? "," : "") << nu.parts()[i];
                    out << "]: " << expansion.at(nu) << "\n";
                }
            }
            return 0;
        }
        if (c_sn->parsed()) {
            Partition lam = parse_partition_arg(lambda_text);
            Partition mu = parse_partition_arg(mu_text);
            out << character_sn(lam, mu) << "\n";
            return 0;
        }
        if (c_sf->parsed()) {
            int sbound = effective_bound(opt, kSymfuncBound, err);
            if (e_index > sbound ||
                (!shape_text.empty() && VectorPartition::parse(shape_text).weight() > sbound)) {
                err << "symfunc: size exceeds the bound " << sbound
                    << " (use --max-k to override)\n";
                return 2;
            }
            if (e_index > 0) {
                MultiSym f = E(e_index);
                if (opt.format == "json")
                    out << multisym_json(f).dump() << "\n";
                else
                    out << f.to_string() << "\n";
                return 0;
            }
            if (!shape_text.empty()) {
                MultiSym f = frob_char(VectorPartition::parse(shape_text));
                if (opt.format == "json")
                    out << multisym_json(f).dump() << "\n";
                else
                    out << f.to_string() << "\n";
                return 0;
            }
            err << "symfunc: one of --E, --frob is required\n";
            return 2;
        }
        if (c_ver->parsed()) {
            bool ok = run_verify(level == "full" ? VerifyLevel::full : VerifyLevel::fast, out);
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace ubpcli
