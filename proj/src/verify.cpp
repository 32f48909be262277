#include "ubp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ubp/conjugacy.hpp"
#include "ubp/diagram.hpp"
#include "ubp/green.hpp"
#include "ubp/repmod.hpp"
#include "ubp/specht.hpp"
#include "ubp/symfunc.hpp"

namespace ubp {

namespace {

struct Scales {
    int sp_counts;       // set partition counts vs formula
    int join_pairs;      // join monoid laws, all pairs
    int monoid_enum;     // full enumeration vs closed formula
    int relations;       // presentation check
    int assoc_random;    // associativity sampling
    int idempotents;     // idempotent classification
    int inverse_ids;     // inverse monoid identities
    int inverse_unique;  // uniqueness of the generalized inverse
    int green_classes;   // lclass/jclass partitions
    int free_action;     // free right action and orbits
    int subgroup_order;  // |G_{e_pi}| = prod a_i!
    int conj_classes;    // class partition counts
    int conj_definition; // conjugacy witnesses match cycle types
    int rep_cycletype;   // cycletype(class_rep) = mu
    int merge_onecycle;  // canonical r-cycle merge counts
    int b_oracle;        // b_coeff vs merge count
    int specht_dim;      // sum f^2 = n!
    int specht_orth;     // character orthogonality
    int specht_rel;      // generator matrix relations
    int specht_trace;    // character vs matrix trace
    int module_dims;     // dim formula and semisimplicity
    int module_rel;      // generator relations on modules
    int rep_property;    // action is multiplicative
    int char_threeway;   // trace = class sum = symmetric function
    int e_dual;          // E_r two expansions
    int factorizations;  // X = AB = UA
    int isometry;        // class scalar product vs Sym scalar product
    int b_scalar;        // b coefficients as scalar products
    int pleth_rows;      // plethysm vs U rows, s_lam[s_1] = s_lam
};

Scales scales_for(VerifyLevel level) {
    if (level == VerifyLevel::full)
        return {8, 5, 5, 6, 5, 5, 5, 4, 5, 4, 6, 5, 4, 6, 8, 6, 8, 7, 6, 5, 5, 5, 4, 4, 8, 5, 5, 5, 5};
    return {6, 4, 4, 4, 4, 4, 4, 3, 4, 3, 5, 4, 3, 5, 6, 4, 6, 5, 5, 4, 4, 4, 3, 3, 6, 4, 4, 4, 4};
}

using Clock = std::chrono::steady_clock;

struct Runner {
    std::ostream& out;
    bool ok = true;

    void check(const std::string& name, const std::function<bool()>& fn) {
        auto start = Clock::now();
        bool pass = false;
        std::string note;
        try {
            pass = fn();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        out << (pass ? "[PASS] " : "[FAIL] ") << name << std::fixed << std::setprecision(2)
            << "  (" << secs << "s)" << note << "\n";
        ok = ok && pass;
    }
};

bool check_sp_counts(int maxk) {
    for (int k = 0; k <= maxk; ++k)
        for (const Partition& lam : partitions_of(k))
            if (Int(enumerate_set_partitions(k, lam).size()) != sp_count(k, lam)) return false;
    return true;
}

bool check_Ik_order(int maxk) {
    for (int k = 0; k <= maxk; ++k) {
        auto ik = enumerate_Ik(k);
        for (std::size_t i = 0; i + 1 < ik.size(); ++i)
            if (!(ik[i] < ik[i + 1])) return false;
        for (const auto& vp : ik)
            if (vp.weight() != k) return false;
    }
    return true;
}

bool check_join_monoid(int maxk) {
    for (int k = 1; k <= maxk; ++k) {
        auto parts = enumerate_set_partitions(k);
        SetPartition unit = SetPartition::discrete(k);
        for (const auto& a : parts) {
            if (join(a, unit) != a || join(unit, a) != a || join(a, a) != a) return false;
            for (const auto& b : parts) {
                if (join(a, b) != join(b, a)) return false;
                if (is_finer(a, b) != (join(a, b) == b)) return false;
                for (const auto& c : parts)
                    if (k <= 4 && join(join(a, b), c) != join(a, join(b, c))) return false;
            }
        }
    }
    return true;
}

bool check_monoid_counts(int maxenum) {
    static const long long expected[] = {1, 1, 3, 16, 131, 1496, 22482};
    for (int k = 0; k <= maxenum && k <= 6; ++k) {
        auto all = enumerate_monoid(k, 6);
        std::set<Diagram> distinct(all.begin(), all.end());
        if (static_cast<long long>(distinct.size()) != expected[k]) return false;
        if (monoid_order(k) != expected[k]) return false;
    }
    for (int k = maxenum + 1; k <= 6; ++k)
        if (monoid_order(k) != expected[k]) return false;
    return true;
}

bool check_associativity(int maxk, int samples) {
    std::mt19937 rng(12345);
    for (int k = 2; k <= maxk; ++k) {
        auto all = enumerate_monoid(k, 6);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        int rounds = k <= 3 ? 0 : samples;
        if (k <= 3) {
            for (const auto& a : all)
                for (const auto& b : all)
                    for (const auto& c : all)
                        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                            return false;
        }
        for (int i = 0; i < rounds; ++i) {
            const auto& a = all[pick(rng)];
            const auto& b = all[pick(rng)];
            const auto& c = all[pick(rng)];
            if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) return false;
        }
    }
    return true;
}

bool check_idempotents(int maxk) {
    for (int k = 1; k <= maxk; ++k) {
        std::set<Diagram> idem;
        for (const auto& d : enumerate_monoid(k, 6))
            if (multiply(d, d) == d) idem.insert(d);
        std::set<Diagram> expected;
        for (const auto& pi : enumerate_set_partitions(k))
            expected.insert(Diagram::idempotent_of(pi));
        if (idem != expected) return false;
    }
    return true;
}

bool check_inverse_identities(int maxk) {
    for (int k = 1; k <= maxk; ++k)
        for (const auto& d : enumerate_monoid(k, 6)) {
            Diagram di = involution(d);
            if (multiply(multiply(d, di), d) != d) return false;
            if (multiply(multiply(di, d), di) != di) return false;
            if (involution(di) != d) return false;
        }
    return true;
}

bool check_inverse_unique(int maxk) {
    for (int k = 1; k <= maxk; ++k) {
        auto all = enumerate_monoid(k, 6);
        for (const auto& d : all) {
            Diagram expected = involution(d);
            for (const auto& x : all) {
                bool gen_inv = multiply(multiply(d, x), d) == d && multiply(multiply(x, d), x) == x;
                if (gen_inv != (x == expected)) return false;
            }
        }
    }
    return true;
}

bool check_green_classes(int maxk) {
    for (int k = 1; k <= maxk; ++k) {
        auto all = enumerate_monoid(k, 6);
        std::set<Diagram> seen;
        auto parts = enumerate_set_partitions(k);
        for (const auto& pi : parts) {
            for (const auto& d : lclass(pi)) {
                if (!(d.bot() == pi)) return false;
                if (!seen.insert(d).second) return false;
            }
        }
        if (seen.size() != all.size()) return false;
        std::size_t total = 0;
        for (const auto& lam : partitions_of(k)) {
            auto j = jclass(k, lam);
            total += j.size();
            for (const auto& d : j)
                if (!(d.top().type() == lam)) return false;
        }
        if (total != all.size()) return false;
    }
    return true;
}

bool check_free_action(int maxk) {
    for (int k = 1; k <= maxk; ++k)
        for (const auto& pi : enumerate_set_partitions(k)) {
            auto G = maximal_subgroup(pi);
            auto L = lclass(pi);
            if (!(orbit_rep(pi, pi) == Diagram::idempotent_of(pi))) return false;
            for (const auto& l : L) {
                std::set<Diagram> images;
                for (const auto& g : G.elements) {
                    Diagram lg = multiply(l, g.diagram);
                    if (!(lg.bot() == pi)) return false;
                    if (!images.insert(lg).second) return false;  // freeness
                }
            }
            // orbit sizes: elements with a common top form one orbit of size |G|
            std::map<SetPartition, std::size_t> by_top;
            for (const auto& l : L) ++by_top[l.top()];
            for (const auto& [gamma, count] : by_top)
                if (count != G.elements.size()) return false;
        }
    return true;
}

bool check_subgroup_orders(int maxk) {
    for (int k = 1; k <= maxk; ++k)
        for (const auto& pi : enumerate_set_partitions(k)) {
            Int expected = 1;
            auto m = pi.type().multiplicities();
            for (std::size_t v = 1; v < m.size(); ++v) expected *= factorial(m[v]);
            if (Int(maximal_subgroup(pi).elements.size()) != expected) return false;
        }
    return true;
}

bool check_conj_partition(int maxk) {
    for (int k = 1; k <= maxk; ++k) {
        auto ik = enumerate_Ik(k);
        std::map<VectorPartition, long long> sizes;
        for (const auto& d : enumerate_monoid(k, 6)) ++sizes[cycletype(d)];
        if (sizes.size() != ik.size()) return false;
        long long total = 0;
        for (const auto& [mu, c] : sizes) total += c;
        if (total != static_cast<long long>(monoid_order(k))) return false;
    }
    return true;
}

bool check_conj_definition(int maxk) {
    // c and d are conjugate (witnessed by some x with x~x = c^w, xx~ = d^w,
    // x c^(w+1) x~ = d^(w+1)) exactly when their cycle types agree
    for (int k = 1; k <= maxk; ++k) {
        auto all = enumerate_monoid(k, 6);
        struct Data {
            Diagram e, f;
            VectorPartition ct;
        };
        std::vector<Data> data;
        data.reserve(all.size());
        for (const auto& d : all) {
            auto [e, m] = omega(d);
            data.push_back({e, multiply(e, d), cycletype(d)});
        }
        std::vector<Diagram> inverses;
        inverses.reserve(all.size());
        for (const auto& x : all) inverses.push_back(involution(x));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                bool conjugate = false;
                for (std::size_t t = 0; t < all.size() && !conjugate; ++t) {
                    const Diagram& x = all[t];
                    const Diagram& xi = inverses[t];
                    conjugate = multiply(xi, x) == data[i].e && multiply(x, xi) == data[j].e &&
                                multiply(multiply(x, data[i].f), xi) == data[j].f;
                }
                if (conjugate != (data[i].ct == data[j].ct)) return false;
            }
    }
    return true;
}

bool check_rep_cycletype(int maxk) {
    for (int k = 0; k <= maxk; ++k)
        for (const auto& mu : enumerate_Ik(k))
            if (!(cycletype(class_rep(mu)) == mu)) return false;
    return true;
}

bool check_merge_counts(int maxr) {
    // merging one canonical r-cycle: one s-cycle per divisor s of r
    for (int r = 1; r <= maxr; ++r) {
        Diagram d = class_rep(VectorPartition({Partition({r})}));
        int total = 0;
        for (int s = 1; s <= r; ++s) {
            if (r % s != 0) continue;
            // an s-cycle on blocks of size r/s has cycletype (s) in slot r/s
            std::vector<Partition> comps(r / s);
            comps[r / s - 1] = Partition({s});
            auto found = merge_set(d, VectorPartition(comps), 12);
            if (found.size() != 1) return false;
            total += static_cast<int>(found.size());
        }
        // no other merges with top = bot exist
        int all = 0;
        for (const Partition& lam : partitions_of(r)) all += static_cast<int>(merge_set(d, lam, 12).size());
        if (all != total) return false;
    }
    // t canonical r-cycles admit r^(t-1) merges into one r-cycle
    for (int r = 1; r <= 4; ++r)
        for (int t = 2; t <= 3; ++t) {
            std::vector<int> parts(t, r);
            Diagram d = class_rep(VectorPartition({Partition(parts)}));
            std::vector<Partition> comps(t);
            comps[t - 1] = Partition({r});
            auto found = merge_set(d, VectorPartition(comps), 12);
            long long expected = 1;
            for (int i = 1; i < t; ++i) expected *= r;
            if (static_cast<long long>(found.size()) != expected) return false;
        }
    return true;
}

bool check_b_oracle(int maxk) {
    for (int k = 0; k <= maxk; ++k) {
        auto ik = enumerate_Ik(k);
        for (const auto& mu : ik) {
            Diagram rep = class_rep(mu);
            for (const auto& nu : ik)
                if (b_coeff(mu, nu) != Int(merge_set(rep, nu, 12).size())) return false;
        }
    }
    return true;
}

bool check_specht_dims(int maxn) {
    for (int n = 0; n <= maxn; ++n) {
        Int total = 0;
        for (const Partition& lam : partitions_of(n)) {
            Int f = hook_count(lam);
            if (n <= 6 && Int(standard_tableaux(lam).size()) != f) return false;
            total += f * f;
        }
        if (total != factorial(n)) return false;
    }
    return true;
}

bool check_specht_orthogonality(int maxn) {
    for (int n = 1; n <= maxn; ++n) {
        auto parts = partitions_of(n);
        for (const auto& lam : parts)
            for (const auto& nu : parts) {
                Rat s = 0;
                for (const auto& mu : parts)
                    s += Rat(character_sn(lam, mu)) * Rat(character_sn(nu, mu)) / Rat(mu.z());
                if (s != (lam == nu ? 1 : 0)) return false;
            }
    }
    return true;
}

bool matrix_eq(const std::vector<std::vector<long long>>& a,
               const std::vector<std::vector<long long>>& b) {
    return a == b;
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

std::vector<std::vector<long long>> identity_matrix(std::size_t n) {
    std::vector<std::vector<long long>> r(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

bool check_specht_relations(int maxn) {
    for (int n = 2; n <= maxn; ++n)
        for (const Partition& lam : partitions_of(n)) {
            std::size_t dim = standard_tableaux(lam).size();
            auto id = identity_matrix(dim);
            for (int i = 1; i < n; ++i) {
                const auto& si = generator_matrix(lam, i);
                if (!matrix_eq(matprod(si, si), id)) return false;
                for (int j = i + 2; j < n; ++j) {
                    const auto& sj = generator_matrix(lam, j);
                    if (!matrix_eq(matprod(si, sj), matprod(sj, si))) return false;
                }
                if (i + 1 < n) {
                    const auto& sj = generator_matrix(lam, i + 1);
                    if (!matrix_eq(matprod(matprod(si, sj), si), matprod(matprod(sj, si), sj)))
                        return false;
                }
            }
        }
    return true;
}

bool check_specht_trace(int maxn) {
    for (int n = 1; n <= maxn; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                auto m = perm_matrix(lam, cycle_type_permutation(mu));
                long long tr = 0;
                for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
                if (tr != character_sn(lam, mu)) return false;
            }
    return true;
}

bool check_module_dims(int maxk) {
    static const long long expected[] = {1, 1, 3, 16, 131, 1496, 22482};
    for (int k = 0; k <= maxk; ++k) {
        Int total = 0;
        for (const auto& lam : enumerate_Ik(k)) {
            Int d = module_dim(lam);
            if (Int(module_basis(lam).size()) != d) return false;
            total += d * d;
        }
        if (k <= 6 && total != expected[k]) return false;
    }
    return true;
}

bool check_module_relations(int maxk) {
    for (int k = 2; k <= maxk; ++k)
        for (const auto& lam : enumerate_Ik(k)) {
            std::size_t dim = module_basis(lam).size();
            auto id = identity_matrix(dim);
            std::vector<std::vector<std::vector<long long>>> S(k), B(k);
            for (int i = 1; i < k; ++i) {
                S[i] = action_matrix(Diagram::gen_s(k, i), lam);
                B[i] = action_matrix(Diagram::gen_b(k, i), lam);
            }
            for (int i = 1; i < k; ++i) {
                if (!matrix_eq(matprod(S[i], S[i]), id)) return false;
                if (!matrix_eq(matprod(B[i], B[i]), B[i])) return false;
                // b_i acts as a diagonal 0/1 projection
                for (std::size_t r = 0; r < dim; ++r)
                    for (std::size_t c = 0; c < dim; ++c) {
                        long long v = B[i][r][c];
                        if (r == c ? (v != 0 && v != 1) : (v != 0)) return false;
                    }
                // matrices compose contravariantly: M(xy) = M(y) M(x)
                if (!matrix_eq(action_matrix(multiply(Diagram::gen_b(k, i), Diagram::gen_s(k, i)), lam),
                               matprod(S[i], B[i])))
                    return false;
                if (!matrix_eq(matprod(S[i], B[i]), B[i])) return false;
                if (!matrix_eq(matprod(B[i], S[i]), B[i])) return false;
            }
            for (int i = 1; i + 1 < k; ++i) {
                if (!matrix_eq(matprod(matprod(S[i], S[i + 1]), S[i]),
                               matprod(matprod(S[i + 1], S[i]), S[i + 1])))
                    return false;
                if (!matrix_eq(matprod(matprod(S[i], B[i + 1]), S[i]),
                               matprod(matprod(S[i + 1], B[i]), S[i + 1])))
                    return false;
            }
            for (int i = 1; i < k; ++i)
                for (int j = 1; j < k; ++j) {
                    if (std::abs(i - j) > 1) {
                        if (!matrix_eq(matprod(S[j], B[i]), matprod(B[i], S[j]))) return false;
                    }
                    if (!matrix_eq(matprod(B[i], B[j]), matprod(B[j], B[i]))) return false;
                }
        }
    return true;
}

bool check_rep_property(int maxk) {
    std::mt19937 rng(777);
    for (int k = 1; k <= maxk; ++k) {
        auto all = enumerate_monoid(k, 6);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (const auto& lam : enumerate_Ik(k)) {
            int rounds = 20;
            for (int i = 0; i < rounds; ++i) {
                const Diagram& x = all[pick(rng)];
                const Diagram& y = all[pick(rng)];
                auto mxy = action_matrix(multiply(x, y), lam);
                auto my_mx = matprod(action_matrix(y, lam), action_matrix(x, lam));
                if (!matrix_eq(mxy, my_mx)) return false;
            }
        }
    }
    return true;
}

bool check_zero_rule(int maxk) {
    for (int k = 1; k <= std::min(maxk, 3); ++k) {
        auto all = enumerate_monoid(k, 6);
        for (const auto& lam : enumerate_Ik(k))
            for (const auto& S : module_basis(lam))
                for (const auto& d : all)
                    if (act(d, S).empty() != !is_finer(d.bot(), S.entries())) return false;
    }
    return true;
}

bool check_char_threeway(int maxk) {
    for (int k = 0; k <= maxk; ++k) {
        CharMatrix trace = character_table_trace(k);
        CharMatrix sym = X_matrix(k);
        if (trace != sym) return false;
        for (int r = 0; r < trace.size(); ++r)
            for (int c = 0; c < trace.size(); ++c)
                if (char_via_classsum(trace.order[r], trace.order[c]) != trace.at(r, c))
                    return false;
    }
    return true;
}

bool check_e_dual(int maxr) {
    for (int r = 1; r <= maxr; ++r)
        if (E(r) != E_schur_route(r)) return false;
    return true;
}

bool check_factorizations(int maxk) {
    for (int k = 0; k <= maxk; ++k) {
        CharMatrix X = X_matrix(k), A = A_matrix(k), B = b_matrix(k), U = U_matrix(k);
        if (!B.upper_unitriangular() || !B.nonnegative()) return false;
        if (!U.upper_unitriangular() || !U.nonnegative()) return false;
        if (matmul(A, B) != X) return false;
        if (matmul(U, A) != X) return false;
        // X vanishes below the block diagonal of the type order
        for (int r = 0; r < X.size(); ++r)
            for (int c = 0; c < X.size(); ++c) {
                Partition tr = X.order[r].type_up(), tc = X.order[c].type_up();
                if (rl_less(tc, tr) && X.at(r, c) != 0) return false;
            }
    }
    return true;
}

bool check_isometry(int maxk) {
    for (int k = 1; k <= maxk; ++k) {
        auto ik = enumerate_Ik(k);
        // class-function side: indicator functions evaluated over the
        // representative maximal subgroups
        std::map<VectorPartition, std::map<VectorPartition, Rat>> lhs;
        for (const Partition& lam : partitions_of(k)) {
            SetPartition pi = canonical_pi(lam);
            auto G = maximal_subgroup(pi);
            Rat weight = Rat(1) / Rat(Int(G.elements.size()));
            for (const auto& g : G.elements) {
                VectorPartition ct = g.cycle_type(pi);
                lhs[ct][ct] += weight;
            }
        }
        for (const auto& mu : ik)
            for (const auto& nu : ik) {
                Rat expect = scalar(MultiSym::p(mu).scaled(Rat(1) / Rat(mu.z())),
                                    MultiSym::p(nu).scaled(Rat(1) / Rat(nu.z())));
                Rat got = 0;
                auto it = lhs.find(mu);
                if (it != lhs.end()) {
                    auto jt = it->second.find(nu);
                    if (jt != it->second.end()) got = jt->second;
                }
                if (got != expect) return false;
            }
    }
    return true;
}

bool check_b_scalar(int maxk) {
    for (int k = 1; k <= maxk; ++k) {
        auto ik = enumerate_Ik(k);
        for (const auto& nu : ik) {
            MultiSym p_of_E = MultiSym::one();
            for (int j = 1; j <= nu.slots(); ++j)
                for (int part : nu.component(j).parts()) p_of_E = p_of_E * pleth_p(part, E(j));
            for (const auto& mu : ik) {
                Rat lhs = scalar(p_of_E, MultiSym::p(mu)) / Rat(nu.z());
                if (lhs != Rat(b_coeff(mu, nu))) return false;
            }
        }
    }
    return true;
}

bool check_pleth_rows(int maxk) {
    for (int k = 1; k <= maxk; ++k) {
        CharMatrix U = U_matrix(k);
        auto ik = U.order;
        // the (1^k) block columns are the lam with type (1^k)
        for (int r = 0; r < U.size(); ++r) {
            auto expansion = plethysm_schur_expansion(ik[r]);
            for (int c = 0; c < U.size(); ++c) {
                if (!(ik[c].type_up() == Partition(std::vector<int>(k, 1)))) continue;
                const Partition& nu = ik[c].component(1);
                auto it = expansion.find(nu);
                long long v = it == expansion.end() ? 0 : it->second;
                if (v != U.at(r, c)) return false;
            }
        }
    }
    // s_lam[s_1] = s_lam
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n)) {
            auto exp = plethysm_schur_expansion(VectorPartition({lam}));
            if (exp.size() != 1 || exp.begin()->first != lam || exp.begin()->second != 1)
                return false;
        }
    return true;
}

bool check_roundtrip() {
    for (int k = 0; k <= 3; ++k)
        for (const auto& d : enumerate_monoid(k, 6))
            if (Diagram::parse(d.to_string(), k) != d) return false;
    std::mt19937 rng(4242);
    auto all5 = enumerate_monoid(5, 6);
    std::uniform_int_distribution<std::size_t> pick(0, all5.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const auto& d = all5[pick(rng)];
        if (Diagram::parse(d.to_string()) != d) return false;
    }
    for (int k = 0; k <= 5; ++k)
        for (const auto& vp : enumerate_Ik(k)) {
            if (VectorPartition::parse(vp.to_string()) != vp) return false;
            for (const auto& S : module_basis(vp))
                if (!(UniformTableau::parse(S.to_string(), k) == S)) return false;
        }
    for (int k = 1; k <= 5; ++k)
        for (const auto& pi : enumerate_set_partitions(k))
            if (SetPartition::parse(pi.to_string(), k) != pi) return false;
    // multi-digit elements need commas
    SetPartition big = canonical_pi(Partition({3, 2, 2, 1, 1, 1, 1}));
    if (SetPartition::parse(big.to_string(), big.k()) != big) return false;
    return true;
}

} // namespace

bool run_verify(VerifyLevel level, std::ostream& out) {
    Scales s = scales_for(level);
    Runner r{out};

    r.check("set partition counts match the closed formula", [&] { return check_sp_counts(s.sp_counts); });
    r.check("I_k enumeration is strictly increasing", [&] { return check_Ik_order(7); });
    r.check("join is a commutative idempotent monoid", [&] { return check_join_monoid(s.join_pairs); });
    r.check("monoid orders match 1,1,3,16,131,1496,22482", [&] { return check_monoid_counts(s.monoid_enum); });
    r.check("presentation relations hold", [&] { return check_relations(s.relations); });
    r.check("product is associative", [&] { return check_associativity(s.assoc_random, 10000); });
    r.check("idempotents are exactly the e_pi", [&] { return check_idempotents(s.idempotents); });
    r.check("inverse monoid identities", [&] { return check_inverse_identities(s.inverse_ids); });
    r.check("generalized inverses are unique", [&] { return check_inverse_unique(s.inverse_unique); });
    r.check("L- and J-classes partition the monoid", [&] { return check_green_classes(s.green_classes); });
    r.check("right action is free with orbit structure", [&] { return check_free_action(s.free_action); });
    r.check("maximal subgroup orders", [&] { return check_subgroup_orders(s.subgroup_order); });
    r.check("conjugacy classes partition the monoid", [&] { return check_conj_partition(s.conj_classes); });
    r.check("conjugacy witnesses match cycle types", [&] { return check_conj_definition(s.conj_definition); });
    r.check("class representatives have the right cycle type", [&] { return check_rep_cycletype(s.rep_cycletype); });
    r.check("single- and multi-cycle merge counts", [&] { return check_merge_counts(s.merge_onecycle); });
    r.check("b-coefficients match brute-force merges", [&] { return check_b_oracle(s.b_oracle); });
    r.check("sum of squared tableau counts is n!", [&] { return check_specht_dims(s.specht_dim); });
    r.check("symmetric group character orthogonality", [&] { return check_specht_orthogonality(s.specht_orth); });
    r.check("Specht generator matrices satisfy the relations", [&] { return check_specht_relations(s.specht_rel); });
    r.check("characters equal matrix traces", [&] { return check_specht_trace(s.specht_trace); });
    r.check("module dimensions and semisimplicity", [&] { return check_module_dims(s.module_dims); });
    r.check("module matrices satisfy the relations", [&] { return check_module_relations(s.module_rel); });
    r.check("module action is multiplicative", [&] { return check_rep_property(s.rep_property); });
    r.check("zero rule matches refinement", [&] { return check_zero_rule(3); });
    r.check("character tables agree three ways", [&] { return check_char_threeway(s.char_threeway); });
    r.check("E_r expansions agree", [&] { return check_e_dual(s.e_dual); });
    r.check("X = A*B = U*A with unitriangular B, U", [&] { return check_factorizations(s.factorizations); });
    r.check("Frobenius map is an isometry", [&] { return check_isometry(s.isometry); });
    r.check("b coefficients equal their scalar products", [&] { return check_b_scalar(s.b_scalar); });
    r.check("plethysm rows match the decomposition matrix", [&] { return check_pleth_rows(s.pleth_rows); });
    r.check("text formats round-trip", [&] { return check_roundtrip(); });

    return r.ok;
}

} // namespace ubp
