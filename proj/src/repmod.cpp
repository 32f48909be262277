#include "ubp/repmod.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

namespace ubp {

VectorPartition UniformTableau::shape() const {
    std::vector<Partition> parts;
    for (const auto& comp : comps) {
        std::vector<int> rows;
        for (const auto& row : comp) rows.push_back(static_cast<int>(row.size()));
        parts.emplace_back(std::move(rows));
    }
    return VectorPartition(std::move(parts));
}

SetPartition UniformTableau::entries() const {
    std::vector<Block> blocks;
    for (const auto& comp : comps)
        for (const auto& row : comp)
            for (const auto& cell : row) blocks.push_back(cell);
    return SetPartition(k, std::move(blocks));
}

std::string UniformTableau::to_string() const {
    std::ostringstream os;
    bool commas = k > 9;
    bool first_comp = true;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].empty()) continue;
        if (!first_comp) os << " ; ";
        first_comp = false;
        for (std::size_t r = 0; r < comps[i].size(); ++r) {
            if (r) os << '/';
            for (std::size_t c = 0; c < comps[i][r].size(); ++c) {
                if (c) os << ',';
                os << '{';
                for (std::size_t e = 0; e < comps[i][r][c].size(); ++e) {
                    if (e && commas) os << ',';
                    os << comps[i][r][c][e];
                }
                os << '}';
            }
        }
    }
    if (first_comp) os << "()";
    return os.str();
}

UniformTableau UniformTableau::parse(const std::string& text, int k) {
    UniformTableau ut;
    std::vector<std::vector<std::vector<Block>>> comps;
    std::vector<std::vector<Block>> comp;
    std::vector<Block> row;
    Block cell;
    bool in_cell = false;
    const bool whole_numbers = k > 9;
    int maxel = 0;

    auto flush_row = [&]() {
        if (!row.empty()) comp.push_back(std::move(row));
        row.clear();
    };
    auto flush_comp = [&]() {
        flush_row();
        if (!comp.empty()) comps.push_back(std::move(comp));
        comp.clear();
    };

    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '{') {
            in_cell = true;
            cell.clear();
            ++i;
            continue;
        }
        if (c == '}') {
            if (!in_cell || cell.empty())
                throw std::invalid_argument("tableau text: empty or unopened cell");
            std::sort(cell.begin(), cell.end());
            row.push_back(cell);
            in_cell = false;
            ++i;
            continue;
        }
        if (in_cell) {
            if (c == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("tableau text: bad cell content");
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            std::string num = text.substr(i, j - i);
            if (whole_numbers) {
                cell.push_back(std::stoi(num));
                maxel = std::max(maxel, cell.back());
            } else {
                for (char d : num) {
                    cell.push_back(d - '0');
                    maxel = std::max(maxel, cell.back());
                }
            }
            i = j;
            continue;
        }
        if (c == ',') {
            ++i;
            continue;
        }
        if (c == '/') {
            flush_row();
            ++i;
            continue;
        }
        if (c == ';') {
            flush_comp();
            ++i;
            continue;
        }
        if (c == '(') {  // "()" denotes the k = 0 tableau
            ++i;
            continue;
        }
        if (c == ')') {
            ++i;
            continue;
        }
        throw std::invalid_argument(std::string("tableau text: unexpected character '") + c + "'");
    }
    flush_comp();

    if (k == 0) k = maxel;
    ut.k = k;
    // rows were listed bottom (longest) first when valid; accept top-first too
    for (auto& cmp : comps) {
        bool nonincreasing = true, nondecreasing = true;
        for (std::size_t r = 1; r < cmp.size(); ++r) {
            if (cmp[r].size() > cmp[r - 1].size()) nonincreasing = false;
            if (cmp[r].size() < cmp[r - 1].size()) nondecreasing = false;
        }
        if (!nonincreasing) {
            if (!nondecreasing) throw std::invalid_argument("tableau text: rows do not form a shape");
            std::reverse(cmp.begin(), cmp.end());
        }
    }
    // assign components by block size
    ut.comps.assign(k, {});
    for (auto& cmp : comps) {
        if (cmp.empty()) continue;
        std::size_t size = cmp[0][0].size();
        for (const auto& r : cmp)
            for (const auto& cellblock : r)
                if (cellblock.size() != size)
                    throw std::invalid_argument("tableau text: mixed block sizes in a component");
        if (size < 1 || size > static_cast<std::size_t>(k))
            throw std::invalid_argument("tableau text: block size out of range");
        if (!ut.comps[size - 1].empty())
            throw std::invalid_argument("tableau text: duplicate component for one block size");
        ut.comps[size - 1] = std::move(cmp);
    }
    ut.entries();  // validates the set partition
    return ut;
}

bool UniformTableau::operator<(const UniformTableau& o) const {
    if (k != o.k) return k < o.k;
    return comps < o.comps;
}

namespace {

bool block_last_letter_less(const Block& a, const Block& b) {
    return a.back() < b.back();  // equal sizes within a component
}

// Convert a component of blocks to an int tableau over the ranks of the
// given sorted label list.
Tableau to_ranks(const std::vector<std::vector<Block>>& comp, const std::vector<Block>& labels) {
    Tableau t;
    for (const auto& row : comp) {
        std::vector<int> r;
        for (const auto& cell : row) {
            auto it = std::lower_bound(labels.begin(), labels.end(), cell,
                                       block_last_letter_less);
            if (it == labels.end() || *it != cell)
                throw std::logic_error("uniform tableau: unknown block label");
            r.push_back(static_cast<int>(it - labels.begin()));
        }
        t.push_back(std::move(r));
    }
    return t;
}

std::vector<std::vector<Block>> from_ranks(const Tableau& t, const std::vector<Block>& labels) {
    std::vector<std::vector<Block>> comp;
    for (const auto& row : t) {
        std::vector<Block> r;
        for (int v : row) r.push_back(labels[v]);
        comp.push_back(std::move(r));
    }
    return comp;
}

} // namespace

std::vector<UniformTableau> module_basis(const VectorPartition& lam) {
    int k = lam.weight();
    std::vector<UniformTableau> out;
    for (const SetPartition& gamma : enumerate_set_partitions(k, lam.type_up())) {
        // size-i blocks of gamma in graded last letter order
        std::vector<std::vector<Block>> by_size(k + 1);
        for (const auto& b : gamma.blocks()) by_size[b.size()].push_back(b);
        // per-component standard tableaux, materialized with blocks
        std::vector<std::vector<std::vector<std::vector<Block>>>> choices(k);
        for (int i = 1; i <= k; ++i) {
            const Partition& shape = lam.component(i);
            std::vector<std::vector<std::vector<Block>>> comp_choices;
            for (const Tableau& t : standard_tableaux(shape))
                comp_choices.push_back(from_ranks(t, by_size[i]));
            choices[i - 1] = std::move(comp_choices);
        }
        std::function<void(int, UniformTableau&)> rec = [&](int i, UniformTableau& cur) {
            if (i > k) {
                out.push_back(cur);
                return;
            }
            for (const auto& comp : choices[i - 1]) {
                cur.comps[i - 1] = comp;
                rec(i + 1, cur);
            }
        };
        UniformTableau cur;
        cur.k = k;
        cur.comps.assign(k, {});
        rec(1, cur);
    }
    return out;
}

Int module_dim(const VectorPartition& lam) {
    Int d = sp_count(lam.weight(), lam.type_up());
    for (int i = 1; i <= lam.slots(); ++i) d *= hook_count(lam.component(i));
    return d;
}

ModuleVector act(const Diagram& d, const UniformTableau& S) {
    if (d.k() != S.k) throw std::invalid_argument("act: mismatched k");
    int k = d.k();
    SetPartition gamma = S.entries();
    if (!is_finer(d.bot(), gamma)) return {};

    // new entry for each gamma block: union of top(d) blocks mapped into it
    std::vector<Block> newblock(gamma.block_count());
    for (int b = 0; b < d.block_count(); ++b) {
        auto tb = d.block_top(b);
        auto zb = d.block_bot(b);
        int g = gamma.block_of(zb[0]);
        auto& nb = newblock[g];
        nb.insert(nb.end(), tb.begin(), tb.end());
    }
    for (auto& nb : newblock) std::sort(nb.begin(), nb.end());

    // replace cell-wise, then straighten each component over its new labels
    ModuleVector result;
    result[UniformTableau{k, std::vector<std::vector<std::vector<Block>>>(k)}] = 1;
    for (int i = 1; i <= k; ++i) {
        if (S.comps[i - 1].empty()) continue;
        std::vector<std::vector<Block>> replaced;
        std::vector<Block> labels;
        for (const auto& row : S.comps[i - 1]) {
            std::vector<Block> r;
            for (const auto& cell : row) {
                Block nb = newblock[gamma.block_of(cell[0])];
                labels.push_back(nb);
                r.push_back(std::move(nb));
            }
            replaced.push_back(std::move(r));
        }
        std::sort(labels.begin(), labels.end(), block_last_letter_less);
        const Partition shape = S.shape().component(i);
        auto terms = straighten(shape, to_ranks(replaced, labels));
        ModuleVector next;
        for (const auto& [base, coeff] : result)
            for (const auto& [t, c] : terms) {
                UniformTableau ut = base;
                ut.comps[i - 1] = from_ranks(t, labels);
                next[ut] += coeff * c;
            }
        result = std::move(next);
    }
    for (auto it = result.begin(); it != result.end();)
        it = it->second == 0 ? result.erase(it) : std::next(it);
    return result;
}

std::vector<std::vector<long long>> action_matrix(const Diagram& d, const VectorPartition& lam) {
    auto basis = module_basis(lam);
    int dim = static_cast<int>(basis.size());
    std::map<UniformTableau, int> index;
    for (int i = 0; i < dim; ++i) index[basis[i]] = i;
    std::vector<std::vector<long long>> m(dim, std::vector<long long>(dim, 0));
    for (int a = 0; a < dim; ++a)
        for (const auto& [t, c] : act(d, basis[a])) m[a][index.at(t)] = c;
    return m;
}

long long char_trace(const VectorPartition& lam, const VectorPartition& mu) {
    Diagram rep = class_rep(mu);
    auto basis = module_basis(lam);
    long long tr = 0;
    for (const auto& b : basis) {
        auto img = act(rep, b);
        auto it = img.find(b);
        if (it != img.end()) tr += it->second;
    }
    return tr;
}

long long char_via_classsum(const VectorPartition& lam, const VectorPartition& mu) {
    Partition type = lam.type_up();
    SetPartition pi = canonical_pi(type);
    Diagram rep = class_rep(mu);
    long long total = 0;
    for (const Diagram& d : merge_set(rep, type)) {
        auto res = act_on_rep(d, pi, d.top());
        if (!res) throw std::logic_error("char_via_classsum: zero action on own top");
        if (!(res->first == d.top()))
            throw std::logic_error("char_via_classsum: action moved the orbit");
        VectorPartition ct = res->second.cycle_type(pi);
        long long v = 1;
        for (int i = 1; i <= std::max(lam.slots(), ct.slots()); ++i)
            v *= character_sn(lam.component(i), ct.component(i));
        total += v;
    }
    return total;
}

CharMatrix character_table_trace(int k, int jobs) {
    CharMatrix m = CharMatrix::zeros(k);
    int n = m.size();
    auto column = [&](int c) {
        std::vector<long long> col(n);
        for (int r = 0; r < n; ++r) col[r] = char_trace(m.order[r], m.order[c]);
        return col;
    };
    if (jobs <= 1) {
        for (int c = 0; c < n; ++c) {
            auto col = column(c);
            for (int r = 0; r < n; ++r) m.entries[r][c] = col[r];
        }
    } else {
        std::vector<std::future<std::vector<long long>>> futs;
        for (int c = 0; c < n; ++c)
            futs.push_back(std::async(std::launch::async, column, c));
        for (int c = 0; c < n; ++c) {
            auto col = futs[c].get();
            for (int r = 0; r < n; ++r) m.entries[r][c] = col[r];
        }
    }
    return m;
}

} // namespace ubp
