#include "ubp/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ubp {

std::pair<Diagram, int> omega(const Diagram& d) {
    Diagram power = d;
    int m = 1;
    // m is at most the lcm of the block-permutation cycle lengths times the
    // number of merges, comfortably below 2k * k! for the sizes we handle;
    // guard against a broken product anyway
    int limit = 1;
    for (int i = 2; i <= std::max(d.k(), 1); ++i) limit *= i;
    limit = std::max(limit * 2, 4);
    while (!(multiply(power, power) == power)) {
        power = multiply(power, d);
        ++m;
        if (m > limit) throw std::logic_error("omega: no idempotent power found");
    }
    return {power, m};
}

VectorPartition cycletype(const Diagram& d) {
    auto [e, m] = omega(d);
    Diagram f = multiply(e, d);  // d^(omega+1)
    SetPartition pi = e.top();
    std::vector<int> perm(pi.block_count());
    for (int b = 0; b < f.block_count(); ++b) {
        auto t = f.block_top(b);
        auto z = f.block_bot(b);
        int src = -1, dst = -1;
        for (int i = 0; i < pi.block_count(); ++i) {
            if (pi.block(i) == t) src = i;
            if (pi.block(i) == z) dst = i;
        }
        if (src < 0 || dst < 0) throw std::logic_error("cycletype: d^(omega+1) not in G_{d^omega}");
        perm[src] = dst;
    }
    GroupElement g{f, perm};
    return g.cycle_type(pi);
}

Diagram class_rep(const VectorPartition& mu) {
    int k = mu.weight();
    SetPartition pi = canonical_pi(mu.type_up());
    int n = pi.block_count();
    std::vector<int> match(n);
    std::iota(match.begin(), match.end(), 0);
    // blocks of canonical_pi are grouped by size in graded order
    int at = 0;
    for (int size = 1; size <= k; ++size) {
        int count = 0;
        while (at + count < n && static_cast<int>(pi.block(at + count).size()) == size) ++count;
        const Partition& comp = mu.component(size);
        int start = at;
        for (int part : comp.parts()) {
            for (int j = 0; j < part; ++j) match[start + j] = start + (j + 1) % part;
            start += part;
        }
        at += count;
    }
    return Diagram::block_bijection(pi, pi, match);
}

namespace {

// Enumerate coarsenings of d with top = bot whose top has the given type,
// keeping only those accepted by the filter. Groups are pruned against the
// target type: at most l(lam) groups, none with top size above max(lam).
template <typename Filter>
std::vector<Diagram> merge_where(const Diagram& d, const Partition& lam, int max_blocks,
                                 Filter&& keep) {
    int n = d.block_count();
    if (n > max_blocks)
        throw std::runtime_error("merge_set: diagram has " + std::to_string(n) +
                                 " blocks, above the bound " + std::to_string(max_blocks));
    std::vector<Diagram> out;
    int max_groups = lam.length();
    int max_size = lam.empty() ? 0 : lam.part(0);
    std::vector<int> group(n, 0), group_size(n, 0), block_size(n, 0);
    for (int b = 0; b < n; ++b) block_size[b] = static_cast<int>(d.block_top(b).size());
    const auto& ids = d.vertex_ids();
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            std::vector<int> merged(ids.size());
            for (std::size_t v = 0; v < ids.size(); ++v) merged[v] = group[ids[v]];
            Diagram m = Diagram::from_vertex_ids(d.k(), merged);
            if (m.top() == m.bot() && m.top().type() == lam && keep(m))
                out.push_back(std::move(m));
            return;
        }
        int limit = std::min(used, max_groups - 1);
        for (int g = 0; g <= limit; ++g) {
            if (group_size[g] + block_size[pos] > max_size) continue;
            group[pos] = g;
            group_size[g] += block_size[pos];
            rec(pos + 1, g == used ? used + 1 : used);
            group_size[g] -= block_size[pos];
        }
    };
    if (n == 0) {
        if (d.top() == d.bot() && d.top().type() == lam && keep(d)) out.push_back(d);
        return out;
    }
    rec(0, 0);
    return out;
}

} // namespace

std::vector<Diagram> merge_set(const Diagram& d, const Partition& lam, int max_blocks) {
    if (lam.weight() != d.k()) throw std::invalid_argument("merge_set: |lam| != k");
    return merge_where(d, lam, max_blocks, [&](const Diagram&) { return true; });
}

std::vector<Diagram> merge_set(const Diagram& d, const VectorPartition& nu, int max_blocks) {
    if (nu.weight() != d.k()) throw std::invalid_argument("merge_set: nu not in I_k");
    return merge_where(d, nu.type_up(), max_blocks,
                       [&](const Diagram& m) { return cycletype(m) == nu; });
}

namespace {

// Multiplicity tensor of a vector partition: m[slot][part] counts.
struct MultTensor {
    int k;
    std::vector<std::vector<int>> m;  // [slot 1..k][part 1..k]

    explicit MultTensor(const VectorPartition& vp, int k_) : k(k_), m(k + 1, std::vector<int>(k + 1, 0)) {
        for (int a = 1; a <= vp.slots(); ++a)
            for (int part : vp.component(a).parts()) m[a][part] += 1;
    }
    bool empty() const {
        for (const auto& row : m)
            for (int v : row)
                if (v) return false;
        return true;
    }
    // subtract the scaled tensor of tau; on failure leaves *this unchanged
    bool subtract_scaled(const VectorPartition& tau, int factor) {
        std::vector<std::pair<int, int>> taken;
        for (int a = 1; a <= tau.slots(); ++a)
            for (int part : tau.component(a).parts()) {
                int target = part * factor;
                if (target > k || m[a][target] == 0) {
                    for (auto [sa, sv] : taken) ++m[sa][sv];
                    return false;
                }
                --m[a][target];
                taken.emplace_back(a, target);
            }
        return true;
    }
    void add_scaled(const VectorPartition& tau, int factor) {
        for (int a = 1; a <= tau.slots(); ++a)
            for (int part : tau.component(a).parts()) ++m[a][part * factor];
    }
};

} // namespace

Int b_coeff(const VectorPartition& mu, const VectorPartition& nu) {
    int k = mu.weight();
    if (nu.weight() != k) throw std::invalid_argument("b_coeff: mu, nu in different I_k");
    // cells (i, j): the i-th part of nu^(j); tau(i,j) ranges over I_j
    struct Cell {
        int j;
        int length;  // nu_i^(j)
    };
    std::vector<Cell> cells;
    for (int j = 1; j <= nu.slots(); ++j)
        for (int part : nu.component(j).parts()) cells.push_back({j, part});

    std::vector<std::vector<VectorPartition>> Ij(k + 1);
    for (int j = 1; j <= k; ++j) Ij[j] = enumerate_Ik(j);

    MultTensor rem(mu, k);
    Rat total = 0;
    Rat zmu(mu.z());
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t at, Rat weight) {
        if (at == cells.size()) {
            if (rem.empty()) total += weight;
            return;
        }
        const Cell& cell = cells[at];
        for (const VectorPartition& tau : Ij[cell.j]) {
            if (!rem.subtract_scaled(tau, cell.length)) continue;
            rec(at + 1, weight / Rat(tau.z()));
            rem.add_scaled(tau, cell.length);
        }
    };
    rec(0, zmu / Rat(nu.z()));
    if (boost::multiprecision::denominator(total) != 1)
        throw std::logic_error("b_coeff: non-integral result");
    return boost::multiprecision::numerator(total);
}

CharMatrix b_matrix(int k) {
    CharMatrix m = CharMatrix::zeros(k);
    int n = m.size();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Int v = b_coeff(m.order[c], m.order[r]);
            m.entries[r][c] = static_cast<long long>(v);
        }
    return m;
}

} // namespace ubp
