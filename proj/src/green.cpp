#include "ubp/green.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ubp {

VectorPartition GroupElement::cycle_type(const SetPartition& pi) const {
    int n = pi.block_count();
    if (static_cast<int>(block_perm.size()) != n)
        throw std::invalid_argument("cycle_type: block permutation size mismatch");
    int k = pi.k();
    std::vector<std::vector<int>> lengths(k + 1);
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
        if (seen[b]) continue;
        int len = 0, cur = b;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = block_perm[cur];
            ++len;
        }
        lengths[pi.block(b).size()].push_back(len);
    }
    std::vector<Partition> comps;
    for (int i = 1; i <= k; ++i) {
        std::sort(lengths[i].rbegin(), lengths[i].rend());
        comps.emplace_back(lengths[i]);
    }
    return VectorPartition(std::move(comps));
}

SetPartition canonical_pi(const Partition& lam) {
    int k = lam.weight();
    auto m = lam.multiplicities();
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (std::size_t size = 1; size < m.size(); ++size)
        for (int c = 0; c < m[size]; ++c) {
            std::vector<int> b;
            for (std::size_t j = 0; j < size; ++j) b.push_back(next++);
            blocks.push_back(std::move(b));
        }
    return SetPartition(k, std::move(blocks));
}

namespace {

// Iterate over all size-preserving block matchings out of gamma; blocks are
// in graded last letter order so equal-size runs share index ranges with any
// partition of the same type.
void for_each_matching(const SetPartition& gamma,
                       const std::function<void(const std::vector<int>&)>& emit) {
    int n = gamma.block_count();
    std::vector<std::pair<int, int>> ranges;
    for (int b = 0; b < n;) {
        int e = b;
        while (e < n && gamma.block(e).size() == gamma.block(b).size()) ++e;
        ranges.emplace_back(b, e);
        b = e;
    }
    std::vector<int> match(n);
    std::iota(match.begin(), match.end(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == ranges.size()) {
            emit(match);
            return;
        }
        auto [lo, hi] = ranges[r];
        std::vector<int> idx(match.begin() + lo, match.begin() + hi);
        std::sort(idx.begin(), idx.end());
        do {
            std::copy(idx.begin(), idx.end(), match.begin() + lo);
            rec(r + 1);
        } while (std::next_permutation(idx.begin(), idx.end()));
    };
    rec(0);
}

} // namespace

std::vector<Diagram> lclass(const SetPartition& pi) {
    std::vector<Diagram> out;
    for (const SetPartition& gamma : enumerate_set_partitions(pi.k(), pi.type()))
        for_each_matching(gamma, [&](const std::vector<int>& match) {
            out.push_back(Diagram::block_bijection(gamma, pi, match));
        });
    return out;
}

std::vector<Diagram> jclass(int k, const Partition& lam) {
    if (lam.weight() != k) throw std::invalid_argument("jclass: |lam| != k");
    std::vector<Diagram> out;
    for (const SetPartition& pi : enumerate_set_partitions(k, lam)) {
        auto l = lclass(pi);
        out.insert(out.end(), l.begin(), l.end());
    }
    return out;
}

MaximalSubgroup maximal_subgroup(const SetPartition& pi) {
    MaximalSubgroup g{pi, {}};
    for_each_matching(pi, [&](const std::vector<int>& match) {
        g.elements.push_back({Diagram::block_bijection(pi, pi, match), match});
    });
    return g;
}

Diagram orbit_rep(const SetPartition& pi, const SetPartition& gamma) {
    if (pi.type() != gamma.type()) throw std::invalid_argument("orbit_rep: types differ");
    std::vector<int> match(pi.block_count());
    std::iota(match.begin(), match.end(), 0);
    return Diagram::block_bijection(gamma, pi, match);
}

std::optional<std::pair<SetPartition, GroupElement>> act_on_rep(const Diagram& m,
                                                                const SetPartition& pi,
                                                                const SetPartition& gamma) {
    if (m.k() != pi.k()) throw std::invalid_argument("act_on_rep: mismatched k");
    if (!is_finer(m.bot(), gamma)) return std::nullopt;
    Diagram rep = orbit_rep(pi, gamma);
    Diagram prod = multiply(m, rep);
    SetPartition gamma2 = prod.top();
    Diagram g = multiply(involution(orbit_rep(pi, gamma2)), prod);
    // recover the block permutation of g on pi
    std::vector<int> perm(pi.block_count());
    for (int b = 0; b < g.block_count(); ++b) {
        auto t = g.block_top(b);
        auto z = g.block_bot(b);
        int src = -1, dst = -1;
        for (int i = 0; i < pi.block_count(); ++i) {
            if (pi.block(i) == t) src = i;
            if (pi.block(i) == z) dst = i;
        }
        if (src < 0 || dst < 0) throw std::logic_error("act_on_rep: g is not in G_{e_pi}");
        perm[src] = dst;
    }
    GroupElement ge{g, perm};
    if (multiply(orbit_rep(pi, gamma2), ge.diagram) != prod)
        throw std::logic_error("act_on_rep: verification failed");
    return std::make_pair(gamma2, ge);
}

} // namespace ubp
