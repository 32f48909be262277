#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ubp/diagram.hpp"

namespace ubp {

/// An element of the maximal subgroup G_{e_pi}: a diagram with top = bot = pi
/// together with the permutation of block indices it induces (block index in
/// graded last letter order; sizes are preserved).
struct GroupElement {
    Diagram diagram;
    std::vector<int> block_perm;  // block i of pi maps to block block_perm[i]

    /// Cycle lengths of the restriction to size-i blocks, as a vector
    /// partition over slots 1..k.
    VectorPartition cycle_type(const SetPartition& pi) const;
};

struct MaximalSubgroup {
    SetPartition base;
    std::vector<GroupElement> elements;
};

/// The canonical set partition for a partition type: consecutive integers,
/// singletons first, then pairs, and so on.
SetPartition canonical_pi(const Partition& lam);

/// {d : bot(d) = pi}, built directly from block bijections.
std::vector<Diagram> lclass(const SetPartition& pi);

/// {d : type(top(d)) = lam} = disjoint union of lclass over type(pi) = lam.
std::vector<Diagram> jclass(int k, const Partition& lam);

/// All d with top(d) = bot(d) = pi, tagged with their block permutations.
MaximalSubgroup maximal_subgroup(const SetPartition& pi);

/// The orbit representative ell_pi^gamma: i-th block of gamma -> i-th block
/// of pi in graded last letter order. Requires equal types.
Diagram orbit_rep(const SetPartition& pi, const SetPartition& gamma);

/// Left action of m on the orbit representative ell_pi^gamma. Returns the
/// unique (gamma', g) with m * ell_pi^gamma = ell_pi^gamma' * g, or nullopt
/// when bot(m) is not finer than gamma (the action is zero).
std::optional<std::pair<SetPartition, GroupElement>> act_on_rep(const Diagram& m,
                                                                const SetPartition& pi,
                                                                const SetPartition& gamma);

} // namespace ubp
