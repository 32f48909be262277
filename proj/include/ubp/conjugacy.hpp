#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ubp/diagram.hpp"
#include "ubp/green.hpp"
#include "ubp/matrices.hpp"

namespace ubp {

/// The unique idempotent power of d together with the smallest exponent m
/// with d^m idempotent.
std::pair<Diagram, int> omega(const Diagram& d);

/// Cycle type of d^(omega+1) as a block permutation in G_{d^omega}, split by
/// block size; an element of I_k.
VectorPartition cycletype(const Diagram& d);

/// The canonical representative of the generalized conjugacy class indexed
/// by mu: consecutive canonical cycles on the blocks of canonical_pi.
Diagram class_rep(const VectorPartition& mu);

/// All coarsenings d' of d (unions of d's blocks) with top(d') = bot(d') and
/// type(top(d')) = lam. Throws a resource error when d has more blocks than
/// the bound allows.
std::vector<Diagram> merge_set(const Diagram& d, const Partition& lam, int max_blocks = 12);

/// Same, filtered by cycletype(d') = nu instead of the type of the top.
std::vector<Diagram> merge_set(const Diagram& d, const VectorPartition& nu, int max_blocks = 12);

/// The merge-counting coefficient b_mu^nu evaluated by the closed formula
/// (sum over merge-assignment sequences tau(i,j) in I_j with
/// mu = U nu_i^(j) * tau(i,j)).
Int b_coeff(const VectorPartition& mu, const VectorPartition& nu);

/// B_k over the ordered I_k: entry[row nu][col mu] = b_mu^nu, so that the
/// character table factors as X = A * B.
CharMatrix b_matrix(int k);

} // namespace ubp
