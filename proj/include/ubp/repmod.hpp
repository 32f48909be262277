#pragma once

#include <map>
#include <string>
#include <vector>

#include "ubp/conjugacy.hpp"
#include "ubp/diagram.hpp"
#include "ubp/matrices.hpp"
#include "ubp/specht.hpp"

namespace ubp {

using Block = std::vector<int>;  // sorted elements of [k]

/// A uniform tableau: one standard tableau per block size, component i
/// filled with size-i subsets of [k], all entries together a set partition
/// of [k]. Component tableaux are standard in graded last letter order.
struct UniformTableau {
    int k = 0;
    // comps[i-1] = rows of component i; each cell one block
    std::vector<std::vector<std::vector<Block>>> comps;

    VectorPartition shape() const;
    SetPartition entries() const;

    /// Text: components joined by ';', rows joined by '/' starting with the
    /// longest (bottom) row, cells as brace-wrapped element lists.
    std::string to_string() const;
    static UniformTableau parse(const std::string& text, int k = 0);

    bool operator==(const UniformTableau& o) const { return k == o.k && comps == o.comps; }
    bool operator<(const UniformTableau& o) const;
};

/// Integer linear combination of uniform tableaux of one shape.
using ModuleVector = std::map<UniformTableau, long long>;

/// All uniform tableaux of shape lam, deterministic order.
std::vector<UniformTableau> module_basis(const VectorPartition& lam);

/// sp_k(type(lam)) * prod f^{lam^(i)}.
Int module_dim(const VectorPartition& lam);

/// Action of d on S: zero when bot(d) is not finer than the entry partition;
/// otherwise each entry block is replaced by the union of top(d)-blocks that
/// d maps into it, and each component is straightened.
ModuleVector act(const Diagram& d, const UniformTableau& S);

/// Row a = coefficients of act(d, basis[a]) in the module basis.
std::vector<std::vector<long long>> action_matrix(const Diagram& d, const VectorPartition& lam);

/// Trace of class_rep(mu) acting on the module indexed by lam.
long long char_trace(const VectorPartition& lam, const VectorPartition& mu);

/// Character value by the class-sum formula: sum over coarsenings d of
/// class_rep(mu) with top(d) = bot(d) of type lam of the G_lambda-character
/// at the unique sigma_d with d * ell = ell * sigma_d.
long long char_via_classsum(const VectorPartition& lam, const VectorPartition& mu);

/// The character table assembled from traces; columns may be computed
/// concurrently when jobs > 1.
CharMatrix character_table_trace(int k, int jobs = 1);

} // namespace ubp
