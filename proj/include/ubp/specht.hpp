#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ubp/partition.hpp"

namespace ubp {

/// A filled tableau over the ordered label set {0,...,n-1}: rows[0] is the
/// longest row, rows increase left to right, columns increase with the row
/// index. (The bottom row of the French picture is rows[0].)
using Tableau = std::vector<std::vector<int>>;

/// All standard tableaux of the given shape with labels 0..|shape|-1,
/// sorted by their row-reading word.
const std::vector<Tableau>& standard_tableaux(const Partition& shape);

/// Expansion of the polytabloid of an arbitrary bijective filling in the
/// standard-polytabloid basis. Integer coefficients. A filling whose column
/// repeats a label gives the empty expansion; a label repeated elsewhere is
/// an argument error.
std::vector<std::pair<Tableau, long long>> straighten(const Partition& shape, const Tableau& t);

/// Matrix of the place permutation w (0-based image vector) in the standard
/// basis: row a lists the coefficients of w acting on the a-th standard
/// tableau.
std::vector<std::vector<long long>> perm_matrix(const Partition& shape,
                                                const std::vector<int>& w);

/// Matrix of the adjacent transposition swapping label ranks i-1 and i
/// (1 <= i < |shape|). Cached.
const std::vector<std::vector<long long>>& generator_matrix(const Partition& shape, int i);

/// Irreducible symmetric group character chi^lam at cycle type mu
/// (Murnaghan-Nakayama). Cached.
long long character_sn(const Partition& lam, const Partition& mu);

/// The 0-based permutation of {0..n-1} with consecutive cycles of the given
/// lengths: (0 1 .. mu_1-1)(mu_1 ..)...
std::vector<int> cycle_type_permutation(const Partition& mu);

} // namespace ubp
