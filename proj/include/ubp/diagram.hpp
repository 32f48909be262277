#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ubp/numeric.hpp"
#include "ubp/setpartition.hpp"

namespace ubp {

/// A uniform block permutation of [k] u [k-bar]: a set partition of the 2k
/// vertices in which every block has as many unbarred as barred elements.
///
/// Vertices are indexed 0..2k-1: vertex i-1 is unbarred i, vertex k+i-1 is
/// barred i. Blocks carry canonical ids assigned in order of first occurrence,
/// so equality and hashing are structural.
class Diagram {
public:
    Diagram() : k_(0), nblocks_(0) {}

    /// From a block-id array of length 2k (ids arbitrary). Checks uniformity.
    static Diagram from_vertex_ids(int k, const std::vector<int>& ids);
    /// From explicit blocks over vertices 0..2k-1.
    static Diagram from_blocks(int k, const std::vector<std::vector<int>>& blocks);
    static Diagram identity(int k);
    /// The permutation diagram {i, bar(perm(i))}; perm is 1-based images.
    static Diagram permutation(const std::vector<int>& perm);
    /// e_pi = {A u A-bar : A in pi}.
    static Diagram idempotent_of(const SetPartition& pi);
    /// The bijection sending the i-th block of gamma (graded last letter
    /// order) to the i-th block of pi; top = gamma, bot = pi.
    static Diagram block_bijection(const SetPartition& gamma, const SetPartition& pi,
                                   const std::vector<int>& match);
    /// Adjacent transposition s_i and merge idempotent b_i, 1 <= i < k.
    static Diagram gen_s(int k, int i);
    static Diagram gen_b(int k, int i);

    int k() const { return k_; }
    int block_count() const { return nblocks_; }
    const std::vector<int>& vertex_ids() const { return ids_; }

    SetPartition top() const;
    SetPartition bot() const;
    bool is_idempotent() const;
    bool is_permutation() const;
    /// For a permutation diagram, the 1-based image vector.
    std::vector<int> as_permutation() const;

    /// Barred side of block b (elements of [k]), sorted; and unbarred side.
    std::vector<int> block_top(int b) const;
    std::vector<int> block_bot(int b) const;

    /// Text form: blocks joined by '|', barred elements with a trailing
    /// apostrophe, e.g. "1,4,2',3'|2,1'".
    std::string to_string() const;
    static Diagram parse(const std::string& text, int k = 0);

    bool operator==(const Diagram& o) const { return k_ == o.k_ && ids_ == o.ids_; }
    bool operator!=(const Diagram& o) const { return !(*this == o); }
    bool operator<(const Diagram& o) const;

    struct Hash {
        std::size_t operator()(const Diagram& d) const;
    };

private:
    int k_;
    int nblocks_;
    std::vector<int> ids_;  // length 2k, canonical block ids
};

/// Stack d on top of d2, take connected components, delete the middle row.
Diagram multiply(const Diagram& d, const Diagram& d2);

/// Reflect across a horizontal line (swap barred and unbarred).
Diagram involution(const Diagram& d);

struct Factorization {
    std::vector<int> sigma;  // 1-based permutation images
    Diagram sigma_diagram;
};

/// A permutation sigma with d = e_top(d) * sigma = sigma * e_bot(d); the
/// canonical choice maps each sorted top block onto its sorted image block.
Factorization factorize(const Diagram& d);

/// All elements of U_k (k <= max_k guard); deterministic order.
std::vector<Diagram> enumerate_monoid(int k, int max_k = 6);

/// |U_k| by the closed formula sum over lam of sp_k(lam)^2 * prod a_i!.
Int monoid_order(int k);

/// Exhaustively checks the defining relations of the presentation on
/// generators s_i, b_i.
bool check_relations(int k);

} // namespace ubp
