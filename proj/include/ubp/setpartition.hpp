#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ubp/numeric.hpp"
#include "ubp/partition.hpp"

namespace ubp {

/// A set partition of [k] = {1,...,k}. Blocks are kept in canonical form:
/// each block sorted ascending, blocks sorted by graded last letter order
/// (size first, then maximum element).
class SetPartition {
public:
    SetPartition() : k_(0) {}
    SetPartition(int k, std::vector<std::vector<int>> blocks);

    /// The discrete partition 1|2|...|k.
    static SetPartition discrete(int k);
    /// The single-block partition of [k] (k >= 1).
    static SetPartition full(int k);
    /// Build from a block-id array of length k (arbitrary ids).
    static SetPartition from_block_ids(const std::vector<int>& ids);

    int k() const { return k_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i]; }
    /// Index (into blocks()) of the block containing element x.
    int block_of(int x) const;

    Partition type() const;

    /// Image under a permutation of [k]; perm[i] is the image of i+1.
    SetPartition apply(const std::vector<int>& perm) const;

    /// Text form: blocks joined by '|'. Elements juxtaposed when k <= 9,
    /// comma-separated otherwise.
    std::string to_string() const;
    static SetPartition parse(const std::string& text, int k = 0);

    bool operator==(const SetPartition& o) const { return k_ == o.k_ && blocks_ == o.blocks_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const;

private:
    int k_;
    std::vector<std::vector<int>> blocks_;
};

/// Graded last letter order on blocks: smaller size first, ties by max element.
bool block_less(const std::vector<int>& a, const std::vector<int>& b);

/// Finest common coarsening of two set partitions of the same [k].
SetPartition join(const SetPartition& a, const SetPartition& b);

/// True when every block of fine is contained in a block of coarse.
bool is_finer(const SetPartition& fine, const SetPartition& coarse);

/// Number of set partitions of [k] of type lam (closed formula).
Int sp_count(int k, const Partition& lam);

/// All set partitions of [k], restricted-growth-string lexicographic order,
/// optionally filtered by type.
std::vector<SetPartition> enumerate_set_partitions(
    int k, const std::optional<Partition>& type_filter = std::nullopt);

} // namespace ubp
