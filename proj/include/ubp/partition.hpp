#pragma once

#include <string>
#include <vector>

#include "ubp/numeric.hpp"

namespace ubp {

/// An integer partition: a nonincreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }

    /// Multiplicity of each part value, index 1..max_part (index 0 unused).
    std::vector<int> multiplicities(int upto = 0) const;

    /// z = prod(parts) * prod(multiplicity factorials).
    Int z() const;

    /// Scale every part by a positive integer factor.
    Partition scaled(int factor) const;

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/// Reverse-lexicographic order: lam precedes mu when lam_i > mu_i at the
/// first index where they differ (missing parts compare as 0).
bool rl_less(const Partition& a, const Partition& b);

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of the given shape (hook lengths).
Int hook_count(const Partition& shape);

/// A sequence of k partitions (lam^(1),...,lam^(k)); membership in I_k means
/// sum over i of i*|lam^(i)| equals k. Trailing empty components are kept
/// internally and elided in display.
class VectorPartition {
public:
    VectorPartition() = default;
    explicit VectorPartition(std::vector<Partition> comps);

    const std::vector<Partition>& components() const { return comps_; }
    const Partition& component(int i) const;  // 1-based slot
    int slots() const { return static_cast<int>(comps_.size()); }

    /// sum over i of i*|lam^(i)|.
    int weight() const;

    /// The partition with |lam^(i)| parts equal to i, sorted nonincreasing.
    Partition type_up() const;

    /// Product of the component z-weights.
    Int z() const;

    /// True if every component beyond `slots` is empty; used when a fixed
    /// number of slots is expected.
    VectorPartition padded(int slots) const;
    VectorPartition trimmed() const;

    std::string to_string() const;
    /// Inverse of to_string: a JSON-style array of arrays, e.g. [[2,1],[],[3]].
    static VectorPartition parse(const std::string& text);

    bool operator==(const VectorPartition& o) const;
    bool operator!=(const VectorPartition& o) const { return !(*this == o); }
    bool operator<(const VectorPartition& o) const;  // the I_k total order

private:
    std::vector<Partition> comps_;  // stored trimmed (no trailing empties)
};

/// All elements of I_k sorted by the total order: type_up compared by
/// reverse-lex, ties broken componentwise by reverse-lex.
std::vector<VectorPartition> enumerate_Ik(int k);

/// Multiset union of two vector partitions (componentwise part merge).
VectorPartition vp_union(const VectorPartition& a, const VectorPartition& b);

/// Componentwise scaling: every part of every component times factor,
/// slots unchanged.
VectorPartition vp_scaled(const VectorPartition& a, int factor);

} // namespace ubp
