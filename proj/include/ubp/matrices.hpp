#pragma once

#include <string>
#include <vector>

#include "ubp/partition.hpp"

namespace ubp {

/// A square integer matrix indexed by the totally ordered I_k.
struct CharMatrix {
    int k = 0;
    std::vector<VectorPartition> order;
    std::vector<std::vector<long long>> entries;

    static CharMatrix zeros(int k);

    int size() const { return static_cast<int>(order.size()); }
    long long at(int r, int c) const { return entries[r][c]; }

    bool operator==(const CharMatrix& o) const { return k == o.k && entries == o.entries; }
    bool operator!=(const CharMatrix& o) const { return !(*this == o); }

    bool upper_unitriangular() const;
    bool nonnegative() const;

    /// Aligned text with horizontal/vertical rules between type blocks,
    /// mirroring the table layout used for X_k, A_k, B_k, U_k.
    std::string to_text() const;
};

CharMatrix matmul(const CharMatrix& a, const CharMatrix& b);

} // namespace ubp
