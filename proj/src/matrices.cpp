#include "ubp/matrices.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ubp {

CharMatrix CharMatrix::zeros(int k) {
    CharMatrix m;
    m.k = k;
    m.order = enumerate_Ik(k);
    m.entries.assign(m.order.size(), std::vector<long long>(m.order.size(), 0));
    return m;
}

bool CharMatrix::upper_unitriangular() const {
    for (int r = 0; r < size(); ++r) {
        if (entries[r][r] != 1) return false;
        for (int c = 0; c < r; ++c)
            if (entries[r][c] != 0) return false;
    }
    return true;
}

bool CharMatrix::nonnegative() const {
    for (const auto& row : entries)
        for (long long v : row)
            if (v < 0) return false;
    return true;
}

namespace {

std::string compact_label(const VectorPartition& vp) {
    std::ostringstream os;
    os << '(';
    int s = vp.slots();
    if (s == 0) os << ')';
    for (int i = 1; i <= s; ++i) {
        const auto& comp = vp.component(i);
        if (comp.empty()) {
            os << '-';
        } else {
            for (std::size_t j = 0; j < comp.parts().size(); ++j) {
                if (j) os << ',';
                os << comp.parts()[j];
            }
        }
        os << (i == s ? ')' : ';');
    }
    return os.str();
}

} // namespace

std::string CharMatrix::to_text() const {
    int n = size();
    std::vector<std::string> labels(n);
    std::size_t lw = 0;
    for (int i = 0; i < n; ++i) {
        labels[i] = compact_label(order[i]);
        lw = std::max(lw, labels[i].size());
    }
    std::vector<std::size_t> cw(n, 1);
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            cells[r][c] = std::to_string(entries[r][c]);
            cw[c] = std::max(cw[c], cells[r][c].size());
        }
    // block boundaries where the type changes
    std::vector<bool> boundary(n, false);
    for (int i = 1; i < n; ++i)
        boundary[i] = !(order[i].type_up() == order[i - 1].type_up());
    std::ostringstream os;
    for (int r = 0; r < n; ++r) {
        if (boundary[r]) {
            os << std::string(lw, '-') << "-+";
            for (int c = 0; c < n; ++c) {
                os << std::string(cw[c] + 1, '-');
                if (c + 1 < n && boundary[c + 1]) os << "-+";
            }
            os << '\n';
        }
        os << labels[r] << std::string(lw - labels[r].size(), ' ') << " |";
        for (int c = 0; c < n; ++c) {
            os << ' ' << std::string(cw[c] - cells[r][c].size(), ' ') << cells[r][c];
            if (c + 1 < n && boundary[c + 1]) os << " |";
        }
        os << '\n';
    }
    return os.str();
}

CharMatrix matmul(const CharMatrix& a, const CharMatrix& b) {
    if (a.k != b.k) throw std::invalid_argument("matmul: size mismatch");
    CharMatrix m = CharMatrix::zeros(a.k);
    int n = m.size();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            long long s = 0;
            for (int t = 0; t < n; ++t) s += a.entries[r][t] * b.entries[t][c];
            m.entries[r][c] = s;
        }
    return m;
}

} // namespace ubp
