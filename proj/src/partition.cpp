#include "ubp/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ubp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be nonincreasing");
    }
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::vector<int> Partition::multiplicities(int upto) const {
    int hi = upto;
    if (!parts_.empty()) hi = std::max(hi, parts_.front());
    std::vector<int> m(hi + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

Int Partition::z() const {
    Int z = 1;
    for (int p : parts_) z *= p;
    auto m = multiplicities();
    for (std::size_t v = 1; v < m.size(); ++v) z *= factorial(m[v]);
    return z;
}

Partition Partition::scaled(int factor) const {
    std::vector<int> s = parts_;
    for (int& p : s) p *= factor;
    return Partition(std::move(s));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

bool rl_less(const Partition& a, const Partition& b) {
    const auto& x = a.parts();
    const auto& y = b.parts();
    for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
        int xi = i < x.size() ? x[i] : 0;
        int yi = i < y.size() ? y[i] : 0;
        if (xi != yi) return xi > yi;
    }
    return false;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Int hook_count(const Partition& shape) {
    const auto& rows = shape.parts();
    int n = shape.weight();
    if (n == 0) return 1;
    std::vector<int> conj(rows.empty() ? 0 : rows[0], 0);
    for (int r : rows)
        for (int c = 0; c < r; ++c) ++conj[c];
    Int num = factorial(n), den = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j)
            den *= (rows[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
    return num / den;
}

VectorPartition::VectorPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
    while (!comps_.empty() && comps_.back().empty()) comps_.pop_back();
}

const Partition& VectorPartition::component(int i) const {
    static const Partition empty;
    if (i < 1) throw std::invalid_argument("component index is 1-based");
    if (i > slots()) return empty;
    return comps_[i - 1];
}

int VectorPartition::weight() const {
    int w = 0;
    for (int i = 0; i < slots(); ++i) w += (i + 1) * comps_[i].weight();
    return w;
}

Partition VectorPartition::type_up() const {
    std::vector<int> parts;
    for (int i = slots(); i >= 1; --i)
        for (int j = 0; j < comps_[i - 1].weight(); ++j) parts.push_back(i);
    return Partition(std::move(parts));
}

Int VectorPartition::z() const {
    Int z = 1;
    for (const auto& c : comps_) z *= c.z();
    return z;
}

VectorPartition VectorPartition::padded(int /*slots*/) const { return *this; }

VectorPartition VectorPartition::trimmed() const { return *this; }

std::string VectorPartition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < slots(); ++i) {
        if (i) os << ',';
        os << comps_[i].to_string();
    }
    os << ']';
    return os.str();
}

VectorPartition VectorPartition::parse(const std::string& text) {
    std::vector<Partition> comps;
    std::vector<int> cur;
    int depth = 0;
    bool in_inner = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (c == '[') {
            ++depth;
            if (depth == 2) {
                in_inner = true;
                cur.clear();
            }
            if (depth > 2) throw std::invalid_argument("vector partition text: nesting too deep");
            ++i;
            continue;
        }
        if (c == ']') {
            if (depth == 2) {
                comps.emplace_back(cur);
                in_inner = false;
            }
            --depth;
            if (depth < 0) throw std::invalid_argument("vector partition text: unbalanced brackets");
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!in_inner)
                throw std::invalid_argument("vector partition text: number outside component");
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            cur.push_back(std::stoi(text.substr(i, j - i)));
            i = j;
            continue;
        }
        throw std::invalid_argument(std::string("vector partition text: unexpected character '") +
                                    c + "'");
    }
    if (depth != 0) throw std::invalid_argument("vector partition text: unbalanced brackets");
    return VectorPartition(std::move(comps));
}

bool VectorPartition::operator==(const VectorPartition& o) const { return comps_ == o.comps_; }

bool VectorPartition::operator<(const VectorPartition& o) const {
    Partition ta = type_up(), tb = o.type_up();
    if (ta != tb) return rl_less(ta, tb);
    int s = std::max(slots(), o.slots());
    for (int i = 1; i <= s; ++i) {
        const Partition& a = component(i);
        const Partition& b = o.component(i);
        if (a != b) return rl_less(a, b);
    }
    return false;
}

std::vector<VectorPartition> enumerate_Ik(int k) {
    if (k < 0) throw std::invalid_argument("enumerate_Ik: negative k");
    std::vector<VectorPartition> out;
    std::vector<Partition> cur;
    // choose |lam^(i)| = a_i with sum i*a_i = k, then a partition of a_i per slot
    std::function<void(int, int)> rec = [&](int slot, int rest) {
        if (slot > k) {
            if (rest == 0) out.emplace_back(cur);
            return;
        }
        for (int a = 0; a * slot <= rest; ++a) {
            for (const auto& p : partitions_of(a)) {
                cur.push_back(p);
                rec(slot + 1, rest - a * slot);
                cur.pop_back();
            }
        }
    };
    rec(1, k);
    std::sort(out.begin(), out.end());
    return out;
}

VectorPartition vp_union(const VectorPartition& a, const VectorPartition& b) {
    int s = std::max(a.slots(), b.slots());
    std::vector<Partition> comps;
    comps.reserve(s);
    for (int i = 1; i <= s; ++i) {
        std::vector<int> parts = a.component(i).parts();
        const auto& more = b.component(i).parts();
        parts.insert(parts.end(), more.begin(), more.end());
        std::sort(parts.rbegin(), parts.rend());
        comps.emplace_back(std::move(parts));
    }
    return VectorPartition(std::move(comps));
}

VectorPartition vp_scaled(const VectorPartition& a, int factor) {
    std::vector<Partition> comps;
    comps.reserve(a.slots());
    for (int i = 1; i <= a.slots(); ++i) comps.push_back(a.component(i).scaled(factor));
    return VectorPartition(std::move(comps));
}

} // namespace ubp
