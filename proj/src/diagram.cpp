#include "ubp/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ubp {

namespace {

// Renumber ids in order of first occurrence; returns the block count.
int canonicalize(std::vector<int>& ids) {
    std::map<int, int> remap;
    for (int& id : ids) id = remap.try_emplace(id, static_cast<int>(remap.size())).first->second;
    return static_cast<int>(remap.size());
}

void check_uniform(int k, const std::vector<int>& ids, int nblocks) {
    std::vector<int> topcount(nblocks, 0), botcount(nblocks, 0);
    for (int v = 0; v < k; ++v) ++topcount[ids[v]];
    for (int v = k; v < 2 * k; ++v) ++botcount[ids[v]];
    for (int b = 0; b < nblocks; ++b)
        if (topcount[b] != botcount[b])
            throw std::invalid_argument("block " + std::to_string(b + 1) +
                                        " is not uniform (unbarred/barred counts differ)");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

} // namespace

Diagram Diagram::from_vertex_ids(int k, const std::vector<int>& ids) {
    if (static_cast<int>(ids.size()) != 2 * k)
        throw std::invalid_argument("vertex id array must have length 2k");
    Diagram d;
    d.k_ = k;
    d.ids_ = ids;
    d.nblocks_ = canonicalize(d.ids_);
    check_uniform(k, d.ids_, d.nblocks_);
    return d;
}

Diagram Diagram::from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> ids(2 * k, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) {
            if (v < 0 || v >= 2 * k) throw std::invalid_argument("vertex out of range");
            if (ids[v] != -1) throw std::invalid_argument("blocks must be disjoint");
            ids[v] = static_cast<int>(b);
        }
    for (int v = 0; v < 2 * k; ++v)
        if (ids[v] == -1) throw std::invalid_argument("blocks must cover all vertices");
    return from_vertex_ids(k, ids);
}

Diagram Diagram::identity(int k) {
    std::vector<int> ids(2 * k);
    for (int i = 0; i < k; ++i) ids[i] = ids[k + i] = i;
    return from_vertex_ids(k, ids);
}

Diagram Diagram::permutation(const std::vector<int>& perm) {
    int k = static_cast<int>(perm.size());
    std::vector<char> seen(k + 1, 0);
    std::vector<int> ids(2 * k);
    for (int i = 1; i <= k; ++i) {
        int img = perm[i - 1];
        if (img < 1 || img > k || seen[img]) throw std::invalid_argument("not a permutation");
        seen[img] = 1;
        ids[i - 1] = i - 1;
        ids[k + img - 1] = i - 1;
    }
    return from_vertex_ids(k, ids);
}

Diagram Diagram::idempotent_of(const SetPartition& pi) {
    int k = pi.k();
    std::vector<int> ids(2 * k);
    for (int b = 0; b < pi.block_count(); ++b)
        for (int x : pi.block(b)) {
            ids[x - 1] = b;
            ids[k + x - 1] = b;
        }
    return from_vertex_ids(k, ids);
}

Diagram Diagram::block_bijection(const SetPartition& gamma, const SetPartition& pi,
                                 const std::vector<int>& match) {
    if (gamma.k() != pi.k()) throw std::invalid_argument("block_bijection: mismatched k");
    if (static_cast<int>(match.size()) != gamma.block_count())
        throw std::invalid_argument("block_bijection: match size mismatch");
    int k = pi.k();
    std::vector<int> ids(2 * k, -1);
    for (int b = 0; b < gamma.block_count(); ++b) {
        const auto& gb = gamma.block(b);
        const auto& pb = pi.block(match[b]);
        if (gb.size() != pb.size())
            throw std::invalid_argument("block_bijection: block sizes differ");
        for (int x : gb) ids[x - 1] = b;
        for (int x : pb) ids[k + x - 1] = b;
    }
    return from_vertex_ids(k, ids);
}

Diagram Diagram::gen_s(int k, int i) {
    if (i < 1 || i >= k) throw std::invalid_argument("gen_s: index out of range");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    std::swap(perm[i - 1], perm[i]);
    return permutation(perm);
}

Diagram Diagram::gen_b(int k, int i) {
    if (i < 1 || i >= k) throw std::invalid_argument("gen_b: index out of range");
    std::vector<int> ids(2 * k);
    for (int v = 1; v <= k; ++v) {
        int b = (v == i + 1) ? i - 1 : v - 1;
        ids[v - 1] = b;
        ids[k + v - 1] = b;
    }
    return from_vertex_ids(k, ids);
}

SetPartition Diagram::top() const {
    return SetPartition::from_block_ids(std::vector<int>(ids_.begin(), ids_.begin() + k_));
}

SetPartition Diagram::bot() const {
    return SetPartition::from_block_ids(std::vector<int>(ids_.begin() + k_, ids_.end()));
}

bool Diagram::is_idempotent() const { return multiply(*this, *this) == *this; }

bool Diagram::is_permutation() const { return nblocks_ == k_; }

std::vector<int> Diagram::as_permutation() const {
    if (!is_permutation()) throw std::invalid_argument("diagram is not a permutation");
    std::vector<int> img_of_block(nblocks_, 0), perm(k_);
    for (int v = 0; v < k_; ++v) img_of_block[ids_[k_ + v]] = v + 1;
    for (int v = 0; v < k_; ++v) perm[v] = img_of_block[ids_[v]];
    return perm;
}

std::vector<int> Diagram::block_top(int b) const {
    std::vector<int> r;
    for (int v = 0; v < k_; ++v)
        if (ids_[v] == b) r.push_back(v + 1);
    return r;
}

std::vector<int> Diagram::block_bot(int b) const {
    std::vector<int> r;
    for (int v = 0; v < k_; ++v)
        if (ids_[k_ + v] == b) r.push_back(v + 1);
    return r;
}

std::string Diagram::to_string() const {
    std::ostringstream os;
    for (int b = 0; b < nblocks_; ++b) {
        if (b) os << '|';
        bool first = true;
        for (int x : block_top(b)) {
            if (!first) os << ',';
            os << x;
            first = false;
        }
        for (int x : block_bot(b)) {
            if (!first) os << ',';
            os << x << '\'';
            first = false;
        }
    }
    return os.str();
}

Diagram Diagram::parse(const std::string& text, int k) {
    struct Token {
        int value;
        bool barred;
    };
    std::vector<std::vector<Token>> blocks(1);
    std::size_t i = 0;
    int maxel = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (c == '|') {
            blocks.emplace_back();
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in diagram text");
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        int value = std::stoi(text.substr(i, j - i));
        bool barred = j < text.size() && text[j] == '\'';
        if (barred) ++j;
        blocks.back().push_back({value, barred});
        maxel = std::max(maxel, value);
        i = j;
    }
    while (!blocks.empty() && blocks.back().empty()) blocks.pop_back();
    if (k == 0) k = maxel;
    std::vector<int> ids(2 * k, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block in diagram text");
        for (const Token& t : blocks[b]) {
            if (t.value < 1 || t.value > k)
                throw std::invalid_argument("diagram element out of range in block " +
                                            std::to_string(b + 1));
            int v = t.barred ? k + t.value - 1 : t.value - 1;
            if (ids[v] != -1)
                throw std::invalid_argument("repeated element in diagram text in block " +
                                            std::to_string(b + 1));
            ids[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < 2 * k; ++v)
        if (ids[v] == -1)
            throw std::invalid_argument("diagram text does not cover [k] and [k-bar]");
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        int unbarred = 0, barred = 0;
        for (const Token& t : blocks[b]) (t.barred ? barred : unbarred)++;
        if (unbarred != barred)
            throw std::invalid_argument("block " + std::to_string(b + 1) +
                                        " is not uniform (unbarred/barred counts differ)");
    }
    return from_vertex_ids(k, ids);
}

bool Diagram::operator<(const Diagram& o) const {
    if (k_ != o.k_) return k_ < o.k_;
    return ids_ < o.ids_;
}

std::size_t Diagram::Hash::operator()(const Diagram& d) const {
    std::size_t h = std::hash<int>()(d.k_);
    for (int id : d.ids_) h = h * 1000003u + static_cast<std::size_t>(id);
    return h;
}

Diagram multiply(const Diagram& d, const Diagram& d2) {
    if (d.k() != d2.k()) throw std::invalid_argument("multiply: mismatched k");
    int k = d.k();
    // rows: top of d (0..k-1), middle (k..2k-1), bottom of d2 (2k..3k-1)
    UnionFind uf(3 * k);
    const auto& a = d.vertex_ids();
    const auto& b = d2.vertex_ids();
    std::vector<int> first_a(d.block_count(), -1), first_b(d2.block_count(), -1);
    for (int v = 0; v < 2 * k; ++v) {
        int& fa = first_a[a[v]];
        if (fa == -1)
            fa = v;
        else
            uf.unite(v, fa);
    }
    for (int v = 0; v < 2 * k; ++v) {
        int w = v + k;  // d2's top row coincides with the middle row
        int& fb = first_b[b[v]];
        if (fb == -1)
            fb = w;
        else
            uf.unite(w, fb);
    }
    std::vector<int> ids(2 * k);
    for (int v = 0; v < k; ++v) ids[v] = uf.find(v);
    for (int v = 0; v < k; ++v) ids[k + v] = uf.find(2 * k + v);
    return Diagram::from_vertex_ids(k, ids);
}

Diagram involution(const Diagram& d) {
    int k = d.k();
    std::vector<int> ids(2 * k);
    const auto& src = d.vertex_ids();
    for (int v = 0; v < k; ++v) {
        ids[v] = src[k + v];
        ids[k + v] = src[v];
    }
    return Diagram::from_vertex_ids(k, ids);
}

Factorization factorize(const Diagram& d) {
    int k = d.k();
    std::vector<int> perm(k, 0);
    for (int b = 0; b < d.block_count(); ++b) {
        auto t = d.block_top(b);
        auto z = d.block_bot(b);
        for (std::size_t j = 0; j < t.size(); ++j) perm[t[j] - 1] = z[j];
    }
    Factorization f{perm, Diagram::permutation(perm)};
    Diagram et = Diagram::idempotent_of(d.top());
    Diagram eb = Diagram::idempotent_of(d.bot());
    if (multiply(et, f.sigma_diagram) != d || multiply(f.sigma_diagram, eb) != d)
        throw std::logic_error("factorize: verification failed");
    return f;
}

std::vector<Diagram> enumerate_monoid(int k, int max_k) {
    if (k > max_k)
        throw std::runtime_error("enumerate_monoid: k = " + std::to_string(k) +
                                 " exceeds the configured bound " + std::to_string(max_k));
    std::vector<Diagram> out;
    if (k == 0) {
        out.push_back(Diagram::identity(0));
        return out;
    }
    for (const Partition& lam : partitions_of(k)) {
        auto parts = enumerate_set_partitions(k, lam);
        for (const SetPartition& gamma : parts)
            for (const SetPartition& pi : parts) {
                // size classes share positions in the graded block order
                int n = gamma.block_count();
                std::vector<std::pair<int, int>> ranges;  // [begin, end) of equal size
                for (int b = 0; b < n;) {
                    int e = b;
                    while (e < n && gamma.block(e).size() == gamma.block(b).size()) ++e;
                    ranges.emplace_back(b, e);
                    b = e;
                }
                std::vector<int> match(n);
                std::iota(match.begin(), match.end(), 0);
                std::function<void(std::size_t)> rec = [&](std::size_t r) {
                    if (r == ranges.size()) {
                        out.push_back(Diagram::block_bijection(gamma, pi, match));
                        return;
                    }
                    auto [lo, hi] = ranges[r];
                    std::vector<int> idx(match.begin() + lo, match.begin() + hi);
                    std::sort(idx.begin(), idx.end());
                    do {
                        std::copy(idx.begin(), idx.end(), match.begin() + lo);
                        rec(r + 1);
                    } while (std::next_permutation(idx.begin(), idx.end()));
                };
                rec(0);
            }
    }
    return out;
}

Int monoid_order(int k) {
    Int total = 0;
    for (const Partition& lam : partitions_of(k)) {
        Int sp = sp_count(k, lam);
        Int afact = 1;
        auto m = lam.multiplicities();
        for (std::size_t v = 1; v < m.size(); ++v) afact *= factorial(m[v]);
        total += sp * sp * afact;
    }
    return total;
}

bool check_relations(int k) {
    if (k < 2) return true;
    auto s = [&](int i) { return Diagram::gen_s(k, i); };
    auto b = [&](int i) { return Diagram::gen_b(k, i); };
    Diagram one = Diagram::identity(k);
    for (int i = 1; i < k; ++i) {
        if (multiply(s(i), s(i)) != one) return false;                       // (1)
        if (multiply(b(i), b(i)) != b(i)) return false;                      // (2)
        if (multiply(b(i), s(i)) != b(i)) return false;                      // (7)
        if (multiply(s(i), b(i)) != b(i)) return false;                      // (7)
    }
    for (int i = 1; i + 1 < k; ++i) {
        if (multiply(multiply(s(i), s(i + 1)), s(i)) !=
            multiply(multiply(s(i + 1), s(i)), s(i + 1)))
            return false;                                                    // (3)
        if (multiply(multiply(s(i), b(i + 1)), s(i)) !=
            multiply(multiply(s(i + 1), b(i)), s(i + 1)))
            return false;                                                    // (4)
    }
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j) {
            if (std::abs(i - j) > 1) {
                if (multiply(s(i), s(j)) != multiply(s(j), s(i))) return false;  // (5)
                if (multiply(b(i), s(j)) != multiply(s(j), b(i))) return false;  // (6)
            }
            if (multiply(b(i), b(j)) != multiply(b(j), b(i))) return false;      // (8)
        }
    return true;
}

} // namespace ubp
