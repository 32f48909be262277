#include "ubp/setpartition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ubp {

bool block_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.back() < b.back();
}

SetPartition::SetPartition(int k, std::vector<std::vector<int>> blocks)
    : k_(k), blocks_(std::move(blocks)) {
    std::vector<char> seen(k_ + 1, 0);
    int total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("set partition blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > k_) throw std::invalid_argument("set partition element out of range");
            if (seen[x]) throw std::invalid_argument("set partition blocks must be disjoint");
            seen[x] = 1;
            ++total;
        }
    }
    if (total != k_) throw std::invalid_argument("set partition blocks must cover [k]");
    std::sort(blocks_.begin(), blocks_.end(), block_less);
}

SetPartition SetPartition::discrete(int k) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i});
    return SetPartition(k, std::move(blocks));
}

SetPartition SetPartition::full(int k) {
    if (k < 1) throw std::invalid_argument("full set partition needs k >= 1");
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i + 1;
    return SetPartition(k, {all});
}

SetPartition SetPartition::from_block_ids(const std::vector<int>& ids) {
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < ids.size(); ++i) groups[ids[i]].push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [id, b] : groups) blocks.push_back(std::move(b));
    return SetPartition(static_cast<int>(ids.size()), std::move(blocks));
}

int SetPartition::block_of(int x) const {
    for (int i = 0; i < block_count(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) return i;
    throw std::invalid_argument("element not in set partition");
}

Partition SetPartition::type() const {
    std::vector<int> sizes;
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return Partition(std::move(sizes));
}

SetPartition SetPartition::apply(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != k_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : blocks_) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(perm[x - 1]);
        blocks.push_back(std::move(nb));
    }
    return SetPartition(k_, std::move(blocks));
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    bool commas = k_ > 9;
    for (int i = 0; i < block_count(); ++i) {
        if (i) os << '|';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j && commas) os << ',';
            os << blocks_[i][j];
        }
    }
    return os.str();
}

SetPartition SetPartition::parse(const std::string& text, int k) {
    // Elements are juxtaposed single digits when k <= 9 (or k is inferred);
    // for k >= 10 each maximal digit run is one element and blocks need commas.
    bool whole_numbers = k > 9;
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    int maxel = 0;

    auto flush_block = [&]() {
        if (cur.empty()) throw std::invalid_argument("empty block in set partition text");
        for (int x : cur) maxel = std::max(maxel, x);
        blocks.push_back(cur);
        cur.clear();
    };

    std::size_t i = 0;
    bool done_any = false;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (c == '|') {
            flush_block();
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in set partition text");
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        std::string num = text.substr(i, j - i);
        if (whole_numbers)
            cur.push_back(std::stoi(num));
        else
            for (char d : num) cur.push_back(d - '0');
        done_any = true;
        i = j;
    }
    if (done_any || !cur.empty()) flush_block();
    if (k == 0) k = maxel;
    return SetPartition(k, std::move(blocks));
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (k_ != o.k_) return k_ < o.k_;
    return blocks_ < o.blocks_;
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.k() != b.k()) throw std::invalid_argument("join: mismatched ground sets");
    int k = a.k();
    std::vector<int> parent(k + 1);
    for (int i = 0; i <= k; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (const auto* sp : {&a, &b})
        for (const auto& blk : sp->blocks())
            for (std::size_t j = 1; j < blk.size(); ++j) unite(blk[0], blk[j]);
    std::vector<int> ids(k);
    for (int i = 1; i <= k; ++i) ids[i - 1] = find(i);
    return SetPartition::from_block_ids(ids);
}

bool is_finer(const SetPartition& fine, const SetPartition& coarse) {
    if (fine.k() != coarse.k()) throw std::invalid_argument("is_finer: mismatched ground sets");
    for (const auto& b : fine.blocks()) {
        int target = coarse.block_of(b[0]);
        for (int x : b)
            if (coarse.block_of(x) != target) return false;
    }
    return true;
}

Int sp_count(int k, const Partition& lam) {
    if (lam.weight() != k) throw std::invalid_argument("sp_count: |lam| != k");
    Int den = 1;
    auto m = lam.multiplicities();
    for (std::size_t v = 1; v < m.size(); ++v) {
        den *= factorial(m[v]);
        Int fv = factorial(static_cast<int>(v));
        for (int c = 0; c < m[v]; ++c) den *= fv;
    }
    return factorial(k) / den;
}

std::vector<SetPartition> enumerate_set_partitions(int k,
                                                   const std::optional<Partition>& type_filter) {
    if (k < 0) throw std::invalid_argument("enumerate_set_partitions: negative k");
    if (type_filter && type_filter->weight() != k)
        throw std::invalid_argument("enumerate_set_partitions: filter weight != k");
    std::vector<SetPartition> out;
    std::vector<int> rgs(k, 0);
    std::function<void(int, int)> rec = [&](int pos, int maxid) {
        if (pos == k) {
            SetPartition sp = SetPartition::from_block_ids(rgs);
            if (!type_filter || sp.type() == *type_filter) out.push_back(std::move(sp));
            return;
        }
        for (int id = 0; id <= maxid + 1; ++id) {
            rgs[pos] = id;
            rec(pos + 1, std::max(maxid, id));
        }
    };
    if (k == 0) {
        out.push_back(SetPartition(0, {}));
        return out;
    }
    rec(0, -1);
    return out;
}

} // namespace ubp
