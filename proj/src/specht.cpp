#include "ubp/specht.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ubp {

namespace {

// Tabloids of a fixed shape are encoded by the row index of every label.
using TabloidKey = std::vector<int>;
using TabloidExpansion = std::map<TabloidKey, long long>;

std::vector<int> conjugate_shape(const Partition& shape) {
    const auto& rows = shape.parts();
    std::vector<int> conj(rows.empty() ? 0 : rows[0], 0);
    for (int r : rows)
        for (int c = 0; c < r; ++c) ++conj[c];
    return conj;
}

TabloidKey tabloid_of(const Partition& shape, const Tableau& t) {
    TabloidKey key(shape.weight(), -1);
    for (std::size_t r = 0; r < t.size(); ++r)
        for (int v : t[r]) key[v] = static_cast<int>(r);
    return key;
}

// e_t = sum over the column group of the signed tabloids of sigma * t.
TabloidExpansion polytabloid(const Partition& shape, const Tableau& t) {
    auto conj = conjugate_shape(shape);
    int ncols = static_cast<int>(conj.size());
    TabloidExpansion out;
    TabloidKey key = tabloid_of(shape, t);
    auto inversions = [](const std::vector<int>& v) {
        int inv = 0;
        for (std::size_t a = 0; a < v.size(); ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b)
                if (v[a] > v[b]) ++inv;
        return inv;
    };
    std::function<void(int, long long)> rec = [&](int col, long long sign) {
        if (col == ncols) {
            out[key] += sign;
            return;
        }
        int height = conj[col];
        std::vector<int> orig(height);
        for (int r = 0; r < height; ++r) orig[r] = t[r][col];
        // sign of the column permutation taking the original arrangement to
        // the current one: parity relative to the original inversion count
        int base = inversions(orig);
        std::vector<int> labels = orig;
        std::sort(labels.begin(), labels.end());
        do {
            long long s = ((inversions(labels) + base) % 2) ? -1 : 1;
            for (int r = 0; r < height; ++r) key[labels[r]] = r;
            rec(col + 1, sign * s);
        } while (std::next_permutation(labels.begin(), labels.end()));
        for (int r = 0; r < height; ++r) key[orig[r]] = r;  // restore
    };
    rec(0, 1);
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

struct ShapeData {
    std::vector<Tableau> standards;
    std::vector<TabloidExpansion> expansions;          // per standard tableau
    std::map<TabloidKey, int> leading;                 // leading tabloid -> index
    std::map<int, std::vector<std::vector<long long>>> gen_matrices;
};

std::mutex cache_mutex;
std::map<Partition, ShapeData>& shape_cache() {
    static std::map<Partition, ShapeData> cache;
    return cache;
}

std::vector<Tableau> generate_standard(const Partition& shape) {
    int n = shape.weight();
    const auto& rows = shape.parts();
    std::vector<Tableau> out;
    Tableau cur(rows.size());
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::size_t c = cur[r].size();
            if (static_cast<int>(c) >= rows[r]) continue;
            if (r > 0 && cur[r - 1].size() <= c) continue;
            cur[r].push_back(v);
            rec(v + 1);
            cur[r].pop_back();
        }
    };
    rec(0);
    auto reading = [](const Tableau& t) {
        std::vector<int> w;
        for (const auto& row : t) w.insert(w.end(), row.begin(), row.end());
        return w;
    };
    std::sort(out.begin(), out.end(),
              [&](const Tableau& a, const Tableau& b) { return reading(a) < reading(b); });
    return out;
}

ShapeData& shape_data(const Partition& shape) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = shape_cache();
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
    ShapeData data;
    data.standards = generate_standard(shape);
    for (std::size_t i = 0; i < data.standards.size(); ++i) {
        data.expansions.push_back(polytabloid(shape, data.standards[i]));
        // leading tabloid = lexicographically smallest row-index key
        const auto& lead = data.expansions.back().begin()->first;
        data.leading[lead] = static_cast<int>(i);
    }
    return cache.emplace(shape, std::move(data)).first->second;
}

} // namespace

const std::vector<Tableau>& standard_tableaux(const Partition& shape) {
    return shape_data(shape).standards;
}

std::vector<std::pair<Tableau, long long>> straighten(const Partition& shape, const Tableau& t) {
    int n = shape.weight();
    const auto& rows = shape.parts();
    if (t.size() != rows.size()) throw std::invalid_argument("straighten: wrong row count");
    std::vector<int> count(n, 0);
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (static_cast<int>(t[r].size()) != rows[r])
            throw std::invalid_argument("straighten: wrong row length");
        for (int v : t[r]) {
            if (v < 0 || v >= n) throw std::invalid_argument("straighten: label out of range");
            ++count[v];
        }
    }
    auto conj = conjugate_shape(shape);
    for (std::size_t c = 0; c < conj.size(); ++c) {
        std::vector<int> col;
        for (int r = 0; r < conj[c]; ++r) col.push_back(t[r][c]);
        std::sort(col.begin(), col.end());
        if (std::adjacent_find(col.begin(), col.end()) != col.end()) return {};  // antisymmetry
    }
    for (int v = 0; v < n; ++v)
        if (count[v] != 1) throw std::invalid_argument("straighten: repeated or missing label");

    ShapeData& data = shape_data(shape);
    TabloidExpansion rem = polytabloid(shape, t);
    std::vector<std::pair<Tableau, long long>> result;
    while (!rem.empty()) {
        auto lead = rem.begin();  // dominance-greatest tabloid
        auto hit = data.leading.find(lead->first);
        if (hit == data.leading.end())
            throw std::logic_error("straighten: leading tabloid is not standard");
        long long c = lead->second;
        int idx = hit->second;
        result.emplace_back(data.standards[idx], c);
        for (const auto& [key, coef] : data.expansions[idx]) {
            auto it = rem.find(key);
            long long nv = (it == rem.end() ? 0 : it->second) - c * coef;
            if (nv == 0) {
                if (it != rem.end()) rem.erase(it);
            } else if (it == rem.end()) {
                rem.emplace(key, nv);
            } else {
                it->second = nv;
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::vector<long long>> perm_matrix(const Partition& shape,
                                                const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != shape.weight())
        throw std::invalid_argument("perm_matrix: permutation size mismatch");
    const auto& standards = standard_tableaux(shape);
    int dim = static_cast<int>(standards.size());
    std::map<Tableau, int> index;
    for (int i = 0; i < dim; ++i) index[standards[i]] = i;
    std::vector<std::vector<long long>> m(dim, std::vector<long long>(dim, 0));
    for (int a = 0; a < dim; ++a) {
        Tableau img = standards[a];
        for (auto& row : img)
            for (int& v : row) v = w[v];
        for (const auto& [s, c] : straighten(shape, img)) m[a][index.at(s)] = c;
    }
    return m;
}

const std::vector<std::vector<long long>>& generator_matrix(const Partition& shape, int i) {
    if (i < 1 || i >= std::max(shape.weight(), 1))
        throw std::invalid_argument("generator_matrix: index out of range");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto& cache = shape_cache();
        auto it = cache.find(shape);
        if (it != cache.end()) {
            auto mit = it->second.gen_matrices.find(i);
            if (mit != it->second.gen_matrices.end()) return mit->second;
        }
    }
    std::vector<int> w(shape.weight());
    std::iota(w.begin(), w.end(), 0);
    std::swap(w[i - 1], w[i]);
    auto m = perm_matrix(shape, w);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return shape_cache()[shape].gen_matrices.emplace(i, std::move(m)).first->second;
}

namespace {

long long mn_value(const std::vector<int>& beta, const std::vector<int>& mu, std::size_t at,
                   std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (at == mu.size()) return 1;
    auto key = std::make_pair(beta, at);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long total = 0;
    int r = mu[at];
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int crossed = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++crossed;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        long long sub = mn_value(nb, mu, at + 1, memo);
        total += (crossed % 2 ? -sub : sub);
    }
    memo.emplace(key, total);
    return total;
}

} // namespace

long long character_sn(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("character_sn: |lam| != |mu|");
    int n = lam.weight();
    if (n == 0) return 1;
    static std::mutex mn_mutex;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> results;
    std::lock_guard<std::mutex> lock(mn_mutex);
    auto key = std::make_pair(lam.parts(), mu.parts());
    auto it = results.find(key);
    if (it != results.end()) return it->second;
    // beta-set of length n: beta_i = lam_i + (n - 1 - i), lam padded with zeros
    std::vector<int> beta(n);
    for (int i = 0; i < n; ++i)
        beta[i] = (i < lam.length() ? lam.part(i) : 0) + (n - 1 - i);
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    long long v = mn_value(beta, mu.parts(), 0, memo);
    results.emplace(key, v);
    return v;
}

std::vector<int> cycle_type_permutation(const Partition& mu) {
    std::vector<int> w(mu.weight());
    int start = 0;
    for (int part : mu.parts()) {
        for (int j = 0; j < part; ++j) w[start + j] = start + (j + 1) % part;
        start += part;
    }
    return w;
}

} // namespace ubp
