#include "ubp/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ubp/specht.hpp"

namespace ubp {

MultiSym MultiSym::one() {
    MultiSym f;
    f.terms_[VectorPartition()] = 1;
    return f;
}

MultiSym MultiSym::p(const VectorPartition& mu) {
    MultiSym f;
    f.terms_[mu] = 1;
    return f;
}

MultiSym MultiSym::p_single(const Partition& mu, int slot) {
    if (slot < 1) throw std::invalid_argument("p_single: slot must be positive");
    std::vector<Partition> comps(slot);
    comps[slot - 1] = mu;
    return p(VectorPartition(std::move(comps)));
}

MultiSym MultiSym::s_single(const Partition& lam, int slot) {
    MultiSym f;
    for (const Partition& mu : partitions_of(lam.weight())) {
        Rat c(character_sn(lam, mu));
        c /= Rat(mu.z());
        f += p_single(mu, slot).scaled(c);
    }
    return f;
}

Rat MultiSym::coefficient(const VectorPartition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultiSym::homogeneous_degree() const {
    int deg = -1;
    for (const auto& [key, c] : terms_) {
        int w = key.weight();
        if (deg == -1)
            deg = w;
        else if (deg != w)
            return -1;
    }
    return deg;
}

void MultiSym::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

MultiSym& MultiSym::operator+=(const MultiSym& o) {
    for (const auto& [key, c] : o.terms_) terms_[key] += c;
    prune();
    return *this;
}

MultiSym& MultiSym::operator-=(const MultiSym& o) {
    for (const auto& [key, c] : o.terms_) terms_[key] -= c;
    prune();
    return *this;
}

MultiSym MultiSym::operator+(const MultiSym& o) const {
    MultiSym r = *this;
    r += o;
    return r;
}

MultiSym MultiSym::operator-(const MultiSym& o) const {
    MultiSym r = *this;
    r -= o;
    return r;
}

MultiSym MultiSym::operator*(const MultiSym& o) const {
    MultiSym r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.terms_[vp_union(ka, kb)] += ca * cb;
    r.prune();
    return r;
}

MultiSym MultiSym::scaled(const Rat& c) const {
    MultiSym r;
    if (c == 0) return r;
    for (const auto& [key, v] : terms_) r.terms_[key] = v * c;
    return r;
}

std::string MultiSym::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*p" << key.to_string();
    }
    return os.str();
}

Rat scalar(const MultiSym& f, const MultiSym& g) {
    Rat total = 0;
    const auto& a = f.terms();
    const auto& b = g.terms();
    for (const auto& [key, c] : a) {
        auto it = b.find(key);
        if (it != b.end()) total += c * it->second * Rat(key.z());
    }
    return total;
}

MultiSym s_monomial(const VectorPartition& lam) {
    MultiSym f = MultiSym::one();
    for (int i = 1; i <= lam.slots(); ++i)
        if (!lam.component(i).empty()) f = f * MultiSym::s_single(lam.component(i), i);
    return f;
}

std::map<VectorPartition, Rat> p_to_s(const MultiSym& f) {
    int deg = f.homogeneous_degree();
    if (deg < 0) throw std::invalid_argument("p_to_s: inhomogeneous element");
    std::map<VectorPartition, Rat> out;
    for (const VectorPartition& lam : enumerate_Ik(deg)) {
        Rat c = scalar(f, s_monomial(lam));
        if (c != 0) out[lam] = c;
    }
    return out;
}

MultiSym pleth_p(int n, const MultiSym& f) {
    if (n < 1) throw std::invalid_argument("pleth_p: n must be positive");
    MultiSym r;
    MultiSym scaledsum;
    for (const auto& [key, c] : f.terms()) scaledsum += MultiSym::p(vp_scaled(key, n)).scaled(c);
    return scaledsum;
}

MultiSym pleth_s(const Partition& lam, const MultiSym& f) {
    MultiSym total;
    if (lam.empty()) return MultiSym::one();
    for (const Partition& mu : partitions_of(lam.weight())) {
        MultiSym term = MultiSym::one();
        for (int part : mu.parts()) term = term * pleth_p(part, f);
        Rat c(character_sn(lam, mu));
        c /= Rat(mu.z());
        total += term.scaled(c);
    }
    return total;
}

MultiSym E(int r) {
    if (r < 1) throw std::invalid_argument("E: r must be positive");
    MultiSym f;
    for (const VectorPartition& mu : enumerate_Ik(r))
        f += MultiSym::p(mu).scaled(Rat(1) / Rat(mu.z()));
    return f;
}

MultiSym E_schur_route(int r) {
    MultiSym f;
    for (const Partition& lam : partitions_of(r)) {
        auto m = lam.multiplicities();
        MultiSym term = MultiSym::one();
        for (std::size_t i = 1; i < m.size(); ++i)
            if (m[i] > 0) term = term * MultiSym::s_single(Partition({m[i]}), static_cast<int>(i));
        f += term;
    }
    return f;
}

MultiSym frob_char(const VectorPartition& lam) {
    MultiSym f = MultiSym::one();
    for (int i = 1; i <= lam.slots(); ++i)
        if (!lam.component(i).empty()) f = f * pleth_s(lam.component(i), E(i));
    return f;
}

MultiSym frobenius_of_classfunction(const std::map<VectorPartition, Rat>& values) {
    MultiSym f;
    for (const auto& [mu, v] : values) f += MultiSym::p(mu).scaled(v / Rat(mu.z()));
    return f;
}

namespace {

long long to_integer(const Rat& v, const char* what) {
    if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error(std::string(what) + ": non-integral value");
    return static_cast<long long>(boost::multiprecision::numerator(v));
}

} // namespace

CharMatrix X_matrix(int k) {
    CharMatrix m = CharMatrix::zeros(k);
    int n = m.size();
    for (int r = 0; r < n; ++r) {
        MultiSym f = frob_char(m.order[r]);
        for (int c = 0; c < n; ++c) {
            Rat v = f.coefficient(m.order[c]) * Rat(m.order[c].z());
            m.entries[r][c] = to_integer(v, "X_matrix");
        }
    }
    return m;
}

CharMatrix A_matrix(int k) {
    CharMatrix m = CharMatrix::zeros(k);
    int n = m.size();
    for (int r = 0; r < n; ++r) {
        Partition type = m.order[r].type_up();
        for (int c = 0; c < n; ++c) {
            if (!(m.order[c].type_up() == type)) continue;
            long long v = 1;
            for (int i = 1; i <= std::max(m.order[r].slots(), m.order[c].slots()); ++i)
                v *= character_sn(m.order[r].component(i), m.order[c].component(i));
            m.entries[r][c] = v;
        }
    }
    return m;
}

CharMatrix U_matrix(int k) {
    CharMatrix m = CharMatrix::zeros(k);
    int n = m.size();
    for (int r = 0; r < n; ++r) {
        MultiSym f = frob_char(m.order[r]);
        for (int c = 0; c < n; ++c) {
            long long v = to_integer(scalar(f, s_monomial(m.order[c])), "U_matrix");
            if (v < 0) throw std::logic_error("U_matrix: negative multiplicity");
            m.entries[r][c] = v;
        }
        if (m.entries[r][r] != 1) throw std::logic_error("U_matrix: diagonal entry not 1");
    }
    return m;
}

std::map<Partition, long long> plethysm_schur_expansion(const VectorPartition& lam) {
    int k = lam.weight();
    MultiSym f = frob_char(lam);
    // set X_2 = X_3 = ... = 0: keep keys supported on the first alphabet
    std::map<Partition, Rat> single;
    for (const auto& [key, c] : f.terms()) {
        bool only_first = true;
        for (int i = 2; i <= key.slots(); ++i)
            if (!key.component(i).empty()) only_first = false;
        if (only_first) single[key.component(1)] = c;
    }
    std::map<Partition, long long> out;
    for (const Partition& nu : partitions_of(k)) {
        Rat c = 0;
        for (const auto& [mu, v] : single) c += v * Rat(character_sn(nu, mu)) * 1;
        long long vi = to_integer(c, "plethysm_schur_expansion");
        if (vi < 0) throw std::logic_error("plethysm_schur_expansion: negative coefficient");
        if (vi != 0) out[nu] = vi;
    }
    return out;
}

} // namespace ubp
