#pragma once

#include <map>
#include <string>

#include "ubp/matrices.hpp"
#include "ubp/partition.hpp"

namespace ubp {

/// An element of the multi-alphabet symmetric function ring in the power sum
/// basis: a finite rational combination of monomials p_mu indexed by vector
/// partitions (component i lives on the i-th alphabet).
class MultiSym {
public:
    MultiSym() = default;

    static MultiSym zero() { return {}; }
    static MultiSym one();
    /// The basis monomial p_mu.
    static MultiSym p(const VectorPartition& mu);
    /// p_mu on the single alphabet in the given slot.
    static MultiSym p_single(const Partition& mu, int slot);
    /// Schur function s_lam on the single alphabet in the given slot,
    /// expanded over power sums via symmetric group characters.
    static MultiSym s_single(const Partition& lam, int slot);

    const std::map<VectorPartition, Rat>& terms() const { return terms_; }
    Rat coefficient(const VectorPartition& mu) const;
    bool is_zero() const { return terms_.empty(); }
    /// -1 when inhomogeneous, otherwise the common degree of all keys.
    int homogeneous_degree() const;

    MultiSym& operator+=(const MultiSym& o);
    MultiSym& operator-=(const MultiSym& o);
    MultiSym operator+(const MultiSym& o) const;
    MultiSym operator-(const MultiSym& o) const;
    MultiSym operator*(const MultiSym& o) const;
    MultiSym scaled(const Rat& c) const;

    bool operator==(const MultiSym& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiSym& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void prune();
    std::map<VectorPartition, Rat> terms_;
};

/// <f, g> = sum over mu of f_mu * g_mu * z_mu.
Rat scalar(const MultiSym& f, const MultiSym& g);

/// s_lam = prod over i of s_{lam^(i)} on alphabet i.
MultiSym s_monomial(const VectorPartition& lam);

/// Coefficients of a homogeneous f in the s-basis of its degree.
std::map<VectorPartition, Rat> p_to_s(const MultiSym& f);

/// Plethysm by the power sum p_n: every part of every key scaled by n.
MultiSym pleth_p(int n, const MultiSym& f);

/// Plethysm s_lam[f] via the power sum expansion of s_lam.
MultiSym pleth_s(const Partition& lam, const MultiSym& f);

/// E_r, the Frobenius image of the trivial character: sum of p_mu / z_mu
/// over I_r. Computed from the power sum side; see also E_schur_route.
MultiSym E(int r);

/// The same element assembled as sum over (1^a1 ... r^ar) of
/// s_{a1}[X_1] ... s_{ar}[X_r].
MultiSym E_schur_route(int r);

/// Frobenius image of the irreducible character indexed by lam:
/// prod over i of s_{lam^(i)}[E_i].
MultiSym frob_char(const VectorPartition& lam);

/// phi of a class function given by its values on class representatives.
MultiSym frobenius_of_classfunction(const std::map<VectorPartition, Rat>& values);

/// X_k: entries <s_lam[E], p_mu>, asserted integral.
CharMatrix X_matrix(int k);
/// A_k: block diagonal subgroup character tables, <s_lam[X], p_mu[X]>.
CharMatrix A_matrix(int k);
/// U_k: <s_lam[E], s_nu[X]>, asserted nonnegative integral.
CharMatrix U_matrix(int k);

/// Schur expansion of s_{lam^(1)}[s_1] s_{lam^(2)}[s_2] ...: the single
/// alphabet restriction of frob_char converted to the Schur basis.
std::map<Partition, long long> plethysm_schur_expansion(const VectorPartition& lam);

} // namespace ubp
