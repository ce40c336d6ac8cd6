#pragma once

#include "virc1/linalg.hpp"
#include "virc1/partition.hpp"
#include "virc1/rational.hpp"

#include <cstddef>
#include <vector>

namespace virc1::fock {

// Level subspace of the charge-q bosonic Fock space. Basis vectors are
// indexed by partitions of the level in canonical order; the partition
// (k1,...,kr) stands for J_{-k1}...J_{-kr} applied to the charge-q vacuum.
class FockLevelSpace {
public:
    FockLevelSpace(Rational charge, unsigned level);

    const Rational& charge() const { return charge_; }
    unsigned level() const { return level_; }
    std::size_t dimension() const { return basis_->size(); }
    const std::vector<Partition>& basis() const { return *basis_; }
    std::size_t index_of(const Partition& p) const;

private:
    Rational charge_;
    unsigned level_;
    const std::vector<Partition>* basis_; // borrowed from the partition cache
};

// Vector in one level subspace, as exact coefficients over its basis.
class FockVector {
public:
    // Zero vector of the given level space.
    FockVector(Rational charge, unsigned level);
    // Coefficient count must match the level dimension.
    FockVector(Rational charge, unsigned level, std::vector<Rational> coefficients);

    static FockVector basis_state(const Rational& charge, const Partition& p);
    static FockVector lowest_weight(const Rational& charge);

    const Rational& charge() const { return charge_; }
    unsigned level() const { return level_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    Rational coefficient(const Partition& p) const;
    bool is_zero() const;

    FockVector operator+(const FockVector& rhs) const;
    FockVector operator-(const FockVector& rhs) const;
    FockVector scaled(const Rational& s) const;
    bool operator==(const FockVector& rhs) const;

private:
    Rational charge_;
    unsigned level_;
    std::vector<Rational> coefficients_;
};

// Heisenberg mode J_m. Creation (m < 0) prepends a part, J_0 multiplies by
// the charge, annihilation (m > 0) removes a part k=m with coefficient m
// times its multiplicity. When m exceeds the level the result is the zero
// vector (returned at level 0).
FockVector apply_J(int m, const FockVector& v);

// Matrix of J_m from level `source_level` to level `source_level - m`;
// the zero-row empty map when the target level is negative.
SparseMatrix mode_matrix(int m, const Rational& charge, unsigned source_level);

// Inner product making J_m and J_{-m} mutually adjoint, normalized so the
// lowest weight vector has norm one. Diagonal on the partition basis with
// <b_p, b_p> = prod_k k^{m_k} m_k! over the multiplicities m_k of p.
Rational inner_product(const FockVector& v, const FockVector& w);
Rational gram_diagonal(const Partition& p);
Matrix gram_matrix(const FockLevelSpace& space);

} // namespace virc1::fock
