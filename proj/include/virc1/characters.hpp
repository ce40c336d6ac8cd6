#pragma once

#include "virc1/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace virc1::characters {

// Power series in t truncated at a fixed order; coefficient i is the
// coefficient of t^i. Arithmetic never reads past the truncation order.
class QSeries {
public:
    explicit QSeries(unsigned order);
    explicit QSeries(std::vector<std::int64_t> coefficients);

    unsigned order() const { return static_cast<unsigned>(coefficients_.size()) - 1; }
    std::int64_t at(unsigned n) const;
    void set(unsigned n, std::int64_t value);
    const std::vector<std::int64_t>& coefficients() const { return coefficients_; }

    QSeries truncated(unsigned new_order) const;
    // Sum and difference are trusted only to the smaller order.
    QSeries operator+(const QSeries& rhs) const;
    QSeries operator-(const QSeries& rhs) const;
    QSeries scaled(std::int64_t s) const;
    // Multiplication by the polynomial (1 - t^k) preserves the order.
    QSeries times_one_minus_power(unsigned k) const;

    bool is_zero() const;
    bool operator==(const QSeries& rhs) const = default;

private:
    std::vector<std::int64_t> coefficients_;
};

// Generating series of the partition numbers, prod_{n>=1} (1-t^n)^{-1}.
QSeries partition_series(unsigned order);

// Formal character t^offset * series. The offset is the lowest conformal
// energy; coefficients count states of energy offset + i.
struct Character {
    Rational offset;   // >= 0
    QSeries series;

    Character(Rational offset, QSeries series);

    bool is_zero() const { return series.is_zero(); }
    // Drops leading zero coefficients into the offset, keeping the trusted
    // absolute order. No-op for the zero character.
    Character normalized() const;

    bool operator==(const Character& rhs) const = default;
};

// Character of the charge-q Fock space: t^{q^2/2} / prod (1-t^n).
Character fock_character(const Rational& charge, unsigned order);

// a + sign*b with offsets aligned; trusted to the smaller absolute order.
// Offsets differing by a non-integer cannot be combined.
Character combine(const Character& a, const Character& b, int sign);

// Coefficient-by-coefficient ledger for the identity
// chi_0 = sum_{j >= 0} chi^{j^2} checked through t^order.
struct VacuumDecompositionRow {
    unsigned n = 0;
    std::int64_t chi0 = 0;
    std::vector<std::pair<unsigned, std::int64_t>> contributions; // (j, coeff of t^n in chi^{j^2})
    std::int64_t residual = 0;
};

struct VacuumDecompositionReport {
    unsigned order = 0;
    bool residual_zero = false;
    std::vector<VacuumDecompositionRow> rows;
};

VacuumDecompositionReport verify_vacuum_decomposition(unsigned order);

// Greedy decomposition of a character into irreducible c=1 characters by
// repeatedly peeling the lowest remaining term. Multiplicities are forced
// because every irreducible character has unit leading coefficient.
struct BranchingResult {
    std::vector<std::pair<Rational, std::int64_t>> components; // (h, multiplicity), h increasing
    Character residual; // zero through the trusted order on success

    bool succeeded() const { return residual.is_zero(); }
};

BranchingResult branch(const Character& ch, unsigned order);

} // namespace virc1::characters
