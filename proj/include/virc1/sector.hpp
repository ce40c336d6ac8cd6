#pragma once

#include "virc1/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace virc1::sector {

// Statistical dimension: a nonnegative rational or infinity. Infinity is
// absorbing under + and *; 0 * infinity is rejected.
class Dim {
public:
    static Dim infinite();
    static Dim finite(Rational value); // value >= 0

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    const Rational& value() const; // throws when infinite

    Dim operator+(const Dim& rhs) const;
    Dim operator*(const Dim& rhs) const;
    Dim squared() const { return *this * *this; }

    bool operator==(const Dim& rhs) const;
    bool operator!=(const Dim& rhs) const { return !(*this == rhs); }

private:
    Dim(bool infinite, Rational value) : infinite_(infinite), value_(std::move(value)) {}

    bool infinite_;
    Rational value_;
};

std::string to_string(const Dim& d);

// Dimensions of the irreducible sectors of one theory. The first entry is
// the vacuum sector and must have dimension exactly 1; labels are unique.
struct SectorTable {
    std::vector<std::pair<std::string, Dim>> entries;

    static SectorTable make(std::vector<std::pair<std::string, Dim>> entries);
};

// d(restriction to a finite-index subtheory) = [A:B] * d.
// Both inputs must be >= 1.
Dim restricted_dimension(const Dim& index, const Dim& d);

// mu_A = sum of d^2 over the sector table.
Dim global_index(const SectorTable& table);

// mu_B = [A:B]^2 * mu_A for a finite-index subtheory. The hypothesis needs
// a finite mu_A.
Dim subsystem_global_index(const Dim& index, const Dim& mu_A);

// Sectors of the larger theory grouped by which sector of the subtheory
// they restrict to; group 0 sits over the vacuum.
struct UntwistedGrouping {
    std::vector<std::vector<Dim>> groups;
    Dim index;
};

// Lower bound sum_i [ (sum_{U_i} d)^2 - sum_{U_i} d^2 ] on twice the number
// of irreducible summands beyond one in the twisted induction; >= 2 forces
// a twisted sector. When mu_A or the subtheory's sector dimensions are
// supplied, the grouping is cross-checked against the restriction formula
// first.
Dim twisted_lower_bound(const UntwistedGrouping& grouping,
                        const std::optional<Dim>& mu_A = std::nullopt,
                        const std::optional<SectorTable>& sector_dims = std::nullopt);

// d(pi) >= [A:B] for an irreducible restriction; with infinite index this
// pins d(pi) = infinity.
struct CriterionResult {
    Dim value;
    bool conclusive;
};

CriterionResult infinite_dimension_criterion(const Dim& index, bool restriction_irreducible);

// Verdict for the c=1 sector of lowest energy h: infinite dimension off the
// discrete series h = j^2, reported finite value 2j+1 on it.
struct Verdict {
    Rational h;
    Dim dimension;
    bool conjectural;
    std::vector<std::string> justification;

    bool reported() const { return dimension.is_finite(); }
};

Verdict c1_continuum_verdict(const Rational& h);

} // namespace virc1::sector
