#include "virc1/sector.hpp"

#include "virc1/errors.hpp"
#include "virc1/verma.hpp"

#include <set>
#include <stdexcept>

namespace virc1::sector {

Dim Dim::infinite() {
    return Dim(true, Rational(0));
}

Dim Dim::finite(Rational value) {
    if (value < 0) throw std::domain_error("dimension must be nonnegative");
    return Dim(false, std::move(value));
}

const Rational& Dim::value() const {
    if (infinite_) throw std::domain_error("infinite dimension has no rational value");
    return value_;
}

Dim Dim::operator+(const Dim& rhs) const {
    if (infinite_ || rhs.infinite_) return infinite();
    return finite(value_ + rhs.value_);
}

Dim Dim::operator*(const Dim& rhs) const {
    if (infinite_ || rhs.infinite_) {
        if ((is_finite() && value_ == 0) || (rhs.is_finite() && rhs.value_ == 0)) {
            throw std::domain_error("0 * infinity is undefined");
        }
        return infinite();
    }
    return finite(value_ * rhs.value_);
}

bool Dim::operator==(const Dim& rhs) const {
    if (infinite_ != rhs.infinite_) return false;
    return infinite_ || value_ == rhs.value_;
}

std::string to_string(const Dim& d) {
    return d.is_infinite() ? std::string("inf") : virc1::to_string(d.value());
}

SectorTable SectorTable::make(std::vector<std::pair<std::string, Dim>> entries) {
    if (entries.empty()) throw std::domain_error("sector table needs a vacuum entry");
    if (entries.front().second != Dim::finite(Rational(1))) {
        throw std::domain_error("vacuum sector must have dimension 1");
    }
    std::set<std::string> labels;
    for (const auto& [label, dim] : entries) {
        if (!labels.insert(label).second) {
            throw std::domain_error("duplicate sector label '" + label + "'");
        }
        if (dim.is_finite() && dim.value() < 1) {
            throw std::domain_error("sector dimensions are at least 1");
        }
    }
    return SectorTable{std::move(entries)};
}

namespace {

void require_at_least_one(const Dim& d, const char* what) {
    if (d.is_finite() && d.value() < 1) {
        throw std::domain_error(std::string(what) + " must be at least 1");
    }
}

} // namespace

Dim restricted_dimension(const Dim& index, const Dim& d) {
    require_at_least_one(index, "index");
    require_at_least_one(d, "dimension");
    return index * d;
}

Dim global_index(const SectorTable& table) {
    Dim total = Dim::finite(Rational(0));
    for (const auto& [label, dim] : table.entries) total = total + dim.squared();
    return total;
}

Dim subsystem_global_index(const Dim& index, const Dim& mu_A) {
    require_at_least_one(index, "index");
    require_at_least_one(mu_A, "global index");
    if (index.is_infinite()) {
        throw out_of_hypothesis_error("subsystem global index needs a finite index");
    }
    return index.squared() * mu_A;
}

Dim twisted_lower_bound(const UntwistedGrouping& grouping,
                        const std::optional<Dim>& mu_A,
                        const std::optional<SectorTable>& sector_dims) {
    if (grouping.groups.empty()) throw std::domain_error("grouping needs the vacuum group");
    if (grouping.index.is_infinite()) {
        throw out_of_hypothesis_error("twisted bound is stated for finite index");
    }
    require_at_least_one(grouping.index, "index");
    for (const auto& group : grouping.groups) {
        if (group.empty()) throw std::domain_error("groups must be nonempty");
        for (const Dim& d : group) {
            if (d.is_infinite()) {
                throw out_of_hypothesis_error("twisted bound is stated for finite dimensions");
            }
            require_at_least_one(d, "dimension");
        }
    }

    std::vector<Rational> totals;
    Rational bound(0);
    for (const auto& group : grouping.groups) {
        Rational total(0), squares(0);
        for (const Dim& d : group) {
            total += d.value();
            squares += d.value() * d.value();
        }
        totals.push_back(total);
        bound += total * total - squares;
    }

    if (sector_dims) {
        if (sector_dims->entries.size() != grouping.groups.size()) {
            throw inconsistency_error("one group per subtheory sector is required");
        }
        for (std::size_t i = 0; i < totals.size(); ++i) {
            const Dim expected = restricted_dimension(grouping.index,
                                                      sector_dims->entries[i].second);
            if (expected.is_infinite() || expected.value() != totals[i]) {
                throw inconsistency_error("group total disagrees with the restriction formula");
            }
        }
    }
    if (mu_A) {
        if (mu_A->is_infinite()) {
            throw out_of_hypothesis_error("twisted bound is stated for finite global index");
        }
        Rational mu_B(0);
        for (const Rational& total : totals) mu_B += total * total;
        Rational expected = grouping.index.value() * grouping.index.value() * mu_A->value();
        if (mu_B != expected) {
            throw inconsistency_error("group totals disagree with the subsystem global index");
        }
    }

    return Dim::finite(bound);
}

CriterionResult infinite_dimension_criterion(const Dim& index, bool restriction_irreducible) {
    require_at_least_one(index, "index");
    return CriterionResult{index, index.is_infinite() && restriction_irreducible};
}

Verdict c1_continuum_verdict(const Rational& h) {
    const verma::DegeneracyClass cls = verma::classify(h);
    Verdict verdict{h, Dim::infinite(), false, {}};
    if (!cls.degenerate) {
        verdict.justification = {
            "the vacuum character decomposes as chi_0 = sum over half-integers j >= 0 "
            "of chi^{j^2}, so the chiral current subtheory has infinite index",
            "h is not the square of a half-integer, so the sector restricts "
            "irreducibly to the subtheory",
            "an irreducible restriction dominates the index: d >= index = infinity",
        };
        return verdict;
    }

    const bool half_integral = cls.j.get_den() == 2;
    Rational dim_value = 2 * cls.j + 1;
    verdict.dimension = Dim::finite(std::move(dim_value));
    verdict.conjectural = half_integral;
    verdict.justification = {
        std::string("h = j^2 for the ") + (half_integral ? "strictly half-integer" : "integer") +
            " value j = " + virc1::to_string(cls.j),
        std::string("d = 2j+1 = ") + to_string(verdict.dimension) +
            (half_integral ? " is the expected value, unproved at half-integer j"
                           : " is the established value at integer j"),
    };
    return verdict;
}

} // namespace virc1::sector
