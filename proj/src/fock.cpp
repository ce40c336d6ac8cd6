#include "virc1/fock.hpp"

#include "virc1/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace virc1::fock {

FockLevelSpace::FockLevelSpace(Rational charge, unsigned level)
    : charge_(std::move(charge)), level_(level), basis_(&partitions_of(level)) {}

std::size_t FockLevelSpace::index_of(const Partition& p) const {
    auto pos = std::lower_bound(basis_->begin(), basis_->end(), p);
    if (pos == basis_->end() || !(*pos == p)) throw std::invalid_argument("partition not in level");
    return static_cast<std::size_t>(pos - basis_->begin());
}

FockVector::FockVector(Rational charge, unsigned level)
    : charge_(std::move(charge)), level_(level),
      coefficients_(partition_count(level), Rational(0)) {}

FockVector::FockVector(Rational charge, unsigned level, std::vector<Rational> coefficients)
    : charge_(std::move(charge)), level_(level), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != partition_count(level)) {
        throw structural_error("coefficient count does not match level dimension");
    }
}

FockVector FockVector::basis_state(const Rational& charge, const Partition& p) {
    FockVector v(charge, p.weight());
    FockLevelSpace space(charge, p.weight());
    v.coefficients_[space.index_of(p)] = 1;
    return v;
}

FockVector FockVector::lowest_weight(const Rational& charge) {
    return basis_state(charge, Partition());
}

Rational FockVector::coefficient(const Partition& p) const {
    FockLevelSpace space(charge_, level_);
    return coefficients_[space.index_of(p)];
}

bool FockVector::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Rational& r) { return r == 0; });
}

FockVector FockVector::operator+(const FockVector& rhs) const {
    if (charge_ != rhs.charge_ || level_ != rhs.level_) {
        throw std::domain_error("Fock vector charge or level mismatch");
    }
    FockVector out = *this;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        out.coefficients_[i] += rhs.coefficients_[i];
    }
    return out;
}

FockVector FockVector::operator-(const FockVector& rhs) const {
    return *this + rhs.scaled(Rational(-1));
}

FockVector FockVector::scaled(const Rational& s) const {
    FockVector out = *this;
    for (auto& c : out.coefficients_) c *= s;
    return out;
}

bool FockVector::operator==(const FockVector& rhs) const {
    return charge_ == rhs.charge_ && level_ == rhs.level_ && coefficients_ == rhs.coefficients_;
}

FockVector apply_J(int m, const FockVector& v) {
    if (m == 0) return v.scaled(v.charge());

    if (m < 0) {
        const unsigned part = static_cast<unsigned>(-m);
        const FockLevelSpace src(v.charge(), v.level());
        const unsigned target = v.level() + part;
        const FockLevelSpace dst(v.charge(), target);
        std::vector<Rational> out(dst.dimension(), Rational(0));
        for (std::size_t i = 0; i < src.dimension(); ++i) {
            const Rational& c = v.coefficients()[i];
            if (c == 0) continue;
            out[dst.index_of(src.basis()[i].with_part(part))] += c;
        }
        return FockVector(v.charge(), target, std::move(out));
    }

    const unsigned part = static_cast<unsigned>(m);
    if (part > v.level()) return FockVector(v.charge(), 0);
    const FockLevelSpace src(v.charge(), v.level());
    const unsigned target = v.level() - part;
    const FockLevelSpace dst(v.charge(), target);
    std::vector<Rational> out(dst.dimension(), Rational(0));
    for (std::size_t i = 0; i < src.dimension(); ++i) {
        const Rational& c = v.coefficients()[i];
        if (c == 0) continue;
        const Partition& p = src.basis()[i];
        const unsigned mult = p.multiplicity(part);
        if (mult == 0) continue;
        out[dst.index_of(p.without_part(part))] += c * Rational(static_cast<long>(part) * mult);
    }
    return FockVector(v.charge(), target, std::move(out));
}

SparseMatrix mode_matrix(int m, const Rational& charge, unsigned source_level) {
    const FockLevelSpace src(charge, source_level);
    const int target = static_cast<int>(source_level) - m;
    if (target < 0) return SparseMatrix(0, src.dimension());
    const FockLevelSpace dst(charge, static_cast<unsigned>(target));
    SparseMatrix out(dst.dimension(), src.dimension());
    for (std::size_t j = 0; j < src.dimension(); ++j) {
        const FockVector image = apply_J(m, FockVector::basis_state(charge, src.basis()[j]));
        out.set_column(j, image.coefficients());
    }
    return out;
}

Rational gram_diagonal(const Partition& p) {
    Rational out(1);
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t run = i;
        while (run < parts.size() && parts[run] == parts[i]) ++run;
        const unsigned mult = static_cast<unsigned>(run - i);
        for (unsigned r = 1; r <= mult; ++r) {
            out *= Rational(static_cast<long>(parts[i]) * r);
        }
        i = run;
    }
    return out;
}

Rational inner_product(const FockVector& v, const FockVector& w) {
    if (v.charge() != w.charge() || v.level() != w.level()) {
        throw std::domain_error("inner product requires matching charge and level");
    }
    const FockLevelSpace space(v.charge(), v.level());
    Rational out(0);
    for (std::size_t i = 0; i < space.dimension(); ++i) {
        if (v.coefficients()[i] == 0 || w.coefficients()[i] == 0) continue;
        out += v.coefficients()[i] * w.coefficients()[i] * gram_diagonal(space.basis()[i]);
    }
    return out;
}

Matrix gram_matrix(const FockLevelSpace& space) {
    Matrix out(space.dimension(), space.dimension());
    for (std::size_t i = 0; i < space.dimension(); ++i) {
        out.at(i, i) = gram_diagonal(space.basis()[i]);
    }
    return out;
}

} // namespace virc1::fock
