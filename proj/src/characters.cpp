#include "virc1/characters.hpp"

#include "virc1/errors.hpp"
#include "virc1/verma.hpp"

#include <algorithm>
#include <stdexcept>

namespace virc1::characters {

QSeries::QSeries(unsigned order) : coefficients_(order + 1, 0) {}

QSeries::QSeries(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("series needs a constant term");
}

std::int64_t QSeries::at(unsigned n) const {
    if (n >= coefficients_.size()) throw std::out_of_range("coefficient past truncation order");
    return coefficients_[n];
}

void QSeries::set(unsigned n, std::int64_t value) {
    if (n >= coefficients_.size()) throw std::out_of_range("coefficient past truncation order");
    coefficients_[n] = value;
}

QSeries QSeries::truncated(unsigned new_order) const {
    if (new_order > order()) throw std::out_of_range("cannot extend a truncated series");
    QSeries out(new_order);
    std::copy(coefficients_.begin(), coefficients_.begin() + new_order + 1,
              out.coefficients_.begin());
    return out;
}

QSeries QSeries::operator+(const QSeries& rhs) const {
    const unsigned n = std::min(order(), rhs.order());
    QSeries out(n);
    for (unsigned i = 0; i <= n; ++i) out.coefficients_[i] = coefficients_[i] + rhs.coefficients_[i];
    return out;
}

QSeries QSeries::operator-(const QSeries& rhs) const {
    const unsigned n = std::min(order(), rhs.order());
    QSeries out(n);
    for (unsigned i = 0; i <= n; ++i) out.coefficients_[i] = coefficients_[i] - rhs.coefficients_[i];
    return out;
}

QSeries QSeries::scaled(std::int64_t s) const {
    QSeries out = *this;
    for (auto& c : out.coefficients_) c *= s;
    return out;
}

QSeries QSeries::times_one_minus_power(unsigned k) const {
    QSeries out = *this;
    if (k == 0) throw std::invalid_argument("exponent must be positive");
    for (unsigned i = order() + 1; i-- > k;) {
        out.coefficients_[i] -= coefficients_[i - k];
    }
    return out;
}

bool QSeries::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](std::int64_t c) { return c == 0; });
}

QSeries partition_series(unsigned order) {
    QSeries out(order);
    out.set(0, 1);
    std::vector<std::int64_t> p(order + 1, 0);
    p[0] = 1;
    for (unsigned k = 1; k <= order; ++k) {
        for (unsigned s = k; s <= order; ++s) p[s] += p[s - k];
    }
    for (unsigned n = 0; n <= order; ++n) out.set(n, p[n]);
    return out;
}

Character::Character(Rational offset_in, QSeries series_in)
    : offset(std::move(offset_in)), series(std::move(series_in)) {
    if (offset < 0) throw std::domain_error("character offset must be nonnegative");
}

Character Character::normalized() const {
    const auto& c = series.coefficients();
    std::size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (first == 0 || first == c.size()) return *this;
    Rational new_offset = offset + Rational(static_cast<long>(first));
    return Character(std::move(new_offset),
                     QSeries(std::vector<std::int64_t>(c.begin() + first, c.end())));
}

Character fock_character(const Rational& charge, unsigned order) {
    Rational offset = charge * charge;
    offset /= 2;
    return Character(std::move(offset), partition_series(order));
}

Character combine(const Character& a, const Character& b, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const Rational diff = a.offset - b.offset;
    if (!is_integer(diff)) {
        throw sector_mismatch_error("character offsets differ by a non-integer");
    }
    const Rational off = std::min(a.offset, b.offset);
    const unsigned a_shift = static_cast<unsigned>(to_long(a.offset - off));
    const unsigned b_shift = static_cast<unsigned>(to_long(b.offset - off));
    const unsigned top = std::min(a_shift + a.series.order(), b_shift + b.series.order());
    QSeries out(top);
    for (unsigned i = 0; i <= top; ++i) {
        std::int64_t v = 0;
        if (i >= a_shift && i - a_shift <= a.series.order()) v += a.series.at(i - a_shift);
        if (i >= b_shift && i - b_shift <= b.series.order()) v += sign * b.series.at(i - b_shift);
        out.set(i, v);
    }
    return Character(off, std::move(out)).normalized();
}

VacuumDecompositionReport verify_vacuum_decomposition(unsigned order) {
    VacuumDecompositionReport report;
    report.order = order;

    const QSeries chi0 = partition_series(order);
    std::vector<std::pair<unsigned, Character>> irreducibles;
    for (unsigned j = 0; static_cast<unsigned long>(j) * j <= order; ++j) {
        const Rational h(static_cast<long>(j) * j);
        irreducibles.emplace_back(j, verma::irreducible_character(h, order - j * j));
    }

    bool all_zero = true;
    for (unsigned n = 0; n <= order; ++n) {
        VacuumDecompositionRow row;
        row.n = n;
        row.chi0 = chi0.at(n);
        std::int64_t total = 0;
        for (const auto& [j, chi] : irreducibles) {
            const unsigned base = j * j;
            const std::int64_t coeff = n >= base ? chi.series.at(n - base) : 0;
            row.contributions.emplace_back(j, coeff);
            total += coeff;
        }
        row.residual = row.chi0 - total;
        if (row.residual != 0) all_zero = false;
        report.rows.push_back(std::move(row));
    }
    report.residual_zero = all_zero;
    return report;
}

BranchingResult branch(const Character& ch, unsigned order) {
    for (std::int64_t c : ch.series.coefficients()) {
        if (c < 0) throw std::domain_error("branching input must have nonnegative coefficients");
    }

    Character work =
        Character(ch.offset, ch.series.truncated(std::min(order, ch.series.order())))
            .normalized();
    std::vector<std::pair<Rational, std::int64_t>> components;

    while (!work.is_zero()) {
        const Rational h = work.offset;
        const std::int64_t mult = work.series.at(0);
        if (mult < 0) {
            throw inconsistency_error(
                "not a nonnegative sum of irreducible characters to this order");
        }
        const Character irr = verma::irreducible_character(h, work.series.order());
        components.emplace_back(h, mult);
        work = combine(work, Character(irr.offset, irr.series.scaled(mult)), -1);
        for (std::int64_t c : work.series.coefficients()) {
            if (c < 0) {
                throw inconsistency_error(
                    "not a nonnegative sum of irreducible characters to this order");
            }
        }
    }
    return BranchingResult{std::move(components), std::move(work)};
}

} // namespace virc1::characters
