#include "virc1/sugawara.hpp"

#include <map>
#include <utility>

namespace virc1::sugawara {

using fock::FockLevelSpace;
using fock::FockVector;

Rational central_term(int n) {
    const long nl = n;
    Rational r(nl * (nl * nl - 1), 12);
    r.canonicalize();
    return r;
}

namespace {

using Term = std::pair<Partition, Rational>;

// J_m on a single basis term; at most one term comes back.
std::optional<Term> mode_on_term(int m, const Rational& charge, const Term& term) {
    if (m == 0) {
        if (charge == 0) return std::nullopt;
        return Term{term.first, term.second * charge};
    }
    if (m < 0) {
        return Term{term.first.with_part(static_cast<unsigned>(-m)), term.second};
    }
    const unsigned part = static_cast<unsigned>(m);
    const unsigned mult = term.first.multiplicity(part);
    if (mult == 0) return std::nullopt;
    return Term{term.first.without_part(part),
                term.second * Rational(static_cast<long>(part) * mult)};
}

} // namespace

LevelOperator build_L(int n, const Rational& charge, unsigned level) {
    const FockLevelSpace src(charge, level);
    const int target = static_cast<int>(level) - n;
    if (target < 0) {
        return LevelOperator{charge, n, level, SparseMatrix(0, src.dimension())};
    }
    const FockLevelSpace dst(charge, static_cast<unsigned>(target));
    SparseMatrix matrix(dst.dimension(), src.dimension());
    const Rational half(1, 2);
    Rational h0 = charge * charge;
    h0 /= 2;

    for (std::size_t j = 0; j < src.dimension(); ++j) {
        const Term unit{src.basis()[j], Rational(1)};
        std::map<Partition, Rational> acc;
        if (n == 0) {
            // L_0 = q^2/2 + sum_{k>=1} J_{-k} J_k; only k <= level acts.
            if (h0 != 0) acc[unit.first] = h0;
            for (int k = 1; k <= static_cast<int>(level); ++k) {
                auto t = mode_on_term(k, charge, unit);
                if (!t) continue;
                auto t2 = mode_on_term(-k, charge, *t);
                if (!t2) continue;
                acc[t2->first] += t2->second;
            }
        } else {
            // Outside n-level <= k <= level one of the two modes annihilates.
            for (int k = n - static_cast<int>(level); k <= static_cast<int>(level); ++k) {
                auto t = mode_on_term(k, charge, unit);
                if (!t) continue;
                auto t2 = mode_on_term(n - k, charge, *t);
                if (!t2) continue;
                acc[t2->first] += t2->second * half;
            }
        }
        for (const auto& [p, coeff] : acc) {
            if (coeff != 0) matrix.add(dst.index_of(p), j, coeff);
        }
    }
    return LevelOperator{charge, n, level, std::move(matrix)};
}

namespace {

// Matrix of L_outer L_inner restricted to `level`, as a map to level
// level - inner - outer. Zero (or empty) when an intermediate or final
// level is negative.
SparseMatrix compose_modes(int outer, int inner, const Rational& charge, unsigned level) {
    const int mid = static_cast<int>(level) - inner;
    const int target = mid - outer;
    const std::size_t cols = partition_count(level);
    if (mid < 0) {
        const std::size_t rows = target >= 0 ? partition_count(static_cast<unsigned>(target)) : 0;
        return SparseMatrix(rows, cols);
    }
    const LevelOperator inner_op = build_L(inner, charge, level);
    const LevelOperator outer_op = build_L(outer, charge, static_cast<unsigned>(mid));
    return outer_op.matrix * inner_op.matrix;
}

} // namespace

CommutatorReport commutator_check(int n, int m, const Rational& charge, unsigned max_level) {
    CommutatorReport report;
    report.n = n;
    report.m = m;
    report.charge = charge;
    report.max_level = max_level;

    for (unsigned level = 0; level <= max_level; ++level) {
        const SparseMatrix nm = compose_modes(n, m, charge, level);
        const SparseMatrix mn = compose_modes(m, n, charge, level);
        const SparseMatrix lhs = nm - mn;

        SparseMatrix rhs(lhs.rows(), lhs.cols());
        const int target = static_cast<int>(level) - n - m;
        if (target >= 0) {
            rhs = build_L(n + m, charge, level).matrix.scaled(Rational(n - m));
            if (n + m == 0) {
                rhs = rhs + SparseMatrix::identity(partition_count(level)).scaled(central_term(n));
            }
        }

        if (lhs == rhs) continue;
        for (std::size_t i = 0; i < lhs.rows() && report.pass; ++i) {
            for (std::size_t j = 0; j < lhs.cols(); ++j) {
                if (lhs.entry(i, j) != rhs.entry(i, j)) {
                    report.pass = false;
                    report.counterexample = CommutatorReport::Counterexample{
                        level, i, j, lhs.entry(i, j), rhs.entry(i, j)};
                    break;
                }
            }
        }
        if (!report.pass) return report;
    }
    return report;
}

bool adjoint_check(int n, const Rational& charge, unsigned max_level) {
    for (unsigned m = 0; m <= max_level; ++m) {
        const int target = static_cast<int>(m) - n;
        if (target < 0) continue;
        const Matrix g_src = fock::gram_matrix(FockLevelSpace(charge, m));
        const Matrix g_dst = fock::gram_matrix(FockLevelSpace(charge, static_cast<unsigned>(target)));
        const Matrix a = build_L(n, charge, m).matrix.dense();
        const Matrix b = build_L(-n, charge, static_cast<unsigned>(target)).matrix.dense();
        if (!(g_dst * a == b.transposed() * g_src)) return false;
    }
    return true;
}

std::vector<FockVector> find_lowest_weight_vectors(const Rational& charge, unsigned level) {
    const FockLevelSpace space(charge, level);
    const SparseMatrix l1 = build_L(1, charge, level).matrix;
    const SparseMatrix l2 = build_L(2, charge, level).matrix;
    Matrix stacked(l1.rows() + l2.rows(), space.dimension());
    for (std::size_t j = 0; j < space.dimension(); ++j) {
        for (const auto& [i, v] : l1.column(j)) stacked.at(i, j) = v;
        for (const auto& [i, v] : l2.column(j)) stacked.at(l1.rows() + i, j) = v;
    }
    std::vector<FockVector> out;
    for (auto& coeffs : stacked.nullspace()) {
        out.emplace_back(charge, level, std::move(coeffs));
    }
    return out;
}

} // namespace virc1::sugawara
