#pragma once

#include "virc1/fock.hpp"
#include "virc1/linalg.hpp"
#include "virc1/rational.hpp"

#include <optional>
#include <vector>

namespace virc1::sugawara {

// Central charge of the quadratic construction below is 1; the term in
// [L_n, L_m] at n+m=0 is (1/12) n (n^2 - 1).
Rational central_term(int n);

// Matrix of L_n restricted to one level of the charge-q Fock space.
// Levels drop by `mode`; a negative target level means the empty map.
struct LevelOperator {
    Rational charge;
    int mode;
    unsigned source_level;
    SparseMatrix matrix; // dim(level - mode) x dim(level)

    int target_level() const { return static_cast<int>(source_level) - mode; }
};

// L_n = (1/2) sum_k :J_{n-k} J_k: with J_0 acting as the charge. Only the
// finitely many k that act nontrivially at this level are summed.
LevelOperator build_L(int n, const Rational& charge, unsigned level);

// Exact check of [L_n, L_m] = (n-m) L_{n+m} + (1/12) n (n^2-1) delta_{n+m,0}
// on every level up to max_level.
struct CommutatorReport {
    int n = 0;
    int m = 0;
    Rational charge;
    unsigned max_level = 0;
    bool pass = true;

    struct Counterexample {
        unsigned level;
        std::size_t row, col;
        Rational lhs, rhs;
    };
    std::optional<Counterexample> counterexample; // first mismatch found
};

CommutatorReport commutator_check(int n, int m, const Rational& charge, unsigned max_level);

// Exact check that L_n and L_{-n} are mutually adjoint for the level Gram
// matrices: G_{m-n} Mat(L_n at m) = Mat(L_{-n} at m-n)^T G_m for all
// source levels m <= max_level with m - n >= 0.
bool adjoint_check(int n, const Rational& charge, unsigned max_level);

// Basis of the joint kernel of L_1 and L_2 on one level (all higher
// annihilators are generated by these two).
std::vector<fock::FockVector> find_lowest_weight_vectors(const Rational& charge, unsigned level);

} // namespace virc1::sugawara
