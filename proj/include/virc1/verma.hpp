#pragma once

#include "virc1/characters.hpp"
#include "virc1/linalg.hpp"
#include "virc1/partition.hpp"
#include "virc1/rational.hpp"

#include <map>
#include <vector>

namespace virc1::verma {

// Lowest weight data (c, h) of a Verma module; h >= 0 throughout.
struct LowestWeight {
    Rational c;
    Rational h;

    LowestWeight(Rational c, Rational h);
};

// Element of the Verma module as exact coefficients over the PBW basis:
// the partition (k1,...,kr), k1 >= ... >= kr, stands for
// L_{-k1}...L_{-kr} applied to the lowest weight vector.
using VermaElement = std::map<Partition, Rational>;

// Action of L_n on an element, straightened back onto the PBW basis with
// [L_n, L_m] = (n-m) L_{n+m} + (c/12) n (n^2-1) delta_{n+m,0}.
VermaElement apply_mode(const LowestWeight& w, int n, const VermaElement& x);

// Gram matrix of the PBW basis at one level for the hermitian form with
// L_n* = L_{-n} and unit norm lowest weight vector.
struct ShapovalovMatrix {
    LowestWeight weight;
    unsigned level;
    Matrix matrix;
};

ShapovalovMatrix gram_matrix(const LowestWeight& w, unsigned level);

// Exact basis of the kernel; members are coefficient vectors of singular
// (or radical) vectors in the PBW basis of the level.
std::vector<std::vector<Rational>> kernel(const ShapovalovMatrix& m);

// At c=1 the Verma module with weight h is reducible exactly when
// h = j^2 for a half-integer j >= 0, with first singular vector at
// level 2j+1.
struct DegeneracyClass {
    bool degenerate = false;
    Rational j; // set only when degenerate
};

DegeneracyClass classify(const Rational& h);

// Character of the irreducible quotient at c=1:
// t^h / prod (1-t^n), times (1 - t^{2j+1}) in the degenerate case h = j^2.
characters::Character irreducible_character(const Rational& h, unsigned order);

} // namespace virc1::verma
