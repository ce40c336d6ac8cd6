#include "virc1/verma.hpp"

#include <stdexcept>
#include <utility>

namespace virc1::verma {

LowestWeight::LowestWeight(Rational c_in, Rational h_in)
    : c(std::move(c_in)), h(std::move(h_in)) {
    if (h < 0) throw std::domain_error("lowest weight h must be nonnegative");
}

namespace {

// Straightening engine with a per-instance pure cache.
class ModeEngine {
public:
    explicit ModeEngine(const LowestWeight& w) : w_(w) {}

    const VermaElement& apply_to_basis(int n, const Partition& p) {
        const auto key = std::make_pair(n, p);
        auto found = cache_.find(key);
        if (found != cache_.end()) return found->second;
        VermaElement result = compute(n, p);
        return cache_.emplace(key, std::move(result)).first->second;
    }

    VermaElement apply(int n, const VermaElement& x) {
        VermaElement out;
        for (const auto& [p, coeff] : x) {
            if (coeff == 0) continue;
            for (const auto& [q, c2] : apply_to_basis(n, p)) {
                Rational& slot = out[q];
                slot += coeff * c2;
                if (slot == 0) out.erase(q);
            }
        }
        return out;
    }

private:
    VermaElement compute(int n, const Partition& p) {
        VermaElement out;
        if (p.empty()) {
            if (n > 0) return out;
            if (n == 0) {
                if (w_.h != 0) out[p] = w_.h;
                return out;
            }
            out[p.with_part(static_cast<unsigned>(-n))] = 1;
            return out;
        }

        const unsigned a = p.parts().front(); // largest part, applied leftmost
        if (n < 0 && static_cast<unsigned>(-n) >= a) {
            out[p.with_part(static_cast<unsigned>(-n))] = 1;
            return out;
        }

        // L_n L_{-a} = L_{-a} L_n + (n+a) L_{n-a} + (c/12) n (n^2-1) delta_{n,a}
        const Partition rest = p.without_part(a);
        accumulate(out, apply(-static_cast<int>(a), apply_to_basis(n, rest)), Rational(1));
        accumulate(out, apply_to_basis(n - static_cast<int>(a), rest),
                   Rational(n + static_cast<long>(a)));
        if (n > 0 && static_cast<unsigned>(n) == a) {
            const long nl = n;
            Rational coeff(nl * (nl * nl - 1), 12);
            coeff.canonicalize();
            Rational central = w_.c * coeff;
            if (central != 0) {
                Rational& slot = out[rest];
                slot += central;
                if (slot == 0) out.erase(rest);
            }
        }
        return out;
    }

    void accumulate(VermaElement& into, const VermaElement& from, const Rational& scale) {
        if (scale == 0) return;
        for (const auto& [q, c2] : from) {
            Rational& slot = into[q];
            slot += c2 * scale;
            if (slot == 0) into.erase(q);
        }
    }

    LowestWeight w_;
    std::map<std::pair<int, Partition>, VermaElement> cache_;
};

} // namespace

VermaElement apply_mode(const LowestWeight& w, int n, const VermaElement& x) {
    ModeEngine engine(w);
    return engine.apply(n, x);
}

ShapovalovMatrix gram_matrix(const LowestWeight& w, unsigned level) {
    const std::vector<Partition> basis = enumerate_partitions(level);
    ModeEngine engine(w);
    Matrix out(basis.size(), basis.size());
    const Partition empty;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        // <b_i, b_j> = coefficient of the lowest weight vector in
        // L_{i_r}...L_{i_1} b_j, largest positive mode applied first.
        for (std::size_t i = 0; i < basis.size(); ++i) {
            VermaElement x{{basis[j], Rational(1)}};
            for (unsigned part : basis[i].parts()) {
                x = engine.apply(static_cast<int>(part), x);
                if (x.empty()) break;
            }
            auto found = x.find(empty);
            if (found != x.end()) out.at(i, j) = found->second;
        }
    }
    return ShapovalovMatrix{w, level, std::move(out)};
}

std::vector<std::vector<Rational>> kernel(const ShapovalovMatrix& m) {
    return m.matrix.nullspace();
}

DegeneracyClass classify(const Rational& h) {
    if (h < 0) throw std::domain_error("conformal weight h must be nonnegative");
    DegeneracyClass out;
    const auto root = exact_sqrt(h);
    if (root && (root->get_den() == 1 || root->get_den() == 2)) {
        out.degenerate = true;
        out.j = *root;
    }
    return out;
}

characters::Character irreducible_character(const Rational& h, unsigned order) {
    const DegeneracyClass cls = classify(h);
    characters::QSeries series = characters::partition_series(order);
    if (cls.degenerate) {
        const Rational two_j_plus_one = 2 * cls.j + 1;
        series = series.times_one_minus_power(
            static_cast<unsigned>(to_long(two_j_plus_one)));
    }
    return characters::Character(h, std::move(series));
}

} // namespace virc1::verma
