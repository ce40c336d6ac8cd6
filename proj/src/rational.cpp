#include "virc1/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace virc1 {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    std::size_t start = 0;
    if (start < text.size() && (text[start] == '+' || text[start] == '-')) ++start;
    const std::size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = all_digits(text, start, text.size());
    } else {
        ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
    }
    if (!ok) throw std::invalid_argument("not a rational: '" + text + "'");

    Rational r(text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const Integer num = x.get_num();
    const Integer den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational root(rn, rd);
    root.canonicalize();
    return root;
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("not an integer: " + to_string(r));
    const Integer num = r.get_num();
    if (!num.fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(r));
    return num.get_si();
}

} // namespace virc1
