#include "virc1/characters.hpp"

#include "oracles.hpp"
#include "virc1/errors.hpp"
#include "virc1/verma.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

using virc1::Rational;
using namespace virc1::characters;

TEST_CASE("partition series through order six") {
    CHECK(partition_series(6).coefficients() ==
          std::vector<std::int64_t>{1, 1, 2, 3, 5, 7, 11});
    CHECK(partition_series(10).at(10) == 42);
}

TEST_CASE("partition series matches the pentagonal recurrence") {
    const auto series = partition_series(30);
    const auto counts = oracle::partition_numbers(30);
    for (unsigned n = 0; n <= 30; ++n) {
        CHECK(series.at(n) == counts[n]);
    }
}

TEST_CASE("series access is strict about the truncation order") {
    QSeries s(2);
    s.set(2, 7);
    CHECK(s.at(2) == 7);
    CHECK_THROWS_AS(s.at(3), std::out_of_range);
    CHECK_THROWS_AS(s.set(3, 1), std::out_of_range);
    CHECK_THROWS_AS(s.truncated(3), std::out_of_range);
    CHECK(s.truncated(1).coefficients() == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("sums and differences are trusted to the smaller order") {
    QSeries a(std::vector<std::int64_t>{1, 2, 3, 4});
    QSeries b(std::vector<std::int64_t>{1, 1});
    const auto sum = a + b;
    CHECK(sum.order() == 1);
    CHECK(sum.coefficients() == std::vector<std::int64_t>{2, 3});
    const auto diff = a - b;
    CHECK(diff.coefficients() == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("multiplying by 1 - t^k keeps the order") {
    const auto p = partition_series(6);
    const auto out = p.times_one_minus_power(3);
    CHECK(out.order() == 6);
    // Coefficient n drops by p(n-3).
    CHECK(out.coefficients() == std::vector<std::int64_t>{1, 1, 2, 2, 4, 5, 8});
}

TEST_CASE("character offsets must be nonnegative") {
    CHECK_THROWS_AS(Character(Rational(-1, 2), QSeries(2)), std::domain_error);
}

TEST_CASE("normalization moves leading zeros into the offset") {
    Character ch(Rational(1, 2), QSeries(std::vector<std::int64_t>{0, 0, 3, 1}));
    const auto n = ch.normalized();
    CHECK(n.offset == Rational(5, 2));
    CHECK(n.series.coefficients() == std::vector<std::int64_t>{3, 1});
    const auto zero = Character(Rational(0), QSeries(2)).normalized();
    CHECK(zero.series.order() == 2);
}

TEST_CASE("fock characters") {
    const auto chi0 = fock_character(Rational(0), 4);
    CHECK(chi0.offset == 0);
    CHECK(chi0.series.coefficients() == std::vector<std::int64_t>{1, 1, 2, 3, 5});

    const auto chi1 = fock_character(Rational(1), 4);
    CHECK(chi1.offset == Rational(1, 2));
    CHECK(chi1.series.coefficients() == std::vector<std::int64_t>{1, 1, 2, 3, 5});

    const auto chi13 = fock_character(Rational(1, 3), 3);
    CHECK(chi13.offset == Rational(1, 18));
}

TEST_CASE("combining characters aligns the offsets") {
    const auto a = virc1::verma::irreducible_character(Rational(0), 3);
    const auto b = virc1::verma::irreducible_character(Rational(1), 3);
    const auto sum = combine(a, b, +1);
    CHECK(sum.offset == 0);
    // chi^0 = 1,0,1,1 and chi^1 shifted by one = 0,1,1,2.
    CHECK(sum.series.coefficients() == std::vector<std::int64_t>{1, 1, 2, 3});

    const auto diff = combine(sum, a, -1);
    CHECK(diff.offset == 1);
    CHECK(diff.series.coefficients() == std::vector<std::int64_t>{1, 1, 2});
}

TEST_CASE("subtracting a character from itself leaves the zero character") {
    const auto a = fock_character(Rational(1, 3), 5);
    const auto z = combine(a, a, -1);
    CHECK(z.is_zero());
}

TEST_CASE("offsets differing by a non-integer cannot combine") {
    const auto a = fock_character(Rational(0), 4);
    const auto b = fock_character(Rational(1, 3), 4);
    CHECK_THROWS_AS(combine(a, b, +1), virc1::sector_mismatch_error);
    // Integer gaps are fine even between distinct offsets.
    CHECK_NOTHROW(combine(fock_character(Rational(0), 4), fock_character(Rational(2), 4), +1));
}

TEST_CASE("combined order is the smaller absolute top") {
    // a trusted through t^4 absolute, b through t^{1/2 + 4}; the sum of a
    // with a t^2 shifted b is trusted through t^4 only when offsets align.
    const auto a = fock_character(Rational(0), 6);
    const auto b = fock_character(Rational(2), 3); // offset 2, top 5
    const auto sum = combine(a, b, +1);
    CHECK(sum.offset == 0);
    CHECK(sum.series.order() == 5);
}

TEST_CASE("vacuum decomposition ledger at order four") {
    const auto report = verify_vacuum_decomposition(4);
    CHECK(report.residual_zero);
    REQUIRE(report.rows.size() == 5);
    const auto& row = report.rows[4];
    CHECK(row.n == 4);
    CHECK(row.chi0 == 5);
    CHECK(row.residual == 0);
    // j = 0, 1, 2 contribute 2 + 2 + 1.
    REQUIRE(row.contributions.size() == 3);
    CHECK(row.contributions[0] == std::make_pair(0u, std::int64_t{2}));
    CHECK(row.contributions[1] == std::make_pair(1u, std::int64_t{2}));
    CHECK(row.contributions[2] == std::make_pair(2u, std::int64_t{1}));
}

TEST_CASE("vacuum decomposition holds through order twenty five") {
    const auto report = verify_vacuum_decomposition(25);
    CHECK(report.residual_zero);
    for (const auto& row : report.rows) CHECK(row.residual == 0);
}

TEST_CASE("branching the neutral fock character peels the squares") {
    const auto result = branch(fock_character(Rational(0), 25), 25);
    CHECK(result.succeeded());
    REQUIRE(result.components.size() == 6);
    for (std::size_t i = 0; i < result.components.size(); ++i) {
        CHECK(result.components[i].first == Rational(static_cast<long>(i * i)));
        CHECK(result.components[i].second == 1);
    }
}

TEST_CASE("branching a generic fock character gives one irreducible") {
    const auto result = branch(fock_character(Rational(1, 3), 12), 12);
    CHECK(result.succeeded());
    REQUIRE(result.components.size() == 1);
    CHECK(result.components[0].first == Rational(1, 18));
    CHECK(result.components[0].second == 1);
}

TEST_CASE("branching honors multiplicities") {
    const auto chi0 = fock_character(Rational(0), 10);
    const auto doubled = combine(chi0, chi0, +1);
    const auto result = branch(doubled, 10);
    CHECK(result.succeeded());
    for (const auto& [h, mult] : result.components) CHECK(mult == 2);
}

TEST_CASE("branching rejects inputs outside the decomposable cone") {
    // 1 + t^2 + ... minus the forced chi^0 peel goes negative at t^2.
    Character bad(Rational(0), QSeries(std::vector<std::int64_t>{1, 0, 0}));
    CHECK_THROWS_AS(branch(bad, 2), virc1::inconsistency_error);
    Character negative(Rational(0), QSeries(std::vector<std::int64_t>{1, -1}));
    CHECK_THROWS_AS(branch(negative, 1), std::domain_error);
}

TEST_CASE("branching the zero character yields no components") {
    const auto result = branch(Character(Rational(0), QSeries(5)), 5);
    CHECK(result.succeeded());
    CHECK(result.components.empty());
}
