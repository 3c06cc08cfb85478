#include <doctest.h>

#include <galilei/exact/matrix.hpp>
#include <galilei/exact/polynomial.hpp>
#include <galilei/exact/rational_function.hpp>
#include <galilei/exact/series.hpp>

#include <random>

using namespace galilei;
using namespace galilei::exact;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), num(-9, 9), den(1, 5);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& r : c) r = make_rational(num(rng), den(rng));
    return Polynomial(c);
}

Polynomial nonzero_poly(std::mt19937& rng, int max_degree) {
    Polynomial p;
    while (p.is_zero()) p = random_poly(rng, max_degree);
    return p;
}

// Random denominator with nonzero constant term, so it expands at q = 0.
Polynomial unit_poly(std::mt19937& rng, int max_degree) {
    Polynomial p = random_poly(rng, max_degree);
    if (p.coefficient(0) == 0) p += Polynomial::constant(1);
    return p;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("polynomial basics") {
    Polynomial p{1, -2, 1};
    CHECK(p.degree() == 2);
    CHECK(p == pow(Polynomial{1, -1}, 2));
    CHECK(p.evaluate(Rational(1)) == 0);
    CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
    CHECK((p - p).is_zero());
    CHECK(Polynomial::one_minus_power(3) == Polynomial{1, 0, 0, -1});
    CHECK(gcd(Polynomial{-1, 0, 1}, Polynomial{1, 1}) == Polynomial{1, 1});
    CHECK_THROWS_AS(divmod(p, Polynomial()), std::domain_error);
    CHECK_THROWS_AS(exact_divide(p, Polynomial{0, 1}), std::logic_error);
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        auto a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("division with remainder reconstructs the dividend") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        auto a = random_poly(rng, 8), b = nonzero_poly(rng, 4);
        auto [quot, rem] = divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("gcd divides both arguments") {
    std::mt19937 rng(13);
    for (int t = 0; t < 60; ++t) {
        auto a = nonzero_poly(rng, 4), b = nonzero_poly(rng, 4), c = nonzero_poly(rng, 2);
        auto g = gcd(a * c, b * c);
        CHECK(divmod(a * c, g).second.is_zero());
        CHECK(divmod(b * c, g).second.is_zero());
        CHECK(divmod(g, c.monic()).second.is_zero());
        CHECK(g.leading() == 1);
    }
}

TEST_CASE("rational functions are canonical") {
    Polynomial a{1, 1}, b{1, -1};
    RationalFunction r(a * b, a * Polynomial{2, 0, 2});
    CHECK(r.denominator().leading() == 1);
    CHECK(r == RationalFunction(b, Polynomial{2, 0, 2}));
    CHECK(RationalFunction(Polynomial(), a) == RationalFunction(Polynomial()));
    CHECK(RationalFunction(Polynomial(), a).denominator() == Polynomial{1});
    CHECK_THROWS(RationalFunction(a, Polynomial()));
    CHECK_THROWS_AS(rf_arith(RationalFunction(a), RationalFunction(Polynomial()), ArithOp::div), std::domain_error);
}

TEST_CASE("rational function arithmetic on random inputs") {
    std::mt19937 rng(17);
    for (int t = 0; t < 60; ++t) {
        RationalFunction x(random_poly(rng, 3), nonzero_poly(rng, 3));
        RationalFunction y(random_poly(rng, 3), nonzero_poly(rng, 3));
        RationalFunction z(random_poly(rng, 3), nonzero_poly(rng, 3));
        // Cross-multiplication agrees with the canonical comparison.
        auto lhs = x.numerator() * y.denominator();
        auto rhs = y.numerator() * x.denominator();
        CHECK((x == y) == (lhs == rhs));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        // Canonical form is idempotent.
        CHECK(RationalFunction(x.numerator(), x.denominator()) == x);
    }
}

TEST_CASE("series expansion is a ring homomorphism") {
    std::mt19937 rng(19);
    const int N = 20;
    for (int t = 0; t < 40; ++t) {
        RationalFunction a(random_poly(rng, 4), unit_poly(rng, 3));
        RationalFunction b(random_poly(rng, 4), unit_poly(rng, 3));
        CHECK(series_expand(a * b, N) == series_expand(a, N) * series_expand(b, N));
        CHECK(series_expand(a + b, N) == series_expand(a, N) + series_expand(b, N));
        const auto sb = series_expand(b, N);
        if (sb[0] != 0) CHECK(series_expand(a / b, N) == series_expand(a, N) / sb);
    }
}

TEST_CASE("geometric series") {
    auto s = series_expand(inverse_product_one_minus({1}), 10);
    for (int d = 0; d <= 10; ++d) CHECK(s[d] == 1);
    // 1/((1-q)(1-q^2)) counts partitions into parts 1 and 2.
    auto t = series_expand(inverse_product_one_minus({1, 2}), 10);
    for (int d = 0; d <= 10; ++d) CHECK(t[d] == d / 2 + 1);
    CHECK_THROWS_AS(series_expand(RationalFunction(Polynomial{1}, Polynomial{0, 1}), 5), std::domain_error);
}

TEST_CASE("truncation is tracked") {
    TruncatedSeries a = TruncatedSeries::one(10), b = TruncatedSeries::one(4);
    CHECK((a + b).truncation() == 4);
    CHECK((a * b).truncation() == 4);
    CHECK(a.shifted(3)[3] == 1);
    CHECK(a.shifted(11).is_zero());
    CHECK_THROWS_AS(a / TruncatedSeries::zero(10), std::domain_error);
    TruncatedSeries s({1, -1, 2, -3}, 3);
    CHECK(first_negative_coefficient(s) == 1);
    CHECK(!first_negative_coefficient(TruncatedSeries::one(5)).has_value());
}

TEST_CASE("Bareiss determinant and rank") {
    Matrix<Integer> m(3, 3);
    const int v[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m(i, j) = v[i][j];
    CHECK(bareiss_determinant(m) == 4);
    m.swap_rows(0, 2);
    CHECK(bareiss_determinant(m) == -4);

    Matrix<Integer> singular(3, 4);
    for (size_t j = 0; j < 4; ++j) {
        singular(0, j) = static_cast<long>(j + 1);
        singular(1, j) = static_cast<long>(2 * j + 2);
        singular(2, j) = static_cast<long>(j * j);
    }
    CHECK(bareiss_rank(singular) == 2);

    // det [[1, x], [1, 3]] = 3 - x
    Matrix<Polynomial> pm(2, 2, Polynomial(Variable::x));
    pm(0, 0) = Polynomial::constant(1, Variable::x);
    pm(0, 1) = Polynomial({0, 1}, Variable::x);
    pm(1, 0) = Polynomial::constant(1, Variable::x);
    pm(1, 1) = Polynomial({3}, Variable::x);
    CHECK(bareiss_determinant(pm) == Polynomial({3, -1}, Variable::x));
    CHECK(rational_rank(evaluate(pm, Rational(3))) == 1);
}

TEST_CASE("random integer matrices: Bareiss agrees with cofactor expansion") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 50; ++t) {
        Matrix<Integer> m(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) m(i, j) = d(rng);
        Integer cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                      m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                      m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(bareiss_determinant(m) == cof);
        CHECK((bareiss_rank(m) == 3) == (cof != 0));
    }
}
