#include <doctest.h>

#include <galilei/genfun/diophantine.hpp>
#include <galilei/genfun/generating_functions.hpp>
#include <galilei/genfun/structure.hpp>

#include <numeric>
#include <set>

using namespace galilei;
using namespace galilei::genfun;
using exact::Polynomial;
using exact::series_expand;
using exact::TruncatedSeries;

namespace {

TruncatedSeries from_ints(std::vector<long> c) {
    std::vector<Rational> r(c.begin(), c.end());
    const int n = static_cast<int>(r.size()) - 1;
    return TruncatedSeries(std::move(r), n);
}

}  // namespace

TEST_CASE("solution stream emits exactly the valid tuples, once each") {
    for (int k = 0; k <= 4; ++k) {
        for (int l = -k; l <= 2 * k; ++l) {
            const int N = 6;
            std::set<std::vector<int>> seen;
            DiophantineSolutionStream s(k, l, N);
            while (auto t = s.next()) {
                std::vector<int> v(t->begin(), t->end());
                int weight = 0;
                for (int i = 0; i <= k; ++i) weight += (k - 2 * i) * v[static_cast<size_t>(i)];
                CHECK(weight == l);
                CHECK(std::accumulate(v.begin(), v.end(), 0) <= N);
                CHECK(seen.insert(v).second);
            }
            // Brute force count over the box [0, N]^(k+1).
            size_t expected = 0;
            std::vector<int> v(static_cast<size_t>(k) + 1, 0);
            while (true) {
                int w = 0, d = 0;
                for (int i = 0; i <= k; ++i) {
                    w += (k - 2 * i) * v[static_cast<size_t>(i)];
                    d += v[static_cast<size_t>(i)];
                }
                if (w == l && d <= N) ++expected;
                size_t i = 0;
                while (i < v.size() && ++v[i] > N) v[i++] = 0;
                if (i == v.size()) break;
            }
            CHECK(seen.size() == expected);
        }
    }
}

TEST_CASE("f_enum examples") {
    CHECK(f_enum(1, 3, 7) == from_ints({0, 0, 0, 1, 0, 1, 0, 1}));
    CHECK(f_enum(2, 1, 10).is_zero());
    CHECK(f_enum(4, 0, 8) == series_expand(f_closed(4, 0), 8));
    CHECK(f_enum(4, 0, 5) == from_ints({1, 1, 3, 5, 8, 12}));
}

TEST_CASE("f_recur examples") {
    CHECK(f_recur(2, 0, 6) == from_ints({1, 1, 2, 2, 3, 3, 4}));
    CHECK(f_recur(3, 0, 12) == series_expand(f_closed(3, 0), 12));
    CHECK(f_recur(5, 0, 20) == series_expand(f_closed(5, 0), 20));
    CHECK_THROWS_AS(f_recur(1, 0, 5), std::invalid_argument);
}

TEST_CASE("closed forms") {
    CHECK(f_closed(4, 5).is_zero());
    // l = 2 (mod 3) branch of k = 3.
    const auto den = exact::pow(Polynomial::one_minus_power(2), 2) * Polynomial::one_minus_power(4);
    CHECK(f_closed(3, 2) == exact::RationalFunction(Polynomial::monomial(2) * (Polynomial{2, 0, 1} - Polynomial::monomial(2)), den));
    const auto f6 = exact::RationalFunction(
        Polynomial{1, 0, 1, 3, 4, 4, 4, 3, 1, 0, 1},
        Polynomial::one_minus_power(1) * exact::pow(Polynomial::one_minus_power(2), 2) *
            Polynomial::one_minus_power(3) * Polynomial::one_minus_power(4) * Polynomial::one_minus_power(5));
    CHECK(f_closed(6, 0) == f6);
    CHECK_THROWS_AS(f_closed(5, 4), NoClosedForm);
    CHECK_THROWS_AS(f_closed(7, 0), NoClosedForm);
    CHECK(!has_closed_form(6, 1));
}

TEST_CASE("three methods agree on the small table") {
    for (int k = 2; k <= 6; ++k)
        for (int l = 0; l <= 8; ++l) {
            const auto e = f_enum(k, l, 30);
            CHECK(f_recur(k, l, 30) == e);
            if (has_closed_form(k, l)) CHECK(series_expand(f_closed(k, l), 30) == e);
        }
}

TEST_CASE("weight spaces add up to the full symmetric power") {
    // Weights are symmetric, so F_0 + 2 sum_{l>0} F_l counts all
    // binomial(n+k, k) monomials of degree n.
    for (int k = 1; k <= 5; ++k) {
        const int N = 8;
        TruncatedSeries total = f_enum(k, 0, N);
        for (int l = 1; l <= k * N; ++l) total = total + f_enum(k, l, N) + f_enum(k, l, N);
        for (int n = 0; n <= N; ++n) {
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + k), static_cast<unsigned long>(k));
            CHECK(total[n] == Rational(b));
        }
    }
}

TEST_CASE("invariant series and structure") {
    CHECK(invariant_series(3, 20) == series_expand(exact::inverse_product_one_minus({4}), 20));
    CHECK(invariant_series(4, 20) == series_expand(exact::inverse_product_one_minus({2, 3}), 20));
    const auto s3 = detect_invariant_structure(3, 40);
    CHECK(s3.generator_degrees == std::vector<int>{4});
    CHECK(s3.is_polynomial_algebra());
    const auto s4 = detect_invariant_structure(4, 40);
    CHECK(s4.generator_degrees == std::vector<int>{2, 3});
    const auto s5 = detect_invariant_structure(5, 60);
    CHECK(s5.generator_degrees == std::vector<int>{4, 8, 12, 18});
    CHECK(s5.relation_degree == 36);
    CHECK(structure_series(s5, 60) == invariant_series(5, 60));
}

TEST_CASE("structure detection fails honestly") {
    // 1 + 2q + 2q^2: not of the product shape.
    CHECK_THROWS_AS(detect_structure(from_ints({1, 2, 2, 0, 0, 0, 0})), StructureNotRecognized);
    CHECK_THROWS_AS(detect_structure(from_ints({1, -1, -1, 0, 0})), StructureNotRecognized);
}

TEST_CASE("freeness quotient") {
    const auto f48 = freeness_quotient(4, 8, 12);
    CHECK(f48.quotient == from_ints({0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(!f48.first_negative);
    CHECK(freeness_quotient(5, 1, 30).first_negative == 23);
    CHECK(freeness_quotient(6, 2, 30).first_negative == 18);
}
