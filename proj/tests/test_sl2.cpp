#include <doctest.h>

#include <galilei/genfun/generating_functions.hpp>
#include <galilei/sl2/fin_dim.hpp>
#include <galilei/sl2/harish_chandra.hpp>

using namespace galilei;
using namespace galilei::sl2;

namespace {

// Weight character of L(m) x L(n) by multiplying weight multisets.
WeightMultiplicities product_weights(int m, int n) {
    WeightMultiplicities w;
    for (int a = -m; a <= m; a += 2)
        for (int b = -n; b <= n; b += 2) ++w[a + b];
    return w;
}

HCMultiset hc(std::initializer_list<std::pair<SimpleHC, long long>> items) {
    HCMultiset m;
    for (auto& [s, c] : items) m[s] += c;
    return m;
}

const SimpleHC P0 = SimpleHC::prime(0), P2 = SimpleHC::prime(2);
SimpleHC V(int n) { return SimpleHC::V(n); }

}  // namespace

TEST_CASE("Clebsch-Gordan against the weight-count oracle") {
    CHECK(clebsch_gordan(0, 5) == FinDimMultiset{{5, 1}});
    CHECK(clebsch_gordan(1, 1) == FinDimMultiset{{0, 1}, {2, 1}});
    CHECK(clebsch_gordan(4, 4) == FinDimMultiset{{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}});
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) CHECK(clebsch_gordan(m, n) == peel_highest_weights(product_weights(m, n)));
}

TEST_CASE("peeling rejects non-characters") {
    CHECK_THROWS_AS(peel_highest_weights({{2, 1}}), std::invalid_argument);
}

TEST_CASE("symmetric powers") {
    CHECK(sym_power_decompose(4, 1) == FinDimMultiset{{4, 1}});
    CHECK(sym_power_decompose(4, 2) == FinDimMultiset{{0, 1}, {4, 1}, {8, 1}});
    CHECK(sym_power_decompose(4, 3) == FinDimMultiset{{0, 1}, {4, 1}, {6, 1}, {8, 1}, {12, 1}});
}

TEST_CASE("dimension count and weight symmetry") {
    for (int k = 0; k <= 6; ++k)
        for (int n = 0; n <= 12; ++n) {
            long long dim = 0;
            for (auto [l, m] : sym_power_decompose(k, n)) dim += (l + 1) * m;
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + k), static_cast<unsigned long>(k));
            CHECK(Integer(static_cast<long>(dim)) == b);
            const auto w = sym_power_weights(k, n);
            for (auto [wt, d] : w) CHECK(w.at(-wt) == d);
        }
}

TEST_CASE("symmetric powers agree with generating functions") {
    const int N = 10;
    for (int k = 1; k <= 5; ++k) {
        for (int l = 0; l <= 12; ++l) {
            const auto diff = genfun::f_enum(k, l, N) - genfun::f_enum(k, l + 2, N);
            for (int n = 0; n <= N; ++n) {
                const auto dec = sym_power_decompose(k, n);
                const auto it = dec.find(l);
                CHECK(diff[n] == Rational(static_cast<long>(it == dec.end() ? 0 : it->second)));
            }
        }
    }
}

TEST_CASE("Verma weight spaces") {
    CHECK(verma_weight_dim(0) == 1);
    CHECK(verma_weight_dim(1) == 2);
    CHECK(verma_weight_dim(2) == 4);
    // PBW monomials f^a v_-2^b v_-4^c with a + b + 2c = k.
    for (int k = 0; k <= 30; ++k) {
        long long count = 0;
        for (int c = 0; 2 * c <= k; ++c) count += k - 2 * c + 1;
        CHECK(verma_weight_dim(k) == count);
    }
}

TEST_CASE("characters of simple highest-weight modules") {
    const int lambda = 7, depth = 12;
    const auto ch = char_simple_hw(lambda, depth);
    CHECK(ch.at(lambda) == 1);
    CHECK(ch.at(lambda - 4) == 3);
    CHECK_THROWS_AS(ch.at(lambda - 2 * depth - 2), std::out_of_range);
    for (int j = 0; j <= depth; ++j) {
        long long sum = 0;
        for (int m = 0; 4 * m <= 2 * j; ++m) sum += char_simple_hw(lambda - 4 * m, depth).at(lambda - 2 * j);
        CHECK(verma_weight_dim(j) == sum);
    }
}

TEST_CASE("Q(0) multiplicities and graded parts") {
    CHECK(q0_multiplicity(0) == 1);
    CHECK(q0_multiplicity(2) == 0);
    CHECK(q0_multiplicity(8) == 3);
    CHECK(q00_degree_part(0) == FinDimMultiset{{0, 1}});
    CHECK(q00_degree_part(2) == FinDimMultiset{{4, 1}, {8, 1}});
    CHECK(q00_degree_part(4) == FinDimMultiset{{8, 1}, {10, 1}, {12, 1}, {16, 1}});
    for (int l = 0; l <= 40; ++l) {
        long long sum = 0;
        for (int k = 0; k <= l; ++k) {
            const auto part = q00_degree_part(k);
            if (auto it = part.find(l); it != part.end()) sum += it->second;
        }
        CHECK(q0_multiplicity(l) == sum);
    }
}

TEST_CASE("simple module labels") {
    CHECK(SimpleHC::parse("V'(0)") == P0);
    CHECK(SimpleHC::parse("Vp2") == P2);
    CHECK(SimpleHC::parse("V(3)") == V(3));
    CHECK(SimpleHC::parse("V3") == V(3));
    CHECK(V(12).to_string() == "V(12)");
    CHECK_THROWS(SimpleHC::parse("V(0)"));
    CHECK_THROWS(SimpleHC::parse("W(2)"));
    CHECK_THROWS(SimpleHC::prime(1));
}

TEST_CASE("tensor rules") {
    CHECK(hc_tensor(0, V(3)) == hc({{V(3), 1}}));
    CHECK(hc_tensor(6, P0) == hc({{P2, 1}, {V(2), 1}, {V(4), 1}, {V(6), 1}}));
    CHECK(hc_tensor(3, V(3)) == hc({{P0, 1}, {P2, 1}, {V(2), 1}, {V(4), 1}, {V(6), 1}}));
    CHECK(hc_tensor(2, P0) == hc({{P2, 1}, {V(2), 1}}));
}

TEST_CASE("tensor coherence with Clebsch-Gordan") {
    std::vector<SimpleHC> simples{P0, P2};
    for (int n = 1; n <= 8; ++n) simples.push_back(V(n));
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (const auto& s : simples) {
                HCMultiset lhs, rhs;
                for (auto [t, m] : hc_tensor(b, s)) add_into(lhs, hc_tensor(a, t), m);
                for (auto [j, m] : clebsch_gordan(a, b)) add_into(rhs, hc_tensor(j, s), m);
                CHECK_MESSAGE(lhs == rhs, "a=", a, " b=", b, " s=", s.to_string());
            }
}

TEST_CASE("tensor rules respect g-types") {
    // [L(k) x s : L(j)] summed over constituents equals the Clebsch-Gordan count.
    const int max_weight = 40;
    std::vector<SimpleHC> simples{P0, P2};
    for (int n = 1; n <= 6; ++n) simples.push_back(V(n));
    for (int k = 0; k <= 6; ++k)
        for (const auto& s : simples) {
            FinDimMultiset via_tensor, via_types;
            for (auto [t, m] : hc_tensor(k, s))
                for (auto [j, c] : g_types(t, max_weight)) via_tensor[j] += m * c;
            for (auto [j, c] : g_types(s, max_weight + k))
                for (auto [i, d] : clebsch_gordan(k, j))
                    if (i <= max_weight - k) via_types[i] += c * d;
            for (auto it = via_tensor.begin(); it != via_tensor.end();)
                it = it->first > max_weight - k ? via_tensor.erase(it) : std::next(it);
            CHECK_MESSAGE(via_tensor == via_types, "k=", k, " s=", s.to_string());
        }
}

TEST_CASE("Enright-Arkhipov images") {
    CHECK(enar_simple(-2) == hc({{P0, 1}, {P2, 1}}));
    CHECK(enar_simple(0) == hc({{V(2), 1}}));
    CHECK(enar_simple(-6) == hc({{V(4), 1}}));
}
