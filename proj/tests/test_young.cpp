#include <doctest.h>

#include <galilei/young/lattice.hpp>
#include <galilei/young/partition.hpp>
#include <galilei/young/psi.hpp>

#include <algorithm>
#include <set>

using namespace galilei;
using namespace galilei::young;
using exact::Variable;

namespace {

Polynomial c(long v) { return Polynomial::constant(Rational(v), Variable::x); }
Polynomial xm(long i) { return Polynomial::linear_root(Rational(i)); }
Partition P(const std::string& s) { return Partition::parse(s); }

size_t index_of(const std::vector<Partition>& v, const Partition& p) {
    return static_cast<size_t>(std::find(v.begin(), v.end(), p) - v.begin());
}

void check_matrix(int n, const std::vector<std::string>& columns, const std::vector<std::vector<Polynomial>>& rows) {
    const auto m = path_matrix(n);
    REQUIRE(m.columns.size() == columns.size());
    REQUIRE(m.rows.size() == rows.size());
    for (size_t j = 0; j < columns.size(); ++j) CHECK(m.columns[j].to_string() == columns[j]);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < columns.size(); ++j)
            CHECK_MESSAGE(m.entries(i, j) == rows[i][j], "M_", n, " at (", i, ",", j, ")");
}

}  // namespace

TEST_CASE("partitions") {
    const auto p = P("(3,2,1^2)");
    CHECK(p.parts() == std::vector<int>{3, 2, 1, 1});
    CHECK(p.size() == 7);
    CHECK(p.to_string() == "(3,2,1^2)");
    CHECK(P("∅").to_string() == "∅");
    CHECK(P("2,2,1").to_string() == "(2^2,1)");
    CHECK(P("(4)").dominates(P("(2,2)")));
    CHECK(!P("(3,1^3)").dominates(P("(2^3)")));
    CHECK(!P("(2^3)").dominates(P("(3,1^3)")));
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition::parse("(a)"));
}

TEST_CASE("bounded partitions are counted correctly") {
    for (int n = 0; n <= 30; ++n) {
        const auto ps = partitions_bounded(n, kMaxPart);
        CHECK(static_cast<long long>(ps.size()) == count_partitions_bounded(n, kMaxPart));
        for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i].parts() < ps[i - 1].parts());
        for (const auto& p : ps) CHECK(p.largest() <= kMaxPart);
    }
    CHECK(count_partitions_bounded(10, 10) == 42);
}

TEST_CASE("edge labels") {
    const auto e0 = edges_from(Partition());
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].label == xm(0));
    CHECK(edge_label(P("(2)"), P("(3)")) == c(1));
    CHECK(edge_label(P("(2)"), P("(2,1)")) == xm(1));
    CHECK(edge_label(P("(2^2)"), P("(3,2)")) == c(2));
    CHECK(edge_label(P("(2^2)"), P("(2^2,1)")) == xm(2));
    CHECK(!edge_label(P("(4)"), P("(5)")));
    CHECK(!edge_label(P("(2)"), P("(2,2)")));
    CHECK(edges_from(P("(4,4)")).size() == 1);
}

TEST_CASE("printed path matrices") {
    check_matrix(1, {"(1)"}, {{c(1)}});
    check_matrix(2, {"(2)", "(1^2)"}, {{c(1), xm(1)}, {c(0), c(1)}});
    check_matrix(3, {"(3)", "(2,1)", "(1^3)"},
                 {{c(1), c(3) * xm(1), xm(1) * xm(2)}, {c(0), c(2), xm(2)}, {c(0), c(0), c(1)}});
    check_matrix(4, {"(4)", "(3,1)", "(2^2)", "(2,1^2)", "(1^4)"},
                 {{c(1), c(4) * xm(1), c(3) * xm(1), c(6) * xm(1) * xm(2), xm(1) * xm(2) * xm(3)},
                  {c(0), c(2), c(2), c(5) * xm(2), xm(2) * xm(3)},
                  {c(0), c(0), c(0), c(3), xm(3)},
                  {c(0), c(0), c(0), c(0), c(1)}});
}

TEST_CASE("rank at x = n") {
    for (int n = 1; n <= 10; ++n) CHECK(rank_at(n) == static_cast<size_t>(n));
}

TEST_CASE("columns of the reduced M_n lie in the column span of M_{n-1}") {
    const Rational generic = make_rational(1, 7);
    for (int n = 2; n <= 10; ++n) {
        const auto prev = path_matrix(n - 1), cur = path_matrix(n);
        const size_t rows = prev.rows.size();
        const size_t drop = index_of(cur.columns, Partition::column(n));
        exact::Matrix<Rational> joined(rows, prev.columns.size() + cur.columns.size() - 1);
        for (size_t i = 0; i < rows; ++i) {
            size_t j = 0;
            for (size_t a = 0; a < prev.columns.size(); ++a) joined(i, j++) = prev.entries(i, a).evaluate(generic);
            for (size_t a = 0; a < cur.columns.size(); ++a)
                if (a != drop) joined(i, j++) = cur.entries(i, a).evaluate(generic);
        }
        CHECK(exact::rational_rank(joined) == exact::rational_rank(exact::evaluate(prev.entries, generic)));
    }
}

TEST_CASE("psi") {
    CHECK(special_partition(6) == P("(2^3)"));
    CHECK(special_partition(7) == P("(3,2^2)"));
    for (int n = 2; n <= 10; ++n) {
        const auto psi = build_psi(n);
        std::set<Partition> images;
        for (const auto& [from, to] : psi) {
            CHECK(to.size() == n);
            CHECK(to != Partition::column(n));
            CHECK(to.largest() <= kMaxPart);
            images.insert(to);
        }
        CHECK(images.size() == psi.size());
        CHECK(psi.at(Partition::column(n - 1)) == special_partition(n));
    }
    CHECK_THROWS(build_psi(1));
}

TEST_CASE("N_6 ordering and entries") {
    const auto m = build_Nn(6);
    std::vector<std::string> cols, rows;
    for (auto& p : m.columns) cols.push_back(p.to_string());
    for (auto& p : m.rows) rows.push_back(p.to_string());
    CHECK(cols == std::vector<std::string>{"(1^5)", "(2,1^3)", "(2^2,1)", "(3,1^2)", "(3,2)", "(4,1)"});
    CHECK(rows == std::vector<std::string>{"(2,1^4)", "(2^2,1^2)", "(2^3)", "(3,1^3)", "(3,2,1)", "(4,1^2)"});
    const Polynomial z(Variable::x);
    const std::vector<std::vector<Polynomial>> expected{
        {c(5), xm(4), z, z, z, z},        {z, c(3), xm(3), z, z, z},       {z, z, c(1), z, z, z},
        {z, c(1), z, xm(3), z, z},
        // (3,2,1) covers (2^2,1) and (3,1^2), both with label 2.
        {z, z, c(2), c(2), xm(2), z},
        // (4,1) has two parts, so the first-column edge to (4,1^2) is x-2.
        {z, z, z, c(1), z, xm(2)},
    };
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) CHECK_MESSAGE(m.entries(i, j) == expected[i][j], rows[i], " / ", cols[j]);
    const auto f = verify_det_factorization(6);
    CHECK(f.integer_factor == 15);
    CHECK(f.roots == std::vector<int>{2, 2, 3});
}

TEST_CASE("the special row has a single entry 1 in the even case") {
    for (int n = 2; n <= 12; n += 2) {
        const auto m = build_Nn(n);
        const size_t r = index_of(m.rows, m.special);
        size_t nonzero = 0;
        for (size_t j = 0; j < m.columns.size(); ++j)
            if (!m.entries(r, j).is_zero()) {
                ++nonzero;
                CHECK(m.entries(r, j) == c(1));
            }
        CHECK(nonzero == 1);
    }
}

TEST_CASE("determinant factorizations") {
    for (int n = 2; n <= 10; ++n) {
        const auto f = verify_det_factorization(n);
        CHECK(f.integer_factor_nonzero);
        CHECK(f.splits);
        CHECK(f.roots_below_n);
        CHECK(f.nonzero_at_n);
        for (int m = n; m <= 12; ++m) CHECK(f.determinant.evaluate(Rational(m)) != 0);
    }
    // Reordering rows only flips the sign.
    auto m = build_Nn(7);
    const auto d = exact::bareiss_determinant(m.entries);
    m.entries.swap_rows(0, 3);
    CHECK(exact::bareiss_determinant(m.entries) == -d);
}

TEST_CASE("factoring integer roots") {
    const auto p = c(6) * xm(1) * xm(1) * xm(4);
    const auto f = factor_integer_roots(p, 5);
    CHECK(f.splits);
    CHECK(f.integer_factor == 6);
    CHECK(f.roots == std::vector<int>{1, 1, 4});
    const auto g = factor_integer_roots(Polynomial({1, 0, 1}, Variable::x), 5);
    CHECK(!g.splits);
}
