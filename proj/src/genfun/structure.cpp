#include <galilei/genfun/structure.hpp>

#include <galilei/genfun/generating_functions.hpp>

namespace galilei::genfun {

using exact::Polynomial;
using exact::TruncatedSeries;

namespace {

std::optional<int> lowest_nonconstant(const TruncatedSeries& s) {
    for (int d = 1; d <= s.truncation(); ++d)
        if (s[d] != 0) return d;
    return std::nullopt;
}

}  // namespace

InvariantStructure detect_structure(const TruncatedSeries& series) {
    const int N = series.truncation();
    if (series[0] != 1) throw StructureNotRecognized();
    InvariantStructure out;
    TruncatedSeries residual = series;
    for (;;) {
        auto d = lowest_nonconstant(residual);
        if (!d || residual[*d] < 0) break;
        out.generator_degrees.push_back(*d);
        residual = residual * TruncatedSeries::from_polynomial(Polynomial::one_minus_power(*d), N);
    }
    if (auto e = lowest_nonconstant(residual)) {
        if (residual[*e] != -1) throw StructureNotRecognized();
        if (residual != TruncatedSeries::from_polynomial(Polynomial::one_minus_power(*e), N))
            throw StructureNotRecognized();
        out.relation_degree = *e;
    }
    if (structure_series(out, N) != series) throw StructureNotRecognized();
    return out;
}

InvariantStructure detect_invariant_structure(int k, int N) { return detect_structure(invariant_series(k, N)); }

TruncatedSeries structure_series(const InvariantStructure& s, int N) {
    Polynomial den = Polynomial::constant(1);
    for (int d : s.generator_degrees) den *= Polynomial::one_minus_power(d);
    Polynomial num = s.relation_degree ? Polynomial::one_minus_power(*s.relation_degree) : Polynomial::constant(1);
    return exact::series_expand(exact::RationalFunction(num, den), N);
}

}  // namespace galilei::genfun
