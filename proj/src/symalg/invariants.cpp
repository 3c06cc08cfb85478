#include <galilei/symalg/invariants.hpp>

#include <galilei/exact/matrix.hpp>

#include <map>

namespace galilei::symalg {

namespace {

SymElement v(int weight) { return SymElement::generator(4, Basis::v, weight); }

}  // namespace

Invariant build_C2() {
    SymElement c = v(0) * v(0) - Rational(3) * (v(-2) * v(2)) + Rational(12) * (v(-4) * v(4));
    return {c, 2};
}

Invariant build_C3() {
    SymElement c = v(0) * v(0) * v(0)                          //
                   - make_rational(9, 2) * (v(-2) * v(0) * v(2))   //
                   + make_rational(27, 2) * (v(-2) * v(-2) * v(4))  //
                   + make_rational(27, 2) * (v(-4) * v(2) * v(2))   //
                   - Rational(36) * (v(-4) * v(0) * v(4));
    return {c, 3};
}

bool is_invariant(const SymElement& p) {
    return adjoint_action(Generator::e, p).is_zero() && adjoint_action(Generator::f, p).is_zero();
}

IndependenceCertificate independence_check(int k) {
    if (k < 1) throw std::invalid_argument("independence_check requires k >= 1");
    const SymElement w_m4 = SymElement::generator(4, Basis::w, -4);
    const SymElement w_m2 = SymElement::generator(4, Basis::w, -2);

    std::vector<SymElement> vectors;
    for (int i = 0; i < k; ++i) {
        SymElement p = SymElement::constant(4, Basis::w, 1);
        for (int t = 0; t < i; ++t) p = p * w_m4;
        for (int t = 0; t < k - i; ++t) p = p * w_m2;
        for (int t = 0; t < i; ++t) p = adjoint_action(Generator::e, p);
        vectors.push_back(std::move(p));
    }

    std::map<Exponents, size_t> column;
    for (const auto& p : vectors)
        for (const auto& [e, c] : p.terms()) column.try_emplace(e, 0);
    size_t idx = 0;
    for (auto& [e, c] : column) c = idx++;

    exact::Matrix<Rational> m(vectors.size(), column.size());
    for (size_t r = 0; r < vectors.size(); ++r)
        for (const auto& [e, c] : vectors[r].terms()) m(r, column.at(e)) = c;

    IndependenceCertificate cert;
    cert.vectors = vectors.size();
    cert.monomials = column.size();
    cert.rank = exact::rational_rank(m);
    cert.independent = cert.rank == cert.vectors;
    return cert;
}

}  // namespace galilei::symalg
