// Closed forms of F^{(k)}_l(q), one constructor per branch. These are
// transcriptions; the triple-agreement tests against enumeration and the
// recursion are what make them trustworthy.

#include <galilei/genfun/generating_functions.hpp>

namespace galilei::genfun {

namespace {

using exact::Polynomial;

Polynomial q_pow(int d) { return Polynomial::monomial(d); }
Polynomial one_minus(int d) { return Polynomial::one_minus_power(d); }

Polynomial product_one_minus(std::initializer_list<std::pair<int, unsigned>> factors) {
    Polynomial p = Polynomial::constant(1);
    for (auto [d, e] : factors) p *= exact::pow(one_minus(d), e);
    return p;
}

RationalFunction zero() { return RationalFunction(Polynomial()); }

// k = 0, 1, 2: direct counting.
RationalFunction f_small(int k, int l) {
    switch (k) {
        case 0:
            return l == 0 ? RationalFunction(Polynomial::constant(1), one_minus(1)) : zero();
        case 1:
            return RationalFunction(q_pow(l), one_minus(2));
        default:
            if (l % 2) return zero();
            return RationalFunction(q_pow(l / 2), one_minus(1) * one_minus(2));
    }
}

RationalFunction f3(int l) {
    const Polynomial den = product_one_minus({{2, 2}, {4, 1}});
    switch (l % 3) {
        case 0:
            return RationalFunction(q_pow(l / 3) * (Polynomial{1, 0, 1, 0, 1} - q_pow(2 * l / 3 + 2)), den);
        case 1:
            return RationalFunction(q_pow((l + 2) / 3) * (Polynomial{1, 0, 2} - q_pow((2 * l + 4) / 3)), den);
        default:
            return RationalFunction(q_pow((l + 4) / 3) * (Polynomial{2, 0, 1} - q_pow((2 * l + 2) / 3)), den);
    }
}

RationalFunction f4(int l) {
    if (l % 2) return zero();
    const Polynomial den = product_one_minus({{1, 2}, {2, 1}, {3, 1}});
    if (l % 4 == 0) return RationalFunction(q_pow(l / 4) * (Polynomial{1, 0, 1} - q_pow(l / 4 + 1)), den);
    // The correction term is q^{(l+2)/4}; enumeration rules out q^{(l+2)/4 + 1}.
    const int m = (l + 2) / 4;
    return RationalFunction(q_pow(m) * (Polynomial{1, 1} - q_pow(m)), den);
}

RationalFunction f5(int l) {
    switch (l) {
        case 0:
            return RationalFunction(Polynomial{1, 0, 1, 0, 6, 0, 9, 0, 12, 0, 9, 0, 6, 0, 1, 0, 1},
                                    product_one_minus({{2, 2}, {4, 1}, {6, 1}, {8, 1}}));
        case 1:
            return RationalFunction(q_pow(1) * Polynomial{1, 0, 3, 0, 5, 0, 5, 0, 5, 0, 3, 0, 1},
                                    product_one_minus({{2, 3}, {6, 1}, {8, 1}}));
        case 2:
            return RationalFunction(q_pow(2) * Polynomial{3, 0, 5, 0, 7, 0, 5, 0, 3},
                                    product_one_minus({{2, 2}, {4, 2}, {6, 1}}));
        case 3:
            return RationalFunction(q_pow(1) * Polynomial{1, 0, 3, 0, 4, 0, 7, 0, 4, 0, 3, 0, 1},
                                    product_one_minus({{2, 3}, {6, 1}, {8, 1}}));
        default:
            throw NoClosedForm(5, l);
    }
}

RationalFunction f6(int l) {
    switch (l) {
        case 0:
            return RationalFunction(Polynomial{1, 0, 1, 3, 4, 4, 4, 3, 1, 0, 1},
                                    product_one_minus({{1, 1}, {2, 2}, {3, 1}, {4, 1}, {5, 1}}));
        case 2:
            return RationalFunction(q_pow(1) * Polynomial{1, 2, 2, 1, 2, 2, 1},
                                    product_one_minus({{1, 1}, {2, 3}, {3, 1}, {5, 1}}));
        case 4:
            return RationalFunction(q_pow(1) * Polynomial{1, 2, 2, 4, 4, 4, 2, 2, 1},
                                    product_one_minus({{1, 1}, {2, 2}, {3, 1}, {4, 1}, {5, 1}}));
        case 6:
            return RationalFunction(q_pow(1) * Polynomial{1, 1, 2, 3, 2, 1, 1},
                                    product_one_minus({{1, 1}, {2, 3}, {3, 1}, {5, 1}}));
        default:
            throw NoClosedForm(6, l);
    }
}

}  // namespace

bool has_closed_form(int k, int l) {
    if (k < 0 || l < 0) return false;
    if (k <= 4) return true;
    if (k == 5) return l <= 3;
    if (k == 6) return l == 0 || l == 2 || l == 4 || l == 6;
    return false;
}

RationalFunction f_closed(int k, int l) {
    if (!has_closed_form(k, l)) throw NoClosedForm(k, l);
    switch (k) {
        case 0:
        case 1:
        case 2: return f_small(k, l);
        case 3: return f3(l);
        case 4: return f4(l);
        case 5: return f5(l);
        default: return f6(l);
    }
}

}  // namespace galilei::genfun
