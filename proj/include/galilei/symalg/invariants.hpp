#pragma once

#include <galilei/symalg/sym_element.hpp>

#include <cstddef>

namespace galilei::symalg {

struct Invariant {
    SymElement element;
    int degree;
};

// The two generators of Sym(L(4))^sl2, in the v-basis.
Invariant build_C2();
Invariant build_C3();

bool is_invariant(const SymElement& p);

struct IndependenceCertificate {
    bool independent = false;
    size_t rank = 0;
    size_t vectors = 0;
    // Monomials spanned (degree k, weight -2k in Sym(L(4))).
    size_t monomials = 0;
};

// Rank of ad_e^i(w_{-4}^i w_{-2}^{k-i}), i = 0..k-1, over Q.
IndependenceCertificate independence_check(int k);

}  // namespace galilei::symalg
