#pragma once

// Generating functions F^{(k)}_l(q) = sum_n dim Sym^n(L(k))_l q^n, computed
// three ways: by enumerating Diophantine solutions, by the recursion that
// peels off the extreme weights k and -k, and from closed forms.

#include <galilei/exact/rational_function.hpp>
#include <galilei/exact/series.hpp>

#include <optional>
#include <stdexcept>

namespace galilei::genfun {

using exact::RationalFunction;
using exact::TruncatedSeries;

inline constexpr int kDefaultDegree = 60;

struct NoClosedForm : std::invalid_argument {
    NoClosedForm(int k, int l);
};

// Counts Diophantine solutions degree by degree, up to q^N.
TruncatedSeries f_enum(int k, int l, int N);

// Splits off a = a_0 and c = a_k; the middle exponents form a monomial of
// Sym(L(k-2)) whose weight b is either >= 0 or, renamed, -(b+1). Grounded at
// k-2 in {0, 1} by the closed forms. Requires k >= 2.
TruncatedSeries f_recur(int k, int l, int N);

// Available for k <= 4 (any l), k = 5 with l <= 3, k = 6 with l in {0,2,4,6}.
bool has_closed_form(int k, int l);
// Throws NoClosedForm outside the table above.
RationalFunction f_closed(int k, int l);

// F_0 - F_2 to degree N from enumeration. When both closed forms exist the
// expansion of their difference must agree, otherwise std::logic_error.
TruncatedSeries invariant_series(int k, int N);

struct FreenessQuotient {
    TruncatedSeries quotient;
    std::optional<int> first_negative;
};

// (F_l - F_{l+2}) / (F_0 - F_2) to degree N.
FreenessQuotient freeness_quotient(int k, int l, int N);

}  // namespace galilei::genfun
