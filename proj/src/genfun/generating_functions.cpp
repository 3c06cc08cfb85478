#include <galilei/genfun/generating_functions.hpp>

#include <galilei/genfun/diophantine.hpp>

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace galilei::genfun {

NoClosedForm::NoClosedForm(int k, int l)
    : std::invalid_argument("no closed form available for (k, l) = (" + std::to_string(k) + ", " +
                            std::to_string(l) + ")") {}

TruncatedSeries f_enum(int k, int l, int N) {
    if (k < 0 || l < 0 || N < 0) throw std::invalid_argument("f_enum: k, l, N must be non-negative");
    std::vector<long long> counts(static_cast<size_t>(N) + 1, 0);
    DiophantineSolutionStream stream(k, l, N);
    while (auto tuple = stream.next()) {
        const int degree = std::accumulate(tuple->begin(), tuple->end(), 0);
        ++counts[static_cast<size_t>(degree)];
    }
    TruncatedSeries s(N);
    for (int d = 0; d <= N; ++d) s[d] = Rational(static_cast<long>(counts[static_cast<size_t>(d)]));
    return s;
}

namespace {

// Series of F^{(k)}_b at a fixed truncation, filled on demand. Local to one
// f_recur call, so no synchronisation is needed.
class RecursionTable {
public:
    explicit RecursionTable(int N) : N_(N) {}

    const TruncatedSeries& get(int k, int b) {
        auto key = std::make_pair(k, b);
        auto it = table_.find(key);
        if (it != table_.end()) return it->second;
        TruncatedSeries s = k <= 1 ? exact::series_expand(f_closed(k, b), N_) : compute(k, b);
        return table_.emplace(key, std::move(s)).first->second;
    }

private:
    // Lowest degree at which F^{(k)}_b can be non-zero.
    static int min_degree(int k, int b) {
        if (b == 0) return 0;
        if (k == 0) return 1 << 30;
        return (b + k - 1) / k;
    }

    TruncatedSeries compute(int k, int l) {
        TruncatedSeries out(N_);
        const int inner = k - 2;
        for (int a = 0; a <= N_; ++a) {
            for (int c = 0; a + c <= N_; ++c) {
                const int budget = N_ - a - c;
                // k*a + b - k*c = l
                const int b_plus = l - k * a + k * c;
                if (b_plus >= 0 && min_degree(inner, b_plus) <= budget)
                    out.add_shifted(get(inner, b_plus).truncated(budget), a + c);
                // k*a - b - k*c = l + 1, contributing F_{b+1}
                const int b_minus = k * a - k * c - l - 1;
                if (b_minus >= 0 && min_degree(inner, b_minus + 1) <= budget)
                    out.add_shifted(get(inner, b_minus + 1).truncated(budget), a + c);
            }
        }
        return out;
    }

    int N_;
    std::map<std::pair<int, int>, TruncatedSeries> table_;
};

}  // namespace

TruncatedSeries f_recur(int k, int l, int N) {
    if (k < 2) throw std::invalid_argument("f_recur requires k >= 2");
    if (l < 0 || N < 0) throw std::invalid_argument("f_recur: l, N must be non-negative");
    RecursionTable table(N);
    return table.get(k, l);
}

TruncatedSeries invariant_series(int k, int N) {
    TruncatedSeries s = f_enum(k, 0, N) - f_enum(k, 2, N);
    if (has_closed_form(k, 0) && has_closed_form(k, 2)) {
        const auto closed = exact::series_expand(f_closed(k, 0) - f_closed(k, 2), N);
        if (!(closed == s))
            throw std::logic_error("closed form and enumeration disagree for k = " + std::to_string(k));
    }
    return s;
}

FreenessQuotient freeness_quotient(int k, int l, int N) {
    const TruncatedSeries den = invariant_series(k, N);
    if (den[0] == 0) throw std::domain_error("freeness quotient ill-posed: zero constant term");
    const TruncatedSeries num = f_enum(k, l, N) - f_enum(k, l + 2, N);
    FreenessQuotient out{num / den, std::nullopt};
    out.first_negative = exact::first_negative_coefficient(out.quotient);
    return out;
}

}  // namespace galilei::genfun
