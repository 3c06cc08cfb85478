#pragma once

#include <galilei/exact/rational_function.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace galilei::exact {

/// Power series in q known exactly through degree truncation().
///
/// Binary operations truncate to the smaller of the two truncation degrees,
/// so a result never claims more precision than its inputs.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int truncation);
    TruncatedSeries(std::vector<Rational> coefficients, int truncation);

    static TruncatedSeries zero(int truncation) { return TruncatedSeries(truncation); }
    static TruncatedSeries one(int truncation);
    static TruncatedSeries from_polynomial(const Polynomial& p, int truncation);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int d) const { return coeffs_.at(static_cast<size_t>(d)); }
    Rational& operator[](int d) { return coeffs_.at(static_cast<size_t>(d)); }
    std::span<const Rational> coefficients() const { return coeffs_; }
    bool is_zero() const;

    TruncatedSeries truncated(int truncation) const;
    // Multiply by q^shift, keeping the truncation degree.
    TruncatedSeries shifted(int shift) const;
    // Adds q^shift * other into this series up to this series' truncation.
    void add_shifted(const TruncatedSeries& other, int shift);

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    // Throws std::domain_error when b has zero constant term.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

// Maclaurin coefficients 0..n of rf. Throws std::domain_error("pole at origin")
// if the denominator has zero constant term.
TruncatedSeries series_expand(const RationalFunction& rf, int n);

// Smallest degree carrying a negative coefficient.
std::optional<int> first_negative_coefficient(const TruncatedSeries& s);

}  // namespace galilei::exact
