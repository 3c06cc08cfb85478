#include <galilei/exact/series.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace galilei::exact {

TruncatedSeries::TruncatedSeries(int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation degree");
    coeffs_.resize(static_cast<size_t>(truncation) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int truncation)
    : TruncatedSeries(truncation) {
    const size_t n = std::min(coefficients.size(), coeffs_.size());
    for (size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coefficients[i]);
}

TruncatedSeries TruncatedSeries::one(int truncation) {
    TruncatedSeries s(truncation);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int truncation) {
    auto cs = p.coefficients();
    return TruncatedSeries(std::vector<Rational>(cs.begin(), cs.end()), truncation);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(int truncation) const {
    if (truncation > this->truncation())
        throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + truncation + 1),
                           truncation);
}

TruncatedSeries TruncatedSeries::shifted(int shift) const {
    TruncatedSeries s(truncation());
    s.add_shifted(*this, shift);
    return s;
}

void TruncatedSeries::add_shifted(const TruncatedSeries& other, int shift) {
    if (shift < 0) throw std::invalid_argument("negative shift");
    const int top = std::min(truncation(), other.truncation() + shift);
    for (int d = shift; d <= top; ++d) {
        const Rational& c = other.coeffs_[static_cast<size_t>(d - shift)];
        if (c != 0) coeffs_[static_cast<size_t>(d)] += c;
    }
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) s[i] = a[i] + b[i];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) s[i] = a[i] - b[i];
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) s[i + j] += a[i] * b[j];
    }
    return s;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b[0] == 0) throw std::domain_error("series division by a series with zero constant term");
    const int n = std::min(a.truncation(), b.truncation());
    const Rational inv = 1 / b[0];
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) {
        Rational acc = a[i];
        for (int j = 1; j <= i; ++j) {
            if (b[j] != 0) acc -= b[j] * s[i - j];
        }
        s[i] = acc * inv;
    }
    return s;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].get_str();
    }
    os << "] + O(q^" << truncation() + 1 << ')';
    return os.str();
}

TruncatedSeries series_expand(const RationalFunction& rf, int n) {
    const Polynomial& den = rf.denominator();
    if (den.coefficient(0) == 0) throw std::domain_error("pole at origin");
    return TruncatedSeries::from_polynomial(rf.numerator(), n) /
           TruncatedSeries::from_polynomial(den, n);
}

std::optional<int> first_negative_coefficient(const TruncatedSeries& s) {
    for (int d = 0; d <= s.truncation(); ++d)
        if (s[d] < 0) return d;
    return std::nullopt;
}

}  // namespace galilei::exact
