#include <galilei/exact/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace galilei::exact {

char variable_name(Variable v) { return v == Variable::q ? 'q' : 'x'; }

Polynomial::Polynomial(std::vector<Rational> coefficients, Variable var)
    : var_(var), coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients, Variable var) : var_(var) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(const Rational& c, Variable var) {
    return Polynomial(std::vector<Rational>{c}, var);
}

Polynomial Polynomial::monomial(int degree, const Rational& c, Variable var) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> cs(static_cast<size_t>(degree) + 1);
    cs.back() = c;
    return Polynomial(std::move(cs), var);
}

Polynomial Polynomial::one_minus_power(int d, Variable var) {
    return constant(1, var) - monomial(d, 1, var);
}

Polynomial Polynomial::linear_root(const Rational& root, Variable var) {
    return Polynomial(std::vector<Rational>{-root, Rational(1)}, var);
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Variable Polynomial::merged_variable(const Polynomial& o) const {
    if (is_constant()) return o.var_;
    if (o.is_constant() || o.var_ == var_) return var_;
    throw std::invalid_argument("polynomials in different variables");
}

Rational Polynomial::coefficient(int d) const {
    if (d < 0 || d > degree()) return 0;
    return coeffs_[static_cast<size_t>(d)];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    Rational inv = 1 / leading();
    return r *= inv;
}

Polynomial Polynomial::shifted(int shift) const {
    if (shift < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return *this;
    std::vector<Rational> cs(static_cast<size_t>(shift));
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(cs), var_);
}

Polynomial Polynomial::cleared_denominators() const {
    Integer l = 1;
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return *this * Rational(l);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    var_ = merged_variable(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    var_ = merged_variable(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    var_ = merged_variable(o);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    return a.is_constant() || a.var_ == b.var_;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    const char v = variable_name(var_);
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        Rational c = coeffs_[static_cast<size_t>(d)];
        if (c == 0) continue;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (d == 0 || c != 1) {
            os << c.get_str();
            if (d > 0) os << '*';
        }
        if (d >= 1) os << v;
        if (d >= 2) os << '^' << d;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Variable var = a.is_constant() ? b.variable() : a.variable();
    if (a.degree() < b.degree()) return {Polynomial(var), a};
    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const Rational lead_inv = 1 / b.leading();
    const int db = b.degree();
    for (int d = a.degree(); d >= db; --d) {
        const Rational c = rem[static_cast<size_t>(d)] * lead_inv;
        if (c == 0) continue;
        quot[static_cast<size_t>(d - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(d - db + j)] -= c * b.coefficient(j);
    }
    return {Polynomial(std::move(quot), var), Polynomial(std::move(rem), var)};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = a.monic();
    Polynomial v = b.monic();
    while (!v.is_zero()) {
        Polynomial r = divmod(u, v).second.monic();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(1, p.variable());
    Polynomial base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

}  // namespace galilei::exact
