#pragma once

#include <galilei/exact/rational.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace galilei::exact {

// The two formal variables in play: q for generating functions, x for the
// edge labels of the partition lattice.
enum class Variable { q, x };

char variable_name(Variable v);

/// Dense univariate polynomial over Q.
///
/// Coefficients are indexed by degree and never carry trailing zeros, so the
/// zero polynomial has an empty coefficient list and degree kZeroDegree.
/// Constants are variable-agnostic: they combine with polynomials in either
/// variable, while two non-constant polynomials in different variables do not.
class Polynomial {
public:
    static constexpr int kZeroDegree = -1;

    explicit Polynomial(Variable var = Variable::q) : var_(var) {}
    Polynomial(std::vector<Rational> coefficients, Variable var = Variable::q);
    Polynomial(std::initializer_list<long> coefficients, Variable var = Variable::q);

    static Polynomial constant(const Rational& c, Variable var = Variable::q);
    static Polynomial monomial(int degree, const Rational& c = 1, Variable var = Variable::q);
    // 1 - q^d
    static Polynomial one_minus_power(int d, Variable var = Variable::q);
    // x - c
    static Polynomial linear_root(const Rational& root, Variable var = Variable::x);

    Variable variable() const { return var_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Zero outside [0, degree()].
    Rational coefficient(int d) const;
    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& leading() const;

    Rational evaluate(const Rational& at) const;

    Polynomial monic() const;
    // Multiply by var^shift.
    Polynomial shifted(int shift) const;
    // lcm of coefficient denominators times this; content is not removed.
    Polynomial cleared_denominators() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    void trim();
    Variable merged_variable(const Polynomial& o) const;

    Variable var_;
    std::vector<Rational> coeffs_;
};

// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Division that must leave no remainder; throws std::logic_error otherwise.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& p, unsigned e);

}  // namespace galilei::exact
