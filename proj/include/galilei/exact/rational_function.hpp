#pragma once

#include <galilei/exact/polynomial.hpp>

#include <string>

namespace galilei::exact {

/// Quotient of two polynomials in one variable, always kept canonical:
/// numerator and denominator are coprime and the denominator is monic.
/// Zero is 0/1. Two canonical forms are equal iff the functions are equal.
class RationalFunction {
public:
    explicit RationalFunction(Variable var = Variable::q);
    RationalFunction(const Polynomial& numerator);
    RationalFunction(const Polynomial& numerator, const Polynomial& denominator);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    Variable variable() const { return num_.is_constant() ? den_.variable() : num_.variable(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

enum class ArithOp { add, sub, mul, div };

// Dispatches to the operators above; div by the zero function throws
// std::domain_error.
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

// 1 / prod_i (1 - q^{d_i})
RationalFunction inverse_product_one_minus(std::initializer_list<int> degrees,
                                           Variable var = Variable::q);

}  // namespace galilei::exact
