#include <galilei/exact/rational_function.hpp>

#include <stdexcept>

namespace galilei::exact {

RationalFunction::RationalFunction(Variable var)
    : num_(var), den_(Polynomial::constant(1, var)) {}

RationalFunction::RationalFunction(const Polynomial& numerator)
    : num_(numerator), den_(Polynomial::constant(1, numerator.variable())) {}

RationalFunction::RationalFunction(const Polynomial& numerator, const Polynomial& denominator)
    : num_(numerator), den_(denominator) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    const Variable var = variable();
    if (num_.is_zero()) {
        num_ = Polynomial(var);
        den_ = Polynomial::constant(1, var);
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

RationalFunction inverse_product_one_minus(std::initializer_list<int> degrees, Variable var) {
    Polynomial den = Polynomial::constant(1, var);
    for (int d : degrees) den *= Polynomial::one_minus_power(d, var);
    return RationalFunction(Polynomial::constant(1, var), den);
}

}  // namespace galilei::exact
