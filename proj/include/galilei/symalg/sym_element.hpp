#pragma once

// Sym(L(k)) with sl2 acting by derivations.
//
// In the v-basis, e.v_{k-2i} = (k-i+1) v_{k-2i+2} and f.v_{k-2i} = (i+1) v_{k-2i-2}.
// The w-basis rescales v so that e moves each w up to the next with
// coefficient one: w_{k-2i} = s_i v_{k-2i} with s_k = 1, s_{i-1} = s_i (k-i+1).

#include <galilei/exact/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace galilei::symalg {

enum class Basis { v, w };
enum class Generator { e, f, h };

// Exponent of the basis vector of weight -k + 2j sits at position j.
using Exponents = std::vector<int>;

class SymElement {
public:
    SymElement(int k, Basis basis);

    static SymElement constant(int k, Basis basis, const Rational& c);
    // The basis vector of the given weight (v_weight or w_weight).
    static SymElement generator(int k, Basis basis, int weight);
    static SymElement monomial(int k, Basis basis, Exponents exponents, const Rational& c = 1);

    int ambient() const { return k_; }
    Basis basis() const { return basis_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;

    // Throw std::logic_error on a non-homogeneous element; zero counts as degree/weight 0.
    int degree() const;
    int weight() const;

    SymElement operator-() const;
    SymElement& operator+=(const SymElement& o);
    SymElement& operator-=(const SymElement& o);
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
    friend SymElement operator*(const SymElement& a, const SymElement& b);
    friend SymElement operator*(const Rational& c, SymElement a);
    friend bool operator==(const SymElement& a, const SymElement& b) {
        return a.k_ == b.k_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    // e.g. "v_0^2 - 3 v_-2 v_2 + 12 v_-4 v_4"
    std::string to_string() const;

private:
    void check_compatible(const SymElement& o) const;
    void add_term(const Exponents& e, const Rational& c);

    int k_;
    Basis basis_;
    std::map<Exponents, Rational> terms_;
};

int monomial_degree(const Exponents& e);
int monomial_weight(const Exponents& e);

// The derivation extending the adjoint action of g on L(k).
SymElement adjoint_action(Generator g, const SymElement& p);

// Action coefficient of e (or f) on the basis vector at position j, i.e. the
// scalar c with g.b_j = c b_{j+1} (resp. b_{j-1}).
Rational action_coefficient(int k, Basis basis, Generator g, int j);

// All monomials of the given degree in the k+1 basis vectors.
std::vector<Exponents> monomials_of_degree(int k, int degree);

}  // namespace galilei::symalg
