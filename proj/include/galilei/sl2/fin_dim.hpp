#pragma once

// Finite-dimensional sl2 combinatorics. L(k) is the simple module of highest
// weight k with weights k, k-2, ..., -k.

#include <map>
#include <string>

namespace galilei::sl2 {

struct SimpleFinDim {
    int k = 0;
    int dimension() const { return k + 1; }
    friend auto operator<=>(const SimpleFinDim&, const SimpleFinDim&) = default;
};

// Highest weight -> multiplicity. Zero multiplicities are never stored.
using FinDimMultiset = std::map<int, long long>;
// Weight -> dimension of the weight space.
using WeightMultiplicities = std::map<int, long long>;

std::string to_string(const FinDimMultiset& m);

FinDimMultiset clebsch_gordan(int m, int n);

// Weights of Sym^n(L(k)), by counting multisets of basis weights.
WeightMultiplicities sym_power_weights(int k, int n);

// Splits a finite-dimensional character into simples, top weight first.
// Throws std::invalid_argument if the character is not one.
FinDimMultiset peel_highest_weights(WeightMultiplicities weights);

FinDimMultiset sym_power_decompose(int k, int n);

// Character truncated below the top: weights top, top-2, ..., top-2*depth
// are exact; anything deeper is unknown rather than zero.
struct WeightCharacter {
    int top = 0;
    int depth = 0;
    std::map<int, long long> multiplicities;

    bool covers(int weight) const;
    // Throws std::out_of_range outside the complete window.
    long long at(int weight) const;
};

// dim of the (top - 2k)-weight space of a Verma module over sl2 ⋉ L(4),
// spanned by PBW monomials in f, v_{-2}, v_{-4}.
long long verma_weight_dim(int k);

// Simple highest-weight module with nonzero v_0-eigenvalue: a sum of sl2
// Verma characters with tops lambda, lambda-2, lambda-4, ...
WeightCharacter char_simple_hw(int lambda, int depth);

long long q0_multiplicity(int l);

// Degree-k part of Q(0,0) over Sym(L(4)) modulo (C2, C3): the coefficient of
// q^k in (F_l - F_{l+2})(1 - q^2)(1 - q^3), for every l.
FinDimMultiset q00_degree_part(int k);

}  // namespace galilei::sl2
