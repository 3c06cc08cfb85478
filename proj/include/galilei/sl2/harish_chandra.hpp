#pragma once

// Simple g-Harish-Chandra modules over sl2 ⋉ L(4) with a fixed radical
// central character (mu^2, mu^3), mu != 0. They are opaque labels.

#include <galilei/sl2/fin_dim.hpp>

#include <compare>
#include <map>
#include <string>

namespace galilei::sl2 {

class SimpleHC {
public:
    enum class Kind { prime0, prime2, standard };

    static SimpleHC prime(int index);  // V'(0) or V'(2)
    static SimpleHC V(int n);          // n >= 1

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ != Kind::standard; }
    // 0 or 2 for the primed modules, n for V(n).
    int index() const { return index_; }

    std::string to_string() const;
    // Accepts V'(0), V'(2), V(n), also Vp0 / Vp2 / Vn for shells that
    // mangle quotes.
    static SimpleHC parse(const std::string& text);

    friend auto operator<=>(const SimpleHC&, const SimpleHC&) = default;

private:
    SimpleHC(Kind kind, int index) : kind_(kind), index_(index) {}
    Kind kind_;
    int index_;
};

using HCMultiset = std::map<SimpleHC, long long>;

std::string to_string(const HCMultiset& m);
void add_into(HCMultiset& acc, const HCMultiset& m, long long times = 1);

// L(k) ⊗ s, following the printed case split.
HCMultiset hc_tensor(int k, SimpleHC s);

// Enright–Arkhipov image of the simple highest-weight module (lambda, mu).
HCMultiset enar_simple(int lambda);

// g-types of s with highest weight <= max_weight (all multiplicity one):
// V'(0): L(0), L(4), ...; V'(2): L(2), L(6), ...; V(n): L(n), L(n+2), ...
FinDimMultiset g_types(SimpleHC s, int max_weight);

}  // namespace galilei::sl2
