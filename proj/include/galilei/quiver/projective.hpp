#pragma once

#include <galilei/quiver/quiver.hpp>

#include <compare>
#include <map>
#include <string>

namespace galilei::quiver {

// Indecomposable projective cover of a simple.
struct Projective {
    SimpleHC top;

    std::string to_string() const;  // P'(0), P(3), ...
    // Accepts P'(0), P(3), Pp2, P3.
    static Projective parse(const std::string& text);
    friend auto operator<=>(const Projective&, const Projective&) = default;
};

using ProjectiveMultiset = std::map<Projective, long long>;

std::string to_string(const ProjectiveMultiset& m);

// Q(k) = L(k) ⊗ Q(0) by the printed case split on k mod 4.
ProjectiveMultiset decompose_Q(int k);
// Same, via multiplicity of P_V = [V : L(k)] over the g-types of V.
ProjectiveMultiset decompose_Q_from_g_types(int k);

// L(k) ⊗ P_V: P_W with multiplicity [L(k) ⊗ V : W].
ProjectiveMultiset tensor_projective(int k, const Projective& p);

}  // namespace galilei::quiver
