#include <galilei/quiver/projective.hpp>

#include <stdexcept>

namespace galilei::quiver {

std::string Projective::to_string() const {
    std::string s = top.to_string();
    s[0] = 'P';
    return s;
}

Projective Projective::parse(const std::string& text) {
    std::string s = text;
    const size_t pos = s.find_first_not_of(" \t");
    if (pos == std::string::npos || s[pos] != 'P') throw std::invalid_argument("not a projective label: " + text);
    s[pos] = 'V';
    return {SimpleHC::parse(s)};
}

std::string to_string(const ProjectiveMultiset& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [p, mult] : m) {
        if (!out.empty()) out += " + ";
        out += p.to_string();
        if (mult != 1) out += "^" + std::to_string(mult);
    }
    return out;
}

ProjectiveMultiset decompose_Q(int k) {
    if (k < 0) throw std::invalid_argument("decompose_Q: k must be non-negative");
    ProjectiveMultiset out;
    if (k % 2 == 1) {
        for (int n = 1; n <= k; n += 2) out[{SimpleHC::V(n)}] = 1;
        return out;
    }
    out[{SimpleHC::prime(k % 4 == 0 ? 0 : 2)}] = 1;
    for (int n = 2; n <= k; n += 2) out[{SimpleHC::V(n)}] = 1;
    return out;
}

ProjectiveMultiset decompose_Q_from_g_types(int k) {
    if (k < 0) throw std::invalid_argument("decompose_Q: k must be non-negative");
    std::vector<SimpleHC> candidates{SimpleHC::prime(0), SimpleHC::prime(2)};
    for (int n = 1; n <= k; ++n) candidates.push_back(SimpleHC::V(n));
    ProjectiveMultiset out;
    for (const auto& v : candidates) {
        const auto types = sl2::g_types(v, k);
        auto it = types.find(k);
        if (it != types.end()) out[{v}] = it->second;
    }
    return out;
}

ProjectiveMultiset tensor_projective(int k, const Projective& p) {
    ProjectiveMultiset out;
    for (const auto& [w, mult] : sl2::hc_tensor(k, p.top)) out[{w}] = mult;
    return out;
}

}  // namespace galilei::quiver
