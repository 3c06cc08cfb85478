#include <galilei/sl2/fin_dim.hpp>

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace galilei::sl2 {

std::string to_string(const FinDimMultiset& m) {
    if (m.empty()) return "0";
    std::string out;
    for (auto [k, mult] : m) {
        if (!out.empty()) out += " + ";
        out += "L(" + std::to_string(k) + ")";
        if (mult != 1) out += "^" + std::to_string(mult);
    }
    return out;
}

FinDimMultiset clebsch_gordan(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("clebsch_gordan: negative highest weight");
    FinDimMultiset out;
    for (int j = std::abs(m - n); j <= m + n; j += 2) out[j] = 1;
    return out;
}

WeightMultiplicities sym_power_weights(int k, int n) {
    if (k < 0 || n < 0) throw std::invalid_argument("sym_power_weights: k, n must be non-negative");
    // table[d][w + k*n]: multisets of size d with weight sum w, over the
    // basis vectors processed so far.
    const int offset = k * n;
    const size_t width = static_cast<size_t>(2 * offset + 1);
    std::vector<std::vector<long long>> table(static_cast<size_t>(n) + 1, std::vector<long long>(width, 0));
    table[0][static_cast<size_t>(offset)] = 1;
    for (int wt = k; wt >= -k; wt -= 2) {
        for (int d = 1; d <= n; ++d) {
            auto& row = table[static_cast<size_t>(d)];
            const auto& prev = table[static_cast<size_t>(d - 1)];
            for (int w = -offset; w <= offset; ++w) {
                const int from = w - wt;
                if (from < -offset || from > offset) continue;
                row[static_cast<size_t>(w + offset)] += prev[static_cast<size_t>(from + offset)];
            }
        }
    }
    WeightMultiplicities out;
    for (int w = -offset; w <= offset; ++w)
        if (auto c = table[static_cast<size_t>(n)][static_cast<size_t>(w + offset)]) out[w] = c;
    return out;
}

FinDimMultiset peel_highest_weights(WeightMultiplicities weights) {
    FinDimMultiset out;
    while (!weights.empty()) {
        auto top = weights.rbegin();
        const int hw = top->first;
        const long long mult = top->second;
        if (hw < 0 || mult < 0) throw std::invalid_argument("not a finite-dimensional character");
        out[hw] += mult;
        for (int w = hw; w >= -hw; w -= 2) {
            auto it = weights.find(w);
            if (it == weights.end() || it->second < mult) throw std::invalid_argument("not a finite-dimensional character");
            it->second -= mult;
            if (it->second == 0) weights.erase(it);
        }
    }
    return out;
}

FinDimMultiset sym_power_decompose(int k, int n) {
    const auto weights = sym_power_weights(k, n);
    FinDimMultiset out;
    for (auto [w, dim] : weights) {
        if (w < 0) continue;
        auto above = weights.find(w + 2);
        const long long mult = dim - (above == weights.end() ? 0 : above->second);
        if (mult < 0) throw std::logic_error("weight multiplicities not unimodal");
        if (mult > 0) out[w] = mult;
    }
    return out;
}

bool WeightCharacter::covers(int weight) const {
    return weight <= top && weight >= top - 2 * depth && (top - weight) % 2 == 0;
}

long long WeightCharacter::at(int weight) const {
    if (!covers(weight)) throw std::out_of_range("weight outside the complete window of the character");
    auto it = multiplicities.find(weight);
    return it == multiplicities.end() ? 0 : it->second;
}

long long verma_weight_dim(int k) {
    if (k < 0) throw std::invalid_argument("verma_weight_dim: k must be non-negative");
    const long long kk = k;
    return k % 2 == 0 ? (kk * kk + 4 * kk + 4) / 4 : (kk * kk + 4 * kk + 3) / 4;
}

WeightCharacter char_simple_hw(int lambda, int depth) {
    if (depth < 0) throw std::invalid_argument("char_simple_hw: depth must be non-negative");
    WeightCharacter ch{lambda, depth, {}};
    for (int j = 0; j <= depth; ++j) ch.multiplicities[lambda - 2 * j] = j + 1;
    return ch;
}

long long q0_multiplicity(int l) {
    if (l < 0) throw std::invalid_argument("q0_multiplicity: l must be non-negative");
    if (l % 4 == 0) return l / 4 + 1;
    if (l % 4 == 2) return (l - 2) / 4;
    return 0;
}

FinDimMultiset q00_degree_part(int k) {
    if (k < 0) throw std::invalid_argument("q00_degree_part: k must be non-negative");
    // Multiply by (1 - q^2)(1 - q^3) = 1 - q^2 - q^3 + q^5.
    static constexpr std::pair<int, int> kFactor[] = {{0, 1}, {2, -1}, {3, -1}, {5, 1}};
    std::map<int, long long> acc;
    for (auto [shift, sign] : kFactor) {
        if (k - shift < 0) continue;
        for (auto [l, mult] : sym_power_decompose(4, k - shift)) acc[l] += sign * mult;
    }
    FinDimMultiset out;
    for (auto [l, mult] : acc) {
        if (mult < 0) throw std::logic_error("negative multiplicity in Q(0,0)");
        if (mult > 0) out[l] = mult;
    }
    return out;
}

}  // namespace galilei::sl2
