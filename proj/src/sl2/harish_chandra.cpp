#include <galilei/sl2/harish_chandra.hpp>

#include <cstdlib>
#include <regex>
#include <stdexcept>

namespace galilei::sl2 {

SimpleHC SimpleHC::prime(int index) {
    if (index == 0) return SimpleHC(Kind::prime0, 0);
    if (index == 2) return SimpleHC(Kind::prime2, 2);
    throw std::invalid_argument("V' is only defined for 0 and 2");
}

SimpleHC SimpleHC::V(int n) {
    if (n < 1) throw std::invalid_argument("V(n) requires n >= 1");
    return SimpleHC(Kind::standard, n);
}

std::string SimpleHC::to_string() const {
    return (is_prime() ? "V'(" : "V(") + std::to_string(index_) + ")";
}

SimpleHC SimpleHC::parse(const std::string& text) {
    static const std::regex pattern(R"(\s*V\s*('|p)?\s*\(?\s*(\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("not a simple module label: " + text);
    const int index = std::stoi(m[2].str());
    return m[1].matched ? prime(index) : V(index);
}

std::string to_string(const HCMultiset& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [s, mult] : m) {
        if (!out.empty()) out += " + ";
        out += s.to_string();
        if (mult != 1) out += "^" + std::to_string(mult);
    }
    return out;
}

void add_into(HCMultiset& acc, const HCMultiset& m, long long times) {
    for (const auto& [s, mult] : m) {
        auto& slot = acc[s];
        slot += times * mult;
        if (slot == 0) acc.erase(s);
    }
}

namespace {

// V(from) + V(from+2) + ... + V(to), each with the given multiplicity.
void add_run(HCMultiset& m, int from, int to, long long mult = 1) {
    for (int n = from; n <= to; n += 2) m[SimpleHC::V(n)] += mult;
}

HCMultiset tensor_prime(int k, int index) {
    HCMultiset out;
    if (k % 2 == 1) {
        add_run(out, 1, k);
        return out;
    }
    // k = 0 mod 4 keeps the label, k = 2 mod 4 swaps V'(0) and V'(2).
    const int kept = k % 4 == 0 ? index : 2 - index;
    out[SimpleHC::prime(kept)] = 1;
    add_run(out, 2, k);
    return out;
}

HCMultiset tensor_standard(int k, int n) {
    HCMultiset out;
    if (k < n) {
        add_run(out, n - k, n + k);
    } else if (k == n) {
        out[SimpleHC::prime(0)] = 1;
        out[SimpleHC::prime(2)] = 1;
        add_run(out, 2, 2 * n);
    } else if ((k - n) % 2 == 1) {
        add_run(out, 1, k - n, 2);
        add_run(out, k - n + 2, k + n);
    } else {
        out[SimpleHC::prime(0)] = 1;
        out[SimpleHC::prime(2)] = 1;
        add_run(out, 2, k - n, 2);
        add_run(out, k - n + 2, k + n);
    }
    return out;
}

}  // namespace

HCMultiset hc_tensor(int k, SimpleHC s) {
    if (k < 0) throw std::invalid_argument("hc_tensor: k must be non-negative");
    return s.is_prime() ? tensor_prime(k, s.index()) : tensor_standard(k, s.index());
}

HCMultiset enar_simple(int lambda) {
    if (lambda == -2) return {{SimpleHC::prime(0), 1}, {SimpleHC::prime(2), 1}};
    return {{SimpleHC::V(std::abs(lambda + 2)), 1}};
}

FinDimMultiset g_types(SimpleHC s, int max_weight) {
    FinDimMultiset out;
    const int step = s.is_prime() ? 4 : 2;
    for (int l = s.index(); l <= max_weight; l += step) out[l] = 1;
    return out;
}

}  // namespace galilei::sl2
