#include <galilei/symalg/sym_element.hpp>

#include <numeric>
#include <stdexcept>

namespace galilei::symalg {

namespace {

// s_j with w_j = s_j v_j, position j carrying weight -k + 2j.
Rational w_scalar(int j) {
    Integer s = 1;
    for (int t = 2; t <= j; ++t) s *= t;
    return Rational(s);
}

}  // namespace

SymElement::SymElement(int k, Basis basis) : k_(k), basis_(basis) {
    if (k < 0) throw std::invalid_argument("SymElement: negative highest weight");
}

SymElement SymElement::constant(int k, Basis basis, const Rational& c) {
    SymElement p(k, basis);
    p.add_term(Exponents(static_cast<size_t>(k) + 1, 0), c);
    return p;
}

SymElement SymElement::generator(int k, Basis basis, int weight) {
    if (weight > k || weight < -k || (k - weight) % 2 != 0)
        throw std::invalid_argument("no basis vector of weight " + std::to_string(weight));
    Exponents e(static_cast<size_t>(k) + 1, 0);
    e[static_cast<size_t>((weight + k) / 2)] = 1;
    return monomial(k, basis, std::move(e));
}

SymElement SymElement::monomial(int k, Basis basis, Exponents exponents, const Rational& c) {
    if (exponents.size() != static_cast<size_t>(k) + 1) throw std::invalid_argument("exponent vector of wrong length");
    SymElement p(k, basis);
    p.add_term(exponents, c);
    return p;
}

Rational SymElement::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int monomial_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

int monomial_weight(const Exponents& e) {
    const int k = static_cast<int>(e.size()) - 1;
    int w = 0;
    for (int j = 0; j <= k; ++j) w += e[static_cast<size_t>(j)] * (-k + 2 * j);
    return w;
}

int SymElement::degree() const {
    if (terms_.empty()) return 0;
    const int d = monomial_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) != d) throw std::logic_error("element is not homogeneous in degree");
    return d;
}

int SymElement::weight() const {
    if (terms_.empty()) return 0;
    const int w = monomial_weight(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (monomial_weight(e) != w) throw std::logic_error("element is not a weight vector");
    return w;
}

void SymElement::check_compatible(const SymElement& o) const {
    if (k_ != o.k_ || basis_ != o.basis_) throw std::invalid_argument("SymElements over different bases");
}

void SymElement::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

SymElement SymElement::operator-() const {
    SymElement out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

SymElement& SymElement::operator+=(const SymElement& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymElement operator*(const SymElement& a, const SymElement& b) {
    a.check_compatible(b);
    SymElement out(a.k_, a.basis_);
    Exponents e(a.k_ + 1);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SymElement operator*(const Rational& c, SymElement a) {
    if (c == 0) return SymElement(a.k_, a.basis_);
    for (auto& [e, coeff] : a.terms_) coeff *= c;
    return a;
}

std::string SymElement::to_string() const {
    if (terms_.empty()) return "0";
    const char letter = basis_ == Basis::v ? 'v' : 'w';
    std::string out;
    // Highest power of the middle vector first reads most naturally for the
    // invariants; reverse map order gives that.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (int j = 0; j <= k_; ++j) {
            const int a = e[static_cast<size_t>(j)];
            if (a == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += std::string(1, letter) + "_" + std::to_string(-k_ + 2 * j);
            if (a > 1) mono += "^" + std::to_string(a);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + " ";
            out += mono;
        }
    }
    return out;
}

Rational action_coefficient(int k, Basis basis, Generator g, int j) {
    if (g == Generator::h) return Rational(-k + 2 * j);
    if (g == Generator::e) {
        if (j >= k) return 0;
        const Rational v_coeff = j + 1;
        return basis == Basis::v ? v_coeff : w_scalar(j) * v_coeff / w_scalar(j + 1);
    }
    if (j <= 0) return 0;
    const Rational v_coeff = k - j + 1;
    return basis == Basis::v ? v_coeff : w_scalar(j) * v_coeff / w_scalar(j - 1);
}

SymElement adjoint_action(Generator g, const SymElement& p) {
    const int k = p.ambient();
    SymElement out(k, p.basis());
    if (g == Generator::h) {
        for (const auto& [e, c] : p.terms()) out += SymElement::monomial(k, p.basis(), e, c * monomial_weight(e));
        return out;
    }
    const int step = g == Generator::e ? 1 : -1;
    std::vector<Rational> coeff(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) coeff[static_cast<size_t>(j)] = action_coefficient(k, p.basis(), g, j);
    for (const auto& [e, c] : p.terms()) {
        for (int j = 0; j <= k; ++j) {
            const int a = e[static_cast<size_t>(j)];
            const Rational& cj = coeff[static_cast<size_t>(j)];
            if (a == 0 || cj == 0) continue;
            Exponents moved = e;
            --moved[static_cast<size_t>(j)];
            ++moved[static_cast<size_t>(j + step)];
            out += SymElement::monomial(k, p.basis(), std::move(moved), c * a * cj);
        }
    }
    return out;
}

std::vector<Exponents> monomials_of_degree(int k, int degree) {
    std::vector<Exponents> out;
    Exponents e(static_cast<size_t>(k) + 1, 0);
    // Compositions of degree into k+1 parts, generated recursively.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == k) {
            e[static_cast<size_t>(pos)] = left;
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[static_cast<size_t>(pos)] = a;
            self(self, pos + 1, left - a);
        }
    };
    rec(rec, 0, degree);
    return out;
}

}  // namespace galilei::symalg
