#include <galilei/young/psi.hpp>

#include <algorithm>
#include <stdexcept>

namespace galilei::young {

using exact::Variable;

Partition special_partition(int n) {
    if (n < 2) throw std::invalid_argument("psi requires n >= 2");
    if (n % 2 == 0) return Partition(std::vector<int>(static_cast<size_t>(n / 2), 2));
    std::vector<int> parts{3};
    parts.insert(parts.end(), static_cast<size_t>((n - 3) / 2), 2);
    return Partition(std::move(parts));
}

std::map<Partition, Partition> build_psi(int n) {
    const Partition special = special_partition(n);
    const Partition last = Partition::column(n - 1);
    std::map<Partition, Partition> psi;
    for (const auto& mu : partitions_bounded(n - 1, kMaxPart)) {
        if (mu == last) {
            psi.emplace(mu, special);
            continue;
        }
        std::vector<int> parts = mu.parts();
        parts.push_back(1);
        psi.emplace(mu, Partition(std::move(parts)));
    }
    return psi;
}

std::vector<Partition> dominance_extension(std::vector<Partition> items, const Partition* special) {
    std::vector<Partition> out;
    std::vector<bool> placed(items.size(), false);
    for (size_t step = 0; step < items.size(); ++step) {
        std::optional<size_t> best;
        for (size_t i = 0; i < items.size(); ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (size_t j = 0; j < items.size() && ready; ++j)
                if (!placed[j] && j != i && items[i].dominates(items[j])) ready = false;
            if (!ready) continue;
            if (!best) {
                best = i;
                continue;
            }
            const bool i_special = special && items[i] == *special;
            const bool best_special = special && items[*best] == *special;
            if (i_special || (!best_special && items[i].parts() < items[*best].parts())) best = i;
        }
        if (!best) throw std::logic_error("dominance order has a cycle");
        placed[*best] = true;
        out.push_back(items[*best]);
    }
    return out;
}

NMatrix build_Nn(int n) {
    NMatrix m;
    m.n = n;
    m.special = special_partition(n);
    const auto psi = build_psi(n);
    std::vector<Partition> images;
    for (const auto& [mu, image] : psi) images.push_back(image);
    m.rows = dominance_extension(std::move(images), &m.special);
    m.columns = dominance_extension(partitions_bounded(n - 1, kMaxPart));
    m.entries = Matrix<Polynomial>(m.rows.size(), m.columns.size(), Polynomial(Variable::x));
    for (size_t r = 0; r < m.rows.size(); ++r)
        for (size_t c = 0; c < m.columns.size(); ++c)
            if (auto label = edge_label(m.columns[c], m.rows[r])) m.entries(r, c) = *label;
    return m;
}

Matrix<Polynomial> special_block(const NMatrix& m) {
    size_t size = 0;
    while (size < m.rows.size() && m.special.dominates(m.rows[size])) ++size;
    Matrix<Polynomial> block(size, size, Polynomial(Variable::x));
    for (size_t r = 0; r < size; ++r)
        for (size_t c = 0; c < size; ++c) block(r, c) = m.entries(r, c);
    return block;
}

DetFactorization factor_integer_roots(const Polynomial& p, int n) {
    DetFactorization f;
    f.determinant = p;
    if (p.is_zero()) return f;
    f.integer_factor = p.leading();
    f.integer_factor_nonzero = is_integer(f.integer_factor) && f.integer_factor != 0;

    // If p splits over Z, every root r satisfies r^2 <= sum of squared roots
    // = e1^2 - 2 e2, read off the top three coefficients.
    const int d = p.degree();
    long bound = 0;
    if (d >= 1) {
        const Rational e1 = -p.coefficient(d - 1) / p.leading();
        const Rational e2 = d >= 2 ? p.coefficient(d - 2) / p.leading() : Rational(0);
        Rational squares = e1 * e1 - 2 * e2;
        if (squares < 0) squares = -squares;
        const Integer ceil_sq = (squares.get_num() + squares.get_den() - 1) / squares.get_den();
        bound = Integer(sqrt(ceil_sq) + 1).get_si();
    }

    Polynomial rest = p;
    for (long r = -bound; r <= bound && rest.degree() > 0; ++r) {
        const Polynomial factor = Polynomial::linear_root(Rational(r), Variable::x);
        for (;;) {
            auto [quot, rem] = exact::divmod(rest, factor);
            if (!rem.is_zero()) break;
            rest = quot;
            f.roots.push_back(static_cast<int>(r));
        }
    }
    f.splits = rest.degree() == 0;
    f.roots_below_n = f.splits && std::all_of(f.roots.begin(), f.roots.end(), [n](int r) { return r < n; });
    f.nonzero_at_n = p.evaluate(Rational(n)) != 0;
    return f;
}

DetFactorization verify_det_factorization(int n) {
    const NMatrix m = build_Nn(n);
    return factor_integer_roots(exact::bareiss_determinant(m.entries), n);
}

}  // namespace galilei::young
