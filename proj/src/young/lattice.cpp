#include <galilei/young/lattice.hpp>

#include <map>
#include <stdexcept>

namespace galilei::young {

using exact::Variable;

std::vector<LabeledEdge> edges_from(const Partition& p) {
    std::vector<LabeledEdge> out;
    const auto& parts = p.parts();
    for (size_t r = 0; r < parts.size(); ++r) {
        if (parts[r] + 1 > kMaxPart) continue;
        if (r > 0 && parts[r - 1] == parts[r]) continue;
        std::vector<int> grown = parts;
        ++grown[r];
        // Column m = parts[r] + 1 > 1.
        out.push_back({p, Partition(std::move(grown)), Polynomial::constant(p.count(parts[r]), Variable::x)});
    }
    std::vector<int> grown = parts;
    grown.push_back(1);
    out.push_back({p, Partition(std::move(grown)), Polynomial::linear_root(p.length(), Variable::x)});
    return out;
}

std::optional<Polynomial> edge_label(const Partition& from, const Partition& to) {
    if (to.size() != from.size() + 1) return std::nullopt;
    for (auto& e : edges_from(from))
        if (e.target == to) return e.label;
    return std::nullopt;
}

PathMatrix path_matrix(int n) {
    if (n < 1) throw std::invalid_argument("path_matrix requires n >= 1");
    PathMatrix m;
    m.columns = partitions_bounded(n, kMaxPart);
    std::map<Partition, size_t> column_of;
    for (size_t c = 0; c < m.columns.size(); ++c) column_of[m.columns[c]] = c;
    m.entries = Matrix<Polynomial>(static_cast<size_t>(n), m.columns.size(), Polynomial(Variable::x));

    for (int k = 1; k <= n; ++k) {
        m.rows.push_back(Partition::column(k));
        // Path weights from (1^k) to every partition of the current level.
        std::map<Partition, Polynomial> level{{Partition::column(k), Polynomial::constant(1, Variable::x)}};
        for (int size = k; size < n; ++size) {
            std::map<Partition, Polynomial> next;
            for (const auto& [p, weight] : level) {
                for (auto& e : edges_from(p)) {
                    auto [it, inserted] = next.try_emplace(e.target, Variable::x);
                    it->second += weight * e.label;
                }
            }
            level = std::move(next);
        }
        for (auto& [p, weight] : level)
            if (!weight.is_zero()) m.entries(static_cast<size_t>(k - 1), column_of.at(p)) = weight;
    }
    return m;
}

size_t rank_at_value(const PathMatrix& m, const Rational& at) {
    return exact::rational_rank(exact::evaluate(m.entries, at));
}

size_t rank_at(int n) { return rank_at_value(path_matrix(n), Rational(n)); }

}  // namespace galilei::young
