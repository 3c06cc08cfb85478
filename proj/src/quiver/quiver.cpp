#include <galilei/quiver/quiver.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace galilei::quiver {

int block_of(SimpleHC s) {
    if (s.is_prime()) return 3;
    const int n = s.index();
    if (n % 2 == 1) return 1;
    return n % 4 == 2 ? 2 : 3;
}

int ext_dim(SimpleHC s, SimpleHC t) {
    if (block_of(s) != block_of(t)) return 0;
    if (s.is_prime() && t.is_prime()) return 0;
    if (s.is_prime() || t.is_prime()) {
        const SimpleHC other = s.is_prime() ? t : s;
        return other.index() == 4 ? 1 : 0;
    }
    const int m = s.index(), n = t.index();
    if (std::abs(m - n) == 4) return 1;
    if (block_of(s) == 1 && std::min(m, n) == 1 && std::max(m, n) == 3) return 1;
    if (m == 2 && n == 2) return 1;
    return 0;
}

std::vector<size_t> QuiverPresentation::arrows_from(SimpleHC v) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].source == v) out.push_back(i);
    return out;
}

namespace {

std::string pair_text(const QuiverPresentation& q, ArrowPair p) {
    const Arrow& first = q.arrows[p.first];
    const Arrow& second = q.arrows[p.second];
    if (first.name.size() == 1 && second.name.size() == 1) return second.name + first.name;
    if (first.source == first.target && second.source == second.target) return "loop^2";
    return first.source.to_string() + "->" + first.target.to_string() + "->" + second.target.to_string();
}

}  // namespace

std::vector<std::string> QuiverPresentation::relation_strings() const {
    std::vector<std::string> out;
    for (auto p : zero_relations) out.push_back(pair_text(*this, p) + " = 0");
    for (auto& [lhs, rhs] : rewrites) out.push_back(pair_text(*this, lhs) + " = " + pair_text(*this, rhs));
    return out;
}

QuiverPresentation presentation(int block, int max_index) {
    if (block < 1 || block > 3) throw std::invalid_argument("blocks are numbered 1, 2, 3");
    QuiverPresentation q;
    q.block = block;
    q.max_index = max_index;

    auto add_arrow = [&](std::string name, SimpleHC s, SimpleHC t) {
        q.arrows.push_back({std::move(name), s, t});
        return q.arrows.size() - 1;
    };
    auto add_pair = [&](SimpleHC s, SimpleHC t) {
        add_arrow(s.to_string() + "->" + t.to_string(), s, t);
        add_arrow(t.to_string() + "->" + s.to_string(), t, s);
    };

    if (block == 1) {
        for (int n = 1; n <= max_index; n += 2) q.vertices.push_back(SimpleHC::V(n));
        if (max_index >= 3) add_pair(SimpleHC::V(1), SimpleHC::V(3));
        for (int n = 1; n + 4 <= max_index; n += 2) add_pair(SimpleHC::V(n), SimpleHC::V(n + 4));
    } else if (block == 2) {
        for (int n = 2; n <= max_index; n += 4) q.vertices.push_back(SimpleHC::V(n));
        if (max_index >= 2) {
            const size_t loop = add_arrow("loop", SimpleHC::V(2), SimpleHC::V(2));
            q.zero_relations.push_back({loop, loop});
        }
        for (int n = 2; n + 4 <= max_index; n += 4) add_pair(SimpleHC::V(n), SimpleHC::V(n + 4));
    } else {
        const SimpleHC p0 = SimpleHC::prime(0), p2 = SimpleHC::prime(2);
        q.vertices = {p0, p2};
        for (int n = 4; n <= max_index; n += 4) q.vertices.push_back(SimpleHC::V(n));
        if (max_index >= 4) {
            const SimpleHC v4 = SimpleHC::V(4);
            const size_t a = add_arrow("a", p0, v4);
            const size_t b = add_arrow("b", v4, p0);
            const size_t c = add_arrow("c", p2, v4);
            const size_t d = add_arrow("d", v4, p2);
            // Path order: first arrow, then second. "ba" = 0 means a then b.
            q.zero_relations.push_back({a, b});
            q.zero_relations.push_back({c, d});
            q.zero_relations.push_back({a, d});
            q.zero_relations.push_back({c, b});
            q.rewrites.push_back({{d, c}, {b, a}});
        }
        for (int n = 4; n + 4 <= max_index; n += 4) add_pair(SimpleHC::V(n), SimpleHC::V(n + 4));
    }

    // Every remaining 2-cycle between distinct vertices is zero.
    for (size_t i = 0; i < q.arrows.size(); ++i) {
        for (size_t j = 0; j < q.arrows.size(); ++j) {
            const Arrow& x = q.arrows[i];
            const Arrow& y = q.arrows[j];
            if (x.source == x.target || x.target != y.source || y.target != x.source) continue;
            if (x.name.size() == 1 && y.name.size() == 1) continue;  // the named diamond, handled above
            q.zero_relations.push_back({i, j});
        }
    }
    return q;
}

RadicalFiltration radical_filtration(SimpleHC top, int depth) {
    return radical_filtration(top, depth, top.index() + 4 * (depth + 2));
}

RadicalFiltration radical_filtration(SimpleHC top, int depth, int max_index) {
    if (depth < 0) throw std::invalid_argument("radical_filtration: depth must be non-negative");
    const QuiverPresentation q = presentation(block_of(top), max_index);
    const std::set<ArrowPair> zero(q.zero_relations.begin(), q.zero_relations.end());
    std::map<ArrowPair, ArrowPair> rewrite(q.rewrites.begin(), q.rewrites.end());

    std::map<SimpleHC, std::vector<size_t>> out_arrows;
    for (size_t i = 0; i < q.arrows.size(); ++i) out_arrows[q.arrows[i].source].push_back(i);

    RadicalFiltration f{top, depth, {}};
    f.layers.push_back({{top, 1}});

    // Normal-form paths of the current length; the empty path is the top idempotent.
    std::set<std::vector<size_t>> paths{{}};
    for (int len = 1; len <= depth; ++len) {
        std::set<std::vector<size_t>> next;
        for (const auto& p : paths) {
            const SimpleHC end = p.empty() ? top : q.arrows[p.back()].target;
            for (size_t arrow : out_arrows[end]) {
                std::vector<size_t> longer = p;
                longer.push_back(arrow);
                const size_t n = longer.size();
                bool rewritten = false;
                if (n >= 2) {
                    auto it = rewrite.find({longer[n - 2], longer[n - 1]});
                    if (it != rewrite.end()) {
                        longer[n - 2] = it->second.first;
                        longer[n - 1] = it->second.second;
                        rewritten = true;
                    }
                    if (zero.count({longer[n - 2], longer[n - 1]})) continue;
                }
                if (rewritten && n >= 3 && zero.count({longer[n - 3], longer[n - 2]})) continue;
                next.insert(std::move(longer));
            }
        }
        paths = std::move(next);
        HCMultiset layer;
        for (const auto& p : paths) ++layer[q.arrows[p.back()].target];
        f.layers.push_back(std::move(layer));
    }
    return f;
}

std::string to_string(const RadicalFiltration& f) {
    std::string out;
    for (const auto& layer : f.layers) {
        if (!out.empty()) out += " / ";
        out += layer.size() == 1 && layer.begin()->second == 1 ? sl2::to_string(layer) : "{" + sl2::to_string(layer) + "}";
    }
    return out;
}

}  // namespace galilei::quiver
