#include <galilei/genfun/diophantine.hpp>

#include <algorithm>
#include <stdexcept>

namespace galilei::genfun {

DiophantineSolutionStream::DiophantineSolutionStream(int k, int l, int max_degree)
    : k_(k), l_(l), max_degree_(max_degree), tuple_(static_cast<size_t>(k) + 1, 0) {
    if (k < 0 || max_degree < 0) throw std::invalid_argument("k and N must be non-negative");
}

bool DiophantineSolutionStream::advance_middle() {
    for (int i = k_ - 1; i >= 1; --i) {
        auto& a = tuple_[static_cast<size_t>(i)];
        const int w = k_ - 2 * i;
        ++a;
        ++middle_degree_;
        middle_weight_ += w;
        if (middle_degree_ <= max_degree_) return true;
        middle_degree_ -= a;
        middle_weight_ -= w * a;
        a = 0;
    }
    return false;
}

bool DiophantineSolutionStream::settle_outer() {
    const int rem = l_ - middle_weight_;
    if (rem % k_ != 0) return false;
    const int t = rem / k_;
    const int last = std::max(0, -t);
    const int first = t + last;
    if (middle_degree_ + first + last > max_degree_) return false;
    tuple_.front() = first;
    tuple_.back() = last;
    return true;
}

std::optional<std::span<const int>> DiophantineSolutionStream::next() {
    if (exhausted_) return std::nullopt;

    if (k_ == 0) {
        // L(0) has the single weight 0.
        if (l_ != 0) {
            exhausted_ = true;
            return std::nullopt;
        }
        if (started_) ++tuple_[0];
        started_ = true;
        if (tuple_[0] > max_degree_) {
            exhausted_ = true;
            return std::nullopt;
        }
        return std::span<const int>(tuple_);
    }

    if (started_) {
        // Same middle part, one more copy of v_k * v_{-k}.
        if (middle_degree_ + tuple_.front() + tuple_.back() + 2 <= max_degree_) {
            ++tuple_.front();
            ++tuple_.back();
            return std::span<const int>(tuple_);
        }
        if (!advance_middle()) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    while (!settle_outer()) {
        if (!advance_middle()) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
    return std::span<const int>(tuple_);
}

}  // namespace galilei::genfun
