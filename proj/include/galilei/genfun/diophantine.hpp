#pragma once

#include <optional>
#include <span>
#include <vector>

namespace galilei::genfun {

/// Streams every tuple (a_0, ..., a_k) of non-negative integers with
///
///     k*a_0 + (k-2)*a_1 + ... + (-k)*a_k == l   and   a_0 + ... + a_k <= N,
///
/// i.e. the exponent vectors of the weight-l monomials of degree <= N in
/// Sym(L(k)). Only the middle exponents a_1..a_{k-1} are walked by an odometer
/// pruned on partial degree; the outer pair is then forced up to the free
/// choice of a_k, since k*(a_0 - a_k) must absorb the remaining weight.
class DiophantineSolutionStream {
public:
    DiophantineSolutionStream(int k, int l, int max_degree);

    // The next solution, or nullopt once exhausted. The span stays valid
    // until the following call.
    std::optional<std::span<const int>> next();

    int k() const { return k_; }
    int l() const { return l_; }
    int max_degree() const { return max_degree_; }

private:
    bool advance_middle();
    bool settle_outer();

    int k_;
    int l_;
    int max_degree_;
    std::vector<int> tuple_;
    int middle_degree_ = 0;
    int middle_weight_ = 0;
    bool started_ = false;
    bool exhausted_ = false;
};

}  // namespace galilei::genfun
