#pragma once

// The subgraph of the Young lattice on partitions with largest part <= 4.
// Adding a node in the first column of lambda is labelled x - c, c the number
// of parts of lambda; adding one in column m > 1 is labelled by the number of
// parts of lambda equal to m - 1.

#include <galilei/exact/matrix.hpp>
#include <galilei/exact/polynomial.hpp>
#include <galilei/young/partition.hpp>

#include <optional>
#include <vector>

namespace galilei::young {

using exact::Matrix;
using exact::Polynomial;

inline constexpr int kMaxPart = 4;

struct LabeledEdge {
    Partition source;
    Partition target;
    Polynomial label;  // in x
};

std::vector<LabeledEdge> edges_from(const Partition& p);

// Label of the edge from -> to, if there is one.
std::optional<Polynomial> edge_label(const Partition& from, const Partition& to);

struct PathMatrix {
    std::vector<Partition> rows;     // (1), (1^2), ..., (1^n)
    std::vector<Partition> columns;  // partitions_bounded(n)
    Matrix<Polynomial> entries;
};

// Entry (1^k), lambda = sum over paths (1^k) -> lambda of the product of labels.
PathMatrix path_matrix(int n);

// Rank of M_n after substituting x = at.
size_t rank_at_value(const PathMatrix& m, const Rational& at);
// Rank of M_n at x = n.
size_t rank_at(int n);

}  // namespace galilei::young
