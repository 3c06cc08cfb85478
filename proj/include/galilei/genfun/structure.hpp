#pragma once

#include <galilei/exact/series.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace galilei::genfun {

// Hilbert series shape prod_i 1/(1 - q^{d_i}), optionally times (1 - q^e).
struct InvariantStructure {
    std::vector<int> generator_degrees;
    std::optional<int> relation_degree;

    bool is_polynomial_algebra() const { return !relation_degree.has_value(); }
};

struct StructureNotRecognized : std::runtime_error {
    StructureNotRecognized() : std::runtime_error("structure not recognized") {}
};

// Greedy: while the lowest non-constant coefficient is positive at degree d,
// record d and multiply by (1 - q^d). The residual must then be 1 or 1 - q^e
// through the truncation degree, otherwise StructureNotRecognized.
InvariantStructure detect_structure(const exact::TruncatedSeries& series);

InvariantStructure detect_invariant_structure(int k, int N);

// prod_i 1/(1 - q^{d_i}) * (1 - q^e) expanded to degree N.
exact::TruncatedSeries structure_series(const InvariantStructure& s, int N);

}  // namespace galilei::genfun
