#pragma once

#include <compare>
#include <string>
#include <vector>

namespace galilei::young {

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // (1^k)
    static Partition column(int k);
    // Accepts "(3,2,1^2)", "3,2,1,1", "()" and "∅".
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int count(int part) const;

    // Partial sums of this are >= those of other (same size required).
    bool dominates(const Partition& other) const;

    // Exponential notation, e.g. "(3,2^2,1)"; the empty partition is "∅".
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Partitions of n with largest part <= max_part, in decreasing
// lexicographic order of their part lists: (4), (3,1), (2,2), ...
std::vector<Partition> partitions_bounded(int n, int max_part = 4);

// Number of partitions of n into parts <= max_part, by the usual
// coin-change recurrence (independent of the enumeration above).
long long count_partitions_bounded(int n, int max_part);

}  // namespace galilei::young
