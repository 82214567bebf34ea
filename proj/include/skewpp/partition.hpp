#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace skewpp {

// An integer partition: a weakly decreasing list of positive parts.
// The default-constructed Partition is the empty partition (weight 0).
class Partition {
public:
    Partition() = default;

    // Validates weak decrease and positivity; throws MalformedPartition.
    explicit Partition(std::vector<int> parts);

    // Text form: comma-separated positive integers ("5,5,3,2"), spaces
    // tolerated, empty string for the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int rows() const noexcept { return static_cast<int>(parts_.size()); }

    // 1-based; rows beyond the last part read as 0.
    int part(int row) const noexcept;

    long long weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    Partition conjugate() const;

    std::string str() const;

    bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

// True iff `inner` fits componentwise inside `outer`.
bool contains(const Partition& inner, const Partition& outer) noexcept;

// All partitions of exactly `weight`, in lexicographically descending order.
std::vector<Partition> partitions_of(int weight);

// All partitions with 1 <= weight <= max_weight, ordered by weight and then
// lexicographically descending within a weight.  The empty partition is not
// included.
std::vector<Partition> enumerate_partitions(int max_weight);

} // namespace skewpp
