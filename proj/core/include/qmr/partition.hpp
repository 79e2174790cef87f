#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmr {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int weight() const;                 // sum of parts
    int height() const { return static_cast<int>(parts.size()); }
    int row(int i) const { return parts[static_cast<std::size_t>(i)]; }

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;      // e.g. "(3,1)"
};

/// All partitions of k with height <= max_height, in lexicographically
/// decreasing order: (4) > (3,1) > (2,2) > ...
std::vector<Partition> enumerate_partitions(int k, int max_height);

/// Number of standard Young tableaux of shape lambda (hook length formula).
std::int64_t hook_dimension(const Partition& lambda);

}  // namespace qmr
