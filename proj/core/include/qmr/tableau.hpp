#pragma once

#include <vector>

#include "qmr/partition.hpp"

namespace qmr {

/// Standard Young tableau: rows/columns strictly increasing, entries 1..k.
struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // rows[i][j], entries 1-based

    /// (row, col) of entry v (1-based entry, 0-based coordinates).
    std::pair<int, int> find(int v) const;
    /// content = col - row of entry v.
    int content(int v) const;
    bool is_standard() const;

    bool operator==(const StandardTableau&) const = default;
};

/// All standard tableaux of shape lambda in last-letter order: tableaux are
/// grouped by the cell of the largest entry k (corners visited from the top
/// row down), recursively within each group. This fixed basis order is used
/// by Young's orthogonal representation throughout the library.
std::vector<StandardTableau> syt_enumerate(const Partition& lambda);

}  // namespace qmr
