#include "qmr/tableau.hpp"

#include <stdexcept>

namespace qmr {

std::pair<int, int> StandardTableau::find(int v) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == v) return {static_cast<int>(i), static_cast<int>(j)};
    throw std::invalid_argument("StandardTableau::find: entry not present");
}

int StandardTableau::content(int v) const {
    auto [r, c] = find(v);
    return c - r;
}

bool StandardTableau::is_standard() const {
    const int k = shape.weight();
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    if (static_cast<int>(rows.size()) != shape.height()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != shape.row(static_cast<int>(i))) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int v = rows[i][j];
            if (v < 1 || v > k || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
            if (j > 0 && rows[i][j - 1] >= v) return false;
            if (i > 0 && rows[i - 1][j] >= v) return false;
        }
    }
    return true;
}

namespace {

void enumerate_rec(std::vector<std::vector<int>>& grid, const std::vector<int>& parts,
                   std::vector<int>& rowlen, int v, std::vector<StandardTableau>& out,
                   const Partition& shape) {
    if (v == 0) {
        out.push_back(StandardTableau{shape, grid});
        return;
    }
    // Cell of v must be a corner of the currently filled shape; top row first.
    for (std::size_t i = 0; i < rowlen.size(); ++i) {
        const int len = rowlen[i];
        if (len == 0) continue;
        const bool corner = (i + 1 == rowlen.size()) || (rowlen[i + 1] < len);
        if (!corner) continue;
        rowlen[i] = len - 1;
        grid[i][static_cast<std::size_t>(len - 1)] = v;
        enumerate_rec(grid, parts, rowlen, v - 1, out, shape);
        rowlen[i] = len;
    }
}

}  // namespace

std::vector<StandardTableau> syt_enumerate(const Partition& lambda) {
    std::vector<StandardTableau> out;
    if (lambda.height() == 0) return out;
    std::vector<std::vector<int>> grid;
    for (int i = 0; i < lambda.height(); ++i)
        grid.emplace_back(static_cast<std::size_t>(lambda.row(i)), 0);
    std::vector<int> rowlen = lambda.parts;
    enumerate_rec(grid, lambda.parts, rowlen, lambda.weight(), out, lambda);
    return out;
}

}  // namespace qmr
