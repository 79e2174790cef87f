#include "qmr/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace qmr {

namespace {

// Border-strip recursion on the beta-set (first-column hook lengths):
// B = {lambda_j + L - j}. Removing a strip of size r moves some b to b - r
// (allowed when b - r >= 0 and not already in B); the strip height parity is
// the number of beta numbers passed over.
std::int64_t mn_rec(std::vector<int> beta, const std::vector<int>& parts, std::size_t pi,
                    std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
    if (pi == parts.size()) return 1;
    auto key = std::make_pair(beta, pi);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int r = parts[pi];
    std::int64_t total = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        const int target = beta[j] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int crossed = 0;  // beta numbers strictly between target and beta[j]
        for (int b : beta)
            if (b > target && b < beta[j]) ++crossed;
        std::vector<int> next = beta;
        next[j] = target;
        std::sort(next.begin(), next.end());
        const std::int64_t sub = mn_rec(std::move(next), parts, pi + 1, memo);
        total += (crossed % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::int64_t character_mn(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.weight() != cycle_type.weight())
        throw std::invalid_argument("character_mn: weight mismatch");
    const int height = std::max(lambda.height(), 1);
    std::vector<int> beta;
    for (int j = 0; j < height; ++j) {
        const int part = j < lambda.height() ? lambda.row(j) : 0;
        beta.push_back(part + (height - 1 - j));
    }
    std::sort(beta.begin(), beta.end());
    // Long strips first shrinks the recursion tree; characters are
    // independent of the removal order.
    std::vector<int> parts = cycle_type.parts;  // already weakly decreasing
    std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
    return mn_rec(std::move(beta), parts, 0, memo);
}

}  // namespace qmr
