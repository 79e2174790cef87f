#include "qmr/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace qmr {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts.empty()) return Partition{};
    c.resize(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) c[static_cast<std::size_t>(j)]++;
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::vector<Partition> enumerate_partitions(int k, int max_height) {
    if (k <= 0 || max_height <= 0)
        throw std::invalid_argument("enumerate_partitions: k and max_height must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-lex order falls out of always trying the largest next part first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) == max_height) return;
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

std::int64_t hook_dimension(const Partition& lambda) {
    const auto conj = lambda.conjugate();
    const int k = lambda.weight();
    if (k > 20)
        throw std::invalid_argument("hook_dimension: weight too large for exact 64-bit evaluation");
    std::int64_t fact = 1;
    for (int t = 2; t <= k; ++t) fact *= t;
    std::int64_t hooks = 1;
    for (int i = 0; i < lambda.height(); ++i)
        for (int j = 0; j < lambda.row(i); ++j)
            hooks *= (lambda.row(i) - j) + (conj.row(j) - i) - 1;
    return fact / hooks;  // exact: the hook product divides k!
}

}  // namespace qmr
