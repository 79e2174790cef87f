#include "qmr/young.hpp"

#include <cmath>
#include <stdexcept>

#include "qmr/tableau.hpp"

namespace qmr {

Eigen::MatrixXd yor_generator(const Partition& lambda, int i) {
    const int k = lambda.weight();
    if (i < 1 || i > k - 1) throw std::invalid_argument("yor_generator: i out of range");
    const auto tabs = syt_enumerate(lambda);
    const int dim = static_cast<int>(tabs.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);

    // Index tableaux by their row sequence for partner lookup.
    std::map<std::vector<std::vector<int>>, int> index;
    for (int t = 0; t < dim; ++t) index[tabs[static_cast<std::size_t>(t)].rows] = t;

    for (int t = 0; t < dim; ++t) {
        const auto& T = tabs[static_cast<std::size_t>(t)];
        // axial distance from i to i+1
        const int r = T.content(i + 1) - T.content(i);
        m(t, t) = 1.0 / r;
        if (r == 1 || r == -1) continue;  // same row / same column: swap not standard
        auto swapped = T.rows;
        for (auto& row : swapped)
            for (auto& v : row) {
                if (v == i) v = i + 1;
                else if (v == i + 1) v = i;
            }
        auto it = index.find(swapped);
        if (it == index.end())
            throw std::logic_error("yor_generator: swapped tableau not standard despite |axial| > 1");
        m(t, it->second) = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
    }
    return m;
}

Eigen::MatrixXd rep_matrix(const Partition& lambda, const Permutation& sigma) {
    if (sigma.size() != lambda.weight())
        throw std::invalid_argument("rep_matrix: permutation size does not match partition weight");
    YorRep rep(lambda);
    return rep.matrix(sigma);
}

YorRep::YorRep(Partition lambda) : lambda_(std::move(lambda)) {
    dim_ = static_cast<int>(hook_dimension(lambda_));
    const int k = lambda_.weight();
    gens_.reserve(static_cast<std::size_t>(std::max(0, k - 1)));
    for (int i = 1; i <= k - 1; ++i) gens_.push_back(yor_generator(lambda_, i));
}

const Eigen::MatrixXd& YorRep::generator(int i) const {
    if (i < 1 || i > static_cast<int>(gens_.size()))
        throw std::invalid_argument("YorRep::generator: i out of range");
    return gens_[static_cast<std::size_t>(i - 1)];
}

Eigen::MatrixXd YorRep::matrix(const Permutation& sigma) const {
    if (sigma.size() != lambda_.weight())
        throw std::invalid_argument("YorRep::matrix: size mismatch");
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim_, dim_);
    // sigma = s_{w[last]} ... s_{w[0]}, so multiply factors left to right in
    // reverse word order.
    const auto word = sigma.adjacent_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        m = m * gens_[static_cast<std::size_t>(*it)];
    return m;
}

const Eigen::MatrixXd& YorRep::cached(const Permutation& sigma) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(sigma.images());
    if (it == cache_.end())
        it = cache_.emplace(sigma.images(), matrix(sigma)).first;
    return it->second;
}

}  // namespace qmr
