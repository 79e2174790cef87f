#include "qmr/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qmr {

Permutation Permutation::identity(int k) {
    if (k < 1) throw std::invalid_argument("Permutation::identity: k must be >= 1");
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(k));
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation::from_images: not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycle(int k, const std::vector<int>& cycle) {
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size())
        throw std::invalid_argument("Permutation::from_cycle: repeated entry");
    Permutation p = identity(k);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i];
        int b = cycle[(i + 1) % cycle.size()];
        if (a < 0 || a >= k) throw std::invalid_argument("Permutation::from_cycle: entry out of range");
        p.images_[static_cast<std::size_t>(a)] = b;
    }
    return from_images(std::move(p.images_));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> out(images_.size());
    for (int i = 0; i < size(); ++i)
        out[static_cast<std::size_t>(i)] = images_[static_cast<std::size_t>(rhs(i))];
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

Permutation Permutation::conjugate_by(const Permutation& pi) const {
    return pi * (*this) * pi.inverse();
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> c;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            c.push_back(j);
            j = images_[static_cast<std::size_t>(j)];
        }
        out.push_back(std::move(c));
    }
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

int Permutation::cycle_count() const {
    return static_cast<int>(cycles().size());
}

std::vector<int> Permutation::adjacent_word() const {
    // Sort the one-line form with adjacent swaps; v o s_{w0} o ... o s_{wL} = id,
    // hence this = s_{wL} o ... o s_{w0}.
    std::vector<int> v = images_;
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 0; j + 1 < size(); ++j) {
            if (v[static_cast<std::size_t>(j)] > v[static_cast<std::size_t>(j + 1)]) {
                std::swap(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j + 1)]);
                word.push_back(j);
                changed = true;
            }
        }
    }
    return word;
}

std::vector<std::vector<Permutation>> conjugation_orbit(const std::vector<Permutation>& tuple) {
    if (tuple.empty()) return {};
    const int k = tuple.front().size();
    std::set<std::vector<Permutation>> orbit;
    for (const auto& pi : all_permutations(k)) {
        const Permutation pinv = pi.inverse();
        std::vector<Permutation> conj;
        conj.reserve(tuple.size());
        for (const auto& s : tuple) conj.push_back(pi * s * pinv);
        orbit.insert(std::move(conj));
    }
    return {orbit.begin(), orbit.end()};
}

std::vector<Permutation> all_permutations(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace qmr
