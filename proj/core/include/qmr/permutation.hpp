#pragma once

#include <vector>

#include "qmr/partition.hpp"

namespace qmr {

/// Permutation of {0, ..., k-1} in one-line form: images[i] is the image of i.
class Permutation {
  public:
    Permutation() = default;
    static Permutation identity(int k);
    /// From one-line images (0-based); validated to be a bijection.
    static Permutation from_images(std::vector<int> images);
    /// From a single cycle (c[0] c[1] ... ), entries 0-based and distinct.
    static Permutation from_cycle(int k, const std::vector<int>& cycle);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// Composition acting right-to-left: (a*b)(x) = a(b(x)).
    Permutation operator*(const Permutation& rhs) const;
    Permutation conjugate_by(const Permutation& pi) const;  // pi * this * pi^-1

    std::vector<std::vector<int>> cycles() const;            // nontrivial first by min element; includes fixed points
    Partition cycle_type() const;
    int cycle_count() const;                                 // including fixed points

    /// Indices i such that this = s_{w[last]} * ... * s_{w[0]} with s_i = (i, i+1).
    /// Bubble-sort word; length O(k^2).
    std::vector<int> adjacent_word() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> images_;
};

/// Orbit of an n-tuple under simultaneous conjugation by all of S_k,
/// deduplicated, in sorted order. k is taken from the tuple entries.
std::vector<std::vector<Permutation>> conjugation_orbit(const std::vector<Permutation>& tuple);

/// All k! permutations of S_k (lexicographic by one-line form).
std::vector<Permutation> all_permutations(int k);

}  // namespace qmr
