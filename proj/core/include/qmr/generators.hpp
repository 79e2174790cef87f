#pragma once

#include <string>
#include <vector>

#include "qmr/permutation.hpp"
#include "qmr/spectrum.hpp"

namespace qmr {

enum class GeneratorMode { Cycles, Factorizing };

GeneratorMode parse_mode(const std::string& s);
std::string mode_name(GeneratorMode mode);

/// One cycle acting on all sites of a subsystem: the support lists the copy
/// indices (0-based) visited by the cycle, in cycle order.
struct Atom {
    Subsystem sites;
    std::vector<int> support;  // length >= 2

    int length() const { return static_cast<int>(support.size()); }
    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
};

/// Product of atoms with pairwise disjoint cycle supports on {0..k-1}.
/// Empty atom list is the identity. Canonical generators (as produced by
/// enumerate_generators) have atoms sorted by (length, sites) occupying
/// consecutive copy indices; one canonical generator represents the whole
/// orbit under simultaneous S_k-conjugation.
struct Generator {
    int k = 0;
    std::vector<Atom> atoms;

    bool is_identity() const { return atoms.empty(); }
    /// stable text encoding, e.g. "id" or "[1,2:2][2,3:2]" (1-based sites, length)
    std::string label() const;

    bool operator==(const Generator&) const = default;
};

/// Validates disjoint supports, lengths >= 2, sites/support in range.
Generator make_generator(int k, std::vector<Atom> atoms);

/// Canonical generator from (sites, cycle length) pairs; supports get
/// consecutive copy indices in (length, sites) order.
Generator canonical_generator(int k, std::vector<std::pair<Subsystem, int>> atom_specs);

/// Orbit representatives of constraint generators.
///  Cycles: identity, then for each A (in order) and each ell in 2..k one
///  single-atom generator.
///  Factorizing: all multisets of atoms with total support <= k, deduplicated
///  up to simultaneous conjugation; includes the cycles set. Coincides with
///  Cycles for k <= 3.
std::vector<Generator> enumerate_generators(const std::vector<Subsystem>& subsystems, int k,
                                            GeneratorMode mode);

/// Target value: product over atoms of power_sum(mu_A, length). Identity -> 1.
double generator_value(const Generator& g, const SpectrumSet& s);

/// Site-wise permutations (sigma_1, ..., sigma_n): sigma_i is the product of
/// the cycles of all atoms whose subsystem contains site i.
std::vector<Permutation> site_permutations(const Generator& g, int n);

}  // namespace qmr
