#include "qmr/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qmr {

GeneratorMode parse_mode(const std::string& s) {
    if (s == "cycles") return GeneratorMode::Cycles;
    if (s == "factorizing") return GeneratorMode::Factorizing;
    throw std::invalid_argument("unknown mode '" + s + "' (expected cycles|factorizing)");
}

std::string mode_name(GeneratorMode mode) {
    return mode == GeneratorMode::Cycles ? "cycles" : "factorizing";
}

std::string Generator::label() const {
    if (atoms.empty()) return "id";
    std::string s;
    for (const auto& a : atoms)
        s += "[" + subsystem_key(a.sites) + ":" + std::to_string(a.length()) + "]";
    return s;
}

Generator make_generator(int k, std::vector<Atom> atoms) {
    if (k < 1) throw std::invalid_argument("Generator: k must be >= 1");
    std::set<int> used;
    for (const auto& a : atoms) {
        if (a.sites.empty()) throw std::invalid_argument("Generator: atom with empty subsystem");
        if (a.length() < 2) throw std::invalid_argument("Generator: cycle length must be >= 2");
        for (int c : a.support) {
            if (c < 0 || c >= k) throw std::invalid_argument("Generator: copy index out of range");
            if (!used.insert(c).second)
                throw std::invalid_argument("Generator: cycle supports must be disjoint");
        }
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) {
        return std::make_pair(x.length(), x.sites) < std::make_pair(y.length(), y.sites);
    });
    return Generator{k, std::move(atoms)};
}

Generator canonical_generator(int k, std::vector<std::pair<Subsystem, int>> atom_specs) {
    std::sort(atom_specs.begin(), atom_specs.end(),
              [](const auto& x, const auto& y) {
                  return std::make_pair(x.second, x.first) < std::make_pair(y.second, y.first);
              });
    std::vector<Atom> atoms;
    int off = 0;
    for (const auto& [sites, len] : atom_specs) {
        std::vector<int> support;
        for (int t = 0; t < len; ++t) support.push_back(off + t);
        off += len;
        atoms.push_back(Atom{sites, std::move(support)});
    }
    return make_generator(k, std::move(atoms));
}

namespace {

void enumerate_multisets(const std::vector<Subsystem>& subsystems, int k, int budget,
                         std::size_t min_choice, std::vector<std::pair<Subsystem, int>>& cur,
                         std::vector<Generator>& out) {
    if (!cur.empty()) out.push_back(canonical_generator(k, cur));
    // atoms chosen in nondecreasing (length, subsystem-index) order; each
    // multiset is produced exactly once
    for (int len = cur.empty() ? 2 : cur.back().second; len <= budget; ++len) {
        const std::size_t start = (!cur.empty() && len == cur.back().second) ? min_choice : 0;
        for (std::size_t ai = start; ai < subsystems.size(); ++ai) {
            cur.emplace_back(subsystems[ai], len);
            enumerate_multisets(subsystems, k, budget - len, ai, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<Generator> enumerate_generators(const std::vector<Subsystem>& subsystems, int k,
                                            GeneratorMode mode) {
    if (k < 1) throw std::invalid_argument("enumerate_generators: k must be >= 1");
    std::vector<Generator> out;
    out.push_back(Generator{k, {}});  // identity
    if (mode == GeneratorMode::Cycles) {
        for (const auto& a : subsystems)
            for (int ell = 2; ell <= k; ++ell)
                out.push_back(canonical_generator(k, {{a, ell}}));
        return out;
    }
    std::vector<std::pair<Subsystem, int>> cur;
    std::vector<Generator> multi;
    enumerate_multisets(subsystems, k, k, 0, cur, multi);
    // Deterministic order: single atoms grouped per subsystem as in cycles
    // mode, then multi-atom generators by (atom count, atom list).
    std::vector<Generator> singles, rest;
    for (auto& g : multi)
        (g.atoms.size() == 1 ? singles : rest).push_back(std::move(g));
    for (const auto& a : subsystems)
        for (int ell = 2; ell <= k; ++ell)
            for (const auto& g : singles)
                if (g.atoms[0].sites == a && g.atoms[0].length() == ell) out.push_back(g);
    std::sort(rest.begin(), rest.end(), [](const Generator& x, const Generator& y) {
        auto keyof = [](const Generator& g) {
            std::vector<std::pair<int, Subsystem>> key;
            for (const auto& a : g.atoms) key.emplace_back(a.length(), a.sites);
            return std::make_pair(g.atoms.size(), key);
        };
        return keyof(x) < keyof(y);
    });
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

double generator_value(const Generator& g, const SpectrumSet& s) {
    double v = 1.0;
    for (const auto& a : g.atoms) v *= s.q(a.sites, a.length());
    return v;
}

std::vector<Permutation> site_permutations(const Generator& g, int n) {
    std::vector<Permutation> sigma(static_cast<std::size_t>(n), Permutation::identity(g.k));
    for (const auto& a : g.atoms) {
        const Permutation cyc = Permutation::from_cycle(g.k, a.support);
        for (int site : a.sites) {
            if (site < 0 || site >= n)
                throw std::invalid_argument("site_permutations: site out of range");
            auto& s = sigma[static_cast<std::size_t>(site)];
            s = s * cyc;  // disjoint supports: order irrelevant
        }
    }
    return sigma;
}

}  // namespace qmr
