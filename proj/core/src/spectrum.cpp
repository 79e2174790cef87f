#include "qmr/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmr {

Subsystem make_subsystem(std::vector<int> sites, int n) {
    if (sites.empty()) throw std::invalid_argument("subsystem must be nonempty");
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    for (int s : sites)
        if (s < 0 || s >= n) throw std::invalid_argument("subsystem site out of range");
    return sites;
}

double power_sum(const std::vector<double>& mu, int ell) {
    if (ell < 1) throw std::invalid_argument("power_sum: ell must be >= 1");
    double sum = 0;
    for (double x : mu) sum += std::pow(x, ell);
    return sum;
}

SpectrumSet::SpectrumSet(int n, std::map<Subsystem, std::vector<double>> spectra) : n_(n) {
    if (n < 1) throw std::invalid_argument("SpectrumSet: n must be >= 1");
    if (spectra.empty()) throw std::invalid_argument("SpectrumSet: no subsystems");
    for (auto& [a, mu] : spectra) {
        Subsystem canon = make_subsystem(a, n);
        if (canon != a) throw std::invalid_argument("SpectrumSet: subsystem not canonical");
        double sum = 0;
        for (double x : mu) {
            if (x < 0) throw std::invalid_argument("SpectrumSet: negative spectrum entry");
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("SpectrumSet: spectrum on " + subsystem_key(a)
                                        + " does not sum to 1");
        std::sort(mu.rbegin(), mu.rend());
        subsystems_.push_back(a);
    }
    spectra_ = std::move(spectra);
}

const std::vector<double>& SpectrumSet::spectrum(const Subsystem& a) const {
    auto it = spectra_.find(a);
    if (it == spectra_.end())
        throw std::invalid_argument("SpectrumSet: unknown subsystem " + subsystem_key(a));
    return it->second;
}

bool SpectrumSet::has(const Subsystem& a) const { return spectra_.count(a) > 0; }

int SpectrumSet::subsystem_index(const Subsystem& a) const {
    auto it = std::find(subsystems_.begin(), subsystems_.end(), a);
    if (it == subsystems_.end())
        throw std::invalid_argument("SpectrumSet: unknown subsystem " + subsystem_key(a));
    return static_cast<int>(it - subsystems_.begin());
}

double SpectrumSet::q(const Subsystem& a, int ell) const {
    return power_sum(spectrum(a), ell);
}

std::string subsystem_key(const Subsystem& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i] + 1);
    }
    return s;
}

Subsystem parse_subsystem_key(const std::string& key, int n) {
    std::vector<int> sites;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t next = key.find(',', pos);
        if (next == std::string::npos) next = key.size();
        sites.push_back(std::stoi(key.substr(pos, next - pos)) - 1);
        pos = next + 1;
    }
    return make_subsystem(std::move(sites), n);
}

}  // namespace qmr
