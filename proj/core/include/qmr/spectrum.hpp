#pragma once

#include <map>
#include <string>
#include <vector>

namespace qmr {

/// Subsystem: sorted set of site indices, 0-based. (File formats use 1-based.)
using Subsystem = std::vector<int>;

/// Validated, canonically sorted subsystem.
Subsystem make_subsystem(std::vector<int> sites, int n);

/// sum_i mu_i^ell. Equals 1 for ell = 1; weakly decreasing in ell.
double power_sum(const std::vector<double>& mu, int ell);

/// Prescribed marginal spectra for a collection of subsystems of {0..n-1}.
/// Spectra are stored sorted weakly decreasing; entries nonnegative and
/// summing to 1 within 1e-12. Shorter-than-dimension spectra are understood
/// as zero-padded.
class SpectrumSet {
  public:
    SpectrumSet(int n, std::map<Subsystem, std::vector<double>> spectra);

    int n() const { return n_; }
    const std::vector<Subsystem>& subsystems() const { return subsystems_; }
    const std::vector<double>& spectrum(const Subsystem& a) const;
    bool has(const Subsystem& a) const;
    int subsystem_index(const Subsystem& a) const;

    double q(const Subsystem& a, int ell) const;  // power_sum of the spectrum on a

    bool operator==(const SpectrumSet&) const = default;

  private:
    int n_ = 0;
    std::vector<Subsystem> subsystems_;  // sorted, unique
    std::map<Subsystem, std::vector<double>> spectra_;
};

/// "1,3" style key for a subsystem (1-based), used in file formats.
std::string subsystem_key(const Subsystem& a);
Subsystem parse_subsystem_key(const std::string& key, int n);

}  // namespace qmr
