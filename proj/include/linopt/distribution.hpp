#pragma once

#include <string>
#include <vector>

#include "linopt/errors.hpp"

namespace linopt {

// Occupation numbers of photons across modes: a fixed-length vector of
// non-negative integers. The all-zero vector is constructible (mode count
// matters for dimension checks) but rejected at scattering-operation
// boundaries, which require total() >= 1.
class PhotonDistribution {
  public:
    PhotonDistribution() = default;

    explicit PhotonDistribution(std::vector<int> occupations);

    // (1, 1, ..., 1) over `modes` modes.
    static PhotonDistribution single_photons(std::size_t modes);

    const std::vector<int>& occupations() const { return occ_; }
    int operator[](std::size_t i) const { return occ_[i]; }

    std::size_t modes() const { return occ_.size(); }
    int total() const { return total_; }

    // Indices of modes with at least one photon.
    std::vector<std::size_t> support() const;

    // True when every occupation is 0 or 1 (the unbunched case).
    bool unbunched() const;

    bool operator==(const PhotonDistribution& other) const { return occ_ == other.occ_; }

  private:
    std::vector<int> occ_;
    int total_ = 0;
};

// Parses the CLI form "2,1,0". Rejects negatives and non-integers.
PhotonDistribution parse_distribution(const std::string& text);

std::string to_string(const PhotonDistribution& d);

} // namespace linopt
