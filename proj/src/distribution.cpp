#include "linopt/distribution.hpp"

#include <numeric>
#include <sstream>

namespace linopt {

PhotonDistribution::PhotonDistribution(std::vector<int> occupations)
    : occ_(std::move(occupations)) {
    for (int n : occ_) {
        if (n < 0) {
            raise(ErrorCode::ParseError, "occupation numbers must be non-negative");
        }
    }
    total_ = std::accumulate(occ_.begin(), occ_.end(), 0);
}

PhotonDistribution PhotonDistribution::single_photons(std::size_t modes) {
    return PhotonDistribution(std::vector<int>(modes, 1));
}

std::vector<std::size_t> PhotonDistribution::support() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < occ_.size(); ++i) {
        if (occ_[i] > 0) idx.push_back(i);
    }
    return idx;
}

bool PhotonDistribution::unbunched() const {
    for (int n : occ_) {
        if (n > 1) return false;
    }
    return true;
}

PhotonDistribution parse_distribution(const std::string& text) {
    if (text.empty()) raise(ErrorCode::ParseError, "empty distribution string");
    std::vector<int> occ;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (token.empty()) raise(ErrorCode::ParseError, "empty entry in distribution string");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            raise(ErrorCode::ParseError, "invalid occupation number '" + token + "'");
        }
        if (used != token.size()) {
            raise(ErrorCode::ParseError, "invalid occupation number '" + token + "'");
        }
        if (value < 0) raise(ErrorCode::ParseError, "occupation numbers must be non-negative");
        occ.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return PhotonDistribution(std::move(occ));
}

std::string to_string(const PhotonDistribution& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.modes(); ++i) {
        if (i) out << ',';
        out << d[i];
    }
    return out.str();
}

} // namespace linopt
