#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qolimits/limits.hpp"
#include "qolimits/oracle.hpp"

namespace qolimits {

struct CertifyOptions {
    std::size_t trials = 1000;
    std::size_t samples = 50;  // sample_component draws per component
    std::uint64_t seed = 1;
};

struct CertificationReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t samples = 0;
    std::size_t membership_failures = 0;
    std::vector<bool> coverage;             // per component
    std::vector<std::size_t> curve_hits;    // random arcs landing in each component
    std::vector<std::string> failures;      // first few offending points

    bool passed() const;
    friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

// Reference implementation, one trial after another.
CertificationReport certify_serial(const QOStructure& q, const LimitsDecomposition& d,
                                   const CertifyOptions& options);

// OpenMP over trials; bit-identical to certify_serial.
CertificationReport certify(const QOStructure& q, const LimitsDecomposition& d, const CertifyOptions& options);

}  // namespace qolimits
