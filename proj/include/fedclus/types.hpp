#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fedclus {

// Flat parameter vector of the detector; the unit exchanged in every
// protocol message. Layout is owned by model.hpp.
using ModelParams = std::vector<double>;

struct Sample {
    std::vector<double> features;
    int label = 0;  // 0 = normal, 1 = attack
};

struct Dataset {
    std::vector<Sample> samples;
    std::size_t feature_dim = 0;

    std::size_t size() const { return samples.size(); }

    double attack_fraction() const {
        if (samples.empty()) return 0.0;
        std::size_t attacks = 0;
        for (const auto& s : samples) attacks += (s.label == 1);
        return static_cast<double>(attacks) / static_cast<double>(samples.size());
    }

    void validate() const {
        if (samples.empty()) throw std::invalid_argument("Dataset: needs at least one sample");
        for (const auto& s : samples) {
            if (s.features.size() != feature_dim)
                throw std::invalid_argument("Dataset: inconsistent feature dimension");
            if (s.label != 0 && s.label != 1)
                throw std::invalid_argument("Dataset: label outside {0,1}");
            for (double v : s.features)
                if (!std::isfinite(v)) throw std::invalid_argument("Dataset: non-finite feature");
        }
    }
};

struct ClientShard {
    int client_id = 0;
    Dataset data;
};

// Per-feature standardization statistics, computed on the training split only.
struct ScalerStats {
    std::vector<double> mean;
    std::vector<double> variance;  // sample variance, n-1 denominator
};

}  // namespace fedclus
