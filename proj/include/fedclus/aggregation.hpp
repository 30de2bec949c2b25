#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fedclus/types.hpp"

// Deviation-weighted and size-weighted combination of parameter vectors.
// The same primitive is applied at the group->client, client->subserver and
// subserver->server tiers.

namespace fedclus::agg {

class DimensionMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// (params, sample count) pair: the input record of every aggregation tier.
struct WeightedEntry {
    ModelParams params;
    std::uint64_t count = 1;
};

// literal: weight proportional to each entry's distance from the
//          size-weighted mean.
// inverse: weight proportional to the reciprocal of that distance, so large
//          deviation reduces influence. Default for experiment runs.
enum class WeightMode { literal, inverse };

inline const char* to_string(WeightMode m) {
    return m == WeightMode::literal ? "literal" : "inverse";
}

inline WeightMode weight_mode_from_string(const std::string& s) {
    if (s == "literal") return WeightMode::literal;
    if (s == "inverse") return WeightMode::inverse;
    throw std::invalid_argument("unknown weight mode: " + s);
}

inline void check_entries(std::span<const WeightedEntry> entries) {
    if (entries.empty()) throw DimensionMismatch("aggregation: no entries");
    const std::size_t dim = entries.front().params.size();
    for (const auto& e : entries) {
        if (e.params.size() != dim)
            throw DimensionMismatch("aggregation: entry parameter lengths differ");
        if (e.count == 0) throw DimensionMismatch("aggregation: entry count must be >= 1");
    }
}

// w~ = sum_m (count_m / total) * params_m
inline ModelParams size_weighted_mean(std::span<const WeightedEntry> entries) {
    check_entries(entries);
    std::uint64_t total = 0;
    for (const auto& e : entries) total += e.count;
    ModelParams out(entries.front().params.size(), 0.0);
    for (const auto& e : entries) {
        const double w = static_cast<double>(e.count) / static_cast<double>(total);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * e.params[i];
    }
    return out;
}

inline double l2_distance(const ModelParams& a, const ModelParams& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

// Normalized aggregation weights. Deviations are Euclidean distances from
// the size-weighted mean of the batch. When the total deviation vanishes
// (all entries identical) both modes fall back to size-proportional weights.
inline std::vector<double> deviation_weights(std::span<const WeightedEntry> entries,
                                             WeightMode mode) {
    check_entries(entries);
    const ModelParams center = size_weighted_mean(entries);
    std::vector<double> dist(entries.size());
    double dist_sum = 0.0;
    for (std::size_t m = 0; m < entries.size(); ++m) {
        dist[m] = l2_distance(center, entries[m].params);
        dist_sum += dist[m];
    }

    std::vector<double> weights(entries.size());
    if (dist_sum < 1e-12) {
        std::uint64_t total = 0;
        for (const auto& e : entries) total += e.count;
        for (std::size_t m = 0; m < entries.size(); ++m)
            weights[m] = static_cast<double>(entries[m].count) / static_cast<double>(total);
        return weights;
    }

    if (mode == WeightMode::literal) {
        for (std::size_t m = 0; m < entries.size(); ++m) weights[m] = dist[m] / dist_sum;
        return weights;
    }

    // inverse mode: epsilon keeps zero-deviation entries finite, scaled to
    // the deviation magnitude of the batch
    const double eps =
        1e-8 * (1.0 + dist_sum / static_cast<double>(entries.size()));
    double inv_sum = 0.0;
    for (std::size_t m = 0; m < entries.size(); ++m) {
        weights[m] = 1.0 / (dist[m] + eps);
        inv_sum += weights[m];
    }
    for (auto& w : weights) w /= inv_sum;
    return weights;
}

inline ModelParams aggregate(std::span<const WeightedEntry> entries, WeightMode mode) {
    const std::vector<double> weights = deviation_weights(entries, mode);
    ModelParams out(entries.front().params.size(), 0.0);
    for (std::size_t m = 0; m < entries.size(); ++m)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += weights[m] * entries[m].params[i];
    return out;
}

// Plain mean used by the FedAvg baselines.
inline ModelParams aggregate_plain(std::span<const WeightedEntry> entries) {
    return size_weighted_mean(entries);
}

}  // namespace fedclus::agg
