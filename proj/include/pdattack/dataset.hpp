#ifndef PDATTACK_DATASET_HPP
#define PDATTACK_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pdattack/tensor.hpp"

namespace pdattack {

/// Input in [0,1]^N with its class label.
struct LabeledExample {
    Tensor x;
    std::size_t y = 0;
};

struct Dataset {
    std::size_t dims = 0;
    std::size_t num_classes = 0;
    std::vector<LabeledExample> examples;

    std::size_t size() const { return examples.size(); }
};

/// Two well-separated Gaussian blobs in [0,1]^dims, one per class.
/// `noise` is the per-coordinate standard deviation.
Dataset make_blobs(std::size_t n, std::size_t dims, double noise, std::uint64_t seed);

/// Classic two interleaving half-moons in [0,1]^2.
Dataset make_moons(std::size_t n, double noise, std::uint64_t seed);

/// Plain-text dataset file: header lines (dims/count/classes) followed by one
/// row per example, features then label. Values round-trip at 17 significant
/// digits.
void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(const std::string& path);

/// Clamp every feature into [0,1] in place.
void clamp_features(Dataset& ds);

}  // namespace pdattack

#endif  // PDATTACK_DATASET_HPP
