#ifndef PDATTACK_TRAIN_HPP
#define PDATTACK_TRAIN_HPP

#include <cstdint>
#include <vector>

#include "pdattack/classifier.hpp"
#include "pdattack/dataset.hpp"

namespace pdattack {

struct ModelSpec {
    ModelKind kind = ModelKind::Linear;
    std::vector<std::size_t> hidden;  // MLP hidden layer widths, in order
    std::size_t epochs = 200;
    std::size_t batch_size = 32;
    double learning_rate = 0.5;
    std::uint64_t seed = 0;
};

/// Mini-batch gradient descent on softmax cross-entropy. Deterministic for a
/// fixed seed.
Classifier train_classifier(const Dataset& dataset, const ModelSpec& spec);

/// Fraction of examples the model labels correctly.
double accuracy(const Classifier& model, const Dataset& dataset);

}  // namespace pdattack

#endif  // PDATTACK_TRAIN_HPP
