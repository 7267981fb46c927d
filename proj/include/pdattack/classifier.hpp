#ifndef PDATTACK_CLASSIFIER_HPP
#define PDATTACK_CLASSIFIER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pdattack/tensor.hpp"

namespace pdattack {

enum class ModelKind { Linear, Mlp };

/// One affine layer: y = W x + b, with W stored row-major (rows x cols).
struct DenseLayer {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> weights;  // rows * cols
    std::vector<double> bias;     // rows
};

/// Differentiable classifier over [0,1]^N inputs. Two built-in families:
/// a linear map W x + b and a ReLU multi-layer perceptron. Immutable after
/// construction; safe to share across concurrent attack workers.
class Classifier {
public:
    Classifier(ModelKind kind, std::vector<DenseLayer> layers);

    ModelKind kind() const { return kind_; }
    std::size_t input_dim() const { return input_dim_; }
    std::size_t num_classes() const { return num_classes_; }
    const std::vector<DenseLayer>& layers() const { return layers_; }

    /// Raw class scores; length == num_classes().
    Tensor logits(const Tensor& x) const;

    /// argmax of the logits; ties broken toward the lowest index.
    std::size_t predict(const Tensor& x) const;

    /// Score gap f(x)_y - max_{i != y} f(x)_i. Negative iff the input is
    /// misclassified; an exact tie counts as correctly classified.
    double margin(const Tensor& x, std::size_t y) const;

    /// Logistic surrogate log(1 + exp(margin)), overflow-safe.
    double surrogate_loss(const Tensor& x, std::size_t y) const;

    /// d surrogate_loss / d x by reverse-mode accumulation. At ties of the
    /// inner max the lowest-index maximizer's subgradient is used; ReLU
    /// kinks use subgradient 0.
    Tensor input_gradient(const Tensor& x, std::size_t y) const;

    /// Forward pass keeping pre-activations of every layer; used by the
    /// trainer's backward pass.
    std::vector<std::vector<double>> forward_preactivations(const Tensor& x) const;

private:
    void check_input(const Tensor& x) const;

    ModelKind kind_;
    std::vector<DenseLayer> layers_;
    std::size_t input_dim_;
    std::size_t num_classes_;
};

/// Stable log(1 + exp(m)).
double softplus(double m);

/// Stable logistic sigmoid.
double sigmoid(double m);

/// Index of the largest logit excluding `y`, lowest index on ties.
std::size_t runner_up_index(const std::vector<double>& scores, std::size_t y);

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

}  // namespace pdattack

#endif  // PDATTACK_CLASSIFIER_HPP
