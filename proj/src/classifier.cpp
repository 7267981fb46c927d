#include "pdattack/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdattack {

double softplus(double m) {
    // log(1 + e^m); for large m return m + log1p(e^-m) to avoid overflow.
    if (m > 30.0) return m + std::log1p(std::exp(-m));
    return std::log1p(std::exp(m));
}

double sigmoid(double m) {
    if (m >= 0.0) return 1.0 / (1.0 + std::exp(-m));
    const double e = std::exp(m);
    return e / (1.0 + e);
}

std::size_t runner_up_index(const std::vector<double>& scores, std::size_t y) {
    std::size_t best = y == 0 ? 1 : 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (i == y) continue;
        if (scores[i] > scores[best]) best = i;
    }
    return best;
}

std::string to_string(ModelKind kind) {
    return kind == ModelKind::Linear ? "linear" : "mlp";
}

ModelKind model_kind_from_string(const std::string& s) {
    if (s == "linear") return ModelKind::Linear;
    if (s == "mlp") return ModelKind::Mlp;
    throw std::invalid_argument("unknown model kind: " + s);
}

Classifier::Classifier(ModelKind kind, std::vector<DenseLayer> layers)
    : kind_(kind), layers_(std::move(layers)) {
    if (layers_.empty()) throw std::invalid_argument("Classifier: no layers");
    if (kind_ == ModelKind::Linear && layers_.size() != 1)
        throw std::invalid_argument("Classifier: linear model must have one layer");
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const DenseLayer& layer = layers_[l];
        if (layer.rows == 0 || layer.cols == 0 ||
            layer.weights.size() != layer.rows * layer.cols ||
            layer.bias.size() != layer.rows)
            throw std::invalid_argument("Classifier: malformed layer");
        if (l > 0 && layer.cols != layers_[l - 1].rows)
            throw std::invalid_argument("Classifier: layer dimension chain broken");
    }
    input_dim_ = layers_.front().cols;
    num_classes_ = layers_.back().rows;
    if (num_classes_ < 2)
        throw std::invalid_argument("Classifier: need at least 2 classes");
}

void Classifier::check_input(const Tensor& x) const {
    if (x.size() != input_dim_)
        throw std::invalid_argument("Classifier: input has " +
                                    std::to_string(x.size()) + " values, expected " +
                                    std::to_string(input_dim_));
}

std::vector<std::vector<double>> Classifier::forward_preactivations(const Tensor& x) const {
    check_input(x);
    std::vector<std::vector<double>> pre(layers_.size());
    const double* in = x.data.data();
    std::vector<double> hidden;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const DenseLayer& layer = layers_[l];
        pre[l].resize(layer.rows);
        for (std::size_t r = 0; r < layer.rows; ++r) {
            double acc = layer.bias[r];
            const double* w = layer.weights.data() + r * layer.cols;
            for (std::size_t c = 0; c < layer.cols; ++c) acc += w[c] * in[c];
            pre[l][r] = acc;
        }
        if (l + 1 < layers_.size()) {
            hidden.resize(layer.rows);
            for (std::size_t r = 0; r < layer.rows; ++r)
                hidden[r] = pre[l][r] > 0.0 ? pre[l][r] : 0.0;
            in = hidden.data();
        }
    }
    return pre;
}

Tensor Classifier::logits(const Tensor& x) const {
    auto pre = forward_preactivations(x);
    return Tensor(std::move(pre.back()));
}

std::size_t Classifier::predict(const Tensor& x) const {
    Tensor scores = logits(x);
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] > scores[best]) best = i;
    return best;
}

double Classifier::margin(const Tensor& x, std::size_t y) const {
    if (y >= num_classes_)
        throw std::invalid_argument("Classifier: label " + std::to_string(y) +
                                    " out of range");
    Tensor scores = logits(x);
    const std::size_t j = runner_up_index(scores.data, y);
    return scores[y] - scores[j];
}

double Classifier::surrogate_loss(const Tensor& x, std::size_t y) const {
    return softplus(margin(x, y));
}

Tensor Classifier::input_gradient(const Tensor& x, std::size_t y) const {
    if (y >= num_classes_)
        throw std::invalid_argument("Classifier: label " + std::to_string(y) +
                                    " out of range");
    const auto pre = forward_preactivations(x);
    const std::vector<double>& scores = pre.back();
    const std::size_t j = runner_up_index(scores, y);
    const double m = scores[y] - scores[j];
    const double scale = sigmoid(m);  // d softplus(m) / d m

    // Seed the output cogradient with scale * (e_y - e_j), then walk the
    // layers backwards, masking through ReLU on the hidden layers.
    std::vector<double> delta(scores.size(), 0.0);
    delta[y] = scale;
    delta[j] -= scale;

    for (std::size_t l = layers_.size(); l-- > 0;) {
        const DenseLayer& layer = layers_[l];
        std::vector<double> prev(layer.cols, 0.0);
        for (std::size_t r = 0; r < layer.rows; ++r) {
            const double d = delta[r];
            if (d == 0.0) continue;
            const double* w = layer.weights.data() + r * layer.cols;
            for (std::size_t c = 0; c < layer.cols; ++c) prev[c] += d * w[c];
        }
        if (l > 0) {
            for (std::size_t c = 0; c < layer.cols; ++c)
                if (pre[l - 1][c] <= 0.0) prev[c] = 0.0;
        }
        delta = std::move(prev);
    }
    return Tensor(x.shape, std::move(delta));
}

}  // namespace pdattack
