#include "pdattack/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pdattack/rng.hpp"

namespace pdattack {

namespace {

struct LayerGrad {
    std::vector<double> weights;
    std::vector<double> bias;
};

void forward(const std::vector<DenseLayer>& layers, const double* x,
             std::vector<std::vector<double>>& pre,
             std::vector<std::vector<double>>& act) {
    const double* in = x;
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const DenseLayer& layer = layers[l];
        pre[l].assign(layer.rows, 0.0);
        for (std::size_t r = 0; r < layer.rows; ++r) {
            double acc = layer.bias[r];
            const double* w = layer.weights.data() + r * layer.cols;
            for (std::size_t c = 0; c < layer.cols; ++c) acc += w[c] * in[c];
            pre[l][r] = acc;
        }
        if (l + 1 < layers.size()) {
            act[l].resize(layer.rows);
            for (std::size_t r = 0; r < layer.rows; ++r)
                act[l][r] = std::max(0.0, pre[l][r]);
            in = act[l].data();
        }
    }
}

std::vector<double> softmax(const std::vector<double>& z) {
    const double zmax = *std::max_element(z.begin(), z.end());
    std::vector<double> p(z.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        p[i] = std::exp(z[i] - zmax);
        sum += p[i];
    }
    for (double& v : p) v /= sum;
    return p;
}

}  // namespace

Classifier train_classifier(const Dataset& dataset, const ModelSpec& spec) {
    if (dataset.examples.empty())
        throw std::invalid_argument("train_classifier: empty dataset");
    const std::size_t dims = dataset.dims;
    const std::size_t classes = std::max<std::size_t>(dataset.num_classes, 2);
    for (const LabeledExample& ex : dataset.examples)
        if (ex.x.size() != dims)
            throw std::invalid_argument("train_classifier: inconsistent dimensions");

    // Build layer stack.
    std::vector<std::size_t> widths;
    widths.push_back(dims);
    if (spec.kind == ModelKind::Mlp)
        for (std::size_t h : spec.hidden) widths.push_back(h);
    widths.push_back(classes);

    Rng rng(mix_seed(spec.seed, 0x7121));
    std::vector<DenseLayer> layers(widths.size() - 1);
    for (std::size_t l = 0; l < layers.size(); ++l) {
        layers[l].rows = widths[l + 1];
        layers[l].cols = widths[l];
        layers[l].weights.resize(layers[l].rows * layers[l].cols);
        layers[l].bias.assign(layers[l].rows, 0.0);
        const double scale = std::sqrt(2.0 / double(layers[l].cols));
        for (double& w : layers[l].weights) w = scale * next_symmetric(rng, 1.0);
    }

    const std::size_t n = dataset.size();
    const std::size_t batch = std::max<std::size_t>(1, std::min(spec.batch_size, n));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::vector<std::vector<double>> pre(layers.size()), act(layers.size());
    std::vector<LayerGrad> grads(layers.size());
    for (std::size_t l = 0; l < layers.size(); ++l) {
        grads[l].weights.resize(layers[l].weights.size());
        grads[l].bias.resize(layers[l].bias.size());
    }

    for (std::size_t epoch = 0; epoch < spec.epochs; ++epoch) {
        // Fisher-Yates with the portable generator.
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = rng() % i;
            std::swap(order[i - 1], order[j]);
        }
        for (std::size_t start = 0; start < n; start += batch) {
            const std::size_t stop = std::min(n, start + batch);
            for (LayerGrad& g : grads) {
                std::fill(g.weights.begin(), g.weights.end(), 0.0);
                std::fill(g.bias.begin(), g.bias.end(), 0.0);
            }
            for (std::size_t idx = start; idx < stop; ++idx) {
                const LabeledExample& ex = dataset.examples[order[idx]];
                forward(layers, ex.x.data.data(), pre, act);
                std::vector<double> delta = softmax(pre.back());
                delta[ex.y] -= 1.0;
                for (std::size_t l = layers.size(); l-- > 0;) {
                    const DenseLayer& layer = layers[l];
                    const double* in =
                        l == 0 ? ex.x.data.data() : act[l - 1].data();
                    for (std::size_t r = 0; r < layer.rows; ++r) {
                        const double d = delta[r];
                        grads[l].bias[r] += d;
                        double* gw = grads[l].weights.data() + r * layer.cols;
                        for (std::size_t c = 0; c < layer.cols; ++c)
                            gw[c] += d * in[c];
                    }
                    if (l == 0) break;
                    std::vector<double> prev(layer.cols, 0.0);
                    for (std::size_t r = 0; r < layer.rows; ++r) {
                        const double d = delta[r];
                        const double* w = layer.weights.data() + r * layer.cols;
                        for (std::size_t c = 0; c < layer.cols; ++c)
                            prev[c] += d * w[c];
                    }
                    for (std::size_t c = 0; c < layer.cols; ++c)
                        if (pre[l - 1][c] <= 0.0) prev[c] = 0.0;
                    delta = std::move(prev);
                }
            }
            const double step = spec.learning_rate / double(stop - start);
            for (std::size_t l = 0; l < layers.size(); ++l) {
                for (std::size_t i = 0; i < layers[l].weights.size(); ++i)
                    layers[l].weights[i] -= step * grads[l].weights[i];
                for (std::size_t i = 0; i < layers[l].bias.size(); ++i)
                    layers[l].bias[i] -= step * grads[l].bias[i];
            }
        }
    }
    return Classifier(spec.kind, std::move(layers));
}

double accuracy(const Classifier& model, const Dataset& dataset) {
    if (dataset.examples.empty()) return 0.0;
    std::size_t correct = 0;
    for (const LabeledExample& ex : dataset.examples)
        if (model.predict(ex.x) == ex.y) ++correct;
    return double(correct) / double(dataset.size());
}

}  // namespace pdattack
