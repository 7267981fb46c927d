#include "pdattack/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include "pdattack/io_util.hpp"

namespace pdattack {

void save_model(const Classifier& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    out << "pdattack-model 1\n";
    out << "kind " << to_string(model.kind()) << "\n";
    out << "layers " << model.layers().size() << "\n";
    for (const DenseLayer& layer : model.layers()) {
        out << "layer " << layer.rows << ' ' << layer.cols << "\n";
        for (double w : layer.weights) out << format_double(w) << ' ';
        out << "\n";
        for (double b : layer.bias) out << format_double(b) << ' ';
        out << "\n";
    }
    if (!out) throw std::runtime_error("failed writing model file: " + path);
}

Classifier load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::string magic, key, kind_name;
    int version = 0;
    in >> magic >> version;
    if (magic != "pdattack-model" || version != 1)
        throw std::runtime_error("not a model file: " + path);
    in >> key >> kind_name;
    if (key != "kind") throw std::runtime_error("malformed model header: " + path);
    std::size_t num_layers = 0;
    in >> key >> num_layers;
    if (key != "layers" || num_layers == 0)
        throw std::runtime_error("malformed model header: " + path);
    std::vector<DenseLayer> layers(num_layers);
    for (DenseLayer& layer : layers) {
        in >> key >> layer.rows >> layer.cols;
        if (key != "layer" || !in)
            throw std::runtime_error("malformed layer header in: " + path);
        layer.weights.resize(layer.rows * layer.cols);
        layer.bias.resize(layer.rows);
        for (double& w : layer.weights) in >> w;
        for (double& b : layer.bias) in >> b;
        if (!in) throw std::runtime_error("truncated model file: " + path);
    }
    return Classifier(model_kind_from_string(kind_name), std::move(layers));
}

}  // namespace pdattack
