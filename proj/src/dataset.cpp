#include "pdattack/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pdattack/io_util.hpp"
#include "pdattack/rng.hpp"

namespace pdattack {

namespace {

double gaussian(Rng& rng) {
    // Box-Muller on the portable unit generator (std::normal_distribution is
    // not bit-stable across library versions).
    double u1 = next_unit(rng);
    while (u1 <= 0.0) u1 = next_unit(rng);
    const double u2 = next_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace

void clamp_features(Dataset& ds) {
    for (LabeledExample& ex : ds.examples)
        for (double& v : ex.x.data) v = std::clamp(v, 0.0, 1.0);
}

Dataset make_blobs(std::size_t n, std::size_t dims, double noise, std::uint64_t seed) {
    if (n == 0 || dims == 0) throw std::invalid_argument("make_blobs: empty spec");
    Rng rng(mix_seed(seed, 0xb10b5));
    Dataset ds;
    ds.dims = dims;
    ds.num_classes = 2;
    ds.examples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t label = i % 2;
        const double center = label == 0 ? 0.3 : 0.7;
        Tensor x = Tensor::zeros({dims});
        for (std::size_t d = 0; d < dims; ++d)
            x[d] = center + noise * gaussian(rng);
        ds.examples.push_back({std::move(x), label});
    }
    clamp_features(ds);
    return ds;
}

Dataset make_moons(std::size_t n, double noise, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("make_moons: empty spec");
    Rng rng(mix_seed(seed, 0x3000));
    Dataset ds;
    ds.dims = 2;
    ds.num_classes = 2;
    ds.examples.reserve(n);
    const double pi = 3.14159265358979323846;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t label = i % 2;
        const double t = pi * next_unit(rng);
        double px, py;
        if (label == 0) {
            px = std::cos(t);
            py = std::sin(t);
        } else {
            px = 1.0 - std::cos(t);
            py = 0.5 - std::sin(t);
        }
        px += noise * gaussian(rng);
        py += noise * gaussian(rng);
        // Map the moons' bounding box ([-1,2] x [-0.7,1.2] with headroom for
        // noise) into [0,1]^2.
        Tensor x{(px + 1.2) / 3.4, (py + 0.9) / 2.8};
        ds.examples.push_back({std::move(x), label});
    }
    clamp_features(ds);
    return ds;
}

void save_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    out << "pdattack-dataset 1\n";
    out << "dims " << ds.dims << "\n";
    out << "count " << ds.size() << "\n";
    out << "classes " << ds.num_classes << "\n";
    for (const LabeledExample& ex : ds.examples) {
        for (double v : ex.x.data) out << format_double(v) << ' ';
        out << ex.y << "\n";
    }
    if (!out) throw std::runtime_error("failed writing dataset file: " + path);
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "pdattack-dataset" || version != 1)
        throw std::runtime_error("not a dataset file: " + path);
    Dataset ds;
    std::string key;
    std::size_t count = 0;
    in >> key >> ds.dims;
    if (key != "dims") throw std::runtime_error("malformed dataset header: " + path);
    in >> key >> count;
    if (key != "count") throw std::runtime_error("malformed dataset header: " + path);
    in >> key >> ds.num_classes;
    if (key != "classes") throw std::runtime_error("malformed dataset header: " + path);
    ds.examples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Tensor x = Tensor::zeros({ds.dims});
        for (std::size_t d = 0; d < ds.dims; ++d) in >> x[d];
        std::size_t y;
        in >> y;
        if (!in) throw std::runtime_error("truncated dataset file: " + path);
        if (y >= ds.num_classes)
            throw std::runtime_error("dataset label out of range in: " + path);
        ds.examples.push_back({std::move(x), y});
    }
    return ds;
}

}  // namespace pdattack
