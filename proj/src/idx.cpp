#include "pdattack/idx.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace pdattack {

namespace {

std::uint32_t read_be32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw std::runtime_error("truncated IDX header");
    return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
           (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

}  // namespace

Dataset load_idx_dataset(const std::string& images_path,
                         const std::string& labels_path,
                         std::size_t limit) {
    std::ifstream img(images_path, std::ios::binary);
    if (!img) throw std::runtime_error("cannot open IDX image file: " + images_path);
    std::ifstream lab(labels_path, std::ios::binary);
    if (!lab) throw std::runtime_error("cannot open IDX label file: " + labels_path);

    if (read_be32(img) != kImageMagic)
        throw std::runtime_error("bad IDX image magic in: " + images_path);
    const std::uint32_t img_count = read_be32(img);
    const std::uint32_t rows = read_be32(img);
    const std::uint32_t cols = read_be32(img);

    if (read_be32(lab) != kLabelMagic)
        throw std::runtime_error("bad IDX label magic in: " + labels_path);
    const std::uint32_t lab_count = read_be32(lab);
    if (img_count != lab_count)
        throw std::runtime_error("IDX image/label counts differ");

    std::size_t n = img_count;
    if (limit > 0) n = std::min<std::size_t>(n, limit);
    const std::size_t dims = std::size_t(rows) * cols;

    Dataset ds;
    ds.dims = dims;
    ds.num_classes = 10;
    ds.examples.reserve(n);
    std::vector<unsigned char> pixels(dims);
    for (std::size_t i = 0; i < n; ++i) {
        img.read(reinterpret_cast<char*>(pixels.data()),
                 static_cast<std::streamsize>(dims));
        char label = 0;
        lab.read(&label, 1);
        if (!img || !lab) throw std::runtime_error("truncated IDX data");
        Tensor x({rows, cols}, std::vector<double>(dims));
        for (std::size_t p = 0; p < dims; ++p) x.data[p] = pixels[p] / 255.0;
        const auto y = static_cast<std::size_t>(static_cast<unsigned char>(label));
        if (y >= ds.num_classes) throw std::runtime_error("IDX label out of range");
        ds.examples.push_back({std::move(x), y});
    }
    return ds;
}

}  // namespace pdattack
