#ifndef PDATTACK_TENSOR_HPP
#define PDATTACK_TENSOR_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdattack {

/// Dense n-dimensional array of doubles, row-major. The carrier for inputs,
/// perturbations, logits and gradients. Value-semantic: copies are deep.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;

    Tensor(std::vector<std::size_t> shape_, std::vector<double> data_)
        : shape(std::move(shape_)), data(std::move(data_)) {
        if (element_count(shape) != data.size())
            throw std::invalid_argument("Tensor: shape/data size mismatch");
    }

    /// 1-D tensor from raw values.
    explicit Tensor(std::vector<double> values)
        : shape{values.size()}, data(std::move(values)) {}

    Tensor(std::initializer_list<double> values)
        : shape{values.size()}, data(values) {}

    static Tensor zeros(const std::vector<std::size_t>& shape_) {
        return Tensor(shape_, std::vector<double>(element_count(shape_), 0.0));
    }

    static Tensor zeros_like(const Tensor& t) { return zeros(t.shape); }

    static std::size_t element_count(const std::vector<std::size_t>& shape_) {
        std::size_t n = 1;
        for (std::size_t d : shape_) {
            if (d == 0) throw std::invalid_argument("Tensor: zero dimension");
            n *= d;
        }
        return shape_.empty() ? 0 : n;
    }

    std::size_t size() const { return data.size(); }

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline bool same_shape(const Tensor& a, const Tensor& b) {
    return a.shape == b.shape;
}

inline void check_same_size(const Tensor& a, const Tensor& b, const char* where) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(where) + ": size mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
}

inline Tensor operator+(const Tensor& a, const Tensor& b) {
    check_same_size(a, b, "Tensor::operator+");
    Tensor out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline Tensor operator-(const Tensor& a, const Tensor& b) {
    check_same_size(a, b, "Tensor::operator-");
    Tensor out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

inline Tensor operator*(double s, const Tensor& a) {
    Tensor out = a;
    for (double& v : out.data) v *= s;
    return out;
}

inline double dot(const Tensor& a, const Tensor& b) {
    check_same_size(a, b, "dot");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double l2_norm(const Tensor& a) { return std::sqrt(dot(a, a)); }

}  // namespace pdattack

#endif  // PDATTACK_TENSOR_HPP
