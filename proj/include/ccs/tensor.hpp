#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ccs/errors.hpp"

namespace ccs {

/// Dense row-major (channels, height, width) array. 2-D data uses a single
/// channel. Double precision is used on the solver/oracle paths, single
/// precision on the network training path.
template <typename T>
struct TensorT {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<T> data;

    TensorT() = default;
    TensorT(int c, int h, int w, T fill = T(0)) : channels(c), height(h), width(w) {
        if (c < 0 || h < 0 || w < 0)
            throw ShapeError("tensor dimensions must be nonnegative");
        data.assign(static_cast<size_t>(c) * h * w, fill);
    }

    static TensorT zeros(int c, int h, int w) { return TensorT(c, h, w); }

    size_t size() const { return data.size(); }
    int plane_size() const { return height * width; }

    bool same_shape(const TensorT& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }

    T& at(int c, int i, int j) {
        return data[(static_cast<size_t>(c) * height + i) * width + j];
    }
    T at(int c, int i, int j) const {
        return data[(static_cast<size_t>(c) * height + i) * width + j];
    }

    T* row(int c, int i) { return data.data() + (static_cast<size_t>(c) * height + i) * width; }
    const T* row(int c, int i) const {
        return data.data() + (static_cast<size_t>(c) * height + i) * width;
    }
    T* plane(int c) { return data.data() + static_cast<size_t>(c) * height * width; }
    const T* plane(int c) const { return data.data() + static_cast<size_t>(c) * height * width; }

    std::string shape_string() const {
        return "(" + std::to_string(channels) + ", " + std::to_string(height) + ", " +
               std::to_string(width) + ")";
    }

    template <typename U>
    TensorT<U> cast() const {
        TensorT<U> out(channels, height, width);
        for (size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
        return out;
    }
};

using Tensor = TensorT<double>;
using Tensor32 = TensorT<float>;

template <typename T>
double dot(const TensorT<T>& a, const TensorT<T>& b) {
    if (!a.same_shape(b)) throw ShapeError("dot: shape mismatch " + a.shape_string() + " vs " + b.shape_string());
    double s = 0;
    for (size_t i = 0; i < a.data.size(); ++i) s += static_cast<double>(a.data[i]) * b.data[i];
    return s;
}

template <typename T>
double norm(const TensorT<T>& a) {
    double s = 0;
    for (T v : a.data) s += static_cast<double>(v) * v;
    return std::sqrt(s);
}

template <typename T>
double max_abs(const TensorT<T>& a) {
    double m = 0;
    for (T v : a.data) m = std::max(m, std::abs(static_cast<double>(v)));
    return m;
}

template <typename T>
double max_abs_diff(const TensorT<T>& a, const TensorT<T>& b) {
    if (!a.same_shape(b)) throw ShapeError("max_abs_diff: shape mismatch");
    double m = 0;
    for (size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(static_cast<double>(a.data[i]) - b.data[i]));
    return m;
}

template <typename T>
bool all_finite(const TensorT<T>& a) {
    for (T v : a.data)
        if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
}

/// dst += s * x
template <typename T>
void axpy(TensorT<T>& dst, T s, const TensorT<T>& x) {
    if (!dst.same_shape(x)) throw ShapeError("axpy: shape mismatch");
    for (size_t i = 0; i < dst.data.size(); ++i) dst.data[i] += s * x.data[i];
}

template <typename T>
void scale_inplace(TensorT<T>& t, T s) {
    for (T& v : t.data) v *= s;
}

template <typename T>
TensorT<T> clamp01(TensorT<T> t) {
    for (T& v : t.data) v = std::min(T(1), std::max(T(0), v));
    return t;
}

}  // namespace ccs
