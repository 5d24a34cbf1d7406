#pragma once

#include <vector>

#include "ccs/tensor.hpp"

namespace ccs {

/// Crop/pad geometry in pixels per side.
struct PadGeometry {
    int top = 0, bottom = 0, left = 0, right = 0;
    bool empty() const { return top == 0 && bottom == 0 && left == 0 && right == 0; }
};

namespace detail {

inline int conv_output_dim(int in, int k, int stride, const char* axis) {
    if (in < k)
        throw ShapeError(std::string("conv2d_valid: input ") + axis + " " + std::to_string(in) +
                         " smaller than kernel " + std::to_string(k));
    if ((in - k) % stride != 0)
        throw ShapeError(std::string("conv2d_valid: (") + axis + " - k) = " + std::to_string(in - k) +
                         " not divisible by stride " + std::to_string(stride) + "; pad the input first");
    return (in - k) / stride + 1;
}

inline void check_kernels(const TensorT<double>&, int) {}

template <typename T>
int kernel_out_channels(const TensorT<T>& kernels, int in_channels) {
    if (kernels.height != kernels.width)
        throw ShapeError("kernels must be square, got " + kernels.shape_string());
    if (in_channels <= 0 || kernels.channels % in_channels != 0)
        throw ShapeError("kernel channel count " + std::to_string(kernels.channels) +
                         " is not a multiple of input channels " + std::to_string(in_channels));
    return kernels.channels / in_channels;
}

}  // namespace detail

/// Valid (no padding) strided 2-D convolution in the cross-correlation
/// convention, fixed project-wide: each output value is the inner product of
/// the kernel with the input window it covers, no kernel flip.
///
/// kernels holds out_ch * in_ch planes of size k x k, output-channel major.
/// Implemented with an im2col inner path; tests shadow it with a naive
/// quadruple-loop reference.
template <typename T>
TensorT<T> conv2d_valid(const TensorT<T>& input, const TensorT<T>& kernels, int stride) {
    if (stride < 1) throw ConfigError("conv2d_valid: stride must be positive");
    const int in_ch = input.channels;
    const int out_ch = detail::kernel_out_channels(kernels, in_ch);
    const int k = kernels.height;
    const int out_h = detail::conv_output_dim(input.height, k, stride, "height");
    const int out_w = detail::conv_output_dim(input.width, k, stride, "width");

    const int patch_len = in_ch * k * k;
    const int positions = out_h * out_w;
    std::vector<T> patches(static_cast<size_t>(positions) * patch_len);
    for (int oi = 0; oi < out_h; ++oi) {
        for (int oj = 0; oj < out_w; ++oj) {
            T* dst = patches.data() + (static_cast<size_t>(oi) * out_w + oj) * patch_len;
            for (int c = 0; c < in_ch; ++c) {
                for (int p = 0; p < k; ++p) {
                    const T* src = input.row(c, oi * stride + p) + static_cast<size_t>(oj) * stride;
                    for (int q = 0; q < k; ++q) *dst++ = src[q];
                }
            }
        }
    }

    TensorT<T> out(out_ch, out_h, out_w);
    for (int oc = 0; oc < out_ch; ++oc) {
        const T* filt = kernels.plane(oc * in_ch);
        T* op = out.plane(oc);
        for (int pos = 0; pos < positions; ++pos) {
            const T* pat = patches.data() + static_cast<size_t>(pos) * patch_len;
            T acc = T(0);
            for (int t = 0; t < patch_len; ++t) acc += filt[t] * pat[t];
            op[pos] = acc;
        }
    }
    return out;
}

/// Exact adjoint of conv2d_valid with the same kernels/stride: scatters each
/// input value times the kernel back onto the out_h x out_w grid.
template <typename T>
TensorT<T> conv2d_transposed(const TensorT<T>& input, const TensorT<T>& kernels, int stride,
                             int out_h, int out_w) {
    if (stride < 1) throw ConfigError("conv2d_transposed: stride must be positive");
    if (kernels.height != kernels.width)
        throw ShapeError("kernels must be square, got " + kernels.shape_string());
    const int k = kernels.height;
    const int out_ch = input.channels;
    if (out_ch <= 0 || kernels.channels % out_ch != 0)
        throw ShapeError("conv2d_transposed: kernel channels " + std::to_string(kernels.channels) +
                         " not a multiple of input channels " + std::to_string(out_ch));
    const int in_ch = kernels.channels / out_ch;
    // out_shape must be consistent with the forward shape formula.
    if (out_h < k || out_w < k || (out_h - k) % stride != 0 || (out_w - k) % stride != 0 ||
        (out_h - k) / stride + 1 != input.height || (out_w - k) / stride + 1 != input.width)
        throw ShapeError("conv2d_transposed: out_shape (" + std::to_string(out_h) + ", " +
                         std::to_string(out_w) + ") inconsistent with input " +
                         input.shape_string() + ", k=" + std::to_string(k) +
                         ", stride=" + std::to_string(stride));

    TensorT<T> out(in_ch, out_h, out_w);
    for (int oc = 0; oc < out_ch; ++oc) {
        for (int ic = 0; ic < in_ch; ++ic) {
            const TensorT<T>& ker = kernels;
            const int kplane = oc * in_ch + ic;
            for (int i = 0; i < input.height; ++i) {
                for (int j = 0; j < input.width; ++j) {
                    const T v = input.at(oc, i, j);
                    if (v == T(0)) continue;
                    for (int p = 0; p < k; ++p) {
                        T* orow = out.row(ic, i * stride + p) + static_cast<size_t>(j) * stride;
                        const T* krow = ker.row(kplane, p);
                        for (int q = 0; q < k; ++q) orow[q] += v * krow[q];
                    }
                }
            }
        }
    }
    return out;
}

namespace detail {

/// Mirror index into [0, n) about the edge samples (edge not repeated).
inline int reflect_index(int i, int n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
    return i;
}

}  // namespace detail

inline PadGeometry centered_pad_geometry(int h, int w, int target_h, int target_w) {
    if (target_h < h || target_w < w)
        throw ShapeError("pad target smaller than input");
    PadGeometry g;
    g.top = (target_h - h) / 2;
    g.bottom = target_h - h - g.top;
    g.left = (target_w - w) / 2;
    g.right = target_w - w - g.left;
    return g;
}

/// Mirror-reflect padding; single reflection only, so each pad amount must be
/// strictly smaller than the corresponding input dimension.
template <typename T>
TensorT<T> pad_reflect(const TensorT<T>& input, const PadGeometry& g) {
    if (g.top < 0 || g.bottom < 0 || g.left < 0 || g.right < 0)
        throw ShapeError("pad_reflect: negative padding");
    const int h = input.height, w = input.width;
    if (std::max(g.top, g.bottom) >= h || std::max(g.left, g.right) >= w)
        throw ShapeError("pad_reflect: padding " + std::to_string(std::max({g.top, g.bottom, g.left, g.right})) +
                         " must be smaller than the image dimension");
    TensorT<T> out(input.channels, h + g.top + g.bottom, w + g.left + g.right);
    for (int c = 0; c < input.channels; ++c) {
        for (int i = 0; i < out.height; ++i) {
            const int si = detail::reflect_index(i - g.top, h);
            const T* src = input.row(c, si);
            T* dst = out.row(c, i);
            for (int j = 0; j < out.width; ++j) dst[j] = src[detail::reflect_index(j - g.left, w)];
        }
    }
    return out;
}

/// Center the input in a target shape with mirror-reflected borders.
template <typename T>
TensorT<T> pad_reflect(const TensorT<T>& input, int target_h, int target_w) {
    return pad_reflect(input, centered_pad_geometry(input.height, input.width, target_h, target_w));
}

/// Remove the given border, recovering exactly what pad_reflect centered.
template <typename T>
TensorT<T> crop(const TensorT<T>& input, const PadGeometry& g) {
    const int h = input.height - g.top - g.bottom;
    const int w = input.width - g.left - g.right;
    if (h <= 0 || w <= 0) throw ShapeError("crop: geometry larger than the image");
    TensorT<T> out(input.channels, h, w);
    for (int c = 0; c < input.channels; ++c)
        for (int i = 0; i < h; ++i) {
            const T* src = input.row(c, i + g.top) + g.left;
            std::copy(src, src + w, out.row(c, i));
        }
    return out;
}

}  // namespace ccs
