#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "sip/gemm.hpp"
#include "sip/rng.hpp"
#include "sip/tensor.hpp"

namespace sip {

// Small layer toolkit: convolution (im2col + GEMM), dense, nearest-neighbor
// upsampling, global average pooling. Layers cache what backward needs and
// overwrite their parameter gradients on every backward pass.
//
// Everything is templated on the scalar type; training runs in float,
// finite-difference tests instantiate double.

enum class Act { None, Relu, LeakyRelu, Sigmoid };

template <typename T>
T apply_act(Act act, T v) {
    switch (act) {
        case Act::None: return v;
        case Act::Relu: return v > T(0) ? v : T(0);
        case Act::LeakyRelu: return v > T(0) ? v : T(0.2) * v;
        case Act::Sigmoid:
            return v >= T(0) ? T(1) / (T(1) + std::exp(-v))
                             : std::exp(v) / (T(1) + std::exp(v));
    }
    return v;
}

// Derivative expressed through the activation output.
template <typename T>
T act_grad_from_y(Act act, T y) {
    switch (act) {
        case Act::None: return T(1);
        case Act::Relu: return y > T(0) ? T(1) : T(0);
        case Act::LeakyRelu: return y > T(0) ? T(1) : T(0.2);
        case Act::Sigmoid: return y * (T(1) - y);
    }
    return T(1);
}

template <typename T>
struct ParamRef {
    std::string name;
    Tensor<T>* value;
    Tensor<T>* grad;
};

template <typename T>
using ParamList = std::vector<ParamRef<T>>;

template <typename T>
void he_init(Tensor<T>& w, int fan_in, Rng& rng) {
    const double std_dev = std::sqrt(2.0 / static_cast<double>(fan_in));
    for (std::int64_t i = 0; i < w.numel(); ++i)
        w[i] = static_cast<T>(rng.normal(0.0, std_dev));
}

// --- im2col / col2im -------------------------------------------------------

// cols is [in_ch*k*k, B*out_h*out_w]; sample b occupies columns
// [b*out_hw, (b+1)*out_hw).
template <typename T>
void im2col(const Tensor<T>& x, int k, int stride, int dil, int pad,
            int out_h, int out_w, Tensor<T>& cols) {
    const int batch = x.dim(0), in_ch = x.dim(1), in_h = x.dim(2), in_w = x.dim(3);
    const std::int64_t out_hw = static_cast<std::int64_t>(out_h) * out_w;
    const std::int64_t total_cols = batch * out_hw;
#pragma omp parallel for schedule(static)
    for (int b = 0; b < batch; ++b) {
        const T* xb = x.data() + static_cast<std::int64_t>(b) * in_ch * in_h * in_w;
        for (int c = 0; c < in_ch; ++c)
            for (int ki = 0; ki < k; ++ki)
                for (int kj = 0; kj < k; ++kj) {
                    const std::int64_t row = (static_cast<std::int64_t>(c) * k + ki) * k + kj;
                    T* dst = cols.data() + row * total_cols + static_cast<std::int64_t>(b) * out_hw;
                    for (int oy = 0; oy < out_h; ++oy) {
                        const int iy = oy * stride - pad + ki * dil;
                        if (iy < 0 || iy >= in_h) {
                            for (int ox = 0; ox < out_w; ++ox) dst[oy * out_w + ox] = T(0);
                            continue;
                        }
                        const T* src_row = xb + (static_cast<std::int64_t>(c) * in_h + iy) * in_w;
                        for (int ox = 0; ox < out_w; ++ox) {
                            const int ix = ox * stride - pad + kj * dil;
                            dst[oy * out_w + ox] =
                                (ix >= 0 && ix < in_w) ? src_row[ix] : T(0);
                        }
                    }
                }
    }
}

template <typename T>
void col2im(const Tensor<T>& cols, int k, int stride, int dil, int pad,
            int out_h, int out_w, Tensor<T>& gx) {
    const int batch = gx.dim(0), in_ch = gx.dim(1), in_h = gx.dim(2), in_w = gx.dim(3);
    const std::int64_t out_hw = static_cast<std::int64_t>(out_h) * out_w;
    const std::int64_t total_cols = static_cast<std::int64_t>(batch) * out_hw;
    gx.zero();
#pragma omp parallel for schedule(static)
    for (int b = 0; b < batch; ++b) {
        T* gb = gx.data() + static_cast<std::int64_t>(b) * in_ch * in_h * in_w;
        for (int c = 0; c < in_ch; ++c)
            for (int ki = 0; ki < k; ++ki)
                for (int kj = 0; kj < k; ++kj) {
                    const std::int64_t row = (static_cast<std::int64_t>(c) * k + ki) * k + kj;
                    const T* src = cols.data() + row * total_cols + static_cast<std::int64_t>(b) * out_hw;
                    for (int oy = 0; oy < out_h; ++oy) {
                        const int iy = oy * stride - pad + ki * dil;
                        if (iy < 0 || iy >= in_h) continue;
                        T* dst_row = gb + (static_cast<std::int64_t>(c) * in_h + iy) * in_w;
                        for (int ox = 0; ox < out_w; ++ox) {
                            const int ix = ox * stride - pad + kj * dil;
                            if (ix >= 0 && ix < in_w) dst_row[ix] += src[oy * out_w + ox];
                        }
                    }
                }
    }
}

// --- layers ----------------------------------------------------------------

template <typename T>
class Conv2d {
public:
    Conv2d() = default;
    Conv2d(std::string name, int in_ch, int out_ch, int k, int stride, int dil,
           Act act, Rng& rng)
        : name_(std::move(name)), in_ch_(in_ch), out_ch_(out_ch), k_(k),
          stride_(stride), dil_(dil), pad_(dil * (k - 1) / 2), act_(act),
          w_({out_ch, in_ch * k * k}), b_({out_ch}),
          gw_({out_ch, in_ch * k * k}), gb_({out_ch}) {
        he_init(w_, in_ch * k * k, rng);
    }

    int out_size(int in) const { return (in + 2 * pad_ - dil_ * (k_ - 1) - 1) / stride_ + 1; }

    Tensor<T> forward(const Tensor<T>& x) {
        if (x.dim(1) != in_ch_)
            throw InvalidArgument(name_ + ": expected " + std::to_string(in_ch_) +
                                  " input channels, got " + std::to_string(x.dim(1)));
        const int batch = x.dim(0), in_h = x.dim(2), in_w = x.dim(3);
        const int oh = out_size(in_h), ow = out_size(in_w);
        const std::int64_t out_hw = static_cast<std::int64_t>(oh) * ow;
        const std::int64_t ncols = batch * out_hw;
        x_shape_ = {batch, in_ch_, in_h, in_w};
        oh_ = oh;
        ow_ = ow;

        cols_ = Tensor<T>({in_ch_ * k_ * k_, static_cast<int>(ncols)});
        im2col(x, k_, stride_, dil_, pad_, oh, ow, cols_);

        Tensor<T> y({batch, out_ch_, oh, ow});
        const int krows = in_ch_ * k_ * k_;
        for (int b = 0; b < batch; ++b)
            gemm(false, false, out_ch_, static_cast<int>(out_hw), krows, T(1),
                 w_.data(), krows, cols_.data() + b * out_hw, static_cast<int>(ncols),
                 T(0), y.data() + static_cast<std::int64_t>(b) * out_ch_ * out_hw,
                 static_cast<int>(out_hw));

#pragma omp parallel for schedule(static)
        for (int b = 0; b < batch; ++b)
            for (int c = 0; c < out_ch_; ++c) {
                T* row = y.data() + (static_cast<std::int64_t>(b) * out_ch_ + c) * out_hw;
                const T bias = b_[c];
                for (std::int64_t i = 0; i < out_hw; ++i)
                    row[i] = apply_act(act_, row[i] + bias);
            }
        return y;
    }

    // y is the forward output (needed for the activation derivative).
    Tensor<T> backward(const Tensor<T>& y, const Tensor<T>& gy) {
        const int batch = x_shape_[0];
        const std::int64_t out_hw = static_cast<std::int64_t>(oh_) * ow_;
        const std::int64_t ncols = batch * out_hw;
        const int krows = in_ch_ * k_ * k_;

        // d(pre-activation), packed as [out_ch, B*out_hw] for single-GEMM grads
        Tensor<T> dz({out_ch_, static_cast<int>(ncols)});
#pragma omp parallel for schedule(static)
        for (int b = 0; b < batch; ++b)
            for (int c = 0; c < out_ch_; ++c) {
                const T* yr = y.data() + (static_cast<std::int64_t>(b) * out_ch_ + c) * out_hw;
                const T* gr = gy.data() + (static_cast<std::int64_t>(b) * out_ch_ + c) * out_hw;
                T* dr = dz.data() + c * ncols + static_cast<std::int64_t>(b) * out_hw;
                for (std::int64_t i = 0; i < out_hw; ++i)
                    dr[i] = gr[i] * act_grad_from_y(act_, yr[i]);
            }

        for (int c = 0; c < out_ch_; ++c) {
            T s = T(0);
            const T* dr = dz.data() + c * ncols;
            for (std::int64_t i = 0; i < ncols; ++i) s += dr[i];
            gb_[c] = s;
        }
        gemm(false, true, out_ch_, krows, static_cast<int>(ncols), T(1), dz.data(),
             static_cast<int>(ncols), cols_.data(), static_cast<int>(ncols), T(0),
             gw_.data(), krows);

        Tensor<T> dcols({krows, static_cast<int>(ncols)});
        gemm(true, false, krows, static_cast<int>(ncols), out_ch_, T(1), w_.data(),
             krows, dz.data(), static_cast<int>(ncols), T(0), dcols.data(),
             static_cast<int>(ncols));

        Tensor<T> gx({x_shape_[0], x_shape_[1], x_shape_[2], x_shape_[3]});
        col2im(dcols, k_, stride_, dil_, pad_, oh_, ow_, gx);
        return gx;
    }

    void collect(ParamList<T>& out) {
        out.push_back({name_ + ".w", &w_, &gw_});
        out.push_back({name_ + ".b", &b_, &gb_});
    }

    Tensor<T>& weight() { return w_; }
    Tensor<T>& bias() { return b_; }
    int in_channels() const { return in_ch_; }
    int out_channels() const { return out_ch_; }
    int kernel() const { return k_; }

private:
    std::string name_;
    int in_ch_ = 0, out_ch_ = 0, k_ = 0, stride_ = 1, dil_ = 1, pad_ = 0;
    Act act_ = Act::None;
    Tensor<T> w_, b_, gw_, gb_;
    Tensor<T> cols_;
    std::array<int, 4> x_shape_{};
    int oh_ = 0, ow_ = 0;
};

template <typename T>
class Dense {
public:
    Dense() = default;
    Dense(std::string name, int in_dim, int out_dim, Act act, Rng& rng)
        : name_(std::move(name)), in_(in_dim), out_(out_dim), act_(act),
          w_({out_dim, in_dim}), b_({out_dim}), gw_({out_dim, in_dim}), gb_({out_dim}) {
        he_init(w_, in_dim, rng);
    }

    // x: [B, in]
    Tensor<T> forward(const Tensor<T>& x) {
        if (x.dim(1) != in_)
            throw InvalidArgument(name_ + ": expected input width " + std::to_string(in_));
        x_ = x;
        const int batch = x.dim(0);
        Tensor<T> y({batch, out_});
        gemm(false, true, batch, out_, in_, T(1), x.data(), in_, w_.data(), in_, T(0),
             y.data(), out_);
        for (int b = 0; b < batch; ++b)
            for (int o = 0; o < out_; ++o)
                y.at(b, o) = apply_act(act_, y.at(b, o) + b_[o]);
        return y;
    }

    Tensor<T> backward(const Tensor<T>& y, const Tensor<T>& gy) {
        const int batch = x_.dim(0);
        Tensor<T> dz({batch, out_});
        for (int b = 0; b < batch; ++b)
            for (int o = 0; o < out_; ++o)
                dz.at(b, o) = gy.at(b, o) * act_grad_from_y(act_, y.at(b, o));

        gemm(true, false, out_, in_, batch, T(1), dz.data(), out_, x_.data(), in_, T(0),
             gw_.data(), in_);
        for (int o = 0; o < out_; ++o) {
            T s = T(0);
            for (int b = 0; b < batch; ++b) s += dz.at(b, o);
            gb_[o] = s;
        }
        Tensor<T> gx({batch, in_});
        gemm(false, false, batch, in_, out_, T(1), dz.data(), out_, w_.data(), in_, T(0),
             gx.data(), in_);
        return gx;
    }

    void collect(ParamList<T>& out) {
        out.push_back({name_ + ".w", &w_, &gw_});
        out.push_back({name_ + ".b", &b_, &gb_});
    }

    Tensor<T>& weight() { return w_; }
    Tensor<T>& bias() { return b_; }

private:
    std::string name_;
    int in_ = 0, out_ = 0;
    Act act_ = Act::None;
    Tensor<T> w_, b_, gw_, gb_;
    Tensor<T> x_;
};

// Nearest-neighbor 2x upsampling.
template <typename T>
class Upsample2x {
public:
    Tensor<T> forward(const Tensor<T>& x) {
        const int batch = x.dim(0), ch = x.dim(1), h = x.dim(2), w = x.dim(3);
        Tensor<T> y({batch, ch, h * 2, w * 2});
#pragma omp parallel for schedule(static)
        for (int b = 0; b < batch; ++b)
            for (int c = 0; c < ch; ++c)
                for (int i = 0; i < h; ++i) {
                    const T* src = x.data() + ((static_cast<std::int64_t>(b) * ch + c) * h + i) * w;
                    T* d0 = y.data() + ((static_cast<std::int64_t>(b) * ch + c) * h * 2 + 2 * i) * (w * 2);
                    T* d1 = d0 + w * 2;
                    for (int j = 0; j < w; ++j) {
                        d0[2 * j] = d0[2 * j + 1] = src[j];
                        d1[2 * j] = d1[2 * j + 1] = src[j];
                    }
                }
        return y;
    }

    Tensor<T> backward(const Tensor<T>& gy) {
        const int batch = gy.dim(0), ch = gy.dim(1), h2 = gy.dim(2), w2 = gy.dim(3);
        const int h = h2 / 2, w = w2 / 2;
        Tensor<T> gx({batch, ch, h, w});
#pragma omp parallel for schedule(static)
        for (int b = 0; b < batch; ++b)
            for (int c = 0; c < ch; ++c)
                for (int i = 0; i < h; ++i) {
                    const T* s0 = gy.data() + ((static_cast<std::int64_t>(b) * ch + c) * h2 + 2 * i) * w2;
                    const T* s1 = s0 + w2;
                    T* dst = gx.data() + ((static_cast<std::int64_t>(b) * ch + c) * h + i) * w;
                    for (int j = 0; j < w; ++j)
                        dst[j] = s0[2 * j] + s0[2 * j + 1] + s1[2 * j] + s1[2 * j + 1];
                }
        return gx;
    }
};

template <typename T>
class GlobalAvgPool {
public:
    // x: [B,C,H,W] -> [B,C]
    Tensor<T> forward(const Tensor<T>& x) {
        shape_ = {x.dim(0), x.dim(1), x.dim(2), x.dim(3)};
        const std::int64_t hw = static_cast<std::int64_t>(x.dim(2)) * x.dim(3);
        Tensor<T> y({x.dim(0), x.dim(1)});
        for (int b = 0; b < x.dim(0); ++b)
            for (int c = 0; c < x.dim(1); ++c) {
                const T* src = x.data() + (static_cast<std::int64_t>(b) * x.dim(1) + c) * hw;
                T s = T(0);
                for (std::int64_t i = 0; i < hw; ++i) s += src[i];
                y.at(b, c) = s / static_cast<T>(hw);
            }
        return y;
    }

    Tensor<T> backward(const Tensor<T>& gy) {
        Tensor<T> gx({shape_[0], shape_[1], shape_[2], shape_[3]});
        const std::int64_t hw = static_cast<std::int64_t>(shape_[2]) * shape_[3];
        for (int b = 0; b < shape_[0]; ++b)
            for (int c = 0; c < shape_[1]; ++c) {
                T* dst = gx.data() + (static_cast<std::int64_t>(b) * shape_[1] + c) * hw;
                const T v = gy.at(b, c) / static_cast<T>(hw);
                for (std::int64_t i = 0; i < hw; ++i) dst[i] = v;
            }
        return gx;
    }

private:
    std::array<int, 4> shape_{};
};

// Channel concatenation (shared spatial dims) and its adjoint.
template <typename T>
Tensor<T> concat_channels(const Tensor<T>& a, const Tensor<T>& b) {
    if (a.dim(0) != b.dim(0) || a.dim(2) != b.dim(2) || a.dim(3) != b.dim(3))
        throw InvalidArgument("concat_channels: mismatched batch or spatial dims " +
                              a.shape_str() + " vs " + b.shape_str());
    const int batch = a.dim(0), ca = a.dim(1), cb = b.dim(1), h = a.dim(2), w = a.dim(3);
    const std::int64_t hw = static_cast<std::int64_t>(h) * w;
    Tensor<T> y({batch, ca + cb, h, w});
    for (int n = 0; n < batch; ++n) {
        T* dst = y.data() + static_cast<std::int64_t>(n) * (ca + cb) * hw;
        const T* pa = a.data() + static_cast<std::int64_t>(n) * ca * hw;
        const T* pb = b.data() + static_cast<std::int64_t>(n) * cb * hw;
        std::copy(pa, pa + ca * hw, dst);
        std::copy(pb, pb + cb * hw, dst + ca * hw);
    }
    return y;
}

// Splits the gradient of a channel concatenation back into both halves.
template <typename T>
void split_channels(const Tensor<T>& gy, Tensor<T>& ga, Tensor<T>& gb) {
    const int batch = gy.dim(0), ca = ga.dim(1), cb = gb.dim(1);
    const std::int64_t hw = static_cast<std::int64_t>(gy.dim(2)) * gy.dim(3);
    for (int n = 0; n < batch; ++n) {
        const T* src = gy.data() + static_cast<std::int64_t>(n) * (ca + cb) * hw;
        std::copy(src, src + ca * hw, ga.data() + static_cast<std::int64_t>(n) * ca * hw);
        std::copy(src + ca * hw, src + (ca + cb) * hw,
                  gb.data() + static_cast<std::int64_t>(n) * cb * hw);
    }
}

}  // namespace sip
