#pragma once

#include <cmath>

#include "sip/nn.hpp"

namespace sip {

// Adam with bias correction. State vectors are addressed by parameter order,
// which is stable per network; they round-trip through checkpoints so a
// resumed run continues the exact trajectory.
template <typename T>
class Adam {
public:
    Adam() = default;
    explicit Adam(const ParamList<T>& params, double lr, double beta1 = 0.9,
                  double beta2 = 0.999, double eps = 1e-8)
        : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {
        for (const auto& p : params) {
            m_.emplace_back(p.value->shape());
            v_.emplace_back(p.value->shape());
        }
    }

    void step(const ParamList<T>& params) {
        ++t_;
        const T c1 = static_cast<T>(1.0 - std::pow(beta1_, t_));
        const T c2 = static_cast<T>(1.0 - std::pow(beta2_, t_));
        for (std::size_t i = 0; i < params.size(); ++i) {
            Tensor<T>& w = *params[i].value;
            const Tensor<T>& g = *params[i].grad;
            Tensor<T>& m = m_[i];
            Tensor<T>& v = v_[i];
            const T b1 = static_cast<T>(beta1_), b2 = static_cast<T>(beta2_);
            const T lr = static_cast<T>(lr_), eps = static_cast<T>(eps_);
            for (std::int64_t j = 0; j < w.numel(); ++j) {
                m[j] = b1 * m[j] + (T(1) - b1) * g[j];
                v[j] = b2 * v[j] + (T(1) - b2) * g[j] * g[j];
                const T mh = m[j] / c1;
                const T vh = v[j] / c2;
                w[j] -= lr * mh / (std::sqrt(vh) + eps);
            }
        }
    }

    double lr() const { return lr_; }
    void set_lr(double lr) { lr_ = lr; }
    long long steps_taken() const { return t_; }
    void set_steps_taken(long long t) { t_ = t; }

    std::vector<Tensor<T>>& first_moments() { return m_; }
    std::vector<Tensor<T>>& second_moments() { return v_; }

private:
    double lr_ = 1e-3, beta1_ = 0.9, beta2_ = 0.999, eps_ = 1e-8;
    long long t_ = 0;
    std::vector<Tensor<T>> m_, v_;
};

}  // namespace sip
