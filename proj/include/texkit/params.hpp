// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "texkit/tensor.hpp"

namespace texkit {

// A trainable (or frozen) weight living outside any tape. Gradients
// accumulate here during Tape::backward and are consumed by the optimizer.
template <typename T>
struct Parameter {
    Tensor<T> value;
    Tensor<T> grad;
    bool trainable = true;

    Parameter() = default;
    explicit Parameter(Tensor<T> v, bool train = true) : value(std::move(v)), trainable(train) {
        grad = Tensor<T>::zeros(value.shape);
    }

    void set(Tensor<T> v) {
        value = std::move(v);
        grad = Tensor<T>::zeros(value.shape);
    }

    void zero_grad() { grad.fill(T(0)); }
    size_t numel() const { return value.numel(); }
};

template <typename T>
struct ParamRef {
    std::string name;
    Parameter<T>* param = nullptr;
};

template <typename T>
using ParamList = std::vector<ParamRef<T>>;

template <typename T>
size_t trainable_count(const ParamList<T>& params) {
    size_t n = 0;
    for (const auto& pr : params)
        if (pr.param->trainable) n += pr.param->numel();
    return n;
}

// Content fingerprint of the parameter values, order-sensitive; used to
// assert freeze contracts (bitwise unchanged weights).
template <typename T>
uint64_t params_fingerprint(const ParamList<T>& params) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& pr : params) {
        h = fnv1a_str(pr.name, h);
        h = fnv1a(pr.param->value.data.data(), pr.param->value.data.size() * sizeof(T), h);
    }
    return h;
}

} // namespace texkit
