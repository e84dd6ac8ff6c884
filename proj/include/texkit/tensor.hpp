// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "texkit/common.hpp"
#include "texkit/rng.hpp"

namespace texkit {

// Dense row-major tensor. The substrate trains in float and runs gradient
// checks in double, so everything downstream is templated on the scalar.
template <typename T>
struct Tensor {
    std::vector<size_t> shape;
    std::vector<T> data;

    Tensor() = default;
    explicit Tensor(std::vector<size_t> s, T fill = T(0)) : shape(std::move(s)) {
        data.assign(count(shape), fill);
    }

    static size_t count(const std::vector<size_t>& s) {
        size_t n = 1;
        for (size_t d : s) n *= d;
        return n;
    }

    static Tensor zeros(std::vector<size_t> s) { return Tensor(std::move(s)); }
    static Tensor full(std::vector<size_t> s, T v) { return Tensor(std::move(s), v); }

    static Tensor randn(std::vector<size_t> s, Rng& rng, T std_dev = T(1)) {
        Tensor t(std::move(s));
        for (auto& v : t.data) v = static_cast<T>(rng.normal()) * std_dev;
        return t;
    }

    static Tensor rand01(std::vector<size_t> s, Rng& rng) {
        Tensor t(std::move(s));
        for (auto& v : t.data) v = static_cast<T>(rng.uniform());
        return t;
    }

    static Tensor from(std::vector<size_t> s, std::vector<T> values) {
        TK_REQUIRE(count(s) == values.size(), "from: ", values.size(), " values for shape ", shape_str(s));
        Tensor t;
        t.shape = std::move(s);
        t.data = std::move(values);
        return t;
    }

    size_t numel() const { return data.size(); }
    size_t ndim() const { return shape.size(); }
    size_t dim(size_t i) const {
        TK_REQUIRE(i < shape.size(), "dim index ", i, " out of range for ", shape_str(shape));
        return shape[i];
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    T& operator[](size_t i) { return data[i]; }
    const T& operator[](size_t i) const { return data[i]; }

    T& at2(size_t i, size_t j) { return data[i * shape[1] + j]; }
    const T& at2(size_t i, size_t j) const { return data[i * shape[1] + j]; }
    T& at3(size_t i, size_t j, size_t k) { return data[(i * shape[1] + j) * shape[2] + k]; }
    const T& at3(size_t i, size_t j, size_t k) const { return data[(i * shape[1] + j) * shape[2] + k]; }
    T& at4(size_t i, size_t j, size_t k, size_t l) {
        return data[((i * shape[1] + j) * shape[2] + k) * shape[3] + l];
    }
    const T& at4(size_t i, size_t j, size_t k, size_t l) const {
        return data[((i * shape[1] + j) * shape[2] + k) * shape[3] + l];
    }

    Tensor reshaped(std::vector<size_t> s) const {
        TK_REQUIRE(count(s) == numel(), "reshape ", shape_str(shape), " -> ", shape_str(s), ": element count differs");
        Tensor t = *this;
        t.shape = std::move(s);
        return t;
    }

    bool all_finite() const {
        for (const T& v : data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }

    void add_(const Tensor& o) {
        TK_REQUIRE(same_shape(o), "add_: shape mismatch ", shape_str(shape), " vs ", shape_str(o.shape));
        for (size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
    }

    template <typename U>
    Tensor<U> cast() const {
        Tensor<U> t;
        t.shape = shape;
        t.data.resize(data.size());
        for (size_t i = 0; i < data.size(); ++i) t.data[i] = static_cast<U>(data[i]);
        return t;
    }

    T max_abs() const {
        T m = 0;
        for (const T& v : data) m = std::max(m, static_cast<T>(std::abs(static_cast<double>(v))));
        return m;
    }
};

template <typename T>
double max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
    TK_REQUIRE(a.same_shape(b), "max_abs_diff: shape mismatch ", shape_str(a.shape), " vs ", shape_str(b.shape));
    double m = 0;
    for (size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(static_cast<double>(a.data[i]) - static_cast<double>(b.data[i])));
    return m;
}

template <typename T>
double max_rel_diff(const Tensor<T>& a, const Tensor<T>& b, double eps = 1e-12) {
    TK_REQUIRE(a.same_shape(b), "max_rel_diff: shape mismatch");
    double m = 0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        double x = static_cast<double>(a.data[i]), y = static_cast<double>(b.data[i]);
        m = std::max(m, std::abs(x - y) / (std::max(std::abs(x), std::abs(y)) + eps));
    }
    return m;
}

} // namespace texkit
