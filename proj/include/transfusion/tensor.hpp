#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tf {

// Row-major 2-D buffer. Most of the model works on (positions x features)
// matrices; conv activations use flat vectors with explicit (h, w, c) dims.
template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(size_t(r) * c, T(0)) {}

    T* row(int i) { return data.data() + size_t(i) * cols; }
    const T* row(int i) const { return data.data() + size_t(i) * cols; }
    T& at(int i, int j) { return data[size_t(i) * cols + j]; }
    const T& at(int i, int j) const { return data[size_t(i) * cols + j]; }
    size_t size() const { return data.size(); }
    void zero() { std::fill(data.begin(), data.end(), T(0)); }

    template <class U>
    Mat<U> cast() const {
        Mat<U> out(rows, cols);
        for (size_t i = 0; i < data.size(); ++i) out.data[i] = U(data[i]);
        return out;
    }
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace tf
