#pragma once

// Test-only reference computations.  None of these call the code under test.

#include "telinv/matrix.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace support {

using telinv::Complex;
using telinv::Matrix;

// J0 by its power series in long double, 60 terms.
inline long double j0_extended(long double x) {
    long double term = 1, sum = 1;
    const long double q = -(x / 2) * (x / 2);
    for (int m = 1; m <= 60; ++m) {
        term *= q / ((long double)m * m);
        sum += term;
    }
    return sum;
}

// Original index reached by deleting chain[0], then chain[1], ... from
// 1..n and taking the base-th survivor.
inline int deletion_walk(int n, const std::vector<int>& chain, int base) {
    std::vector<int> alive(static_cast<std::size_t>(n));
    std::iota(alive.begin(), alive.end(), 1);
    for (int r : chain) alive.erase(alive.begin() + (r - 1));
    return alive[std::size_t(base - 1)];
}

inline int parity_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Determinant of an integer matrix by permutations, in exact 64-bit integers.
inline long long exact_det(const std::vector<std::vector<long long>>& a) {
    const int n = int(a.size());
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    long long total = 0;
    do {
        long long prod = parity_sign(p);
        for (int i = 0; i < n; ++i) prod *= a[std::size_t(i)][std::size_t(p[std::size_t(i)])];
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline Matrix to_matrix(const std::vector<std::vector<long long>>& a) {
    std::vector<std::vector<Complex>> rows;
    for (const auto& r : a) {
        std::vector<Complex> row;
        for (long long v : r) row.emplace_back(double(v), 0.0);
        rows.push_back(row);
    }
    return Matrix::from_rows(rows);
}

inline std::vector<std::vector<long long>> random_int_matrix(int n, std::mt19937_64& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
    for (auto& row : a)
        for (auto& v : row) v = dist(rng);
    return a;
}

inline double rel_err(Complex x, Complex ref) {
    const double scale = std::abs(ref);
    return scale == 0 ? std::abs(x) : std::abs(x - ref) / scale;
}

inline double entry_err(const Matrix& x, const Matrix& ref) {
    double worst = 0;
    for (std::size_t k = 0; k < x.data().size(); ++k)
        worst = std::max(worst, std::abs(x.data()[k] - ref.data()[k]) / std::max(1.0, std::abs(ref.data()[k])));
    return worst;
}

// Curl components written out term by term.
inline std::array<double, 3> curl_by_hand(const std::array<double, 3>& h, const std::array<std::array<double, 3>, 3>& D) {
    auto d = [&](int i, int j) { return D[std::size_t(i - 1)][std::size_t(j - 1)]; };
    return {(d(3, 2) - d(2, 3)) / (h[1] * h[2]), (d(1, 3) - d(3, 1)) / (h[0] * h[2]),
            (d(2, 1) - d(1, 2)) / (h[0] * h[1])};
}

template <class T>
T cross_dot(const std::array<T, 3>& a, const std::array<T, 3>& b, const std::array<T, 3>& c) {
    const std::array<T, 3> x{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    return x[0] * c[0] + x[1] * c[1] + x[2] * c[2];
}

}  // namespace support
