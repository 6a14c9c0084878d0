#include "telinv/oracle.hpp"

#include "telinv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace telinv {

namespace {

constexpr double kPivotFloor = 1e-300;

bool next_permutation_signed(std::vector<int>& a, std::size_t from, int& sign) {
    const std::size_t len = a.size();
    if (len - from < 2) return false;
    std::size_t i = len - 1;
    while (i > from && a[i - 1] >= a[i]) --i;
    if (i == from) return false;
    const std::size_t pivot = i - 1;
    std::size_t j = len - 1;
    while (a[j] <= a[pivot]) --j;
    std::swap(a[pivot], a[j]);
    sign = -sign;
    std::reverse(a.begin() + long(pivot) + 1, a.end());
    if (((len - pivot - 1) / 2) % 2 == 1) sign = -sign;
    return true;
}

// All permutations with sigma(1) = first.
LeibnizResult leibniz_chunk(const Matrix& a, int first) {
    const int n = a.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    perm[0] = first;
    for (int c = 1, k = 1; c <= n; ++c)
        if (c != first) perm[std::size_t(k++)] = c;
    int sign = (first - 1) % 2 == 0 ? 1 : -1;

    LeibnizResult out;
    do {
        Complex prod = a(1, perm[0]);
        for (int r = 2; r <= n; ++r) prod *= a(r, perm[std::size_t(r - 1)]);
        out.det += double(sign) * prod;
        ++out.terms;
    } while (next_permutation_signed(perm, 1, sign));
    return out;
}

}  // namespace

LeibnizResult leibniz_expand(const Matrix& a, Execution exec) {
    const int n = a.size();
    if (n > 9) throw CapacityError("Leibniz expansion is capped at n = 9");
    std::vector<LeibnizResult> parts(static_cast<std::size_t>(n));
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int c = 1; c <= n; ++c) parts[std::size_t(c - 1)] = leibniz_chunk(a, c);
    } else {
        for (int c = 1; c <= n; ++c) parts[std::size_t(c - 1)] = leibniz_chunk(a, c);
    }
    LeibnizResult total;
    for (const auto& p : parts) {
        total.det += p.det;
        total.terms += p.terms;
    }
    return total;
}

Complex leibniz_det(const Matrix& a, Execution exec) { return leibniz_expand(a, exec).det; }

Complex laplace_det(const Matrix& a) {
    const int n = a.size();
    if (n > 10) throw CapacityError("Laplace expansion is capped at n = 10");
    if (n == 1) return a(1, 1);
    Complex det = 0;
    for (int j = 1; j <= n; ++j) {
        if (a(1, j) == Complex(0.0)) continue;
        const double sign = (1 + j) % 2 == 0 ? 1.0 : -1.0;
        det += sign * a(1, j) * laplace_det(minor_by_deletion(a, 1, j));
    }
    return det;
}

Matrix cofactor_inverse(const Matrix& a) {
    const int n = a.size();
    if (n < 2) throw DomainError("cofactor inverse needs n >= 2");
    const Complex det = laplace_det(a);
    if (det == Complex(0.0)) throw SingularError("determinant is exactly zero");
    Matrix inv(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
            inv(j, i) = sign * laplace_det(minor_by_deletion(a, i, j)) / det;
        }
    return inv;
}

GaussResult gauss_inverse(const Matrix& a) {
    const int n = a.size();
    Matrix m = a;
    Matrix x = Matrix::identity(n);
    Complex det = 1.0;
    for (int k = 1; k <= n; ++k) {
        int p = k;
        double best = std::abs(m(k, k));
        for (int i = k + 1; i <= n; ++i)
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                p = i;
            }
        if (best < kPivotFloor) throw SingularError("zero pivot column in elimination");
        if (p != k) {
            for (int j = 1; j <= n; ++j) {
                std::swap(m(k, j), m(p, j));
                std::swap(x(k, j), x(p, j));
            }
            det = -det;
        }
        const Complex pivot = m(k, k);
        det *= pivot;
        for (int j = 1; j <= n; ++j) {
            m(k, j) /= pivot;
            x(k, j) /= pivot;
        }
        for (int i = 1; i <= n; ++i) {
            if (i == k) continue;
            const Complex f = m(i, k);
            if (f == Complex(0.0)) continue;
            for (int j = 1; j <= n; ++j) {
                m(i, j) -= f * m(k, j);
                x(i, j) -= f * x(k, j);
            }
        }
    }
    GaussResult out{x, 0.0, det};
    out.residual = identity_residual(a, x);
    return out;
}

Complex elimination_det(const Matrix& a) {
    const int n = a.size();
    Matrix m = a;
    Complex det = 1.0;
    for (int k = 1; k <= n; ++k) {
        int p = k;
        double best = std::abs(m(k, k));
        for (int i = k + 1; i <= n; ++i)
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                p = i;
            }
        if (best < kPivotFloor) return 0.0;
        if (p != k) {
            for (int j = 1; j <= n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i <= n; ++i) {
            const Complex f = m(i, k) / m(k, k);
            for (int j = k; j <= n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

}  // namespace telinv
