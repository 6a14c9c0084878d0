#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace telinv {

using Complex = std::complex<double>;

// Square matrix with 1-based element access.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n);
    Matrix(int n, std::vector<Complex> data);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Complex>>& rows);

    int size() const noexcept { return n_; }

    const Complex& operator()(int r, int c) const noexcept { return data_[std::size_t((r - 1) * n_ + (c - 1))]; }
    Complex& operator()(int r, int c) noexcept { return data_[std::size_t((r - 1) * n_ + (c - 1))]; }

    // Range-checked access; throws DomainError.
    const Complex& at(int r, int c) const;

    const std::vector<Complex>& data() const noexcept { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    int n_ = 0;
    std::vector<Complex> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

// max |(A X)_ij - I_ij|
double identity_residual(const Matrix& a, const Matrix& x);

double max_abs_difference(const Matrix& a, const Matrix& b);

// Row r1 of a minor with row r0 deleted maps to this row of the parent.
constexpr int minor_index_heaviside(int r1, int r0) noexcept { return r1 + 1 - (r0 - r1 - 1 >= 0 ? 1 : 0); }

// The same map written as r1 plus a running count of Kronecker deltas.
int minor_index_kronecker(int r1, int r0);

Matrix minor_by_deletion(const Matrix& a, int r0, int s0);
Matrix minor_by_formula(const Matrix& a, int r0, int s0);

// Counter-based splitmix64: the value at position `counter` of the stream
// seeded with `seed`.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter);

class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : seed_(seed) {}

    double uniform();  // in (0, 1]
    double normal();

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    double spare_ = 0;
    bool has_spare_ = false;
};

Matrix random_matrix(int n, std::uint64_t seed, bool complex);

// The three maximally sparse 5 x 5 test patterns.
Matrix sparse_case(int id, const std::array<Complex, 5>& values);

Matrix parse_matrix(std::string_view text);
std::string write_matrix(const Matrix& a);

// Decimal with 17 significant digits.
std::string format_real(double v);

}  // namespace telinv
