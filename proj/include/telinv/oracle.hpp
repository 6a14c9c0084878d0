#pragma once

// Reference implementations that share no code path with the closed forms.

#include "telinv/execution.hpp"
#include "telinv/matrix.hpp"

#include <cstdint>

namespace telinv {

struct LeibnizResult {
    Complex det;
    std::uint64_t terms = 0;
};

// Sum over all n! permutations in lexicographic order, parity tracked
// incrementally.  The range is split by the image of row 1; partial sums
// are combined in that order regardless of execution mode.
LeibnizResult leibniz_expand(const Matrix& a, Execution exec = Execution::Serial);
Complex leibniz_det(const Matrix& a, Execution exec = Execution::Serial);

// Recursive first-row Laplace expansion over minors by deletion.
Complex laplace_det(const Matrix& a);

Matrix cofactor_inverse(const Matrix& a);

struct GaussResult {
    Matrix inverse;
    double residual = 0;  // max |A X - I|
    Complex det;          // signed product of pivots
};

GaussResult gauss_inverse(const Matrix& a);

// Product of partial-pivoting pivots with the swap sign; 0 for a column
// whose entries all fall below 1e-300.
Complex elimination_det(const Matrix& a);

}  // namespace telinv
