#pragma once

// Closed-form and telescoping determinant/inverse engines.

#include "telinv/execution.hpp"
#include "telinv/gfn.hpp"
#include "telinv/matrix.hpp"

#include <string_view>
#include <vector>

namespace telinv {

enum class Method { ClosedForm, Telescope, Oracle };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

struct InverseResult {
    Matrix inverse;
    Complex det;
    bool near_singular = false;
};

// |det| below 1e-12 times the product of the row maxima.
bool is_near_singular(const Matrix& a, Complex det);

// n in 2..5.  Direct and Gamma cover every size; Cosine, Bessel and Hermite
// only n = 3.
Complex closed_form_det(const Matrix& a, ReprKind repr = ReprKind::Direct);

InverseResult closed_form_inverse(const Matrix& a, ReprKind repr = ReprKind::Direct,
                                  Execution exec = Execution::Serial);

// Entry (row q, column p) of the inverse, built from the (p, q) minor.
// Closed form for n <= 5, telescoping beyond.
Complex element_inverse(const Matrix& a, int p, int q, ReprKind repr = ReprKind::Direct);

// 3 x 3 determinant written with delta(k-1) for the leading index and
// H(k-3) for the trailing one.  Kept as a cross-check of the main form.
Complex det3_delta_form(const Matrix& a, ReprKind repr = ReprKind::Direct);

struct TelescopeOptions {
    int size_cap = 8;
    Execution exec = Execution::Serial;
};

Complex general_det(const Matrix& a, const TelescopeOptions& opt = {});
InverseResult general_inverse(const Matrix& a, const TelescopeOptions& opt = {});

struct SignedTerm {
    int sign = 1;
    std::vector<int> cols;  // cols[i-1] is the column used in row i

    bool operator==(const SignedTerm&) const = default;
    auto operator<=>(const SignedTerm&) const = default;
};

// Runs the telescoping recursion symbolically and returns one term per
// product, every index resolved through primed_index.
std::vector<SignedTerm> expand_terms(int n);

Complex determinant(const Matrix& a, Method method, ReprKind repr = ReprKind::Direct);
InverseResult invert(const Matrix& a, Method method, ReprKind repr = ReprKind::Direct,
                     Execution exec = Execution::Serial);

// Closed form for n <= 5, telescope otherwise.
Method default_method(int n);

}  // namespace telinv
