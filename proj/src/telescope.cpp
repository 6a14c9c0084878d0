#include "telinv/errors.hpp"
#include "telinv/idx.hpp"
#include "telinv/inverse.hpp"
#include "telinv/oracle.hpp"
#include "parallel.hpp"

#include <string>

namespace telinv {

namespace {

double sgn(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

// First-row expansion of the surrogate minor, recursing on minors taken by
// the index formula until the 2 x 2 base case.
Complex telescope(const Matrix& m) {
    const int n = m.size();
    if (n == 1) return m(1, 1);
    Complex s = 0;
    if (n == 2) {
        for (int j = 1; j <= 2; ++j) s += sgn(1 + j) * m(1, j) * m(2, 3 - j);
        return s;
    }
    for (int s0 = 1; s0 <= n; ++s0) s += sgn(1 + s0) * m(1, s0) * telescope(minor_by_formula(m, 1, s0));
    return s;
}

void check_size(int n, int cap) {
    if (n < 2) throw DomainError("the telescoping engine needs n >= 2");
    if (n > cap)
        throw CapacityError("n = " + std::to_string(n) + " exceeds the telescoping cap of " + std::to_string(cap));
}

// Column of the original matrix reached from column `base` at depth K.
int resolve(int K, int base, const std::vector<int>& chain) {
    return K == 0 ? base : primed_index(K, {base, chain});
}

int resolve_reflected(int K, int base, const std::vector<int>& chain) {
    return K == 0 ? 3 - base : reflected_primed_index(K, {base, chain});
}

void expand(int n, int K, std::vector<int>& row_chain, std::vector<int>& col_chain, int sign, std::vector<int>& cols,
            std::vector<SignedTerm>& out) {
    const int m = n - K;
    const int row = resolve(K, 1, row_chain);
    if (m == 2) {
        const int row2 = resolve(K, 2, row_chain);
        for (int s = 1; s <= 2; ++s) {
            cols[std::size_t(row - 1)] = resolve(K, s, col_chain);
            cols[std::size_t(row2 - 1)] = resolve_reflected(K, s, col_chain);
            out.push_back({sign * int(sgn(1 + s)), cols});
        }
        return;
    }
    for (int s = 1; s <= m; ++s) {
        cols[std::size_t(row - 1)] = resolve(K, s, col_chain);
        row_chain.push_back(1);
        col_chain.push_back(s);
        expand(n, K + 1, row_chain, col_chain, sign * int(sgn(1 + s)), cols, out);
        row_chain.pop_back();
        col_chain.pop_back();
    }
}

}  // namespace

Complex general_det(const Matrix& a, const TelescopeOptions& opt) {
    check_size(a.size(), opt.size_cap);
    return telescope(a);
}

InverseResult general_inverse(const Matrix& a, const TelescopeOptions& opt) {
    const int n = a.size();
    check_size(n, opt.size_cap);
    const Complex det = telescope(a);
    if (det == Complex(0.0)) throw SingularError("determinant is exactly zero");
    Matrix inv(n);
    detail::for_each_index(n * n, opt.exec, [&](int k) {
        const int r0 = k / n + 1, s0 = k % n + 1;
        inv(s0, r0) = sgn(r0 + s0) * telescope(minor_by_formula(a, r0, s0)) / det;
    });
    return {inv, det, is_near_singular(a, det)};
}

std::vector<SignedTerm> expand_terms(int n) {
    if (n < 2 || n > 8) throw CapacityError("term expansion covers n = 2..8");
    std::vector<SignedTerm> out;
    std::vector<int> row_chain, col_chain, cols(std::size_t(n), 0);
    expand(n, 0, row_chain, col_chain, 1, cols, out);
    return out;
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed";
        case Method::Telescope: return "telescope";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    for (Method m : {Method::ClosedForm, Method::Telescope, Method::Oracle})
        if (to_string(m) == name) return m;
    throw DomainError("unknown method '" + std::string(name) + "'");
}

Method default_method(int n) { return n <= 5 ? Method::ClosedForm : Method::Telescope; }

namespace {

void require_direct(Method m, ReprKind repr) {
    if (repr != ReprKind::Direct)
        throw UnsupportedError("method '" + std::string(to_string(m)) + "' only uses the direct encoding");
}

}  // namespace

Complex determinant(const Matrix& a, Method method, ReprKind repr) {
    switch (method) {
        case Method::ClosedForm: return closed_form_det(a, repr);
        case Method::Telescope: require_direct(method, repr); return general_det(a);
        case Method::Oracle: require_direct(method, repr); return leibniz_det(a);
    }
    return 0;
}

InverseResult invert(const Matrix& a, Method method, ReprKind repr, Execution exec) {
    switch (method) {
        case Method::ClosedForm: return closed_form_inverse(a, repr, exec);
        case Method::Telescope: require_direct(method, repr); return general_inverse(a, {8, exec});
        case Method::Oracle: {
            require_direct(method, repr);
            Matrix inv = cofactor_inverse(a);
            const Complex det = laplace_det(a);
            return {inv, det, is_near_singular(a, det)};
        }
    }
    return {};
}

}  // namespace telinv
