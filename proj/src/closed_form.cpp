#include "telinv/errors.hpp"
#include "telinv/idx.hpp"
#include "telinv/inverse.hpp"
#include "parallel.hpp"

#include <string>

namespace telinv {

namespace {

double sgn(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

int gam(int n) { return int(gamma_int(n)); }

void require_supported(int n, ReprKind repr) {
    if (n < 2 || n > 5)
        throw UnsupportedError("closed forms exist for n = 2..5, not n = " + std::to_string(n));
    if (repr == ReprKind::Direct || repr == ReprKind::Gamma) return;
    if (n != 3)
        throw UnsupportedError("the " + std::string(to_string(repr)) + " encoding only covers the 3 x 3 indices");
}

// 2 x 2 ------------------------------------------------------------------

Complex det2(const Matrix& d, ReprKind repr) {
    Complex s = 0;
    if (repr == ReprKind::Gamma) {
        // The gamma form sums (-1)^j, which is the negated determinant.
        for (int j = 1; j <= 2; ++j) s += sgn(j) * d(1, j) * d(2, 1 + repr_delta(j, 1, repr));
        return -s;
    }
    for (int j = 1; j <= 2; ++j) s += sgn(1 + j) * d(1, j) * d(2, 3 - j);
    return s;
}

Complex cof2(const Matrix& d, int i, int j, ReprKind repr) {
    if (repr == ReprKind::Gamma) return sgn(i + j) * d(1 + repr_delta(i, 1, repr), 1 + repr_delta(j, 1, repr));
    return sgn(i + j) * d(3 - i, 3 - j);
}

// 3 x 3 ------------------------------------------------------------------

Complex det3(const Matrix& c, ReprKind repr) {
    Complex s = 0;
    if (repr == ReprKind::Gamma) {
        // j runs downward so the terms accumulate in the same order as the
        // Heaviside form, which keeps the two bitwise identical.
        for (int l = 1; l <= 3; ++l)
            for (int j = 1; j >= 0; --j) {
                const int g = int(sgn(j)) * gam(l);
                s += sgn(j + l) * c(1, l) * c(2, 4 - g - j * (l + 2)) * c(3, g + j * (l + 2) - l + 2);
            }
        return s;
    }
    auto H = [repr](int z, int p) { return repr_heav(z, p, repr); };
    for (int l = 1; l <= 3; ++l)
        for (int j = 2; j <= 3; ++j)
            s += sgn(j + 1 + l) * c(1, l) * c(2, j - H(l, j)) * c(3, 5 - j - H(l, 5 - j));
    return s;
}

Complex cof3(const Matrix& c, int k, int l, ReprKind repr) {
    Complex s = 0;
    if (repr == ReprKind::Gamma) {
        for (int j = 0; j <= 1; ++j) {
            const int g = int(sgn(j)) * gam(l);
            s += sgn(j + k + l) * c(gam(k) - k + 2, g + j * (l + 2) - l + 2) * c(4 - gam(k), 4 - g - j * (l + 2));
        }
        return s;
    }
    auto H = [repr](int z, int p) { return repr_heav(z, p, repr); };
    for (int j = 2; j <= 3; ++j)
        s += sgn(j + k + l) * c(2 - H(k, 2), j - H(l, j)) * c(3 - H(k, 3), 5 - j - H(l, 5 - j));
    return s;
}

// 4 x 4 ------------------------------------------------------------------

struct Index4 {
    ReprKind repr;
    IndexCalculus calc{repr};

    int row(int M, int m) const { return repr == ReprKind::Gamma ? gamma_row_offset(M, m) : M - calc.heav(m - M); }
    int kap(int l, int n) const { return repr == ReprKind::Gamma ? gamma_kappa(l, n) : forms::kappa4(l, n, calc); }
    int lam(int j, int l, int n) const {
        return repr == ReprKind::Gamma ? gamma_lambda(j, l, n) : forms::lambda4(j, l, n, calc);
    }
    int mu(int j, int l, int n) const { return repr == ReprKind::Gamma ? gamma_mu(j, l, n) : forms::mu4(j, l, n, calc); }
};

Complex det4(const Matrix& b, ReprKind repr) {
    const Index4 ix{repr};
    Complex s = 0;
    for (int n = 1; n <= 4; ++n)
        for (int l = 1; l <= 3; ++l)
            for (int j = 1; j <= 2; ++j)
                s += sgn(1 + j + l + n) * b(1, n) * b(2, ix.kap(l, n)) * b(3, ix.lam(j, l, n)) * b(4, ix.mu(j, l, n));
    return s;
}

Complex cof4(const Matrix& b, int m, int n, ReprKind repr) {
    const Index4 ix{repr};
    const int r2 = ix.row(2, m), r3 = ix.row(3, m), r4 = ix.row(4, m);
    Complex s = 0;
    for (int l = 1; l <= 3; ++l)
        for (int j = 1; j <= 2; ++j)
            s += sgn(j + l) * b(r2, ix.kap(l, n)) * b(r3, ix.lam(j, l, n)) * b(r4, ix.mu(j, l, n));
    return sgn(m + n) * s;
}

// 5 x 5 ------------------------------------------------------------------

Complex det5(const Matrix& a, ReprKind repr) {
    const IndexCalculus c(repr);
    Complex s = 0;
    for (int q = 1; q <= 5; ++q)
        for (int n = 1; n <= 4; ++n)
            for (int l = 1; l <= 3; ++l)
                for (int j = 1; j <= 2; ++j)
                    s += sgn(j + l + n + q) * a(1, q) * a(2, forms::kappa_nest(n, q, c)) *
                         a(3, forms::lambda_nest(l, n, q, c)) * a(4, forms::mu_nest(j, l, n, q, c)) *
                         a(5, forms::nu_nest(j, l, n, q, c));
    return s;
}

// Innermost three sums of the loop nest for minor (p, q).
Complex nest5(const Matrix& a, int p, int q, const IndexCalculus& c) {
    const int kr = 2 - c.heav(p - 2), lr = 3 - c.heav(p - 3), mr = 4 - c.heav(p - 4), nr = 5 - c.heav(p - 5);
    Complex sum_n = 0;
    for (int n = 1; n <= 4; ++n) {
        Complex sum_l = 0;
        for (int l = 1; l <= 3; ++l) {
            Complex sum_j = 0;
            for (int j = 1; j <= 2; ++j)
                sum_j += sgn(1 + j) * a(mr, forms::mu_nest(j, l, n, q, c)) * a(nr, forms::nu_nest(j, l, n, q, c));
            sum_l += sgn(l) * a(lr, forms::lambda_nest(l, n, q, c)) * sum_j;
        }
        sum_n += sgn(n) * a(kr, forms::kappa_nest(n, q, c)) * sum_l;
    }
    return sum_n;
}

Complex cof5(const Matrix& a, int p, int q, ReprKind repr) { return sgn(p + q) * nest5(a, p, q, IndexCalculus(repr)); }

Complex denominator5(const Matrix& a, ReprKind repr) {
    const IndexCalculus c(repr);
    Complex s = 0;
    for (int q = 1; q <= 5; ++q) s += sgn(1 + q) * a(1, q) * nest5(a, 1, q, c);
    return s;
}

// Dispatch ---------------------------------------------------------------

Complex cofactor(const Matrix& a, int p, int q, ReprKind repr) {
    switch (a.size()) {
        case 2: return cof2(a, p, q, repr);
        case 3: return cof3(a, p, q, repr);
        case 4: return cof4(a, p, q, repr);
        default: return cof5(a, p, q, repr);
    }
}

Complex inverse_denominator(const Matrix& a, ReprKind repr) {
    return a.size() == 5 ? denominator5(a, repr) : closed_form_det(a, repr);
}

}  // namespace

bool is_near_singular(const Matrix& a, Complex det) {
    double scale = 1.0;
    for (int i = 1; i <= a.size(); ++i) {
        double row = 0;
        for (int j = 1; j <= a.size(); ++j) row = std::max(row, std::abs(a(i, j)));
        scale *= row;
    }
    return std::abs(det) < 1e-12 * scale;
}

Complex closed_form_det(const Matrix& a, ReprKind repr) {
    require_supported(a.size(), repr);
    switch (a.size()) {
        case 2: return det2(a, repr);
        case 3: return det3(a, repr);
        case 4: return det4(a, repr);
        default: return det5(a, repr);
    }
}

Complex det3_delta_form(const Matrix& c, ReprKind repr) {
    if (c.size() != 3) throw DomainError("det3_delta_form needs a 3 x 3 matrix");
    Complex s = 0;
    for (int l = 1; l <= 3; ++l) {
        const int lead = 1 + repr_delta(l, 1, repr);
        const int trail = 3 - repr_heav(l, 3, repr);
        s += sgn(l) * c(1, l) * (c(2, trail) * c(3, lead) - c(2, lead) * c(3, trail));
    }
    return s;
}

InverseResult closed_form_inverse(const Matrix& a, ReprKind repr, Execution exec) {
    const int n = a.size();
    require_supported(n, repr);
    const Complex det = inverse_denominator(a, repr);
    if (det == Complex(0.0)) throw SingularError("determinant is exactly zero");
    Matrix inv(n);
    detail::for_each_index(n * n, exec, [&](int k) {
        const int p = k / n + 1, q = k % n + 1;
        inv(q, p) = cofactor(a, p, q, repr) / det;
    });
    return {inv, det, is_near_singular(a, det)};
}

Complex element_inverse(const Matrix& a, int p, int q, ReprKind repr) {
    const int n = a.size();
    if (p < 1 || p > n || q < 1 || q > n) throw DomainError("element position out of range");
    if (n > 5) {
        if (repr != ReprKind::Direct) throw UnsupportedError("the telescoping engine uses the direct encoding");
        const Complex det = general_det(a);
        if (det == Complex(0.0)) throw SingularError("determinant is exactly zero");
        return sgn(p + q) * general_det(minor_by_formula(a, p, q)) / det;
    }
    require_supported(n, repr);
    const Complex det = inverse_denominator(a, repr);
    if (det == Complex(0.0)) throw SingularError("determinant is exactly zero");
    return cofactor(a, p, q, repr) / det;
}

}  // namespace telinv
