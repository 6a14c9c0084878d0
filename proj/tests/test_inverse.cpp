#include "telinv/errors.hpp"
#include "telinv/inverse.hpp"
#include "telinv/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <set>

using namespace telinv;

namespace {

const Matrix kThree = support::to_matrix({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
const Matrix kThreeInv = support::to_matrix({{-24, 18, 5}, {20, -15, -4}, {-5, 4, 1}});

constexpr ReprKind kAllReprs[] = {ReprKind::Direct, ReprKind::Gamma, ReprKind::Cosine, ReprKind::Bessel,
                                  ReprKind::Hermite};

double sgn(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

TEST_CASE("closed-form determinant examples") {
    CHECK(closed_form_det(support::to_matrix({{1, 2}, {3, 4}})) == Complex(-2));
    CHECK(closed_form_det(Matrix::identity(5)) == Complex(1));
    for (ReprKind r : kAllReprs) CHECK(closed_form_det(kThree, r) == Complex(1));
    for (int n = 2; n <= 5; ++n) CHECK(closed_form_det(Matrix::identity(n), ReprKind::Gamma) == Complex(1));
}

TEST_CASE("closed-form inverse examples") {
    CHECK(closed_form_inverse(Matrix::identity(4)).inverse == Matrix::identity(4));
    CHECK(closed_form_inverse(support::to_matrix({{2, 0}, {0, 4}})).inverse == Matrix::from_rows({{0.5, 0}, {0, 0.25}}));
    const auto r = closed_form_inverse(kThree);
    CHECK(r.inverse == kThreeInv);
    CHECK(r.det == Complex(1));
    CHECK(!r.near_singular);
    for (ReprKind repr : kAllReprs) CHECK(closed_form_inverse(kThree, repr).inverse == kThreeInv);
}

TEST_CASE("element inverse") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) CHECK(element_inverse(Matrix::identity(3), p, q) == Complex(p == q ? 1 : 0));
    CHECK(element_inverse(support::to_matrix({{2, 0}, {0, 4}}), 1, 1) == Complex(0.5));
    const Matrix a = random_matrix(5, 42, false);
    const Matrix g = gauss_inverse(a).inverse;
    CHECK(std::abs(element_inverse(a, 2, 3) - g(3, 2)) <= 1e-10);
    const Matrix b = random_matrix(6, 43, true);
    const Matrix gb = gauss_inverse(b).inverse;
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q) CHECK(std::abs(element_inverse(b, p, q) - gb(q, p)) <= 1e-9);
    CHECK_THROWS_AS(element_inverse(a, 0, 1), DomainError);
}

TEST_CASE("leading-sign variants give the negated determinant") {
    // Frozen: these sign conventions were resolved against the Leibniz oracle.
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Matrix c = random_matrix(3, 3000 + s, true);
        const Complex det = leibniz_det(c);
        Complex lead_minus = 0;
        for (int l = 1; l <= 3; ++l)
            for (int j = 2; j <= 3; ++j)
                lead_minus -= sgn(j + 1 + l) * c(1, l) * c(2, j - heav(l - j)) * c(3, 5 - j - heav(l - 5 + j));
        CHECK(support::rel_err(lead_minus, -det) <= 1e-12);

        const Matrix d = random_matrix(2, 3100 + s, true);
        Complex gamma2 = 0;
        for (int j = 1; j <= 2; ++j) gamma2 += sgn(j) * d(1, j) * d(2, 1 + kron(j - 1));
        CHECK(support::rel_err(gamma2, -leibniz_det(d)) <= 1e-12);

        const Matrix b = random_matrix(4, 3200 + s, true);
        Complex no_one = 0;
        for (int n = 1; n <= 4; ++n)
            for (int l = 1; l <= 3; ++l)
                for (int j = 1; j <= 2; ++j)
                    no_one += sgn(j + l + n) * b(1, n) * b(2, support::deletion_walk(4, {n}, l)) *
                              b(3, support::deletion_walk(4, {n, l}, j)) * b(4, support::deletion_walk(4, {n, l}, 3 - j));
        CHECK(support::rel_err(no_one, -leibniz_det(b)) <= 1e-12);
    }
}

TEST_CASE("alternate 3 x 3 evaluator") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Matrix c = random_matrix(3, 4000 + s, s % 2 == 0);
        const Complex det = leibniz_det(c);
        for (ReprKind r : kAllReprs) CHECK(support::rel_err(det3_delta_form(c, r), det) <= 1e-12);
    }
    CHECK_THROWS_AS(det3_delta_form(Matrix::identity(4)), DomainError);
}

TEST_CASE("oracle equivalence for n = 2..5") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t s = 0; s < 200; ++s) {
            const Matrix a = random_matrix(n, 10000 * std::uint64_t(n) + s, s % 2 == 1);
            const Complex ref = leibniz_det(a);
            CHECK(support::rel_err(closed_form_det(a), ref) <= 1e-12);
            const auto inv = closed_form_inverse(a);
            CHECK(support::entry_err(inv.inverse, cofactor_inverse(a)) <= 1e-10);
            CHECK(support::rel_err(inv.det, closed_form_det(a)) <= 1e-12);
        }
}

TEST_CASE("gamma path matches the direct path for n = 2..5") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t s = 0; s < 20; ++s) {
            const Matrix a = random_matrix(n, 20000 + 100 * std::uint64_t(n) + s, true);
            CHECK(support::rel_err(closed_form_det(a, ReprKind::Gamma), leibniz_det(a)) <= 1e-12);
            CHECK(support::entry_err(closed_form_inverse(a, ReprKind::Gamma).inverse, cofactor_inverse(a)) <= 1e-10);
        }
}

TEST_CASE("representation independence for n = 3") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Matrix c = random_matrix(3, 5000 + s, true);
        const Complex direct = closed_form_det(c);
        for (ReprKind r : kAllReprs) {
            CHECK(support::rel_err(closed_form_det(c, r), direct) <= 1e-12);
            CHECK(closed_form_det(c, r) == direct);
        }
    }
}

TEST_CASE("sign coherence between denominator and determinant") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t s = 0; s < 10; ++s) {
            const Matrix a = random_matrix(n, 6000 + 10 * std::uint64_t(n) + s, false);
            const Complex det = closed_form_det(a);
            const Complex den = closed_form_inverse(a).det;
            CHECK(support::rel_err(den, det) <= 1e-12);
            CHECK(std::signbit(den.real()) == std::signbit(det.real()));
        }
}

TEST_CASE("closed forms are exact on small integers") {
    std::mt19937_64 rng(99);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 100; ++t) {
            const auto a = support::random_int_matrix(n, rng);
            const Complex exact(double(support::exact_det(a)));
            const Matrix m = support::to_matrix(a);
            CHECK(closed_form_det(m) == exact);
            CHECK(closed_form_det(m, ReprKind::Gamma) == exact);
            CHECK(general_det(m) == exact);
        }
}

TEST_CASE("expand_terms reproduces the signed symmetric group") {
    const auto two = expand_terms(2);
    CHECK(two == std::vector<SignedTerm>{{1, {1, 2}}, {-1, {2, 1}}});
    for (int n = 2; n <= 7; ++n) {
        auto terms = expand_terms(n);
        std::set<std::vector<int>> seen;
        bool parity_ok = true;
        for (const auto& t : terms) {
            seen.insert(t.cols);
            parity_ok = parity_ok && t.sign == support::parity_sign(t.cols);
        }
        long long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(terms.size() == std::size_t(fact));
        CHECK(seen.size() == std::size_t(fact));
        CHECK(parity_ok);
    }
    auto three = expand_terms(3);
    std::sort(three.begin(), three.end());
    CHECK(three == std::vector<SignedTerm>{{-1, {1, 3, 2}}, {-1, {2, 1, 3}}, {-1, {3, 2, 1}},
                                           {1, {1, 2, 3}}, {1, {2, 3, 1}}, {1, {3, 1, 2}}});
    CHECK(expand_terms(5).size() == 120);
    CHECK_THROWS_AS(expand_terms(1), CapacityError);
    CHECK_THROWS_AS(expand_terms(9), CapacityError);
}

TEST_CASE("telescoping engine") {
    const auto id = general_inverse(Matrix::identity(6));
    CHECK(id.det == Complex(1));
    CHECK(id.inverse == Matrix::identity(6));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Matrix a5 = random_matrix(5, 7000 + s, true);
        CHECK(support::entry_err(general_inverse(a5).inverse, closed_form_inverse(a5).inverse) <= 1e-12);
        const Matrix a6 = random_matrix(6, 7100 + s, false);
        const auto g6 = general_inverse(a6);
        CHECK(support::entry_err(g6.inverse, gauss_inverse(a6).inverse) <= 1e-9);
        CHECK(identity_residual(a6, g6.inverse) <= 1e-9);
    }
    for (int n = 2; n <= 4; ++n) {
        const Matrix a = random_matrix(n, 7200 + std::uint64_t(n), false);
        CHECK(identity_residual(a, general_inverse(a).inverse) <= 1e-9);
    }
    CHECK_THROWS_AS(general_det(Matrix::identity(9)), CapacityError);
    CHECK(general_det(Matrix::identity(9), {9}) == Complex(1));
    CHECK_THROWS_AS(general_det(Matrix::identity(1)), DomainError);
}

TEST_CASE("serial and parallel inverses are bitwise identical") {
    for (int n = 2; n <= 7; ++n) {
        const Matrix a = random_matrix(n, 8000 + std::uint64_t(n), true);
        const Method m = default_method(n);
        const Matrix serial = invert(a, m, ReprKind::Direct, Execution::Serial).inverse;
        for (int threads : {1, 2, 4}) {
            omp_set_num_threads(threads);
            CHECK(invert(a, m, ReprKind::Direct, Execution::Parallel).inverse == serial);
        }
    }
}

TEST_CASE("dispatch, singular and unsupported inputs") {
    const Matrix a = random_matrix(4, 8100, false);
    const Complex ref = leibniz_det(a);
    for (Method m : {Method::ClosedForm, Method::Telescope, Method::Oracle}) {
        CHECK(parse_method(to_string(m)) == m);
        CHECK(support::rel_err(determinant(a, m), ref) <= 1e-12);
        CHECK(support::entry_err(invert(a, m).inverse, cofactor_inverse(a)) <= 1e-10);
    }
    CHECK_THROWS_AS(parse_method("lu"), DomainError);
    CHECK(default_method(5) == Method::ClosedForm);
    CHECK(default_method(6) == Method::Telescope);

    const Matrix sing = support::to_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK_THROWS_AS(closed_form_inverse(sing), SingularError);
    CHECK_THROWS_AS(general_inverse(sing), SingularError);

    const Matrix near = Matrix::from_rows({{1, 1}, {1, 1 + 1e-14}});
    const auto r = closed_form_inverse(near);
    CHECK(r.near_singular);
    CHECK(!closed_form_inverse(Matrix::identity(2)).near_singular);

    CHECK_THROWS_AS(closed_form_det(Matrix::identity(6)), UnsupportedError);
    CHECK_THROWS_AS(closed_form_det(Matrix::identity(1)), UnsupportedError);
    CHECK_THROWS_AS(closed_form_det(Matrix::identity(4), ReprKind::Cosine), UnsupportedError);
    CHECK_THROWS_AS(closed_form_inverse(Matrix::identity(5), ReprKind::Bessel), UnsupportedError);
    CHECK_THROWS_AS(determinant(a, Method::Telescope, ReprKind::Gamma), UnsupportedError);
    CHECK_THROWS_AS(invert(a, Method::Oracle, ReprKind::Hermite), UnsupportedError);
}
