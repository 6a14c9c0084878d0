#include "telinv/errors.hpp"
#include "telinv/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <omp.h>

using namespace telinv;

namespace {

const Matrix kThree = support::to_matrix({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
const Matrix kThreeInv = support::to_matrix({{-24, 18, 5}, {20, -15, -4}, {-5, 4, 1}});

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("Leibniz examples") {
    CHECK(leibniz_det(support::to_matrix({{1, 2}, {3, 4}})) == Complex(-2));
    for (int n = 1; n <= 6; ++n) CHECK(leibniz_det(Matrix::identity(n)) == Complex(1));
    CHECK(leibniz_det(sparse_case(1, {1, 2, 3, 4, 5})) == Complex(120));
    CHECK(leibniz_det(kThree) == Complex(1));
    CHECK_THROWS_AS(leibniz_det(Matrix::identity(10)), CapacityError);
}

TEST_CASE("Leibniz term count is n!") {
    for (int n = 1; n <= 9; ++n) CHECK(leibniz_expand(Matrix::identity(n)).terms == std::uint64_t(factorial(n)));
}

TEST_CASE("Leibniz matches exact integer determinants") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 7; ++n)
        for (int t = 0; t < 5; ++t) {
            const auto a = support::random_int_matrix(n, rng);
            CHECK(leibniz_det(support::to_matrix(a)) == Complex(double(support::exact_det(a))));
        }
}

TEST_CASE("Leibniz is bitwise identical across execution modes and thread counts") {
    const Matrix a = random_matrix(8, 123, true);
    const Complex serial = leibniz_det(a, Execution::Serial);
    for (int threads : {1, 2, 3, 8}) {
        omp_set_num_threads(threads);
        CHECK(leibniz_det(a, Execution::Parallel) == serial);
    }
}

TEST_CASE("determinant oracles agree") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t s = 0; s < 10; ++s) {
            const Matrix a = random_matrix(n, 1000 + s, s % 2 == 1);
            const Complex ref = leibniz_det(a);
            CHECK(support::rel_err(laplace_det(a), ref) <= 1e-12);
            CHECK(support::rel_err(elimination_det(a), ref) <= 1e-12);
            CHECK(support::rel_err(gauss_inverse(a).det, ref) <= 1e-12);
        }
}

TEST_CASE("cofactor inverse") {
    const Complex a(1.5, 0.5), b(-2, 1), c(0.25, 3), d(4, -1);
    const Matrix m = Matrix::from_rows({{a, b}, {c, d}});
    const Complex det = a * d - b * c;
    const Matrix want = Matrix::from_rows({{d / det, -b / det}, {-c / det, a / det}});
    CHECK(max_abs_difference(cofactor_inverse(m), want) <= 1e-15);
    CHECK(cofactor_inverse(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(cofactor_inverse(kThree) == kThreeInv);
    CHECK_THROWS_AS(cofactor_inverse(support::to_matrix({{1, 2}, {2, 4}})), SingularError);
    CHECK_THROWS_AS(cofactor_inverse(Matrix::identity(1)), DomainError);
}

TEST_CASE("cofactor inverse is an involution on well-conditioned 3 x 3") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Matrix a = random_matrix(3, 500 + s, s % 2 == 0);
        if (gauss_inverse(a).residual > 1e-12) continue;
        CHECK(support::entry_err(cofactor_inverse(cofactor_inverse(a)), a) <= 1e-8);
    }
}

TEST_CASE("Gaussian elimination inverse") {
    const auto id = gauss_inverse(Matrix::identity(5));
    CHECK(id.inverse == Matrix::identity(5));
    CHECK(id.residual == 0.0);
    CHECK(id.det == Complex(1));

    const auto dg = gauss_inverse(support::to_matrix({{2, 0}, {0, 4}}));
    CHECK(dg.inverse == Matrix::from_rows({{0.5, 0}, {0, 0.25}}));
    CHECK(dg.det == Complex(8));

    for (std::uint64_t s = 0; s < 20; ++s) {
        const Matrix a = random_matrix(5, 900 + s, false);
        const auto g = gauss_inverse(a);
        CHECK(support::entry_err(g.inverse, cofactor_inverse(a)) <= 1e-10);
        CHECK(g.residual <= 1e-12);
    }
    CHECK_THROWS_AS(gauss_inverse(support::to_matrix({{1, 2}, {2, 4}})), SingularError);
    CHECK(elimination_det(support::to_matrix({{1, 2}, {2, 4}})) == Complex(0));
}
