#include "telinv/errors.hpp"
#include "telinv/harness.hpp"

#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <cmath>

using namespace telinv;

TEST_CASE("mse examples") {
    const Matrix a = random_matrix(5, 1, false);
    CHECK(mse(a, a) == 0.0);
    Matrix b = a;
    b(3, 4) += 1.0;
    CHECK(mse(a, b) == doctest::Approx(0.04).epsilon(1e-12));
    Matrix c = Matrix::identity(2);
    c(1, 2) += Complex(1, 1);
    CHECK(mse(Matrix::identity(2), c) == 0.5);
    CHECK_THROWS_AS(mse(Matrix::identity(2), Matrix::identity(3)), DomainError);
}

TEST_CASE("trial seeds are distinct per trial and attempt") {
    CHECK(trial_seed(1, 1, 0) != trial_seed(1, 2, 0));
    CHECK(trial_seed(1, 1, 0) != trial_seed(1, 1, 1));
    CHECK(trial_seed(1, 1, 0) != trial_seed(2, 1, 0));
    CHECK(trial_seed(7, 3, 2) == trial_seed(7, 3, 2));
}

TEST_CASE("run_trials is deterministic across runs and worker counts") {
    TrialConfig cfg;
    cfg.trials = 100;
    cfg.seed = 17;
    const auto ref = run_trials(cfg);
    CHECK(ref.mse == run_trials(cfg).mse);
    cfg.exec = Execution::Serial;
    const auto serial = run_trials(cfg);
    CHECK(serial.mse == ref.mse);
    CHECK(summary_json(serial) == summary_json(ref));
    CHECK(histogram_csv(serial) == histogram_csv(ref));
    cfg.exec = Execution::Parallel;
    for (int threads : {1, 2, 5}) {
        omp_set_num_threads(threads);
        CHECK(run_trials(cfg).mse == ref.mse);
    }
}

TEST_CASE("closed-form 5 x 5 trials stay within the error bounds") {
    TrialConfig cfg;
    cfg.trials = 1000;
    cfg.seed = 2024;
    const auto r = run_trials(cfg);
    CHECK(r.trials == 1000);
    CHECK(*std::max_element(r.mse.begin(), r.mse.end()) < 1e-8);
    CHECK(r.median_db < -200);
    CHECK(r.redraws == 0);
    long total = 0;
    for (const auto& b : r.bins) total += b.count;
    CHECK(total == 1000);
    CHECK(r.min_db <= r.median_db);
    CHECK(r.median_db <= r.max_db);
}

TEST_CASE("other sizes, methods and complex entries") {
    TrialConfig cfg;
    cfg.trials = 20;
    cfg.size = 6;
    cfg.method = Method::Telescope;
    cfg.complex = true;
    const auto r = run_trials(cfg);
    CHECK(*std::max_element(r.mse.begin(), r.mse.end()) < 1e-16);

    cfg.size = 3;
    cfg.method = Method::ClosedForm;
    cfg.repr = ReprKind::Bessel;
    CHECK(run_trials(cfg).trials == 20);

    cfg.size = 6;
    CHECK_THROWS_AS(run_trials(cfg), UnsupportedError);
    cfg.size = 9;
    CHECK_THROWS_AS(run_trials(cfg), DomainError);
    cfg.size = 5;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_trials(cfg), DomainError);
}

TEST_CASE("histogram binning") {
    const auto r = build_histogram({1e-30, 1e-31, 1e-29, 0.0}, 2);
    CHECK(r.trials == 4);
    CHECK(r.redraws == 2);
    CHECK(r.min_db == -1000.0);
    CHECK(r.max_db == doctest::Approx(-290.0));
    CHECK(r.median_db == doctest::Approx(-305.0));
    CHECK(r.bins.front().lo_db == -1000.0);
    CHECK(r.bins.front().count == 1);
    CHECK(r.bins.back().hi_db >= r.max_db);
    long total = 0;
    for (const auto& b : r.bins) {
        CHECK(b.hi_db - b.lo_db == 2.0);
        total += b.count;
    }
    CHECK(total == 4);

    const auto m = build_histogram({1e-10, 1e-10, 1e-12}, 0);
    CHECK(m.mode_db == -101.0);
    CHECK(m.median_db == doctest::Approx(-100.0));

    CHECK(histogram_csv(m) == "bin_lo_db,bin_hi_db,count\n-120.0,-118.0,1\n-118.0,-116.0,0\n-116.0,-114.0,0\n"
                              "-114.0,-112.0,0\n-112.0,-110.0,0\n-110.0,-108.0,0\n-108.0,-106.0,0\n-106.0,-104.0,0\n"
                              "-104.0,-102.0,0\n-102.0,-100.0,2\n");
    CHECK(summary_json(build_histogram({1.0}, 0)) ==
          R"({"trials":1,"min_db":0,"max_db":0,"median_db":0,"mode_db":1,"redraws":0})");
}

TEST_CASE("sparse suite") {
    const auto cases = sparse_suite({1, 2, 3, 4, 5});
    REQUIRE(cases.size() == 3);
    for (const auto& c : cases) {
        INFO(c.id);
        CHECK(c.pass);
        CHECK(c.error.empty());
    }
    CHECK(cases[0].det_formula == Complex(120));
    CHECK(cases[0].det_oracle == Complex(120));

    const auto ones = sparse_suite({1, 1, 1, 1, 1});
    for (const auto& c : ones) CHECK(c.pass);
    const Matrix p = sparse_case(2, {1, 1, 1, 1, 1});
    const Matrix inv = closed_form_inverse(p).inverse;
    for (int r = 1; r <= 5; ++r)
        for (int c = 1; c <= 5; ++c) CHECK(inv(r, c) == p(c, r));

    for (const auto& c : sparse_suite({1, 1e-8, 1, 1, 1})) CHECK(c.pass);
    for (const auto& c : sparse_suite({Complex(1, 1), 2, Complex(0, -3), 4, 5})) CHECK(c.pass);
}

TEST_CASE("entrywise error is relative above unit scale") {
    const Matrix a = Matrix::from_rows({{100, 0.5}, {0, 1}});
    const Matrix b = Matrix::from_rows({{101, 0.25}, {0, 1}});
    CHECK(entrywise_error(b, a) == doctest::Approx(0.25));
    CHECK(entrywise_error(a, a) == 0.0);
}
