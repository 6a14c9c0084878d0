#pragma once

// Monte-Carlo comparison of formula inverses against elimination, and the
// sparse-pattern conformance suite.

#include "telinv/execution.hpp"
#include "telinv/inverse.hpp"
#include "telinv/matrix.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace telinv {

struct TrialConfig {
    long trials = 1000;
    int size = 5;
    std::uint64_t seed = 1;
    Method method = Method::ClosedForm;
    ReprKind repr = ReprKind::Direct;
    bool complex = false;
    Execution exec = Execution::Parallel;
};

struct HistogramBin {
    double lo_db = 0;
    double hi_db = 0;
    long count = 0;
};

struct HistogramReport {
    double bin_width_db = 2.0;
    double clamp_floor = 1e-100;
    std::vector<HistogramBin> bins;
    double min_db = 0;
    double max_db = 0;
    double median_db = 0;
    double mode_db = 0;
    long trials = 0;
    long redraws = 0;
    std::vector<double> mse;  // raw per-trial values in trial order
};

// Mean of |X_ij - Y_ij|^2 over all entries.
double mse(const Matrix& x, const Matrix& y);

// Seed of the matrix drawn for `trial` on its `attempt`-th try.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt);

HistogramReport run_trials(const TrialConfig& cfg);

// Bins already computed MSE values; used by run_trials.
HistogramReport build_histogram(std::vector<double> mse_values, long redraws);

std::string histogram_csv(const HistogramReport& r);
std::string summary_json(const HistogramReport& r);

struct SparseCaseResult {
    int id = 0;
    Complex det_formula;
    Complex det_oracle;
    double det_rel_err = 0;
    double inv_max_err = 0;  // max |X - Y| / max(1, |Y|) over entries
    bool pass = false;
    std::string error;       // set when an engine threw
};

std::vector<SparseCaseResult> sparse_suite(const std::array<Complex, 5>& values, double tol = 1e-12);

// max over entries of |x - ref| / max(1, |ref|)
double entrywise_error(const Matrix& x, const Matrix& ref);

}  // namespace telinv
