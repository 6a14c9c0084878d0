#include "telinv/harness.hpp"

#include "telinv/errors.hpp"
#include "telinv/oracle.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace telinv {

namespace {

constexpr std::uint64_t kMaxAttempts = 64;

}  // namespace

double mse(const Matrix& x, const Matrix& y) {
    if (x.size() != y.size()) throw DomainError("mse needs matrices of equal size");
    double s = 0;
    for (std::size_t k = 0; k < x.data().size(); ++k) s += std::norm(x.data()[k] - y.data()[k]);
    return std::max(s / (double(x.size()) * x.size()), 0.0);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt) {
    return splitmix64(splitmix64(seed, trial), attempt);
}

HistogramReport run_trials(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw DomainError("trials must be positive");
    if (cfg.size < 2 || cfg.size > 8) throw DomainError("trial size must lie in 2..8");
    // Rejects unsupported (size, method, repr) before any work is done.
    invert(Matrix::identity(cfg.size), cfg.method, cfg.repr);

    std::vector<double> values(std::size_t(cfg.trials));
    std::vector<int> attempts(std::size_t(cfg.trials));
    detail::for_each_index(int(cfg.trials), cfg.exec, [&](int i) {
        const std::uint64_t r = std::uint64_t(i) + 1;
        for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
            const Matrix a = random_matrix(cfg.size, trial_seed(cfg.seed, r, attempt), cfg.complex);
            try {
                const InverseResult formula = invert(a, cfg.method, cfg.repr, Execution::Serial);
                const GaussResult reference = gauss_inverse(a);
                values[std::size_t(i)] = mse(formula.inverse, reference.inverse);
                attempts[std::size_t(i)] = int(attempt);
                return;
            } catch (const SingularError&) {
            }
        }
        throw SingularError("trial " + std::to_string(r) + " stayed singular after every redraw");
    });

    long redraws = 0;
    for (int a : attempts) redraws += a;
    return build_histogram(std::move(values), redraws);
}

HistogramReport build_histogram(std::vector<double> mse_values, long redraws) {
    HistogramReport r;
    r.trials = long(mse_values.size());
    r.redraws = redraws;
    if (mse_values.empty()) return r;

    std::vector<double> db(mse_values.size());
    for (std::size_t k = 0; k < db.size(); ++k) db[k] = 10.0 * std::log10(std::max(mse_values[k], r.clamp_floor));
    r.mse = std::move(mse_values);

    std::vector<double> sorted = db;
    std::sort(sorted.begin(), sorted.end());
    r.min_db = sorted.front();
    r.max_db = sorted.back();
    const std::size_t mid = sorted.size() / 2;
    r.median_db = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

    const double lo = std::floor(r.min_db);
    const double hi = std::ceil(r.max_db);
    const long nbins = std::max(1L, long(std::ceil((hi - lo) / r.bin_width_db)));
    r.bins.resize(std::size_t(nbins));
    for (long k = 0; k < nbins; ++k) {
        r.bins[std::size_t(k)].lo_db = lo + double(k) * r.bin_width_db;
        r.bins[std::size_t(k)].hi_db = lo + double(k + 1) * r.bin_width_db;
    }
    for (double v : db) {
        long k = long(std::floor((v - lo) / r.bin_width_db));
        k = std::clamp(k, 0L, nbins - 1);
        ++r.bins[std::size_t(k)].count;
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < r.bins.size(); ++k)
        if (r.bins[k].count > r.bins[best].count) best = k;
    r.mode_db = 0.5 * (r.bins[best].lo_db + r.bins[best].hi_db);
    return r;
}

std::string histogram_csv(const HistogramReport& r) {
    std::string out = "bin_lo_db,bin_hi_db,count\n";
    char line[96];
    for (const auto& b : r.bins) {
        std::snprintf(line, sizeof line, "%.1f,%.1f,%ld\n", b.lo_db, b.hi_db, b.count);
        out += line;
    }
    return out;
}

std::string summary_json(const HistogramReport& r) {
    return "{\"trials\":" + std::to_string(r.trials) + ",\"min_db\":" + format_real(r.min_db) +
           ",\"max_db\":" + format_real(r.max_db) + ",\"median_db\":" + format_real(r.median_db) +
           ",\"mode_db\":" + format_real(r.mode_db) + ",\"redraws\":" + std::to_string(r.redraws) + "}";
}

double entrywise_error(const Matrix& x, const Matrix& ref) {
    if (x.size() != ref.size()) throw DomainError("size mismatch");
    double worst = 0;
    for (std::size_t k = 0; k < x.data().size(); ++k)
        worst = std::max(worst, std::abs(x.data()[k] - ref.data()[k]) / std::max(1.0, std::abs(ref.data()[k])));
    return worst;
}

std::vector<SparseCaseResult> sparse_suite(const std::array<Complex, 5>& values, double tol) {
    std::vector<SparseCaseResult> out;
    for (int id = 1; id <= 3; ++id) {
        SparseCaseResult c;
        c.id = id;
        const Matrix a = sparse_case(id, values);
        try {
            c.det_formula = closed_form_det(a);
            c.det_oracle = leibniz_det(a);
            c.det_rel_err = std::abs(c.det_formula - c.det_oracle) / std::abs(c.det_oracle);
            c.inv_max_err = entrywise_error(closed_form_inverse(a).inverse, gauss_inverse(a).inverse);
            c.pass = c.det_rel_err <= tol && c.inv_max_err <= tol;
        } catch (const std::exception& e) {
            c.det_rel_err = c.inv_max_err = std::numeric_limits<double>::quiet_NaN();
            c.error = e.what();
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace telinv
