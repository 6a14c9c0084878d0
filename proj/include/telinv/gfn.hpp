#pragma once

// Discrete generalized functions and their standard-function encodings.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace telinv {

enum class ReprKind { Direct, Gamma, Cosine, Bessel, Hermite };

// The gamma encodings come in two families: compact ones that only hold on
// z in {1,2,3}, and general ones that hold for every positive integer.
enum class GammaForm { Compact, General };

std::string_view to_string(ReprKind repr);
ReprKind parse_repr(std::string_view name);

struct BesselConstants {
    static constexpr double z1 = 2.4048255576957727;  // first zero of J0
};

constexpr int kron(int z) noexcept { return z == 0 ? 1 : 0; }
constexpr int heav(int z) noexcept { return z >= 0 ? 1 : 0; }

// (n-1)! exactly; n must lie in 1..21 so the result fits in 64 bits.
std::uint64_t gamma_int(int n);

// (-1)^Gamma(n) without leaving integer arithmetic.
int neg_one_pow_gamma(int n);

double bessel_j0(double x);

// delta(z - n) and H(z - p) evaluated through the chosen encoding, rounded,
// and checked against the encoding's tolerance.
int repr_delta(int z, int n, ReprKind repr, GammaForm form = GammaForm::Compact);
int repr_heav(int z, int p, ReprKind repr, GammaForm form = GammaForm::Compact);

// Unrounded value of an encoding; exposed for residual diagnostics.
double repr_delta_value(int z, int n, ReprKind repr, GammaForm form = GammaForm::Compact);
double repr_heav_value(int z, int p, ReprKind repr, GammaForm form = GammaForm::Compact);

double repr_tolerance(ReprKind repr);

// Evaluates kron(x) and heav(x) for arbitrary integer offsets x by mapping
// x onto an (z, p) pair inside the encoding's domain.  Gamma reaches every
// offset in [-2, 18] directly and the rest by reflection (delta is even;
// H(x) = 1 - H(-1 - x)).  Cosine, Bessel and Hermite only cover x in [-2, 1]
// for H and [-2, 2] for delta.
class IndexCalculus {
public:
    explicit IndexCalculus(ReprKind kind = ReprKind::Direct) : kind_(kind) {}

    ReprKind kind() const noexcept { return kind_; }

    int heav(int x) const { return kind_ == ReprKind::Direct ? telinv::heav(x) : encoded_heav(x); }
    int kron(int x) const { return kind_ == ReprKind::Direct ? telinv::kron(x) : encoded_kron(x); }

private:
    int encoded_heav(int x) const;
    int encoded_kron(int x) const;

    ReprKind kind_;
};

// One row of the conformance report: a formula checked exhaustively
// against the direct definition over its stated domain.
struct ConformanceEntry {
    std::string name;
    std::string expression;
    std::string domain;
    long checked = 0;
    long mismatches = 0;
    bool available = true;
};

std::vector<ConformanceEntry> representation_conformance();

std::string conformance_to_json(const std::vector<ConformanceEntry>& entries);

}  // namespace telinv
