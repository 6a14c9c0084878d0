#include "telinv/gfn.hpp"

#include "telinv/errors.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include <json.hpp>

namespace telinv {

namespace {

constexpr int kGammaMax = 21;

int sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

double he2(double x) { return x * x - 1.0; }

// (n-2)^(n+1) / 2, the coefficient of the vanishing correction term.
double lead_coefficient(int n) { return std::pow(double(n - 2), n + 1) / 2.0; }

bool in_range(int v, int lo, int hi) { return v >= lo && v <= hi; }

// Raw encodings.  Each returns the unrounded value of its expression.

double gamma_compact_delta(int z) { return double(gamma_int(z)) - z + 1; }

double gamma_general_delta(int z, int n) {
    return (neg_one_pow_gamma(z - n + 3) - neg_one_pow_gamma(z - n + 2)) / 2.0;
}

double bessel_delta(int z, int n) {
    const double z1 = BesselConstants::z1;
    return lead_coefficient(n) * (n - z) * (z - 2) * bessel_j0(2 * z1) +
           sign_pow(n + z) * bessel_j0((z - n) * z1);
}

double cosine_delta(int z, int n) {
    const double half_pi = std::numbers::pi / 2;
    return lead_coefficient(n) * (n - z) * (z - 2) * std::cos(2 * half_pi) +
           sign_pow(n + z) * std::cos((z - n) * half_pi);
}

double hermite_delta(int z, int n) {
    return -lead_coefficient(n) * (n - z) * (z - 2) * he2(2.0) - sign_pow(n + z) * he2(z - n);
}

double gamma_heav_p2(int z) { return z - double(gamma_int(z)); }
double gamma_heav_p3(int z) { return double(gamma_int(z)) - 1; }

double gamma_heav_merged(int z, int p) {
    return sign_pow(p) * (p - 2 - (p - 3) * z - double(gamma_int(z)));
}

double gamma_general_heav(int z, int p) { return (1 + neg_one_pow_gamma(z - p + 3)) / 2.0; }
double gamma_heav_p4(int z) { return (1 - neg_one_pow_gamma(6 - z)) / 2.0; }

double bessel_heav(int z, int p) {
    const double z1 = BesselConstants::z1;
    return 0.5 * (z - bessel_j0((2 - 2) * z1) + sign_pow(p + z) * bessel_j0((z - 2) * z1));
}

double cosine_heav(int z, int p) {
    const double half_pi = std::numbers::pi / 2;
    return 0.5 * (z - std::cos((2 - 2) * half_pi) + sign_pow(p + z) * std::cos((z - 2) * half_pi));
}

double hermite_heav(int z, int p) {
    return 0.5 * (z + he2((2 - 2) * 1.0) - sign_pow(p + z) * he2((z - 2) * 1.0));
}

int settle(double value, double tol, const char* what) {
    const double r = std::round(value);
    if (!(std::abs(value - r) < tol))
        throw RepresentationMismatch(std::string(what) + " did not settle on an integer");
    return int(r);
}

const char* delta_name(ReprKind repr, GammaForm form) {
    switch (repr) {
        case ReprKind::Gamma: return form == GammaForm::Compact ? "kron.gamma.compact" : "kron.gamma.general";
        case ReprKind::Bessel: return "kron.bessel";
        case ReprKind::Cosine: return "kron.cosine";
        case ReprKind::Hermite: return "kron.hermite";
        default: return "kron.direct";
    }
}

const char* heav_name(ReprKind repr, GammaForm form, int p) {
    switch (repr) {
        case ReprKind::Gamma:
            if (form == GammaForm::Compact) return p == 2 ? "heav.gamma.compact.p2" : "heav.gamma.compact.p3";
            return p == 4 ? "heav.gamma.general.p4" : "heav.gamma.general";
        case ReprKind::Bessel: return "heav.bessel";
        case ReprKind::Cosine: return "heav.cosine";
        case ReprKind::Hermite: return "heav.hermite";
        default: return "heav.direct";
    }
}

void check_delta_domain(int z, int n, ReprKind repr, GammaForm form) {
    bool ok = true;
    switch (repr) {
        case ReprKind::Direct: break;
        case ReprKind::Gamma:
            if (form == GammaForm::Compact)
                ok = n == 1 && in_range(z, 1, 3);
            else
                ok = in_range(n, 1, 2) && z >= 1 && z - n + 3 <= kGammaMax;
            break;
        default: ok = in_range(n, 1, 3) && in_range(z, 1, 3); break;
    }
    if (!ok)
        throw DomainError("delta(" + std::to_string(z) + " - " + std::to_string(n) +
                          ") outside the domain of the " + std::string(to_string(repr)) + " encoding");
}

void check_heav_domain(int z, int p, ReprKind repr, GammaForm form) {
    bool ok = true;
    switch (repr) {
        case ReprKind::Direct: break;
        case ReprKind::Gamma:
            if (form == GammaForm::Compact)
                ok = in_range(p, 2, 3) && in_range(z, 1, 3);
            else if (p == 4)
                ok = in_range(z, 1, 4);
            else
                ok = in_range(p, 2, 3) && z >= 1 && z - p + 3 <= kGammaMax;
            break;
        default: ok = in_range(p, 2, 3) && in_range(z, 1, 3); break;
    }
    if (!ok)
        throw DomainError("H(" + std::to_string(z) + " - " + std::to_string(p) +
                          ") outside the domain of the " + std::string(to_string(repr)) + " encoding");
}

double delta_value_unchecked(int z, int n, ReprKind repr, GammaForm form) {
    switch (repr) {
        case ReprKind::Direct: return kron(z - n);
        case ReprKind::Gamma: return form == GammaForm::Compact ? gamma_compact_delta(z) : gamma_general_delta(z, n);
        case ReprKind::Bessel: return bessel_delta(z, n);
        case ReprKind::Cosine: return cosine_delta(z, n);
        case ReprKind::Hermite: return hermite_delta(z, n);
    }
    return 0;
}

double heav_value_unchecked(int z, int p, ReprKind repr, GammaForm form) {
    switch (repr) {
        case ReprKind::Direct: return heav(z - p);
        case ReprKind::Gamma:
            if (form == GammaForm::Compact) return p == 2 ? gamma_heav_p2(z) : gamma_heav_p3(z);
            return p == 4 ? gamma_heav_p4(z) : gamma_general_heav(z, p);
        case ReprKind::Bessel: return bessel_heav(z, p);
        case ReprKind::Cosine: return cosine_heav(z, p);
        case ReprKind::Hermite: return hermite_heav(z, p);
    }
    return 0;
}

using Point = std::pair<int, int>;

struct FormSpec {
    const char* name;
    const char* expression;
    const char* domain;
    std::vector<Point> points;                   // (z, n) or (z, p)
    std::function<double(int, int)> value;
    std::function<int(int, int)> truth;
    double tol;
};

std::vector<Point> grid(int z_lo, int z_hi, std::initializer_list<int> second) {
    std::vector<Point> pts;
    for (int s : second)
        for (int z = z_lo; z <= z_hi; ++z) pts.emplace_back(z, s);
    return pts;
}

std::vector<FormSpec> form_table() {
    auto d = [](int z, int n) { return kron(z - n); };
    auto h = [](int z, int p) { return heav(z - p); };
    const double tol = 1e-9;
    const double btol = 1e-6;
    return {
        {"kron.gamma.compact", "Gamma(z) - z + 1", "n=1, z in 1..3", grid(1, 3, {1}),
         [](int z, int) { return gamma_compact_delta(z); }, d, tol},
        {"kron.gamma.general", "((-1)^Gamma(z-n+3) - (-1)^Gamma(z-n+2)) / 2", "n in 1..2, z in 1..12",
         grid(1, 12, {1, 2}), gamma_general_delta, d, tol},
        {"kron.bessel", "(n-2)^(n+1)/2 (n-z)(z-2) J0(2 z1) + (-1)^(n+z) J0((z-n) z1)", "n, z in 1..3",
         grid(1, 3, {1, 2, 3}), bessel_delta, d, btol},
        {"kron.cosine", "(n-2)^(n+1)/2 (n-z)(z-2) cos(pi) + (-1)^(n+z) cos((z-n) pi/2)", "n, z in 1..3",
         grid(1, 3, {1, 2, 3}), cosine_delta, d, tol},
        {"kron.hermite", "-(n-2)^(n+1)/2 (n-z)(z-2) He2(2) - (-1)^(n+z) He2(z-n), He2(x) = x^2 - 1",
         "n, z in 1..3", grid(1, 3, {1, 2, 3}), hermite_delta, d, tol},
        {"heav.gamma.compact.p2", "z - Gamma(z)", "p=2, z in 1..3", grid(1, 3, {2}),
         [](int z, int) { return gamma_heav_p2(z); }, h, tol},
        {"heav.gamma.compact.p3", "Gamma(z) - 1", "p=3, z in 1..3", grid(1, 3, {3}),
         [](int z, int) { return gamma_heav_p3(z); }, h, tol},
        {"heav.gamma.compact.merged", "(-1)^p (p - 2 - (p-3) z - Gamma(z))", "p in 2..3, z in 1..3",
         grid(1, 3, {2, 3}), gamma_heav_merged, h, tol},
        {"heav.gamma.general", "(1 + (-1)^Gamma(z-p+3)) / 2", "p in 2..3, z in 1..12", grid(1, 12, {2, 3}),
         gamma_general_heav, h, tol},
        {"heav.gamma.general.p4", "(1 - (-1)^Gamma(6-z)) / 2", "p=4, z in 1..4", grid(1, 4, {4}),
         [](int z, int) { return gamma_heav_p4(z); }, h, tol},
        {"heav.bessel", "(z - J0(0) + (-1)^(p+z) J0((z-2) z1)) / 2", "p in 2..3, z in 1..3",
         grid(1, 3, {2, 3}), bessel_heav, h, btol},
        {"heav.cosine", "(z - cos(0) + (-1)^(p+z) cos((z-2) pi/2)) / 2", "p in 2..3, z in 1..3",
         grid(1, 3, {2, 3}), cosine_heav, h, tol},
        {"heav.hermite", "(z + He2(0) - (-1)^(p+z) He2(z-2)) / 2", "p in 2..3, z in 1..3",
         grid(1, 3, {2, 3}), hermite_heav, h, tol},
    };
}

const std::map<std::string, bool>& availability() {
    static const std::map<std::string, bool> table = [] {
        std::map<std::string, bool> t;
        for (const auto& e : representation_conformance()) t[e.name] = e.available;
        return t;
    }();
    return table;
}

bool form_available(const char* name) {
    auto it = availability().find(name);
    return it == availability().end() || it->second;
}

}  // namespace

std::string_view to_string(ReprKind repr) {
    switch (repr) {
        case ReprKind::Direct: return "direct";
        case ReprKind::Gamma: return "gamma";
        case ReprKind::Cosine: return "cosine";
        case ReprKind::Bessel: return "bessel";
        case ReprKind::Hermite: return "hermite";
    }
    return "?";
}

ReprKind parse_repr(std::string_view name) {
    for (ReprKind r : {ReprKind::Direct, ReprKind::Gamma, ReprKind::Cosine, ReprKind::Bessel, ReprKind::Hermite})
        if (to_string(r) == name) return r;
    throw DomainError("unknown representation '" + std::string(name) + "'");
}

std::uint64_t gamma_int(int n) {
    if (n <= 0) throw DomainError("Gamma is infinite at non-positive integers");
    if (n > kGammaMax) throw DomainError("Gamma(" + std::to_string(n) + ") overflows 64 bits");
    std::uint64_t f = 1;
    for (int k = 2; k < n; ++k) f *= std::uint64_t(k);
    return f;
}

int neg_one_pow_gamma(int n) { return gamma_int(n) % 2 == 0 ? 1 : -1; }

double bessel_j0(double x) {
    if (!std::isfinite(x)) throw DomainError("J0 argument must be finite");
    if (std::abs(x) > 12.0) throw DomainError("J0 series is only used on |x| <= 12");
    const double q = -(x / 2) * (x / 2);
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m <= 40; ++m) {
        term *= q / (double(m) * m);
        sum += term;
    }
    return sum;
}

double repr_tolerance(ReprKind repr) { return repr == ReprKind::Bessel ? 1e-6 : 1e-9; }

double repr_delta_value(int z, int n, ReprKind repr, GammaForm form) {
    check_delta_domain(z, n, repr, form);
    return delta_value_unchecked(z, n, repr, form);
}

double repr_heav_value(int z, int p, ReprKind repr, GammaForm form) {
    check_heav_domain(z, p, repr, form);
    return heav_value_unchecked(z, p, repr, form);
}

int repr_delta(int z, int n, ReprKind repr, GammaForm form) {
    check_delta_domain(z, n, repr, form);
    if (repr == ReprKind::Direct || !form_available(delta_name(repr, form))) return kron(z - n);
    return settle(delta_value_unchecked(z, n, repr, form), repr_tolerance(repr), delta_name(repr, form));
}

int repr_heav(int z, int p, ReprKind repr, GammaForm form) {
    check_heav_domain(z, p, repr, form);
    if (repr == ReprKind::Direct || !form_available(heav_name(repr, form, p))) return heav(z - p);
    return settle(heav_value_unchecked(z, p, repr, form), repr_tolerance(repr), heav_name(repr, form, p));
}

int IndexCalculus::encoded_heav(int x) const {
    if (kind_ == ReprKind::Gamma) {
        if (x >= -2) return repr_heav(x + 3, 3, kind_, GammaForm::General);
        if (x == -3) return repr_heav(1, 4, kind_, GammaForm::General);
        return 1 - encoded_heav(-1 - x);
    }
    if (x == -2) return repr_heav(1, 3, kind_);
    return repr_heav(x + 2, 2, kind_);
}

int IndexCalculus::encoded_kron(int x) const {
    if (kind_ == ReprKind::Gamma) {
        if (x < -1) return encoded_kron(-x);
        return repr_delta(x + 2, 2, kind_, GammaForm::General);
    }
    if (x == 2) return repr_delta(3, 1, kind_);
    if (x == -2) return repr_delta(1, 3, kind_);
    return repr_delta(x + 2, 2, kind_);
}

std::vector<ConformanceEntry> representation_conformance() {
    std::vector<ConformanceEntry> out;
    for (const auto& f : form_table()) {
        ConformanceEntry e{f.name, f.expression, f.domain};
        for (auto [z, s] : f.points) {
            ++e.checked;
            const double v = f.value(z, s);
            const double r = std::round(v);
            if (!(std::abs(v - r) < f.tol) || int(r) != f.truth(z, s)) ++e.mismatches;
        }
        e.available = e.mismatches == 0;
        out.push_back(std::move(e));
    }
    return out;
}

std::string conformance_to_json(const std::vector<ConformanceEntry>& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries)
        arr.push_back({{"name", e.name},
                       {"expression", e.expression},
                       {"domain", e.domain},
                       {"checked", e.checked},
                       {"mismatches", e.mismatches},
                       {"available", e.available}});
    return arr.dump(2);
}

}  // namespace telinv
