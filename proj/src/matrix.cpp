#include "telinv/matrix.hpp"

#include "telinv/errors.hpp"
#include "telinv/gfn.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

namespace telinv {

Matrix::Matrix(int n) : n_(n), data_(std::size_t(n) * std::size_t(n)) {
    if (n < 1) throw DomainError("matrix size must be positive");
}

Matrix::Matrix(int n, std::vector<Complex> data) : n_(n), data_(std::move(data)) {
    if (n < 1) throw DomainError("matrix size must be positive");
    if (data_.size() != std::size_t(n) * std::size_t(n)) throw DomainError("matrix data must hold n*n entries");
    for (const auto& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("matrix entries must be finite");
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 1; i <= n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const int n = int(rows.size());
    std::vector<Complex> data;
    for (const auto& row : rows) {
        if (int(row.size()) != n) throw DomainError("matrix rows must have n entries");
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(n, std::move(data));
}

const Complex& Matrix::at(int r, int c) const {
    if (r < 1 || r > n_ || c < 1 || c > n_)
        throw DomainError("index (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                          std::to_string(n_) + " x " + std::to_string(n_) + " matrix");
    return (*this)(r, c);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) throw DomainError("size mismatch in multiply");
    const int n = a.size();
    Matrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            const Complex aik = a(i, k);
            for (int j = 1; j <= n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

double identity_residual(const Matrix& a, const Matrix& x) {
    const Matrix p = multiply(a, x);
    double worst = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = 1; j <= p.size(); ++j) worst = std::max(worst, std::abs(p(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) throw DomainError("size mismatch");
    double worst = 0;
    for (std::size_t k = 0; k < a.data().size(); ++k) worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
    return worst;
}

int minor_index_kronecker(int r1, int r0) {
    int v = r1;
    for (int x = 1; x <= r1; ++x) v += kron(r0 - x);
    return v;
}

namespace {

void check_minor_args(const Matrix& a, int r0, int s0) {
    if (a.size() < 2) throw DomainError("a minor needs a matrix of size 2 or more");
    if (r0 < 1 || r0 > a.size() || s0 < 1 || s0 > a.size())
        throw DomainError("minor position (" + std::to_string(r0) + ", " + std::to_string(s0) + ") out of range");
}

}  // namespace

Matrix minor_by_deletion(const Matrix& a, int r0, int s0) {
    check_minor_args(a, r0, s0);
    const int n = a.size();
    std::vector<Complex> data;
    data.reserve(std::size_t(n - 1) * std::size_t(n - 1));
    for (int r = 1; r <= n; ++r) {
        if (r == r0) continue;
        for (int c = 1; c <= n; ++c)
            if (c != s0) data.push_back(a(r, c));
    }
    return Matrix(n - 1, std::move(data));
}

Matrix minor_by_formula(const Matrix& a, int r0, int s0) {
    check_minor_args(a, r0, s0);
    const int m = a.size() - 1;
    Matrix out(m);
    for (int r1 = 1; r1 <= m; ++r1) {
        const int r = minor_index_heaviside(r1, r0);
        for (int s1 = 1; s1 <= m; ++s1) out(r1, s1) = a(r, minor_index_heaviside(s1, s0));
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double NormalStream::uniform() {
    const std::uint64_t bits = splitmix64(seed_, counter_++);
    return double((bits >> 11) + 1) * 0x1.0p-53;
}

double NormalStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

Matrix random_matrix(int n, std::uint64_t seed, bool complex) {
    if (n < 1) throw DomainError("matrix size must be positive");
    NormalStream rng(seed);
    std::vector<Complex> data(std::size_t(n) * std::size_t(n));
    for (auto& z : data) {
        const double re = rng.normal();
        const double im = complex ? rng.normal() : 0.0;
        z = Complex(re, im);
    }
    return Matrix(n, std::move(data));
}

Matrix sparse_case(int id, const std::array<Complex, 5>& values) {
    static constexpr int cols[3][5] = {{4, 2, 1, 3, 5}, {1, 2, 5, 3, 4}, {2, 1, 3, 5, 4}};
    if (id < 1 || id > 3) throw DomainError("sparse case id must be 1, 2 or 3");
    for (const auto& v : values)
        if (v == Complex(0.0)) throw DomainError("sparse case values must be nonzero");
    Matrix m(5);
    for (int r = 1; r <= 5; ++r) m(r, cols[id - 1][r - 1]) = values[std::size_t(r - 1)];
    return m;
}

namespace {

std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail_at(std::string_view text, std::string_view needle, const std::string& msg) {
    const auto pos = text.find(needle);
    const auto [l, c] = line_col(text, pos == std::string_view::npos ? 0 : pos);
    throw ParseError(msg, l, c);
}

std::vector<double> read_grid(std::string_view text, const nlohmann::json& g, const char* key, int n) {
    const std::string quoted = std::string("\"") + key + "\"";
    if (!g.is_array() || int(g.size()) != n) fail_at(text, quoted, std::string(key) + " must hold n rows");
    std::vector<double> out;
    for (const auto& row : g) {
        if (!row.is_array() || int(row.size()) != n) fail_at(text, quoted, std::string(key) + " rows must hold n values");
        for (const auto& v : row) {
            if (!v.is_number()) fail_at(text, quoted, std::string(key) + " entries must be numbers");
            out.push_back(v.get<double>());
        }
    }
    return out;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [l, c] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed matrix JSON", l, c);
    } catch (const nlohmann::json::exception&) {
        throw ParseError("unreadable number in matrix JSON", 1, 1);
    }
    if (!doc.is_object()) throw ParseError("matrix JSON must be an object", 1, 1);
    for (const auto& [key, _] : doc.items())
        if (key != "n" && key != "re" && key != "im") fail_at(text, "\"" + key + "\"", "unknown key '" + key + "'");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) fail_at(text, "{", "missing integer \"n\"");
    const long long n = doc["n"].get<long long>();
    if (n < 1 || n > 4096) fail_at(text, "\"n\"", "\"n\" must be a positive size");
    if (!doc.contains("re")) fail_at(text, "{", "missing \"re\"");
    const auto re = read_grid(text, doc["re"], "re", int(n));
    std::vector<double> im(re.size(), 0.0);
    if (doc.contains("im")) im = read_grid(text, doc["im"], "im", int(n));
    std::vector<Complex> data(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) {
        if (!std::isfinite(re[k]) || !std::isfinite(im[k])) fail_at(text, "\"re\"", "entries must be finite");
        data[k] = Complex(re[k], im[k]);
    }
    return Matrix(int(n), std::move(data));
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string write_matrix(const Matrix& a) {
    const int n = a.size();
    auto grid = [&](bool imag) {
        std::string s = "[";
        for (int r = 1; r <= n; ++r) {
            s += r > 1 ? ", [" : "[";
            for (int c = 1; c <= n; ++c) {
                if (c > 1) s += ", ";
                s += format_real(imag ? a(r, c).imag() : a(r, c).real());
            }
            s += "]";
        }
        return s + "]";
    };
    return "{\"n\": " + std::to_string(n) + ", \"re\": " + grid(false) + ", \"im\": " + grid(true) + "}";
}

}  // namespace telinv
