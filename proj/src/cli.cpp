#include "telinv/cli.hpp"

#include "telinv/apps.hpp"
#include "telinv/errors.hpp"
#include "telinv/harness.hpp"
#include "telinv/inverse.hpp"
#include "telinv/matrix.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace telinv {

namespace {

// Bad flag values; reported with exit code 3.
struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const char* begin = item.c_str();
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(begin, &end);
        if (item.empty() || end != begin + item.size() || errno == ERANGE || !std::isfinite(v))
            throw FlagError(std::string(flag) + ": '" + item + "' is not a finite number");
        out.push_back(v);
    }
    if (out.size() != count)
        throw FlagError(std::string(flag) + " expects " + std::to_string(count) + " comma-separated values");
    return out;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FlagError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

struct MatrixSource {
    std::string input;
    std::optional<int> random;
    std::uint64_t seed = 1;
    bool complex = false;

    void attach(CLI::App* cmd) {
        auto* in = cmd->add_option("--input", input, "matrix JSON file");
        auto* rnd = cmd->add_option("--random", random, "draw a random N x N matrix")->check(CLI::Range(1, 64));
        in->excludes(rnd);
        cmd->add_option("--seed", seed, "seed for --random");
        cmd->add_flag("--complex", complex, "complex entries for --random");
    }

    Matrix load() const {
        if (random) return random_matrix(*random, seed, complex);
        if (input.empty()) throw FlagError("one of --input or --random is required");
        return read_matrix_file(input);
    }
};

struct EngineFlags {
    std::string method;
    std::string repr = "direct";

    void attach(CLI::App* cmd) {
        cmd->add_option("--method", method, "closed | telescope | oracle")
            ->check(CLI::IsMember({"closed", "telescope", "oracle"}));
        cmd->add_option("--repr", repr, "direct | gamma | cosine | bessel | hermite")
            ->check(CLI::IsMember({"direct", "gamma", "cosine", "bessel", "hermite"}));
    }

    Method resolve_method(int n) const { return method.empty() ? default_method(n) : parse_method(method); }
};

std::string complex_text(Complex z) { return format_real(z.real()) + " " + format_real(z.imag()); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form determinants and inverses via telescoping minors", "telinv"};
    app.require_subcommand(1);

    MatrixSource det_src, inv_src;
    EngineFlags det_eng, inv_eng;
    auto* det_cmd = app.add_subcommand("det", "print the determinant (re im)");
    det_src.attach(det_cmd);
    det_eng.attach(det_cmd);
    auto* inv_cmd = app.add_subcommand("invert", "print the inverse as JSON and its residual");
    inv_src.attach(inv_cmd);
    inv_eng.attach(inv_cmd);

    std::string minor_input, minor_by = "formula";
    int minor_row = 0, minor_col = 0;
    auto* minor_cmd = app.add_subcommand("minor", "print a minor matrix as JSON");
    minor_cmd->add_option("--input", minor_input, "matrix JSON file")->required();
    minor_cmd->add_option("--row", minor_row, "deleted row")->required();
    minor_cmd->add_option("--col", minor_col, "deleted column")->required();
    minor_cmd->add_option("--by", minor_by, "deletion | formula")->check(CLI::IsMember({"deletion", "formula"}));

    int expand_size = 0;
    auto* expand_cmd = app.add_subcommand("expand", "list the signed product terms of the determinant");
    expand_cmd->add_option("--size", expand_size, "matrix size")->required();

    TrialConfig cfg;
    int val_size = 5;
    std::string val_out;
    EngineFlags val_eng;
    auto* val_cmd = app.add_subcommand("validate", "Monte-Carlo MSE histogram against elimination");
    val_cmd->add_option("--trials", cfg.trials, "number of random matrices")->check(CLI::PositiveNumber);
    val_cmd->add_option("--size", val_size, "matrix size")->check(CLI::Range(2, 8));
    val_cmd->add_option("--seed", cfg.seed, "base seed");
    val_cmd->add_flag("--complex", cfg.complex, "complex entries");
    val_cmd->add_option("--out", val_out, "histogram CSV path")->required();
    val_eng.attach(val_cmd);

    std::string sparse_values;
    auto* sparse_cmd = app.add_subcommand("sparse-check", "check the three sparse 5 x 5 patterns");
    sparse_cmd->add_option("--values", sparse_values, "x1,x2,x3,x4,x5")->required();

    std::string curl_h, curl_d;
    auto* curl_cmd = app.add_subcommand("curl", "curl components from scale factors and partials");
    curl_cmd->set_help_flag("--help", "print this help message and exit");
    curl_cmd->add_option("--h", curl_h, "h1,h2,h3")->required();
    curl_cmd->add_option("--d", curl_d, "9 values, D[i][j] = d(h_i F_i)/du_j row by row")->required();

    std::string vol_a, vol_b, vol_c;
    auto* vol_cmd = app.add_subcommand("volume", "signed triple product and parallelepiped volume");
    vol_cmd->add_option("--a", vol_a, "a1,a2,a3")->required();
    vol_cmd->add_option("--b", vol_b, "b1,b2,b3")->required();
    vol_cmd->add_option("--c", vol_c, "c1,c2,c3")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (det_cmd->parsed()) {
            const Matrix a = det_src.load();
            const Complex d = determinant(a, det_eng.resolve_method(a.size()), parse_repr(det_eng.repr));
            out << complex_text(d) << "\n";
        } else if (inv_cmd->parsed()) {
            const Matrix a = inv_src.load();
            const InverseResult r = invert(a, inv_eng.resolve_method(a.size()), parse_repr(inv_eng.repr));
            if (r.near_singular) err << "warning: determinant is tiny relative to the entry scale\n";
            out << write_matrix(r.inverse) << "\n";
            out << "residual " << format_real(identity_residual(a, r.inverse)) << "\n";
        } else if (minor_cmd->parsed()) {
            const Matrix a = read_matrix_file(minor_input);
            const Matrix m = minor_by == "deletion" ? minor_by_deletion(a, minor_row, minor_col)
                                                    : minor_by_formula(a, minor_row, minor_col);
            out << write_matrix(m) << "\n";
        } else if (expand_cmd->parsed()) {
            for (const auto& t : expand_terms(expand_size)) {
                out << (t.sign > 0 ? '+' : '-');
                for (int c : t.cols) out << ' ' << c;
                out << "\n";
            }
        } else if (val_cmd->parsed()) {
            cfg.size = val_size;
            cfg.method = val_eng.resolve_method(val_size);
            cfg.repr = parse_repr(val_eng.repr);
            const HistogramReport r = run_trials(cfg);
            std::ofstream csv(val_out, std::ios::binary);
            if (!csv) throw FlagError("cannot write '" + val_out + "'");
            csv << histogram_csv(r);
            out << summary_json(r) << "\n";
        } else if (sparse_cmd->parsed()) {
            const auto v = parse_list(sparse_values, 5, "--values");
            const auto results = sparse_suite({v[0], v[1], v[2], v[3], v[4]});
            bool all = true;
            out << "case det_formula det_oracle det_rel_err inv_max_err result\n";
            for (const auto& c : results) {
                all = all && c.pass;
                out << c.id << ' ' << format_real(c.det_formula.real()) << ' ' << format_real(c.det_oracle.real())
                    << ' ' << format_real(c.det_rel_err) << ' ' << format_real(c.inv_max_err) << ' '
                    << (c.pass ? "PASS" : "FAIL") << "\n";
                if (!c.error.empty()) err << "case " << c.id << ": " << c.error << "\n";
            }
            return all ? kExitOk : kExitCheckFailed;
        } else if (curl_cmd->parsed()) {
            const auto h = parse_list(curl_h, 3, "--h");
            const auto d = parse_list(curl_d, 9, "--d");
            CurlInput in{{h[0], h[1], h[2]}, {}};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) in.D[std::size_t(i)][std::size_t(j)] = d[std::size_t(3 * i + j)];
            const auto c = curl_components(in);
            out << format_real(c[0]) << ' ' << format_real(c[1]) << ' ' << format_real(c[2]) << "\n";
        } else if (vol_cmd->parsed()) {
            const auto a = parse_list(vol_a, 3, "--a");
            const auto b = parse_list(vol_b, 3, "--b");
            const auto c = parse_list(vol_c, 3, "--c");
            const double v = scalar_triple<double>({a[0], a[1], a[2]}, {b[0], b[1], b[2]}, {c[0], c[1], c[2]});
            out << "signed " << format_real(v) << "\n";
            out << "volume " << format_real(std::abs(v)) << "\n";
        }
    } catch (const SingularError& e) {
        err << "singular: " << e.what() << "\n";
        return kExitSingular;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const CapacityError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const FlagError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}

}  // namespace telinv
