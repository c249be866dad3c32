#include "mpwright/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mpwright/baselines.hpp"
#include "mpwright/verify.hpp"

namespace mpw {
namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw InvalidParamsError("bad number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidParamsError("empty number list");
    return out;
}

std::complex<double> parse_complex(const std::string& s) {
    auto v = parse_doubles(s);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() == 2) return {v[0], v[1]};
    throw InvalidParamsError("complex value must be re or re,im");
}

// "start:stop:count[:log]"
std::vector<double> parse_grid(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        throw InvalidParamsError("grid must be start:stop:count[:log]");
    double a = std::stod(parts[0]);
    double b = std::stod(parts[1]);
    int count = std::stoi(parts[2]);
    bool log_spaced = parts.size() == 4;
    if (log_spaced && parts[3] != "log") throw InvalidParamsError("grid suffix must be 'log'");
    if (count < 1) throw InvalidParamsError("grid count must be >= 1");
    if (log_spaced && (a <= 0.0 || b <= 0.0))
        throw InvalidParamsError("log grid needs positive endpoints");
    std::vector<double> out;
    if (count == 1) return {a};
    for (int i = 0; i < count; ++i) {
        double f = static_cast<double>(i) / (count - 1);
        out.push_back(log_spaced ? a * std::pow(b / a, f) : a + (b - a) * f);
    }
    return out;
}

struct ParamSpec {
    std::string alpha_csv, nu_csv, params_arg;
    OperatorParams resolve() const {
        if (!params_arg.empty()) {
            json j;
            if (!params_arg.empty() && params_arg.front() == '{') {
                j = json::parse(params_arg);
            } else {
                std::ifstream f(params_arg);
                if (!f) throw InvalidParamsError("cannot open params file " + params_arg);
                f >> j;
            }
            if (!j.contains("alpha") || !j.contains("nu"))
                throw InvalidParamsError("params JSON needs keys \"alpha\" and \"nu\"");
            return OperatorParams(j["alpha"].get<std::vector<double>>(),
                                  j["nu"].get<std::vector<double>>());
        }
        if (alpha_csv.empty()) throw InvalidParamsError("missing --alpha (or --params)");
        if (nu_csv.empty()) throw InvalidParamsError("missing --nu (or --params)");
        return OperatorParams(parse_doubles(alpha_csv), parse_doubles(nu_csv));
    }
};

std::optional<BaselineKind> baseline_kind(const std::string& name) {
    if (name == "wright") return BaselineKind::Wright;
    if (name == "ml2") return BaselineKind::MittagLeffler2;
    if (name == "miml") return BaselineKind::MultiIndexML;
    if (name == "kilbas-saigo") return BaselineKind::KilbasSaigo;
    if (name == "laguerre-exp") return BaselineKind::LaguerreExp;
    if (name == "nml") return BaselineKind::NMittagLeffler;
    if (name == "tricomi") return BaselineKind::Tricomi;
    if (name == "besselj") return BaselineKind::BesselJ;
    if (name == "delerue") return BaselineKind::DelerueHB;
    if (name == "delerue-normalized") return BaselineKind::DelerueHBNormalized;
    return std::nullopt;
}

void emit_table(std::ostream& out, const std::string& format,
                const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows, const char* json_key) {
    if (format == "csv") {
        for (std::size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << header[i];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << fmt17(row[i]);
            out << "\n";
        }
        return;
    }
    json j;
    j["columns"] = header;
    j[json_key] = rows;
    out << j.dump(2) << "\n";
}

void emit_reports(std::ostream& out, const std::string& format,
                  const std::vector<ResidualReport>& reports) {
    if (format == "csv") {
        out << "check_name,max_residual,tolerance,passed\n";
        for (const auto& r : reports)
            out << r.check_name << "," << fmt17(r.max_residual) << "," << fmt17(r.tolerance)
                << "," << (r.passed ? 1 : 0) << "\n";
        return;
    }
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    out << arr.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"multi-parameter generalized Wright function toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    ParamSpec pspec;
    EvalOptions opts;
    auto add_common = [&](CLI::App* cmd, bool with_params, bool with_evalopts = true) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
        if (with_evalopts) {
            cmd->add_option("--eps", opts.eps, "relative truncation target");
            cmd->add_option("--kmax", opts.kmax, "series term cap");
        }
        if (with_params) {
            cmd->add_option("--alpha", pspec.alpha_csv, "alpha_1,...,alpha_{n+1}");
            cmd->add_option("--nu", pspec.nu_csv, "nu_1,...,nu_n");
            cmd->add_option("--params", pspec.params_arg, "JSON file or inline JSON");
        }
    };

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate the series (or a baseline kind)");
    std::string z_arg, grid_arg, kind_arg, kind_params_arg, points_file;
    add_common(eval_cmd, true);
    eval_cmd->add_option("--z", z_arg, "evaluation point re[,im]");
    eval_cmd->add_option("--grid", grid_arg, "real grid start:stop:count[:log]");
    eval_cmd->add_option("--points-file", points_file, "JSON [[re,im],...] evaluation points");
    eval_cmd->add_option("--kind", kind_arg, "baseline kind instead of the generalized series");
    eval_cmd->add_option("--kind-params", kind_params_arg, "baseline parameter list");

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "dump series coefficients");
    int coeff_k = 20;
    add_common(coeffs_cmd, true, /*with_evalopts=*/false);
    coeffs_cmd->add_option("--kmax", coeff_k, "highest coefficient index");

    // ratio
    auto* ratio_cmd = app.add_subcommand("ratio", "consecutive-coefficient ratio diagnostics");
    int ratio_k = 50;
    add_common(ratio_cmd, true, /*with_evalopts=*/false);
    ratio_cmd->add_option("--kmax", ratio_k, "highest ratio index + 1");

    // verify-eigen
    auto* ve_cmd = app.add_subcommand("verify-eigen", "eigen-relation residual check");
    std::string lambda_arg = "1";
    std::string ve_grid = "0.1:2:8";
    double ve_tol = 1e-8;
    add_common(ve_cmd, true);
    ve_cmd->add_option("--lambda", lambda_arg, "eigenvalue re[,im]");
    ve_cmd->add_option("--grid", ve_grid, "x grid start:stop:count[:log]");
    ve_cmd->add_option("--tol", ve_tol, "residual tolerance");

    // verify-reduction
    auto* vr_cmd = app.add_subcommand("verify-reduction", "reduction-identity residual check");
    std::string case_arg = "tricomi", vr_grid;
    int vr_n = 1;
    double vr_nu = 0.5, vr_beta = 0.5, vr_tol = 1e-12;
    add_common(vr_cmd, false);
    vr_cmd->add_option("--case", case_arg)
        ->check(CLI::IsMember({"laguerre-exp", "nml", "wright", "tricomi", "besselj0"}));
    vr_cmd->add_option("--n", vr_n, "index count for laguerre-exp/nml");
    vr_cmd->add_option("--nu-value", vr_nu, "nu for nml/wright");
    vr_cmd->add_option("--beta", vr_beta, "beta for wright");
    vr_cmd->add_option("--grid", vr_grid, "real grid (wright/besselj0 cases)");
    vr_cmd->add_option("--tol", vr_tol, "absolute tolerance");

    // verify-pde
    auto* vp_cmd = app.add_subcommand("verify-pde", "separable isochronous solution check");
    PdeParams pde;
    std::string xg_arg = "0.2:1.5:10", tg_arg = "0:3:3";
    double vp_tol = 1e-6;
    add_common(vp_cmd, false);
    vp_cmd->add_option("--pde-alpha", pde.alpha);
    vp_cmd->add_option("--pde-beta", pde.beta);
    vp_cmd->add_option("--pde-nu", pde.nu);
    vp_cmd->add_option("--omega", pde.omega);
    vp_cmd->add_option("--kcoef", pde.kcoef);
    vp_cmd->add_option("--xgrid", xg_arg);
    vp_cmd->add_option("--tgrid", tg_arg);
    vp_cmd->add_option("--tol", vp_tol);

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run the full verification battery");
    SuiteOptions sopts;
    add_common(suite_cmd, false);
    suite_cmd->add_option("--tol-eigen", sopts.tol_eigen);
    suite_cmd->add_option("--tol-reduction", sopts.tol_reduction);
    suite_cmd->add_option("--tol-pde", sopts.tol_pde);
    suite_cmd->add_option("--seed", sopts.seed);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            std::vector<std::complex<double>> points;
            if (!z_arg.empty()) points.push_back(parse_complex(z_arg));
            if (!grid_arg.empty())
                for (double x : parse_grid(grid_arg)) points.emplace_back(x, 0.0);
            if (!points_file.empty()) {
                std::ifstream f(points_file);
                if (!f) throw InvalidParamsError("cannot open points file " + points_file);
                json j;
                f >> j;
                for (const auto& p : j) points.emplace_back(p.at(0).get<double>(),
                                                            p.at(1).get<double>());
            }
            if (points.empty()) throw InvalidParamsError("need --z, --grid or --points-file");

            std::vector<std::vector<double>> rows;
            if (!kind_arg.empty()) {
                auto kind = baseline_kind(kind_arg);
                if (!kind) throw InvalidParamsError("unknown baseline kind " + kind_arg);
                BaselineSpec spec{*kind, kind_params_arg.empty()
                                             ? std::vector<double>{}
                                             : parse_doubles(kind_params_arg)};
                for (auto z : points) {
                    std::complex<double> v = eval_baseline(spec, z, opts);
                    rows.push_back({z.real(), z.imag(), v.real(), v.imag(), 0.0, 0.0});
                }
            } else {
                OperatorParams params = pspec.resolve();
                for (auto z : points) {
                    EvalResult r = mpw_eval(params, z, opts);
                    rows.push_back({z.real(), z.imag(), r.value.real(), r.value.imag(),
                                    static_cast<double>(r.terms_used), r.tail_estimate});
                }
            }
            emit_table(out, format,
                       {"z_re", "z_im", "value_re", "value_im", "terms_used", "tail_estimate"},
                       rows, "points");
            return 0;
        }

        if (coeffs_cmd->parsed()) {
            OperatorParams params = pspec.resolve();
            auto cs = mpw_coefficients(params, coeff_k);
            std::vector<std::vector<double>> rows;
            for (std::size_t k = 0; k < cs.size(); ++k)
                rows.push_back({static_cast<double>(k), cs[k].real()});
            emit_table(out, format, {"k", "c_k"}, rows, "coeffs");
            return 0;
        }

        if (ratio_cmd->parsed()) {
            OperatorParams params = pspec.resolve();
            auto rs = ratio_diagnostics(params, ratio_k);
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < rs.size(); ++i)
                rows.push_back({static_cast<double>(i + 1), rs[i]});
            emit_table(out, format, {"k", "r_k"}, rows, "ratios");
            return 0;
        }

        if (ve_cmd->parsed()) {
            OperatorParams params = pspec.resolve();
            ResidualReport r =
                check_eigen(params, parse_complex(lambda_arg), parse_grid(ve_grid), ve_tol);
            emit_reports(out, format, {r});
            return r.passed ? 0 : 1;
        }

        if (vr_cmd->parsed()) {
            ReductionCase rc;
            std::vector<std::complex<double>> zs;
            if (case_arg == "laguerre-exp") rc = ReductionCase::laguerre_exp(vr_n);
            else if (case_arg == "nml") rc = ReductionCase::n_mittag_leffler(vr_n, vr_nu);
            else if (case_arg == "wright") rc = ReductionCase::classical_wright(vr_beta, vr_nu);
            else if (case_arg == "besselj0") rc = ReductionCase::bessel_j0();
            else rc = ReductionCase::tricomi();

            bool real_case = case_arg == "wright" || case_arg == "besselj0";
            if (!vr_grid.empty()) {
                for (double x : parse_grid(vr_grid)) zs.emplace_back(x, 0.0);
            } else if (real_case) {
                for (int i = 1; i <= 25; ++i) zs.emplace_back(3.0 * i / 25.0, 0.0);
            } else {
                for (int i = 0; i < 25; ++i) {
                    double x = -3.0 + 6.0 * (i + 0.5) / 25.0;
                    zs.emplace_back(x == 0.0 ? 0.12 : x, 0.0);
                }
            }
            ResidualReport r = check_reduction(rc, zs, vr_tol);
            emit_reports(out, format, {r});
            return r.passed ? 0 : 1;
        }

        if (vp_cmd->parsed()) {
            ResidualReport r = check_pde(pde, parse_grid(xg_arg), parse_grid(tg_arg), vp_tol);
            ResidualReport iso =
                check_pde_isochrony(pde, parse_grid(xg_arg), parse_grid(tg_arg));
            emit_reports(out, format, {r, iso});
            return (r.passed && iso.passed) ? 0 : 1;
        }

        if (suite_cmd->parsed()) {
            SuiteResult s = run_suite(sopts);
            emit_reports(out, format, s.reports);
            return s.failures;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace mpw
