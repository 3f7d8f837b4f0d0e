// cfz: Chebyshev/Zolotarev-type extremal polynomial toolkit.
//
// Subcommands wire the library into reproducible experiments; every run can
// emit a JSON report (--out) and, where plottable, a CSV data file (--csv).

#include <chrono>
#include <future>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfz/blaschke.hpp"
#include "cfz/cf_schur.hpp"
#include "cfz/coeff_functionals.hpp"
#include "cfz/error.hpp"
#include "cfz/remez.hpp"
#include "cfz/report.hpp"

namespace {

using nlohmann::json;

void emit(const cfz::RunConfig& cfg, json results) {
    const json report = cfz::make_report(cfg, std::move(results));
    const std::string text = report.dump(2) + "\n";
    if (cfg.out_path.empty())
        std::cout << text;
    else
        cfz::write_text_file(cfg.out_path, text);
}

void emit_csv(const cfz::RunConfig& cfg, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
    if (cfg.csv_path.empty())
        return;
    cfz::write_text_file(cfg.csv_path, cfz::csv_table(header, rows));
}

json cf_solution_json(const cfz::CFSolution& sol) {
    json pc = json::array();
    for (const auto& c : sol.p.coeffs())
        pc.push_back(cfz::complex_to_json(c));
    return json{{"l", sol.l},
                {"gamma", cfz::complex_to_json(sol.gamma)},
                {"gamma_abs", std::abs(sol.gamma)},
                {"p_coeffs", pc},
                {"residual", sol.residual},
                {"zero_margin", sol.zero_margin}};
}

cfz::CFSolution solve_cf_logged(const std::vector<cfz::Complex>& taus) {
    const cfz::CoefficientSequence seq(taus);
    cfz::CFOutcome out = cfz::solve_cf(seq);
    for (const auto& rej : out.rejections)
        cfz::log_debug("cf rejection at l=" + std::to_string(rej.l) + ": " +
                       cfz::to_string(rej.reason) + " (" + rej.detail + ")");
    if (!out.solution) {
        std::string msg = "cf search failed:";
        for (const auto& rej : out.rejections)
            msg += " [l=" + std::to_string(rej.l) + " " + cfz::to_string(rej.reason) + "]";
        throw cfz::NonConvergenceError(msg, {});
    }
    return *out.solution;
}

int run_cf_solve(const cfz::RunConfig& cfg) {
    const cfz::CFSolution sol = solve_cf_logged(cfg.taus);
    emit(cfg, cf_solution_json(sol));
    return 0;
}

cfz::RemezOptions remez_opts_from(const cfz::RunConfig& cfg) {
    cfz::RemezOptions opts;
    opts.conv_tol = cfg.tol;
    return opts;
}

int run_zolotarev_exact(const cfz::RunConfig& cfg) {
    const cfz::FixedHead head(*cfg.n, cfz::CoefficientSequence(cfg.taus));
    const cfz::MinimaxResult res = cfz::remez_solve(head, remez_opts_from(cfg));
    const cfz::AlternationCheck cert = cfz::verify_alternation(res);
    json ref = json::array();
    for (double phi : res.reference)
        ref.push_back(phi);
    emit(cfg, json{{"n", *cfg.n},
                   {"E_n", res.E_n},
                   {"levelled_error", res.levelled_error},
                   {"iterations", res.iterations},
                   {"alternation_ok", cert.ok},
                   {"reference", ref}});
    const int nodes = std::max(1024, 16 * *cfg.n);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < nodes; ++i) {
        const double phi = 2.0 * M_PI * i / nodes;
        rows.push_back({phi, cfz::eval_error(res, phi)});
    }
    emit_csv(cfg, {"phi", "value"}, rows);
    return 0;
}

int run_zolotarev_asym(const cfz::RunConfig& cfg) {
    const cfz::CFSolution sol = solve_cf_logged(cfg.taus);
    const cfz::AsymZolotarev az(cfz::BlaschkeDatum(sol.p, sol.gamma), *cfg.n);
    const int nodes = std::max({1024, 16 * *cfg.n, 2 * (*cfg.n + sol.l) + 2});
    const auto samples = cfz::sample_grid(az, nodes);
    double sup = 0.0;
    std::vector<std::vector<double>> rows;
    for (const auto& s : samples) {
        sup = std::max(sup, std::abs(s.value));
        rows.push_back({s.phi, s.value});
    }
    emit(cfg, json{{"n", *cfg.n},
                   {"cf", cf_solution_json(sol)},
                   {"r", az.datum.r},
                   {"grid_sup", sup}});
    emit_csv(cfg, {"phi", "value"}, rows);
    return 0;
}

int run_compare(const cfz::RunConfig& cfg) {
    const cfz::CFSolution sol = solve_cf_logged(cfg.taus);
    const cfz::FixedHead head(*cfg.n, cfz::CoefficientSequence(cfg.taus));
    const cfz::MinimaxResult res = cfz::remez_solve(head, remez_opts_from(cfg));
    const cfz::AsymZolotarev az(cfz::BlaschkeDatum(sol.p, sol.gamma), *cfg.n);
    const cfz::AsymGap gap = cfz::compare_asymptotic(res, az);
    emit(cfg, json{{"n", *cfg.n},
                   {"E_n", res.E_n},
                   {"gamma_abs", std::abs(sol.gamma)},
                   {"E_gap", gap.E_gap},
                   {"sup_gap", gap.sup_gap},
                   {"iterations", res.iterations},
                   {"r", az.datum.r}});
    const int nodes = std::max(1024, 16 * (*cfg.n + sol.l));
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < nodes; ++i) {
        const double phi = 2.0 * M_PI * i / nodes;
        rows.push_back({phi, cfz::eval_error(res, phi), cfz::eval_asym_zolotarev(az, phi)});
    }
    emit_csv(cfg, {"phi", "exact", "asym"}, rows);
    return 0;
}

int run_sweep(const cfz::RunConfig& cfg) {
    const cfz::CFSolution sol = solve_cf_logged(cfg.taus);
    const cfz::BlaschkeDatum datum(sol.p, sol.gamma);
    const double gamma_abs = std::abs(sol.gamma);
    const std::vector<int> ns = cfg.n_range->values();
    const cfz::RemezOptions ropts = remez_opts_from(cfg);

    const auto solve_one = [&](int n) {
        const auto t0 = std::chrono::steady_clock::now();
        const cfz::FixedHead head(n, cfz::CoefficientSequence(cfg.taus));
        const cfz::MinimaxResult res = cfz::remez_solve(head, ropts);
        const cfz::AsymGap gap = cfz::compare_asymptotic(res, cfz::AsymZolotarev(datum, n));
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return cfz::SweepRecord{n, res.E_n, gamma_abs, gap.E_gap, gap.sup_gap,
                                res.iterations, wall};
    };

    std::vector<cfz::SweepRecord> records(ns.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < ns.size(); ++i)
            records[i] = solve_one(ns[i]);
    } else {
        std::vector<std::future<void>> workers;
        std::atomic<size_t> next{0};
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (size_t i = next.fetch_add(1); i < ns.size(); i = next.fetch_add(1))
                    records[i] = solve_one(ns[i]);
            }));
        for (auto& w : workers)
            w.get();
    }

    // Machine-precision gaps are numerically zero; drop them from the fit
    // rather than contaminating the slope.
    const double floor = 1e-12 * std::max(1.0, gamma_abs);
    json results{{"gamma_abs", gamma_abs}, {"r", datum.r}};
    json recs = json::array();
    std::vector<std::pair<int, double>> e_series, sup_series;
    std::vector<std::vector<double>> rows;
    for (const auto& r : records) {
        recs.push_back(cfz::to_json(r));
        e_series.push_back({r.n, r.E_gap});
        sup_series.push_back({r.n, r.sup_gap});
        rows.push_back({static_cast<double>(r.n), r.E_n, r.E_gap, r.sup_gap});
    }
    results["records"] = recs;
    try {
        results["fit_E_gap"] = cfz::to_json(cfz::fit_geometric(e_series, floor));
    } catch (const cfz::DomainError& e) {
        results["fit_E_gap"] = json{{"error", e.what()}};
    }
    try {
        results["fit_sup_gap"] = cfz::to_json(cfz::fit_geometric(sup_series, floor));
    } catch (const cfz::DomainError& e) {
        results["fit_sup_gap"] = json{{"error", e.what()}};
    }
    emit(cfg, std::move(results));
    emit_csv(cfg, {"n", "E_n", "E_gap", "sup_gap"}, rows);
    return 0;
}

const char* branch_name(cfz::EtaBranch b) {
    switch (b) {
    case cfz::EtaBranch::SqrtCase: return "sqrt_case";
    case cfz::EtaBranch::PositiveCase: return "positive_case";
    case cfz::EtaBranch::BruteForce: return "brute_force";
    }
    return "?";
}

int run_eta(const cfz::RunConfig& cfg) {
    cfz::EtaOptions opts;
    opts.brute_force_seed = static_cast<unsigned>(cfg.seed ? cfg.seed : 0x00e7a);
    const cfz::EtaSolution sol = cfz::eta(cfz::FunctionalWeights(cfg.mus), opts);
    json lambdas = json::array();
    for (const auto& lam : sol.lambdas)
        lambdas.push_back(cfz::complex_to_json(lam));
    json coeffs = json::array();
    for (const auto& c : sol.extremal_coeffs)
        coeffs.push_back(cfz::complex_to_json(c));
    emit(cfg, json{{"eta", sol.eta},
                   {"branch", branch_name(sol.branch)},
                   {"lambdas", lambdas},
                   {"extremal_coeffs", coeffs},
                   {"extremal_r", sol.extremal.r}});
    return 0;
}

int run_landau(const cfz::RunConfig& cfg) {
    const int l = *cfg.l;
    json results{{"l", l}, {"G_l", cfz::landau_constant(l)}};
    if (l >= 1) {
        const cfz::BlaschkeDatum datum = cfz::landau_extremal(l);
        const auto c = cfz::taylor_ratio(datum.p, l);
        cfz::Complex sum(0.0);
        json coeffs = json::array();
        for (const auto& x : c) {
            sum += x;
            coeffs.push_back(cfz::complex_to_json(x));
        }
        results["extremal_coeffs"] = coeffs;
        results["coeff_sum"] = sum.real();
    }
    emit(cfg, std::move(results));
    return 0;
}

int run_clenshaw(const cfz::RunConfig& cfg) {
    const cfz::CoefficientSequence taus(cfg.taus);
    const double ratio = cfz::clenshaw_ratio(taus, *cfg.n, remez_opts_from(cfg));
    const double bound = cfz::landau_constant(taus.m());
    emit(cfg, json{{"n", *cfg.n}, {"ratio", ratio}, {"landau_bound", bound}});
    return 0;
}

int run_l1check(const cfz::RunConfig& cfg) {
    const cfz::L1Result res = cfz::l1_min_deviation(cfz::FunctionalWeights(cfg.mus), *cfg.n);
    emit(cfg, json{{"n", *cfg.n},
                   {"computed", res.computed},
                   {"predicted", res.predicted},
                   {"grid_value", res.grid_value},
                   {"rel_error", std::abs(res.computed - res.predicted) / res.predicted}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotically optimal trigonometric polynomials with prescribed leading "
                 "coefficients: Caratheodory-Fejer solver, exact Remez oracle, and "
                 "coefficient-functional bounds"};
    app.require_subcommand(1);

    cfz::RunConfig cfg;
    std::string taus_text, mus_text, range_text;
    int n = 0, l = 0;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "JSON report path (stdout when omitted)");
        sub->add_option("--csv", cfg.csv_path, "CSV plot-data path");
        sub->add_option("--tol", cfg.tol, "solver tolerance")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomized searches");
    };
    const auto add_taus = [&](CLI::App* sub) {
        sub->add_option("--taus", taus_text,
                        "comma-separated complex list, tokens 'a', 'a+bi', 'a-bi'")
            ->required();
    };
    const auto add_mus = [&](CLI::App* sub) {
        sub->add_option("--mus", mus_text,
                        "comma-separated complex list, tokens 'a', 'a+bi', 'a-bi'")
            ->required();
    };

    CLI::App* cf = app.add_subcommand("cf-solve", "Caratheodory-Fejer/Schur solution for tau");
    add_taus(cf);
    add_common(cf);

    CLI::App* zx = app.add_subcommand("zolotarev-exact",
                                      "exact minimal polynomial via Remez exchange");
    add_taus(zx);
    zx->add_option("--n", n, "polynomial degree")->required();
    add_common(zx);

    CLI::App* za = app.add_subcommand("zolotarev-asym", "asymptotic minimal polynomial");
    add_taus(za);
    za->add_option("--n", n, "polynomial degree")->required();
    add_common(za);

    CLI::App* cp = app.add_subcommand("compare", "exact vs asymptotic at one degree");
    add_taus(cp);
    cp->add_option("--n", n, "polynomial degree")->required();
    add_common(cp);

    CLI::App* sw = app.add_subcommand("sweep", "convergence sweep over a degree range");
    add_taus(sw);
    sw->add_option("--n-range", range_text, "inclusive start:stop[:step]")->required();
    sw->add_option("--jobs", cfg.jobs, "parallel solves")->capture_default_str();
    add_common(sw);

    CLI::App* et = app.add_subcommand("eta", "sharp coefficient-functional bound");
    add_mus(et);
    add_common(et);

    CLI::App* la = app.add_subcommand("landau", "Landau constant and extremal data");
    la->add_option("--l", l, "number of constrained coefficients")->required();
    add_common(la);

    CLI::App* cl = app.add_subcommand("clenshaw", "truncation-to-minimax ratio");
    add_taus(cl);
    cl->add_option("--n", n, "polynomial degree")->required();
    add_common(cl);

    CLI::App* l1 = app.add_subcommand("l1check", "L1 minimal deviation vs closed form");
    add_mus(l1);
    l1->add_option("--n", n, "polynomial degree")->required();
    add_common(l1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.subcommand = sub->get_name();
        if (!taus_text.empty())
            cfg.taus = cfz::parse_complex_list(taus_text);
        if (!mus_text.empty())
            cfg.mus = cfz::parse_complex_list(mus_text);
        const CLI::Option* n_opt = sub->get_option_no_throw("--n");
        if (n_opt && n_opt->count())
            cfg.n = n;
        if (!range_text.empty())
            cfg.n_range = cfz::parse_n_range(range_text);
        const CLI::Option* l_opt = sub->get_option_no_throw("--l");
        if (l_opt && l_opt->count())
            cfg.l = l;

        if (cfg.subcommand == "cf-solve")
            return run_cf_solve(cfg);
        if (cfg.subcommand == "zolotarev-exact")
            return run_zolotarev_exact(cfg);
        if (cfg.subcommand == "zolotarev-asym")
            return run_zolotarev_asym(cfg);
        if (cfg.subcommand == "compare")
            return run_compare(cfg);
        if (cfg.subcommand == "sweep")
            return run_sweep(cfg);
        if (cfg.subcommand == "eta")
            return run_eta(cfg);
        if (cfg.subcommand == "landau")
            return run_landau(cfg);
        if (cfg.subcommand == "clenshaw")
            return run_clenshaw(cfg);
        if (cfg.subcommand == "l1check")
            return run_l1check(cfg);
        cfz::log_error("unknown subcommand " + cfg.subcommand);
        return 2;
    } catch (const cfz::DomainError& e) {
        cfz::log_error(std::string("invalid input: ") + e.what());
        return 2;
    } catch (const std::exception& e) {
        cfz::log_error(e.what());
        return 1;
    }
}
