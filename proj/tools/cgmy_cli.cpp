// Command-line front end: coefficients, price and implied-vol curves,
// oracle cross-checks and timings for CGMY short-maturity expansions.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgmy/bs.hpp"
#include "cgmy/config.hpp"
#include "cgmy/curve.hpp"
#include "cgmy/expansions.hpp"
#include "cgmy/ift.hpp"
#include "cgmy/mc.hpp"

using namespace cgmy;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kValidation = 2, kNumerical = 3 };

struct Options {
    std::string config;
    std::string grid;
    std::string methods = "p1,p2,p3,mc";
    std::string out;
    std::string d32_method = "decomposed";
    std::string iv_source = "price";
    int order = 3;
    std::uint64_t seed = 20240101;
    std::size_t n_paths = 100000;
    std::size_t d32_paths = 1000000;
    int threads = 1;
    double control_vol = 0;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

mc::McConfig price_mc(const Options& o) { return {o.n_paths, o.seed, o.threads}; }

// d32 uses its own substream family so it never shares draws with the price paths
mc::McConfig d32_mc(const Options& o) { return {o.d32_paths, rng::splitmix64(o.seed ^ 0xd32), o.threads}; }

expansions::D32Method d32_method(const Options& o)
{
    return o.d32_method == "half-normal" ? expansions::D32Method::half_normal
                                         : expansions::D32Method::decomposed;
}

expansions::ExpansionCoeffs coeffs_for(const ModelConfig& cfg, const Options& o)
{
    if (cfg.params.family() == ModelFamily::mixed) return expansions::mixed_coeffs(cfg.params, cfg.schedule);
    if (o.order < 3) return expansions::pure_jump_coeffs_closed_form(cfg.params, cfg.schedule);
    return expansions::pure_jump_coeffs(cfg.params, cfg.schedule, d32_mc(o), d32_method(o));
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot write " + o.out);
    f << text;
}

json metadata(const ModelConfig& cfg, const Options& o)
{
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    return {{"params", json::parse(model_config_json(cfg))},
            {"model", to_string(cfg.params.family())},
            {"seed", o.seed},
            {"n_paths", o.n_paths},
            {"d32_paths", o.d32_paths},
            {"d32_seed", d32_mc(o).seed},
            {"d32_method", o.d32_method},
            {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
}

void emit_metadata(const json& meta, const Options& o)
{
    if (o.out.empty()) {
        std::cerr << meta.dump() << '\n';
        return;
    }
    std::ofstream f(o.out + ".meta.json");
    f << meta.dump(2) << '\n';
}

std::vector<std::string> split_methods(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string m;
    while (std::getline(in, m, ',')) {
        if (m.empty()) continue;
        if (m != "p1" && m != "p2" && m != "p3" && m != "mc" && m != "ift")
            throw std::invalid_argument("unknown method \"" + m + "\" (p1,p2,p3,mc,ift)");
        out.push_back(m);
    }
    return out;
}

json coeffs_json(const expansions::ExpansionCoeffs& c)
{
    return {{"model", to_string(c.model)}, {"d1", c.d1},   {"d2", c.d2},
            {"d31", c.d31},                {"d32", c.d32}, {"exponents", c.exponents},
            {"d32_se", c.d32_se}};
}

int cmd_coeffs(const Options& o)
{
    const auto cfg = load_model_config(o.config);
    const auto c = coeffs_for(cfg, o);
    json doc = coeffs_json(c);
    doc["order"] = o.order;
    doc["input"] = metadata(cfg, o);
    emit(o, doc.dump(2) + "\n");
    return kOk;
}

int cmd_curve(const Options& o)
{
    const auto cfg = load_model_config(o.config);
    const auto methods = split_methods(o.methods);
    curve::PriceCurve out;
    if (!methods.empty()) {
        const auto grid = curve::parse_grid(o.grid);
        auto has = [&](const char* m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };
        const bool need_exp = has("p1") || has("p2") || has("p3");
        Options co = o;
        co.order = has("p3") ? 3 : 2;
        expansions::ExpansionCoeffs c;
        if (need_exp) c = coeffs_for(cfg, co);

        for (double t : grid.points()) {
            curve::Row r;
            r.t = t;
            r.kappa = kappa_at(cfg.schedule, t);
            if (has("p1")) r.p1 = expansions::price_expansion(c, t, 1);
            if (has("p2")) r.p2 = expansions::price_expansion(c, t, 2);
            if (has("p3")) r.p3 = expansions::price_expansion(c, t, 3);
            if (has("mc")) {
                const auto e = mc::mc_price(cfg.params, t, r.kappa, price_mc(o));
                r.mc_mean = e.mean;
                r.mc_se = e.se;
            }
            if (has("ift")) {
                try {
                    std::optional<double> S;
                    if (o.control_vol > 0) S = o.control_vol;
                    r.ift = ift::ift_price(cfg.params, t, r.kappa, S);
                } catch (const ift::ToleranceError& e) {
                    std::cerr << "warning: " << e.what() << '\n';
                }
            }
            out.rows.push_back(r);
        }
    }
    emit(o, curve::to_csv(out));
    emit_metadata(metadata(cfg, o), o);
    return kOk;
}

int cmd_ivcurve(const Options& o)
{
    const auto cfg = load_model_config(o.config);
    if (!cfg.schedule.is_atm())
        throw std::invalid_argument("ivcurve requires the ATM schedule (e1 = e2 = 0)");
    const auto grid = curve::parse_grid(o.grid);
    Options co = o;
    co.order = 3;
    const auto c = coeffs_for(cfg, co);

    std::string text = std::string(curve::kIvHeader) + "\n";
    for (double t : grid.points()) {
        const double iv_exp = expansions::iv_expansion(c, t, o.order);
        double price = expansions::price_expansion(c, t, 3);
        if (o.iv_source == "mc") price = mc::mc_price(cfg.params, t, 0.0, price_mc(o)).mean;
        std::string inv;
        try {
            inv = curve::format_cell(bs::implied_vol(price, t, 0.0));
        } catch (const std::domain_error& e) {
            std::cerr << "warning: t = " << t << ": " << e.what() << '\n';
        }
        text += curve::format_cell(t) + "," + curve::format_cell(iv_exp) + "," + inv + "\n";
    }
    emit(o, text);
    emit_metadata(metadata(cfg, o), o);
    return kOk;
}

int cmd_bench(const Options& o)
{
    const auto cfg = load_model_config(o.config);
    const auto ts = curve::parse_grid(o.grid.empty() ? "0.002:0.085:30:lin" : o.grid).points();
    const auto& p = cfg.params;

    double d32_time = 0;
    expansions::ExpansionCoeffs c;
    const auto t0 = Clock::now();
    c = p.family() == ModelFamily::mixed ? expansions::mixed_coeffs(p, cfg.schedule)
                                         : expansions::pure_jump_coeffs_closed_form(p, cfg.schedule);
    const double coeff_time = seconds_since(t0);
    if (p.family() == ModelFamily::pure_jump) {
        const auto t1 = Clock::now();
        const auto est = expansions::d32_pure_mc(p, d32_mc(o), d32_method(o));
        d32_time = seconds_since(t1);
        c.d32 = est.mean;
        c.d32_se = est.se;
    }

    // expansions are cheap, so time a batch of repetitions and report per grid pass
    double order_time[3];
    volatile double sink = 0;
    for (int k = 1; k <= 3; ++k) {
        const int reps = 2000;
        const auto s = Clock::now();
        for (int r = 0; r < reps; ++r)
            for (double t : ts) sink = sink + expansions::price_expansion(c, t, k);
        order_time[k - 1] = seconds_since(s) / reps + coeff_time;
    }

    auto s = Clock::now();
    for (double t : ts) sink = sink + mc::mc_price(p, t, kappa_at(cfg.schedule, t), price_mc(o)).mean;
    const double mc_time = seconds_since(s);

    int ift_fail = 0;
    s = Clock::now();
    for (double t : ts) {
        try {
            sink = sink + ift::ift_price(p, t, kappa_at(cfg.schedule, t));
        } catch (const ift::ToleranceError&) {
            ++ift_fail;
        }
    }
    const double ift_time = seconds_since(s);

    std::printf("grid points        %zu\n", ts.size());
    std::printf("%-18s %12s\n", "method", "seconds");
    std::printf("%-18s %12.3e\n", "order 1", order_time[0]);
    std::printf("%-18s %12.3e\n", "order 2", order_time[1]);
    std::printf("%-18s %12.3e\n", "order 3", order_time[2]);
    if (p.family() == ModelFamily::pure_jump) std::printf("%-18s %12.3e\n", "d32 (one-off)", d32_time);
    std::printf("%-18s %12.3e\n", "mc", mc_time);
    std::printf("%-18s %12.3e  (%d tolerance failures)\n", "ift", ift_time, ift_fail);

    json rep = {{"grid_points", ts.size()},
                {"n_paths", o.n_paths},
                {"seconds",
                 {{"order1", order_time[0]},
                  {"order2", order_time[1]},
                  {"order3", order_time[2]},
                  {"d32_one_off", d32_time},
                  {"mc", mc_time},
                  {"ift", ift_time}}},
                {"ift_failures", ift_fail}};
    if (o.out.empty()) std::cout << rep.dump(2) << '\n';
    else emit(o, rep.dump(2) + "\n");
    return kOk;
}

int cmd_validate(const Options& o)
{
    const auto cfg = load_model_config(o.config);
    const auto& p = cfg.params;
    bool ok = true;
    auto line = [&](bool pass, const std::string& what) {
        std::printf("%s  %s\n", pass ? "PASS" : "FAIL", what.c_str());
        ok = ok && pass;
    };

    double worst = 0;
    for (double t : {1.0 / 252, 1.0 / 52, 1.0 / 12, 0.25})
        worst = std::max(worst, std::abs(char_fn(p, t, {0.0, -1.0}) - 1.0));
    line(worst < 1e-10, "martingale |phi_t(-i) - 1| = " + curve::format_cell(worst));

    const auto w = mc::mc_weight_identity_check(p, 1.0 / 12, o.n_paths, o.seed);
    const double target = std::exp(p.derived().eta / 12);
    line(std::abs(w.mean - target) <= 3 * w.se,
         "E exp(-U_t) = exp(eta t) at t=1/12: " + curve::format_cell(w.mean) + " vs " + curve::format_cell(target));

    const auto m = mc::mc_price(p, 0.25, 0.0, price_mc(o));
    try {
        const double f = ift::ift_price(p, 0.25, 0.0);
        line(std::abs(m.mean - f) <= std::max(3 * m.se, 1e-4),
             "mc vs ift at t=0.25: " + curve::format_cell(m.mean) + " vs " + curve::format_cell(f));
    } catch (const ift::ToleranceError& e) {
        line(false, std::string("ift at t=0.25: ") + e.what());
    }

    if (p.family() == ModelFamily::mixed) {
        const double a = expansions::mixed_coeffs(p, schedule_for(p, 0, 0)).d32;
        const double b = expansions::mixed_d32_alternate(p);
        line(std::abs(a - b) <= 1e-10 * std::abs(b), "mixed d32 two routes agree");
    }
    return ok ? kOk : kNumerical;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"CGMY short-maturity call prices: expansions, Monte Carlo and Fourier oracles"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sc, bool grid) {
        sc->add_option("--config", o.config, "model JSON {C,G,M,Y,sigma,e1,e2}")->required();
        if (grid) sc->add_option("--grid", o.grid, "START:STOP:COUNT:log|lin");
        sc->add_option("--seed", o.seed, "master seed");
        sc->add_option("--n-paths", o.n_paths, "Monte Carlo paths per price");
        sc->add_option("--d32-paths", o.d32_paths, "pairs for the pure-jump d32 estimator");
        sc->add_option("--d32-method", o.d32_method, "decomposed|half-normal")
            ->check(CLI::IsMember({"decomposed", "half-normal"}));
        sc->add_option("--threads", o.threads, "OpenMP workers (results do not depend on it)");
        sc->add_option("--out", o.out, "output file (default stdout)");
    };

    auto* coeffs = app.add_subcommand("coeffs", "expansion coefficients as JSON");
    common(coeffs, false);
    coeffs->add_option("--order", o.order, "1, 2 or 3")->check(CLI::Range(1, 3));

    auto* curve_cmd = app.add_subcommand("curve", "price curve CSV");
    common(curve_cmd, true);
    curve_cmd->add_option("--methods", o.methods, "comma list of p1,p2,p3,mc,ift; bare flag or empty for none")
        ->expected(0, 1);
    curve_cmd->add_option("--control-vol", o.control_vol, "IFT control volatility (default heuristic)");

    auto* iv = app.add_subcommand("ivcurve", "ATM implied-vol curve CSV");
    common(iv, true);
    iv->add_option("--order", o.order, "1, 2 or 3")->check(CLI::Range(1, 3));
    iv->add_option("--iv-source", o.iv_source, "price inverted in the last column: price|mc")
        ->check(CLI::IsMember({"price", "mc"}));

    auto* bench = app.add_subcommand("bench", "timing table");
    common(bench, true);

    auto* validate = app.add_subcommand("validate", "oracle cross-checks for one config");
    common(validate, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }

    try {
        if ((curve_cmd->parsed() || iv->parsed()) && o.grid.empty())
            throw std::invalid_argument("--grid is required");
        if (coeffs->parsed()) return cmd_coeffs(o);
        if (curve_cmd->parsed()) return cmd_curve(o);
        if (iv->parsed()) return cmd_ivcurve(o);
        if (bench->parsed()) return cmd_bench(o);
        return cmd_validate(o);
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
}
