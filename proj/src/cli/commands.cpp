#include "polariton/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <limits>

#include "polariton/cli/log.hpp"
#include "polariton/cli/svg.hpp"
#include "polariton/constants.hpp"
#include "polariton/dispersion.hpp"
#include "polariton/eit.hpp"
#include "polariton/parallel.hpp"

namespace polariton::cli {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

ResultTable make_table(const ScenarioConfig& cfg, std::vector<Column> columns) {
    ResultTable t;
    t.columns = std::move(columns);
    t.config_hash = cfg.hash;
    t.version = std::string(tool_version);
    return t;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return v;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
    std::vector<double> v = linspace(std::log10(lo), std::log10(hi), n);
    for (double& x : v) x = std::pow(10.0, x);
    if (n >= 1) v.front() = lo;
    if (n >= 2) v.back() = hi;
    return v;
}

// Micrometre-rounded distance in mm, used in file names.
std::string mm_label(double x) { return format_number(std::round(x * 1e6) / 1e3); }

double safe_group_velocity(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2, double w,
                           Polarization pol) {
    try {
        return group_velocity(m1, m2, w, pol);
    } catch (const NumericError&) {
        return nan_value;
    } catch (const DomainError&) {
        return nan_value;
    }
}

ResultTable dispersion_table(const ScenarioConfig& cfg, const HalfSpaceMaterial& m2,
                             unsigned jobs) {
    const BandSection& b = cfg.band;
    const HalfSpaceMaterial& m1 = cfg.materials.medium1;
    const std::vector<double> grid = linspace(b.omega_min, b.omega_max, b.points);
    auto rows = parallel_map(grid.size(), jobs, [&](std::size_t i) {
        const double w = grid[i] * b.omega_ref;
        std::vector<double> row(7, nan_value);
        row[0] = grid[i];
        bool bound_tm = false, bound_te = false;
        for (Polarization pol : polarization_support(m1, m2, w)) {
            (pol == Polarization::TM ? bound_tm : bound_te) = true;
        }
        try {
            const DispersionPoint dp = sp_wavevector(m1, m2, w, b.polarization);
            row[1] = dp.k_par;
            row[2] = dp.kappa;
            row[3] = dp.kappa / b.kappa0;
            if (dp.bound) row[4] = safe_group_velocity(m1, m2, w, b.polarization);
        } catch (const SingularityError&) {
        }
        row[5] = bound_tm ? 1.0 : 0.0;
        row[6] = bound_te ? 1.0 : 0.0;
        return row;
    });
    ResultTable t = make_table(cfg, {{"omega_over_we", ""},
                                     {"k_par", "1/m"},
                                     {"kappa", "1/m"},
                                     {"kappa_over_kappa0", ""},
                                     {"v0", "m/s"},
                                     {"bound_TM", ""},
                                     {"bound_TE", ""}});
    for (auto& r : rows) t.add_row(std::move(r));
    return t;
}

struct AbyssRow {
    bool found = false;
    AbyssResult result;
};

AbyssRow try_abyss(const HalfSpaceMaterial& m1, const HalfSpaceMaterial& m2,
                   const BandSection& b) {
    AbyssRow row;
    try {
        row.result = find_abyss(m1, m2, {b.omega_min * b.omega_ref, b.omega_max * b.omega_ref},
                                b.polarization);
        row.found = true;
    } catch (const NotFoundError&) {
    }
    return row;
}

}  // namespace

OperatingPoint resolve_operating_point(const ScenarioConfig& cfg) {
    OperatingPoint op;
    const HalfSpaceMaterial& m1 = cfg.materials.medium1;
    const HalfSpaceMaterial& m2 = cfg.materials.medium2;
    op.omega31 = cfg.eit.omega31 * cfg.band.omega_ref;
    op.mode = sp_wavevector(m1, m2, op.omega31, Polarization::TM);
    op.params = cfg.eit.params;

    const bool need_mode = cfg.eit.k1s_auto || !cfg.pulse.kappa31 || !cfg.pulse.v0 ||
                           !cfg.eit.alpha0;
    if (need_mode && !op.mode.bound) {
        throw DomainError("no bound TM surface mode at eit.omega31 = " +
                          format_value(cfg.eit.omega31) + " omega_ref");
    }
    op.v0 = cfg.pulse.v0 ? *cfg.pulse.v0 : group_velocity(m1, m2, op.omega31, Polarization::TM);
    op.kappa31 = cfg.pulse.kappa31 ? *cfg.pulse.kappa31 : std::abs(op.mode.kappa);
    if (cfg.eit.k1s_auto) {
        op.params.k1s = std::abs(op.mode.k1);
        op.params.k1c = op.params.k1s;
        op.params.z0 = 1.0 / op.params.k1s;
    }
    op.k1s = op.params.k1s;

    if (cfg.eit.alpha0) {
        op.alpha0 = *cfg.eit.alpha0;
    } else {
        NormalizationOptions nopts;
        nopts.require_positive_re_lz = cfg.eit.strict_normalization;
        try {
            op.norm = mode_normalization(m1, m2, op.mode, op.params.Ly, nopts);
        } catch (const NonphysicalModeError& e) {
            throw ConfigError(std::string(e.what()) +
                              "; set eit.strict_normalization = false to normalize with |Lz|, "
                              "or supply eit.alpha0");
        }
        Dipole d;
        d.magnitude = cfg.eit.dipole > 0.0 ? cfg.eit.dipole : atomic_dipole_scale();
        op.coupling = coupling_constant(op.norm, op.mode, d);
        op.alpha0 = alpha_resonant(op.params, std::norm(op.coupling.g), op.v0);
        op.alpha0_computed = true;
    }
    return op;
}

PropagationScenario make_scenario(const ScenarioConfig& cfg, const OperatingPoint& op) {
    PropagationScenario s;
    s.delta_t = cfg.pulse.delta_t;
    s.v0 = op.v0;
    s.kappa31 = op.kappa31;
    s.eit = op.params;
    s.alpha0 = op.alpha0;
    s.grid.n_nu = cfg.pulse.n_nu;
    s.grid.nu_span = cfg.pulse.nu_span;
    s.x = cfg.pulse.x.front();
    return s;
}

std::vector<Output> compute_dispersion(const ScenarioConfig& cfg, unsigned jobs) {
    std::vector<Output> out;
    out.push_back({"dispersion.csv", dispersion_table(cfg, cfg.materials.medium2, jobs)});
    if (cfg.materials.reference) {
        out.push_back(
            {"dispersion_reference.csv", dispersion_table(cfg, *cfg.materials.reference, jobs)});
    }

    ResultTable abyss = make_table(cfg, {{"medium", ""},
                                         {"found", ""},
                                         {"omega0_over_we", ""},
                                         {"kappa_at_omega0", "1/m"},
                                         {"kappa_over_kappa0", ""},
                                         {"residual", ""},
                                         {"residual_warning", ""}});
    std::vector<const HalfSpaceMaterial*> media = {&cfg.materials.medium2};
    if (cfg.materials.reference) media.push_back(&*cfg.materials.reference);
    for (std::size_t i = 0; i < media.size(); ++i) {
        const AbyssRow r = try_abyss(cfg.materials.medium1, *media[i], cfg.band);
        if (r.found) {
            abyss.add_row({static_cast<double>(i), 1.0, r.result.omega0 / cfg.band.omega_ref,
                           r.result.kappa_at_omega0, r.result.kappa_at_omega0 / cfg.band.kappa0,
                           r.result.residual, r.result.residual_warning ? 1.0 : 0.0});
        } else {
            abyss.add_row({static_cast<double>(i), 0.0, nan_value, nan_value, nan_value,
                           nan_value, nan_value});
        }
    }
    out.push_back({"abyss.csv", std::move(abyss)});
    return out;
}

std::vector<Output> compute_lossmap(const ScenarioConfig& cfg, unsigned jobs) {
    const BandSection& b = cfg.band;
    const HalfSpaceMaterial& m2 = cfg.materials.medium2;
    const auto* e = std::get_if<DrudeParams>(&m2.epsilon);
    const auto* m = std::get_if<DrudeParams>(&m2.mu);
    if (e == nullptr || m == nullptr) {
        throw ConfigError("lossmap needs Drude epsilon and mu in materials.medium2");
    }
    const double gamma_e = e->loss_rate;
    if (!(gamma_e > 0.0)) throw ConfigError("lossmap needs materials.medium2.gamma_e > 0");

    const std::vector<double> ratios = logspace(b.gamma_ratio_min, b.gamma_ratio_max, b.gamma_points);
    const std::vector<double> grid = linspace(b.omega_min, b.omega_max, b.points);

    struct Slice {
        std::vector<double> kappa;
        AbyssRow abyss;
    };
    auto slices = parallel_map(ratios.size(), jobs, [&](std::size_t i) {
        HalfSpaceMaterial mat = m2;
        std::get<DrudeParams>(mat.mu).loss_rate = ratios[i] * gamma_e;
        Slice s;
        s.kappa.reserve(grid.size());
        for (double w : grid) {
            try {
                s.kappa.push_back(
                    sp_wavevector(cfg.materials.medium1, mat, w * b.omega_ref, b.polarization).kappa /
                    b.kappa0);
            } catch (const SingularityError&) {
                s.kappa.push_back(nan_value);
            }
        }
        s.abyss = try_abyss(cfg.materials.medium1, mat, b);
        return s;
    });

    ResultTable map = make_table(
        cfg, {{"gamma_m_over_gamma_e", ""}, {"omega_over_we", ""}, {"kappa_over_kappa0", ""}});
    ResultTable track = make_table(cfg, {{"gamma_m_over_gamma_e", ""},
                                         {"found", ""},
                                         {"omega0_over_we", ""},
                                         {"kappa_at_omega0_over_kappa0", ""},
                                         {"residual", ""}});
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            map.add_row({ratios[i], grid[j], slices[i].kappa[j]});
        }
        const AbyssRow& a = slices[i].abyss;
        if (a.found) {
            track.add_row({ratios[i], 1.0, a.result.omega0 / b.omega_ref,
                           a.result.kappa_at_omega0 / b.kappa0, a.result.residual});
        } else {
            track.add_row({ratios[i], 0.0, nan_value, nan_value, nan_value});
        }
    }
    std::vector<Output> out;
    out.push_back({"lossmap.csv", std::move(map)});
    out.push_back({"abyss_track.csv", std::move(track)});
    return out;
}

std::vector<Output> compute_eit_spectrum(const ScenarioConfig& cfg, unsigned jobs) {
    const EitSection& e = cfg.eit;
    const OperatingPoint op = resolve_operating_point(cfg);
    const LambdaMediumParams base = op.params;
    const double gsq_over_v0 =
        base.density > 0.0 ? op.alpha0 * base.k1s * base.Gamma31 / (constants::pi * base.density * base.Ly)
                           : 0.0;
    const std::vector<double> nus = linspace(e.nu_min, e.nu_max, e.nu_points);
    const std::size_t n = e.omegas.size() * nus.size();

    auto rows = parallel_map(n, jobs, [&](std::size_t k) {
        const double om = e.omegas[k / nus.size()];
        const double nu_rel = nus[k % nus.size()];
        LambdaMediumParams p = base;
        p.Omega = om * p.Gamma31;
        const double nu = nu_rel * p.Gamma31;
        const EitResponse r = alpha_response(p, op.alpha0, nu);
        cplx quad(nan_value, nan_value);
        if (e.quadrature) quad = alpha_quadrature(p, gsq_over_v0, r.nu);
        return std::vector<double>{om,
                                   nu_rel,
                                   r.alpha.real() * e.x,
                                   r.alpha.imag() * e.x,
                                   r.G.real(),
                                   r.G.imag(),
                                   quad.real() * e.x,
                                   quad.imag() * e.x};
    });
    ResultTable t = make_table(cfg, {{"Omega_over_Gamma31", ""},
                                     {"nu_over_Gamma31", ""},
                                     {"Re_alpha_x", ""},
                                     {"Im_alpha_x", ""},
                                     {"Re_G", ""},
                                     {"Im_G", ""},
                                     {"Re_alpha_quad_x", ""},
                                     {"Im_alpha_quad_x", ""}});
    for (auto& r : rows) t.add_row(std::move(r));

    logger().log(Level::Info, "eit.operating_point",
                 {{"alpha0", format_value(op.alpha0)},
                  {"alpha0_computed", op.alpha0_computed ? "true" : "false"},
                  {"k1s", format_value(base.k1s)},
                  {"v0", format_value(op.v0)}});
    std::vector<Output> out;
    out.push_back({"eit_spectrum.csv", std::move(t)});
    return out;
}

std::vector<Output> compute_propagate(const ScenarioConfig& cfg, unsigned jobs) {
    const PulseSection& ps = cfg.pulse;
    const OperatingPoint op = resolve_operating_point(cfg);
    const PropagationScenario base = make_scenario(cfg, op);
    for (const std::string& w : soft_warnings(base.eit)) {
        logger().log(Level::Warn, "eit.params", {{"message", w}});
    }

    // Jobs: every (Ω, x) pair, then the n = 0 control row for each x.
    struct Job {
        double omega;
        double x;
        bool control;
    };
    std::vector<Job> list;
    for (double om : ps.omegas) {
        for (double x : ps.x) list.push_back({om, x, false});
    }
    for (double x : ps.x) list.push_back({ps.omegas.front(), x, true});

    auto runs = parallel_map(list.size(), jobs, [&](std::size_t i) {
        PropagationScenario s = base;
        s.x = list[i].x;
        s.eit.Omega = list[i].omega * s.eit.Gamma31;
        if (list[i].control) s.eit.density = 0.0;
        return propagate_pulse(s);
    });

    std::vector<Output> out;
    const double G = base.eit.Gamma31;
    const double dt = base.delta_t;
    const bool tag_omega = ps.omegas.size() > 1;

    auto pulse_table = [&](const PropagatedPulse& p, bool input) {
        ResultTable t = make_table(cfg, {{"t_Gamma31", ""}, {"t_over_dt", ""}, {"abs_envelope", ""}});
        if (input) {
            for (double tt : p.time) {
                t.add_row({tt * G, tt / dt, std::exp(-0.5 * (tt / dt) * (tt / dt))});
            }
        } else {
            for (std::size_t k = 0; k < p.time.size(); ++k) {
                t.add_row({p.time[k] * G, p.time[k] / dt, std::abs(p.envelope[k])});
            }
        }
        return t;
    };
    out.push_back({"pulse_x0mm.csv", pulse_table(runs.front(), true)});

    ResultTable metrics = make_table(cfg, {{"x", "m"},
                                           {"Omega_over_Gamma31", ""},
                                           {"density", "1/m^3"},
                                           {"delay_over_dt", ""},
                                           {"eit_delay_over_dt", ""},
                                           {"amp_ratio", ""},
                                           {"width_ratio", ""},
                                           {"vg", "m/s"},
                                           {"l_sp", "m"},
                                           {"energy_ratio", ""}});
    for (std::size_t i = 0; i < list.size(); ++i) {
        const PropagatedPulse& p = runs[i];
        const PulseMetrics& m = p.metrics;
        metrics.add_row({list[i].x, list[i].omega, list[i].control ? 0.0 : base.eit.density,
                         m.delay / dt, m.eit_delay / dt, m.amp_ratio, m.width_ratio, m.vg, m.l_sp,
                         p.energy_out / p.energy_in});
        if (list[i].control) continue;
        std::string name = "pulse_x" + mm_label(list[i].x) + "mm";
        if (tag_omega) name += "_Omega" + format_number(list[i].omega);
        out.push_back({name + ".csv", pulse_table(p, false)});
    }
    out.push_back({"metrics.csv", std::move(metrics)});

    if (!ps.sweep_omegas.empty()) {
        PropagationScenario s = base;
        s.x = ps.x.front();
        std::vector<double> omegas;
        for (double om : ps.sweep_omegas) omegas.push_back(om * s.eit.Gamma31);
        const DelaySweep sweep = delay_vs_control(s, omegas, jobs);
        ResultTable t = make_table(cfg, {{"Omega_over_Gamma31", ""},
                                         {"x", "m"},
                                         {"delay_over_dt", ""},
                                         {"eit_delay_over_dt", ""},
                                         {"amp_ratio", ""}});
        for (const DelayRow& r : sweep.rows) {
            t.add_row({r.Omega / s.eit.Gamma31, s.x, r.delay / dt, r.eit_delay / dt, r.amp_ratio});
        }
        out.push_back({"delay_sweep.csv", std::move(t)});
        ResultTable slope = make_table(cfg, {{"x", "m"}, {"points", ""}, {"slope", ""}});
        slope.add_row({s.x, static_cast<double>(sweep.rows.size()), sweep.slope.value_or(nan_value)});
        out.push_back({"slope.csv", std::move(slope)});
    }
    return out;
}

namespace {

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::vector<double> column(const ResultTable& t, std::size_t c) {
    std::vector<double> v;
    v.reserve(t.rows.size());
    for (const auto& r : t.rows) v.push_back(r[c]);
    return v;
}

const ResultTable* find_table(const std::vector<Output>& outs, const std::string& file) {
    for (const auto& o : outs) {
        if (o.file == file) return &o.table;
    }
    return nullptr;
}

void write_plots(const std::string& name, const ScenarioConfig& cfg,
                 const std::vector<Output>& outs, const std::filesystem::path& dir) {
    if (name == "dispersion") {
        std::vector<Series> series;
        auto add = [&](const ResultTable* t, const std::string& label, const char* color) {
            if (t == nullptr) return;
            Series s{label, column(*t, 0), column(*t, 3), color};
            for (double& y : s.y) y = std::abs(y);
            series.push_back(std::move(s));
        };
        add(find_table(outs, "dispersion.csv"), cfg.materials.medium2.label, palette[0]);
        if (cfg.materials.reference) {
            add(find_table(outs, "dispersion_reference.csv"), cfg.materials.reference->label,
                palette[1]);
        }
        write_svg((dir / "fig3.svg").string(),
                  {"Surface polariton loss", "omega / omega_e", "|kappa| / kappa0", true}, series);
    } else if (name == "lossmap") {
        const ResultTable* t = find_table(outs, "abyss_track.csv");
        Series s{"abyss frequency", column(*t, 0), column(*t, 2), palette[0]};
        for (double& x : s.x) x = std::log10(x);
        write_svg((dir / "abyss_track.svg").string(),
                  {"Loss minimum vs magnetic loss", "log10(gamma_m / gamma_e)", "omega0 / omega_e"},
                  {s});
    } else if (name == "eit-spectrum") {
        const ResultTable* t = find_table(outs, "eit_spectrum.csv");
        std::vector<Series> series;
        for (std::size_t i = 0; i < cfg.eit.omegas.size(); ++i) {
            Series s{"Omega/Gamma31 = " + format_number(cfg.eit.omegas[i]), {}, {},
                     palette[i % 6]};
            for (const auto& r : t->rows) {
                if (r[0] == cfg.eit.omegas[i]) {
                    s.x.push_back(r[1]);
                    s.y.push_back(r[2]);
                }
            }
            series.push_back(std::move(s));
        }
        write_svg((dir / "eit_spectrum.svg").string(),
                  {"EIT absorption", "nu / Gamma31", "Re alpha x"}, series);
    } else if (name == "propagate") {
        std::vector<Series> series;
        std::size_t i = 0;
        for (const auto& o : outs) {
            if (o.file.rfind("pulse_x", 0) != 0) continue;
            std::string label = o.file.substr(7, o.file.size() - 11);
            series.push_back({"x = " + label, column(o.table, 1), column(o.table, 2),
                              palette[i++ % 6]});
        }
        write_svg((dir / "pulse.svg").string(),
                  {"Pulse envelope", "t / delta_t", "|A|"}, series);
    }
}

bool same_value(double a, double b) {
    if (std::isnan(a) && std::isnan(b)) return true;
    return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

void run_command(const std::string& name, const ScenarioConfig& cfg, const RunOptions& opts) {
    std::vector<Output> outs;
    if (name == "dispersion") {
        outs = compute_dispersion(cfg, opts.jobs);
    } else if (name == "lossmap") {
        outs = compute_lossmap(cfg, opts.jobs);
    } else if (name == "eit-spectrum") {
        outs = compute_eit_spectrum(cfg, opts.jobs);
    } else if (name == "propagate") {
        outs = compute_propagate(cfg, opts.jobs);
    } else {
        throw ConfigError("unknown command '" + name + "'");
    }

    const std::filesystem::path dir = opts.out_dir.empty() ? cfg.output.dir : opts.out_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

    for (const Output& o : outs) {
        const std::string path = (dir / o.file).string();
        write_csv(path, o.table);
        logger().log(Level::Info, "write",
                     {{"file", path}, {"rows", std::to_string(o.table.rows.size())}});
    }
    if (opts.plot || cfg.output.plot) write_plots(name, cfg, outs, dir);

    if (opts.validate) {
        for (const Output& o : outs) {
            const std::string path = (dir / o.file).string();
            const ResultTable back = read_csv(path);
            bool ok = back.columns.size() == o.table.columns.size() &&
                      back.rows.size() == o.table.rows.size() &&
                      back.config_hash == o.table.config_hash && back.version == o.table.version;
            for (std::size_t c = 0; ok && c < back.columns.size(); ++c) {
                ok = back.columns[c].name == o.table.columns[c].name &&
                     back.columns[c].unit == o.table.columns[c].unit;
            }
            for (std::size_t r = 0; ok && r < back.rows.size(); ++r) {
                for (std::size_t c = 0; ok && c < back.rows[r].size(); ++c) {
                    ok = same_value(back.rows[r][c], o.table.rows[r][c]);
                }
            }
            if (!ok) throw IoError("round-trip mismatch in '" + path + "'");
            logger().log(Level::Info, "validate", {{"file", path}, {"status", "ok"}});
        }
    }
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Surface polariton loss, EIT absorption and slow-light pulse propagation"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    std::string config_path;
    RunOptions opts;
    opts.jobs = default_jobs();
    std::vector<std::string> overrides;
    bool verbose = false;

    for (const char* name : {"dispersion", "lossmap", "eit-spectrum", "propagate"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "scenario file")->required();
        sub->add_flag("--plot", opts.plot, "also write SVG plots");
        sub->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", opts.out_dir, "output directory (overrides output.dir)");
        sub->add_flag("--validate", opts.validate, "re-read every CSV and compare");
        sub->add_option("--set", overrides, "section.key=value override");
        sub->add_flag("-v,--verbose", verbose, "debug logging");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (verbose) logger().set_min_level(Level::Debug);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        const ScenarioConfig cfg = load_config_file(config_path, overrides);
        logger().log(Level::Info, "start",
                     {{"command", command},
                      {"config", config_path},
                      {"jobs", std::to_string(opts.jobs)}});
        run_command(command, cfg, opts);
        logger().log(Level::Info, "done", {{"command", command}});
        return 0;
    } catch (const ConfigError& e) {
        logger().log(Level::Error, "config", {{"message", e.what()}});
        return 2;
    } catch (const IoError& e) {
        logger().log(Level::Error, "io", {{"message", e.what()}});
        return 4;
    } catch (const DomainError& e) {
        logger().log(Level::Error, "domain", {{"message", e.what()}});
        return 2;
    } catch (const Error& e) {
        logger().log(Level::Error, "numeric", {{"message", e.what()}});
        return 3;
    } catch (const std::exception& e) {
        logger().log(Level::Error, "internal", {{"message", e.what()}});
        return 3;
    }
}

}  // namespace polariton::cli
