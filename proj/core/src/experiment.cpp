#include "sfac/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sfac/rng.hpp"

namespace sfac {

GridSpec ExperimentConfig::grid() const {
    GridSpec g;
    g.dim = dim;
    g.a = a;
    g.b = b;
    g.m = m;
    return g;
}

SolverConfig ExperimentConfig::solver() const {
    SolverConfig s;
    s.eps = eps;
    s.tau = tau;
    s.t_end = steps > 0 ? static_cast<double>(steps) * tau : t_end;
    s.grid = grid();
    s.orders.alpha = alpha;
    return s;
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

double to_double(const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("trailing junk in number: '" + s + "'");
    return v;
}

template <typename T, std::size_t N>
void fill_array(std::array<T, N>& dst, const std::string& value, int needed) {
    const auto items = split_list(value);
    if (items.size() != static_cast<std::size_t>(needed) && items.size() != 1)
        throw std::invalid_argument("expected 1 or " + std::to_string(needed) +
                                    " comma-separated values, got '" + value + "'");
    for (int i = 0; i < needed; ++i) {
        const std::string& s = items.size() == 1 ? items[0] : items[i];
        if constexpr (std::is_floating_point_v<T>)
            dst[i] = to_double(s);
        else
            dst[i] = static_cast<T>(std::stoull(s));
    }
}

}  // namespace

void apply_experiment_defaults(ExperimentConfig& cfg) {
    const std::string& id = cfg.experiment;
    if (id == "custom") return;
    if (id == "example1") {
        cfg.dim = 2;
        cfg.a = 0.0;
        cfg.b = 2.0;
        cfg.eps = 0.1;
        cfg.alpha = {1.5, 1.5, 1.5};
        cfg.m = {256, 256, 256};
        cfg.tau = 0.01;
        cfg.t_end = 1.0;
        cfg.ic = IcKind::GaussianPair;
        cfg.gauss.amplitude = 0.5;
        cfg.gauss.width = 100.0;
        cfg.gauss.center1 = {2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
        cfg.gauss.center2 = {4.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0};
        cfg.tau_chain = {1.0 / 100, 1.0 / 200, 1.0 / 400, 1.0 / 800, 1.0 / 1600};
        cfg.m_chain = {32, 64, 128, 256};
        cfg.m_ref = 1024;
    } else if (id == "example2") {
        cfg.dim = 3;
        cfg.a = 0.0;
        cfg.b = 1.0;
        cfg.eps = 0.1;
        cfg.alpha = {1.5, 1.5, 1.5};
        cfg.m = {64, 64, 64};
        cfg.tau = 1.0 / 20;
        cfg.t_end = 1.0;
        cfg.ic = IcKind::GaussianPair;
        cfg.gauss.amplitude = 0.5;
        cfg.gauss.width = 500.0;
        cfg.gauss.center1 = {3.0 / 8.0, 3.0 / 8.0, 3.0 / 8.0};
        cfg.gauss.center2 = {5.0 / 8.0, 5.0 / 8.0, 5.0 / 8.0};
        cfg.tau_chain = {1.0 / 20, 1.0 / 40, 1.0 / 80};
        cfg.m_chain = {16, 32, 64};
        cfg.m_ref = 256;
    } else if (id == "example3" || id == "example4") {
        cfg.a = 0.0;
        cfg.b = 1.0;
        if (cfg.dim == 2) {
            cfg.m = {256, 256, 256};
            cfg.alpha = {1.5, 1.5, 1.5};
        } else {
            cfg.m = {128, 128, 128};
            cfg.alpha = {1.5, 1.5, 1.5};
        }
        if (id == "example3") {
            cfg.eps = 0.01;
            cfg.tau = 0.1;
            cfg.ic = IcKind::UniformRandom;
            cfg.ic_lo = -0.9;
            cfg.ic_hi = 0.9;
            if (cfg.dim == 2) {
                cfg.t_end = 100.0;
                cfg.snapshot_times = {5.0, 60.0, 100.0};
            } else {
                cfg.t_end = 200.0;
                cfg.snapshot_times = {15.0, 100.0, 200.0};
            }
        } else {
            cfg.eps = 0.1;
            cfg.tau = 0.01;
            cfg.t_end = 1.0;
            cfg.ic = IcKind::AffineRandom;
            cfg.ic_scale = 0.95;
            cfg.ic_offset = 0.05;
        }
    } else if (id == "example5") {
        cfg.a = 0.0;
        cfg.b = 1.0;
        cfg.eps = 0.01;
        cfg.tau = 0.01;
        cfg.t_end = 2.0;
        cfg.ic = IcKind::AffineRandom;
        if (cfg.dim == 2) {
            cfg.m = {128, 128, 128};
            cfg.ic_scale = 0.8;
            cfg.ic_offset = -0.4;
        } else {
            cfg.m = {128, 128, 128};
            cfg.ic_scale = 1.0;
            cfg.ic_offset = -0.5;
        }
        cfg.alpha = {1.5, 1.5, 1.5};
    } else {
        throw std::invalid_argument("unknown experiment id '" + id + "'");
    }
}

ExperimentConfig parse_config(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line without '=': '" + line + "'");
        pairs.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }

    ExperimentConfig cfg;
    // experiment id and dim first: they select the defaults everything
    // else overrides.
    for (const auto& [k, v] : pairs)
        if (k == "dim") cfg.dim = static_cast<int>(to_double(v));
    for (const auto& [k, v] : pairs)
        if (k == "experiment") cfg.experiment = v;
    apply_experiment_defaults(cfg);

    for (const auto& [key, value] : pairs) {
        if (key == "experiment" || key == "dim") {
        } else if (key == "a") {
            cfg.a = to_double(value);
        } else if (key == "b") {
            cfg.b = to_double(value);
        } else if (key == "eps") {
            cfg.eps = to_double(value);
        } else if (key == "alpha") {
            fill_array(cfg.alpha, value, cfg.dim);
        } else if (key == "m") {
            fill_array(cfg.m, value, cfg.dim);
        } else if (key == "tau") {
            cfg.tau = to_double(value);
        } else if (key == "t_end") {
            cfg.t_end = to_double(value);
        } else if (key == "steps") {
            cfg.steps = static_cast<long>(to_double(value));
        } else if (key == "ic") {
            if (value == "gaussian-pair")
                cfg.ic = IcKind::GaussianPair;
            else if (value == "uniform-random")
                cfg.ic = IcKind::UniformRandom;
            else if (value == "affine-random")
                cfg.ic = IcKind::AffineRandom;
            else
                throw std::invalid_argument("unknown ic kind '" + value + "'");
        } else if (key == "ic_lo") {
            cfg.ic_lo = to_double(value);
        } else if (key == "ic_hi") {
            cfg.ic_hi = to_double(value);
        } else if (key == "ic_scale") {
            cfg.ic_scale = to_double(value);
        } else if (key == "ic_offset") {
            cfg.ic_offset = to_double(value);
        } else if (key == "ic_amplitude") {
            cfg.gauss.amplitude = to_double(value);
        } else if (key == "ic_width") {
            cfg.gauss.width = to_double(value);
        } else if (key == "ic_center1") {
            fill_array(cfg.gauss.center1, value, cfg.dim);
        } else if (key == "ic_center2") {
            fill_array(cfg.gauss.center2, value, cfg.dim);
        } else if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "out") {
            cfg.out_dir = value;
        } else if (key == "snapshot_times") {
            cfg.snapshot_times.clear();
            for (const auto& s : split_list(value)) cfg.snapshot_times.push_back(to_double(s));
        } else if (key == "tau_chain") {
            cfg.tau_chain.clear();
            for (const auto& s : split_list(value)) cfg.tau_chain.push_back(to_double(s));
        } else if (key == "m_chain") {
            cfg.m_chain.clear();
            for (const auto& s : split_list(value))
                cfg.m_chain.push_back(static_cast<std::size_t>(std::stoull(s)));
        } else if (key == "m_ref") {
            cfg.m_ref = static_cast<std::size_t>(std::stoull(value));
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    return parse_config(in);
}

Field build_initial_condition(const ExperimentConfig& cfg) {
    const GridSpec grid = cfg.grid();
    Field f = Field::zeros(grid);
    const std::size_t n0 = f.shape[0];
    const std::size_t n1 = f.shape[1];

    for (std::size_t flat = 0; flat < f.size(); ++flat) {
        std::array<std::size_t, 3> idx{flat % n0, (flat / n0) % n1, flat / (n0 * n1)};
        switch (cfg.ic) {
            case IcKind::GaussianPair: {
                double r1 = 0.0, r2 = 0.0;
                for (int ax = 0; ax < cfg.dim; ++ax) {
                    const double x = grid.node(ax, idx[ax]);
                    r1 += (x - cfg.gauss.center1[ax]) * (x - cfg.gauss.center1[ax]);
                    r2 += (x - cfg.gauss.center2[ax]) * (x - cfg.gauss.center2[ax]);
                }
                f[flat] = cfg.gauss.amplitude * std::exp(-cfg.gauss.width * r1) +
                          cfg.gauss.amplitude * std::exp(-cfg.gauss.width * r2);
                break;
            }
            case IcKind::UniformRandom:
                f[flat] = cfg.ic_lo + (cfg.ic_hi - cfg.ic_lo) * uniform01(cfg.seed, flat);
                break;
            case IcKind::AffineRandom:
                f[flat] = cfg.ic_scale * uniform01(cfg.seed, flat) + cfg.ic_offset;
                break;
        }
    }
    return f;
}

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_order_table_csv(const OrderTable& table, const std::string& value_label,
                           std::ostream& out) {
    out << value_label << ",error,order\n";
    for (const auto& row : table.rows) {
        out << row.label << "," << format_float(row.error) << ",";
        if (row.order) out << format_float(*row.order);
        out << "\n";
    }
}

OrderTable run_temporal_convergence(const ExperimentConfig& cfg) {
    if (cfg.tau_chain.size() < 1)
        throw std::invalid_argument("conv-time needs a tau_chain");
    for (std::size_t i = 1; i < cfg.tau_chain.size(); ++i) {
        const double expect = cfg.tau_chain[i - 1] / 2.0;
        if (std::abs(cfg.tau_chain[i] - expect) > 1e-12 * expect)
            throw std::invalid_argument("tau_chain must halve at every entry");
    }

    const Field u0 = build_initial_condition(cfg);
    SolverConfig sc = cfg.solver();

    auto run_at = [&](double tau) {
        sc.tau = tau;
        SpectralCache cache(sc.grid, sc.orders, sc.eps, tau);
        return integrate(u0, sc, cache, {});
    };

    // Row tau holds E_t(tau) = ||u(tau) - u(tau/2)||_inf, so one extra run
    // at half the finest chain entry closes the last row.
    std::vector<double> errors;
    std::vector<std::string> labels;
    Field prev = run_at(cfg.tau_chain[0]);
    for (std::size_t i = 0; i < cfg.tau_chain.size(); ++i) {
        const double next_tau = (i + 1 < cfg.tau_chain.size())
                                    ? cfg.tau_chain[i + 1]
                                    : cfg.tau_chain[i] / 2.0;
        Field next = run_at(next_tau);
        errors.push_back(error_inf(prev, next));
        labels.push_back(format_float(cfg.tau_chain[i]));
        prev = std::move(next);
    }
    if (errors.size() == 1) {
        OrderTable t;
        t.rows.push_back({labels[0], errors[0], std::nullopt});
        return t;
    }
    return order_from_errors(errors, labels);
}

OrderTable run_spatial_convergence(const ExperimentConfig& cfg) {
    if (cfg.m_chain.size() < 2 || cfg.m_ref == 0)
        throw std::invalid_argument("conv-space needs an m_chain and m_ref");
    for (std::size_t mc : cfg.m_chain) {
        if (mc == cfg.m_ref)
            throw std::invalid_argument("m_ref must differ from every chain entry");
        if (cfg.m_ref % mc != 0)
            throw std::invalid_argument("m_chain entries must divide m_ref (nested grids)");
    }

    auto run_at = [&](std::size_t m_axis) {
        ExperimentConfig c = cfg;
        c.m = {m_axis, m_axis, m_axis};
        const Field u0 = build_initial_condition(c);
        return integrate(u0, c.solver(), {});
    };

    ExperimentConfig ref_cfg = cfg;
    ref_cfg.m = {cfg.m_ref, cfg.m_ref, cfg.m_ref};
    const GridSpec ref_grid = ref_cfg.grid();
    const Field ref = run_at(cfg.m_ref);

    std::vector<double> errors;
    std::vector<std::string> labels;
    for (std::size_t mc : cfg.m_chain) {
        ExperimentConfig c = cfg;
        c.m = {mc, mc, mc};
        const Field coarse = run_at(mc);
        const Field ref_on_coarse = restrict_to_coarse(ref, ref_grid, c.grid());
        errors.push_back(error_inf(ref_on_coarse, coarse));
        labels.push_back(format_float((cfg.b - cfg.a) / static_cast<double>(mc)));
    }
    return order_from_errors(errors, labels);
}

namespace {
std::vector<TraceRow> run_trace(const ExperimentConfig& cfg,
                                const std::function<double(const Field&, const SpectralCache&)>& metric) {
    const Field u0 = build_initial_condition(cfg);
    SolverConfig sc = cfg.solver();
    SpectralCache cache(sc.grid, sc.orders, sc.eps, sc.tau);
    std::vector<TraceRow> rows;
    rows.push_back({0, 0.0, metric(u0, cache)});
    std::vector<StepObserver> obs{[&](long step, double t, const Field& u) {
        rows.push_back({step, t, metric(u, cache)});
    }};
    integrate(u0, sc, cache, obs);
    return rows;
}
}  // namespace

std::vector<TraceRow> run_maxnorm_trace(const ExperimentConfig& cfg) {
    return run_trace(cfg, [](const Field& u, const SpectralCache&) { return max_norm(u); });
}

std::vector<TraceRow> run_energy_trace(const ExperimentConfig& cfg) {
    return run_trace(cfg, [](const Field& u, const SpectralCache& cache) {
        return discrete_energy(u, cache);
    });
}

void write_trace_csv(const std::vector<TraceRow>& rows, const std::string& value_label,
                     std::ostream& out) {
    out << "step,time," << value_label << "\n";
    for (const auto& r : rows)
        out << r.step << "," << format_float(r.time) << "," << format_float(r.value) << "\n";
}

void write_field_dump(const Field& field, const GridSpec& grid, double time,
                      const std::string& path_stem) {
    {
        std::ofstream hdr(path_stem + ".hdr");
        if (!hdr) throw std::runtime_error("cannot write " + path_stem + ".hdr");
        hdr << "dim = " << grid.dim << "\n";
        hdr << "shape = ";
        for (int ax = 0; ax < grid.dim; ++ax)
            hdr << (ax ? "," : "") << grid.interior(ax);
        hdr << "\n";
        hdr << "a = " << format_float(grid.a) << "\n";
        hdr << "b = " << format_float(grid.b) << "\n";
        hdr << "time = " << format_float(time) << "\n";
    }
    std::ofstream bin(path_stem + ".f64", std::ios::binary);
    if (!bin) throw std::runtime_error("cannot write " + path_stem + ".f64");
    // payload is little-endian f64; this targets little-endian hosts
    bin.write(reinterpret_cast<const char*>(field.data.data()),
              static_cast<std::streamsize>(field.size() * sizeof(double)));
}

void run_snapshots(const ExperimentConfig& cfg) {
    const SolverConfig sc = cfg.solver();
    std::vector<long> snap_steps;
    for (double t : cfg.snapshot_times) {
        const double ratio = t / sc.tau;
        const long s = std::lround(ratio);
        if (std::abs(ratio - static_cast<double>(s)) > 1e-9 * std::max(ratio, 1.0))
            throw std::invalid_argument("snapshot time is not a step multiple");
        snap_steps.push_back(s);
    }

    const Field u0 = build_initial_condition(cfg);
    const GridSpec grid = cfg.grid();
    auto dump = [&](const Field& u, double t) {
        char label[32];
        std::snprintf(label, sizeof(label), "%g", t);
        write_field_dump(u, grid, t, cfg.out_dir + "/snapshot_t" + label);
    };
    for (std::size_t i = 0; i < snap_steps.size(); ++i)
        if (snap_steps[i] == 0) dump(u0, 0.0);

    std::vector<StepObserver> obs{[&](long step, double, const Field& u) {
        for (std::size_t i = 0; i < snap_steps.size(); ++i)
            if (snap_steps[i] == step) dump(u, cfg.snapshot_times[i]);
    }};
    integrate(u0, sc, obs);
}

Field run_solver(const ExperimentConfig& cfg) {
    const Field u0 = build_initial_condition(cfg);
    return integrate(u0, cfg.solver(), {});
}

}  // namespace sfac
