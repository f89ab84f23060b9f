// Command-line driver for the fractional Allen-Cahn solver.
//
// Subcommands: run, conv-time, conv-space, trace-max, trace-energy,
// snapshot, selftest.  Exit codes: 0 success, 2 config error,
// 3 max-principle violation, 4 selftest failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "sfac/diagnostics.hpp"
#include "sfac/experiment.hpp"
#include "sfac/oracle.hpp"
#include "sfac/parallel.hpp"
#include "sfac/rng.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitMaxPrinciple = 3;
constexpr int kExitSelftest = 4;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    long long seed = -1;
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required = true) {
    auto* c = cmd->add_option("--config", opts.config_path, "config file (key = value lines)");
    if (config_required) c->required();
    cmd->add_option("--seed", opts.seed, "override the config RNG seed");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--threads", opts.threads, "worker thread cap")->default_val(1);
}

sfac::ExperimentConfig load_config(const CommonOpts& opts) {
    sfac::ExperimentConfig cfg = sfac::parse_config_file(opts.config_path);
    if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    std::filesystem::create_directories(cfg.out_dir);
    sfac::set_worker_count(opts.threads);
    return cfg;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-stable newlines
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    return out;
}

double rand_entry(std::uint64_t seed, std::size_t i) {
    return 2.0 * sfac::uniform01(seed, i) - 1.0;
}

// Compact oracle-equivalence sweep over small grids; returns the number
// of failed comparisons.
int selftest() {
    using namespace sfac;
    int failures = 0;
    auto check = [&](const std::string& name, double err, double tol) {
        const bool ok = err <= tol;
        std::cout << (ok ? "ok   " : "FAIL ") << name << "  err=" << err
                  << "  tol=" << tol << "\n";
        if (!ok) ++failures;
    };

    struct Case {
        int dim;
        std::size_t m;
        std::array<double, 3> alpha;
    };
    for (const Case& c : {Case{2, 9, {1.2, 1.8, 1.5}}, Case{3, 8, {1.3, 1.5, 1.7}}}) {
        GridSpec grid{c.dim, 0.0, 1.0, {c.m, c.m, c.m}};
        FracOrders orders{c.alpha};
        const double eps = 0.5, tau = 0.1;
        SpectralCache cache(grid, orders, eps, tau);

        Field u = Field::zeros(grid);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = rand_entry(12345, i);

        SolverConfig sc;
        sc.eps = eps;
        sc.tau = tau;
        sc.t_end = tau;
        sc.grid = grid;
        sc.orders = orders;

        const std::string tag = std::to_string(c.dim) + "d";
        const oracle::DenseMatrix a = oracle::dense_A(grid, orders, eps);

        Field au = apply_A(u, cache);
        const std::vector<double> au_ref = a.multiply(u.data);
        double err = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            err = std::max(err, std::abs(au[i] - au_ref[i]));
        check("apply_A " + tag, err, 1e-11);

        Field lu = linear_step(u, cache);
        Field lu_ref = oracle::reference_linear_step(u, sc);
        // one-level vs two-level differ at O(tau^3); compare against the
        // split dense propagator instead
        oracle::DenseMatrix cmat(u.size()), smat(u.size());
        {
            using oracle::DenseMatrix;
            DenseMatrix csum(u.size()), ssum(u.size());
            for (int ax = 0; ax < grid.dim; ++ax) {
                const std::size_t n = grid.interior(ax);
                const CoeffTable table = make_coeff_table(orders.alpha[ax], n);
                OperatorColumns cols =
                    toeplitz_first_column(orders.alpha[ax], grid.h(ax), eps, n, table);
                split_circ_skew(cols);
                // embed per-axis factors into the full Kronecker sum
                DenseMatrix cd = oracle::dense_circulant(cols.c_col);
                DenseMatrix sd = oracle::dense_skew_circulant(cols.s_col);
                std::size_t inner = 1;
                for (int k = 0; k < ax; ++k) inner *= grid.interior(k);
                const std::size_t outer = u.size() / (inner * n);
                for (std::size_t o = 0; o < outer; ++o)
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t col = 0; col < n; ++col)
                            for (std::size_t in = 0; in < inner; ++in) {
                                const std::size_t row_i = in + r * inner + o * inner * n;
                                const std::size_t col_i = in + col * inner + o * inner * n;
                                csum.at(row_i, col_i) += cd.at(r, col);
                                ssum.at(row_i, col_i) += sd.at(r, col);
                            }
            }
            cmat = csum;
            smat = ssum;
        }
        const oracle::DenseMatrix ec = oracle::dense_expm(cmat, 0.5 * tau);
        const oracle::DenseMatrix es = oracle::dense_expm(smat, tau);
        std::vector<double> ref = ec.multiply(es.multiply(ec.multiply(u.data)));
        err = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            err = std::max(err, std::abs(lu[i] - ref[i]));
        check("linear_step " + tag, err, 1e-11);
    }
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-level Strang splitting solver for spatial fractional Allen-Cahn equations"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* cmd_run = app.add_subcommand("run", "integrate to t_end, dump the final field");
    auto* cmd_ct = app.add_subcommand("conv-time", "temporal convergence study (CSV)");
    auto* cmd_cs = app.add_subcommand("conv-space", "spatial convergence study (CSV)");
    auto* cmd_tm = app.add_subcommand("trace-max", "per-step max-norm trace (CSV)");
    auto* cmd_te = app.add_subcommand("trace-energy", "per-step discrete-energy trace (CSV)");
    auto* cmd_sn = app.add_subcommand("snapshot", "dump fields at configured times");
    auto* cmd_st = app.add_subcommand("selftest", "oracle-equivalence checks on small grids");
    for (auto* cmd : {cmd_run, cmd_ct, cmd_cs, cmd_tm, cmd_te, cmd_sn}) add_common(cmd, opts);
    unsigned st_threads = 1;
    cmd_st->add_option("--threads", st_threads, "worker thread cap")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_st->parsed()) {
            sfac::set_worker_count(st_threads);
            const int failures = selftest();
            if (failures > 0) {
                std::cerr << failures << " selftest comparison(s) failed\n";
                return kExitSelftest;
            }
            std::cout << "selftest passed\n";
            return 0;
        }

        const sfac::ExperimentConfig cfg = load_config(opts);

        if (cmd_run->parsed()) {
            const sfac::Field u = sfac::run_solver(cfg);
            sfac::write_field_dump(u, cfg.grid(), cfg.solver().t_end, cfg.out_dir + "/final");
            std::cout << "final max norm = " << sfac::format_float(sfac::max_norm(u)) << "\n";
        } else if (cmd_ct->parsed()) {
            const sfac::OrderTable t = sfac::run_temporal_convergence(cfg);
            auto out = open_csv(cfg.out_dir + "/conv_time.csv");
            sfac::write_order_table_csv(t, "tau", out);
        } else if (cmd_cs->parsed()) {
            const sfac::OrderTable t = sfac::run_spatial_convergence(cfg);
            auto out = open_csv(cfg.out_dir + "/conv_space.csv");
            sfac::write_order_table_csv(t, "h", out);
        } else if (cmd_tm->parsed()) {
            const auto rows = sfac::run_maxnorm_trace(cfg);
            auto out = open_csv(cfg.out_dir + "/trace_max.csv");
            sfac::write_trace_csv(rows, "max_norm", out);
        } else if (cmd_te->parsed()) {
            const auto rows = sfac::run_energy_trace(cfg);
            auto out = open_csv(cfg.out_dir + "/trace_energy.csv");
            sfac::write_trace_csv(rows, "energy", out);
        } else if (cmd_sn->parsed()) {
            sfac::run_snapshots(cfg);
        }
    } catch (const sfac::MaxPrincipleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMaxPrinciple;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
