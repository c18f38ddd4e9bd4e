#include "fermisea/cli.hpp"

#include "fermisea/counting.hpp"
#include "fermisea/factorization.hpp"
#include "fermisea/models.hpp"
#include "fermisea/oracle.hpp"
#include "fermisea/random.hpp"
#include "fermisea/thermal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace fermisea::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct Table {
    std::vector<std::string>         columns;
    std::vector<std::vector<double>> rows;
};

void write_table(std::ostream &os, const Table &t, Format fmt) {
    if(fmt == Format::csv) {
        for(std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
        os << '\n';
        for(const auto &row : t.rows) {
            for(std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
            os << '\n';
        }
        return;
    }
    json arr = json::array();
    for(const auto &row : t.rows) {
        json obj = json::object();
        for(std::size_t c = 0; c < row.size(); ++c) {
            if(std::isfinite(row[c]))
                obj[t.columns[c]] = row[c];
            else
                obj[t.columns[c]] = nullptr;
        }
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

json report_json(const CountingReport &r) {
    return json{{"mean", r.mean},
                {"variance", r.variance},
                {"kappa4", r.kappa4},
                {"entropy_nats", r.entropy_nats},
                {"bound2", r.bound2},
                {"bound4", r.bound4},
                {"chain_holds", json::array({r.chain_holds.entropy_ge_bound2, r.chain_holds.bound2_ge_bound4})}};
}

// Flat key/value records: json object, or a one-row CSV.
void write_record(std::ostream &os, const json &record, Format fmt) {
    if(fmt == Format::json) {
        os << record.dump(2) << '\n';
        return;
    }
    std::string header, values;
    bool        first = true;
    for(const auto &[key, value] : record.items()) {
        if(value.is_array() || value.is_object()) continue;
        header += (first ? "" : ",") + key;
        std::string cell;
        if(value.is_boolean())
            cell = value.get<bool>() ? "true" : "false";
        else if(value.is_number())
            cell = format_number(value.get<double>());
        else if(value.is_null())
            cell = "";
        else
            cell = value.get<std::string>();
        values += (first ? "" : ",") + cell;
        first = false;
    }
    os << header << '\n' << values << '\n';
}

Table scan_table(const std::string &first_column, const std::vector<ScanRow> &rows) {
    Table t{{first_column, "mean", "variance", "entropy", "kappa4", "ratio"}, {}};
    for(const auto &row : rows) {
        const auto &r = row.report;
        t.rows.push_back({row.parameter, r.mean, r.variance, r.entropy_nats, r.kappa4, row.ratio});
    }
    return t;
}

std::vector<double> linear_grid(double lo, double hi, int intervals) {
    std::vector<double> g;
    if(intervals == 0) return {lo};
    for(int i = 0; i <= intervals; ++i) g.push_back(i == intervals ? hi : lo + (hi - lo) * i / intervals);
    return g;
}

// Subcommand implementations. Each returns an exit code and writes to `os`.

int cmd_fig1(std::ostream &os, Format fmt, int steps) {
    if(steps < 1) throw UsageError("--steps must be >= 1");
    Table t{{"x", "entropy_fn", "bound2_fn", "bound4_fn"}, {}};
    for(int i = 0; i <= steps; ++i) {
        const double x = i == steps ? 1.0 : static_cast<double>(i) / steps;
        const auto   f = fig1_functions(x);
        t.rows.push_back({x, f.entropy_fn, f.bound2_fn, f.bound4_fn});
    }
    write_table(os, t, fmt);
    return exit_ok;
}

int cmd_lll(std::ostream &os, Format fmt, double r_min, double r_max, int r_steps) {
    if(!(r_min > 0.0) || r_max < r_min) throw UsageError("need 0 < --r-min <= --r-max");
    if(r_steps < 0) throw UsageError("--r-steps must be >= 0");
    const auto radii = linear_grid(r_min, r_max, r_steps);
    write_table(os, scan_table("R", lll_scan(radii)), fmt);
    return exit_ok;
}

int cmd_lll_modes(std::ostream &os, Format fmt, double radius, const std::string &k_list, int r_steps) {
    if(!(radius > 0.0)) throw UsageError("--radius must be positive");
    if(r_steps < 1) throw UsageError("--r-steps must be >= 1");
    std::vector<Index> ks;
    for(double k : parse_real_list(k_list)) {
        if(k < 0 || k != std::floor(k)) throw UsageError("--k entries must be non-negative integers");
        ks.push_back(static_cast<Index>(k));
    }
    const auto grid = linear_grid(0.0, radius, r_steps);
    Table      t;
    t.columns.push_back("r");
    std::vector<std::vector<double>> cols;
    for(Index k : ks) {
        t.columns.push_back("p_k" + std::to_string(k));
        cols.push_back(lll_mode_profile(k, radius, grid));
    }
    for(std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<double> row{grid[i]};
        for(const auto &c : cols) row.push_back(c[i]);
        t.rows.push_back(std::move(row));
    }
    write_table(os, t, fmt);
    return exit_ok;
}

int cmd_lattice(std::ostream &os, Format fmt, Index sites, Index filled, Index ell_min, Index ell_max) {
    if(sites < 1 || filled < 1 || filled > sites) throw UsageError("need 1 <= --filled <= --sites");
    if(ell_min < 1 || ell_max < ell_min || ell_max > sites) throw UsageError("need 1 <= --ell-min <= --ell-max <= --sites");
    std::vector<Index> ells(static_cast<std::size_t>(ell_max - ell_min + 1));
    std::iota(ells.begin(), ells.end(), ell_min);
    write_table(os, scan_table("ell", lattice_scan(sites, filled, ells)), fmt);
    return exit_ok;
}

int cmd_thermal(std::ostream &os, Format fmt, const std::string &kernel_path, const std::string &region_list,
                const std::string &region_path) {
    if(region_list.empty() == region_path.empty()) throw UsageError("give exactly one of --region or --region-file");
    std::optional<ThermalSystem>   sys;
    std::optional<RegionProjector> region;
    try {
        sys.emplace(read_matrix_file(kernel_path));
        if(!region_list.empty())
            region.emplace(RegionProjector::from_sites(sys->dim(), parse_site_list(region_list)));
        else
            region.emplace(RegionProjector::from_matrix(read_matrix_file(region_path)));
    } catch(const InvalidInput &e) {
        throw FormatError(e.what());
    }
    if(region->dim() != sys->dim()) throw FormatError("region dimension does not match the kernel dimension");

    const auto n_a      = restricted_occupation(occupation_operator(*sys), *region);
    const auto report   = inequality_report(n_a.spectrum());
    const auto energies = effective_energies(n_a);

    json record = report_json(report);
    json occ    = json::array();
    json eps    = json::array();
    json kinds  = json::array();
    for(double d : n_a.spectrum()) occ.push_back(d);
    for(std::size_t i = 0; i < energies.values.size(); ++i) {
        switch(energies.kinds[i]) {
        case EnergyKind::finite:
            eps.push_back(energies.values[i]);
            kinds.push_back("finite");
            break;
        case EnergyKind::plus_infinity:
            eps.push_back(nullptr);
            kinds.push_back("+inf");
            break;
        case EnergyKind::minus_infinity:
            eps.push_back(nullptr);
            kinds.push_back("-inf");
            break;
        }
    }
    record["occupations"]            = std::move(occ);
    record["effective_energies"]     = std::move(eps);
    record["effective_energy_kinds"] = std::move(kinds);
    write_record(os, record, fmt);
    return exit_ok;
}

int cmd_bosons(std::ostream &os, Format fmt, const std::string &n_list) {
    BosonOccupations occ;
    try {
        occ = BosonOccupations(parse_real_list(n_list));
    } catch(const InvalidInput &e) {
        throw UsageError(e.what());
    }
    const auto check = boson_inequality_check(occ);
    json       record{{"entropy_nats", check.entropy}, {"variance", check.variance}, {"bound", check.bound},
                      {"applicable", check.applicable}, {"holds", check.holds}};
    write_record(os, record, fmt);
    return exit_ok;
}

int cmd_verify(std::ostream &os, Format fmt, std::uint64_t seed, int cases, double tolerance_scale) {
    if(cases < 1) throw UsageError("--cases must be >= 1");
    if(!(tolerance_scale >= 0.0)) throw UsageError("--tolerance-scale must be >= 0");

    const oracle::Tolerances pure_tol    = oracle::Tolerances{}.scaled(tolerance_scale);
    const oracle::Tolerances thermal_tol = oracle::Tolerances{1e-7, 1e-8, 1e-10}.scaled(tolerance_scale);
    const double             disc_tol    = 1e-6 * tolerance_scale;

    Table t{{"suite", "case", "spectrum_dev", "moments_dev", "distribution_dev", "pass"}, {}};
    bool  all_pass = true;
    auto  record   = [&](double suite, int c, const oracle::Deviation &dev, bool pass) {
        const double moments = std::max({dev.entropy, dev.mean, dev.variance, dev.kappa4});
        t.rows.push_back({suite, static_cast<double>(c), dev.spectrum, moments, dev.distribution, pass ? 1.0 : 0.0});
        all_pass = all_pass && pass;
    };

    Rng rng(seed);
    for(int c = 0; c < cases; ++c) {
        const int  dim   = std::uniform_int_distribution<int>(2, 10)(rng);
        const auto n     = std::uniform_int_distribution<Index>(1, dim)(rng);
        const auto orbs  = random_orbitals(dim, n, rng);
        const auto sites = random_sites(dim, rng);
        const auto dev   = oracle::pure_state_check(orbs, sites);
        record(1, c, dev, oracle::within(dev, pure_tol));
    }
    for(int c = 0; c < cases; ++c) {
        const int  dim   = std::uniform_int_distribution<int>(2, 6)(rng);
        const auto sys   = ThermalSystem(random_hermitian(dim, 1.5, rng));
        const auto sites = random_sites(dim, rng);
        const auto dev   = oracle::thermal_oracle_check(sys, sites);
        record(2, c, dev, oracle::within(dev, thermal_tol));
    }
    {
        const double radius = 1.5;
        const Index  kmax   = 4;
        const auto   disc   = discretized_lll_disc(radius, kmax);
        const auto   f      = factorize(disc.orbitals, disc.region);
        oracle::Deviation dev;
        for(Index k = 0; k <= kmax; ++k)
            dev.spectrum = std::max(dev.spectrum, std::abs(f.d[static_cast<std::size_t>(k)] - lll_occupation(k, radius)));
        record(3, 0, dev, dev.spectrum <= disc_tol);
    }

    if(fmt == Format::csv) {
        // Suites are printed by name; the table stores them as numbers for the json path.
        static const char *names[] = {"", "pure", "thermal", "lll_disc"};
        os << "suite,case,spectrum_dev,moments_dev,distribution_dev,pass\n";
        for(const auto &row : t.rows) {
            os << names[static_cast<int>(row[0])] << ',' << static_cast<int>(row[1]) << ',' << format_number(row[2]) << ','
               << format_number(row[3]) << ',' << format_number(row[4]) << ',' << (row[5] != 0.0 ? "true" : "false") << '\n';
        }
        os << "# " << (all_pass ? "all checks passed" : "verification FAILED") << '\n';
    } else {
        write_table(os, t, fmt);
    }
    return all_pass ? exit_ok : exit_verification_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement entropy and counting statistics of free-fermion states"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "csv";
    std::string out_path;
    auto *format_opt = app.add_option("--format", format_name, "Output format (thermal defaults to json)")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "Write output to this file instead of standard output");

    int   fig1_steps = 100;
    auto *fig1       = app.add_subcommand("fig1", "Single-mode entropy and cumulant bound curves on [0,1]");
    fig1->add_option("--steps", fig1_steps, "Number of grid intervals");

    double r_min = 1.0, r_max = 20.0;
    int    r_steps = 19;
    auto  *lll     = app.add_subcommand("lll", "Counting statistics of the filled lowest Landau level in a disc");
    lll->add_option("--r-min", r_min, "Smallest radius");
    lll->add_option("--r-max", r_max, "Largest radius");
    lll->add_option("--r-steps", r_steps, "Number of radius intervals (0 = single row at --r-min)");

    double      mode_radius = 6.0;
    std::string mode_ks     = "0,6,12,18,24,30,36,42";
    int         mode_steps  = 10000;
    auto       *modes       = app.add_subcommand("lll-modes", "Radial densities of disc-restricted LLL modes");
    modes->add_option("--radius", mode_radius, "Disc radius");
    modes->add_option("--k", mode_ks, "Comma separated angular momenta");
    modes->add_option("--r-steps", mode_steps, "Number of radial grid intervals on [0, R]");

    Index lat_sites = 512, lat_filled = 256, ell_min = 1, ell_max = 128;
    auto *lattice   = app.add_subcommand("lattice", "Segment statistics of a ring-lattice Fermi sea");
    lattice->add_option("--sites", lat_sites, "Ring length L");
    lattice->add_option("--filled", lat_filled, "Number of filled plane waves N");
    lattice->add_option("--ell-min", ell_min, "Shortest segment");
    lattice->add_option("--ell-max", ell_max, "Longest segment");

    std::string kernel_path, region_list, region_path;
    auto       *thermal = app.add_subcommand("thermal", "Finite-temperature restricted occupation report");
    thermal->add_option("--kernel", kernel_path, "Kernel K matrix file")->required();
    thermal->add_option("--region", region_list, "Region sites, 1-based, comma separated");
    thermal->add_option("--region-file", region_path, "Region projector matrix file");

    std::uint64_t seed            = 20030601;
    int           cases           = 50;
    double        tolerance_scale = 1.0;
    auto         *verify          = app.add_subcommand("verify", "Compare closed forms against the Fock-space brute force");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--cases", cases, "Random cases per suite");
    verify->add_option("--tolerance-scale", tolerance_scale, "Multiplier applied to every tolerance");

    std::string boson_ns = "0.5";
    auto       *bosons   = app.add_subcommand("bosons", "Dilute boson entropy versus number fluctuations");
    bosons->add_option("--n", boson_ns, "Comma separated mean occupations");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    if(!argv_rev.empty()) argv_rev.pop_back(); // program name
    try {
        app.parse(argv_rev);
    } catch(const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch(const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch(const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if(*thermal && format_opt->count() == 0) format_name = "json";
    const Format       fmt = format_name == "json" ? Format::json : Format::csv;
    std::ostringstream buffer;
    int                code = exit_ok;
    try {
        if(*fig1)
            code = cmd_fig1(buffer, fmt, fig1_steps);
        else if(*lll)
            code = cmd_lll(buffer, fmt, r_min, r_max, r_steps);
        else if(*modes)
            code = cmd_lll_modes(buffer, fmt, mode_radius, mode_ks, mode_steps);
        else if(*lattice)
            code = cmd_lattice(buffer, fmt, lat_sites, lat_filled, ell_min, ell_max);
        else if(*thermal)
            code = cmd_thermal(buffer, fmt, kernel_path, region_list, region_path);
        else if(*verify)
            code = cmd_verify(buffer, fmt, seed, cases, tolerance_scale);
        else if(*bosons)
            code = cmd_bosons(buffer, fmt, boson_ns);
    } catch(const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch(const FormatError &e) {
        err << "error: " << e.what() << '\n';
        return exit_input_format;
    } catch(const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch(const NumericalError &e) {
        err << "error: " << e.what() << '\n';
        return exit_input_format;
    }

    if(out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if(!file) {
            err << "error: cannot write '" << out_path << "'\n";
            return exit_usage;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace fermisea::cli
