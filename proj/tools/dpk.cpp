#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dpk/lattice.hpp"
#include "dpk/parse.hpp"
#include "dpk/pipeline.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FNV-1a, enough to tell inputs apart in a report.
std::string digest(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingInput("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

json report(const std::string& command, json inputs) {
    return json{{"command", command},
                {"schema", 1},
                {"inputs", std::move(inputs)},
                {"checks", json::array()},
                {"timings", json{{"timestamp", utc_now()}}}};
}

void add_checks(json& rep, const std::vector<dpk::Check>& checks, const std::string& prefix = "") {
    for (const auto& c : checks) {
        rep["checks"].push_back({{"name", prefix + c.name}, {"status", dpk::to_string(c.status)}, {"details", c.details}});
        rep["timings"][prefix + c.name] = c.seconds;
    }
}

void write_json(const json& rep, const std::string& path) {
    if (path.empty()) return;
    const std::string text = rep.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MissingInput("cannot write " + path);
    out << text;
}

// Human-readable lines move to stderr when the JSON report owns stdout.
std::ostream& text_stream(const std::string& json_path) { return json_path == "-" ? std::cerr : std::cout; }

void print_checks(std::ostream& out, const std::vector<dpk::Check>& checks) {
    for (const auto& c : checks)
        out << std::left << std::setw(8) << dpk::to_string(c.status) << c.name << "  [" << c.details << "]  "
                  << std::fixed << std::setprecision(2) << c.seconds << "s\n";
}

json census_json(const dpk::SingularityCensus& c) {
    if (!c.finite) return json{{"finite", false}, {"error", c.error}};
    return json{{"finite", true}, {"scheme_degree", c.scheme_degree}, {"points", c.radical_degree}};
}

json fiber_json(const dpk::FiberReport& r) {
    json j{{"point", r.point.to_string()}, {"type", dpk::to_string(r.type)}, {"census", census_json(r.census)}};
    if (r.curves) {
        j["on_B_I"] = r.curves->on_B_I;
        j["on_B_II"] = r.curves->on_B_II;
        j["cusp_of_B_II"] = r.curves->cusp_of_B_II;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& json_path, const std::vector<std::string>& skip, unsigned threads,
               std::size_t pairs) {
    dpk::VerifyOptions opts;
    opts.threads = threads;
    opts.elimination_pairs = pairs;
    for (const auto& s : skip) {
        if (s != "elimination") throw UsageError("unknown check group '" + s + "' (known: elimination)");
        opts.skip_elimination = true;
    }
    std::ostream& out = text_stream(json_path);
    const auto t0 = std::chrono::steady_clock::now();
    const dpk::VerifyReport r = dpk::verify_example(opts);
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    print_checks(out, r.checks);
    out << (r.passed() ? "all checks passed" : "some checks FAILED") << " (" << std::fixed << std::setprecision(1)
              << total << "s)\n";
    json rep = report("verify-example", json{{"dataset", "embedded"},
                                             {"digest", digest(std::string(dpk::embedded_example_data()) +
                                                               std::string(dpk::embedded_example_curves()))},
                                             {"skip", skip}});
    add_checks(rep, r.checks);
    rep["timings"]["total"] = total;
    write_json(rep, json_path);
    return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_search(std::uint32_t p, std::uint64_t seed, unsigned trials, const std::string& json_path, unsigned threads) {
    if (!dpk::is_prime(p)) throw UsageError("--prime must be a prime");
    if (trials < 1) throw UsageError("--trials must be at least 1");
    std::ostream& out = text_stream(json_path);
    json rep = report("search", json{{"prime", p}, {"seed", seed}, {"trials", trials}});
    rep["trials"] = json::array();
    unsigned generic = 0;
    for (unsigned i = 0; i < trials; ++i) {
        const dpk::TrialReport t = dpk::run_trial(p, seed + i, threads);
        generic += t.generic;
        out << "seed " << t.seed << ": " << (t.generic ? "generic" : "non-generic");
        if (!t.failure.empty()) out << " (" << t.failure << ")";
        out << "  " << std::fixed << std::setprecision(1) << t.seconds << "s\n";
        json jt{{"seed", t.seed}, {"structural", t.structural}, {"generic", t.generic}, {"failure", t.failure}, {"checks", json::array()}};
        for (const auto& c : t.checks)
            jt["checks"].push_back({{"name", c.name}, {"status", dpk::to_string(c.status)}, {"details", c.details}});
        rep["trials"].push_back(std::move(jt));
        rep["timings"]["seed " + std::to_string(t.seed)] = t.seconds;
    }
    const double rate = static_cast<double>(generic) / trials;
    out << generic << "/" << trials << " generic\n";
    rep["checks"].push_back({{"name", "genericity rate"},
                             {"status", "pass"},
                             {"details", std::to_string(generic) + "/" + std::to_string(trials)}});
    rep["generic_rate"] = rate;
    write_json(rep, json_path);
    return kExitOk;
}

std::vector<std::vector<long long>> parse_matrix(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    std::stringstream all(text);
    std::string row;
    while (std::getline(all, row, ';')) {
        for (char& c : row)
            if (c == ',') c = ' ';
        std::istringstream in(row);
        std::vector<long long> r;
        std::string tok;
        while (in >> tok) {
            try {
                std::size_t used = 0;
                r.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw UsageError("bad matrix entry '" + tok + "'");
            }
        }
        if (!r.empty()) rows.push_back(std::move(r));
    }
    if (rows.empty()) throw UsageError("empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw UsageError("matrix rows differ in length");
    return rows;
}

std::string group_string(const dpk::IntVector& g) {
    if (g.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? " + Z/" : "Z/") + g[i].str();
    return s;
}

int cmd_scan(const std::string& input, unsigned k, const std::string& curves_path, const std::string& json_arg,
             unsigned threads) {
    const std::string json_path = json_arg.empty() ? "-" : json_arg;
    std::ostream& out = text_stream(json_path);
    if (k < 1 || k > 3) throw UsageError("--ext must be 1, 2 or 3");
    const std::string text = read_file(input);
    const dpk::PolyData data = dpk::parse_poly_data(text);
    for (const char* name : {"Q1", "Q2", "Q3", "f"})
        if (!data.has(name)) throw UsageError(std::string("input lacks ") + name);
    const auto net = dpk::NetOfQuadrics::from_quadrics({data.get("Q1"), data.get("Q2"), data.get("Q3")});
    dpk::SurfaceT T = dpk::build_T(net);
    json inputs{{"input", input}, {"digest", digest(text)}, {"extension_degree", k}};
    std::optional<dpk::DiscriminantCurves> curves;
    if (!curves_path.empty()) {
        const std::string ctext = read_file(curves_path);
        const dpk::PolyData cd = dpk::parse_poly_data(ctext);
        const auto base = dpk::base_ring(net.ring->field());
        curves = dpk::DiscriminantCurves{dpk::PlaneCurve(dpk::map_variables(cd.get("BI"), base, {0, 1, 2})),
                                         dpk::PlaneCurve(dpk::map_variables(cd.get("BII"), base, {0, 1, 2}))};
        inputs["curves"] = curves_path;
        inputs["curves_digest"] = digest(ctext);
    }
    json rep = report("scan", std::move(inputs));
    add_checks(rep, T.checks);
    if (!T.generic()) {
        print_checks(out, T.checks);
        write_json(rep, json_path);
        return kExitCheckFailed;
    }
    const dpk::CubicFourfold X = dpk::make_cubic(T, data.get("f"));
    const dpk::Fibration fib{net, std::move(T), X};
    const auto t0 = std::chrono::steady_clock::now();
    const dpk::ScanReport scan = dpk::fiber_scan(fib, k, curves ? &*curves : nullptr, threads);
    rep["timings"]["scan"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep["points"] = json::array();
    for (const auto& r : scan.fibers) rep["points"].push_back(fiber_json(r));
    rep["counts"] = scan.counts;
    for (const auto& [t, n] : scan.counts) out << t << ": " << n << "\n";
    bool ok = X.smooth;
    rep["checks"].push_back({{"name", "X smooth"}, {"status", X.smooth ? "pass" : "fail"}, {"details", ""}});
    if (scan.consistent) {
        ok = ok && *scan.consistent;
        std::string details = std::to_string(scan.mismatches.size()) + " mismatches";
        for (const auto& m : scan.mismatches) out << "mismatch " << m << "\n";
        rep["checks"].push_back({{"name", "scan agrees with the curves"},
                                 {"status", *scan.consistent ? "pass" : "fail"},
                                 {"details", details}});
        rep["mismatches"] = scan.mismatches;
        out << "consistency: " << (*scan.consistent ? "pass" : "FAIL") << "\n";
    }
    write_json(rep, json_path);
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic fourfolds fibered in sextic del Pezzo surfaces over finite fields"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads for fiber scans (default: DPK_THREADS or all cores)");

    std::string json_path;
    std::vector<std::string> skip;
    std::size_t pairs = 200'000;
    auto* verify = app.add_subcommand("verify-example", "check the embedded example over F_5");
    verify->add_option("--json", json_path, "write the report as JSON ('-' for stdout)");
    verify->add_option("--skip", skip, "skip a check group (elimination)");
    verify->add_option("--elimination-pairs", pairs, "pair budget of the full elimination");
    verify->add_option("--threads", threads);

    std::uint32_t prime = 7;
    std::uint64_t seed = 1;
    unsigned trials = 1;
    auto* search = app.add_subcommand("search", "random nets and cubics, with genericity checks");
    search->add_option("--prime", prime, "field characteristic")->required();
    search->add_option("--seed", seed, "first seed");
    search->add_option("--trials", trials, "number of consecutive seeds");
    search->add_option("--json", json_path, "write the report as JSON ('-' for stdout)");
    search->add_option("--threads", threads);

    auto* lattice = app.add_subcommand("lattice", "lattice arithmetic");
    lattice->require_subcommand(1);
    long long a = 0, b = 0, max = 200, dI = 6, dII = 6, bIV = 9;
    std::string matrix;
    auto* ldelta = lattice->add_subcommand("delta", "discriminant of K_{a,b}");
    ldelta->add_option("-a", a)->required();
    ldelta->add_option("-b", b)->required();
    auto* lenum = lattice->add_subcommand("enum", "admissible discriminants with witnesses");
    lenum->add_option("--max", max, "upper bound");
    auto* lsnf = lattice->add_subcommand("snf", "Smith normal form");
    lsnf->add_option("--matrix", matrix, "rows separated by ';', entries by spaces or commas")->required();
    auto* ldisc = lattice->add_subcommand("discgroup", "discriminant group of a Gram matrix");
    ldisc->add_option("--gram", matrix, "Gram matrix (default: complement of a square-6 vector)");
    auto* leuler = lattice->add_subcommand("euler", "Euler characteristic of the fibered fourfold");
    leuler->add_option("--dI", dI);
    leuler->add_option("--dII", dII);
    leuler->add_option("--bIV", bIV);

    std::string input, curves_path;
    unsigned ext = 1;
    auto* scan = app.add_subcommand("scan", "classify the fibers over P2(F_{p^k})");
    scan->add_option("--input", input, "polynomial data file with Q1, Q2, Q3, f")->required();
    scan->add_option("--ext", ext, "extension degree k <= 3");
    scan->add_option("--curves", curves_path, "data file with BI and BII");
    scan->add_option("--json", json_path, "write the report here instead of stdout");
    scan->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(json_path, skip, threads, pairs);
        if (*search) return cmd_search(prime, seed, trials, json_path, threads);
        if (*scan) return cmd_scan(input, ext, curves_path, json_path, threads);
        if (*ldelta) {
            std::cout << dpk::delta(a, b) << "\n";
        } else if (*lenum) {
            const auto e = dpk::admissible_discriminants(max);
            for (const auto& d : e.values) std::cout << d.delta << "  (a, b) = (" << d.a << ", " << d.b << ")\n";
            if (e.small_delta_warning) std::cout << "note: " << e.warning << "\n";
        } else if (*lsnf) {
            const dpk::IntMatrix m = dpk::int_matrix(parse_matrix(matrix));
            const dpk::SmithForm s = dpk::smith_normal_form(m);
            std::cout << "diagonal:";
            for (const auto& d : s.diagonal) std::cout << ' ' << d;
            std::cout << "\ncertificate: " << (dpk::verify_smith(m, s) ? "verified" : "FAILED") << "\n";
        } else if (*ldisc) {
            if (matrix.empty()) {
                const auto w = dpk::square_six_complement_witness();
                std::cout << "vector:";
                for (const auto& x : w.vector) std::cout << ' ' << x;
                std::cout << "\ncomplement rank " << w.complement.rank() << ", group " << group_string(w.group) << "\n";
            } else {
                const dpk::GramLattice l(dpk::int_matrix(parse_matrix(matrix)));
                std::cout << group_string(dpk::discriminant_group(l)) << "\n";
            }
        } else if (*leuler) {
            const auto n = dpk::strata_p2(dI, dII, bIV);
            std::cout << dpk::euler_p2(dI, dII, bIV) << "\n";
            std::cout << "strata: b_I " << n.b_I << ", b_II " << n.b_II << ", b_III " << n.b_III << ", b_IV " << n.b_IV
                      << "\n";
        }
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MissingInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const dpk::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const dpk::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dpk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dpk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
