#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dpk/lattice.hpp"
#include "dpk/pipeline.hpp"
#include "properties.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
    int id;
    std::string title;
    bool pass = false;
    std::vector<std::string> notes;
};

void report_checks(Verdict& v, const std::vector<dpk::Check>& checks) {
    bool ok = !checks.empty();
    for (const auto& c : checks) {
        ok = ok && c.status == dpk::CheckStatus::pass;
        v.notes.push_back(std::string(dpk::to_string(c.status)) + "  " + c.name + "  [" + c.details + "]");
    }
    v.pass = ok;
}

void report_outcomes(Verdict& v, const std::vector<dpk::props::Outcome>& outs) {
    v.pass = true;
    for (const auto& o : outs) {
        v.pass = v.pass && o.ok() && o.cases > 0;
        v.notes.push_back(std::string(o.ok() ? "pass" : "fail") + "  " + o.name + "  (" + std::to_string(o.cases) +
                          " cases)" + (o.ok() ? "" : ": " + o.failure));
    }
}

bool in(const std::set<std::string>& names, const std::string& n) { return names.count(n) != 0; }

}  // namespace

int main(int argc, char** argv) {
    bool with_elimination = false;
    unsigned trials = 20;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--with-elimination") == 0) with_elimination = true;
        else if (std::strcmp(argv[i], "--trials") == 0 && i + 1 < argc) trials = static_cast<unsigned>(std::atoi(argv[++i]));
    }
    std::vector<Verdict> verdicts;

    // 1 and 2 share a single run over the embedded example.
    const auto t1 = Clock::now();
    dpk::VerifyOptions vo;
    vo.skip_elimination = !with_elimination;
    const dpk::VerifyReport vr = dpk::verify_example(vo);
    const double verify_secs = since(t1);
    const std::set<std::string> scan_checks{"scan over F_5 agrees with the listed curves", "scan covers every point of P2(F_5)",
                                            "scan agrees with the computed curves", "trisection D on a smooth fiber"};
    std::vector<dpk::Check> c1, c2;
    std::set<std::string> seen;
    for (const auto& c : vr.checks) {
        seen.insert(c.name);
        if (in(scan_checks, c.name)) c2.push_back(c);
        else if (c.status != dpk::CheckStatus::skipped) c1.push_back(c);
    }
    {
        Verdict v{1, "F_5 example regression"};
        report_checks(v, c1);
        const bool fast = verify_secs < 15 * 60;
        v.notes.push_back(std::string(fast ? "pass" : "fail") + "  runtime " + std::to_string(verify_secs) +
                          " s (budget 900 s, elimination " + (with_elimination ? "included" : "skipped") + ")");
        v.pass = v.pass && fast && c1.size() >= 10;
        verdicts.push_back(std::move(v));
    }
    {
        Verdict v{2, "fiber scan consistency over P2(F_5)"};
        report_checks(v, c2);
        for (const auto& n : scan_checks)
            if (!in(seen, n)) {
                v.pass = false;
                v.notes.push_back("fail  missing check: " + n);
            }
        verdicts.push_back(std::move(v));
    }
    {
        Verdict v{3, "Euler characteristic numerology"};
        const long long chi = dpk::euler_p2(6, 6, 9);
        const auto agree = dpk::props::euler_agreement(8);
        report_outcomes(v, {agree});
        v.notes.push_back(std::string(chi == 27 ? "pass" : "fail") + "  euler_p2(6, 6, 9) = " + std::to_string(chi));
        v.pass = v.pass && chi == 27;
        verdicts.push_back(std::move(v));
    }
    {
        Verdict v{4, "lattice suite"};
        report_outcomes(v, dpk::props::lattice_suite());
        verdicts.push_back(std::move(v));
    }
    {
        Verdict v{5, "engine property suite"};
        report_outcomes(v, dpk::props::engine_suite());
        verdicts.push_back(std::move(v));
    }
    {
        Verdict v{6, "genericity over F_7"};
        unsigned structural = 0, consistent = 0;
        bool engine_error = false;
        const auto t6 = Clock::now();
        for (unsigned s = 1; s <= trials; ++s) {
            try {
                const dpk::TrialReport t = dpk::run_trial(7, s);
                structural += t.structural;
                consistent += t.structural && t.generic;
                std::ostringstream os;
                os << "seed " << s << ": " << (t.generic ? "generic" : "non-generic");
                if (!t.failure.empty()) os << " (" << t.failure << ")";
                if (t.structural && !t.generic) os << "  SCAN INCONSISTENT";
                os << "  " << std::fixed << std::setprecision(1) << t.seconds << " s";
                v.notes.push_back(os.str());
            } catch (const std::exception& e) {
                engine_error = true;
                v.notes.push_back("seed " + std::to_string(s) + ": engine error: " + e.what());
            }
            std::cerr << "  " << v.notes.back() << "\n";
        }
        const bool enough = 2 * structural >= trials;
        v.pass = !engine_error && enough && consistent == structural;
        v.notes.push_back(std::to_string(structural) + "/" + std::to_string(trials) +
                          " pass every structural check (need half); " + std::to_string(consistent) +
                          " of those scan consistently; " + std::to_string(since(t6)) + " s");
        verdicts.push_back(std::move(v));
    }

    for (const auto& v : verdicts) {
        std::cout << "[" << v.id << "] " << v.title << "\n";
        for (const auto& n : v.notes) std::cout << "    " << n << "\n";
    }
    std::cout << "\n";
    bool all = true;
    for (const auto& v : verdicts) {
        std::cout << "criterion " << v.id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.title << "\n";
        all = all && v.pass;
    }
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
    return all ? 0 : 1;
}
