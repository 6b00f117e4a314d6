#include "novikov/detector.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/json_io.hpp"
#include "novikov/square.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace nov;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInput = 3;

FreeComplex read_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return complex_from_text(ss.str());
}

int exit_for(Overall o) {
    switch (o) {
        case Overall::FinitelyDominated: return 0;
        case Overall::NotFinitelyDominated: return kExitFail;
        default: return kExitInconclusive;
    }
}

struct Scan {
    std::string name;
    WindowVerdict verdict;
};

std::vector<Scan> scan_dk(int kmax, int radius) {
    std::vector<Scan> r;
    for (int k = 0; k <= kmax; ++k) r.push_back({"D(" + std::to_string(k) + ")", graded_scan(augmented_row(k), radius)});
    return r;
}

std::vector<Scan> scan_nerve(int radius) {
    std::vector<Scan> r;
    for (Face f : kFaces) {
        RingFlavor ring = f == Face::S ? RingFlavor::laurent() : RingFlavor::face_algebra(f);
        auto expected = [&](Monomial deg) {
            std::map<int, int> e;
            if (contains_monomial(ring, deg)) e[0] = 1;
            return e;
        };
        r.push_back({"bsd(" + face_name(f) + ")", graded_scan(nerve_diagram(f).cech, radius, expected)});
    }
    return r;
}

Json scans_to_json(const std::vector<Scan>& scans, bool& ok) {
    Json a = Json::array();
    ok = true;
    for (const auto& s : scans) {
        Json f = Json::array();
        for (const auto& [deg, why] : s.verdict.failures) f.push_back({{"x", deg.ex}, {"y", deg.ey}, {"reason", why}});
        a.push_back({{"target", s.name}, {"checked", s.verdict.checked}, {"exact", s.verdict.exact()}, {"failures", f}});
        ok = ok && s.verdict.exact();
    }
    return a;
}

struct Fixture {
    std::string name;
    std::function<std::pair<bool, std::string>()> run;
};

std::vector<Fixture> fixtures() {
    return {
        {"monomial-unit",
         [] {
             DominationReport r = check_finite_domination(two_term(LaurentPoly::term(1, 3, -2)));
             bool ok = r.overall == Overall::FinitelyDominated;
             for (const auto& v : r.flavors) ok = ok && v.pivots.size() == 1 && replay(two_term(LaurentPoly::term(1, 3, -2)), v);
             return std::make_pair(ok, overall_name(r.overall));
         }},
        {"non-unit-1px",
         [] {
             DominationReport r = check_finite_domination(two_term(LaurentPoly(1) + LaurentPoly::x()));
             bool ok = r.overall == Overall::NotFinitelyDominated && r.failing &&
                       *r.failing == RingFlavor::edge(Axis::Y, 1);
             return std::make_pair(ok, overall_name(r.overall) + (r.failing ? " at " + r.failing->name() : ""));
         }},
        {"square-domination",
         [] {
             FreeComplex c = example_complex();
             DominationReport r = check_finite_domination(c);
             bool ok = r.overall == Overall::FinitelyDominated;
             std::string pivots;
             for (const auto& v : r.flavors) {
                 ok = ok && replay(c, v) && !v.pivots.empty();
                 if (v.pivots.empty()) continue;
                 bool mu = v.pivots.front().entry == example_mu();
                 pivots += " " + v.flavor.name() + ":" + (mu ? "mu" : "nu");
             }
             return std::make_pair(ok, overall_name(r.overall) + pivots);
         }},
        {"Dk-rows",
         [] {
             bool ok = false;
             Json j = scans_to_json(scan_dk(4, 10), ok);
             return std::make_pair(ok, std::string(ok ? "k = 0..4 exact on [-10,10]^2" : j.dump()));
         }},
        {"nerve-sigma",
         [] {
             bool ok = true;
             for (Face f : kFaces) {
                 NerveDiagram n = nerve_diagram(f);
                 for (Face g : star(f)) {
                     NerveDiagram m = nerve_diagram(g);
                     IntMat lam = nerve_lambda(f, g).at(0);
                     ok = ok && to_poly(lam) * n.sigma == m.sigma;
                 }
             }
             bool exact = false;
             Json j = scans_to_json(scan_nerve(8), exact);
             ok = ok && exact;
             return std::make_pair(ok, std::string(ok ? "sigma natural, H^0 = A_F on [-8,8]^2" : j.dump()));
         }},
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite domination over Z[x,1/x,y,1/y]"};
    app.require_subcommand(1);

    std::string input;
    int window = kDefaultWindow;
    auto* check = app.add_subcommand("check", "decide finite domination");
    check->add_option("--input", input, "complex in JSON")->required();
    check->add_option("--window", window, "truncation window")->check(CLI::PositiveNumber);

    auto* wit = app.add_subcommand("witness", "build the finite replacement B'");
    wit->add_option("--input", input, "complex in JSON")->required();

    auto* verify = app.add_subcommand("verify", "windowed exactness scans");
    verify->require_subcommand(1);
    auto* graded = verify->add_subcommand("graded", "graded pieces of Cech rows or nerves");
    std::string target;
    int kmax = 4, radius = 10;
    graded->add_option("--target", target, "dk or nerve")->required()->check(CLI::IsMember({"dk", "nerve"}));
    graded->add_option("--kmax", kmax, "largest k for dk")->check(CLI::NonNegativeNumber);
    graded->add_option("--radius", radius, "scan radius")->check(CLI::NonNegativeNumber);

    auto* fix = app.add_subcommand("fixtures", "built-in fixtures");
    fix->require_subcommand(1);
    auto* fixrun = fix->add_subcommand("run", "run every fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (check->parsed()) {
            FreeComplex c = read_complex(input);
            auto t0 = std::chrono::steady_clock::now();
            DominationReport r = check_finite_domination(c, window);
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            Json j = report_to_json(r);
            j["elapsed_ms"] = ms;
            std::cout << j.dump(2) << "\n";
            return exit_for(r.overall);
        }
        if (wit->parsed()) {
            Witness w = witness(read_complex(input));
            std::cout << witness_to_json(w).dump(2) << "\n";
            return w.passed() ? 0 : kExitFail;
        }
        if (graded->parsed()) {
            bool ok = false;
            Json j;
            j["target"] = target;
            j["radius"] = radius;
            if (target == "dk") {
                j["kmax"] = kmax;
                j["scans"] = scans_to_json(scan_dk(kmax, radius), ok);
            } else {
                j["scans"] = scans_to_json(scan_nerve(radius), ok);
            }
            j["pass"] = ok;
            std::cout << j.dump(2) << "\n";
            return ok ? 0 : kExitFail;
        }
        if (fixrun->parsed()) {
            bool all = true;
            for (const auto& f : fixtures()) {
                auto [ok, what] = f.run();
                all = all && ok;
                std::cout << (ok ? "PASS " : "FAIL ") << f.name << "  " << what << "\n";
            }
            return all ? 0 : kExitFail;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
