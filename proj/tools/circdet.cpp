// circdet: command-line front end for the circdet library.
//
// Exit codes: 0 success, 1 verification failure or counterexample,
// 2 usage error, 3 unsupported parameter regime.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "circdet/circdet.hpp"

namespace {

using namespace circdet;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

constexpr const char* kWorkersEnv = "CIRCDET_WORKERS";

unsigned worker_count() {
    const char* raw = std::getenv(kWorkersEnv);
    if (!raw || !*raw) return 1;
    char* end = nullptr;
    const long n = std::strtol(raw, &end, 10);
    if (*end != '\0' || n < 1 || n > 256) {
        std::cerr << "ignoring invalid " << kWorkersEnv << "='" << raw << "'\n";
        return 1;
    }
    return static_cast<unsigned>(n);
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump() << '\n'; }

Backend backend_from(const std::string& name) {
    // Validated by CLI11 before we get here.
    return *parse_backend(name);
}

std::vector<std::string> backend_names() {
    return {"auto", "bareiss", "cycle_cover", "bruteforce"};
}

struct PhiArgs {
    std::int64_t p = 0, q = 0;
    std::optional<std::int64_t> t;
    std::string backend = "auto";
    std::string format = "text";
};

int cmd_phi(const PhiArgs& a) {
    const ThetaReduction red = a.t ? reduce_theta(a.p, a.q, *a.t) : ThetaReduction{CirculantSpec::make(a.p, a.q)};
    BiPoly phi = phi_polynomial(red.spec.p, red.spec.q, backend_from(a.backend));
    if (red.swapped) phi = swap_xy(phi);
    if (a.t && *a.t != 1)
        std::cerr << "reduced to canonical p=" << red.spec.p << " q=" << red.spec.q
                  << (red.swapped ? " with x and y exchanged\n" : "\n");
    if (a.format == "json")
        print_json(to_json(phi));
    else
        std::cout << to_string(phi) << '\n';
    return kExitOk;
}

struct ClassArgs {
    std::int64_t p = 0, q = 0, r = 0, s = 0;
    std::string backend = "auto";
    std::string format = "text";
};

int cmd_coeff(const ClassArgs& a) {
    PermClassKey::make(a.p, a.q, a.r, a.s);
    const auto report = coefficient(static_cast<std::uint32_t>(a.p), static_cast<std::uint32_t>(a.q),
                                    static_cast<std::uint32_t>(a.r), static_cast<std::uint32_t>(a.s),
                                    backend_from(a.backend));
    if (a.format == "json")
        print_json(to_json(report));
    else
        std::cout << to_text(report);
    return kExitOk;
}

int cmd_witness(const ClassArgs& a) {
    const auto key = PermClassKey::make(a.p, a.q, a.r, a.s);
    const auto structure = predict_structure(key);
    const auto sigma = construct_witness(key);
    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = key.p;
        j["q"] = key.q;
        j["r"] = key.r;
        j["s"] = key.s;
        j["structure"] = to_json(structure);
        j["witness"] = to_json(sigma);
        print_json(j);
        return kExitOk;
    }
    std::cout << key.label() << ": ell = " << structure.ell << ", k = " << structure.k << '\n';
    if (structure.k > 0) {
        const auto path = build_path(structure.ones_per_cycle, structure.qs_per_cycle);
        std::cout << "path " << path.steps() << " (E = 1-step, N = q-step)\n";
    }
    std::cout << "cycles   " << sigma.cycle_notation() << '\n';
    std::cout << "one-line " << sigma.one_line() << '\n';
    std::cout << "sign     " << (sigma.sign() > 0 ? "+1" : "-1") << '\n';
    return kExitOk;
}

int cmd_enumerate(const ClassArgs& a) {
    const auto key = PermClassKey::make(a.p, a.q, a.r, a.s);
    const auto members = enumerate_class(key);
    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["p"] = key.p;
        j["q"] = key.q;
        j["r"] = key.r;
        j["s"] = key.s;
        j["count"] = members.size();
        auto list = nlohmann::ordered_json::array();
        for (const auto& m : members) list.push_back(m.one_line());
        j["permutations"] = std::move(list);
        print_json(j);
        return kExitOk;
    }
    for (const auto& m : members) std::cout << m.one_line() << '\n';
    return kExitOk;
}

struct PermanentArgs {
    std::int64_t p = 0, q = 0;
    std::string backend = "auto";
    std::string format = "text";
};

int cmd_permanent(const PermanentArgs& a) {
    const auto spec = CirculantSpec::make(a.p, a.q);
    const auto report = bounds_report(spec.p, spec.q, backend_from(a.backend));
    const auto gen = permanent_generating(spec.p, spec.q);
    if (a.format == "json") {
        auto j = to_json(report);
        j["generating"] = to_json(gen);
        print_json(j);
    } else {
        std::cout << "D(x,y) = " << to_string(gen) << '\n' << to_text(report);
    }
    return report.all_hold() ? kExitOk : kExitFailure;
}

struct GrowthArgs {
    std::int64_t q = 0;
    std::int64_t p_max = 0;
    std::string backend = "auto";
    std::string format = "csv";
};

int cmd_growth(const GrowthArgs& a) {
    if (a.q < 2 || a.p_max < 3) throw InvalidSpec("growth requires q >= 2 and pmax >= 3");
    const auto rows = growth_table(static_cast<std::uint32_t>(a.q), static_cast<std::uint32_t>(a.p_max),
                                   backend_from(a.backend));
    bool all = true;
    for (const auto& r : rows) all = all && r.sandwich_holds;
    if (a.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        print_json(arr);
    } else if (a.format == "text") {
        std::printf("%4s %4s %24s %24s %6s %8s %s\n", "p", "q", "M", "d11", "N", "root", "sandwich");
        for (const auto& r : rows)
            std::printf("%4u %4u %24s %24s %6zu %8s %s\n", r.p, r.q, r.max_coeff.str().c_str(), r.d11.str().c_str(),
                        r.n_monomials, fixed4(r.root).c_str(), r.sandwich_holds ? "ok" : "FAIL");
    } else {
        std::cout << growth_csv(rows);
    }
    return all ? kExitOk : kExitFailure;
}

struct VerifyArgs {
    std::string suite;
    std::int64_t p_min = 3;
    std::int64_t p_max = 9;
    std::string q_policy = "all";
    std::int64_t cases = 10000;
    std::uint64_t seed = verify::Options{}.seed;
    std::string format = "text";
    unsigned workers = 0;  // 0: take CIRCDET_WORKERS, else 1
};

int cmd_verify(const VerifyArgs& a) {
    if (a.p_min < 3 || a.p_max < a.p_min || a.p_max > CirculantSpec::max_p)
        throw InvalidSpec("need 3 <= pmin <= pmax");
    if (a.cases < 1) throw InvalidSpec("--cases must be positive");
    verify::Options opt;
    opt.p_min = static_cast<std::uint32_t>(a.p_min);
    opt.p_max = static_cast<std::uint32_t>(a.p_max);
    opt.q_policy = a.q_policy == "coprime" ? verify::QPolicy::Coprime : verify::QPolicy::All;
    opt.random_cases = static_cast<std::uint64_t>(a.cases);
    opt.seed = a.seed;

    const auto cases = verify::suite_cases(a.suite, opt);
    std::vector<verify::Outcome> outcomes(cases.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(cases.size());
    auto work = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                outcomes[i] = verify::run_case(cases[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned wanted = a.workers ? a.workers : worker_count();
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(wanted, std::max<std::size_t>(1, cases.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (!e.empty()) throw Error(e);

    const auto res = verify::reduce(a.suite, outcomes);
    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["suite"] = res.suite;
        j["cases"] = res.cases;
        j["checks"] = res.checks;
        j["failures"] = res.failures;
        j["passed"] = res.passed();
        j["first_counterexample"] = res.passed() ? nlohmann::ordered_json(nullptr)
                                                 : nlohmann::ordered_json(res.first_counterexample);
        print_json(j);
    } else {
        std::cout << "suite " << res.suite << ": cases " << res.cases << ", checks " << res.checks << ", failures "
                  << res.failures << " -> " << (res.passed() ? "PASS" : "FAIL") << '\n';
        if (!res.passed()) std::cout << "first counterexample: " << res.first_counterexample << '\n';
    }
    return res.passed() ? kExitOk : kExitFailure;
}

struct BenchArgs {
    std::vector<std::string> backends;
    std::vector<std::int64_t> ps;
    std::vector<std::int64_t> qs;
};

int cmd_bench(const BenchArgs& a) {
    for (const auto& b : a.backends)
        if (b != "bareiss" && b != "cycle_cover" && b != "bruteforce" && b != "ryser")
            throw InvalidSpec("unknown backend '" + b + "' (expected bareiss, cycle_cover, bruteforce, ryser)");

    struct Row {
        std::string backend;
        std::uint32_t p = 0, q = 0;
        std::string status;
        double seconds = 0.0;
        std::optional<BigInt> abs_sum;
        std::optional<BiPoly> poly;
    };

    bool mismatch = false;
    std::cout << "backend,p,q,status,seconds,check\n";
    for (auto p : a.ps)
        for (auto q : a.qs) {
            const auto spec = CirculantSpec::make(p, q);
            std::vector<Row> rows;
            for (const auto& name : a.backends) {
                Row row;
                row.backend = name;
                row.p = spec.p;
                row.q = spec.q;
                row.status = "OK";
                const auto t0 = std::chrono::steady_clock::now();
                try {
                    if (name == "ryser") {
                        row.abs_sum = permanent_ryser(spec.p, spec.q);
                    } else {
                        row.poly = name == "bareiss"       ? det_bareiss(spec)
                                   : name == "cycle_cover" ? det_cycle_cover(spec)
                                                           : det_bruteforce(spec);
                        BigInt sum = 0;
                        for (const auto& t : row.poly->terms()) sum += abs(t.c);
                        row.abs_sum = sum;
                    }
                } catch (const TooLarge&) {
                    row.status = "SKIPPED";
                } catch (const StateSpaceTooLarge&) {
                    row.status = "SKIPPED";
                }
                row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                rows.push_back(std::move(row));
            }

            std::size_t computed = 0;
            bool agree = true;
            const Row* ref_poly = nullptr;
            const Row* ref_sum = nullptr;
            for (const auto& r : rows) {
                if (r.status != "OK") continue;
                ++computed;
                if (r.poly) {
                    if (ref_poly && !(*ref_poly->poly == *r.poly)) agree = false;
                    if (!ref_poly) ref_poly = &r;
                }
                if (ref_sum && *ref_sum->abs_sum != *r.abs_sum) agree = false;
                if (!ref_sum) ref_sum = &r;
            }
            mismatch = mismatch || !agree;
            for (const auto& r : rows) {
                const char* check = computed < 2 || r.status != "OK" ? "-" : agree ? "agree" : "MISMATCH";
                char secs[32];
                std::snprintf(secs, sizeof secs, "%.6f", r.status == "OK" ? r.seconds : 0.0);
                std::cout << r.backend << ',' << r.p << ',' << r.q << ',' << r.status << ',' << secs << ',' << check
                          << '\n';
            }
        }
    return mismatch ? kExitFailure : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinants and permanents of three-band circulant matrices", "circdet"};
    app.require_subcommand(1);

    const auto formats_text_json = CLI::IsMember({"text", "json"});
    const auto backends = CLI::IsMember(backend_names());

    PhiArgs phi_args;
    auto* phi = app.add_subcommand("phi", "Print Phi_{p,q}(x,y)");
    phi->add_option("--p", phi_args.p, "matrix size")->required();
    phi->add_option("--q", phi_args.q, "offset of the y band")->required();
    phi->add_option("--t", phi_args.t, "offset of the x band (reduced to t = 1)");
    phi->add_option("--backend", phi_args.backend)->check(backends);
    phi->add_option("--format", phi_args.format)->check(formats_text_json);

    ClassArgs coeff_args, witness_args, enum_args;
    auto add_class_opts = [&](CLI::App* sub, ClassArgs& a) {
        sub->add_option("--p", a.p)->required();
        sub->add_option("--q", a.q)->required();
        sub->add_option("--r", a.r, "number of 1-steps (exponent of x)")->required();
        sub->add_option("--s", a.s, "number of q-steps (exponent of y)")->required();
        sub->add_option("--format", a.format)->check(formats_text_json);
    };
    auto* coeff = app.add_subcommand("coeff", "Report the coefficient of x^r y^s");
    add_class_opts(coeff, coeff_args);
    coeff->add_option("--backend", coeff_args.backend)->check(backends);
    auto* witness = app.add_subcommand("witness", "Construct an explicit member of T_{p,q}(r,s)");
    add_class_opts(witness, witness_args);
    auto* enumerate = app.add_subcommand("enumerate", "List every member of T_{p,q}(r,s) (p <= 10)");
    add_class_opts(enumerate, enum_args);

    PermanentArgs perm_args;
    auto* permanent = app.add_subcommand("permanent", "Permanent D_{p,q}, abs-sum and bounds");
    permanent->add_option("--p", perm_args.p)->required();
    permanent->add_option("--q", perm_args.q)->required();
    permanent->add_option("--backend", perm_args.backend)->check(backends);
    permanent->add_option("--format", perm_args.format)->check(formats_text_json);

    GrowthArgs growth_args;
    auto* growth = app.add_subcommand("growth", "Largest coefficient M(p,q) for fixed q");
    growth->add_option("--q", growth_args.q)->required();
    growth->add_option("--pmax", growth_args.p_max)->required();
    growth->add_option("--backend", growth_args.backend)->check(backends);
    growth->add_option("--format", growth_args.format)->check(CLI::IsMember({"csv", "text", "json"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run a verification battery against brute-force oracles");
    std::vector<std::string> suites(verify::suite_names.begin(), verify::suite_names.end());
    verify->add_option("--suite", verify_args.suite)->required()->check(CLI::IsMember(suites));
    verify->add_option("--pmin", verify_args.p_min);
    verify->add_option("--pmax", verify_args.p_max);
    verify->add_option("--q-policy", verify_args.q_policy)->check(CLI::IsMember({"all", "coprime"}));
    verify->add_option("--cases", verify_args.cases, "random cases per lemma (suite lemmas)");
    verify->add_option("--seed", verify_args.seed);
    verify->add_option("--format", verify_args.format)->check(formats_text_json);
    verify->add_option("--workers", verify_args.workers, "worker threads (default: $CIRCDET_WORKERS or 1)")
        ->check(CLI::Range(1u, 256u));

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time backends; CSV on stdout");
    bench->add_option("--backends", bench_args.backends)->required()->delimiter(',');
    bench->add_option("--p", bench_args.ps)->required()->delimiter(',');
    bench->add_option("--q", bench_args.qs)->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n";
        const auto selected = app.get_subcommands();
        std::cerr << (selected.empty() ? app.help() : selected.front()->help());
        return kExitUsage;
    }

    try {
        if (*phi) return cmd_phi(phi_args);
        if (*coeff) return cmd_coeff(coeff_args);
        if (*witness) return cmd_witness(witness_args);
        if (*enumerate) return cmd_enumerate(enum_args);
        if (*permanent) return cmd_permanent(perm_args);
        if (*growth) return cmd_growth(growth_args);
        if (*verify) return cmd_verify(verify_args);
        if (*bench) return cmd_bench(bench_args);
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidKey& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IrreducibleSpec& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const TooLarge& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const StateSpaceTooLarge& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const EmptyClass& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
