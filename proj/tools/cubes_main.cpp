#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubes/abc.hpp"
#include "cubes/errors.hpp"
#include "cubes/factorization.hpp"
#include "cubes/records.hpp"
#include "cubes/representations.hpp"
#include "cubes/robin.hpp"
#include "cubes/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using cubes::Int;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

Int parse_int(const std::string& text, const std::string& flag) {
    Int v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0) {
        throw UsageError("expected an integer for " + flag + ", got '" + text + "'");
    }
    return v;
}

Int parse_uint(const std::string& text, const std::string& flag) {
    Int v = parse_int(text, flag);
    if (v < 0) throw UsageError("expected a nonnegative integer for " + flag);
    return v;
}

unsigned long to_ulong_checked(const Int& v, const std::string& flag) {
    if (!mpz_fits_ulong_p(v.get_mpz_t())) throw UsageError(flag + " out of range");
    return mpz_get_ui(v.get_mpz_t());
}

std::string reason_name(cubes::EmptyReason r) {
    switch (r) {
        case cubes::EmptyReason::NotDivisibleBy3:
            return "not_divisible_by_3";
        case cubes::EmptyReason::OddN1:
            return "odd_n1";
        case cubes::EmptyReason::Mod9Obstruction:
            return "mod9_obstruction";
        case cubes::EmptyReason::NoWitness:
            return "no_witness";
    }
    return "?";
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_count(const std::string& n_s, const std::string& t_s, bool as_json) {
    cubes::RepQuery q{parse_int(n_s, "--n"), parse_int(t_s, "--t")};
    cubes::RepResult r = cubes::rep_count(q);
    if (r.kind == cubes::RepResult::Kind::InfiniteFamily) {
        std::cerr << "infinite family: n=t^3\n";
        return 2;
    }
    if (as_json) {
        json res;
        res["kind"] = r.kind == cubes::RepResult::Kind::Finite ? "finite" : "empty";
        res["count"] = cubes::to_string(r.count);
        if (r.reason) res["reason"] = reason_name(*r.reason);
        emit({{"cmd", "count"},
              {"input", {{"n", cubes::to_string(q.n)}, {"t", cubes::to_string(q.t)}}},
              {"result", res}});
    } else {
        std::cout << r.count << "\n";
    }
    return 0;
}

int cmd_enumerate(const std::string& n_s, const std::string& t_s, bool as_json) {
    cubes::RepQuery q{parse_int(n_s, "--n"), parse_int(t_s, "--t")};
    std::vector<cubes::CubeTriple> sols;
    try {
        sols = cubes::rep_enumerate(q);
    } catch (const cubes::InfiniteFamilyError&) {
        std::cerr << "infinite family: n=t^3\n";
        return 2;
    }
    if (as_json) {
        json triples = json::array();
        for (const auto& s : sols) {
            triples.push_back(
                {cubes::to_string(s.x), cubes::to_string(s.y), cubes::to_string(s.z)});
        }
        emit({{"cmd", "enumerate"},
              {"input", {{"n", cubes::to_string(q.n)}, {"t", cubes::to_string(q.t)}}},
              {"result", {{"count", std::to_string(sols.size())}, {"triples", triples}}}});
    } else {
        for (const auto& s : sols) std::cout << s.x << " " << s.y << " " << s.z << "\n";
    }
    return 0;
}

int cmd_band(const std::string& n_s, const std::string& j_s, bool as_json) {
    Int n = parse_int(n_s, "--n");
    Int j = parse_uint(j_s, "--j");
    cubes::BandCount band = cubes::band_count(n, j);
    if (as_json) {
        json heights = json::array();
        for (const auto& h : band.infinite_heights) heights.push_back(cubes::to_string(h));
        emit({{"cmd", "band"},
              {"input", {{"n", cubes::to_string(n)}, {"j", cubes::to_string(j)}}},
              {"result",
               {{"count", cubes::to_string(band.count)}, {"infinite_heights", heights}}}});
    } else {
        std::cout << band.count << "\n";
        for (const auto& h : band.infinite_heights) {
            std::cerr << "infinite family at t=" << h << "\n";
        }
    }
    return 0;
}

int cmd_zero(const std::string& n_s) {
    std::cout << cubes::zero_height_count(parse_int(n_s, "--n")) << "\n";
    return 0;
}

int cmd_reduced(const std::string& n_s) {
    std::cout << cubes::reduced_count(parse_int(n_s, "--n")) << "\n";
    return 0;
}

int cmd_records(const std::string& limit_s, bool as_json, const std::string& threads_s) {
    Int limit = parse_uint(limit_s, "--limit");
    auto threads = static_cast<unsigned>(
        threads_s.empty() ? 0 : to_ulong_checked(parse_uint(threads_s, "--threads"), "--threads"));
    auto entries = cubes::record_scan(limit, threads);
    if (as_json) {
        for (const auto& e : entries) {
            emit({{"n", cubes::to_string(e.n)},
                  {"count", cubes::to_string(e.count)},
                  {"is_new_max", e.is_new_max}});
        }
    } else {
        std::cout << "n,count,is_new_max\n";
        for (const auto& e : entries) {
            std::cout << e.n << "," << e.count << "," << (e.is_new_max ? "true" : "false")
                      << "\n";
        }
    }
    return 0;
}

int cmd_family(const std::string& nu_s) {
    auto nu = static_cast<unsigned>(to_ulong_checked(parse_uint(nu_s, "--nu"), "--nu"));
    std::cout << "nu,p,p1,n,A,B,C\n";
    for (const auto& e : cubes::prime_family(nu)) {
        std::cout << e.index << "," << e.p << "," << e.p1 << "," << e.n << "," << e.witness.a
                  << "," << e.witness.b << "," << e.witness.c << "\n";
    }
    return 0;
}

int cmd_abc(const std::string& xmax_s, const std::string& top_s, const std::string& eps_s,
            bool as_json) {
    Int xmax = parse_uint(xmax_s, "--xmax");
    auto top = static_cast<unsigned>(to_ulong_checked(parse_uint(top_s, "--top"), "--top"));
    bool with_eps = !eps_s.empty();
    mpq_class eps;
    if (with_eps) eps = cubes::rational_from_decimal(eps_s);
    cubes::HuntResult hunt = cubes::hunt_high_quality(xmax, top);
    if (as_json) {
        for (const auto& r : hunt.top) {
            emit({{"x", cubes::to_string(r.triple.x)},
                  {"y", cubes::to_string(r.triple.y)},
                  {"z", cubes::to_string(r.triple.z)},
                  {"n", cubes::to_string(r.triple.n)},
                  {"rad", cubes::to_string(r.triple.k)},
                  {"q", r.q},
                  {"implied_C", r.implied_c}});
        }
        for (const auto& m : hunt.mean_z) {
            json row = {{"n", cubes::to_string(m.n)},
                        {"ordered_solutions", m.ordered_solutions},
                        {"mean_z", m.mean_z.get_str()},
                        {"rad", cubes::to_string(m.radical)}};
            if (with_eps) {
                auto pow = cubes::evaluate_to_digits(
                    [&](mpfr_prec_t p) {
                        return (cubes::Interval::of_rational(eps + 1, p) *
                                cubes::Interval::of_int(m.radical, p).log())
                            .exp();
                    },
                    20);
                row["rad_pow"] = pow.decimal;
                mpq_class k = m.mean_z / pow.approx;
                row["implied_K"] = k.get_d();
            }
            emit(row);
        }
    } else {
        std::printf("%-7s %-7s %-7s %-14s %-10s %-14s %-14s\n", "x", "y", "z", "n", "rad", "q",
                    "implied_C");
        for (const auto& r : hunt.top) {
            std::printf("%-7s %-7s %-7s %-14s %-10s %-14.10f %-14.10f\n",
                        cubes::to_string(r.triple.x).c_str(),
                        cubes::to_string(r.triple.y).c_str(),
                        cubes::to_string(r.triple.z).c_str(),
                        cubes::to_string(r.triple.n).c_str(),
                        cubes::to_string(r.triple.k).c_str(), r.q, r.implied_c);
        }
        if (!hunt.mean_z.empty()) {
            std::printf("mean z per n with repeated solutions:\n");
            if (with_eps) {
                std::printf("%-14s %-8s %-14s %-10s %-16s %-12s\n", "n", "count", "mean_z",
                            "rad", "rad^(1+eps)", "implied_K");
            } else {
                std::printf("%-14s %-8s %-14s %-10s\n", "n", "count", "mean_z", "rad");
            }
            for (const auto& m : hunt.mean_z) {
                if (with_eps) {
                    auto pow = cubes::evaluate_to_digits(
                        [&](mpfr_prec_t p) {
                            return (cubes::Interval::of_rational(eps + 1, p) *
                                    cubes::Interval::of_int(m.radical, p).log())
                                .exp();
                        },
                        20);
                    mpq_class k = m.mean_z / pow.approx;
                    std::printf("%-14s %-8u %-14s %-10s %-16.8g %-12.8g\n",
                                cubes::to_string(m.n).c_str(), m.ordered_solutions,
                                m.mean_z.get_str().c_str(), cubes::to_string(m.radical).c_str(),
                                pow.value, k.get_d());
                } else {
                    std::printf("%-14s %-8u %-14s %-10s\n", cubes::to_string(m.n).c_str(),
                                m.ordered_solutions, m.mean_z.get_str().c_str(),
                                cubes::to_string(m.radical).c_str());
                }
            }
        }
    }
    return 0;
}

int cmd_robin(const std::string& from_s, const std::string& to_s) {
    auto from = to_ulong_checked(parse_uint(from_s, "--from"), "--from");
    auto to = to_ulong_checked(parse_uint(to_s, "--to"), "--to");
    cubes::RobinScan scan = cubes::robin_scan(from, to);
    std::uint64_t claim_violations = 0;
    for (const auto& f : scan.findings) {
        if (f.in_claim_range) {
            ++claim_violations;
            std::cout << "n=" << f.n << " sigma1=" << f.sigma1
                      << " VIOLATES the bound inside the claim range\n";
        } else {
            std::cout << "n=" << f.n << " sigma1=" << f.sigma1
                      << " exceeds the bound (out of claim range, n <= 5040)\n";
        }
    }
    std::cout << "checked " << scan.checked << " values in [" << scan.from << "," << scan.to
              << "]; claim-range violations: " << claim_violations
              << "; out-of-claim failures: " << (scan.findings.size() - claim_violations)
              << "\n";
    return 0;
}

int cmd_sigma_ratio(const std::string& n_s) {
    cubes::SigmaRatioReport rep = cubes::sigma_ratio(parse_uint(n_s, "--n"));
    std::cout << "n=" << rep.n << " sigma1=" << rep.sigma1 << " ratio=" << rep.ratio_decimal
              << " in_S=" << (rep.in_s ? "true" : "false") << "\n";
    return 0;
}

int cmd_verify(const std::string& suite_s, bool fast) {
    auto suite = cubes::suite_from_name(suite_s);
    if (!suite) throw UsageError("unknown suite '" + suite_s + "'");
    bool ok = cubes::run_suite(*suite, fast, std::cout);
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and enumeration for x^3+y^3+z^3 = n at fixed height x+y+z = t"};
    app.require_subcommand(1);

    std::string n_s, t_s, j_s, limit_s, threads_s, nu_s, xmax_s, top_s, eps_s, from_s, to_s,
        suite_s;
    bool as_json = false, as_csv = false, fast = false;

    auto* count = app.add_subcommand("count", "number of representations at height t");
    count->add_option("--n", n_s)->required();
    count->add_option("--t", t_s)->required();
    count->add_flag("--json", as_json);

    auto* enumerate = app.add_subcommand("enumerate", "list representations at height t");
    enumerate->add_option("--n", n_s)->required();
    enumerate->add_option("--t", t_s)->required();
    enumerate->add_flag("--json", as_json);

    auto* band = app.add_subcommand("band", "total count over heights |t| <= j");
    band->add_option("--n", n_s)->required();
    band->add_option("--j", j_s)->required();
    band->add_flag("--json", as_json);

    auto* zero = app.add_subcommand("zero", "height-zero count R(0,n)");
    zero->add_option("--n", n_s)->required();

    auto* records = app.add_subcommand("records", "scan height-zero counts up to a limit");
    records->add_option("--limit", limit_s)->required();
    auto* csv_flag = records->add_flag("--csv", as_csv);
    records->add_flag("--json", as_json)->excludes(csv_flag);
    records->add_option("--threads", threads_s);

    auto* reduced = app.add_subcommand("reduced", "count of xy(x-y-1) = n");
    reduced->add_option("--n", n_s)->required();

    auto* family = app.add_subcommand("family", "consecutive-prime family with witnesses");
    family->add_option("--nu", nu_s)->required();

    auto* abc = app.add_subcommand("abc", "hunt high-quality positive triples x+y=z");
    abc->add_option("--xmax", xmax_s)->required();
    abc->add_option("--top", top_s)->required();
    abc->add_option("--epsilon", eps_s);
    abc->add_flag("--json", as_json);

    auto* robin = app.add_subcommand("robin", "scan the sigma bound over a range");
    robin->add_option("--from", from_s)->required();
    robin->add_option("--to", to_s)->required();

    auto* sigma_ratio = app.add_subcommand("sigma-ratio", "sigma1(n) over its smooth bound");
    sigma_ratio->add_option("--n", n_s)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite_s)->required();
    verify->add_flag("--fast", fast);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(count)) return cmd_count(n_s, t_s, as_json);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(n_s, t_s, as_json);
        if (app.got_subcommand(band)) return cmd_band(n_s, j_s, as_json);
        if (app.got_subcommand(zero)) return cmd_zero(n_s);
        if (app.got_subcommand(records)) return cmd_records(limit_s, as_json, threads_s);
        if (app.got_subcommand(reduced)) return cmd_reduced(n_s);
        if (app.got_subcommand(family)) return cmd_family(nu_s);
        if (app.got_subcommand(abc)) return cmd_abc(xmax_s, top_s, eps_s, as_json);
        if (app.got_subcommand(robin)) return cmd_robin(from_s, to_s);
        if (app.got_subcommand(sigma_ratio)) return cmd_sigma_ratio(n_s);
        if (app.got_subcommand(verify)) return cmd_verify(suite_s, fast);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const cubes::PrecisionExhausted& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
