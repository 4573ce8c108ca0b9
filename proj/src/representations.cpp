#include "cubes/representations.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "cubes/errors.hpp"
#include "cubes/factorization.hpp"

namespace cubes {

namespace {

bool mod9_obstructed(const Int& n) {
    unsigned long r = mod_u(n, 9);
    return r == 4 || r == 5;
}

}  // namespace

RepResult rep_count(const RepQuery& q) {
    RepResult res;
    if (q.n == cube(q.t)) {
        res.kind = RepResult::Kind::InfiniteFamily;
        return res;
    }
    // Cheapest sieve first: divisibility, parity, mod 9, then the solver.
    if (!q.divisible()) {
        res.kind = RepResult::Kind::Empty;
        res.reason = EmptyReason::NotDivisibleBy3;
        return res;
    }
    Int n1 = q.n1();
    if (is_odd(n1)) {
        res.kind = RepResult::Kind::Empty;
        res.reason = EmptyReason::OddN1;
        return res;
    }
    if (mod9_obstructed(q.n)) {
        res.kind = RepResult::Kind::Empty;
        res.reason = EmptyReason::Mod9Obstruction;
        return res;
    }
    Int count = count_triples_formula({n1, q.target_sum()});
    if (count == 0) {
        res.kind = RepResult::Kind::Empty;
        res.reason = EmptyReason::NoWitness;
        return res;
    }
    res.kind = RepResult::Kind::Finite;
    res.count = count;
    return res;
}

std::vector<CubeTriple> rep_enumerate(const RepQuery& q) {
    if (q.n == cube(q.t)) {
        throw InfiniteFamilyError("rep_enumerate: infinite family, n = t^3");
    }
    if (!q.divisible()) return {};
    Int n1 = q.n1();
    if (is_odd(n1) || mod9_obstructed(q.n)) return {};
    std::vector<CubeTriple> out;
    for (const ProductSumTriple& abc : enumerate_triples({n1, q.target_sum()})) {
        out.push_back({abc.a + q.t, abc.b + q.t, abc.c + q.t});
    }
    std::sort(out.begin(), out.end());
    return out;
}

BandCount band_count(const Int& n, const Int& j) {
    BandCount band;
    if (j < 0) return band;
    if (mod9_obstructed(n)) return band;  // no solutions, no cubes = n possible
    unsigned long n_mod6 = mod_u(n, 6);
    for (Int t = -j; t <= j; ++t) {
        if (mod_u(t, 6) != n_mod6) continue;
        RepResult r = rep_count({n, t});
        if (r.kind == RepResult::Kind::InfiniteFamily) {
            band.infinite_heights.push_back(t);
        } else {
            band.count += r.count;
        }
    }
    return band;
}

std::optional<int> height_residue(const Int& n) {
    if (mod9_obstructed(n)) return std::nullopt;
    return static_cast<int>(mod_u(n, 6));
}

const std::array<HeightResidueRule, 28>& height_residue_table() {
    static const std::array<HeightResidueRule, 28> table = {{
        {0, 0, 0}, {0, 1, 3}, {0, 2, 0}, {0, 3, 3},  //
        {1, 0, 1}, {1, 1, 4}, {1, 2, 1}, {1, 3, 4},  //
        {2, 0, 2}, {2, 1, 5}, {2, 2, 2}, {2, 3, 5},  //
        {3, 0, 3}, {3, 1, 0}, {3, 2, 3}, {3, 3, 0},  //
        {6, 0, 0}, {6, 1, 3}, {6, 2, 0}, {6, 3, 3},  //
        {7, 0, 1}, {7, 1, 4}, {7, 2, 1}, {7, 3, 4},  //
        {8, 0, 2}, {8, 1, 5}, {8, 2, 2}, {8, 3, 5},  //
    }};
    return table;
}

std::set<int> attainable_residues_mod18(int t_cubed_mod18, int six_t_mod18, WitnessForm form) {
    std::set<int> out;
    for (int u = 0; u < 18; ++u) {
        for (int v = 0; v < 18; ++v) {
            int n;
            if (form == WitnessForm::Odd) {
                int w = (u * u + u - v * v - v) % 18;
                n = (3 * (2 * u + 1) * w - six_t_mod18 * w + t_cubed_mod18) % 18;
            } else {
                int w = (u * u - v * v) % 18;
                n = (3 * w * 2 * u - six_t_mod18 * w + t_cubed_mod18) % 18;
            }
            out.insert(((n % 18) + 18) % 18);
        }
    }
    return out;
}

std::vector<ParametricWitness> parametric_witness(const RepQuery& q, const Int& u_lo,
                                                  const Int& u_hi, const Int& v_lo,
                                                  const Int& v_hi) {
    if (!q.divisible() || q.n1() == 0) {
        throw DomainError("parametric_witness: N1 must be defined and nonzero");
    }
    Int n1 = q.n1();
    std::vector<ParametricWitness> out;
    auto emit = [&](const Int& u, const Int& v, WitnessForm form) {
        if (v < v_lo || v > v_hi) return;
        out.push_back({u, v, form});
    };
    // For fixed u both forms are N1 = m * w with w quadratic in v, so v is
    // recovered by a square-root check instead of a second range walk.
    for (Int u = u_lo; u <= u_hi; ++u) {
        {
            Int m = 2 * u + 1 - 2 * q.t;  // odd form: w = u^2+u-v^2-v
            if (m != 0 && mpz_divisible_p(n1.get_mpz_t(), m.get_mpz_t())) {
                Int w = n1 / m;
                Int disc = 1 + 4 * (u * u + u - w);
                if (auto o = exact_square_root(disc)) {
                    emit(u, (*o - 1) / 2, WitnessForm::Odd);
                    emit(u, (-*o - 1) / 2, WitnessForm::Odd);
                }
            }
        }
        {
            Int m = 2 * u - 2 * q.t;  // even form: w = u^2-v^2
            if (m != 0 && mpz_divisible_p(n1.get_mpz_t(), m.get_mpz_t())) {
                Int w = n1 / m;
                Int v2 = u * u - w;
                if (auto r = exact_square_root(v2)) {
                    emit(u, *r, WitnessForm::Even);
                    if (*r != 0) emit(u, -*r, WitnessForm::Even);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::optional<std::int64_t> exact_cbrt_i64(std::int64_t v) {
    double g = std::cbrt(static_cast<double>(v));
    auto r = static_cast<std::int64_t>(std::llround(g));
    for (std::int64_t c = r - 2; c <= r + 2; ++c) {
        if (c * c * c == v) return c;
    }
    return std::nullopt;
}

}  // namespace

std::vector<CubeTriple> brute_cube_search(const Int& n, std::int64_t bound) {
    if (bound > 10'000) throw BoundTooLarge("brute_cube_search: bound capped at 10^4");
    std::vector<CubeTriple> out;
    if (bound < 0) return out;
    Int max_reach = 3 * cube(Int(bound));
    if (n > max_reach || n < -max_reach) return out;
    auto n64 = to_int64(n);
    for (std::int64_t x = -bound; x <= bound; ++x) {
        std::int64_t x3 = x * x * x;
        for (std::int64_t y = -bound; y <= bound; ++y) {
            std::int64_t rest = n64 - x3 - y * y * y;
            auto z = exact_cbrt_i64(rest);
            if (z && *z >= -bound && *z <= bound) {
                out.push_back({Int(x), Int(y), Int(*z)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_giant_identity() {
    Int a("569936821221962380720");
    Int b("-569936821113563493509");
    Int c("-472715493453327032");
    return cube(a) + cube(b) + cube(c) == 3;
}

SymmetricProfile symmetric_profile(const Int& x, const Int& y, const Int& z, const Int& n) {
    if (cube(x) + cube(y) + cube(z) != n) {
        throw NotASolution("symmetric_profile: x^3+y^3+z^3 != n");
    }
    SymmetricProfile pr;
    pr.t = x + y + z;
    pr.r = x * y + y * z + z * x;
    pr.s = x * y * z;
    pr.n1 = x * x + y * y + z * z;
    pr.p = 3 * pr.s - n;
    pr.eps = pr.n1 - pr.r;
    // x^3+y^3+z^3 - 3xyz = (x+y+z)(x^2+y^2+z^2 - xy-yz-zx), exactly.
    if (n - 3 * pr.s != pr.t * pr.eps) {
        throw NotASolution("symmetric_profile: product identity failed");
    }
    return pr;
}

}  // namespace cubes
