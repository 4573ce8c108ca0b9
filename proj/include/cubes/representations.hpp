#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cubes/int.hpp"
#include "cubes/product_sum.hpp"

namespace cubes {

// A (t, n) query for x^3+y^3+z^3 = n with height x+y+z = t. The whole problem
// shifts to the product-sum kernel: with A = x-t, B = y-t, C = z-t one gets
// A*B*C = (n - t^3)/3 and A+B+C = -2t.
struct RepQuery {
    Int n;
    Int t;

    bool divisible() const { return mod_u(n - t, 3) == 0; }  // t^3 == t (mod 3)
    Int n1() const { return (n - cube(t)) / 3; }             // valid only when divisible()
    Int target_sum() const { return -2 * t; }
};

struct CubeTriple {
    Int x, y, z;

    bool operator==(const CubeTriple& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator<(const CubeTriple& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
};

enum class EmptyReason { NotDivisibleBy3, OddN1, Mod9Obstruction, NoWitness };

// Finite always carries count >= 1; an empty outcome carries the cheapest
// sieve that fired. InfiniteFamily (n = t^3) is distinguished, never count 0.
struct RepResult {
    enum class Kind { Finite, InfiniteFamily, Empty };
    Kind kind = Kind::Empty;
    Int count = 0;
    std::optional<EmptyReason> reason;
};

RepResult rep_count(const RepQuery& q);

// All representations, sorted lexicographically; count matches rep_count.
// Throws InfiniteFamilyError when n = t^3.
std::vector<CubeTriple> rep_enumerate(const RepQuery& q);

struct BandCount {
    Int count = 0;
    std::vector<Int> infinite_heights;  // t in range with t^3 = n, counted as 0
};

// Sum of rep counts over t in [-j, j]; skips t != n (mod 6) without solver
// calls (no solution and no infinite family can live there).
BandCount band_count(const Int& n, const Int& j);

// The unique admissible height residue mod 6 (equal to n mod 6), or absent
// when n = +-4 (mod 9) and no representation exists at all.
std::optional<int> height_residue(const Int& n);

// Literal 28-row height-residue table: for n = 9k + n_mod9 and k = k_mod4
// (mod 4), solutions force t = t_mod6 (mod 6). Rows exist only for
// n_mod9 not in {4, 5}.
struct HeightResidueRule {
    int n_mod9;
    int k_mod4;
    int t_mod6;
};
const std::array<HeightResidueRule, 28>& height_residue_table();

enum class WitnessForm { Odd, Even };

// Residues of n mod 18 attainable from the obstruction-proof parametrizations
//   odd : n = 3(2u+1)w - (6t)w + t^3,  w = u^2+u-v^2-v
//   even: n = 6u w' - (6t)w' + t^3,    w' = u^2-v^2
// given the residues of t^3 and 6t mod 18, with u, v ranging over 0..17.
std::set<int> attainable_residues_mod18(int t_cubed_mod18, int six_t_mod18, WitnessForm form);

struct ParametricWitness {
    Int u, v;
    WitnessForm form;

    bool operator==(const ParametricWitness& o) const {
        return u == o.u && v == o.v && form == o.form;
    }
    bool operator<(const ParametricWitness& o) const {
        if (u != o.u) return u < o.u;
        if (v != o.v) return v < o.v;
        return form < o.form;
    }
};

// All (u, v) in the box with N1 = (2u+1-2t)(u^2+u-v^2-v) (odd form) or
// N1 = (2u-2t)(u^2-v^2) (even form). Nonempty iff representations exist, once
// the box covers max(|u|,|v|) <= |N1|+|t|+2. Requires N1 defined and nonzero.
std::vector<ParametricWitness> parametric_witness(const RepQuery& q, const Int& u_lo,
                                                  const Int& u_hi, const Int& v_lo,
                                                  const Int& v_hi);

// Independent oracle: all solutions with |x|,|y|,|z| <= bound, found by
// tabulating z -> z^3 and walking (x, y). Throws BoundTooLarge past 10^4.
std::vector<CubeTriple> brute_cube_search(const Int& n, std::int64_t bound);

// Exact big-integer check of the famous 21-digit representation of 3.
bool verify_giant_identity();

// Elementary symmetric invariants of a representation: t = x+y+z,
// r = xy+yz+zx, s = xyz, n1 = x^2+y^2+z^2, p = 3s-n, eps = n1-r.
struct SymmetricProfile {
    Int t, r, s, n1, p, eps;
};

// Computes the profile, validating the cube-sum precondition and the exact
// product identity x^3+y^3+z^3-3xyz = (x+y+z)(x^2+y^2+z^2-xy-yz-zx).
// Throws NotASolution when x^3+y^3+z^3 != n.
SymmetricProfile symmetric_profile(const Int& x, const Int& y, const Int& z, const Int& n);

}  // namespace cubes
