#pragma once

#include <optional>
#include <vector>

#include "cubes/int.hpp"

namespace cubes {

// The kernel problem: ordered integer triples (A,B,C) with A*B*C = N and
// A+B+C = s. N = 0 admits infinite families and is rejected everywhere.
struct ProductSumInstance {
    Int product;  // N
    Int sum;      // s
};

struct ProductSumTriple {
    Int a, b, c;

    bool operator==(const ProductSumTriple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const ProductSumTriple& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// One signed divisor d of N viewed as the product A*B, with the quadratic
// data deciding whether integer roots exist: disc = (A+B)^2 - 4AB.
struct FactorCandidate {
    Int d;                    // signed divisor of N, the product A*B
    Int third;                // C = N/d
    Int pair_sum;             // A+B = s - N/d
    Int disc;                 // pair_sum^2 - 4d
    std::optional<Int> root;  // exact square root of disc when it is one
    Int l;                    // -pair_sum = N/d - s
};

// Candidates ordered by |d| ascending, positive sign before negative.
std::vector<FactorCandidate> factor_candidates(const ProductSumInstance& inst);

// Exactly the solutions, each once, sorted lexicographically. A candidate with
// disc = 0 yields one triple (A = B); a positive square disc yields both root
// orders. Throws ZeroProduct on N = 0.
std::vector<ProductSumTriple> enumerate_triples(const ProductSumInstance& inst);

// Square-indicator count: 2 * sum over signed d | N of [disc(d) is a square]
// minus the number of positive d with pair_sum^2 = 4d (zero-discriminant
// candidates produce a single triple, not two).
Int count_triples_formula(const ProductSumInstance& inst);

// Divisor-pair count: pairs (d, delta), d a signed divisor of N, delta a
// signed divisor of d, with delta + d/delta + N/d = s. Equals the formula.
Int count_triples_delta_form(const ProductSumInstance& inst);

// Independent oracle: A over signed divisors of N, B over signed divisors of
// N/A, C forced; counts sum matches. Ground truth for the other routes.
Int brute_force_count(const ProductSumInstance& inst);

// Literal bounded-uv variant (3 * #{(d,u,v): uv=d, u+v=N/d-s, 0<|u|<=d,
// 0<|v|<=d}). Known to disagree with the true count on many instances;
// diagnostic only, never used for counting.
Int count_triples_uv_form_literal(const ProductSumInstance& inst);

}  // namespace cubes
