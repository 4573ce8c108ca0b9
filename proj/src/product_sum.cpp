#include "cubes/product_sum.hpp"

#include <algorithm>

#include "cubes/errors.hpp"
#include "cubes/factorization.hpp"

namespace cubes {

namespace {

void require_nonzero(const ProductSumInstance& inst) {
    if (inst.product == 0) {
        throw ZeroProduct("product-sum kernel: N = 0 admits infinite solution families");
    }
}

FactorCandidate make_candidate(const ProductSumInstance& inst, const Int& d) {
    FactorCandidate c;
    c.d = d;
    c.third = inst.product / d;
    c.pair_sum = inst.sum - c.third;
    c.disc = c.pair_sum * c.pair_sum - 4 * d;
    c.root = exact_square_root(c.disc);
    c.l = -c.pair_sum;
    return c;
}

}  // namespace

std::vector<FactorCandidate> factor_candidates(const ProductSumInstance& inst) {
    require_nonzero(inst);
    std::vector<FactorCandidate> out;
    for (const Int& d0 : divisors(factor(inst.product))) {
        out.push_back(make_candidate(inst, d0));
        out.push_back(make_candidate(inst, -d0));
    }
    return out;
}

std::vector<ProductSumTriple> enumerate_triples(const ProductSumInstance& inst) {
    require_nonzero(inst);
    std::vector<ProductSumTriple> out;
    for (const FactorCandidate& c : factor_candidates(inst)) {
        if (!c.root) continue;
        const Int& k = *c.root;
        if (is_odd(c.pair_sum - k)) continue;  // roots integral iff pair_sum == k (mod 2)
        Int a = (c.pair_sum + k) / 2;
        Int b = c.pair_sum - a;
        out.push_back({a, b, c.third});
        if (k != 0) out.push_back({b, a, c.third});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int count_triples_formula(const ProductSumInstance& inst) {
    require_nonzero(inst);
    Factorization f = factor(inst.product);
    Int indicator_sum = 0;
    Int zero_disc = 0;
    for_each_divisor(f, [&](const Int& d0) {
        Int third = inst.product / d0;
        Int pair = inst.sum - third;
        if (exact_square_root(pair * pair - 4 * d0)) indicator_sum += 1;
        if (pair * pair == 4 * d0) zero_disc += 1;
        // d = -d0: disc = pair^2 + 4*d0 > 0, never a zero discriminant
        Int pair_neg = inst.sum + third;
        if (exact_square_root(pair_neg * pair_neg + 4 * d0)) indicator_sum += 1;
    });
    return 2 * indicator_sum - zero_disc;
}

Int count_triples_delta_form(const ProductSumInstance& inst) {
    require_nonzero(inst);
    std::vector<Int> divs = divisors(factor(inst.product));
    Int count = 0;
    for (const Int& d0 : divs) {
        for (int sd : {1, -1}) {
            Int d = sd * d0;
            Int third = inst.product / d;
            for (const Int& e0 : divs) {
                if (e0 > d0 || !mpz_divisible_p(d0.get_mpz_t(), e0.get_mpz_t())) continue;
                for (int se : {1, -1}) {
                    Int delta = se * e0;
                    if (delta + d / delta + third == inst.sum) count += 1;
                }
            }
        }
    }
    return count;
}

Int brute_force_count(const ProductSumInstance& inst) {
    require_nonzero(inst);
    std::vector<Int> divs = divisors(factor(inst.product));
    Int count = 0;
    for (const Int& a0 : divs) {
        for (int sa : {1, -1}) {
            Int a = sa * a0;
            Int m = inst.product / a;
            Int m_abs = abs(m);
            for (const Int& b0 : divs) {
                if (b0 > m_abs || !mpz_divisible_p(m_abs.get_mpz_t(), b0.get_mpz_t())) continue;
                for (int sb : {1, -1}) {
                    Int b = sb * b0;
                    if (a + b + m / b == inst.sum) count += 1;
                }
            }
        }
    }
    return count;
}

Int count_triples_uv_form_literal(const ProductSumInstance& inst) {
    require_nonzero(inst);
    std::vector<Int> divs = divisors(factor(inst.product));
    Int count = 0;
    for (const Int& d0 : divs) {
        for (int sd : {1, -1}) {
            Int d = sd * d0;
            Int target = inst.product / d - inst.sum;  // u + v
            for (const Int& u0 : divs) {
                if (u0 > d0 || !mpz_divisible_p(d0.get_mpz_t(), u0.get_mpz_t())) continue;
                for (int su : {1, -1}) {
                    Int u = su * u0;
                    Int v = d / u;
                    if (u + v != target) continue;
                    // the bounds exactly as written: 0 < |u| <= d, 0 < |v| <= d
                    if (u0 <= d && abs(v) <= d) count += 1;
                }
            }
        }
    }
    return 3 * count;
}

}  // namespace cubes
