#pragma once

#include <mpfr.h>

#include <functional>
#include <optional>
#include <string>

#include "cubes/errors.hpp"
#include "cubes/int.hpp"

namespace cubes {

// [lo, hi] enclosure of a real, endpoints in MPFR with directed rounding at a
// fixed working precision. Comparisons are three-valued: decided or straddling.
// Used for every transcendental evaluation so near-equality decisions
// (Robin inequality, S-membership, refined abc bound) can never flip from
// rounding; callers escalate precision on straddle.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval of_int(const Int& v, mpfr_prec_t prec);
    static Interval of_rational(const mpq_class& q, mpfr_prec_t prec);
    static Interval of_long(long v, mpfr_prec_t prec);
    static Interval euler_gamma(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;
    Interval operator*(const Interval& rhs) const;
    Interval operator/(const Interval& rhs) const;  // divisor must not contain 0
    Interval neg() const;
    Interval log() const;   // requires lo > 0
    Interval exp() const;
    Interval sqrt() const;  // requires lo >= 0

    bool contains_zero() const;
    bool is_positive() const;

    // Decided order against exact values; nullopt while straddling.
    std::optional<bool> less_than(const Int& v) const;
    std::optional<bool> greater_than(const Int& v) const;
    std::optional<bool> less_than(const mpq_class& v) const;
    std::optional<bool> greater_than(const mpq_class& v) const;

    // Normalized scientific decimal ("-d.ddd...e<exp>") on which both endpoints
    // agree when rounded to `digits` significant digits; nullopt otherwise.
    std::optional<std::string> decimal(std::size_t digits) const;

    double mid_double() const;
    mpq_class mid_rational() const;

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

// A high-precision result with its guaranteed-digits decimal rendering and an
// exact-rational approximation good to the same digits.
struct PreciseValue {
    std::string decimal;
    mpq_class approx;
    double value = 0.0;
};

// Evaluate at doubling precision until `digits` significant digits are
// certified; throws PrecisionExhausted at the cap.
PreciseValue evaluate_to_digits(const std::function<Interval(mpfr_prec_t)>& eval,
                                std::size_t digits, mpfr_prec_t start = 128,
                                mpfr_prec_t cap = 1 << 16);

// Escalating decided comparison lhs < eval(prec).
bool decide_int_less(const Int& lhs, const std::function<Interval(mpfr_prec_t)>& eval,
                     mpfr_prec_t start = 128, mpfr_prec_t cap = 1 << 16);

// Escalating decided comparison eval(prec) vs an exact rational threshold.
bool decide_less_than_rational(const std::function<Interval(mpfr_prec_t)>& eval,
                               const mpq_class& threshold, mpfr_prec_t start = 128,
                               mpfr_prec_t cap = 1 << 16);

// Parse a plain decimal literal ("-1.25", "0.5", "3") into an exact rational.
mpq_class rational_from_decimal(const std::string& text);

}  // namespace cubes
