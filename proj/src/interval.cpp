#include "cubes/interval.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace cubes {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.prec_);
        mpfr_set_prec(hi_, other.prec_);
        prec_ = other.prec_;
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        prec_ = other.prec_;
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::of_int(const Int& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::of_rational(const mpq_class& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::of_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::euler_gamma(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_euler(r.lo_, MPFR_RNDD);
    mpfr_const_euler(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& rhs) const {
    Interval r(std::max(prec_, rhs.prec_));
    mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& rhs) const {
    Interval r(std::max(prec_, rhs.prec_));
    mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& rhs) const {
    Interval r(std::max(prec_, rhs.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo: min of the four corner products rounded down.
    mpfr_mul(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max of the four corner products rounded up.
    mpfr_mul(r.hi_, lo_, rhs.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& rhs) const {
    if (rhs.contains_zero()) throw DomainError("interval division by interval containing zero");
    Interval r(std::max(prec_, rhs.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, rhs.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, rhs.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, rhs.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, rhs.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, rhs.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::neg() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw DomainError("interval log requires a positive interval");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw DomainError("interval sqrt requires a nonnegative interval");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }

std::optional<bool> Interval::less_than(const Int& v) const {
    if (mpfr_cmp_z(hi_, v.get_mpz_t()) < 0) return true;
    if (mpfr_cmp_z(lo_, v.get_mpz_t()) >= 0) return false;
    return std::nullopt;
}

std::optional<bool> Interval::greater_than(const Int& v) const {
    if (mpfr_cmp_z(lo_, v.get_mpz_t()) > 0) return true;
    if (mpfr_cmp_z(hi_, v.get_mpz_t()) <= 0) return false;
    return std::nullopt;
}

std::optional<bool> Interval::less_than(const mpq_class& v) const {
    if (mpfr_cmp_q(hi_, v.get_mpq_t()) < 0) return true;
    if (mpfr_cmp_q(lo_, v.get_mpq_t()) >= 0) return false;
    return std::nullopt;
}

std::optional<bool> Interval::greater_than(const mpq_class& v) const {
    if (mpfr_cmp_q(lo_, v.get_mpq_t()) > 0) return true;
    if (mpfr_cmp_q(hi_, v.get_mpq_t()) <= 0) return false;
    return std::nullopt;
}

namespace {

// Rounding to `digits` is monotone, so identical renderings of both endpoints
// certify the rendering of every value in between.
std::optional<std::string> render(mpfr_srcptr x, std::size_t digits, mpfr_exp_t* exp_out,
                                  std::string* digits_out) {
    char* s = nullptr;
    mpfr_exp_t e = 0;
    s = mpfr_get_str(nullptr, &e, 10, digits, x, MPFR_RNDN);
    if (!s) return std::nullopt;
    std::string out(s);
    mpfr_free_str(s);
    *exp_out = e;
    *digits_out = out;
    return out;
}

std::string compose_scientific(const std::string& raw, mpfr_exp_t exp) {
    // raw = optional '-' + digit string, value = 0.raw * 10^exp
    std::string sign;
    std::string d = raw;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d = d.substr(1);
    }
    if (d.empty()) d = "0";
    std::string mant = d.substr(0, 1) + "." + (d.size() > 1 ? d.substr(1) : "0");
    long e10 = static_cast<long>(exp) - 1;
    return sign + mant + "e" + std::to_string(e10);
}

}  // namespace

std::optional<std::string> Interval::decimal(std::size_t digits) const {
    digits = std::max<std::size_t>(digits, 2);  // mpfr_get_str wants >= 2
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return std::string("0");
    if (mpfr_sgn(lo_) != mpfr_sgn(hi_)) return std::nullopt;
    mpfr_exp_t el = 0, eh = 0;
    std::string dl, dh;
    if (!render(lo_, digits, &el, &dl)) return std::nullopt;
    if (!render(hi_, digits, &eh, &dh)) return std::nullopt;
    if (el != eh || dl != dh) return std::nullopt;
    return compose_scientific(dl, el);
}

double Interval::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

mpq_class Interval::mid_rational() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    Int z;
    mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), m);
    mpfr_clear(m);
    mpq_class q(z);
    if (e >= 0) {
        mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    q.canonicalize();
    return q;
}

PreciseValue evaluate_to_digits(const std::function<Interval(mpfr_prec_t)>& eval,
                                std::size_t digits, mpfr_prec_t start, mpfr_prec_t cap) {
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        Interval iv = eval(p);
        auto dec = iv.decimal(digits);
        if (dec) {
            PreciseValue v;
            v.decimal = *dec;
            v.approx = iv.mid_rational();
            v.value = iv.mid_double();
            return v;
        }
    }
    throw PrecisionExhausted("evaluate_to_digits: precision cap reached");
}

bool decide_int_less(const Int& lhs, const std::function<Interval(mpfr_prec_t)>& eval,
                     mpfr_prec_t start, mpfr_prec_t cap) {
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        Interval iv = eval(p);
        auto g = iv.greater_than(lhs);
        if (g) return *g;
    }
    throw PrecisionExhausted("decide_int_less: precision cap reached");
}

bool decide_less_than_rational(const std::function<Interval(mpfr_prec_t)>& eval,
                               const mpq_class& threshold, mpfr_prec_t start, mpfr_prec_t cap) {
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        Interval iv = eval(p);
        auto l = iv.less_than(threshold);
        if (l) return *l;
    }
    throw PrecisionExhausted("decide_less_than_rational: precision cap reached");
}

mpq_class rational_from_decimal(const std::string& text) {
    std::string s = text;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw DomainError("bad decimal literal: " + text);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i];
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw DomainError("bad decimal literal: " + text);
        }
    }
    if (!seen_digit) throw DomainError("bad decimal literal: " + text);
    Int mantissa;  // explicit base 10: leading zeros must not read as octal
    mpz_set_str(mantissa.get_mpz_t(), digits.c_str(), 10);
    mpq_class q(mantissa);
    for (long k = 0; k < frac_digits; ++k) q /= 10;
    if (neg) q = -q;
    q.canonicalize();
    return q;
}

}  // namespace cubes
