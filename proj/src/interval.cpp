#include "planecolor/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace planecolor {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) : Interval(q, q, prec) {}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) : Interval(prec) {
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.prec_) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.prec_) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
    if (prec_ != other.prec_) {
        mpfr_set_prec(lo_, other.prec_);
        mpfr_set_prec(hi_, other.prec_);
        prec_ = other.prec_;
    }
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::of(const FieldElement& x, mpfr_prec_t prec) {
    Rational width;
    mpz_class den = 1;
    den <<= static_cast<unsigned long>(prec);
    width = Rational(1, 1);
    width /= den;
    RationalInterval iv = to_interval(x, width);
    return Interval(iv.lo, iv.hi, prec);
}

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_d() const { return (lo_d() + hi_d()) / 2; }

double Interval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::width_at_most(double w) const {
    mpfr_t d;
    mpfr_init2(d, prec_);
    mpfr_sub(d, hi_, lo_, MPFR_RNDU);
    bool ok = mpfr_cmp_d(d, w) <= 0;
    mpfr_clear(d);
    return ok;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::contains(const Interval& x) const {
    return mpfr_lessequal_p(lo_, x.lo_) && mpfr_lessequal_p(x.hi_, hi_);
}
bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::negative() const { return mpfr_sgn(hi_) < 0; }

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.prec_, b.prec_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    const mpfr_t* xs[2] = {&a.lo_, &a.hi_};
    const mpfr_t* ys[2] = {&b.lo_, &b.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval operator*(const Interval& a, long k) {
    Interval r(a.prec_);
    if (k >= 0) {
        mpfr_mul_si(r.lo_, a.lo_, k, MPFR_RNDD);
        mpfr_mul_si(r.hi_, a.hi_, k, MPFR_RNDU);
    } else {
        mpfr_mul_si(r.lo_, a.hi_, k, MPFR_RNDD);
        mpfr_mul_si(r.hi_, a.lo_, k, MPFR_RNDU);
    }
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DivisionByZero();
    Interval inv(b.prec_);
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
}

Interval Interval::sqrt() const {
    Interval r(prec_);
    if (mpfr_sgn(hi_) < 0) throw NegativeInput();
    if (mpfr_sgn(lo_) <= 0) mpfr_set_zero(r.lo_, 1);
    else mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::acos() const {
    Interval r(prec_);
    mpfr_t x;
    mpfr_init2(x, prec_);
    // Decreasing on [-1, 1]: lo from hi, hi from lo.
    mpfr_set(x, hi_, MPFR_RNDU);
    if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDU);
    if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDU);
    mpfr_acos(r.lo_, x, MPFR_RNDD);
    mpfr_set(x, lo_, MPFR_RNDD);
    if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDD);
    if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDD);
    mpfr_acos(r.hi_, x, MPFR_RNDU);
    mpfr_clear(x);
    return r;
}

// Enclosure of sin or cos over [lo, hi] from the endpoint values and the
// extrema (multiples of pi/2) inside the interval.
Interval Interval::trig(bool is_sin) const {
    if (!(width_d() < 1.0)) return Interval(Rational(-1), Rational(1), prec_);
    Interval r(prec_);
    auto f = [&](mpfr_t out, const mpfr_t x, mpfr_rnd_t rnd) {
        if (is_sin) mpfr_sin(out, x, rnd);
        else mpfr_cos(out, x, rnd);
    };
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    f(a, lo_, MPFR_RNDD);
    f(b, hi_, MPFR_RNDD);
    mpfr_min(r.lo_, a, b, MPFR_RNDD);
    f(a, lo_, MPFR_RNDU);
    f(b, hi_, MPFR_RNDU);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
    // Extrema located with doubles, widened so boundary cases include them.
    double lo = lo_d() - 1e-9, hi = hi_d() + 1e-9;
    double offset = is_sin ? M_PI / 2 : 0.0;
    for (long k = static_cast<long>(std::floor((lo - offset) / M_PI)); k * M_PI + offset <= hi; ++k) {
        if (k * M_PI + offset < lo) continue;
        if (k % 2 == 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        else mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
    return r;
}

Interval Interval::cos() const { return trig(false); }
Interval Interval::sin() const { return trig(true); }

Interval Interval::hull(const Interval& other) const {
    Interval r(std::max(prec_, other.prec_));
    mpfr_min(r.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, other.hi_, MPFR_RNDU);
    return r;
}

std::string Interval::to_string(int digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "[%.*RDe, %.*RUe]", digits, lo_, digits, hi_);
    return buf;
}

}  // namespace planecolor
