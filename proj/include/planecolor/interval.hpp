#pragma once

// Closed intervals with MPFR endpoints and outward rounding.

#include "planecolor/exactnum.hpp"

#include <mpfr.h>

#include <string>

namespace planecolor {

class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 256);
    Interval(const Rational& q, mpfr_prec_t prec);
    Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    static Interval pi(mpfr_prec_t prec);
    /// Enclosure of an exact field element.
    static Interval of(const FieldElement& x, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    double lo_d() const;
    double hi_d() const;
    double mid_d() const;
    /// Upper bound on hi - lo.
    double width_d() const;
    bool contains_zero() const;
    bool contains(const Interval& x) const;
    bool positive() const;
    bool negative() const;
    /// Upper bound on hi - lo as an MPFR comparison against a double.
    bool width_at_most(double w) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;
    friend Interval operator*(const Interval& a, long k);

    /// Square root of the nonnegative part.
    Interval sqrt() const;
    /// arccos on the part inside [-1, 1].
    Interval acos() const;
    Interval cos() const;
    Interval sin() const;
    /// Smallest interval containing both.
    Interval hull(const Interval& other) const;

    std::string to_string(int digits = 20) const;

private:
    Interval trig(bool is_sin) const;

    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace planecolor
