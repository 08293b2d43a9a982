#pragma once

// Univariate polynomials over Q and Sturm-sequence real root isolation.

#include "planecolor/exactnum.hpp"

#include <string>
#include <vector>

namespace planecolor {

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients in increasing degree.
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial derivative() const;
    Polynomial monic() const;

    Rational eval(const Rational& x) const;
    FieldElement eval(const FieldElement& x) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws DivisionByZero on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// Laplace expansion; fine for the small matrices used here.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Number of distinct real roots of the sequence's polynomial in (lo, hi].
int count_roots(const std::vector<Polynomial>& sturm, const Rational& lo, const Rational& hi);

/// A real root of a squarefree polynomial, the only one in (lo, hi].
struct IsolatedRoot {
    Polynomial poly;
    RationalInterval interval;

    /// Bisects until the interval is at most `width` wide.
    void refine(const Rational& width);
    double approx() const;
};

/// Distinct real roots of p in (lo, hi], in increasing order. p must be nonzero.
std::vector<IsolatedRoot> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Upper bound on the absolute value of every root of p.
Rational root_bound(const Polynomial& p);

bool same_root(IsolatedRoot a, IsolatedRoot b);
/// Sign of q at the root.
int sign_at(const Polynomial& q, IsolatedRoot root);
/// True iff the root equals the field element x.
bool root_equals(IsolatedRoot root, const FieldElement& x);

}  // namespace planecolor
