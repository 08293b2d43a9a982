#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact arithmetic in towers of real quadratic extensions of Q.
 *
 * A Tower Q = K0 < K1 < ... < Kn adjoins one generator per level, each the
 * positive square root of an element of the previous field that is not
 * already a square there. Elements are stored as rational coefficient
 * vectors over the 2^n products of generators. Bit i of a coefficient index
 * says whether generator i appears in the monomial, so the low half of a
 * vector is the part over the previous field and the high half is the part
 * multiplied by the top generator.
 *
 * Zero testing is a coefficient check. Sign is decided by evaluating the
 * element on dyadic rational enclosures of the generators, doubling the
 * precision until the enclosure excludes zero.
 */

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace planecolor {

using Integer = mpz_class;
using Rational = mpq_class;

class ExactError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TowerMismatch : public ExactError {
public:
    TowerMismatch() : ExactError("operands live in different towers") {}
};

class DivisionByZero : public ExactError {
public:
    DivisionByZero() : ExactError("division by zero") {}
};

class NegativeInput : public ExactError {
public:
    NegativeInput() : ExactError("square root of a negative element") {}
};

class TowerError : public ExactError {
public:
    using ExactError::ExactError;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed rational interval [lo, hi].
struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool excludes_zero() const { return lo > 0 || hi < 0; }
};

class FieldElement;
class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Tower : public std::enable_shared_from_this<Tower> {
public:
    struct GeneratorDef {
        std::string name;
        std::string square;  // expression over the earlier generators
    };

    /// The field of rationals (no generators).
    static TowerPtr rationals();

    /// Parses each definition's square over the generators before it.
    static TowerPtr build(const std::vector<GeneratorDef>& defs);

    /// s3, q3 (q3^2 = s3), s2, s5, s7, s11: 64-dimensional.
    static TowerPtr standard();

    /// Adjoins sqrt(square). Rejects non-positive squares, squares that
    /// already have a root in this field, and duplicate or malformed names.
    TowerPtr extend(std::string name, const FieldElement& square) const;

    std::size_t levels() const { return gens_.size(); }
    std::size_t dimension() const { return std::size_t{1} << gens_.size(); }
    const std::string& name(std::size_t level) const { return gens_.at(level).name; }
    std::optional<std::size_t> find(std::string_view name) const;

    FieldElement generator(std::size_t level) const;
    FieldElement square_of(std::size_t level) const;
    FieldElement constant(const Rational& q) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// Parses an expression such as "(1/4)*(q3*2*s2 + 2*s3 + 2)".
    FieldElement parse(std::string_view text) const;

    /// Generator definitions in the textual form accepted by build().
    std::vector<GeneratorDef> definitions() const;

    bool same_as(const Tower& other) const;
    bool is_prefix_of(const Tower& other) const;

    /// Square coefficients of generator `level`, over the first `level` generators.
    const std::vector<Rational>& square_coeffs(std::size_t level) const { return gens_.at(level).square; }

    /// Dyadic enclosures of every generator at the given precision in bits.
    std::vector<RationalInterval> generator_enclosures(unsigned bits) const;

private:
    struct Generator {
        std::string name;
        std::vector<Rational> square;
    };

    Tower() = default;

    std::vector<Generator> gens_;
    mutable std::mutex cache_mutex_;
    mutable std::map<unsigned, std::vector<RationalInterval>> enclosure_cache_;
};

class FieldElement {
public:
    FieldElement() : FieldElement(Tower::rationals(), Rational(0)) {}
    FieldElement(TowerPtr tower, const Rational& q);
    FieldElement(TowerPtr tower, std::vector<Rational> coeffs);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coefficient; meaningful as the value when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    FieldElement& operator*=(const Rational& q);
    friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
    friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }

    FieldElement inverse() const;

    /// Exact coefficient comparison. Throws TowerMismatch across towers.
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Re-expresses the element over a tower this one is a prefix of.
    FieldElement lift(const TowerPtr& target) const;

    std::string to_string() const;

private:
    void check_same_tower(const FieldElement& other) const;

    TowerPtr tower_;
    std::vector<Rational> coeffs_;
};

/// -1, 0 or +1.
int sign(const FieldElement& x);
int compare(const FieldElement& a, const FieldElement& b);

/// Nonnegative square root inside x's tower, or nullopt if there is none.
std::optional<FieldElement> sqrt_in_field(const FieldElement& x);

/// Rational enclosure of x of width at most `width` (> 0).
RationalInterval to_interval(const FieldElement& x, const Rational& width);

double to_double(const FieldElement& x);

/// Floor and ceiling square roots of a nonnegative integer.
Integer isqrt_floor(const Integer& n);
Integer isqrt_ceil(const Integer& n);

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace planecolor
