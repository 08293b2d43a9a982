#include "planecolor/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace planecolor {

namespace {

using Vec = std::vector<Rational>;

bool all_zero(const Rational* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(a[i]) != 0) return false;
    return true;
}

// out = a * b over the first k levels of `tower`. out must not alias a or b.
void mul_rec(const Tower& tower, const Rational* a, const Rational* b, Rational* out, std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    if (k == 0) {
        out[0] = a[0] * b[0];
        return;
    }
    const std::size_t h = n / 2;
    const bool a1z = all_zero(a + h, h);
    const bool b1z = all_zero(b + h, h);
    if (a1z && b1z) {
        mul_rec(tower, a, b, out, k - 1);
        for (std::size_t i = h; i < n; ++i) out[i] = 0;
        return;
    }
    if (a1z) {
        mul_rec(tower, a, b, out, k - 1);
        mul_rec(tower, a, b + h, out + h, k - 1);
        return;
    }
    if (b1z) {
        mul_rec(tower, a, b, out, k - 1);
        mul_rec(tower, a + h, b, out + h, k - 1);
        return;
    }
    // (a0 + a1 g)(b0 + b1 g) = a0 b0 + a1 b1 g^2 + (a0 b1 + a1 b0) g
    Vec t(h), u(h);
    mul_rec(tower, a, b, out, k - 1);
    mul_rec(tower, a + h, b + h, t.data(), k - 1);
    mul_rec(tower, t.data(), tower.square_coeffs(k - 1).data(), u.data(), k - 1);
    for (std::size_t i = 0; i < h; ++i) out[i] += u[i];
    mul_rec(tower, a, b + h, out + h, k - 1);
    mul_rec(tower, a + h, b, t.data(), k - 1);
    for (std::size_t i = 0; i < h; ++i) out[h + i] += t[i];
}

Vec mul_vec(const Tower& tower, const Vec& a, const Vec& b, std::size_t k) {
    Vec out(std::size_t{1} << k);
    mul_rec(tower, a.data(), b.data(), out.data(), k);
    return out;
}

// Inverse by conjugating away the top generator, then recursing on the norm.
Vec inv_vec(const Tower& tower, const Vec& a, std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    if (k == 0) {
        if (sgn(a[0]) == 0) throw DivisionByZero();
        return Vec{Rational(1) / a[0]};
    }
    const std::size_t h = n / 2;
    Vec a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
    Vec out(n);
    if (all_zero(a1.data(), h)) {
        Vec r = inv_vec(tower, a0, k - 1);
        std::copy(r.begin(), r.end(), out.begin());
        return out;
    }
    Vec a0sq = mul_vec(tower, a0, a0, k - 1);
    Vec a1sq = mul_vec(tower, a1, a1, k - 1);
    Vec a1sq_s = mul_vec(tower, a1sq, tower.square_coeffs(k - 1), k - 1);
    for (std::size_t i = 0; i < h; ++i) a0sq[i] -= a1sq_s[i];
    Vec ninv = inv_vec(tower, a0sq, k - 1);
    Vec lo = mul_vec(tower, a0, ninv, k - 1);
    Vec hi = mul_vec(tower, a1, ninv, k - 1);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = lo[i];
        out[h + i] = -hi[i];
    }
    return out;
}

// Some square root of x over the first k levels (either sign), if any.
std::optional<Vec> sqrt_vec(const Tower& tower, const Vec& x, std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    if (k == 0) {
        auto r = rational_sqrt(x[0]);
        if (!r) return std::nullopt;
        return Vec{*r};
    }
    const std::size_t h = n / 2;
    const Vec& s = tower.square_coeffs(k - 1);
    Vec x0(x.begin(), x.begin() + h), x1(x.begin() + h, x.end());
    Vec out(n);
    if (all_zero(x1.data(), h)) {
        if (auto r = sqrt_vec(tower, x0, k - 1)) {
            std::copy(r->begin(), r->end(), out.begin());
            return out;
        }
        // sqrt(x0) = c g  <=>  c^2 = x0 / s
        Vec q = mul_vec(tower, x0, inv_vec(tower, s, k - 1), k - 1);
        if (auto r = sqrt_vec(tower, q, k - 1)) {
            std::copy(r->begin(), r->end(), out.begin() + h);
            return out;
        }
        return std::nullopt;
    }
    // (a + b g)^2 = x0 + x1 g  <=>  a^2 + b^2 s = x0, 2ab = x1,
    // hence a^2 - b^2 s = +-sqrt(x0^2 - x1^2 s).
    Vec norm = mul_vec(tower, x0, x0, k - 1);
    Vec t = mul_vec(tower, mul_vec(tower, x1, x1, k - 1), s, k - 1);
    for (std::size_t i = 0; i < h; ++i) norm[i] -= t[i];
    auto nroot = sqrt_vec(tower, norm, k - 1);
    if (!nroot) return std::nullopt;
    for (int branch : {1, -1}) {
        Vec a2(h);
        for (std::size_t i = 0; i < h; ++i) a2[i] = (x0[i] + branch * (*nroot)[i]) / 2;
        auto a = sqrt_vec(tower, a2, k - 1);
        if (!a || all_zero(a->data(), h)) continue;
        Vec twice_a = *a;
        for (auto& c : twice_a) c *= 2;
        Vec b = mul_vec(tower, x1, inv_vec(tower, twice_a, k - 1), k - 1);
        std::copy(a->begin(), a->end(), out.begin());
        std::copy(b.begin(), b.end(), out.begin() + h);
        return out;
    }
    return std::nullopt;
}

RationalInterval eval_interval(const Vec& coeffs, const std::vector<RationalInterval>& gens) {
    RationalInterval acc{Rational(0), Rational(0)};
    for (std::size_t mask = 0; mask < coeffs.size(); ++mask) {
        const Rational& c = coeffs[mask];
        if (sgn(c) == 0) continue;
        Rational plo(1), phi(1);
        for (std::size_t bit = 0; (std::size_t{1} << bit) <= mask; ++bit) {
            if (mask & (std::size_t{1} << bit)) {
                plo *= gens[bit].lo;
                phi *= gens[bit].hi;
            }
        }
        if (sgn(c) > 0) {
            acc.lo += c * plo;
            acc.hi += c * phi;
        } else {
            acc.lo += c * phi;
            acc.hi += c * plo;
        }
    }
    return acc;
}

RationalInterval eval_at(const FieldElement& x, unsigned bits) {
    return eval_interval(x.coeffs(), x.tower()->generator_enclosures(bits));
}

bool valid_name(std::string_view name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char ch : name)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return name != "sqrt";
}

class ExpressionParser {
public:
    ExpressionParser(TowerPtr tower, std::string_view text) : tower_(std::move(tower)), text_(text) {}

    FieldElement run() {
        FieldElement value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "cannot parse '" << text_ << "' at offset " << pos_ << ": " << what;
        throw ParseError(os.str());
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElement expr() {
        FieldElement value = term();
        for (;;) {
            if (accept('+'))
                value += term();
            else if (accept('-'))
                value -= term();
            else
                return value;
        }
    }

    FieldElement term() {
        FieldElement value = factor();
        for (;;) {
            if (accept('*'))
                value *= factor();
            else if (accept('/'))
                value /= factor();
            else
                return value;
        }
    }

    FieldElement factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        FieldElement base = primary();
        if (accept('^')) {
            bool negative = accept('-');
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            FieldElement result = tower_->one();
            for (unsigned long i = 0; i < e; ++i) result *= base;
            return negative ? result.inverse() : result;
        }
        return base;
    }

    FieldElement primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            FieldElement value = expr();
            if (!accept(')')) fail("expected ')'");
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Integer n(std::string(text_.substr(start, pos_ - start)));
            return tower_->constant(Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view ident = text_.substr(start, pos_ - start);
            if (ident == "sqrt") {
                if (!accept('(')) fail("expected '(' after sqrt");
                FieldElement arg = expr();
                if (!accept(')')) fail("expected ')'");
                if (sign(arg) < 0) fail("sqrt of a negative value");
                auto root = sqrt_in_field(arg);
                if (!root) fail("square root is not in the field");
                return *root;
            }
            auto level = tower_->find(ident);
            if (!level) fail("unknown generator '" + std::string(ident) + "'");
            return tower_->generator(*level);
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    TowerPtr tower_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Integer isqrt_floor(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer isqrt_ceil(const Integer& n) {
    Integer r = isqrt_floor(n);
    if (r * r != n) ++r;
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    Rational r(isqrt_floor(num), isqrt_floor(den));
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- Tower

TowerPtr Tower::rationals() {
    static const TowerPtr q = TowerPtr(new Tower());
    return q;
}

TowerPtr Tower::build(const std::vector<GeneratorDef>& defs) {
    TowerPtr current = rationals();
    for (const auto& def : defs) current = current->extend(def.name, current->parse(def.square));
    return current;
}

TowerPtr Tower::standard() {
    static const TowerPtr t = build({{"s3", "3"}, {"q3", "s3"}, {"s2", "2"}, {"s5", "5"}, {"s7", "7"}, {"s11", "11"}});
    return t;
}

TowerPtr Tower::extend(std::string name, const FieldElement& square) const {
    if (!valid_name(name)) throw TowerError("invalid generator name '" + name + "'");
    if (find(name)) throw TowerError("duplicate generator name '" + name + "'");
    if (!square.tower()->same_as(*this)) throw TowerMismatch();
    if (sign(square) <= 0) throw TowerError("generator '" + name + "' must be the root of a positive element");
    if (sqrt_in_field(square))
        throw TowerError("generator '" + name + "' is already in the field: " + square.to_string() + " is a square");
    auto next = std::shared_ptr<Tower>(new Tower());
    next->gens_ = gens_;
    next->gens_.push_back(Generator{std::move(name), square.coeffs()});
    return next;
}

std::optional<std::size_t> Tower::find(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

FieldElement Tower::generator(std::size_t level) const {
    std::vector<Rational> c(dimension());
    c.at(std::size_t{1} << level) = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Tower::square_of(std::size_t level) const {
    std::vector<Rational> c(dimension());
    const auto& sq = gens_.at(level).square;
    std::copy(sq.begin(), sq.end(), c.begin());
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Tower::constant(const Rational& q) const { return FieldElement(shared_from_this(), q); }
FieldElement Tower::zero() const { return constant(Rational(0)); }
FieldElement Tower::one() const { return constant(Rational(1)); }

FieldElement Tower::parse(std::string_view text) const {
    return ExpressionParser(shared_from_this(), text).run();
}

std::vector<Tower::GeneratorDef> Tower::definitions() const {
    std::vector<GeneratorDef> defs;
    TowerPtr prefix = rationals();
    for (const auto& g : gens_) {
        defs.push_back({g.name, FieldElement(prefix, g.square).to_string()});
        auto next = std::shared_ptr<Tower>(new Tower());
        next->gens_ = prefix->gens_;
        next->gens_.push_back(g);
        prefix = next;
    }
    return defs;
}

bool Tower::same_as(const Tower& other) const {
    return this == &other || (gens_.size() == other.gens_.size() && is_prefix_of(other));
}

bool Tower::is_prefix_of(const Tower& other) const {
    if (this == &other) return true;
    if (gens_.size() > other.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != other.gens_[i].name || gens_[i].square != other.gens_[i].square) return false;
    return true;
}

std::vector<RationalInterval> Tower::generator_enclosures(unsigned bits) const {
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = enclosure_cache_.find(bits); it != enclosure_cache_.end()) return it->second;
    }
    std::vector<RationalInterval> enc;
    Integer scale = Integer(1) << bits;
    Integer scale2 = scale * scale;
    for (const auto& g : gens_) {
        RationalInterval sq = eval_interval(g.square, enc);
        if (sgn(sq.lo) < 0) sq.lo = 0;
        Rational lo_scaled = sq.lo * scale2;
        Rational hi_scaled = sq.hi * scale2;
        Integer lo_floor, hi_ceil;
        mpz_fdiv_q(lo_floor.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
        mpz_cdiv_q(hi_ceil.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
        Rational lo(isqrt_floor(lo_floor), scale);
        Rational hi(isqrt_ceil(hi_ceil), scale);
        lo.canonicalize();
        hi.canonicalize();
        enc.push_back({lo, hi});
    }
    std::lock_guard lock(cache_mutex_);
    enclosure_cache_.emplace(bits, enc);
    return enc;
}

// --------------------------------------------------------- FieldElement

FieldElement::FieldElement(TowerPtr tower, const Rational& q)
    : tower_(std::move(tower)), coeffs_(tower_->dimension()) {
    coeffs_[0] = q;
}

FieldElement::FieldElement(TowerPtr tower, std::vector<Rational> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != tower_->dimension()) throw TowerError("coefficient count does not match tower dimension");
}

bool FieldElement::is_zero() const { return all_zero(coeffs_.data(), coeffs_.size()); }

bool FieldElement::is_rational() const { return all_zero(coeffs_.data() + 1, coeffs_.size() - 1); }

void FieldElement::check_same_tower(const FieldElement& other) const {
    if (tower_ != other.tower_ && !tower_->same_as(*other.tower_)) throw TowerMismatch();
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_tower(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_tower(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_tower(rhs);
    coeffs_ = mul_vec(*tower_, coeffs_, rhs.coeffs_, tower_->levels());
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_tower(rhs);
    return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
    return FieldElement(tower_, inv_vec(*tower_, coeffs_, tower_->levels()));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check_same_tower(b);
    return a.coeffs_ == b.coeffs_;
}

FieldElement FieldElement::lift(const TowerPtr& target) const {
    if (!tower_->is_prefix_of(*target)) throw TowerMismatch();
    std::vector<Rational> c(target->dimension());
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin());
    return FieldElement(target, std::move(c));
}

std::string FieldElement::to_string() const {
    std::string out;
    for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
        if (sgn(coeffs_[mask]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[mask].get_str() + ")*";
        if (mask == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (std::size_t bit = 0; bit < tower_->levels(); ++bit) {
            if (!(mask & (std::size_t{1} << bit))) continue;
            if (!first) out += "*";
            out += tower_->name(bit);
            first = false;
        }
    }
    return out.empty() ? "(0)*1" : out;
}

// ----------------------------------------------------------- predicates

int sign(const FieldElement& x) {
    if (x.is_rational()) return sgn(x.rational_part());
    if (x.is_zero()) return 0;
    for (unsigned bits = 64;; bits *= 2) {
        RationalInterval iv = eval_at(x, bits);
        if (sgn(iv.lo) > 0) return 1;
        if (sgn(iv.hi) < 0) return -1;
    }
}

int compare(const FieldElement& a, const FieldElement& b) { return sign(a - b); }

std::optional<FieldElement> sqrt_in_field(const FieldElement& x) {
    const int s = sign(x);
    if (s < 0) throw NegativeInput();
    if (s == 0) return x;
    auto root = sqrt_vec(*x.tower(), x.coeffs(), x.tower()->levels());
    if (!root) return std::nullopt;
    FieldElement r(x.tower(), std::move(*root));
    if (sign(r) < 0) r = -r;
    return r;
}

RationalInterval to_interval(const FieldElement& x, const Rational& width) {
    if (sgn(width) <= 0) throw ExactError("interval width must be positive");
    if (x.is_rational()) return {x.rational_part(), x.rational_part()};
    for (unsigned bits = 64;; bits *= 2) {
        RationalInterval iv = eval_at(x, bits);
        if (iv.width() <= width) return iv;
    }
}

double to_double(const FieldElement& x) {
    RationalInterval iv = to_interval(x, Rational(1, Integer(1) << 80));
    Rational mid = (iv.lo + iv.hi) / 2;
    return mid.get_d();
}

}  // namespace planecolor
