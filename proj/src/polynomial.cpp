#include "planecolor/polynomial.hpp"

#include <sstream>

namespace planecolor {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }
Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    Rational lead = leading();
    for (auto& c : r.c_) c /= lead;
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    FieldElement acc = x.tower()->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + x.tower()->constant(*it);
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rational mag = abs(c);
        if (i == 0 || mag != 1) out << mag.get_str() << (i > 0 ? "*" : "");
        if (i >= 1) out << var;
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(std::max(0, a.degree() - b.degree() + 1));
    const auto& bc = b.coeffs();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        Rational f = rem[i + b.degree()] / b.leading();
        quo[i] = f;
        if (f == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= f * bc[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(1);
    if (n == 1) return m[0][0];
    Polynomial acc;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * determinant(minor);
        acc = col % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

namespace {

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& q : seq) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

void isolate(const std::vector<Polynomial>& seq, const Polynomial& p, Rational lo, Rational hi,
             std::vector<IsolatedRoot>& out) {
    int n = count_roots(seq, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({p, {lo, hi}});
        return;
    }
    Rational mid = (lo + hi) / 2;
    isolate(seq, p, lo, mid, out);
    isolate(seq, p, mid, hi, out);
}

}  // namespace

int count_roots(const std::vector<Polynomial>& sturm, const Rational& lo, const Rational& hi) {
    if (sturm.empty() || lo >= hi) return 0;
    return sign_changes(sturm, lo) - sign_changes(sturm, hi);
}

void IsolatedRoot::refine(const Rational& width) {
    int s_hi = sgn(poly.eval(interval.hi));
    if (s_hi == 0) {
        interval.lo = interval.hi;
        return;
    }
    while (interval.width() > width) {
        Rational mid = (interval.lo + interval.hi) / 2;
        int s = sgn(poly.eval(mid));
        if (s == 0) {
            interval = {mid, mid};
            return;
        }
        if (s == s_hi) interval.hi = mid;
        else interval.lo = mid;
    }
}

double IsolatedRoot::approx() const { return Rational((interval.lo + interval.hi) / 2).get_d(); }

Rational root_bound(const Polynomial& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
    return m + 1;
}

std::vector<IsolatedRoot> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw ExactError("root isolation of the zero polynomial");
    Polynomial q = squarefree_part(p);
    std::vector<IsolatedRoot> out;
    if (q.degree() < 1) return out;
    Rational bound = root_bound(q);
    Rational a = std::max(lo, Rational(-bound)), b = std::min(hi, bound);
    isolate(sturm_sequence(q), q, a, b, out);
    return out;
}

bool same_root(IsolatedRoot a, IsolatedRoot b) {
    Polynomial g = gcd(a.poly, b.poly);
    if (g.degree() < 1) return false;
    Rational lo = std::max(a.interval.lo, b.interval.lo), hi = std::min(a.interval.hi, b.interval.hi);
    if (a.interval.lo == a.interval.hi || b.interval.lo == b.interval.hi) {
        // A degenerate interval is the root itself.
        const auto& point = a.interval.lo == a.interval.hi ? a : b;
        const auto& other = a.interval.lo == a.interval.hi ? b : a;
        Rational x = point.interval.lo;
        bool inside = other.interval.lo == other.interval.hi ? x == other.interval.lo
                                                             : (other.interval.lo < x && x <= other.interval.hi);
        return inside && other.poly.eval(x) == 0;
    }
    if (lo >= hi) return false;
    // Each interval holds a single root of its polynomial; both are roots of g.
    return count_roots(sturm_sequence(g), lo, hi) > 0 && count_roots(sturm_sequence(a.poly), lo, hi) == 1 &&
           count_roots(sturm_sequence(b.poly), lo, hi) == 1;
}

int sign_at(const Polynomial& q, IsolatedRoot root) {
    if (q.is_zero()) return 0;
    if (root.interval.lo == root.interval.hi) return sgn(q.eval(root.interval.lo));
    Polynomial g = gcd(root.poly, q);
    if (g.degree() >= 1 && count_roots(sturm_sequence(g), root.interval.lo, root.interval.hi) > 0) return 0;
    auto qs = sturm_sequence(squarefree_part(q));
    while (count_roots(qs, root.interval.lo, root.interval.hi) > 0 || q.eval(root.interval.lo) == 0) {
        root.refine(root.interval.width() / 2);
        if (root.interval.lo == root.interval.hi) return sgn(q.eval(root.interval.lo));
    }
    return sgn(q.eval(root.interval.hi));
}

bool root_equals(IsolatedRoot root, const FieldElement& x) {
    if (!root.poly.eval(x).is_zero()) return false;
    if (root.interval.lo == root.interval.hi) return x == x.tower()->constant(root.interval.lo);
    // x is a root of poly; it is this root iff it lies in (lo, hi].
    return sign(x - x.tower()->constant(root.interval.lo)) > 0 && sign(x - x.tower()->constant(root.interval.hi)) <= 0;
}

}  // namespace planecolor
