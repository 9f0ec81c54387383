#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "biham/error.hpp"
#include "biham/rational.hpp"
#include "biham/symbol.hpp"

namespace biham {

// Exponent vector over a fixed context.
struct Monomial {
    std::vector<unsigned> e;

    int total_degree() const {
        int d = 0;
        for (unsigned x : e) d += static_cast<int>(x);
        return d;
    }
    bool is_one() const {
        for (unsigned x : e)
            if (x) return false;
        return true;
    }
    unsigned deg(int sym) const { return e[static_cast<size_t>(sym)]; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }
    bool divides(const Monomial& b) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }
    // b / *this, assuming divisibility.
    Monomial quotient_of(const Monomial& b) const {
        Monomial r = b;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic, larger first (so map::begin() is the leading term).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

// Sparse multivariate polynomial over the rationals.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Poly constant(ContextPtr ctx, Rational c) {
        Poly p(std::move(ctx));
        if (c != 0) p.t_.emplace(p.unit_monomial(), std::move(c));
        return p;
    }
    static Poly symbol(ContextPtr ctx, int sym, unsigned power = 1) {
        Poly p(std::move(ctx));
        Monomial m = p.unit_monomial();
        m.e[static_cast<size_t>(sym)] = power;
        if (power == 0)
            p.t_.emplace(p.unit_monomial(), 1);
        else
            p.t_.emplace(std::move(m), 1);
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    Rational constant_value() const {
        if (t_.empty()) return Rational(0);
        if (!is_constant()) throw Error("polynomial is not constant");
        return t_.begin()->second;
    }
    bool is_monomial() const { return t_.size() == 1; }

    int total_degree() const {
        if (t_.empty()) return -1;
        return t_.begin()->first.total_degree();
    }
    int degree_in(int sym) const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.deg(sym)));
        return t_.empty() ? -1 : d;
    }
    bool depends_on(int sym) const {
        for (auto& [m, c] : t_)
            if (m.deg(sym) > 0) return true;
        return false;
    }

    const Monomial& leading_monomial() const {
        if (t_.empty()) throw Error("leading term of zero polynomial");
        return t_.begin()->first;
    }
    const Rational& leading_coefficient() const {
        if (t_.empty()) throw Error("leading term of zero polynomial");
        return t_.begin()->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.ctx_ ? a.ctx_ : b.ctx_);
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Poly operator*(const Poly& a, const Rational& c) {
        Poly r = a;
        if (c == 0) return Poly(a.ctx_);
        for (auto& [m, cc] : r.t_) cc *= c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

    Poly pow(unsigned n) const {
        Poly r = Poly::constant(ctx_, 1);
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(int sym) const {
        Poly r(ctx_);
        for (auto& [m, c] : t_) {
            unsigned k = m.deg(sym);
            if (k == 0) continue;
            Monomial mm = m;
            mm.e[static_cast<size_t>(sym)] = k - 1;
            r.add_term(mm, c * static_cast<long>(k));
        }
        return r;
    }

    // Coefficients as polynomials in the remaining symbols: result[d] is the
    // coefficient of sym^d.
    std::vector<Poly> coefficients_in(int sym) const {
        int d = std::max(degree_in(sym), 0);
        std::vector<Poly> out(static_cast<size_t>(d) + 1, Poly(ctx_));
        for (auto& [m, c] : t_) {
            unsigned k = m.deg(sym);
            Monomial mm = m;
            mm.e[static_cast<size_t>(sym)] = 0;
            out[k].add_term(mm, c);
        }
        return out;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : t_) {
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool coeff_shown = (a != 1) || m.is_one();
            if (coeff_shown) os << to_string(a);
            bool any = false;
            for (size_t i = 0; i < m.e.size(); ++i) {
                if (!m.e[i]) continue;
                if (coeff_shown || any) os << "*";
                os << ctx_->name(static_cast<int>(i));
                if (m.e[i] > 1) os << "^" << m.e[i];
                any = true;
            }
        }
        return os.str();
    }

private:
    Monomial unit_monomial() const { return Monomial{std::vector<unsigned>(static_cast<size_t>(ctx_->size()), 0u)}; }

    ContextPtr ctx_;
    TermMap t_;
};

// Exact division; nullopt when b does not divide a.
inline std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q(a.context() ? a.context() : b.context());
    Poly r = a;
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!lb.divides(lr)) return std::nullopt;
        Monomial qm = lb.quotient_of(lr);
        Rational qc = r.leading_coefficient() / cb;
        Poly t(q.context());
        t.add_term(qm, qc);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

namespace detail {

// Pseudo-remainder of a by b with respect to symbol `sym`
// (lc(b)^(da-db+1) * a = q*b + r with deg_sym r < deg_sym b).
inline Poly pseudo_rem(const Poly& a, const Poly& b, int sym) {
    int db = b.degree_in(sym);
    if (db < 0) throw DivisionByZero("pseudo remainder by zero");
    auto bc = b.coefficients_in(sym);
    Poly lcb = bc[static_cast<size_t>(db)];
    Poly r = a;
    Poly x = Poly::symbol(a.context(), sym);
    int dr = r.degree_in(sym);
    while (!r.is_zero() && dr >= db) {
        auto rc = r.coefficients_in(sym);
        Poly lcr = rc[static_cast<size_t>(dr)];
        r = r * lcb - lcr * x.pow(static_cast<unsigned>(dr - db)) * b;
        int nd = r.degree_in(sym);
        if (nd >= dr && !r.is_zero()) throw Error("pseudo_rem failed to reduce degree");
        dr = nd;
    }
    return r;
}

} // namespace detail

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly content_in(const Poly& p, int sym) {
    auto cs = p.coefficients_in(sym);
    Poly g(p.context());
    for (auto& c : cs) g = poly_gcd(g, c);
    return g;
}

// Normalize so the grlex-leading coefficient is 1.
inline Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

} // namespace detail

// GCD over Q[x1..xn], normalized with leading coefficient 1 (primitive PRS).
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return detail::monic(b);
    if (b.is_zero()) return detail::monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.context(), 1);

    ContextPtr ctx = a.context();
    // Main variable: one occurring in both if possible, else recurse through
    // the content of the side that owns it.
    int sym = -1;
    for (int i = 0; i < ctx->size(); ++i) {
        bool ia = a.depends_on(i), ib = b.depends_on(i);
        if (ia && ib) { sym = i; break; }
    }
    if (sym < 0) {
        for (int i = 0; i < ctx->size(); ++i) {
            if (a.depends_on(i)) return poly_gcd(detail::content_in(a, i), b);
            if (b.depends_on(i)) return poly_gcd(a, detail::content_in(b, i));
        }
        return Poly::constant(ctx, 1); // both constant (unreachable)
    }

    Poly ca = detail::content_in(a, sym);
    Poly cb = detail::content_in(b, sym);
    Poly pa = *divide_exact(a, ca);
    Poly pb = *divide_exact(b, cb);
    Poly cg = poly_gcd(ca, cb);

    if (pa.degree_in(sym) < pb.degree_in(sym)) std::swap(pa, pb);
    while (true) {
        Poly r = detail::pseudo_rem(pa, pb, sym);
        if (r.is_zero()) break;
        if (r.degree_in(sym) <= 0) return detail::monic(cg); // coprime in sym
        Poly cr = detail::content_in(r, sym);
        pa = pb;
        pb = *divide_exact(r, cr);
    }
    Poly cpb = detail::content_in(pb, sym);
    return detail::monic(cg * *divide_exact(pb, cpb));
}

} // namespace biham
