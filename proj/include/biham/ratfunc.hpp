#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biham/error.hpp"
#include "biham/polynomial.hpp"

namespace biham {

// Rational function in reduced canonical form: gcd(num, den) = 1 and the
// denominator has grlex-leading coefficient 1. Equality is representation
// identity.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Poly num)
        : num_(std::move(num)), den_(Poly::constant(num_.context(), 1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce_(); }

    static RatFunc constant(ContextPtr ctx, Rational c) { return RatFunc(Poly::constant(std::move(ctx), std::move(c))); }
    static RatFunc symbol(ContextPtr ctx, int sym) { return RatFunc(Poly::symbol(std::move(ctx), sym)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const ContextPtr& context() const { return num_.context(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    bool depends_on(int sym) const { return num_.depends_on(sym) || den_.depends_on(sym); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator*(const RatFunc& a, const Rational& c) { return RatFunc(a.num_ * c, a.den_); }
    friend RatFunc operator*(const Rational& c, const RatFunc& a) { return a * c; }
    friend RatFunc operator+(const RatFunc& a, const Rational& c) { return a + RatFunc::constant(a.context(), c); }
    friend RatFunc operator+(const Rational& c, const RatFunc& a) { return RatFunc::constant(a.context(), c) + a; }
    friend RatFunc operator-(const RatFunc& a, const Rational& c) { return a - RatFunc::constant(a.context(), c); }
    friend RatFunc operator-(const Rational& c, const RatFunc& a) { return RatFunc::constant(a.context(), c) - a; }
    friend RatFunc operator/(const RatFunc& a, const Rational& c) { return a / RatFunc::constant(a.context(), c); }
    friend RatFunc operator/(const Rational& c, const RatFunc& a) { return RatFunc::constant(a.context(), c) / a; }

    RatFunc pow(int n) const {
        if (n < 0) {
            if (is_zero()) throw DivisionByZero();
            return RatFunc(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)));
        }
        return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative(int sym) const {
        return RatFunc(num_.derivative(sym) * den_ - num_ * den_.derivative(sym), den_ * den_);
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        bool npar = num_.terms().size() > 1;
        bool dpar = den_.terms().size() > 1 || !den_.leading_monomial().is_one() ||
                    den_.leading_coefficient() != 1;
        std::string out = npar ? "(" + n + ")" : n;
        out += "/";
        out += dpar ? "(" + d + ")" : d;
        return out;
    }

private:
    void reduce_() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.context() ? num_.context() : den_.context(), 1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant() || g.constant_value() != 1) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
        Rational lc = den_.leading_coefficient();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_, den_;
};

// Substitute symbols by rational functions in a polynomial. Unmapped symbols
// stay in place.
inline RatFunc substitute(const Poly& p, const std::map<int, RatFunc>& images) {
    ContextPtr ctx = p.context();
    RatFunc acc = RatFunc::constant(ctx, 0);
    std::map<int, std::vector<RatFunc>> powers; // sym -> [1, v, v^2, ...]
    auto power_of = [&](int sym, unsigned k) -> const RatFunc& {
        auto& v = powers[sym];
        if (v.empty()) v.push_back(RatFunc::constant(ctx, 1));
        while (v.size() <= k) v.push_back(v.back() * images.at(sym));
        return v[k];
    };
    for (auto& [m, c] : p.terms()) {
        RatFunc term = RatFunc::constant(ctx, c);
        Monomial rest = m;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i]) continue;
            int sym = static_cast<int>(i);
            if (images.count(sym)) {
                term = term * power_of(sym, m.e[i]);
                rest.e[i] = 0;
            }
        }
        Poly mono(ctx);
        mono.add_term(rest, Rational(1));
        acc = acc + term * RatFunc(mono);
    }
    return acc;
}

inline RatFunc substitute(const RatFunc& f, const std::map<int, RatFunc>& images) {
    RatFunc d = substitute(f.den(), images);
    if (d.is_zero()) throw DivisionByZero("substitution maps denominator to zero");
    return substitute(f.num(), images) / d;
}

// Residue of f at a simple pole of its denominator in the spectral symbol:
// num(pole) / (d/dlambda den)(pole). Pole must be exactly first order.
inline RatFunc residue_simple(const RatFunc& f, const RatFunc& pole) {
    ContextPtr ctx = f.context();
    int lam = ctx->spectral();
    if (lam < 0) throw Error("context has no spectral symbol");
    std::map<int, RatFunc> at{{lam, pole}};
    RatFunc den_at = substitute(RatFunc(f.den()), at);
    if (!den_at.is_zero())
        throw NotASimplePole("denominator does not vanish at the pole");
    RatFunc dden_at = substitute(RatFunc(f.den().derivative(lam)), at);
    if (dden_at.is_zero())
        throw NotASimplePole("pole is not simple (derivative of denominator vanishes)");
    return substitute(RatFunc(f.num()), at) / dden_at;
}

// Antiderivative in `sym` of an integrand polynomial in `sym`, with zero
// constant term.
inline RatFunc poly_antiderivative(const RatFunc& f, int sym) {
    if (f.den().depends_on(sym))
        throw NonPolynomialIntegrand("denominator depends on the integration variable");
    Poly out(f.context());
    for (auto& [m, c] : f.num().terms()) {
        Monomial mm = m;
        unsigned k = m.deg(sym);
        mm.e[static_cast<size_t>(sym)] = k + 1;
        out.add_term(mm, c / static_cast<long>(k + 1));
    }
    return RatFunc(out, f.den());
}

} // namespace biham
