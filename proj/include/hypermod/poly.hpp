/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over GF(2^k), ascending coefficients.
 *
 * A Poly is always trimmed: the leading coefficient is nonzero, and the zero
 * polynomial has an empty coefficient array.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "field.hpp"

namespace hypermod {

class Poly {
   public:
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        for (auto a : c_)
            if (!f_.contains(a)) fail(ErrorCode::InvalidArgument, "coefficient outside " + f_.name());
        trim();
    }

    static Poly constant(Field f, Elem a) { return Poly(std::move(f), std::vector<Elem>{a}); }
    static Poly x(Field f) { return Poly(std::move(f), std::vector<Elem>{0, 1}); }
    /// x + a
    static Poly linear(Field f, Elem a) { return Poly(std::move(f), std::vector<Elem>{a, 1}); }

    const Field& field() const { return f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elem lead() const { return c_.empty() ? Elem{0} : c_.back(); }
    Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Elem eval(Elem a) const {
        Elem r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = Field::add(f_.mul(r, a), *it);
        return r;
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        const Elem li = f_.inv(c_.back());
        std::vector<Elem> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.mul(c_[i], li);
        return Poly(f_, std::move(out));
    }

    Poly derivative() const {
        std::vector<Elem> out(c_.size() > 1 ? c_.size() - 1 : 0, 0);
        for (std::size_t i = 1; i < c_.size(); i += 2) out[i - 1] = c_[i];  // char 2: even terms vanish
        return Poly(f_, std::move(out));
    }

    Poly scaled(Elem a) const {
        std::vector<Elem> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.mul(c_[i], a);
        return Poly(f_, std::move(out));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] ^= a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] ^= b.c_[i];
        return Poly(a.f_, std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.f_);
        std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] ^= a.f_.mul(a.c_[i], b.c_[j]);
        }
        return Poly(a.f_, std::move(out));
    }

    /// (quotient, remainder)
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
        const Field& f = a.f_;
        std::vector<Elem> r = a.c_;
        const int db = b.degree();
        if (a.degree() < db) return {Poly(f), a};
        std::vector<Elem> qv(a.c_.size() - b.c_.size() + 1, 0);
        const Elem li = f.inv(b.lead());
        for (int i = a.degree(); i >= db; --i) {
            const Elem coef = f.mul(r[i], li);
            if (coef == 0) continue;
            qv[i - db] = coef;
            for (int j = 0; j <= db; ++j) r[i - db + j] ^= f.mul(coef, b.c_[j]);
        }
        r.resize(db);
        return {Poly(f, std::move(qv)), Poly(f, std::move(r))};
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Deterministic total order (degree, then coefficients from the top).
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Elem a = c_[i];
            if (a == 0) continue;
            if (!s.empty()) s += " + ";
            const bool show_coef = a != 1 || i == 0;
            if (show_coef) s += std::to_string(a);
            if (i >= 1) s += show_coef ? "*x" : "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Field f_;
    std::vector<Elem> c_;
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::constant(base.field(), 1) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

inline Poly power(const Poly& p, unsigned e) {
    Poly r = Poly::constant(p.field(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

/// Square test in characteristic 2: c = g^2 iff every odd-degree coefficient
/// vanishes; the witness g has coefficients sqrt(c_{2i}).
inline std::optional<Poly> square_root(const Poly& c) {
    const auto& cs = c.coeffs();
    for (std::size_t i = 1; i < cs.size(); i += 2)
        if (cs[i] != 0) return std::nullopt;
    std::vector<Elem> g((cs.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < cs.size(); i += 2) g[i / 2] = c.field().sqrt(cs[i]);
    return Poly(c.field(), std::move(g));
}

namespace detail {

// Squarefree pieces whose irreducible factors are exactly the distinct
// irreducible factors of f (f monic, nonzero).
inline void squarefree_pieces(const Poly& f, std::vector<Poly>& out) {
    if (f.degree() <= 0) return;
    const Poly d = f.derivative();
    if (d.is_zero()) {
        // f = h^2
        squarefree_pieces(*square_root(f), out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.push_back(fac.monic());
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_pieces(*square_root(c.monic()), out);
}

// f squarefree monic with all irreducible factors of degree d.
inline void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Field& F = f.field();
    const unsigned trace_len = F.degree() * static_cast<unsigned>(d);
    for (;;) {
        std::vector<Elem> a(f.degree());
        for (auto& x : a) x = static_cast<Elem>(rng() % F.size());
        Poly ap(F, std::move(a));
        if (ap.degree() <= 0) continue;
        Poly t = ap;
        Poly sq = ap;
        for (unsigned i = 1; i < trace_len; ++i) {
            sq = (sq * sq) % f;
            t = t + sq;
        }
        Poly g = gcd(f, t);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split((f / g).monic(), d, rng, out);
            return;
        }
    }
}

/// Distinct monic irreducible factors of p, sorted. Internal machinery for the
/// MeatAxe; randomness only affects running time, never the result.
inline std::vector<Poly> irreducible_factors(const Poly& p, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
    std::vector<Poly> pieces;
    squarefree_pieces(p.monic(), pieces);
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    for (Poly f : pieces) {
        const Field& F = f.field();
        const Poly x = Poly::x(F);
        Poly h = x % f;
        for (int d = 1; 2 * d <= f.degree(); ++d) {
            h = pow_mod(h, F.size(), f);
            Poly g = gcd(f, h - x);
            if (g.degree() > 0) {
                equal_degree_split(g, d, rng, out);
                f = (f / g).monic();
                h = h % f;
            }
        }
        if (f.degree() > 0) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

}  // namespace hypermod
