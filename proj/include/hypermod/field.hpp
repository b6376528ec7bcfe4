/**
 * @file field.hpp
 * @brief GF(2^k) arithmetic for 1 <= k <= 16, plus the multiplicative-order
 *        classification of odd integers relative to the field size q.
 *
 * Elements are stored as little-endian coefficient bit vectors: bit i of an
 * element is the coefficient of x^i in its residue modulo the field modulus.
 * Multiplication goes through log/antilog tables built once per degree.
 */
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace hypermod {

using Elem = std::uint16_t;

namespace detail {

// Conway polynomials over GF(2), bit i = coefficient of x^i.
inline constexpr std::array<std::uint32_t, 17> kConwayModulus = {
    0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x5B,   0x83,    0x11D,
    0x211,  0x46F,  0x805,  0x10EB, 0x201B, 0x40A9, 0x8003, 0x1002D,
};

inline int gf2_degree(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

inline std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t m) {
    const int dm = gf2_degree(m);
    for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) a ^= m << (da - dm);
    return a;
}

struct FieldTables {
    unsigned k = 0;
    std::uint32_t modulus = 0;
    std::uint32_t q = 0;
    std::vector<Elem> exp;          // exp[i] = x^i, length 2(q-1)
    std::vector<std::uint32_t> log; // log[a] for a != 0
};

inline std::shared_ptr<const FieldTables> build_tables(unsigned k, std::uint32_t modulus) {
    if (gf2_degree(modulus) != static_cast<int>(k))
        fail(ErrorCode::InternalModulusError, "modulus degree mismatch for k=" + std::to_string(k));
    for (std::uint32_t d = 2; d < (1u << (k / 2 + 1)); ++d) {
        if (gf2_degree(d) >= 1 && gf2_degree(d) <= static_cast<int>(k) / 2 && gf2_mod(modulus, d) == 0)
            fail(ErrorCode::InternalModulusError, "modulus reducible for k=" + std::to_string(k));
    }
    auto t = std::make_shared<FieldTables>();
    t->k = k;
    t->modulus = modulus;
    t->q = 1u << k;
    const std::uint32_t order = t->q - 1;
    t->exp.assign(2 * order, 0);
    t->log.assign(t->q, 0);
    std::vector<bool> seen(t->q, false);
    std::uint32_t b = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        if (seen[b]) fail(ErrorCode::InternalModulusError, "modulus not primitive for k=" + std::to_string(k));
        seen[b] = true;
        t->exp[i] = static_cast<Elem>(b);
        t->log[b] = i;
        b = gf2_mod(b << 1, modulus);
    }
    if (b != 1) fail(ErrorCode::InternalModulusError, "x^(q-1) != 1 for k=" + std::to_string(k));
    for (std::uint32_t i = order; i < 2 * order; ++i) t->exp[i] = t->exp[i - order];
    return t;
}

}  // namespace detail

/// Handle to an immutable GF(2^k). Copies share the same tables.
class Field {
   public:
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}

    unsigned degree() const { return t_->k; }
    std::uint32_t size() const { return t_->q; }
    std::uint32_t modulus() const { return t_->modulus; }
    std::string name() const { return "GF(2^" + std::to_string(t_->k) + ")"; }
    bool contains(std::uint64_t v) const { return v < t_->q; }

    static constexpr Elem zero() { return 0; }
    static constexpr Elem one() { return 1; }
    static constexpr Elem add(Elem a, Elem b) { return a ^ b; }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }

    Elem inv(Elem a) const {
        if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + name());
        const std::uint32_t order = t_->q - 1;
        return t_->exp[(order - t_->log[a]) % order];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t order = t_->q - 1;
        return t_->exp[static_cast<std::size_t>((t_->log[a] * (e % order)) % order)];
    }

    /// Inverse Frobenius: a^(2^(k-1)). Total, since every element is a square.
    Elem sqrt(Elem a) const { return pow(a, std::uint64_t{1} << (t_->k - 1)); }

    /// Fixed generator of the multiplicative group (the residue class of x).
    Elem primitive() const { return t_->exp[t_->k == 1 ? 0 : 1]; }

    friend bool operator==(const Field& a, const Field& b) { return a.t_->k == b.t_->k; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

   private:
    std::shared_ptr<const detail::FieldTables> t_;
};

/// GF(2^k) with the built-in Conway modulus; verified on first construction.
inline Field make_field(unsigned k) {
    if (k < 1 || k > 16) fail(ErrorCode::UnsupportedDegree, "k=" + std::to_string(k) + " outside [1,16]");
    static std::array<std::shared_ptr<const detail::FieldTables>, 17> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[k]) cache[k] = detail::build_tables(k, detail::kConwayModulus[k]);
    return Field(cache[k]);
}

/// Field for cardinality q = 2^k.
inline Field field_of_size(std::uint64_t q) {
    if (q < 2 || (q & (q - 1)) != 0) fail(ErrorCode::InvalidArgument, "q=" + std::to_string(q) + " is not a power of 2");
    unsigned k = 0;
    while ((std::uint64_t{1} << k) < q) ++k;
    return make_field(k);
}

// ---------------------------------------------------------------------------
// Number theory relative to q.

inline unsigned nu2(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "nu2(0)");
    unsigned e = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++e;
    }
    return e;
}

/// Least e >= 1 with q^e = 1 (mod n).
inline std::uint64_t ord_mod(std::uint64_t n, std::uint64_t q) {
    if (n == 0 || n % 2 == 0) fail(ErrorCode::InvalidArgument, "ord_mod needs odd n, got " + std::to_string(n));
    if (std::gcd(n, q) != 1) fail(ErrorCode::InvalidArgument, "gcd(n,q) != 1");
    if (n == 1) return 1;
    using u128 = unsigned __int128;
    const std::uint64_t qm = q % n;
    std::uint64_t x = qm;
    std::uint64_t e = 1;
    while (x != 1) {
        x = static_cast<std::uint64_t>(static_cast<u128>(x) * qm % n);
        ++e;
    }
    return e;
}

inline unsigned omega_q(std::uint64_t n, std::uint64_t q) { return nu2(ord_mod(n, q)); }

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Which pi_i(q) an odd integer belongs to.
struct PiClass {
    enum class Kind { All, Index, Mixed };
    Kind kind = Kind::Mixed;
    unsigned index = 0;  // meaningful for Kind::Index

    /// m is a pi_i(q)-number for some i >= 1 (the trivial number counts).
    bool positive_index() const { return kind == Kind::All || (kind == Kind::Index && index >= 1); }
    bool is_index(unsigned i) const { return kind == Kind::All || (kind == Kind::Index && index == i); }

    friend bool operator==(const PiClass&, const PiClass&) = default;
};

inline PiClass pi_number_index(std::uint64_t m, std::uint64_t q) {
    if (m == 0 || m % 2 == 0) fail(ErrorCode::InvalidArgument, "pi_number_index needs odd m, got " + std::to_string(m));
    if (std::gcd(m, q) != 1) fail(ErrorCode::InvalidArgument, "gcd(m,q) != 1");
    if (m == 1) return {PiClass::Kind::All, 0};
    const auto ps = prime_divisors(m);
    const unsigned first = omega_q(ps.front(), q);
    for (auto p : ps)
        if (omega_q(p, q) != first) return {PiClass::Kind::Mixed, 0};
    return {PiClass::Kind::Index, first};
}

}  // namespace hypermod
