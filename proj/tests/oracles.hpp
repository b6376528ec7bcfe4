// Brute-force reference implementations used by several test files.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "hypermod/group.hpp"

namespace oracle {

using hypermod::ElemId;
using hypermod::PermGroup;

inline std::uint64_t ord(std::uint64_t n, std::uint64_t q) {
    std::uint64_t x = q % n, e = 1;
    while (x != 1 % n) {
        x = x * q % n;
        ++e;
    }
    return e;
}

inline unsigned v2(std::uint64_t n) {
    unsigned v = 0;
    for (; n % 2 == 0; n /= 2) ++v;
    return v;
}

// i with every prime divisor of odd m in pi_i(q); nullopt when they differ; 99 for m = 1.
inline std::optional<unsigned> pi_index(std::uint64_t m, std::uint64_t q) {
    if (m == 1) return 99;
    std::optional<unsigned> idx;
    for (std::uint64_t p = 3; p <= m; p += 2) {
        if (m % p) continue;
        bool prime = true;
        for (std::uint64_t d = 3; d * d <= p; d += 2) prime = prime && p % d;
        if (!prime) continue;
        const unsigned w = v2(ord(p, q));
        if (idx && *idx != w) return std::nullopt;
        idx = w;
    }
    return idx;
}

inline bool positive_pi(std::uint64_t m, std::uint64_t q) {
    const auto i = pi_index(m, q);
    return i && *i >= 1;
}

inline std::uint64_t order(const PermGroup& G, ElemId g) {
    std::uint64_t o = 1;
    for (ElemId x = g; x != PermGroup::identity(); x = G.mul(x, g)) ++o;
    return o;
}

inline std::vector<ElemId> cyclic(const PermGroup& G, ElemId g) {
    std::vector<ElemId> out = {PermGroup::identity()};
    for (ElemId x = g; x != PermGroup::identity(); x = G.mul(x, g)) out.push_back(x);
    return out;
}

inline ElemId conj(const PermGroup& G, ElemId g, ElemId h) { return G.mul(G.mul(G.inv(h), g), h); }

inline bool is_real(const PermGroup& G, ElemId g) {
    for (ElemId h = 0; h < G.order(); ++h)
        if (conj(G, g, h) == G.inv(g)) return true;
    return false;
}

// The element definition, searched directly over all t in G.
inline bool special_element(const PermGroup& G, ElemId g, std::uint64_t q) {
    const std::uint64_t o = order(G, g);
    if (o % 2 == 0) return false;
    if (positive_pi(o, q)) return true;
    if (is_real(G, g)) return true;
    const auto gen = cyclic(G, g);
    const std::set<ElemId> cg(gen.begin(), gen.end());
    for (ElemId t = 0; t < G.order(); ++t) {
        if (!cg.count(conj(G, g, t))) continue;                 // t normalizes <g>
        if (conj(G, g, t) == g) continue;                        // t not in C(g)
        if (conj(G, g, G.mul(t, t)) != g) continue;              // tC has order 2
        std::uint64_t c = 0;
        for (ElemId x : gen) c += G.mul(x, t) == G.mul(t, x);   // |C_<g>(t)|
        if (c <= 1 || !positive_pi(c, q)) continue;
        const unsigned i = *pi_index(c, q);
        const std::uint64_t n = order(G, G.mul(G.inv(g), conj(G, g, t)));
        if (v2(ord(n, q)) < i) return true;
    }
    return false;
}

inline std::vector<ElemId> closure(const PermGroup& G, const std::vector<ElemId>& gens) {
    std::set<ElemId> s = {PermGroup::identity()};
    std::vector<ElemId> frontier = {PermGroup::identity()};
    while (!frontier.empty()) {
        std::vector<ElemId> next;
        for (ElemId x : frontier)
            for (ElemId g : gens)
                if (s.insert(G.mul(x, g)).second) next.push_back(G.mul(x, g));
        frontier = std::move(next);
    }
    return {s.begin(), s.end()};
}

// All subgroups generated by two elements, as sorted element lists.
inline std::vector<std::vector<ElemId>> two_generated(const PermGroup& G) {
    std::set<std::vector<ElemId>> all;
    for (ElemId a = 0; a < G.order(); ++a)
        for (ElemId b = a; b < G.order(); ++b) all.insert(closure(G, {a, b}));
    return {all.begin(), all.end()};
}

inline std::vector<ElemId> conjugate(const PermGroup& G, const std::vector<ElemId>& H, ElemId h) {
    std::vector<ElemId> out;
    for (ElemId x : H) out.push_back(conj(G, x, h));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool conjugate_subgroups(const PermGroup& G, const std::vector<ElemId>& A, const std::vector<ElemId>& B) {
    if (A.size() != B.size()) return false;
    for (ElemId h = 0; h < G.order(); ++h)
        if (conjugate(G, A, h) == B) return true;
    return false;
}

// Whether H (a subgroup of G) is isomorphic to C_m, an extended dihedral group
// or C_m x extended dihedral with the index conditions, found as <g> x| <t>.
inline bool special_subgroup(const PermGroup& G, const std::vector<ElemId>& H, std::uint64_t q) {
    std::uint64_t o = H.size(), two = 1;
    while (o % 2 == 0) {
        o /= 2;
        two *= 2;
    }
    for (ElemId g : H) {
        if (order(G, g) != o) continue;
        if (two == 1) return positive_pi(o, q);
        const auto gen = cyclic(G, g);
        for (ElemId t : H) {
            if (order(G, t) != two) continue;
            const ElemId gt = conj(G, g, t);
            const auto it = std::find(gen.begin(), gen.end(), gt);
            if (it == gen.end()) continue;
            const std::uint64_t a = static_cast<std::uint64_t>(it - gen.begin());
            if (conj(G, g, G.mul(t, t)) != g || a % o == 1 % o) continue;
            const std::uint64_t c = std::gcd((a + o - 1) % o, o);
            const std::uint64_t n = o / c;
            if ((a + 1) % n != 0 || n < 3) continue;
            if (c == 1) return true;
            if (c >= 3 && positive_pi(c, q) && v2(ord(n, q)) < *pi_index(c, q)) return true;
        }
    }
    return false;
}

}  // namespace oracle
