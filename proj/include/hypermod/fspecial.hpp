/**
 * @file fspecial.hpp
 * @brief F-special elements and F-special subgroups of an enumerated group.
 *
 * q is the order of the ground field (a power of 2). An element is F-special
 * when it has odd order and is a pi_i(q)-element for some i >= 1, or is real,
 * or admits an involutory power-action t on <g> whose fixed points form a
 * nontrivial pi_i(q)-group with omega(ord [g,t]) < i.
 */
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "field.hpp"
#include "group.hpp"

namespace hypermod {

struct SpecialReason {
    enum class Kind { NotOddOrder, Cond1, Cond2, Cond3, None };
    Kind kind = Kind::None;
    unsigned i = 0;       // pi-index for Cond1 / Cond3
    std::uint64_t n = 0;  // ord([g,t]) for Cond3

    std::string to_string() const {
        switch (kind) {
            case Kind::NotOddOrder: return "NotOddOrder";
            case Kind::Cond1: return "Cond1(i=" + std::to_string(i) + ")";
            case Kind::Cond2: return "Cond2";
            case Kind::Cond3: return "Cond3(i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")";
            case Kind::None: return "None";
        }
        return "?";
    }
};

struct SpecialVerdict {
    bool special = false;
    SpecialReason reason;
};

/// Reason precedence: real (Cond2), then pi_i-element (Cond1), then the
/// normalizer condition (Cond3). The identity is real, hence special.
inline SpecialVerdict is_f_special_element(const PermGroup& G, ElemId g, std::uint64_t q) {
    using K = SpecialReason::Kind;
    const std::uint64_t o = G.element_order(g);
    if (o % 2 == 0) return {false, {K::NotOddOrder}};
    if (G.is_real(g)) return {true, {K::Cond2}};
    const PiClass pc = pi_number_index(o, q);
    if (pc.positive_index()) return {true, {K::Cond1, pc.kind == PiClass::Kind::Index ? pc.index : 1u}};
    const NormalizerData nd = cyclic_normalizer_data(G, g);
    for (const auto& [t, a] : nd.cosets) {
        if (a % o == 1 || (a * a) % o != 1) continue;
        const std::uint64_t c = std::gcd((a + o - 1) % o, o);  // |C_<g>(t)|
        if (c <= 1) continue;
        const PiClass cc = pi_number_index(c, q);
        if (cc.kind != PiClass::Kind::Index || cc.index < 1) continue;
        const std::uint64_t n = o / c;  // ord(g^(a-1))
        if (omega_q(n, q) < cc.index) return {true, {K::Cond3, cc.index, n}};
    }
    return {false, {K::None}};
}

/// One representative (smallest element id) per conjugacy class of F-special elements.
inline std::vector<ElemId> f_special_class_reps(const PermGroup& G, std::uint64_t q) {
    std::vector<ElemId> out;
    for (ElemId r : G.class_representatives())
        if (is_f_special_element(G, r, q).special) out.push_back(r);
    return out;
}

struct SpecialSubgroup {
    enum class Type { Cyclic, ExtendedDihedral, CyclicTimesExtendedDihedral };
    Subgroup group;
    Type type = Type::Cyclic;
    std::uint64_t m = 1;  // cyclic factor order (types i and iii)
    std::uint64_t n = 1;  // inverted odd part (types ii and iii)
    unsigned e = 0;       // 2-exponent of the extended dihedral factor
    unsigned i = 0;       // pi-index of m (types i and iii; 0 for m = 1)
    std::vector<ElemId> fingerprint;

    std::string describe() const {
        switch (type) {
            case Type::Cyclic: return "C" + std::to_string(m);
            case Type::ExtendedDihedral:
                return "D~" + std::to_string((std::uint64_t{1} << e) * n) + "(e=" + std::to_string(e) +
                       ",n=" + std::to_string(n) + ")";
            case Type::CyclicTimesExtendedDihedral:
                return "C" + std::to_string(m) + "xD~" + std::to_string((std::uint64_t{1} << e) * n) +
                       "(e=" + std::to_string(e) + ",n=" + std::to_string(n) + ")";
        }
        return "?";
    }
};

/// F-special subgroups up to G-conjugacy, generated as <g> and <g, t> over odd
/// g and 2-elements t normalizing <g> with t^2 centralizing g.
inline std::vector<SpecialSubgroup> f_special_subgroups(const PermGroup& G, std::uint64_t q) {
    std::vector<SpecialSubgroup> out;
    auto push = [&](SpecialSubgroup s) {
        s.fingerprint = G.conjugacy_fingerprint(s.group.elements);
        for (const auto& o : out)
            if (o.fingerprint == s.fingerprint) return;
        out.push_back(std::move(s));
    };
    auto is_two_power = [](std::uint64_t x) { return (x & (x - 1)) == 0; };

    for (ElemId g : G.class_representatives()) {
        const std::uint64_t o = G.element_order(g);
        if (o % 2 == 0) continue;
        const PiClass pc = pi_number_index(o, q);
        if (pc.positive_index()) {
            SpecialSubgroup s;
            s.group = G.subgroup({g});
            s.type = SpecialSubgroup::Type::Cyclic;
            s.m = o;
            s.i = pc.kind == PiClass::Kind::Index ? pc.index : 0;
            push(std::move(s));
        }
        if (o == 1) continue;
        const NormalizerData nd = cyclic_normalizer_data(G, g);
        std::vector<std::uint64_t> exp_of(G.order(), 0);
        for (ElemId h : nd.normalizer) {
            // exponent of the power action for every normalizer element
            const ElemId c = G.conj(g, h);
            std::uint64_t a = 0;
            for (ElemId x = G.identity(); x != c; x = G.mul(x, g)) ++a;
            exp_of[h] = a;
        }
        for (ElemId t : nd.normalizer) {
            const std::uint64_t ot = G.element_order(t);
            if (t == G.identity() || !is_two_power(ot)) continue;
            const std::uint64_t a = exp_of[t];
            if (a % o == 1 || (a * a) % o != 1) continue;
            unsigned e = 0;
            while ((std::uint64_t{1} << e) < ot) ++e;
            SpecialSubgroup s;
            s.e = e;
            if ((a + 1) % o == 0) {
                s.type = SpecialSubgroup::Type::ExtendedDihedral;
                s.n = o;
            } else {
                const std::uint64_t m = std::gcd((a + o - 1) % o, o);
                const std::uint64_t n = o / m;
                const PiClass mc = pi_number_index(m, q);
                if (m < 3 || n < 3 || mc.kind != PiClass::Kind::Index || mc.index < 1) continue;
                if (omega_q(n, q) >= mc.index) continue;
                s.type = SpecialSubgroup::Type::CyclicTimesExtendedDihedral;
                s.m = m;
                s.n = n;
                s.i = mc.index;
            }
            s.group = G.subgroup({g, t});
            if (s.group.order() != o * ot) continue;
            push(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const SpecialSubgroup& x, const SpecialSubgroup& y) {
        if (x.group.order() != y.group.order()) return x.group.order() < y.group.order();
        return x.fingerprint < y.fingerprint;
    });
    return out;
}

}  // namespace hypermod
