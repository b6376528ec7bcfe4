/**
 * @file group.hpp
 * @brief Finite groups as permutation groups with full element enumeration.
 *
 * Permutations are 0-indexed image arrays. Products are read left to right:
 * (g*h)[i] = h[g[i]], i.e. points are acted on from the right, matching the
 * right-module convention used for representations.
 *
 * All structure (orders, classes, normalizers, centralizers) is computed by
 * brute force over the enumerated elements.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace hypermod {

using Perm = std::vector<std::uint32_t>;
using ElemId = std::uint32_t;

inline constexpr std::size_t kDefaultGroupCap = 100000;

inline bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto x : p) {
        if (x >= p.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

inline Perm compose(const Perm& g, const Perm& h) {
    Perm r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = h[g[i]];
    return r;
}

inline Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

/// A subgroup of an enumerated group, in terms of the parent's element ids.
struct Subgroup {
    std::vector<ElemId> generators;
    std::vector<ElemId> elements;  // sorted

    std::size_t order() const { return elements.size(); }
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

class PermGroup {
   public:
    PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<std::string> labels = {},
              std::size_t cap = kDefaultGroupCap)
        : degree_(degree), gens_(std::move(generators)), labels_(std::move(labels)) {
        if (degree_ == 0) fail(ErrorCode::InvalidSpec, "permutation degree must be positive");
        for (const auto& g : gens_)
            if (g.size() != degree_ || !is_permutation(g)) fail(ErrorCode::InvalidSpec, "generator is not a permutation");
        if (!labels_.empty() && labels_.size() != gens_.size())
            fail(ErrorCode::InvalidSpec, "label count != generator count");
        enumerate(cap);
    }

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return parent_.size(); }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t num_generators() const { return gens_.size(); }

    static constexpr ElemId identity() { return 0; }

    Perm perm(ElemId i) const {
        return Perm(elems_.begin() + static_cast<std::ptrdiff_t>(i * degree_),
                    elems_.begin() + static_cast<std::ptrdiff_t>((i + 1) * degree_));
    }

    std::optional<ElemId> find(const Perm& p) const {
        if (p.size() != degree_) return std::nullopt;
        auto it = index_.find(key(p.data()));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    ElemId index_of(const Perm& p) const {
        auto i = find(p);
        if (!i) fail(ErrorCode::NotASubgroupElement, "permutation is not an element of the group");
        return *i;
    }

    ElemId generator(std::size_t s) const { return gen_ids_[s]; }

    ElemId mul(ElemId a, ElemId b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
        Perm r(degree_);
        const std::uint32_t* pa = &elems_[a * degree_];
        const std::uint32_t* pb = &elems_[b * degree_];
        for (std::size_t i = 0; i < degree_; ++i) r[i] = pb[pa[i]];
        return index_.at(key(r.data()));
    }

    ElemId inv(ElemId a) const { return inv_[a]; }
    ElemId conj(ElemId g, ElemId h) const { return mul(mul(inv(h), g), h); }  // h^-1 g h

    ElemId power(ElemId g, std::int64_t e) const {
        const std::int64_t o = static_cast<std::int64_t>(order_[g]);
        e = ((e % o) + o) % o;
        ElemId r = identity();
        ElemId b = g;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t element_order(ElemId g) const { return order_[g]; }

    /// g^(2^a) where 2^a is the 2-part of ord(g).
    ElemId odd_part(ElemId g) const {
        std::uint64_t two = 1;
        for (std::uint64_t o = order_[g]; o % 2 == 0; o /= 2) two *= 2;
        return power(g, static_cast<std::int64_t>(two));
    }

    /// Generator indices whose product (left to right) is element i.
    std::vector<std::size_t> word(ElemId i) const {
        std::vector<std::size_t> w;
        while (i != identity()) {
            w.push_back(parent_gen_[i]);
            i = parent_[i];
        }
        std::reverse(w.begin(), w.end());
        return w;
    }
    ElemId parent(ElemId i) const { return parent_[i]; }
    std::size_t parent_generator(ElemId i) const { return parent_gen_[i]; }
    /// Elements in breadth-first order from the identity (parents precede children).
    const std::vector<ElemId>& bfs_order() const { return bfs_; }

    bool is_abelian() const {
        for (std::size_t a = 0; a < gens_.size(); ++a)
            for (std::size_t b = a + 1; b < gens_.size(); ++b)
                if (mul(gen_ids_[a], gen_ids_[b]) != mul(gen_ids_[b], gen_ids_[a])) return false;
        return true;
    }

    /// Conjugacy class id of every element; class ids are the smallest element id in the class.
    const std::vector<ElemId>& class_of() const { return class_of_; }
    std::vector<ElemId> class_representatives() const {
        std::vector<ElemId> reps;
        for (ElemId i = 0; i < order(); ++i)
            if (class_of_[i] == i) reps.push_back(i);
        return reps;
    }

    bool is_real(ElemId g) const { return class_of_[g] == class_of_[inv(g)]; }

    /// Sorted element ids of the subgroup generated by gens.
    std::vector<ElemId> closure(const std::vector<ElemId>& gens) const {
        std::vector<bool> in(order(), false);
        std::vector<ElemId> out{identity()};
        in[identity()] = true;
        for (std::size_t k = 0; k < out.size(); ++k)
            for (auto s : gens) {
                const ElemId x = mul(out[k], s);
                if (!in[x]) {
                    in[x] = true;
                    out.push_back(x);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    Subgroup subgroup(std::vector<ElemId> gens) const {
        Subgroup s;
        s.elements = closure(gens);
        s.generators = std::move(gens);
        return s;
    }

    /// The subgroup as a permutation group in its own right (same degree).
    PermGroup as_group(const Subgroup& h) const {
        std::vector<Perm> ps;
        for (auto g : h.generators) ps.push_back(perm(g));
        return PermGroup(degree_, std::move(ps));
    }

    /// Smallest sorted element list among all G-conjugates of the subgroup.
    std::vector<ElemId> conjugacy_fingerprint(const std::vector<ElemId>& elements) const {
        std::vector<ElemId> best = elements;
        std::vector<ElemId> cur(elements.size());
        for (ElemId h = 0; h < order(); ++h) {
            for (std::size_t i = 0; i < elements.size(); ++i) cur[i] = conj(elements[i], h);
            std::sort(cur.begin(), cur.end());
            if (cur < best) best = cur;
        }
        return best;
    }

   private:
    static std::string key(const std::uint32_t* p, std::size_t n) {
        return std::string(reinterpret_cast<const char*>(p), n * sizeof(std::uint32_t));
    }
    std::string key(const std::uint32_t* p) const { return key(p, degree_); }

    void enumerate(std::size_t cap) {
        const Perm id = identity_perm(degree_);
        elems_.insert(elems_.end(), id.begin(), id.end());
        index_.emplace(key(id.data()), 0);
        parent_.push_back(0);
        parent_gen_.push_back(0);
        bfs_.push_back(0);
        for (std::size_t k = 0; k < bfs_.size(); ++k) {
            const ElemId cur = bfs_[k];
            for (std::size_t s = 0; s < gens_.size(); ++s) {
                Perm next(degree_);
                for (std::size_t i = 0; i < degree_; ++i) next[i] = gens_[s][elems_[cur * degree_ + i]];
                auto [it, inserted] = index_.emplace(key(next.data()), static_cast<ElemId>(parent_.size()));
                if (!inserted) continue;
                if (parent_.size() >= cap)
                    fail(ErrorCode::GroupTooLarge, "group order exceeds cap " + std::to_string(cap));
                elems_.insert(elems_.end(), next.begin(), next.end());
                parent_.push_back(cur);
                parent_gen_.push_back(s);
                bfs_.push_back(it->second);
            }
        }
        for (std::size_t s = 0; s < gens_.size(); ++s) gen_ids_.push_back(index_.at(key(gens_[s].data())));
        const std::size_t n = order();
        if (n <= 1024) {
            table_.resize(n * n);
            for (ElemId a = 0; a < n; ++a) {
                Perm r(degree_);
                for (ElemId b = 0; b < n; ++b) {
                    for (std::size_t i = 0; i < degree_; ++i) r[i] = elems_[b * degree_ + elems_[a * degree_ + i]];
                    table_[a * n + b] = index_.at(key(r.data()));
                }
            }
        }
        inv_.resize(n);
        order_.resize(n);
        for (ElemId a = 0; a < n; ++a) {
            Perm p = perm(a), q(degree_);
            for (std::size_t i = 0; i < degree_; ++i) q[p[i]] = static_cast<std::uint32_t>(i);
            inv_[a] = index_.at(key(q.data()));
            std::uint64_t o = 1;
            for (ElemId x = a; x != identity(); x = mul(x, a)) ++o;
            order_[a] = o;
        }
        // conjugacy classes: orbits under conjugation by generators
        class_of_.assign(n, static_cast<ElemId>(n));
        for (ElemId a = 0; a < n; ++a) {
            if (class_of_[a] != n) continue;
            std::vector<ElemId> orbit{a};
            class_of_[a] = a;
            for (std::size_t k = 0; k < orbit.size(); ++k)
                for (auto s : gen_ids_) {
                    const ElemId c = conj(orbit[k], s);
                    if (class_of_[c] == n) {
                        class_of_[c] = a;
                        orbit.push_back(c);
                    }
                }
        }
    }

    std::size_t degree_;
    std::vector<Perm> gens_;
    std::vector<std::string> labels_;
    std::vector<std::uint32_t> elems_;
    std::unordered_map<std::string, ElemId> index_;
    std::vector<ElemId> parent_;
    std::vector<std::size_t> parent_gen_;
    std::vector<ElemId> bfs_;
    std::vector<ElemId> gen_ids_;
    std::vector<ElemId> table_;
    std::vector<ElemId> inv_;
    std::vector<std::uint64_t> order_;
    std::vector<ElemId> class_of_;
};

// ---------------------------------------------------------------------------
// Builders

struct GroupSpec {
    enum class Kind { Cyclic, ExtendedDihedral, Symmetric, Alternating, DirectProduct, RawPermutation };
    Kind kind = Kind::Cyclic;
    std::uint64_t m = 1;  // Cyclic order; Symmetric/Alternating degree
    unsigned e = 1;       // ExtendedDihedral 2-exponent
    std::uint64_t n = 3;  // ExtendedDihedral odd part
    std::vector<GroupSpec> factors;
    std::size_t degree = 0;
    std::vector<Perm> generators;

    static GroupSpec of_degree(Kind k, std::uint64_t m) {
        GroupSpec s;
        s.kind = k;
        s.m = m;
        return s;
    }
    static GroupSpec cyclic(std::uint64_t m) { return of_degree(Kind::Cyclic, m); }
    static GroupSpec extended_dihedral(unsigned e, std::uint64_t n) {
        GroupSpec s;
        s.kind = Kind::ExtendedDihedral;
        s.e = e;
        s.n = n;
        return s;
    }
    static GroupSpec dihedral(std::uint64_t n) { return extended_dihedral(1, n); }
    static GroupSpec symmetric(std::uint64_t n) { return of_degree(Kind::Symmetric, n); }
    static GroupSpec alternating(std::uint64_t n) { return of_degree(Kind::Alternating, n); }
    static GroupSpec direct_product(std::vector<GroupSpec> fs) {
        GroupSpec s;
        s.kind = Kind::DirectProduct;
        s.factors = std::move(fs);
        return s;
    }
    static GroupSpec raw(std::size_t degree, std::vector<Perm> gens) {
        GroupSpec s;
        s.kind = Kind::RawPermutation;
        s.degree = degree;
        s.generators = std::move(gens);
        return s;
    }
};

namespace detail {

struct RawGroup {
    std::size_t degree;
    std::vector<Perm> gens;
    std::vector<std::string> labels;
};

inline Perm cycle_perm(std::size_t n, const std::vector<std::uint32_t>& cyc) {
    Perm p = identity_perm(n);
    for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return p;
}

inline Perm perm_power(const Perm& p, std::uint64_t e) {
    Perm r = identity_perm(p.size());
    for (std::uint64_t i = 0; i < e; ++i) r = compose(r, p);
    return r;
}

inline RawGroup raw_of(const GroupSpec& s, std::size_t cap) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::Cyclic: {
            if (s.m < 1) fail(ErrorCode::InvalidSpec, "Cyclic requires m >= 1");
            if (s.m > cap) fail(ErrorCode::GroupTooLarge, "cyclic group exceeds cap");
            Perm g(s.m);
            for (std::uint64_t i = 0; i < s.m; ++i) g[i] = static_cast<std::uint32_t>((i + 1) % s.m);
            return {s.m, {g}, {"g"}};
        }
        case K::ExtendedDihedral: {
            if (s.e < 1 || s.n < 3 || s.n % 2 == 0)
                fail(ErrorCode::InvalidSpec, "ExtendedDihedral requires e >= 1 and odd n >= 3");
            if (s.e > 30 || (std::uint64_t{1} << s.e) * s.n > cap)
                fail(ErrorCode::GroupTooLarge, "extended dihedral group exceeds cap");
            const std::uint64_t two = std::uint64_t{1} << s.e;
            const std::uint64_t n = s.n;
            const std::size_t deg = two * n;
            // point a + n*b is the element x^a y^b; right multiplication by x and y
            Perm px(deg), py(deg);
            for (std::uint64_t b = 0; b < two; ++b)
                for (std::uint64_t a = 0; a < n; ++a) {
                    const std::uint64_t ax = (b % 2 == 0) ? (a + 1) % n : (a + n - 1) % n;
                    px[a + n * b] = static_cast<std::uint32_t>(ax + n * b);
                    py[a + n * b] = static_cast<std::uint32_t>(a + n * ((b + 1) % two));
                }
            // x^n = y^(2^e) = 1, y^-1 x y = x^-1
            const Perm id = identity_perm(deg);
            Perm yinv = perm_power(py, two - 1);
            if (perm_power(px, n) != id || perm_power(py, two) != id ||
                compose(compose(yinv, px), py) != perm_power(px, n - 1))
                fail(ErrorCode::InvalidSpec, "extended dihedral relations failed");
            return {deg, {px, py}, {"x", "y"}};
        }
        case K::Symmetric: {
            if (s.m < 1) fail(ErrorCode::InvalidSpec, "Symmetric requires n >= 1");
            std::vector<std::uint32_t> all(s.m);
            std::iota(all.begin(), all.end(), 0u);
            if (s.m == 1) return {1, {identity_perm(1)}, {"e"}};
            if (s.m == 2) return {2, {cycle_perm(2, {0, 1})}, {"s"}};
            return {s.m, {cycle_perm(s.m, {0, 1}), cycle_perm(s.m, all)}, {"s", "c"}};
        }
        case K::Alternating: {
            if (s.m < 1) fail(ErrorCode::InvalidSpec, "Alternating requires n >= 1");
            if (s.m < 3) return {s.m, {identity_perm(s.m)}, {"e"}};
            RawGroup r{s.m, {}, {}};
            for (std::uint32_t k = 2; k < s.m; ++k) {
                r.gens.push_back(cycle_perm(s.m, {0, 1, k}));
                r.labels.push_back("c" + std::to_string(k));
            }
            return r;
        }
        case K::DirectProduct: {
            if (s.factors.empty()) fail(ErrorCode::InvalidSpec, "DirectProduct needs factors");
            std::vector<RawGroup> parts;
            std::size_t deg = 0;
            for (const auto& f : s.factors) {
                parts.push_back(raw_of(f, cap));
                deg += parts.back().degree;
            }
            RawGroup r{deg, {}, {}};
            std::size_t off = 0;
            for (std::size_t fi = 0; fi < parts.size(); ++fi) {
                for (std::size_t gi = 0; gi < parts[fi].gens.size(); ++gi) {
                    Perm p = identity_perm(deg);
                    for (std::size_t i = 0; i < parts[fi].degree; ++i)
                        p[off + i] = static_cast<std::uint32_t>(off + parts[fi].gens[gi][i]);
                    r.gens.push_back(std::move(p));
                    r.labels.push_back(parts[fi].labels[gi] + std::to_string(fi + 1));
                }
                off += parts[fi].degree;
            }
            return r;
        }
        case K::RawPermutation: {
            if (s.degree == 0) fail(ErrorCode::InvalidSpec, "raw permutation group needs degree >= 1");
            auto gens = s.generators;
            if (gens.empty()) gens.push_back(identity_perm(s.degree));
            return {s.degree, gens, {}};
        }
    }
    fail(ErrorCode::InvalidSpec, "unknown group kind");
}

}  // namespace detail

inline PermGroup build_group(const GroupSpec& spec, std::size_t cap = kDefaultGroupCap) {
    auto r = detail::raw_of(spec, cap);
    return PermGroup(r.degree, std::move(r.gens), std::move(r.labels), cap);
}

/// Orders implied by the builders' presentations (used to validate closure).
inline std::uint64_t expected_order(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::Cyclic: return s.m;
        case K::ExtendedDihedral: return (std::uint64_t{1} << s.e) * s.n;
        case K::Symmetric: {
            std::uint64_t r = 1;
            for (std::uint64_t i = 2; i <= s.m; ++i) r *= i;
            return r;
        }
        case K::Alternating: {
            std::uint64_t r = 1;
            for (std::uint64_t i = 3; i <= s.m; ++i) r *= i;
            return r;
        }
        case K::DirectProduct: {
            std::uint64_t r = 1;
            for (const auto& f : s.factors) r *= expected_order(f);
            return r;
        }
        case K::RawPermutation: return 0;
    }
    return 0;
}

/// N_G(<g>), C_G(g), and one (representative, exponent a with g^t = g^a) per coset of C in N.
struct NormalizerData {
    std::vector<ElemId> normalizer;
    std::vector<ElemId> centralizer;
    std::vector<std::pair<ElemId, std::uint64_t>> cosets;
};

inline NormalizerData cyclic_normalizer_data(const PermGroup& G, ElemId g) {
    const std::uint64_t o = G.element_order(g);
    std::vector<ElemId> powers(o);
    std::unordered_map<ElemId, std::uint64_t> exp_of;
    for (std::uint64_t j = 0; j < o; ++j) {
        powers[j] = G.power(g, static_cast<std::int64_t>(j));
        exp_of[powers[j]] = j;
    }
    NormalizerData d;
    std::vector<std::uint64_t> seen_exp;
    for (ElemId h = 0; h < G.order(); ++h) {
        const ElemId c = G.conj(g, h);
        auto it = exp_of.find(c);
        if (it == exp_of.end()) continue;
        d.normalizer.push_back(h);
        const std::uint64_t a = (o == 1) ? 1 : it->second;
        if (a % o == 1 % o) d.centralizer.push_back(h);
        if (std::find(seen_exp.begin(), seen_exp.end(), a) == seen_exp.end()) {
            seen_exp.push_back(a);
            d.cosets.emplace_back(h, a);  // h is the smallest id in its coset
        }
    }
    return d;
}

/// All subgroups generated by at most two elements, one per conjugacy class,
/// sorted by (order, fingerprint).
inline std::vector<Subgroup> two_generated_subgroups(const PermGroup& G) {
    std::vector<std::vector<ElemId>> seen;
    std::vector<Subgroup> out;
    for (ElemId a = 0; a < G.order(); ++a) {
        if (G.class_of()[a] != a) continue;
        for (ElemId b = 0; b < G.order(); ++b) {
            std::vector<ElemId> gens = (a == b || b == 0) ? std::vector<ElemId>{a} : std::vector<ElemId>{a, b};
            auto els = G.closure(gens);
            auto fp = G.conjugacy_fingerprint(els);
            if (std::find(seen.begin(), seen.end(), fp) != seen.end()) continue;
            seen.push_back(fp);
            out.push_back({std::move(gens), std::move(els)});
        }
    }
    std::sort(out.begin(), out.end(), [&](const Subgroup& x, const Subgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elements < y.elements;
    });
    return out;
}

}  // namespace hypermod
