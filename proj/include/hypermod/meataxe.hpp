/**
 * @file meataxe.hpp
 * @brief MeatAxe splitting, composition factors, isomorphism of simples and
 *        the even-multiplicity test.
 *
 * Splitting follows Holt-Rees: take a random algebra element A, an irreducible
 * factor p of its characteristic polynomial, and spin a null vector of p(A).
 * When the nullity of p(A) equals deg p a single spin on each side decides
 * (Norton's criterion). After a fixed number of random probes a deterministic
 * pass enumerates every null vector of small singular elements instead.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "module.hpp"

namespace hypermod {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2024'0bad'cafeULL;

/// splitmix64 step; used to derive child seeds deterministically.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct SplitResult {
    bool simple = false;
    std::optional<Echelon> submodule;  // proper nonzero invariant subspace when !simple
};

namespace detail {

inline Echelon echelon_of(const Subspace& s) { return row_echelon(Matrix::from_rows(s.field(), s.ambient(), s.rows())); }

// Annihilator {v : v . u = 0 for all u in U}; a submodule of M when U is a
// submodule of the transposed action.
inline Echelon annihilator(const Subspace& U) {
    const Matrix K = kernel(Matrix::from_rows(U.field(), U.ambient(), U.rows()));
    return row_echelon(K);
}

inline std::vector<Matrix> transposed(const std::vector<Matrix>& ms) {
    std::vector<Matrix> out;
    for (const auto& m : ms) out.push_back(m.transpose());
    return out;
}

// Norton test on the singular element B = p(A). Returns a split, a proof of
// simplicity, or nothing when the test is inconclusive. With exhaustive=true
// every projective point of the null space is spun.
inline std::optional<SplitResult> norton_probe(const Representation& M, const std::vector<Matrix>& gens_t,
                                               const Matrix& B, int deg_p, bool exhaustive) {
    const std::size_t d = M.dim();
    const Field& f = M.field();
    const Matrix K = left_kernel(B);
    if (K.rows() == 0) return std::nullopt;
    const Subspace first = spin(M, {K.row_vec(0)});
    if (first.dim() < d) return SplitResult{false, echelon_of(first)};
    const bool holt_rees = K.rows() == static_cast<std::size_t>(deg_p);
    if (!holt_rees) {
        if (!exhaustive) return std::nullopt;
        const double points = std::pow(static_cast<double>(f.size()), static_cast<double>(K.rows()));
        if (points > 65536.0) return std::nullopt;
        // every nonzero null vector, normalized so its first nonzero coordinate is 1
        const std::size_t k = K.rows();
        std::vector<Elem> c(k, 0);
        for (std::size_t lead = 0; lead < k; ++lead) {
            std::fill(c.begin(), c.end(), 0);
            c[lead] = 1;
            for (;;) {
                Vec v(d, 0);
                for (std::size_t i = 0; i < k; ++i) axpy(f, v, K.row(i), c[i]);
                const Subspace s = spin(M, {v});
                if (s.dim() < d) return SplitResult{false, echelon_of(s)};
                std::size_t pos = lead + 1;
                while (pos < k) {
                    if (++c[pos] < f.size()) break;
                    c[pos] = 0;
                    ++pos;
                }
                if (pos == k) break;
            }
        }
    }
    const Matrix Kt = kernel(B);  // w with w B^T = 0
    const Subspace dual_span = spin(f, d, {Kt.row_vec(0)}, gens_t);
    if (dual_span.dim() < d) return SplitResult{false, annihilator(dual_span)};
    return SplitResult{true, std::nullopt};
}

}  // namespace detail

/// Either a proper nonzero submodule or a certificate that M is simple.
inline SplitResult meataxe_split(const Representation& M, std::uint64_t seed, int probes = 200) {
    const std::size_t d = M.dim();
    if (d == 0) fail(ErrorCode::ZeroModule, "meataxe_split on the zero module");
    if (d == 1) return {true, std::nullopt};
    const Field& f = M.field();
    const auto gens_t = detail::transposed(M.images());
    std::mt19937_64 rng(seed);

    std::vector<Matrix> pool = M.images();
    for (int probe = 0; probe < probes; ++probe) {
        {
            const Matrix& a = pool[rng() % pool.size()];
            const Matrix& b = pool[rng() % pool.size()];
            Matrix p = a * b;
            if (pool.size() < 24)
                pool.push_back(std::move(p));
            else
                pool[M.images().size() + rng() % (pool.size() - M.images().size())] = std::move(p);
        }
        Matrix A(f, d, d);
        for (const auto& m : pool) {
            const Elem c = static_cast<Elem>(rng() % f.size());
            if (c) A = A + m.scaled(c);
        }
        const auto factors = detail::irreducible_factors(char_poly(A), rng());
        std::vector<Poly> by_degree = factors;
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [](const Poly& x, const Poly& y) { return x.degree() < y.degree(); });
        for (const auto& p : by_degree) {
            if (auto r = detail::norton_probe(M, gens_t, eval_poly(p, A), p.degree(), false)) return *r;
        }
    }

    // deterministic pass: generators, pairwise products and sums
    std::vector<Matrix> cands = M.images();
    for (std::size_t i = 0; i < M.images().size(); ++i)
        for (std::size_t j = 0; j < M.images().size(); ++j) {
            cands.push_back(M.image(i) * M.image(j));
            if (i < j) cands.push_back(M.image(i) + M.image(j));
        }
    for (const auto& A : cands)
        for (const auto& p : detail::irreducible_factors(char_poly(A)))
            if (auto r = detail::norton_probe(M, gens_t, eval_poly(p, A), p.degree(), true)) return *r;
    fail(ErrorCode::MeatAxeFailure, "no conclusive singular element found for dim " + std::to_string(d));
}

/// Simple factors of M in discovery order (with repetition).
inline void collect_simple_factors(const Representation& M, std::uint64_t seed, std::vector<Representation>& out) {
    if (M.dim() == 0) return;
    const SplitResult r = meataxe_split(M, seed);
    if (r.simple) {
        out.push_back(M);
        return;
    }
    collect_simple_factors(submodule(M, *r.submodule), derive_seed(seed, 1), out);
    collect_simple_factors(quotient(M, *r.submodule), derive_seed(seed, 2), out);
}

/// Isomorphism invariant used to pre-filter simple_iso: characteristic
/// polynomials of a fixed list of algebra elements.
inline std::vector<Poly> simple_fingerprint(const Representation& S) {
    std::vector<Poly> fp;
    const auto& g = S.images();
    for (std::size_t i = 0; i < g.size(); ++i) fp.push_back(char_poly(g[i]));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            fp.push_back(char_poly(g[i] * g[j]));
            if (i < j) fp.push_back(char_poly(g[i] + g[j]));
        }
    for (std::size_t i = 0; i < g.size(); ++i) fp.push_back(char_poly(g[i] + g[i] * g[(i + 1) % g.size()]));
    return fp;
}

/// Isomorphism of simple modules: by Schur, any nonzero intertwiner is invertible.
inline bool simple_iso(const Representation& S, const Representation& T) {
    if (!S.same_context(T)) fail(ErrorCode::MismatchedContext, "simple_iso over different group or field");
    if (S.dim() != T.dim()) return false;
    const auto H = hom_basis(S, T);
    if (H.empty()) return false;
    for (const auto& X : H)
        if (is_invertible(X)) return true;
    fail(ErrorCode::NotSimpleInput, "nonzero intertwiner between simples is singular");
}

struct FactorEntry {
    Representation module;
    std::size_t multiplicity = 0;
    bool self_dual = false;
    std::vector<Poly> fingerprint;
};

struct FactorMultiset {
    std::vector<FactorEntry> entries;

    std::size_t total_dim() const {
        std::size_t s = 0;
        for (const auto& e : entries) s += e.multiplicity * e.module.dim();
        return s;
    }
    std::size_t distinct() const { return entries.size(); }
};

inline bool fingerprint_less(const FactorEntry& a, const FactorEntry& b) {
    if (a.module.dim() != b.module.dim()) return a.module.dim() < b.module.dim();
    return std::lexicographical_compare(a.fingerprint.begin(), a.fingerprint.end(), b.fingerprint.begin(),
                                        b.fingerprint.end());
}

/// Groups simple modules by isomorphism; entries sorted by (dim, fingerprint).
inline FactorMultiset group_simples(const std::vector<Representation>& simples) {
    FactorMultiset fm;
    for (const auto& S : simples) {
        auto fp = simple_fingerprint(S);
        bool merged = false;
        for (auto& e : fm.entries) {
            if (e.module.dim() == S.dim() && e.fingerprint == fp && simple_iso(e.module, S)) {
                ++e.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) fm.entries.push_back({S, 1, false, std::move(fp)});
    }
    for (auto& e : fm.entries) e.self_dual = simple_iso(e.module, dual_module(e.module));
    std::stable_sort(fm.entries.begin(), fm.entries.end(), fingerprint_less);
    return fm;
}

inline FactorMultiset composition_factors(const Representation& M, std::uint64_t seed = kDefaultSeed) {
    std::vector<Representation> simples;
    collect_simple_factors(M, seed, simples);
    return group_simples(simples);
}

struct EvenMultiplicity {
    bool even = true;
    std::optional<std::size_t> offending;  // index into the factor multiset
};

inline EvenMultiplicity is_even_multiplicity(const FactorMultiset& fm) {
    for (std::size_t i = 0; i < fm.entries.size(); ++i)
        if (fm.entries[i].self_dual && fm.entries[i].multiplicity % 2 == 1) return {false, i};
    return {true, std::nullopt};
}

inline EvenMultiplicity is_even_multiplicity(const Representation& M, std::uint64_t seed = kDefaultSeed) {
    return is_even_multiplicity(composition_factors(M, seed));
}

/// True iff the two multisets agree up to isomorphism of entries.
inline bool same_factors(const FactorMultiset& a, const FactorMultiset& b) {
    if (a.entries.size() != b.entries.size()) return false;
    std::vector<bool> used(b.entries.size(), false);
    for (const auto& x : a.entries) {
        bool found = false;
        for (std::size_t j = 0; j < b.entries.size() && !found; ++j) {
            if (used[j] || b.entries[j].multiplicity != x.multiplicity) continue;
            if (b.entries[j].module.dim() == x.module.dim() && b.entries[j].fingerprint == x.fingerprint &&
                simple_iso(b.entries[j].module, x.module)) {
                used[j] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace hypermod
