/**
 * @file repro.hpp
 * @brief The worked examples: C_p x D_2r, the regular module of the extended
 *        dihedral group D~_4p, and the 2-dimensional symplectic F_4[S_3]-module.
 *
 * Each example returns a list of named checks together with the data behind them.
 */
#pragma once

#include <string>
#include <vector>

#include "io.hpp"

namespace hypermod {

/// Element ids acting trivially on M.
inline std::vector<ElemId> module_kernel(const Representation& M) {
    std::vector<ElemId> out;
    const auto imgs = M.all_images();
    const Matrix id = Matrix::identity(M.field(), M.dim());
    for (ElemId x = 0; x < M.group().order(); ++x)
        if (imgs[x] == id) out.push_back(x);
    return out;
}

/// Distinct simple modules of G over f, read off the regular module.
inline FactorMultiset simple_modules(const GroupPtr& G, const Field& f, std::uint64_t seed = kDefaultSeed) {
    return composition_factors(regular_module(G, f), seed);
}

inline bool is_f_special_group(const PermGroup& G, std::uint64_t q) {
    for (const auto& s : f_special_subgroups(G, q))
        if (s.group.order() == G.order()) return true;
    return false;
}

struct ReproCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproReport {
    std::string name;
    io::json data = io::json::object();
    std::vector<ReproCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
    void check(std::string n, bool ok, std::string detail = {}) { checks.push_back({std::move(n), ok, std::move(detail)}); }

    io::json to_json() const {
        io::json cs = io::json::array();
        for (const auto& c : checks) cs.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        return {{"example", name}, {"data", data}, {"checks", cs}, {"pass", pass()}};
    }
};

namespace detail {

inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
    const auto ps = prime_divisors(n);
    if (ps.empty()) fail(ErrorCode::InvalidArgument, std::to_string(n) + " has no prime divisor");
    return ps.front();
}

inline std::string verdict_text(const std::vector<HyperbolicVerdict>& vs) {
    std::string s;
    for (const auto& v : vs) s += (s.empty() ? "" : ", ") + to_string(v.method) + "=" + (v.hyperbolic ? "1" : "0");
    return s;
}

// All four criteria, which must agree; returns the common answer.
inline bool hyperbolic_all(const BilinearForm& form, std::uint64_t seed, std::string* detail = nullptr) {
    const auto vs = is_hyperbolic_all(form, seed);
    if (detail) *detail = verdict_text(vs);
    return vs.front().hyperbolic;
}

inline const FactorEntry* find_simple(const FactorMultiset& simples, const std::function<bool(const FactorEntry&)>& pred) {
    for (const auto& e : simples.entries)
        if (pred(e)) return &e;
    return nullptr;
}

inline std::string subgroup_name(const PermGroup& G, const Subgroup& H) {
    std::string s = "<";
    for (std::size_t i = 0; i < H.generators.size(); ++i) {
        if (H.generators[i] == PermGroup::identity() && H.generators.size() > 1) continue;
        if (s.size() > 1) s += ", ";
        std::string w;
        for (auto g : G.word(H.generators[i])) w += G.labels().empty() ? "g" + std::to_string(g) : G.labels()[g];
        s += w.empty() ? "1" : w;
    }
    return s + "> order " + std::to_string(H.order());
}

}  // namespace detail

/// G = C_p x D_2r with p | q+1 and r | q-1; V = U (x) W is a simple symplectic
/// module that is not hyperbolic while its restrictions to proper subgroups are.
inline ReproReport repro_cp_times_dihedral(std::uint64_t q, std::uint64_t seed = kDefaultSeed) {
    if (q < 4) fail(ErrorCode::InvalidArgument, "needs q >= 4");
    const Field f = field_of_size(q);
    const std::uint64_t p = detail::smallest_prime_factor(q + 1);
    const std::uint64_t r = detail::smallest_prime_factor(q - 1);
    ReproReport rep;
    rep.name = "thm5.1";
    auto G = std::make_shared<const PermGroup>(
        build_group(GroupSpec::direct_product({GroupSpec::cyclic(p), GroupSpec::dihedral(r)})));
    rep.data = {{"q", q}, {"p", p}, {"r", r}, {"group_order", G->order()}};
    rep.check("|G| = 2pr", G->order() == 2 * p * r, std::to_string(G->order()));
    rep.check("p in pi_1(q), r in pi_0(q)",
              pi_number_index(p, q).is_index(1) && pi_number_index(r, q).is_index(0));
    rep.check("G is F-special", is_f_special_group(*G, q));

    const Subgroup C = G->subgroup({G->generator(0)});
    const Subgroup B = G->subgroup({G->generator(1), G->generator(2)});
    const FactorMultiset simples = simple_modules(G, f, seed);
    const FactorEntry* U = detail::find_simple(simples, [&](const FactorEntry& e) { return module_kernel(e.module) == B.elements; });
    const FactorEntry* W = detail::find_simple(simples, [&](const FactorEntry& e) { return module_kernel(e.module) == C.elements; });
    if (!U || !W) {
        rep.check("faithful simples of C and B found", false);
        return rep;
    }
    rep.check("dim U = dim W = 2", U->module.dim() == 2 && W->module.dim() == 2,
              std::to_string(U->module.dim()) + ", " + std::to_string(W->module.dim()));
    rep.check("U and W self-dual", U->self_dual && W->self_dual);

    const Representation V = module_tensor(U->module, W->module);
    rep.data["dim_V"] = V.dim();
    rep.check("dim V = 4", V.dim() == 4);
    rep.check("V simple", meataxe_split(V, seed).simple);
    rep.check("V faithful", module_kernel(V).size() == 1);
    const BilinearForm form = make_invariant_symplectic(V, seed);
    rep.data["gram"] = io::to_json(form.gram());
    rep.check("V symplectic", form.is_alternating() && form.is_nondegenerate() && form.is_invariant());
    std::string d;
    const bool hyp = detail::hyperbolic_all(form, seed, &d);
    rep.data["V_hyperbolic"] = hyp;
    rep.check("V not hyperbolic", !hyp, d);
    const WittKernelReport wk = witt_kernel(form, seed);
    rep.check("Witt kernel of V is V", wk.kernel_form.dim() == 4);

    struct Named {
        std::string name;
        Subgroup H;
    };
    const std::vector<Named> maximal = {
        {"B = D_2r", B},
        {"C x N", G->subgroup({G->generator(0), G->generator(1)})},
        {"C x <t>", G->subgroup({G->generator(0), G->generator(2)})},
    };
    io::json rs = io::json::array();
    for (const auto& [name, H] : maximal) {
        const BilinearForm fh(restrict(V, H), form.gram());
        const bool h = detail::hyperbolic_all(fh, seed, &d);
        rs.push_back({{"subgroup", name}, {"order", H.order()}, {"hyperbolic", h}});
        rep.check("V restricted to " + name + " hyperbolic", h, d);
    }
    rep.data["maximal_restrictions"] = rs;
    const FactorMultiset vb = composition_factors(restrict(V, B), seed);
    rep.check("V_B has one factor of multiplicity 2",
              vb.entries.size() == 1 && vb.entries[0].multiplicity == 2 && simple_iso(vb.entries[0].module, restrict(W->module, B)));

    bool all_proper = true;
    std::size_t count = 0;
    for (const auto& H : two_generated_subgroups(*G)) {
        if (H.order() == G->order()) continue;
        ++count;
        all_proper = all_proper && detail::hyperbolic_all(BilinearForm(restrict(V, H), form.gram()), seed);
    }
    rep.data["proper_subgroups_checked"] = count;
    rep.check("every proper subgroup restriction hyperbolic", all_proper, std::to_string(count) + " classes");
    return rep;
}

/// G = D~_4p with p | q-1: FG is hyperbolic, FG _|_ U is not, and every proper
/// subgroup restriction of FG _|_ U is.
inline ReproReport repro_extended_dihedral(std::uint64_t q, std::uint64_t seed = kDefaultSeed) {
    if (q < 4) fail(ErrorCode::InvalidArgument, "needs q >= 4");
    const Field f = field_of_size(q);
    const std::uint64_t p = detail::smallest_prime_factor(q - 1);
    ReproReport rep;
    rep.name = "thm5.2";
    auto G = std::make_shared<const PermGroup>(build_group(GroupSpec::extended_dihedral(2, p)));
    rep.data = {{"q", q}, {"p", p}, {"group_order", G->order()}};
    rep.check("|G| = 4p", G->order() == 4 * p);

    const Representation R = regular_module(G, f);
    rep.data["dim_FG"] = R.dim();
    const Poly target = power(Poly::x(f), static_cast<unsigned>(p)) + Poly::constant(f, 1);
    const Poly expected = power(target, 4);
    bool cp_ok = true;
    std::size_t odd = 0;
    for (ElemId g = 1; g < G->order(); ++g) {
        if (G->element_order(g) % 2 == 0) continue;
        ++odd;
        cp_ok = cp_ok && char_poly_on(R, g) == expected;
    }
    rep.data["char_poly_odd"] = io::to_json(expected);
    rep.check("char poly of nontrivial odd elements on FG is (x^p+1)^4", cp_ok && odd > 0,
              std::to_string(odd) + " elements");

    const BilinearForm fg = make_invariant_symplectic(R, seed);
    rep.check("FG symplectic", fg.is_alternating() && fg.is_nondegenerate() && fg.is_invariant());
    std::string d;
    const bool fg_hyp = detail::hyperbolic_all(fg, seed, &d);
    rep.check("FG hyperbolic", fg_hyp, d);

    const FactorMultiset simples = simple_modules(G, f, seed);
    const ElemId y2 = G->power(G->generator(1), 2);
    const FactorEntry* U = detail::find_simple(simples, [&](const FactorEntry& e) {
        const auto k = module_kernel(e.module);
        return e.module.dim() == 2 && e.self_dual && k == std::vector<ElemId>{0, y2};
    });
    if (!U) {
        rep.check("faithful simple of G/O_2(G) found", false);
        return rep;
    }
    const BilinearForm uf = make_invariant_symplectic(U->module, seed);
    rep.check("U symplectic, dim 2", U->module.dim() == 2 && uf.is_alternating() && uf.is_nondegenerate());
    const BilinearForm V = orthogonal_sum(fg, uf);
    rep.data["dim_V"] = V.dim();
    rep.check("V faithful", module_kernel(V.module()).size() == 1);
    const bool hyp = detail::hyperbolic_all(V, seed, &d);
    rep.data["V_hyperbolic"] = hyp;
    rep.check("V = FG _|_ U not hyperbolic", !hyp, d);

    bool all_proper = true;
    io::json rs = io::json::array();
    for (const auto& H : two_generated_subgroups(*G)) {
        if (H.order() == G->order()) continue;
        const bool h = detail::hyperbolic_all(BilinearForm(restrict(V.module(), H), V.gram()), seed);
        rs.push_back({{"subgroup", detail::subgroup_name(*G, H)}, {"hyperbolic", h}});
        all_proper = all_proper && h;
    }
    rep.data["proper_restrictions"] = rs;
    rep.check("every proper subgroup restriction hyperbolic", all_proper, std::to_string(rs.size()) + " classes");
    return rep;
}

/// The 2-dimensional simple F_4[S_3]-module: not hyperbolic, but hyperbolic on C_3.
inline ReproReport repro_intro_f4s3(std::uint64_t seed = kDefaultSeed) {
    const Field f = make_field(2);
    ReproReport rep;
    rep.name = "intro-f4s3";
    auto G = std::make_shared<const PermGroup>(build_group(GroupSpec::symmetric(3)));
    const FactorMultiset simples = simple_modules(G, f, seed);
    const FactorEntry* W = detail::find_simple(simples, [](const FactorEntry& e) { return e.module.dim() == 2; });
    if (!W) {
        rep.check("2-dim simple found", false);
        return rep;
    }
    const BilinearForm form = make_invariant_symplectic(W->module, seed);
    rep.data = {{"q", 4}, {"dim_W", W->module.dim()}, {"gram", io::to_json(form.gram())}};
    rep.check("W symplectic", form.is_alternating() && form.is_nondegenerate() && form.is_invariant());
    std::string d;
    const bool w_hyp = detail::hyperbolic_all(form, seed, &d);
    rep.check("W not hyperbolic", !w_hyp, d);
    const Subgroup C3 = G->subgroup({G->generator(1)});
    const BilinearForm fc(restrict(W->module, C3), form.gram());
    const bool c3_hyp = detail::hyperbolic_all(fc, seed, &d);
    rep.check("W restricted to C_3 hyperbolic", c3_hyp, d);
    const Poly c = char_poly(W->module.image(1));
    rep.data["char_poly_3cycle"] = io::to_json(c);
    rep.check("3-cycle char poly x^2+x+1 is not a square",
              c == Poly(f, {1, 1, 1}) && !is_square_poly(c).square);
    return rep;
}

}  // namespace hypermod
