/**
 * @file corpus.hpp
 * @brief Generated symmetric modules over a fixed list of groups and fields,
 *        and the runner that checks the four hyperbolicity criteria on them.
 *
 * Instance i of a run with seed s is generated from seed s ^ i, so a run is a
 * pure function of (seed, per-pair count).
 */
#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "repro.hpp"

namespace hypermod {

struct CorpusGroup {
    std::string name;
    GroupSpec spec;
};

inline std::vector<CorpusGroup> corpus_groups() {
    using S = GroupSpec;
    return {
        {"C1", S::cyclic(1)},
        {"C3", S::cyclic(3)},
        {"C5", S::cyclic(5)},
        {"C7", S::cyclic(7)},
        {"C9", S::cyclic(9)},
        {"C15", S::cyclic(15)},
        {"S3", S::symmetric(3)},
        {"S4", S::symmetric(4)},
        {"A4", S::alternating(4)},
        {"D10", S::dihedral(5)},
        {"D14", S::dihedral(7)},
        {"Dt12", S::extended_dihedral(2, 3)},
        {"Dt20", S::extended_dihedral(2, 5)},
        {"C5xD6", S::direct_product({S::cyclic(5), S::dihedral(3)})},
    };
}

inline const std::vector<unsigned>& corpus_field_degrees() {
    static const std::vector<unsigned> ks = {1, 2, 3};
    return ks;
}

inline constexpr std::size_t kCorpusMaxDim = 24;

/// Everything about one (group, field) pair that instances share.
struct PairContext {
    std::string group_name;
    GroupPtr G;
    Field field;
    Representation regular;
    FactorMultiset simples;
    std::vector<BilinearForm> self_dual_forms;  // one per self-dual simple
    CriteriaContext criteria;
    bool f_special_group = false;

    static PairContext build(const CorpusGroup& cg, const Field& f, std::uint64_t seed) {
        auto G = std::make_shared<const PermGroup>(build_group(cg.spec));
        Representation regular = regular_module(G, f);
        FactorMultiset simples = composition_factors(regular, seed);
        std::vector<BilinearForm> forms;
        for (const auto& e : simples.entries) {
            if (!e.self_dual) continue;
            const bool trivial = e.module.dim() == 1 && module_kernel(e.module).size() == G->order();
            // the trivial module carries the symmetric form x*y; every other self-dual simple is symplectic
            forms.push_back(trivial ? BilinearForm(e.module, Matrix::identity(f, 1)) : make_invariant_symplectic(e.module, seed));
        }
        const std::uint64_t q = f.size();
        PairContext ctx{cg.name, G, f, std::move(regular), std::move(simples), std::move(forms), CriteriaContext::build(*G, q)};
        for (const auto& [s, H] : ctx.criteria.special_subgroups)
            if (s.group.order() == G->order()) ctx.f_special_group = true;
        return ctx;
    }
};

namespace detail {

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto& x : m.row(i)) x = static_cast<Elem>(rng() % f.size());
        if (is_invertible(m)) return m;
    }
}

// Simple summands drawn at random until the dimension budget is used up.
inline std::optional<Representation> random_semisimple(const PairContext& ctx, std::size_t budget, std::mt19937_64& rng,
                                                       std::string& recipe) {
    std::optional<Representation> M;
    const std::size_t parts = 1 + rng() % 3;
    for (std::size_t i = 0; i < parts; ++i) {
        const auto& e = ctx.simples.entries[rng() % ctx.simples.entries.size()];
        const std::size_t d = e.module.dim();
        if ((M ? M->dim() : 0) + d > budget) continue;
        M = M ? module_sum(*M, e.module) : e.module;
        recipe += (recipe.empty() ? "" : "+") + std::string("S") + std::to_string(d);
    }
    return M;
}

// Cyclic submodule of the regular module spun from a sparse random vector.
inline std::optional<Representation> random_cyclic(const PairContext& ctx, std::size_t budget, std::mt19937_64& rng,
                                                   std::string& recipe) {
    const Representation& R = ctx.regular;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Vec v(R.dim(), 0);
        const std::size_t support = 1 + rng() % 3;
        for (std::size_t i = 0; i < support; ++i) v[rng() % R.dim()] = static_cast<Elem>(1 + rng() % (ctx.field.size() - 1));
        if (Subspace::is_zero(v)) continue;
        const Subspace s = spin(R, {v});
        if (s.dim() > budget) continue;
        const Echelon e = row_echelon(Matrix::from_rows(ctx.field, R.dim(), s.rows()));
        recipe += "spin" + std::to_string(s.dim());
        return submodule(R, e);
    }
    return std::nullopt;
}

}  // namespace detail

struct CorpusInstance {
    BilinearForm form;
    std::string recipe;
    bool expect_hyperbolic = false;  // from the construction: extras pair up
};

/// M + M* with the hyperbolic pairing, optionally _|_ self-dual simples with
/// their invariant forms, written in a random basis.
inline CorpusInstance generate_instance(const PairContext& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Field& f = ctx.field;

    std::vector<std::size_t> extras;
    std::size_t extra_dim = 0;
    const std::size_t n_extra = ctx.self_dual_forms.empty() ? 0 : rng() % 3;
    for (std::size_t i = 0; i < n_extra; ++i) {
        const std::size_t k = rng() % ctx.self_dual_forms.size();
        if (extra_dim + ctx.self_dual_forms[k].dim() > kCorpusMaxDim / 2) continue;
        extras.push_back(k);
        extra_dim += ctx.self_dual_forms[k].dim();
    }
    const std::size_t budget = (kCorpusMaxDim - extra_dim) / 2;

    std::string recipe;
    std::optional<Representation> M;
    if (rng() % 2) M = detail::random_cyclic(ctx, budget, rng, recipe);
    if (!M) M = detail::random_semisimple(ctx, budget, rng, recipe);
    if (!M) {
        M = ctx.simples.entries.front().module;
        recipe = "S" + std::to_string(M->dim());
    }

    const std::size_t m = M->dim();
    Matrix pair(f, 2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) pair(i, m + i) = pair(m + i, i) = 1;
    BilinearForm form(module_sum(*M, dual_module(*M)), std::move(pair));
    recipe = "(" + recipe + ")+dual";

    std::vector<std::size_t> count(ctx.self_dual_forms.size(), 0);
    for (auto k : extras) {
        form = orthogonal_sum(form, ctx.self_dual_forms[k]);
        ++count[k];
        recipe += " _|_ T" + std::to_string(k) + "(dim " + std::to_string(ctx.self_dual_forms[k].dim()) + ")";
    }
    bool expect = true;
    for (auto c : count) expect = expect && c % 2 == 0;

    form = change_basis(form, detail::random_invertible(f, form.dim(), rng));
    return {std::move(form), std::move(recipe), expect};
}

struct CorpusOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t per_pair = 50;
    std::vector<std::string> groups;  // empty: all
    std::function<void(const std::string&)> progress;
};

/// Runs every instance and returns a JSON report; the report contains no
/// timings, so equal options give byte-identical output.
inline io::json run_corpus(const CorpusOptions& opt) {
    using io::json;
    json pairs = json::array();
    std::size_t index = 0, total = 0, agree = 0, hyperbolic = 0, constructed = 0, construction_failures = 0,
                errors = 0, expectation_mismatch = 0;
    bool self_duality_ok = true;
    for (const auto& cg : corpus_groups()) {
        const bool selected =
            opt.groups.empty() || std::find(opt.groups.begin(), opt.groups.end(), cg.name) != opt.groups.end();
        for (unsigned k : corpus_field_degrees()) {
            const Field f = make_field(k);
            if (!selected) {
                index += opt.per_pair;
                continue;
            }
            const PairContext ctx = PairContext::build(cg, f, derive_seed(opt.seed, index));
            json simples = json::array();
            bool all_sd = true;
            for (const auto& e : ctx.simples.entries) {
                simples.push_back({{"dim", e.module.dim()}, {"self_dual", e.self_dual}});
                all_sd = all_sd && e.self_dual;
            }
            if (ctx.f_special_group && !all_sd) self_duality_ok = false;
            json instances = json::array();
            std::size_t pair_hyp = 0;
            for (std::size_t i = 0; i < opt.per_pair; ++i, ++index) {
                const std::uint64_t s = opt.seed ^ index;
                json item = {{"index", index}};
                ++total;
                try {
                    const CorpusInstance inst = generate_instance(ctx, s);
                    item["dim"] = inst.form.dim();
                    item["recipe"] = inst.recipe;
                    const FactorMultiset fm = composition_factors(inst.form.module(), s);
                    std::vector<HyperbolicVerdict> vs;
                    vs.push_back(hyperbolic_by_charpoly(inst.form.module(), ctx.criteria.special_reps));
                    vs.push_back(hyperbolic_by_multiplicity(fm));
                    vs.push_back(hyperbolic_by_subgroups(inst.form.module(), ctx.criteria.special_subgroups, s));
                    try {
                        vs.push_back(hyperbolic_by_construction(inst.form, simple_types(fm)));
                    } catch (const Error& e) {
                        if (e.code() != ErrorCode::ConstructionFailed) throw;
                        ++construction_failures;
                        item["construction_failure"] = e.what();
                        auto v = HyperbolicVerdict::of(HyperbolicMethod::Construct, false);
                        v.kernel_dim = inst.form.dim();
                        vs.push_back(v);
                    }
                    json verdicts = json::object();
                    bool same = true;
                    for (const auto& v : vs) {
                        verdicts[to_string(v.method)] = v.hyperbolic;
                        same = same && v.hyperbolic == vs.front().hyperbolic;
                    }
                    item["verdicts"] = verdicts;
                    item["agree"] = same;
                    item["kernel_dim"] = vs.back().kernel_dim;
                    item["factors"] = io::to_json(fm);
                    if (same) ++agree;
                    if (vs.front().hyperbolic) {
                        ++hyperbolic;
                        ++pair_hyp;
                        if (vs.back().witness) ++constructed;
                    }
                    if (vs.front().hyperbolic != inst.expect_hyperbolic) ++expectation_mismatch;
                } catch (const Error& e) {
                    ++errors;
                    item["error"] = std::string(to_string(e.code())) + ": " + e.what();
                }
                instances.push_back(std::move(item));
            }
            pairs.push_back({{"group", cg.name},
                             {"field", f.name()},
                             {"group_order", ctx.G->order()},
                             {"f_special_group", ctx.f_special_group},
                             {"simples", simples},
                             {"instances", instances.size()},
                             {"hyperbolic", pair_hyp},
                             {"items", instances}});
            if (opt.progress) opt.progress(cg.name + " over " + f.name());
        }
    }
    json summary = {{"seed", opt.seed},
                    {"per_pair", opt.per_pair},
                    {"instances", total},
                    {"criteria_agree", agree},
                    {"hyperbolic", hyperbolic},
                    {"constructed", constructed},
                    {"construction_failures", construction_failures},
                    {"errors", errors},
                    {"expectation_mismatch", expectation_mismatch},
                    {"f_special_groups_all_simples_self_dual", self_duality_ok}};
    return {{"summary", summary}, {"pairs", pairs}};
}

/// True when every instance agreed, every hyperbolic instance was constructed
/// and nothing errored.
inline bool corpus_passed(const io::json& report) {
    const auto& s = report.at("summary");
    const auto n = s.at("instances").get<std::size_t>();
    return n > 0 && s.at("criteria_agree").get<std::size_t>() == n && s.at("errors").get<std::size_t>() == 0 &&
           s.at("construction_failures").get<std::size_t>() == 0 &&
           s.at("constructed").get<std::size_t>() == s.at("hyperbolic").get<std::size_t>();
}

}  // namespace hypermod
