#include "hypermod/corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hypermod;

TEST_CASE("generated instances are symmetric G-modules", "[corpus]") {
    std::size_t expected_hyp = 0, expected_not = 0;
    for (const auto& cg : corpus_groups()) {
        for (unsigned k : corpus_field_degrees()) {
            const Field f = make_field(k);
            const PairContext ctx = PairContext::build(cg, f, kDefaultSeed);
            for (const auto& b : ctx.self_dual_forms) REQUIRE_NOTHROW(b.require_symmetric_module());
            for (std::uint64_t s = 0; s < 3; ++s) {
                const CorpusInstance inst = generate_instance(ctx, 1000 + s);
                REQUIRE(inst.form.dim() <= kCorpusMaxDim);
                REQUIRE(inst.form.dim() > 0);
                REQUIRE_NOTHROW(inst.form.require_symmetric_module());
                REQUIRE_FALSE(inst.recipe.empty());
                (inst.expect_hyperbolic ? expected_hyp : expected_not)++;
                const CorpusInstance again = generate_instance(ctx, 1000 + s);
                REQUIRE(again.form.gram() == inst.form.gram());
                REQUIRE(again.recipe == inst.recipe);
            }
        }
    }
    REQUIRE(expected_hyp > 10);
    REQUIRE(expected_not > 10);
}

TEST_CASE("F-special corpus groups", "[corpus][oracle]") {
    std::size_t special = 0;
    for (const auto& cg : corpus_groups())
        for (unsigned k : corpus_field_degrees()) {
            const PairContext ctx = PairContext::build(cg, make_field(k), kDefaultSeed);
            std::vector<ElemId> all(ctx.G->order());
            for (ElemId g = 0; g < all.size(); ++g) all[g] = g;
            INFO(cg.name << " over GF(" << (1u << k) << ")");
            REQUIRE(ctx.f_special_group == oracle::special_subgroup(*ctx.G, all, std::uint64_t{1} << k));
            if (ctx.f_special_group) {
                ++special;
                for (const auto& e : ctx.simples.entries) REQUIRE(e.self_dual);
            }
        }
    REQUIRE(special > 5);
}

TEST_CASE("small corpus run", "[corpus]") {
    CorpusOptions opt;
    opt.per_pair = 2;
    const io::json a = run_corpus(opt);
    const auto& s = a.at("summary");
    REQUIRE(s.at("instances") == 2 * corpus_groups().size() * corpus_field_degrees().size());
    REQUIRE(s.at("expectation_mismatch") == 0);
    REQUIRE(s.at("f_special_groups_all_simples_self_dual") == true);
    REQUIRE(corpus_passed(a));
    REQUIRE(run_corpus(opt).dump() == a.dump());

    opt.seed = 12345;
    opt.groups = {"S4", "C5xD6", "Dt12"};
    opt.per_pair = 4;
    const io::json b = run_corpus(opt);
    REQUIRE(b.at("summary").at("instances") == 36);
    REQUIRE(b.at("summary").at("expectation_mismatch") == 0);
    REQUIRE(corpus_passed(b));
}
