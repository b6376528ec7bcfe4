#include <map>

#include "hypermod/group.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hypermod;

namespace {

std::vector<std::pair<std::string, GroupSpec>> sample_specs() {
    using S = GroupSpec;
    return {{"C1", S::cyclic(1)},
            {"C7", S::cyclic(7)},
            {"C15", S::cyclic(15)},
            {"S3", S::symmetric(3)},
            {"S4", S::symmetric(4)},
            {"A4", S::alternating(4)},
            {"A5", S::alternating(5)},
            {"D10", S::dihedral(5)},
            {"Dt12", S::extended_dihedral(2, 3)},
            {"Dt24", S::extended_dihedral(3, 3)},
            {"C5xD6", S::direct_product({S::cyclic(5), S::dihedral(3)})},
            {"C3xC3", S::direct_product({S::cyclic(3), S::cyclic(3)})}};
}

std::size_t brute_class_count(const PermGroup& G) {
    std::set<std::vector<ElemId>> classes;
    for (ElemId g = 0; g < G.order(); ++g) {
        std::set<ElemId> c;
        for (ElemId h = 0; h < G.order(); ++h) c.insert(oracle::conj(G, g, h));
        classes.insert({c.begin(), c.end()});
    }
    return classes.size();
}

}  // namespace

TEST_CASE("builders produce groups of the presented order", "[group]") {
    for (const auto& [name, spec] : sample_specs()) {
        const PermGroup G = build_group(spec);
        INFO(name);
        REQUIRE(G.order() == expected_order(spec));
    }
    REQUIRE(build_group(GroupSpec::symmetric(5)).order() == 120);
    REQUIRE(build_group(GroupSpec::extended_dihedral(2, 3)).order() == 12);
    REQUIRE(build_group(GroupSpec::direct_product({GroupSpec::cyclic(5), GroupSpec::dihedral(3)})).order() == 30);
}

TEST_CASE("element table is a group under permutation composition", "[group]") {
    for (const auto& [name, spec] : sample_specs()) {
        const PermGroup G = build_group(spec);
        INFO(name);
        std::set<Perm> perms;
        for (ElemId a = 0; a < G.order(); ++a) {
            perms.insert(G.perm(a));
            REQUIRE(G.index_of(G.perm(a)) == a);
            REQUIRE(G.mul(a, G.inv(a)) == PermGroup::identity());
            Perm w = identity_perm(G.degree());
            for (auto s : G.word(a)) w = compose(w, G.generators()[s]);
            REQUIRE(w == G.perm(a));
        }
        REQUIRE(perms.size() == G.order());
        for (ElemId a = 0; a < G.order(); a += 1 + G.order() / 17)
            for (ElemId b = 0; b < G.order(); ++b) REQUIRE(G.perm(G.mul(a, b)) == compose(G.perm(a), G.perm(b)));
    }
}

TEST_CASE("conjugacy classes, reality and element orders against brute force", "[group]") {
    for (const auto& [name, spec] : sample_specs()) {
        const PermGroup G = build_group(spec);
        INFO(name);
        REQUIRE(G.class_representatives().size() == brute_class_count(G));
        for (ElemId g = 0; g < G.order(); ++g) {
            REQUIRE(G.element_order(g) == oracle::order(G, g));
            REQUIRE(G.is_real(g) == oracle::is_real(G, g));
            REQUIRE(oracle::order(G, G.odd_part(g)) % 2 == 1);
            REQUIRE(oracle::cyclic(G, g).size() % oracle::order(G, G.odd_part(g)) == 0);
        }
    }
    const PermGroup S4 = build_group(GroupSpec::symmetric(4));
    REQUIRE(S4.class_representatives().size() == 5);
    REQUIRE(build_group(GroupSpec::alternating(4)).class_representatives().size() == 4);
    REQUIRE(build_group(GroupSpec::dihedral(5)).class_representatives().size() == 4);
    REQUIRE(build_group(GroupSpec::extended_dihedral(2, 3)).class_representatives().size() == 6);
}

TEST_CASE("named elements and relations", "[group]") {
    const PermGroup Dt = build_group(GroupSpec::extended_dihedral(2, 3));
    const ElemId x = Dt.generator(0), y = Dt.generator(1);
    REQUIRE(Dt.element_order(x) == 3);
    REQUIRE(Dt.element_order(y) == 4);
    REQUIRE(Dt.conj(x, y) == Dt.inv(x));
    REQUIRE(Dt.element_order(PermGroup::identity()) == 1);
    for (ElemId g = 0; g < Dt.order(); ++g)
        if (Dt.element_order(g) == 6) REQUIRE(Dt.odd_part(g) == Dt.power(g, 2));

    const PermGroup S3 = build_group(GroupSpec::symmetric(3));
    const ElemId c3 = S3.index_of({1, 2, 0});
    REQUIRE(S3.is_real(c3));
    REQUIRE(S3.is_real(PermGroup::identity()));
    const PermGroup C7 = build_group(GroupSpec::cyclic(7));
    REQUIRE_FALSE(C7.is_real(C7.generator(0)));
}

TEST_CASE("normalizer data against brute force", "[group]") {
    for (const auto& [name, spec] : sample_specs()) {
        const PermGroup G = build_group(spec);
        INFO(name);
        for (ElemId g : G.class_representatives()) {
            const NormalizerData d = cyclic_normalizer_data(G, g);
            const auto gen = oracle::cyclic(G, g);
            std::size_t n = 0, c = 0;
            for (ElemId h = 0; h < G.order(); ++h) {
                n += std::find(gen.begin(), gen.end(), oracle::conj(G, g, h)) != gen.end();
                c += oracle::conj(G, g, h) == g;
            }
            REQUIRE(d.normalizer.size() == n);
            REQUIRE(d.centralizer.size() == c);
            REQUIRE(d.cosets.size() * c == n);
            for (const auto& [t, a] : d.cosets) REQUIRE(G.conj(g, t) == G.power(g, static_cast<std::int64_t>(a)));
        }
    }
    const PermGroup S3 = build_group(GroupSpec::symmetric(3));
    const NormalizerData d = cyclic_normalizer_data(S3, S3.index_of({1, 2, 0}));
    REQUIRE(d.normalizer.size() == 6);
    REQUIRE(d.centralizer.size() == 3);
    std::set<std::uint64_t> as;
    for (const auto& [t, a] : d.cosets) as.insert(a);
    REQUIRE(as == std::set<std::uint64_t>{1, 2});

    const PermGroup G = build_group(GroupSpec::direct_product({GroupSpec::cyclic(5), GroupSpec::dihedral(3)}));
    for (ElemId g = 0; g < G.order(); ++g) {
        if (G.element_order(g) != 15) continue;
        const NormalizerData nd = cyclic_normalizer_data(G, g);
        REQUIRE(nd.cosets.size() == 2);
        std::set<std::uint64_t> exps;
        for (const auto& [t, a] : nd.cosets) exps.insert(a);
        REQUIRE(exps == std::set<std::uint64_t>{1, 11});
    }
}

TEST_CASE("two-generated subgroups up to conjugacy", "[group]") {
    for (const auto& [name, spec] : sample_specs()) {
        const PermGroup G = build_group(spec);
        if (G.order() > 60) continue;
        INFO(name);
        const auto mine = two_generated_subgroups(G);
        const auto all = oracle::two_generated(G);
        std::vector<std::vector<ElemId>> reps;
        for (const auto& H : all) {
            bool seen = false;
            for (const auto& r : reps) seen = seen || oracle::conjugate_subgroups(G, H, r);
            if (!seen) reps.push_back(H);
        }
        REQUIRE(mine.size() == reps.size());
        for (const auto& H : mine) REQUIRE(oracle::closure(G, H.generators) == H.elements);
    }
    REQUIRE(two_generated_subgroups(build_group(GroupSpec::symmetric(3))).size() == 4);
    REQUIRE(two_generated_subgroups(build_group(GroupSpec::symmetric(4))).size() == 11);
    REQUIRE(two_generated_subgroups(build_group(GroupSpec::alternating(4))).size() == 5);
}

TEST_CASE("group construction errors", "[group]") {
    REQUIRE_ERROR_CODE(build_group(GroupSpec::symmetric(7), 1000), ErrorCode::GroupTooLarge);
    REQUIRE_ERROR_CODE(build_group(GroupSpec::cyclic(0)), ErrorCode::InvalidSpec);
    REQUIRE_ERROR_CODE(build_group(GroupSpec::extended_dihedral(1, 4)), ErrorCode::InvalidSpec);
    REQUIRE_ERROR_CODE(build_group(GroupSpec::raw(3, {{0, 0, 1}})), ErrorCode::InvalidSpec);
    const PermGroup S3 = build_group(GroupSpec::symmetric(3));
    REQUIRE_ERROR_CODE(S3.index_of({0, 1, 2, 3}), ErrorCode::NotASubgroupElement);
}
