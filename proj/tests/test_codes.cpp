#include <bitset>
#include <set>

#include "hypermod/codes.hpp"
#include "support.hpp"

using namespace hypermod;

namespace {

using Word = std::uint32_t;
using CodeSet = std::bitset<256>;  // membership of every word of length <= 8

// All self-dual codes of length n as codeword sets, grown one word at a time from {0}.
std::set<std::string> brute_selfdual(std::size_t n) {
    const Word limit = Word{1} << n;
    auto orth = [](Word a, Word b) { return (__builtin_popcount(a & b) & 1) == 0; };
    std::set<std::string> level = {[] {
        CodeSet c;
        c.set(0);
        return c.to_string();
    }()};
    for (std::size_t k = 0; k < n / 2; ++k) {
        std::set<std::string> next;
        for (const auto& key : level) {
            const CodeSet c(key);
            std::vector<Word> words;
            for (Word w = 0; w < limit; ++w)
                if (c.test(w)) words.push_back(w);
            for (Word v = 1; v < limit; ++v) {
                if (c.test(v) || !orth(v, v)) continue;
                bool ok = true;
                for (Word w : words) ok = ok && orth(v, w);
                if (!ok) continue;
                CodeSet d = c;
                for (Word w : words) d.set(w ^ v);
                next.insert(d.to_string());
            }
        }
        level = std::move(next);
    }
    return level;
}

std::string as_set(const BinaryCode& code) {
    CodeSet c;
    const auto rows = code.rows();
    std::vector<Word> basis;
    for (const auto& r : rows) {
        Word w = 0;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] == '1') w |= Word{1} << j;
        basis.push_back(w);
    }
    for (Word mask = 0; mask < (Word{1} << basis.size()); ++mask) {
        Word w = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask >> i & 1) w ^= basis[i];
        c.set(w);
    }
    return c.to_string();
}

bool set_invariant(const std::string& key, const Perm& p) {
    const CodeSet c(key);
    for (Word w = 0; w < (Word{1} << p.size()); ++w) {
        if (!c.test(w)) continue;
        Word img = 0;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (w >> j & 1) img |= Word{1} << p[j];
        if (!c.test(img)) return false;
    }
    return true;
}

GroupPtr cyclic_on(const Perm& p) { return std::make_shared<const PermGroup>(build_group(GroupSpec::raw(p.size(), {p}))); }

}  // namespace

TEST_CASE("cycle types", "[codes]") {
    REQUIRE(cycle_type({0, 1, 2, 3, 4, 5}) == CycleType{{1, 6}});
    REQUIRE(cycle_type({1, 2, 0, 4, 5, 3}) == CycleType{{3, 2}});
    REQUIRE(cycle_type({1, 2, 0, 3, 4, 5}) == CycleType{{1, 3}, {3, 1}});
    REQUIRE(to_string(CycleType{{1, 3}, {3, 1}}) == "{1:3, 3:1}");
}

TEST_CASE("enumerated self-dual codes match an independent codeword-set search", "[codes][oracle]") {
    const std::vector<std::uint64_t> counts = {1, 1, 3, 15, 135, 2295, 75735};
    for (std::size_t n = 2; n <= 8; n += 2) {
        const auto mine = enumerate_selfdual_codes(n);
        const auto brute = brute_selfdual(n);
        INFO("n = " << n);
        REQUIRE(brute.size() == counts[n / 2]);
        REQUIRE(mine.size() == brute.size());
        REQUIRE(selfdual_code_count(n) == counts[n / 2]);
        std::set<std::string> mine_sets;
        for (const auto& c : mine) {
            REQUIRE(c.is_self_dual());
            mine_sets.insert(as_set(c));
        }
        REQUIRE(mine_sets == brute);
    }
    REQUIRE(enumerate_selfdual_codes(10).size() == counts[5]);
    REQUIRE(selfdual_code_count(12) == counts[6]);
    REQUIRE_ERROR_CODE(enumerate_selfdual_codes(5), ErrorCode::OddLength);
    REQUIRE_ERROR_CODE(enumerate_selfdual_codes(14), ErrorCode::LengthTooLarge);
}

TEST_CASE("code_exists on every cyclic subgroup of S_n matches the enumeration", "[codes][oracle]") {
    for (std::size_t n : {2, 4, 6, 8}) {
        const auto codes = brute_selfdual(n);
        const PermGroup Sn = build_group(GroupSpec::symmetric(n));
        for (ElemId r : Sn.class_representatives()) {
            const Perm sigma = Sn.perm(r);
            const GroupPtr H = cyclic_on(sigma);
            bool oracle = false;
            for (const auto& c : codes) oracle = oracle || set_invariant(c, sigma);
            INFO("n=" << n << " cycle type " << to_string(cycle_type(sigma)));
            REQUIRE(code_exists(*H).exists == oracle);
            if (oracle) {
                const BinaryCode c = construct_code(H, 11);
                REQUIRE(c.is_self_dual());
                REQUIRE(c.is_invariant(sigma));
                REQUIRE(codes.count(as_set(c)) == 1);
            } else {
                REQUIRE_ERROR_CODE(construct_code(H, 11), ErrorCode::InvalidArgument);
            }
        }
    }
}

TEST_CASE("code existence for larger groups agrees with enumeration", "[codes][oracle]") {
    const auto codes8 = brute_selfdual(8);
    const std::vector<std::vector<Perm>> groups = {
        {{1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 0, 1, 6, 7, 4, 5}},
        {{1, 2, 0, 4, 5, 3, 6, 7}, {3, 4, 5, 0, 1, 2, 7, 6}},
        {{1, 2, 3, 4, 5, 6, 0, 7}},
        {{1, 2, 0, 3, 4, 5, 6, 7}, {0, 1, 2, 4, 5, 3, 6, 7}},
        {{1, 0, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 7, 6}},
    };
    for (const auto& gens : groups) {
        const auto G = std::make_shared<const PermGroup>(build_group(GroupSpec::raw(8, gens)));
        bool oracle = false;
        for (const auto& c : codes8) {
            bool inv = true;
            for (const auto& g : gens) inv = inv && set_invariant(c, g);
            oracle = oracle || inv;
        }
        REQUIRE(code_exists(*G).exists == oracle);
        if (oracle) {
            const BinaryCode c = construct_code(G);
            for (const auto& g : gens) REQUIRE(c.is_invariant(g));
            REQUIRE(c.is_self_dual());
        }
    }
}

TEST_CASE("worked code cases", "[codes]") {
    const GroupPtr g6 = cyclic_on({1, 2, 0, 4, 5, 3});
    const CodeVerdict v = code_exists(*g6);
    REQUIRE(v.exists);
    const BinaryCode c = construct_code(g6);
    REQUIRE(c.is_self_dual());
    REQUIRE(c.is_invariant({1, 2, 0, 4, 5, 3}));

    const GroupPtr odd = cyclic_on({1, 2, 0});
    const CodeVerdict w = code_exists(*odd);
    REQUIRE_FALSE(w.exists);
    REQUIRE(w.sigma);

    const GroupPtr swap = cyclic_on({1, 0});
    REQUIRE(code_exists(*swap).exists);
    REQUIRE(construct_code(swap).rows() == std::vector<std::string>{"11"});
    const GroupPtr triv2 = cyclic_on({0, 1});
    REQUIRE(construct_code(triv2).rows() == std::vector<std::string>{"11"});
    const auto four = enumerate_selfdual_codes(4);
    const BinaryCode t4 = construct_code(cyclic_on({0, 1, 2, 3}));
    REQUIRE(std::find(four.begin(), four.end(), t4) != four.end());
}
