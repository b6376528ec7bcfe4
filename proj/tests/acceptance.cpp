// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

#include "hypermod/corpus.hpp"
#include "oracles.hpp"

using namespace hypermod;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail.clear();
        if (!detail.empty()) detail += "; ";
        detail += what;
        pass = false;
    }
};

int failures = 0;

void report(int id, const char* title, const Outcome& o, double secs) {
    std::printf("[%s] %d. %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : " :: ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::string num(std::size_t n) { return std::to_string(n); }

// ---------------------------------------------------------------------------

std::size_t summary(const io::json& r, const char* key) { return r.at("summary").at(key).get<std::size_t>(); }

Outcome corpus_equivalence(const io::json& r, double secs) {
    Outcome o;
    const std::size_t n = summary(r, "instances");
    const std::size_t expected = corpus_groups().size() * corpus_field_degrees().size() * 50;
    o.require(n == expected, "instances " + num(n) + " != " + num(expected));
    o.require(summary(r, "criteria_agree") == n, "criteria agree on " + num(summary(r, "criteria_agree")) + "/" + num(n));
    o.require(summary(r, "errors") == 0, num(summary(r, "errors")) + " errors");
    o.require(summary(r, "expectation_mismatch") == 0,
              num(summary(r, "expectation_mismatch")) + " verdicts differ from the construction");
    for (const auto& p : r.at("pairs"))
        for (const auto& it : p.at("items"))
            o.require(it.value("dim", std::size_t{0}) <= kCorpusMaxDim, "instance above the dimension cap");
    o.require(secs < 600, "runtime over 600 s");
    if (o.pass)
        o.detail = num(n) + " instances, " + num(summary(r, "hyperbolic")) + " hyperbolic, all four criteria agree";
    return o;
}

Outcome check_repro(const ReproReport& rep, const std::map<std::string, std::uint64_t>& data,
                    const std::vector<std::string>& required, double secs) {
    Outcome o;
    for (const auto& c : rep.checks) o.require(c.pass, c.name + " (" + c.detail + ")");
    for (const auto& [k, v] : data)
        o.require(rep.data.contains(k) && rep.data.at(k) == v, k + " != " + std::to_string(v));
    for (const auto& name : required) {
        bool found = false;
        for (const auto& c : rep.checks) found = found || c.name == name;
        o.require(found, "missing check \"" + name + "\"");
    }
    o.require(secs < 1.0, "runtime over 1 s");
    if (o.pass) o.detail = num(rep.checks.size()) + " checks";
    return o;
}

// ---------------------------------------------------------------------------

Outcome code_existence() {
    Outcome o;
    const std::map<std::size_t, std::size_t> counts = {{2, 1}, {4, 3}, {6, 15}, {8, 135}};
    std::size_t classes = 0;
    for (const auto& [n, count] : counts) {
        // number of self-dual codes of length n: prod_{i=1}^{n/2-1} (2^i + 1)
        std::size_t formula = 1;
        for (std::size_t i = 1; i < n / 2; ++i) formula *= (std::size_t{1} << i) + 1;
        const auto codes = enumerate_selfdual_codes(n);
        o.require(codes.size() == count && formula == count,
                  "n=" + num(n) + ": enumerated " + num(codes.size()) + ", expected " + num(count));
        const PermGroup Sn = build_group(GroupSpec::symmetric(n));
        for (ElemId r : Sn.class_representatives()) {
            ++classes;
            const Perm sigma = Sn.perm(r);
            const PermGroup H = build_group(GroupSpec::raw(n, {sigma}));
            bool oracle = false;
            for (const auto& c : codes) oracle = oracle || c.is_invariant(sigma);
            o.require(code_exists(H).exists == oracle, "n=" + num(n) + " cycle type " + to_string(cycle_type(sigma)));
        }
    }
    if (o.pass) o.detail = num(classes) + " classes; counts 1, 3, 15, 135";
    return o;
}

// ---------------------------------------------------------------------------

bool in_span(const Matrix& W, const Vec& v) {
    std::vector<Vec> rows = W.row_list();
    rows.push_back(v);
    return rank(Matrix::from_rows(W.field(), W.cols(), rows)) == rank(W);
}

// W = W^perp and W invariant, checked directly on the basis.
bool verify_self_perpendicular(const BilinearForm& form, const Matrix& W) {
    const std::size_t n = form.dim();
    if (W.cols() != n || rank(W) != n / 2 || 2 * W.rows() != n) return false;
    if (!(W * form.gram() * W.transpose()).is_zero()) return false;
    for (const auto& rho : form.module().images()) {
        const Matrix Wr = W * rho;
        for (std::size_t i = 0; i < Wr.rows(); ++i)
            if (!in_span(W, Wr.row_vec(i))) return false;
    }
    return true;
}

Outcome constructive_completeness(const io::json& r, std::uint64_t seed) {
    Outcome o;
    o.require(summary(r, "construction_failures") == 0, num(summary(r, "construction_failures")) + " ConstructionFailed");
    o.require(summary(r, "constructed") == summary(r, "hyperbolic"),
              "constructed " + num(summary(r, "constructed")) + "/" + num(summary(r, "hyperbolic")));

    std::size_t index = 0, verified = 0, hyperbolic = 0;
    for (const auto& cg : corpus_groups())
        for (unsigned k : corpus_field_degrees()) {
            const PairContext ctx = PairContext::build(cg, make_field(k), derive_seed(seed, index));
            for (std::size_t i = 0; i < 50; ++i, ++index) {
                const std::uint64_t s = seed ^ index;
                const CorpusInstance inst = generate_instance(ctx, s);
                const FactorMultiset fm = composition_factors(inst.form.module(), s);
                if (!hyperbolic_by_multiplicity(fm).hyperbolic) continue;
                ++hyperbolic;
                try {
                    const Matrix W = construct_self_perpendicular(inst.form, simple_types(fm));
                    if (verify_self_perpendicular(inst.form, W))
                        ++verified;
                    else
                        o.require(false, "instance " + num(index) + " failed verification");
                } catch (const Error& e) {
                    o.require(false, "instance " + num(index) + ": " + e.what());
                }
            }
        }

    std::size_t codes = 0;
    for (std::size_t n : {2, 4, 6, 8}) {
        const PermGroup Sn = build_group(GroupSpec::symmetric(n));
        for (ElemId r : Sn.class_representatives()) {
            const Perm sigma = Sn.perm(r);
            auto H = std::make_shared<const PermGroup>(build_group(GroupSpec::raw(n, {sigma})));
            if (!code_exists(*H).exists) continue;
            try {
                const BinaryCode c = construct_code(H);
                const Matrix& g = c.generator_matrix();
                bool ok = 2 * g.rows() == n && (g * g.transpose()).is_zero();
                for (std::size_t i = 0; i < g.rows(); ++i) {
                    Vec moved(n);
                    for (std::size_t j = 0; j < n; ++j) moved[sigma[j]] = g(i, j);
                    ok = ok && in_span(g, moved);
                }
                o.require(ok, "code for n=" + num(n) + " " + to_string(cycle_type(sigma)) + " failed verification");
                ++codes;
            } catch (const Error& e) {
                o.require(false, std::string("construct_code: ") + e.what());
            }
        }
    }
    o.require(hyperbolic == summary(r, "hyperbolic"), "hyperbolic count differs on regeneration");
    if (o.pass) o.detail = num(verified) + "/" + num(hyperbolic) + " hyperbolic instances and " + num(codes) + " codes verified";
    return o;
}

// ---------------------------------------------------------------------------
// Property suites with local reference implementations.

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned k) {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k; ++i)
        if (b >> i & 1) r ^= a << i;
    for (int bit = 2 * static_cast<int>(k) - 2; bit >= static_cast<int>(k); --bit)
        if (r >> bit & 1) r ^= modulus << (bit - k);
    return r;
}

bool field_properties() {
    bool ok = true;
    for (unsigned k = 1; k <= 8; ++k) {
        const Field f = make_field(k);
        const Elem q = static_cast<Elem>(f.size());
        for (Elem a = 0; a < q; ++a) {
            ok = ok && f.mul(a, 1) == a && f.mul(a, 0) == 0;
            if (a) ok = ok && f.mul(a, f.inv(a)) == 1;
            ok = ok && f.mul(f.sqrt(a), f.sqrt(a)) == a;
            for (Elem b = 0; b < q; ++b) {
                const Elem ab = f.mul(a, b);
                ok = ok && ab == slow_mul(a, b, detail::kConwayModulus[k], k) && ab == f.mul(b, a);
                ok = ok && f.mul(a ^ b, a ^ b) == (f.mul(a, a) ^ f.mul(b, b));
                for (Elem c = 0; c < q; ++c)
                    ok = ok && f.mul(ab, c) == f.mul(a, f.mul(b, c)) && f.mul(a, b ^ c) == (ab ^ f.mul(a, c));
            }
        }
    }
    return ok;
}

// Monic irreducibles up to max_deg: all monic polynomials minus all products.
std::vector<Poly> sieve_irreducibles(const Field& f, int max_deg) {
    std::vector<std::vector<Poly>> by_deg(max_deg + 1);
    for (int d = 1; d <= max_deg; ++d) {
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= f.size();
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<Elem> c(d + 1, 1);
            std::uint64_t x = code;
            for (int i = 0; i < d; ++i, x /= f.size()) c[i] = static_cast<Elem>(x % f.size());
            by_deg[d].emplace_back(f, c);
        }
    }
    std::set<std::vector<Elem>> reducible;
    for (int a = 1; a <= max_deg; ++a)
        for (int b = a; a + b <= max_deg; ++b)
            for (const auto& p : by_deg[a])
                for (const auto& r : by_deg[b]) reducible.insert((p * r).coeffs());
    std::vector<Poly> out;
    for (int d = 1; d <= max_deg; ++d)
        for (const auto& p : by_deg[d])
            if (!reducible.count(p.coeffs())) out.push_back(p);
    return out;
}

std::size_t square_poly_mismatches(std::mt19937_64& rng) {
    struct Setup {
        Field f;
        std::vector<Poly> irr;
    };
    std::vector<Setup> fields;
    fields.push_back({make_field(1), sieve_irreducibles(make_field(1), 6)});
    fields.push_back({make_field(2), sieve_irreducibles(make_field(2), 4)});
    fields.push_back({make_field(3), sieve_irreducibles(make_field(3), 3)});
    std::size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
        const Setup& s = fields[t % 3];
        std::map<std::size_t, unsigned> mult;
        int deg = 0;
        const int target = 1 + static_cast<int>(rng() % 12);
        const bool want_square = rng() % 2;
        for (int guard = 0; guard < 64 && deg < target; ++guard) {
            const std::size_t i = rng() % s.irr.size();
            const unsigned m = want_square ? 2 : 1 + static_cast<unsigned>(rng() % 3);
            const int d = s.irr[i].degree() * static_cast<int>(m);
            if (deg + d > 12) continue;
            mult[i] += m;
            deg += d;
        }
        Poly c = Poly::constant(s.f, static_cast<Elem>(1 + rng() % (s.f.size() - 1)));
        bool square = true;
        for (const auto& [i, m] : mult) {
            c = c * power(s.irr[i], m);
            square = square && m % 2 == 0;
        }
        const SquareTest r = is_square_poly(c);
        if (r.square != square || (r.square && !(r.witness && *r.witness * *r.witness == c))) ++bad;
    }
    return bad;
}

unsigned v2(std::uint64_t n) {
    unsigned v = 0;
    for (; n % 2 == 0; n /= 2) ++v;
    return v;
}

std::size_t omega_mismatches(std::mt19937_64& rng) {
    std::size_t bad = 0;
    for (int checked = 0; checked < 1000;) {
        const std::uint64_t m = 2 * (rng() % 1500) + 1, n = 2 * (rng() % 1500) + 1;
        if (std::gcd(m, n) != 1) continue;
        for (std::uint64_t q : {2, 4, 8}) {
            const unsigned w = v2(oracle::ord(m * n, q));
            if (w != std::max(v2(oracle::ord(m, q)), v2(oracle::ord(n, q))) || omega_q(m * n, q) != w) ++bad;
        }
        ++checked;
    }
    return bad;
}

bool faithful(const Representation& M) {
    const auto imgs = M.all_images();
    for (ElemId g = 1; g < M.group().order(); ++g)
        if (imgs[g] == Matrix::identity(M.field(), M.dim())) return false;
    return true;
}

Outcome property_suites(std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    o.require(field_properties(), "field axioms, sqrt or Frobenius");
    const std::size_t sq = square_poly_mismatches(rng);
    o.require(sq == 0, num(sq) + "/1000 is_square_poly mismatches");
    const std::size_t om = omega_mismatches(rng);
    o.require(om == 0, num(om) + " omega max-law mismatches");

    for (std::uint64_t n : {3, 5, 7, 9, 15}) {
        const auto G = std::make_shared<const PermGroup>(build_group(GroupSpec::cyclic(n)));
        for (unsigned k : {1u, 2u, 3u}) {
            const Field f = make_field(k);
            std::size_t count = 0;
            for (const auto& e : composition_factors(regular_module(G, f), seed).entries) {
                if (!faithful(e.module)) continue;
                ++count;
                o.require(e.module.dim() == oracle::ord(n, f.size()),
                          "faithful simple of C" + num(n) + " over " + f.name() + " has dim " + num(e.module.dim()));
            }
            o.require(count > 0, "no faithful simple for C" + num(n) + " over " + f.name());
        }
    }

    std::size_t special = 0;
    for (const auto& cg : corpus_groups())
        for (unsigned k : corpus_field_degrees()) {
            const Field f = make_field(k);
            const auto G = std::make_shared<const PermGroup>(build_group(cg.spec));
            std::vector<ElemId> all(G->order());
            std::iota(all.begin(), all.end(), ElemId{0});
            if (!oracle::special_subgroup(*G, all, f.size())) continue;
            ++special;
            for (const auto& e : composition_factors(regular_module(G, f), seed).entries)
                o.require(simple_iso(e.module, dual_module(e.module)),
                          cg.name + " over " + f.name() + ": simple of dim " + num(e.module.dim()) + " not self-dual");
        }
    o.require(special > 0, "no F-special corpus group");
    if (o.pass) o.detail = "fields k<=8, 1000 square tests, 1000 omega pairs, 15 cyclic cases, " + num(special) +
                           " F-special (group, field) pairs";
    return o;
}

}  // namespace

int main() {
    std::printf("hypermod acceptance\n");
    CorpusOptions opt;
    opt.per_pair = 50;

    auto t0 = Clock::now();
    const io::json first = run_corpus(opt);
    const double corpus_secs = seconds_since(t0);
    report(1, "corpus: CharPoly, Multiplicity, SpecialSubgroups, Construct agree", corpus_equivalence(first, corpus_secs),
           corpus_secs);

    t0 = Clock::now();
    {
        Outcome o;
        try {
            const ReproReport rep = repro_cp_times_dihedral(4);
            o = check_repro(rep, {{"p", 5}, {"r", 3}, {"dim_V", 4}},
                            {"V symplectic", "V not hyperbolic", "V restricted to B = D_2r hyperbolic",
                             "V restricted to C x N hyperbolic", "V restricted to C x <t> hyperbolic"},
                            seconds_since(t0));
        } catch (const Error& e) {
            o.require(false, e.what());
        }
        report(2, "C5 x D6 over GF(4): V = U (x) W symplectic, not hyperbolic, maximal restrictions hyperbolic", o,
               seconds_since(t0));
    }

    t0 = Clock::now();
    {
        Outcome o;
        try {
            const ReproReport rep = repro_extended_dihedral(4);
            o = check_repro(rep, {{"p", 3}, {"dim_FG", 12}},
                            {"char poly of nontrivial odd elements on FG is (x^p+1)^4", "FG hyperbolic",
                             "V = FG _|_ U not hyperbolic", "every proper subgroup restriction hyperbolic"},
                            seconds_since(t0));
            const Field f4 = make_field(2);
            const Poly expected = power(power(Poly::x(f4), 3) + Poly::constant(f4, 1), 4);
            o.require(rep.data.at("char_poly_odd") == io::to_json(expected), "char poly is not (x^3+1)^4");
        } catch (const Error& e) {
            o.require(false, e.what());
        }
        report(3, "Dt12 over GF(4): odd char polys (x^3+1)^4, FG hyperbolic, FG _|_ U not, proper restrictions hyperbolic",
               o, seconds_since(t0));
    }

    t0 = Clock::now();
    {
        Outcome o;
        try {
            const ReproReport rep = repro_intro_f4s3();
            o = check_repro(rep, {{"dim_W", 2}}, {"W symplectic", "W not hyperbolic", "W restricted to C_3 hyperbolic"},
                            0.0);
        } catch (const Error& e) {
            o.require(false, e.what());
        }
        report(4, "S3 over GF(4): W not hyperbolic, W restricted to C3 hyperbolic", o, seconds_since(t0));
    }

    t0 = Clock::now();
    {
        Outcome o;
        try {
            o = code_existence();
        } catch (const Error& e) {
            o.require(false, e.what());
        }
        const double secs = seconds_since(t0);
        o.require(secs < 120, "runtime over 2 minutes");
        report(5, "self-dual code existence on every class of S_n, n in {2,4,6,8}", o, secs);
    }

    t0 = Clock::now();
    {
        Outcome o;
        try {
            o = constructive_completeness(first, opt.seed);
        } catch (const Error& e) {
            o.require(false, e.what());
        }
        report(6, "construction succeeds and verifies on every hyperbolic instance", o, seconds_since(t0));
    }

    t0 = Clock::now();
    {
        Outcome o;
        try {
            o = property_suites(opt.seed);
        } catch (const Error& e) {
            o.require(false, e.what());
        }
        report(7, "property suites", o, seconds_since(t0));
    }

    t0 = Clock::now();
    {
        Outcome o;
        const io::json second = run_corpus(opt);
        const std::string a = first.dump(), b = second.dump();
        o.require(a == b, "reports differ");
        if (o.pass) o.detail = "identical reports, " + num(a.size()) + " bytes";
        report(8, "determinism: two corpus runs with the same seed", o, seconds_since(t0));
    }

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
