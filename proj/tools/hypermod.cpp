// hypermod: command-line front end.
// Exit status: 0 decided true / success, 1 decided false, 2 error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypermod/hypermod.hpp"

namespace {

using namespace hypermod;
using io::json;

struct Globals {
    bool json_out = false;
    std::string seed_text;
    std::size_t group_cap = kDefaultGroupCap;

    std::uint64_t seed() const {
        std::string s = seed_text;
        if (s.empty())
            if (const char* env = std::getenv("HYPERMOD_SEED")) s = env;
        if (s.empty()) return kDefaultSeed;
        try {
            std::size_t used = 0;
            const auto v = std::stoull(s, &used, 0);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidArgument, "seed must be an integer, got \"" + s + "\"");
        }
    }
};

int emit(const Globals& g, const json& j, const std::string& text, int code) {
    if (g.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return code;
}

std::string poly_text(const Poly& p) { return p.to_string(); }

std::string cycles_text(const Perm& p) {
    std::string s;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        s += "(";
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            s += (j == i ? "" : " ") + std::to_string(j);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

std::string pi_text(std::uint64_t m, std::uint64_t q) {
    const PiClass c = pi_number_index(m, q);
    const std::string qs = std::to_string(q);
    switch (c.kind) {
        case PiClass::Kind::All: return "1 is a π_i(" + qs + ")-number for every i";
        case PiClass::Kind::Index:
            if (is_prime(m)) return std::to_string(m) + " ∈ π_" + std::to_string(c.index) + "(" + qs + ")";
            return std::to_string(m) + " is a π_" + std::to_string(c.index) + "(" + qs + ")-number";
        case PiClass::Kind::Mixed: return std::to_string(m) + " has prime divisors in several π_i(" + qs + ")";
    }
    return "";
}

// --- subcommands -----------------------------------------------------------

int cmd_classify_prime(const Globals& g, std::uint64_t p, std::uint64_t q) {
    const std::uint64_t o = ord_mod(p, q);
    const PiClass c = pi_number_index(p, q);
    json j = {{"n", p}, {"q", q}, {"ord", o}, {"omega", omega_q(p, q)}};
    j["class"] = c.kind == PiClass::Kind::Index ? json(c.index) : json(c.kind == PiClass::Kind::All ? "all" : "mixed");
    return emit(g, j, pi_text(p, q) + ", ord=" + std::to_string(o) + "\n", 0);
}

int cmd_special_elements(const Globals& g, const std::string& path, std::uint64_t q) {
    const GroupPtr G = io::load_group(json(path), ".", g.group_cap);
    json arr = json::array();
    std::ostringstream out;
    out << "|G| = " << G->order() << ", q = " << q << "\n";
    for (ElemId r : G->class_representatives()) {
        const SpecialVerdict v = is_f_special_element(*G, r, q);
        arr.push_back({{"element", io::to_json(G->perm(r))},
                       {"order", G->element_order(r)},
                       {"special", v.special},
                       {"reason", v.reason.to_string()}});
        out << (v.special ? "special     " : "not special ") << cycles_text(G->perm(r)) << "  order "
            << G->element_order(r) << "  " << v.reason.to_string() << "\n";
    }
    return emit(g, {{"group_order", G->order()}, {"q", q}, {"classes", arr}}, out.str(), 0);
}

int cmd_special_subgroups(const Globals& g, const std::string& path, std::uint64_t q) {
    const GroupPtr G = io::load_group(json(path), ".", g.group_cap);
    json arr = json::array();
    std::ostringstream out;
    out << "|G| = " << G->order() << ", q = " << q << "\n";
    for (const auto& s : f_special_subgroups(*G, q)) {
        arr.push_back(io::to_json(s, *G));
        out << s.describe() << "  order " << s.group.order() << "  generated by";
        for (auto x : s.group.generators) out << " " << cycles_text(G->perm(x));
        out << "\n";
    }
    return emit(g, {{"group_order", G->order()}, {"q", q}, {"subgroups", arr}}, out.str(), 0);
}

BilinearForm load_form(const Globals& g, const std::string& module_path, const std::string& gram_path) {
    std::optional<Representation> M;
    if (!module_path.empty()) M = io::module_from_json(json(module_path), ".", g.group_cap);
    if (gram_path.empty()) fail(ErrorCode::InvalidArgument, "--gram is required");
    return io::form_from_json(json(gram_path), ".", M, g.group_cap);
}

std::string verdict_line(const HyperbolicVerdict& v, const PermGroup& G) {
    std::ostringstream s;
    s << to_string(v.method) << ": " << (v.hyperbolic ? "hyperbolic" : "not hyperbolic");
    if (v.element) s << "; element " << cycles_text(G.perm(*v.element)) << " has char poly " << poly_text(*v.char_poly);
    if (v.subgroup) s << "; subgroup " << v.subgroup->describe();
    if (v.factor)
        s << "; self-dual factor of dim " << v.factor->module.dim() << " has multiplicity " << v.factor->multiplicity;
    if (v.method == HyperbolicMethod::Construct) s << "; Witt kernel dim " << v.kernel_dim;
    if (v.witness) s << "\nself-perpendicular submodule:\n" << v.witness->to_string();
    return s.str() + "\n";
}

int cmd_is_hyperbolic(const Globals& g, const std::string& module_path, const std::string& gram_path,
                      const std::string& method) {
    const BilinearForm form = load_form(g, module_path, gram_path);
    const PermGroup& G = form.module().group();
    std::vector<HyperbolicVerdict> vs;
    if (method == "all") {
        vs = is_hyperbolic_all(form, g.seed());
    } else {
        const std::map<std::string, HyperbolicMethod> names = {{"charpoly", HyperbolicMethod::CharPoly},
                                                               {"multiplicity", HyperbolicMethod::Multiplicity},
                                                               {"subgroups", HyperbolicMethod::SpecialSubgroups},
                                                               {"construct", HyperbolicMethod::Construct}};
        vs.push_back(is_hyperbolic(form, names.at(method), g.seed()));
    }
    json arr = json::array();
    std::string text;
    for (const auto& v : vs) {
        arr.push_back(io::to_json(v, G));
        text += verdict_line(v, G);
    }
    const bool h = vs.front().hyperbolic;
    return emit(g, {{"hyperbolic", h}, {"dim", form.dim()}, {"verdicts", arr}}, text, h ? 0 : 1);
}

int cmd_witt_kernel(const Globals& g, const std::string& module_path, const std::string& gram_path) {
    const BilinearForm form = load_form(g, module_path, gram_path);
    const WittKernelReport r = witt_kernel(form, g.seed());
    const WittClassDescriptor d = witt_descriptor(form, g.seed());
    json j = {{"dim", form.dim()},
              {"kernel_dim", r.kernel_form.dim()},
              {"hyperbolic", r.hyperbolic},
              {"witness", io::to_json(r.witness)},
              {"kernel_gram", io::to_json(r.kernel_form.gram())},
              {"descriptor", io::to_json(d)}};
    std::ostringstream out;
    out << "dim V = " << form.dim() << ", maximal isotropic dim = " << r.witness.rows()
        << ", Witt kernel dim = " << r.kernel_form.dim() << (r.hyperbolic ? " (hyperbolic)" : "") << "\n";
    for (const auto& e : d.kernel_factors.entries)
        out << "kernel factor: dim " << e.module.dim() << " x" << e.multiplicity << (e.self_dual ? " self-dual" : "")
            << "\n";
    out << "maximal isotropic submodule:\n" << r.witness.to_string();
    return emit(g, j, out.str(), 0);
}

int cmd_witt_equiv(const Globals& g, const std::string& m1, const std::string& f1, const std::string& m2,
                   const std::string& f2) {
    const BilinearForm a = load_form(g, m1, f1);
    const BilinearForm b = load_form(g, m2, f2);
    const WittEquivalence w = witt_equivalent(a, b);
    const WittClassDescriptor da = witt_descriptor(a, g.seed());
    const WittClassDescriptor db = witt_descriptor(b, g.seed());
    json j = {{"equivalent", w.equivalent}, {"descriptor", io::to_json(da)}, {"other_descriptor", io::to_json(db)}};
    std::ostringstream out;
    out << (w.equivalent ? "Witt-equivalent" : "not Witt-equivalent");
    if (w.element) {
        j["element"] = io::to_json(a.module().group().perm(*w.element));
        j["product"] = io::to_json(*w.product);
        out << "; element " << cycles_text(a.module().group().perm(*w.element)) << " gives non-square "
            << poly_text(*w.product);
    }
    out << "\nkernel dims: " << da.kernel_dim << " and " << db.kernel_dim << "\n";
    return emit(g, j, out.str(), w.equivalent ? 0 : 1);
}

int cmd_selfdual_code(const Globals& g, const std::string& path, bool construct, bool oracle) {
    const GroupPtr G = io::load_group(json(path), ".", g.group_cap);
    const CodeVerdict v = code_exists(*G);
    json j = {{"n", G->degree()}, {"exists", v.exists}};
    std::ostringstream out;
    out << "n = " << G->degree() << ": invariant self-dual code " << (v.exists ? "exists" : "does not exist") << "\n";
    if (v.sigma) {
        j["element"] = io::to_json(G->perm(*v.sigma));
        j["cycle_size"] = *v.cycle_size;
        out << "F_2-special element " << cycles_text(G->perm(*v.sigma)) << " has cycle type "
            << to_string(cycle_type(G->perm(*v.sigma))) << ", odd count of size " << *v.cycle_size << "\n";
    }
    if (construct && v.exists) {
        const BinaryCode c = construct_code(G, g.seed());
        j["code"] = io::to_json(c);
        out << "generator matrix:\n";
        for (const auto& r : c.rows()) out << r << "\n";
    }
    if (oracle) {
        const auto codes = enumerate_selfdual_codes(G->degree());
        std::size_t invariant = 0;
        for (const auto& c : codes) {
            bool ok = true;
            for (const auto& p : G->generators()) ok = ok && c.is_invariant(p);
            invariant += ok;
        }
        j["oracle"] = {{"codes", codes.size()}, {"invariant", invariant}, {"agrees", (invariant > 0) == v.exists}};
        out << "oracle: " << codes.size() << " self-dual codes, " << invariant << " invariant"
            << ((invariant > 0) == v.exists ? "" : " (DISAGREES)") << "\n";
        if ((invariant > 0) != v.exists) fail(ErrorCode::CriteriaDisagree, "criterion disagrees with enumeration");
    }
    return emit(g, j, out.str(), v.exists ? 0 : 1);
}

int cmd_repro(const Globals& g, const std::string& which, std::uint64_t q) {
    ReproReport r;
    if (which == "thm5.1")
        r = repro_cp_times_dihedral(q, g.seed());
    else if (which == "thm5.2")
        r = repro_extended_dihedral(q, g.seed());
    else if (which == "intro-f4s3")
        r = repro_intro_f4s3(g.seed());
    else
        fail(ErrorCode::InvalidArgument, "unknown example \"" + which + "\"");
    std::ostringstream out;
    out << r.name << ":";
    for (const auto& [k, v] : r.data.items())
        if (v.is_primitive()) out << " " << k << "=" << v.dump();
    out << "\n";
    for (const auto& c : r.checks)
        out << (c.pass ? "  ok    " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    return emit(g, r.to_json(), out.str(), r.pass() ? 0 : 1);
}

int cmd_corpus(const Globals& g, std::size_t per_pair, const std::vector<std::string>& groups, const std::string& out_path,
               bool quiet) {
    CorpusOptions opt;
    opt.seed = g.seed();
    opt.per_pair = per_pair;
    opt.groups = groups;
    if (!quiet) opt.progress = [](const std::string& s) { std::cerr << "done " << s << "\n"; };
    const json report = run_corpus(opt);
    const bool ok = corpus_passed(report);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + out_path);
        f << report.dump(2) << "\n";
    }
    const auto& s = report.at("summary");
    std::ostringstream text;
    for (const auto& [k, v] : s.items()) text << k << ": " << v.dump() << "\n";
    text << (ok ? "PASS" : "FAIL") << "\n";
    return emit(g, report, text.str(), ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolicity of symmetric modules over GF(2^k)"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--seed", g.seed_text, "random seed (default: $HYPERMOD_SEED or a fixed constant)");
    app.add_option("--group-cap", g.group_cap, "largest group order to enumerate");

    std::uint64_t p = 0, q = 2;
    auto* classify = app.add_subcommand("classify-prime", "pi-class and multiplicative order of p modulo q");
    classify->add_option("p", p, "odd number")->required();
    classify->add_option("--q", q, "field size")->required();

    std::string group_path;
    auto* selements = app.add_subcommand("special-elements", "F-special conjugacy classes");
    selements->add_option("--group", group_path)->required();
    selements->add_option("--q", q)->required();
    auto* ssubgroups = app.add_subcommand("special-subgroups", "F-special subgroups up to conjugacy");
    ssubgroups->add_option("--group", group_path)->required();
    ssubgroups->add_option("--q", q)->required();

    std::string module_path, gram_path, other_module, other_gram, method = "all";
    auto* hyper = app.add_subcommand("is-hyperbolic", "decide hyperbolicity of a symmetric module");
    hyper->add_option("--module", module_path);
    hyper->add_option("--gram", gram_path)->required();
    hyper->add_option("--method", method)
        ->check(CLI::IsMember({"all", "charpoly", "multiplicity", "subgroups", "construct"}));
    auto* wkernel = app.add_subcommand("witt-kernel", "Witt kernel and a maximal isotropic submodule");
    wkernel->add_option("--module", module_path);
    wkernel->add_option("--gram", gram_path)->required();
    auto* wequiv = app.add_subcommand("witt-equiv", "Witt equivalence of two symmetric modules");
    wequiv->add_option("--module", module_path);
    wequiv->add_option("--gram", gram_path)->required();
    wequiv->add_option("--other-module", other_module);
    wequiv->add_option("--other-gram", other_gram)->required();

    bool construct = false, oracle = false;
    auto* code = app.add_subcommand("selfdual-code", "G-invariant self-dual binary codes");
    code->add_option("--group", group_path)->required();
    code->add_flag("--construct", construct, "print a generator matrix");
    code->add_flag("--oracle", oracle, "cross-check by enumerating all self-dual codes (n <= 12)");

    std::string example;
    std::uint64_t repro_q = 4;
    auto* repro = app.add_subcommand("repro", "worked examples");
    repro->add_option("example", example)->required()->check(CLI::IsMember({"thm5.1", "thm5.2", "intro-f4s3"}));
    repro->add_option("--q", repro_q, "field size");

    std::size_t per_pair = 50;
    std::vector<std::string> groups;
    std::string out_path;
    bool quiet = false;
    auto* corpus = app.add_subcommand("corpus", "run the generated corpus");
    corpus->add_option("--per-pair", per_pair, "instances per (group, field)");
    corpus->add_option("--groups", groups, "restrict to these group names")->delimiter(',');
    corpus->add_option("--out", out_path, "write the JSON report here");
    corpus->add_flag("--quiet", quiet, "no progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*classify) return cmd_classify_prime(g, p, q);
        if (*selements) return cmd_special_elements(g, group_path, q);
        if (*ssubgroups) return cmd_special_subgroups(g, group_path, q);
        if (*hyper) return cmd_is_hyperbolic(g, module_path, gram_path, method);
        if (*wkernel) return cmd_witt_kernel(g, module_path, gram_path);
        if (*wequiv) return cmd_witt_equiv(g, module_path, gram_path, other_module, other_gram);
        if (*code) return cmd_selfdual_code(g, group_path, construct, oracle);
        if (*repro) return cmd_repro(g, example, repro_q);
        if (*corpus) return cmd_corpus(g, per_pair, groups, out_path, quiet);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
