/**
 * @file io.hpp
 * @brief JSON encoding of groups, modules, forms, polynomials and codes.
 *
 * Field elements are integers whose bits are coordinates in the polynomial
 * basis of GF(2^k) over GF(2). Polynomials are ascending coefficient arrays.
 * A reference to a group or module may be an inline object or a path string,
 * resolved against the directory of the file that contains it.
 */
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "codes.hpp"
#include "forms.hpp"
#include "witt.hpp"

namespace hypermod::io {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

inline json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

/// Follows a string reference to a file; returns the object and its base directory.
inline std::pair<json, fs::path> resolve(const json& j, const fs::path& base) {
    if (j.is_string()) {
        const fs::path p = base / j.get<std::string>();
        return {read_json_file(p), p.parent_path()};
    }
    return {j, base};
}

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad value for \"") + key + "\": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Fields, matrices, polynomials

inline Field parse_field(const std::string& s) {
    unsigned k = 0;
    if (std::sscanf(s.c_str(), "GF(2^%u)", &k) == 1) return make_field(k);
    unsigned long long q = 0;
    if (std::sscanf(s.c_str(), "GF(%llu)", &q) == 1) return field_of_size(q);
    fail(ErrorCode::ParseError, "field must look like \"GF(2^k)\", got \"" + s + "\"");
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vec(i));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline Matrix matrix_from_json(const json& j, const Field& f) {
    const auto r = get_field<std::size_t>(j, "rows");
    const auto c = get_field<std::size_t>(j, "cols");
    const auto rows = get_field<std::vector<std::vector<std::uint32_t>>>(j, "entries");
    if (rows.size() != r) fail(ErrorCode::ParseError, "matrix row count does not match \"rows\"");
    std::vector<Elem> e;
    for (const auto& row : rows) {
        if (row.size() != c) fail(ErrorCode::ParseError, "matrix row length does not match \"cols\"");
        for (auto x : row) {
            if (x >= f.size()) fail(ErrorCode::ParseError, "entry " + std::to_string(x) + " outside " + f.name());
            e.push_back(static_cast<Elem>(x));
        }
    }
    return Matrix(f, r, c, std::move(e));
}

inline json to_json(const Poly& p) { return p.coeffs(); }

inline json to_json(const Perm& p) { return std::vector<std::uint32_t>(p.begin(), p.end()); }

// ---------------------------------------------------------------------------
// Groups

inline GroupSpec group_spec_from_json(const json& j0, const fs::path& base = ".") {
    const auto [j, dir] = resolve(j0, base);
    if (j.contains("family")) {
        const auto fam = get_field<std::string>(j, "family");
        if (fam == "cyclic") return GroupSpec::cyclic(get_field<std::uint64_t>(j, "m"));
        if (fam == "dihedral") return GroupSpec::dihedral(get_field<std::uint64_t>(j, "n"));
        if (fam == "extended_dihedral")
            return GroupSpec::extended_dihedral(get_field<unsigned>(j, "e"), get_field<std::uint64_t>(j, "n"));
        if (fam == "symmetric") return GroupSpec::symmetric(get_field<std::uint64_t>(j, "n"));
        if (fam == "alternating") return GroupSpec::alternating(get_field<std::uint64_t>(j, "n"));
        if (fam == "direct_product") {
            std::vector<GroupSpec> fs;
            for (const auto& f : get_field<json>(j, "factors")) fs.push_back(group_spec_from_json(f, dir));
            return GroupSpec::direct_product(std::move(fs));
        }
        fail(ErrorCode::InvalidSpec, "unknown group family \"" + fam + "\"");
    }
    const auto degree = get_field<std::size_t>(j, "degree");
    std::vector<Perm> gens;
    for (const auto& g : get_field<std::vector<std::vector<std::uint32_t>>>(j, "generators")) {
        Perm p(g.begin(), g.end());
        if (p.size() != degree || !is_permutation(p))
            fail(ErrorCode::InvalidSpec, "generator is not a permutation of 0.." + std::to_string(degree - 1));
        gens.push_back(std::move(p));
    }
    return GroupSpec::raw(degree, std::move(gens));
}

inline json to_json(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
        case K::Cyclic: return {{"family", "cyclic"}, {"m", s.m}};
        case K::ExtendedDihedral:
            if (s.e == 1) return {{"family", "dihedral"}, {"n", s.n}};
            return {{"family", "extended_dihedral"}, {"e", s.e}, {"n", s.n}};
        case K::Symmetric: return {{"family", "symmetric"}, {"n", s.m}};
        case K::Alternating: return {{"family", "alternating"}, {"n", s.m}};
        case K::DirectProduct: {
            json fs = json::array();
            for (const auto& f : s.factors) fs.push_back(to_json(f));
            return {{"family", "direct_product"}, {"factors", fs}};
        }
        case K::RawPermutation: {
            json gs = json::array();
            for (const auto& g : s.generators) gs.push_back(to_json(g));
            return {{"degree", s.degree}, {"generators", gs}};
        }
    }
    return {};
}

/// Generators of an enumerated group, as a raw permutation group object.
inline json group_to_json(const PermGroup& G) {
    json gs = json::array();
    for (const auto& g : G.generators()) gs.push_back(to_json(g));
    return {{"degree", G.degree()}, {"generators", gs}};
}

inline GroupPtr load_group(const json& j, const fs::path& base = ".", std::size_t cap = kDefaultGroupCap) {
    return std::make_shared<const PermGroup>(build_group(group_spec_from_json(j, base), cap));
}

// ---------------------------------------------------------------------------
// Modules and forms

inline json to_json(const Representation& M) {
    json imgs = json::array();
    for (const auto& m : M.images()) imgs.push_back(to_json(m));
    return {{"field", M.field().name()}, {"group", group_to_json(M.group())}, {"dim", M.dim()}, {"images", imgs}};
}

/// Parses a module; the homomorphism property is verified on the whole group.
inline Representation module_from_json(const json& j0, const fs::path& base = ".",
                                       std::size_t cap = kDefaultGroupCap) {
    const auto [j, dir] = resolve(j0, base);
    const Field f = parse_field(get_field<std::string>(j, "field"));
    GroupPtr G = load_group(get_field<json>(j, "group"), dir, cap);
    std::vector<Matrix> imgs;
    for (const auto& m : get_field<json>(j, "images")) imgs.push_back(matrix_from_json(m, f));
    if (imgs.size() != G->num_generators())
        fail(ErrorCode::DimensionMismatch, "module needs one image per group generator");
    const std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : (imgs.empty() ? 0 : imgs[0].rows());
    Representation M(std::move(G), f, std::move(imgs), dim);
    M.verify_homomorphism();
    return M;
}

inline json to_json(const BilinearForm& form) { return {{"module", to_json(form.module())}, {"gram", to_json(form.gram())}}; }

/// A form object {"module", "gram"}; with a module supplied, "module" may be
/// omitted and a bare matrix object is accepted as the gram.
inline BilinearForm form_from_json(const json& j0, const fs::path& base = ".",
                                   const std::optional<Representation>& module = std::nullopt,
                                   std::size_t cap = kDefaultGroupCap) {
    const auto [j, dir] = resolve(j0, base);
    if (module) {
        const json& g = j.contains("gram") ? j.at("gram") : j;
        return BilinearForm(*module, matrix_from_json(g, module->field()));
    }
    Representation M = module_from_json(get_field<json>(j, "module"), dir, cap);
    Matrix g = matrix_from_json(get_field<json>(j, "gram"), M.field());
    return BilinearForm(std::move(M), std::move(g));
}

// ---------------------------------------------------------------------------
// Results

inline json to_json(const FactorEntry& e) {
    return {{"dim", e.module.dim()}, {"multiplicity", e.multiplicity}, {"self_dual", e.self_dual}};
}

inline json to_json(const FactorMultiset& fm) {
    json a = json::array();
    for (const auto& e : fm.entries) a.push_back(to_json(e));
    return a;
}

inline json to_json(const SpecialSubgroup& s, const PermGroup& G) {
    json gens = json::array();
    for (auto g : s.group.generators) gens.push_back(to_json(G.perm(g)));
    return {{"type", s.describe()}, {"order", s.group.order()}, {"generators", gens}};
}

inline json to_json(const HyperbolicVerdict& v, const PermGroup& G) {
    json j = {{"method", to_string(v.method)}, {"hyperbolic", v.hyperbolic}};
    if (v.element) {
        j["element"] = to_json(G.perm(*v.element));
        j["element_order"] = G.element_order(*v.element);
    }
    if (v.char_poly) j["char_poly"] = to_json(*v.char_poly);
    if (v.subgroup) j["subgroup"] = to_json(*v.subgroup, G);
    if (v.factor) j["factor"] = to_json(*v.factor);
    if (v.method == HyperbolicMethod::Construct) j["kernel_dim"] = v.kernel_dim;
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

inline json to_json(const BinaryCode& c) {
    return {{"n", c.length()}, {"dim", c.dim()}, {"generator_rows", c.rows()}};
}

inline json to_json(const WittClassDescriptor& d) {
    return {{"kernel_dim", d.kernel_dim}, {"kernel_factors", to_json(d.kernel_factors)}};
}

}  // namespace hypermod::io
