/**
 * @file forms.hpp
 * @brief G-invariant bilinear forms, Witt kernels and the hyperbolicity
 *        criteria.
 *
 * A form is stored by its Gram matrix B, f(u, v) = u B v^T, and is invariant
 * when rho(g) B rho(g)^T = B for every generator.
 */
#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fspecial.hpp"
#include "meataxe.hpp"

namespace hypermod {

class BilinearForm {
   public:
    BilinearForm(Representation module, Matrix gram) : m_(std::move(module)), b_(std::move(gram)) {
        if (b_.rows() != m_.dim() || b_.cols() != m_.dim())
            fail(ErrorCode::DimensionMismatch, "gram size does not match module dimension");
        if (b_.field() != m_.field()) fail(ErrorCode::MismatchedContext, "gram over a different field");
    }

    const Representation& module() const { return m_; }
    const Matrix& gram() const { return b_; }
    const Field& field() const { return m_.field(); }
    std::size_t dim() const { return m_.dim(); }

    Elem value(const Vec& u, const Vec& v) const {
        const Vec ub = mul_vec(u, b_);
        Elem s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s ^= m_.field().mul(ub[i], v[i]);
        return s;
    }

    bool is_symmetric() const { return b_ == b_.transpose(); }
    bool is_alternating() const {
        if (!is_symmetric()) return false;
        for (std::size_t i = 0; i < b_.rows(); ++i)
            if (b_(i, i)) return false;
        return true;
    }
    bool is_nondegenerate() const { return rank(b_) == dim(); }
    bool is_invariant() const {
        for (const auto& r : m_.images())
            if (r * b_ * r.transpose() != b_) return false;
        return true;
    }

    /// Throws NotSymmetric, DegenerateForm or NotInvariant.
    void require_symmetric_module() const {
        if (!is_symmetric()) fail(ErrorCode::NotSymmetric, "gram matrix is not symmetric");
        if (!is_nondegenerate()) fail(ErrorCode::DegenerateForm, "form is degenerate");
        if (!is_invariant()) fail(ErrorCode::NotInvariant, "form is not G-invariant");
    }

   private:
    Representation m_;
    Matrix b_;
};

/// Basis of {B : rho(g) B rho(g)^T = B}, i.e. rho(g) B = B rho(g)^-T.
inline std::vector<Matrix> invariant_forms_basis(const Representation& M) {
    std::vector<std::pair<Matrix, Matrix>> cs;
    for (const auto& r : M.images()) cs.emplace_back(r, inverse(r).transpose());
    return solve_sylvester_like(M.field(), M.dim(), M.dim(), cs);
}

/// Basis of the alternating forms inside a space of forms.
inline std::vector<Matrix> alternating_subspace(const Field& f, std::size_t d, const std::vector<Matrix>& forms) {
    if (forms.empty()) return {};
    // one equation per (r <= c): sum_i c_i (B_i(r,c) + B_i(c,r)) = 0, or B_i(r,r) on the diagonal
    std::vector<Vec> eqs;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c) {
            Vec e(forms.size());
            for (std::size_t i = 0; i < forms.size(); ++i)
                e[i] = r == c ? forms[i](r, r) : static_cast<Elem>(forms[i](r, c) ^ forms[i](c, r));
            eqs.push_back(std::move(e));
        }
    const Matrix K = kernel(Matrix::from_rows(f, forms.size(), eqs));
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < K.rows(); ++k) out.push_back(combine(f, d, d, forms, K.row_vec(k)));
    return out;
}

/// A nondegenerate invariant alternating form. Basis elements are tried first,
/// then seeded random combinations.
inline BilinearForm make_invariant_symplectic(const Representation& M, std::uint64_t seed = kDefaultSeed) {
    const Field& f = M.field();
    const std::size_t d = M.dim();
    const auto alt = alternating_subspace(f, d, invariant_forms_basis(M));
    if (d == 0 || alt.empty()) fail(ErrorCode::NoSymplecticForm, "module has no nonzero invariant alternating form");
    for (const auto& b : alt)
        if (rank(b) == d) return BilinearForm(M, b);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Elem> c(alt.size());
        for (auto& x : c) x = static_cast<Elem>(rng() % f.size());
        Matrix b = combine(f, d, d, alt, c);
        if (rank(b) == d) return BilinearForm(M, std::move(b));
    }
    fail(ErrorCode::NoSymplecticForm, "no nondegenerate invariant alternating form found");
}

/// {v : f(v, w) = 0 for all w in W}, as a reduced echelon basis.
inline Matrix orthocomplement(const BilinearForm& form, const Matrix& W) {
    if (W.rows() == 0) return Matrix::identity(form.field(), form.dim());
    return left_kernel(form.gram() * W.transpose());
}

inline bool is_isotropic(const BilinearForm& form, const Matrix& W) {
    return (W * form.gram() * W.transpose()).is_zero();
}

inline BilinearForm orthogonal_sum(const BilinearForm& a, const BilinearForm& b) {
    if (!a.module().same_context(b.module()))
        fail(ErrorCode::MismatchedContext, "orthogonal_sum over different group or field");
    return BilinearForm(module_sum(a.module(), b.module()), block_diag(a.gram(), b.gram()));
}

/// The same form in the basis given by the rows of P.
inline BilinearForm change_basis(const BilinearForm& form, const Matrix& P) {
    return BilinearForm(change_basis(form.module(), P), P * form.gram() * P.transpose());
}

// ---------------------------------------------------------------------------
// Witt kernel

/// A simple module with its endomorphism field, used as a search key.
struct SimpleType {
    Representation module;
    std::vector<Matrix> endo;  // F-basis of End_G(S)
};

inline std::vector<SimpleType> simple_types(const FactorMultiset& fm) {
    std::vector<SimpleType> out;
    for (const auto& e : fm.entries) out.push_back({e.module, hom_basis(e.module, e.module)});
    return out;
}

namespace detail {

inline Matrix rows_to_matrix(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
    return rows.empty() ? Matrix(f, 0, cols) : Matrix::from_rows(f, cols, rows);
}

// Every element of End(S), enumerated as F-combinations of the basis.
inline void for_each_endo(const Field& f, const SimpleType& t, const std::function<bool(const Matrix&)>& fn) {
    const std::size_t e = t.endo.size();
    const std::size_t d = t.module.dim();
    std::vector<Elem> c(e, 0);
    for (;;) {
        if (fn(combine(f, d, d, t.endo, c))) return;
        std::size_t pos = 0;
        while (pos < e) {
            if (++c[pos] < f.size()) break;
            c[pos] = 0;
            ++pos;
        }
        if (pos == e) return;
    }
}

}  // namespace detail

/// Rows spanning an isotropic simple submodule of V isomorphic to S, if one exists.
///
/// With phi_1 anisotropic, V = phi_1(S) + phi_1(S)^perp, so a second copy phi_2
/// inside the complement is orthogonal to the first and the twisted diagonal
/// phi_1 + phi_2 T is isotropic once T T^* matches the ratio of the two forms.
inline std::optional<Matrix> find_isotropic_simple(const BilinearForm& form, const SimpleType& t) {
    const Representation& V = form.module();
    const Field& f = V.field();
    const auto H = hom_basis(t.module, V);
    if (H.empty()) return std::nullopt;
    const Matrix& X1 = H.front();
    const Matrix beta1 = X1 * form.gram() * X1.transpose();
    if (beta1.is_zero()) return X1;
    if (H.size() <= t.endo.size()) return std::nullopt;  // a single copy, and it is anisotropic

    const Echelon R = row_echelon(orthocomplement(form, X1));
    const auto H2 = hom_basis(t.module, submodule(V, R));
    if (H2.empty()) fail(ErrorCode::ConstructionFailed, "isotypic complement lost its second copy");
    const Matrix X2 = H2.front() * R.rref;
    const Matrix beta2 = X2 * form.gram() * X2.transpose();
    if (beta2.is_zero()) return X2;
    std::optional<Matrix> found;
    detail::for_each_endo(f, t, [&](const Matrix& T) {
        if (beta1 + T * beta2 * T.transpose() != Matrix(f, beta1.rows(), beta1.cols())) return false;
        found = X1 + T * X2;
        return true;
    });
    if (!found) fail(ErrorCode::ConstructionFailed, "no isotropic twisted diagonal between orthogonal copies");
    return found;
}

struct WittKernelReport {
    BilinearForm kernel_form;
    Matrix witness;  // reduced echelon basis of a maximal isotropic submodule, original coordinates
    bool hyperbolic = false;
};

/// W^perp / W for a maximal isotropic submodule W, reached by repeatedly
/// quotienting out isotropic simple submodules. The search over simple types
/// is exhaustive, so the loop stops exactly when no isotropic submodule is left.
inline WittKernelReport witt_kernel(const BilinearForm& form, const std::vector<SimpleType>& types) {
    form.require_symmetric_module();
    const Field& f = form.field();
    const std::size_t n = form.dim();
    BilinearForm cur = form;
    Matrix lift = Matrix::identity(f, n);  // current coordinates -> original coordinates
    Subspace W(f, n);
    for (;;) {
        std::optional<Matrix> S;
        for (const auto& t : types)
            if ((S = find_isotropic_simple(cur, t))) break;
        if (!S) break;
        for (std::size_t i = 0; i < S->rows(); ++i) W.add(mul_vec(S->row_vec(i), lift));

        const Echelon perp = row_echelon(orthocomplement(cur, *S));
        const Representation perp_mod = submodule(cur.module(), perp);
        // S inside perp coordinates: entries at perp's pivot columns
        std::vector<Vec> s_rows;
        for (std::size_t i = 0; i < S->rows(); ++i) {
            Vec v(perp.pivots.size());
            for (std::size_t j = 0; j < perp.pivots.size(); ++j) v[j] = (*S)(i, perp.pivots[j]);
            s_rows.push_back(std::move(v));
        }
        const Echelon s_ech = row_echelon(detail::rows_to_matrix(f, perp.pivots.size(), s_rows));
        const Representation q = quotient(perp_mod, s_ech);

        std::vector<bool> is_piv(perp.pivots.size(), false);
        for (auto p : s_ech.pivots) is_piv[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < perp.pivots.size(); ++c)
            if (!is_piv[c]) free.push_back(c);
        const Matrix perp_gram = perp.rref * cur.gram() * perp.rref.transpose();
        Matrix qgram(f, free.size(), free.size());
        Matrix qlift(f, free.size(), n);
        for (std::size_t i = 0; i < free.size(); ++i) {
            for (std::size_t j = 0; j < free.size(); ++j) qgram(i, j) = perp_gram(free[i], free[j]);
            const Vec row = mul_vec(perp.rref.row_vec(free[i]), lift);
            std::copy(row.begin(), row.end(), qlift.row(i).begin());
        }
        cur = BilinearForm(q, std::move(qgram));
        lift = std::move(qlift);
    }
    const bool hyperbolic = cur.dim() == 0;
    return {std::move(cur), W.dim() ? W.basis() : Matrix(f, 0, n), hyperbolic};
}

inline WittKernelReport witt_kernel(const BilinearForm& form, std::uint64_t seed = kDefaultSeed) {
    form.require_symmetric_module();
    if (form.dim() == 0) return {form, Matrix(form.field(), 0, 0), true};
    return witt_kernel(form, simple_types(composition_factors(form.module(), seed)));
}

/// Exact check that W is a G-invariant subspace with W = W^perp.
inline bool is_self_perpendicular(const BilinearForm& form, const Matrix& W) {
    if (2 * W.rows() != form.dim() || rank(W) != W.rows()) return false;
    if (!is_isotropic(form, W) || !is_submodule(form.module(), W)) return false;
    return row_echelon(orthocomplement(form, W)).rref == row_echelon(W).rref;
}

inline Matrix construct_self_perpendicular(const BilinearForm& form, const std::vector<SimpleType>& types) {
    const WittKernelReport r = witt_kernel(form, types);
    if (!r.hyperbolic)
        fail(ErrorCode::InvalidArgument,
             "module is not hyperbolic (Witt kernel dim " + std::to_string(r.kernel_form.dim()) + ")");
    if (!is_self_perpendicular(form, r.witness))
        fail(ErrorCode::ConstructionFailed, "constructed subspace failed exact verification:\n" + r.witness.to_string());
    return r.witness;
}

inline Matrix construct_self_perpendicular(const BilinearForm& form, std::uint64_t seed = kDefaultSeed) {
    form.require_symmetric_module();
    if (form.dim() == 0) return Matrix(form.field(), 0, 0);
    return construct_self_perpendicular(form, simple_types(composition_factors(form.module(), seed)));
}

// ---------------------------------------------------------------------------
// Hyperbolicity

enum class HyperbolicMethod { CharPoly, Multiplicity, SpecialSubgroups, Construct };

inline std::string to_string(HyperbolicMethod m) {
    switch (m) {
        case HyperbolicMethod::CharPoly: return "charpoly";
        case HyperbolicMethod::Multiplicity: return "multiplicity";
        case HyperbolicMethod::SpecialSubgroups: return "subgroups";
        case HyperbolicMethod::Construct: return "construct";
    }
    return "?";
}

struct HyperbolicVerdict {
    HyperbolicMethod method = HyperbolicMethod::CharPoly;
    bool hyperbolic = false;
    std::optional<ElemId> element;           // CharPoly: offending F-special element
    std::optional<Poly> char_poly;           // and its non-square characteristic polynomial
    std::optional<FactorEntry> factor;       // Multiplicity / SpecialSubgroups: odd self-dual factor
    std::optional<SpecialSubgroup> subgroup; // SpecialSubgroups: offending subgroup
    std::optional<Matrix> witness;           // Construct: self-perpendicular submodule
    std::size_t kernel_dim = 0;              // Construct: Witt kernel dimension

    static HyperbolicVerdict of(HyperbolicMethod m, bool h) {
        HyperbolicVerdict v;
        v.method = m;
        v.hyperbolic = h;
        return v;
    }
};

inline HyperbolicVerdict hyperbolic_by_charpoly(const Representation& M, const std::vector<ElemId>& special_reps) {
    auto v = HyperbolicVerdict::of(HyperbolicMethod::CharPoly, true);
    for (ElemId g : special_reps) {
        Poly c = char_poly_on(M, g);
        if (!is_square_poly(c).square) {
            v.hyperbolic = false;
            v.element = g;
            v.char_poly = std::move(c);
            return v;
        }
    }
    return v;
}

inline HyperbolicVerdict hyperbolic_by_multiplicity(const FactorMultiset& fm) {
    auto v = HyperbolicVerdict::of(HyperbolicMethod::Multiplicity, true);
    const auto em = is_even_multiplicity(fm);
    if (!em.even) {
        v.hyperbolic = false;
        v.factor = fm.entries[*em.offending];
    }
    return v;
}

/// Restriction to every F-special subgroup; each entry pairs a subgroup with
/// its realization as a standalone group.
inline HyperbolicVerdict hyperbolic_by_subgroups(const Representation& M,
                                                 const std::vector<std::pair<SpecialSubgroup, GroupPtr>>& subs,
                                                 std::uint64_t seed) {
    auto v = HyperbolicVerdict::of(HyperbolicMethod::SpecialSubgroups, true);
    for (const auto& [d, H] : subs) {
        const FactorMultiset fm = composition_factors(restrict(M, H), seed);
        const auto em = is_even_multiplicity(fm);
        if (!em.even) {
            v.hyperbolic = false;
            v.subgroup = d;
            v.factor = fm.entries[*em.offending];
            return v;
        }
    }
    return v;
}

inline HyperbolicVerdict hyperbolic_by_construction(const BilinearForm& form, const std::vector<SimpleType>& types) {
    auto v = HyperbolicVerdict::of(HyperbolicMethod::Construct, false);
    const WittKernelReport r = witt_kernel(form, types);
    v.hyperbolic = r.hyperbolic;
    v.kernel_dim = r.kernel_form.dim();
    if (r.hyperbolic) {
        if (!is_self_perpendicular(form, r.witness))
            fail(ErrorCode::ConstructionFailed, "witness failed exact verification:\n" + r.witness.to_string());
        v.witness = r.witness;
    }
    return v;
}

inline std::vector<std::pair<SpecialSubgroup, GroupPtr>> realize_special_subgroups(const PermGroup& G,
                                                                                 std::uint64_t q) {
    std::vector<std::pair<SpecialSubgroup, GroupPtr>> out;
    for (auto& s : f_special_subgroups(G, q)) {
        auto H = std::make_shared<const PermGroup>(G.as_group(s.group));
        out.emplace_back(std::move(s), std::move(H));
    }
    return out;
}

/// Precomputed group data shared by the criteria.
struct CriteriaContext {
    std::vector<ElemId> special_reps;
    std::vector<std::pair<SpecialSubgroup, GroupPtr>> special_subgroups;

    static CriteriaContext build(const PermGroup& G, std::uint64_t q) {
        return {f_special_class_reps(G, q), realize_special_subgroups(G, q)};
    }
};

inline HyperbolicVerdict is_hyperbolic(const BilinearForm& form, HyperbolicMethod method,
                                       std::uint64_t seed = kDefaultSeed) {
    form.require_symmetric_module();
    const Representation& M = form.module();
    const std::uint64_t q = M.field().size();
    switch (method) {
        case HyperbolicMethod::CharPoly: return hyperbolic_by_charpoly(M, f_special_class_reps(M.group(), q));
        case HyperbolicMethod::Multiplicity: return hyperbolic_by_multiplicity(composition_factors(M, seed));
        case HyperbolicMethod::SpecialSubgroups:
            return hyperbolic_by_subgroups(M, realize_special_subgroups(M.group(), q), seed);
        case HyperbolicMethod::Construct:
            if (form.dim() == 0) {
                auto v = HyperbolicVerdict::of(method, true);
                v.witness = Matrix(M.field(), 0, 0);
                return v;
            }
            return hyperbolic_by_construction(form, simple_types(composition_factors(M, seed)));
    }
    fail(ErrorCode::InvalidArgument, "unknown method");
}

/// All four criteria; throws CriteriaDisagree if they differ.
inline std::vector<HyperbolicVerdict> is_hyperbolic_all(const BilinearForm& form, const CriteriaContext& ctx,
                                                        std::uint64_t seed = kDefaultSeed) {
    form.require_symmetric_module();
    const Representation& M = form.module();
    std::vector<HyperbolicVerdict> out;
    out.push_back(hyperbolic_by_charpoly(M, ctx.special_reps));
    if (M.dim() == 0) {
        for (auto m : {HyperbolicMethod::Multiplicity, HyperbolicMethod::SpecialSubgroups, HyperbolicMethod::Construct})
            out.push_back(HyperbolicVerdict::of(m, true));
        out.back().witness = Matrix(M.field(), 0, 0);
    } else {
        const FactorMultiset fm = composition_factors(M, seed);
        out.push_back(hyperbolic_by_multiplicity(fm));
        out.push_back(hyperbolic_by_subgroups(M, ctx.special_subgroups, seed));
        out.push_back(hyperbolic_by_construction(form, simple_types(fm)));
    }
    for (const auto& v : out)
        if (v.hyperbolic != out.front().hyperbolic) {
            std::string msg = "hyperbolicity criteria disagree:";
            for (const auto& w : out) msg += " " + to_string(w.method) + "=" + (w.hyperbolic ? "true" : "false");
            fail(ErrorCode::CriteriaDisagree, msg);
        }
    return out;
}

inline std::vector<HyperbolicVerdict> is_hyperbolic_all(const BilinearForm& form, std::uint64_t seed = kDefaultSeed) {
    return is_hyperbolic_all(form, CriteriaContext::build(form.module().group(), form.field().size()), seed);
}

}  // namespace hypermod
