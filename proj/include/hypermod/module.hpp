/**
 * @file module.hpp
 * @brief FG-modules given by one invertible matrix per group generator.
 *
 * Vectors are rows and the group acts on the right: v -> v * rho(g), with
 * rho(g h) = rho(g) rho(h) under the left-to-right product of group.hpp.
 */
#pragma once

#include <memory>
#include <vector>

#include "group.hpp"
#include "linalg.hpp"

namespace hypermod {

using GroupPtr = std::shared_ptr<const PermGroup>;

class Representation {
   public:
    Representation(GroupPtr group, Field field, std::vector<Matrix> images, std::size_t dim)
        : g_(std::move(group)), f_(std::move(field)), images_(std::move(images)), dim_(dim) {
        if (images_.size() != g_->num_generators())
            fail(ErrorCode::DimensionMismatch, "need one image per group generator");
        for (const auto& m : images_) {
            if (m.rows() != dim_ || m.cols() != dim_) fail(ErrorCode::DimensionMismatch, "image has wrong shape");
            if (m.field() != f_) fail(ErrorCode::MismatchedContext, "image over a different field");
        }
    }

    Representation(GroupPtr group, Field field, std::vector<Matrix> images)
        : Representation(group, field, images, images.empty() ? 0 : images.front().rows()) {}

    const PermGroup& group() const { return *g_; }
    const GroupPtr& group_ptr() const { return g_; }
    const Field& field() const { return f_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& images() const { return images_; }
    const Matrix& image(std::size_t gen) const { return images_[gen]; }

    /// rho(g), evaluated along the generator word of g.
    Matrix image_of(ElemId g) const {
        Matrix r = Matrix::identity(f_, dim_);
        for (auto s : g_->word(g)) r = r * images_[s];
        return r;
    }

    /// rho(g) for every element, indexed by element id.
    std::vector<Matrix> all_images() const {
        std::vector<Matrix> out(g_->order(), Matrix(f_, dim_, dim_));
        out[PermGroup::identity()] = Matrix::identity(f_, dim_);
        for (ElemId x : g_->bfs_order())
            if (x != PermGroup::identity()) out[x] = out[g_->parent(x)] * images_[g_->parent_generator(x)];
        return out;
    }

    /// Checks rho(x s) = rho(x) rho(s) over the full enumerated group and that
    /// every image is invertible.
    void verify_homomorphism() const {
        for (const auto& m : images_)
            if (!is_invertible(m)) fail(ErrorCode::NotAHomomorphism, "generator image is singular");
        const auto imgs = all_images();
        for (ElemId x = 0; x < g_->order(); ++x)
            for (std::size_t s = 0; s < images_.size(); ++s)
                if (imgs[x] * images_[s] != imgs[g_->mul(x, g_->generator(s))])
                    fail(ErrorCode::NotAHomomorphism, "images violate a group relation");
    }

    bool same_context(const Representation& o) const {
        return f_ == o.f_ && (g_ == o.g_ || g_->generators() == o.g_->generators());
    }

   private:
    GroupPtr g_;
    Field f_;
    std::vector<Matrix> images_;
    std::size_t dim_;
};

inline Matrix permutation_matrix(const Field& f, const Perm& p) {
    Matrix m(f, p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(i, p[i]) = 1;
    return m;
}

/// F^n with G permuting coordinates: e_i rho(g) = e_{i^g}.
inline Representation permutation_module(const GroupPtr& G, const Field& f) {
    std::vector<Matrix> imgs;
    for (const auto& p : G->generators()) imgs.push_back(permutation_matrix(f, p));
    return Representation(G, f, std::move(imgs), G->degree());
}

/// FG with basis indexed by element ids, acted on by right multiplication.
inline Representation regular_module(const GroupPtr& G, const Field& f, std::size_t cap = 4096) {
    if (G->order() > cap) fail(ErrorCode::GroupTooLarge, "regular module dimension exceeds cap");
    std::vector<Matrix> imgs;
    for (std::size_t s = 0; s < G->num_generators(); ++s) {
        Matrix m(f, G->order(), G->order());
        for (ElemId x = 0; x < G->order(); ++x) m(x, G->mul(x, G->generator(s))) = 1;
        imgs.push_back(std::move(m));
    }
    return Representation(G, f, std::move(imgs), G->order());
}

inline Representation trivial_module(const GroupPtr& G, const Field& f, std::size_t dim = 1) {
    std::vector<Matrix> imgs(G->num_generators(), Matrix::identity(f, dim));
    return Representation(G, f, std::move(imgs), dim);
}

/// g -> rho(g^-1)^T
inline Representation dual_module(const Representation& M) {
    std::vector<Matrix> imgs;
    for (const auto& m : M.images()) imgs.push_back(inverse(m).transpose());
    return Representation(M.group_ptr(), M.field(), std::move(imgs), M.dim());
}

inline Representation module_sum(const Representation& a, const Representation& b) {
    if (!a.same_context(b)) fail(ErrorCode::MismatchedContext, "module_sum over different group or field");
    std::vector<Matrix> imgs;
    for (std::size_t s = 0; s < a.images().size(); ++s) imgs.push_back(block_diag(a.image(s), b.image(s)));
    return Representation(a.group_ptr(), a.field(), std::move(imgs), a.dim() + b.dim());
}

inline Representation module_tensor(const Representation& a, const Representation& b) {
    if (!a.same_context(b)) fail(ErrorCode::MismatchedContext, "module_tensor over different group or field");
    std::vector<Matrix> imgs;
    for (std::size_t s = 0; s < a.images().size(); ++s) imgs.push_back(kron(a.image(s), b.image(s)));
    return Representation(a.group_ptr(), a.field(), std::move(imgs), a.dim() * b.dim());
}

/// The same module in the basis given by the rows of P: rho' = P rho P^-1.
inline Representation change_basis(const Representation& M, const Matrix& P) {
    const Matrix Pi = inverse(P);
    std::vector<Matrix> imgs;
    for (const auto& m : M.images()) imgs.push_back(P * m * Pi);
    return Representation(M.group_ptr(), M.field(), std::move(imgs), M.dim());
}

/// Restriction to H, whose generators are element ids of M's group.
inline Representation restrict(const Representation& M, const Subgroup& H) {
    const PermGroup& G = M.group();
    for (auto h : H.generators)
        if (h >= G.order()) fail(ErrorCode::NotASubgroupElement, "subgroup generator is not a group element");
    auto HG = std::make_shared<const PermGroup>(G.as_group(H));
    std::vector<Matrix> imgs;
    for (auto h : H.generators) imgs.push_back(M.image_of(h));
    return Representation(HG, M.field(), std::move(imgs), M.dim());
}

/// Restriction to a group given by permutations of the same degree.
inline Representation restrict(const Representation& M, const GroupPtr& H) {
    std::vector<Matrix> imgs;
    for (const auto& p : H->generators()) imgs.push_back(M.image_of(M.group().index_of(p)));
    return Representation(H, M.field(), std::move(imgs), M.dim());
}

inline Poly char_poly_on(const Representation& M, ElemId g) { return char_poly(M.image_of(g)); }

// ---------------------------------------------------------------------------
// Subspaces, submodules, quotients

/// Smallest subspace containing seeds and closed under the given matrices.
inline Subspace spin(const Field& f, std::size_t n, const std::vector<Vec>& seeds, const std::vector<Matrix>& gens) {
    Subspace S(f, n);
    std::vector<Vec> queue;
    for (const auto& v : seeds)
        if (auto r = S.add(v)) queue.push_back(*r);
    for (std::size_t k = 0; k < queue.size() && !S.full(); ++k)
        for (const auto& g : gens) {
            if (auto r = S.add(mul_vec(queue[k], g))) queue.push_back(*r);
            if (S.full()) break;
        }
    return S;
}

inline Subspace spin(const Representation& M, const std::vector<Vec>& seeds) {
    return spin(M.field(), M.dim(), seeds, M.images());
}

inline bool is_submodule(const Representation& M, const Matrix& basis) {
    const Subspace S = [&] {
        Subspace s(M.field(), M.dim());
        for (std::size_t i = 0; i < basis.rows(); ++i) s.add(basis.row_vec(i));
        return s;
    }();
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (const auto& g : M.images())
            if (!S.contains(mul_vec(basis.row_vec(i), g))) return false;
    return true;
}

/// Action on a submodule given by a reduced echelon basis.
inline Representation submodule(const Representation& M, const Echelon& U) {
    const std::size_t k = U.pivots.size();
    std::vector<Matrix> imgs;
    for (const auto& g : M.images()) {
        Matrix r(M.field(), k, k);
        for (std::size_t i = 0; i < k; ++i) {
            const Vec w = mul_vec(U.rref.row_vec(i), g);
            for (std::size_t j = 0; j < k; ++j) r(i, j) = w[U.pivots[j]];
        }
        imgs.push_back(std::move(r));
    }
    return Representation(M.group_ptr(), M.field(), std::move(imgs), k);
}

/// Action on M / U, in the basis of standard vectors at the non-pivot columns of U.
inline Representation quotient(const Representation& M, const Echelon& U) {
    const std::size_t d = M.dim();
    std::vector<bool> is_piv(d, false);
    for (auto p : U.pivots) is_piv[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < d; ++c)
        if (!is_piv[c]) free.push_back(c);
    std::vector<Matrix> imgs;
    for (const auto& g : M.images()) {
        Matrix r(M.field(), free.size(), free.size());
        for (std::size_t i = 0; i < free.size(); ++i) {
            Vec w = g.row_vec(free[i]);
            for (std::size_t j = 0; j < U.pivots.size(); ++j)
                if (w[U.pivots[j]]) axpy(M.field(), w, U.rref.row(j), w[U.pivots[j]]);
            for (std::size_t j = 0; j < free.size(); ++j) r(i, j) = w[free[j]];
        }
        imgs.push_back(std::move(r));
    }
    return Representation(M.group_ptr(), M.field(), std::move(imgs), free.size());
}

/// Basis of Hom_G(S, T): matrices X with rho_S(g) X = X rho_T(g).
inline std::vector<Matrix> hom_basis(const Representation& S, const Representation& T) {
    if (!S.same_context(T)) fail(ErrorCode::MismatchedContext, "hom over different group or field");
    std::vector<std::pair<Matrix, Matrix>> cs;
    for (std::size_t s = 0; s < S.images().size(); ++s) cs.emplace_back(S.image(s), T.image(s));
    return solve_sylvester_like(S.field(), S.dim(), T.dim(), cs);
}

}  // namespace hypermod
