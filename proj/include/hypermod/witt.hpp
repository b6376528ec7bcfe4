/**
 * @file witt.hpp
 * @brief Witt equivalence of symmetric modules.
 *
 * Two symmetric modules are Witt-equivalent when their orthogonal sum is
 * hyperbolic, which is decided from characteristic polynomials of F-special
 * elements on the two modules.
 */
#pragma once

#include <optional>

#include "forms.hpp"

namespace hypermod {

struct WittEquivalence {
    bool equivalent = true;
    std::optional<ElemId> element;  // F-special g where the product is not a square
    std::optional<Poly> product;
};

inline WittEquivalence witt_equivalent(const BilinearForm& a, const BilinearForm& b) {
    if (!a.module().same_context(b.module()))
        fail(ErrorCode::MismatchedContext, "witt_equivalent over different group or field");
    a.require_symmetric_module();
    b.require_symmetric_module();
    const Representation& M = a.module();
    for (ElemId g : f_special_class_reps(M.group(), M.field().size())) {
        Poly c = char_poly_on(M, g) * char_poly_on(b.module(), g);
        if (!is_square_poly(c).square) return {false, g, std::move(c)};
    }
    return {};
}

struct WittClassDescriptor {
    std::size_t kernel_dim = 0;
    FactorMultiset kernel_factors;
};

inline WittClassDescriptor witt_descriptor(const BilinearForm& form, std::uint64_t seed = kDefaultSeed) {
    const WittKernelReport r = witt_kernel(form, seed);
    WittClassDescriptor d;
    d.kernel_dim = r.kernel_form.dim();
    if (d.kernel_dim) d.kernel_factors = composition_factors(r.kernel_form.module(), seed);
    return d;
}

/// Same kernel dimension and isomorphic kernel factor multisets.
inline bool same_descriptor(const WittClassDescriptor& a, const WittClassDescriptor& b) {
    return a.kernel_dim == b.kernel_dim && same_factors(a.kernel_factors, b.kernel_factors);
}

}  // namespace hypermod
