/**
 * @file codes.hpp
 * @brief Self-dual binary codes invariant under a permutation group.
 *
 * Coordinates are the points 0..n-1 of the group; a code is stored by its
 * reduced echelon generator matrix over GF(2).
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "forms.hpp"

namespace hypermod {

/// cycle size -> number of cycles, fixed points included.
using CycleType = std::map<std::size_t, std::size_t>;

inline CycleType cycle_type(const Perm& p) {
    CycleType ct;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        ++ct[len];
    }
    return ct;
}

inline std::string to_string(const CycleType& ct) {
    std::string s = "{";
    for (const auto& [size, count] : ct) {
        if (s.size() > 1) s += ", ";
        s += std::to_string(size) + ":" + std::to_string(count);
    }
    return s + "}";
}

class BinaryCode {
   public:
    explicit BinaryCode(const Matrix& generators)
        : n_(generators.cols()), g_(row_echelon(generators).rref) {
        if (generators.field().degree() != 1) fail(ErrorCode::InvalidArgument, "binary code needs GF(2) entries");
    }

    std::size_t length() const { return n_; }
    std::size_t dim() const { return g_.rows(); }
    const Matrix& generator_matrix() const { return g_; }

    /// Rows as bitstrings, coordinate 0 first.
    std::vector<std::string> rows() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < g_.rows(); ++i) {
            std::string s;
            for (std::size_t j = 0; j < n_; ++j) s += g_(i, j) ? '1' : '0';
            out.push_back(std::move(s));
        }
        return out;
    }

    bool contains(const Vec& v) const {
        Vec r = v;
        const Echelon e{g_, pivots()};
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (r[e.pivots[i]]) axpy(g_.field(), r, g_.row(i), 1);
        return Subspace::is_zero(r);
    }

    bool is_self_dual() const {
        if (2 * dim() != n_) return false;
        return (g_ * g_.transpose()).is_zero();
    }

    bool is_invariant(const Perm& p) const {
        for (std::size_t i = 0; i < g_.rows(); ++i) {
            Vec v(n_, 0);
            for (std::size_t j = 0; j < n_; ++j) v[p[j]] = g_(i, j);
            if (!contains(v)) return false;
        }
        return true;
    }

    friend bool operator==(const BinaryCode& a, const BinaryCode& b) { return a.g_ == b.g_; }

   private:
    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < g_.rows(); ++i) {
            std::size_t c = 0;
            while (g_(i, c) == 0) ++c;
            p.push_back(c);
        }
        return p;
    }

    std::size_t n_;
    Matrix g_;
};

struct CodeVerdict {
    bool exists = false;
    std::optional<ElemId> sigma;            // F_2-special element with an odd cycle count
    std::optional<std::size_t> cycle_size;  // the offending cycle size
};

/// Existence of a G-invariant self-dual code: every F_2-special element has an
/// even number of cycles of each size.
inline CodeVerdict code_exists(const PermGroup& G) {
    for (ElemId s : f_special_class_reps(G, 2))
        for (const auto& [size, count] : cycle_type(G.perm(s)))
            if (count % 2) return {false, s, size};
    return {true, std::nullopt, std::nullopt};
}

inline BinaryCode construct_code(const GroupPtr& G, std::uint64_t seed = kDefaultSeed) {
    const Field f2 = make_field(1);
    const BilinearForm form(permutation_module(G, f2), Matrix::identity(f2, G->degree()));
    const BinaryCode c(construct_self_perpendicular(form, seed));
    for (const auto& p : G->generators())
        if (!c.is_invariant(p)) fail(ErrorCode::ConstructionFailed, "constructed code is not invariant");
    if (!c.is_self_dual()) fail(ErrorCode::ConstructionFailed, "constructed code is not self-dual");
    return c;
}

/// All self-dual codes of even length n <= 12 by extending totally isotropic
/// subspaces that contain the all-ones word.
inline std::vector<BinaryCode> enumerate_selfdual_codes(std::size_t n) {
    if (n % 2) fail(ErrorCode::OddLength, "self-dual codes need even length");
    if (n > 12) fail(ErrorCode::LengthTooLarge, "enumeration limited to n <= 12");
    if (n == 0) return {};
    using Word = std::uint32_t;
    auto dot = [](Word a, Word b) { return __builtin_popcount(a & b) & 1; };
    // canonical reduced echelon basis of the span of a word set
    auto canon = [n](std::vector<Word> rows) {
        std::vector<Word> out;
        for (int c = static_cast<int>(n) - 1; c >= 0; --c) {
            const Word bit = Word{1} << c;
            auto it = std::find_if(rows.begin(), rows.end(), [&](Word w) { return w & bit; });
            if (it == rows.end()) continue;
            const Word p = *it;
            rows.erase(it);
            for (auto& w : rows)
                if (w & bit) w ^= p;
            for (auto& w : out)
                if (w & bit) w ^= p;
            out.push_back(p);
        }
        return out;
    };
    const Word ones = (Word{1} << n) - 1;
    std::set<std::vector<Word>> level{canon({ones})};
    for (std::size_t k = 1; k < n / 2; ++k) {
        std::set<std::vector<Word>> next;
        for (const auto& basis : level) {
            std::set<Word> span{0};
            for (Word b : basis) {
                std::set<Word> more;
                for (Word s : span) more.insert(s ^ b);
                span.insert(more.begin(), more.end());
            }
            for (Word v = 1; v <= ones; ++v) {
                if (span.count(v) || dot(v, v)) continue;
                bool orth = true;
                for (Word b : basis) orth = orth && !dot(v, b);
                if (!orth) continue;
                auto rows = basis;
                rows.push_back(v);
                next.insert(canon(rows));
            }
        }
        level = std::move(next);
    }
    const Field f2 = make_field(1);
    std::vector<BinaryCode> out;
    for (const auto& basis : level) {
        Matrix m(f2, basis.size(), n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = (basis[i] >> j) & 1;
        out.emplace_back(m);
    }
    std::sort(out.begin(), out.end(),
              [](const BinaryCode& a, const BinaryCode& b) { return a.rows() < b.rows(); });
    return out;
}

/// prod_{i=1}^{n/2-1} (2^i + 1), the number of self-dual codes of length n.
inline std::uint64_t selfdual_code_count(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t i = 1; i + 1 <= n / 2; ++i) c *= (std::uint64_t{1} << i) + 1;
    return c;
}

}  // namespace hypermod
