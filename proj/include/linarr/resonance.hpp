#pragma once

// Degree-2 Orlik-Solomon algebra of the cone and the resonance (Aomoto) data built on it.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/linalg.hpp"
#include "linarr/pencils.hpp"

namespace linarr {

/// Vector of weights on the lines with zero sum.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(Vector a) : a_(std::move(a)) {
        Eisenstein total;
        for (const auto& c : a_) total += c;
        if (!total.is_zero()) throw DomainError("weight vector must sum to zero");
    }

    /// chi_first - chi_second for disjoint line sets.
    static WeightVector difference(std::size_t r, std::span<const std::size_t> first, std::span<const std::size_t> second) {
        Vector a(r);
        for (std::size_t i : first) a.at(i) += 1;
        for (std::size_t i : second) a.at(i) -= 1;
        return WeightVector(std::move(a));
    }

    const Vector& values() const noexcept { return a_; }
    std::size_t size() const noexcept { return a_.size(); }
    bool is_zero() const { return linarr::is_zero(a_); }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    Vector a_;
};

/// Lambda^2 of the degree-one generators modulo the relations of the triple points.
class OSDegree2 {
public:
    std::size_t r() const noexcept { return r_; }
    std::size_t pair_count() const noexcept { return r_ * (r_ - 1) / 2; }

    /// Column of e_i e_j, i < j, in lexicographic order of pairs.
    std::size_t pair_index(std::size_t i, std::size_t j) const {
        if (i >= j || j >= r_) throw DomainError("pair_index expects i < j < r");
        return i * r_ - i * (i + 1) / 2 + (j - i - 1);
    }

    /// One row e_i e_j - e_i e_k + e_j e_k per triple point (i < j < k).
    const Matrix& relations() const noexcept { return relations_; }
    const Echelon& relation_echelon() const noexcept { return echelon_; }
    std::size_t relation_rank() const noexcept { return echelon_.rank(); }
    std::size_t quotient_rank() const noexcept { return pair_count() - relation_rank(); }

    /// Canonical representative of a in Lambda^2 / relations, zero on the pivot columns.
    Vector reduce(Vector lambda2) const { return reduce_modulo(std::move(lambda2), echelon_); }

    /// Coordinates of a ^ b in Lambda^2, before passing to the quotient.
    Vector raw_wedge(std::span<const Eisenstein> a, std::span<const Eisenstein> b) const {
        if (a.size() != r_ || b.size() != r_) throw DomainError("weight vector length differs from r");
        Vector out(pair_count());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = i + 1; j < r_; ++j) out[pair_index(i, j)] = a[i] * b[j] - a[j] * b[i];
        return out;
    }

    friend OSDegree2 build_os2(const Arrangement& arr);

private:
    std::size_t r_ = 0;
    Matrix relations_;
    Echelon echelon_;
};

inline OSDegree2 build_os2(const Arrangement& arr) {
    require_admissible(arr);
    OSDegree2 os;
    os.r_ = arr.size();
    std::vector<IncidencePoint> triples = triple_points(intersection_points(arr));
    os.relations_ = Matrix(triples.size(), os.pair_count());
    for (std::size_t row = 0; row < triples.size(); ++row) {
        const auto& l = triples[row].incident_lines;
        os.relations_(row, os.pair_index(l[0], l[1])) = 1;
        os.relations_(row, os.pair_index(l[0], l[2])) = -1;
        os.relations_(row, os.pair_index(l[1], l[2])) = 1;
    }
    os.echelon_ = row_reduce(os.relations_);
    return os;
}

/// Class of a ^ b in the quotient, as its canonical representative.
inline Vector wedge(const OSDegree2& os, const WeightVector& a, const WeightVector& b) {
    return os.reduce(os.raw_wedge(a.values(), b.values()));
}

/// dim { b in K^r : a ^ b = 0 in the quotient }. Always >= 1 since a ^ a = 0; a is resonant
/// exactly when the value is >= 2.
inline std::size_t resonance_kernel_dim(const OSDegree2& os, const WeightVector& a) {
    if (a.size() != os.r()) throw DomainError("weight vector length differs from r");
    if (a.is_zero()) throw DomainError("resonance kernel of the zero vector");
    const std::size_t r = os.r();
    // Rows: relation rows followed by a ^ e_j for every j.
    Matrix stacked(os.relations().rows() + r, os.pair_count());
    for (std::size_t i = 0; i < os.relations().rows(); ++i)
        for (std::size_t c = 0; c < os.pair_count(); ++c) stacked(i, c) = os.relations()(i, c);
    for (std::size_t j = 0; j < r; ++j) {
        Vector e(r);
        e[j] = 1;
        Vector w = os.raw_wedge(a.values(), e);
        for (std::size_t c = 0; c < os.pair_count(); ++c) stacked(os.relations().rows() + j, c) = w[c];
    }
    const std::size_t image_rank = rank(stacked) - os.relation_rank();
    return r - image_rank;
}

/// True when the span of `basis` is isotropic for the wedge map; throws on a dependent basis.
inline bool component_isotropy_check(const OSDegree2& os, const std::vector<WeightVector>& basis) {
    std::vector<Vector> rows;
    for (const auto& v : basis) {
        if (v.size() != os.r()) throw DomainError("weight vector length differs from r");
        rows.push_back(v.values());
    }
    if (rank(Matrix::from_rows(rows, os.r())) != basis.size()) throw DomainError("candidate basis is linearly dependent");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!is_zero(wedge(os, basis[i], basis[j]))) return false;
    return true;
}

enum class ComponentKind { local, global };

inline std::string to_string(ComponentKind k) { return k == ComponentKind::local ? "local" : "global"; }

/// A candidate two-dimensional resonance component: from a triple point (local) or from a
/// pencil decomposition (global).
struct ComponentCandidate {
    ComponentKind kind = ComponentKind::local;
    std::vector<std::size_t> support;  ///< the triple point's lines, or the pencil index
    std::vector<WeightVector> basis;
};

inline std::vector<ComponentCandidate> local_candidates(const Arrangement& arr) {
    std::vector<ComponentCandidate> out;
    const std::size_t r = arr.size();
    for (const auto& p : triple_points(intersection_points(arr))) {
        const auto& l = p.incident_lines;
        std::array<std::size_t, 1> i{l[0]}, j{l[1]}, k{l[2]};
        out.push_back({ComponentKind::local, l,
                       {WeightVector::difference(r, i, j), WeightVector::difference(r, j, k)}});
    }
    return out;
}

inline ComponentCandidate pencil_candidate(const PencilDecomposition& pencil, std::size_t r, std::size_t index) {
    const auto& c = pencil.classes;
    return {ComponentKind::global,
            {index},
            {WeightVector::difference(r, c[0], c[1]), WeightVector::difference(r, c[1], c[2])}};
}

/// c_1 u + c_2 v with random nonzero integer coefficients from a seeded generator.
inline WeightVector generic_combination(const std::vector<WeightVector>& basis, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(1, 97);
    Vector out(basis.front().size());
    for (const auto& v : basis) {
        Eisenstein c(Rational(coeff(rng) * (coeff(rng) % 2 == 0 ? 1 : -1)), Rational(coeff(rng) - 49));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v.values()[i];
    }
    return WeightVector(std::move(out));
}

struct CandidateResult {
    ComponentCandidate candidate;
    bool isotropic = false;
    std::size_t generic_kernel_dim = 0;
};

/// Isotropy and the kernel dimension at a generic point, for every local and global candidate.
inline std::vector<CandidateResult> check_candidates(const Arrangement& arr, const std::vector<PencilDecomposition>& pencils,
                                                     std::uint64_t seed = 20240601) {
    OSDegree2 os = build_os2(arr);
    std::mt19937_64 rng(seed);
    std::vector<ComponentCandidate> candidates = local_candidates(arr);
    for (std::size_t i = 0; i < pencils.size(); ++i) candidates.push_back(pencil_candidate(pencils[i], arr.size(), i));
    std::vector<CandidateResult> out;
    for (auto& c : candidates) {
        CandidateResult res;
        res.isotropic = component_isotropy_check(os, c.basis);
        res.generic_kernel_dim = resonance_kernel_dim(os, generic_combination(c.basis, rng));
        res.candidate = std::move(c);
        out.push_back(std::move(res));
    }
    return out;
}

/// Number of distinct isotropic subspaces among the global candidates.
inline std::size_t pencil_component_count(const std::vector<CandidateResult>& results) {
    std::vector<Matrix> seen;
    for (const auto& res : results) {
        if (res.candidate.kind != ComponentKind::global || !res.isotropic) continue;
        std::vector<Vector> rows;
        for (const auto& v : res.candidate.basis) rows.push_back(v.values());
        Matrix reduced = row_reduce(Matrix::from_rows(rows, rows.front().size())).reduced;
        if (std::find(seen.begin(), seen.end(), reduced) == seen.end()) seen.push_back(std::move(reduced));
    }
    return seen.size();
}

}  // namespace linarr
