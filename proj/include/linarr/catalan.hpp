#pragma once

// Quasi-toric relations F1 f^3 + F2 g^3 + F3 h^3 = 0 (Catalan equations of type (3,3,3)):
// verification, equivalence, generation by doubling, pullback along t = num/den, and descent.

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linarr/hom_form.hpp"
#include "linarr/linalg.hpp"
#include "linarr/pencils.hpp"
#include "linarr/uni_poly.hpp"

namespace linarr {

template <typename P>
concept RelationPoly = std::same_as<P, HomForm> || std::same_as<P, UniPoly>;

namespace detail {

inline HomForm unit(const HomForm*) { return HomForm::constant(1); }
inline UniPoly unit(const UniPoly*) { return UniPoly(1); }

inline int poly_degree(const HomForm& p) { return p.degree(); }
inline int poly_degree(const UniPoly& p) { return p.degree(); }

/// True when the terms sum to zero. Forms of different degrees are summed degree by degree.
inline bool sum_vanishes(std::span<const HomForm> terms) {
    std::map<int, HomForm> by_degree;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        auto [it, inserted] = by_degree.try_emplace(t.degree(), t);
        if (!inserted) it->second += t;
    }
    return std::all_of(by_degree.begin(), by_degree.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

inline bool sum_vanishes(std::span<const UniPoly> terms) {
    UniPoly acc;
    for (const auto& t : terms) acc += t;
    return acc.is_zero();
}

/// Flat list of (key, coefficient) pairs used for proportionality tests and content.
inline std::vector<std::pair<Exponent, Eisenstein>> coefficient_list(const HomForm& p) {
    return {p.terms().begin(), p.terms().end()};
}

inline std::vector<std::pair<Exponent, Eisenstein>> coefficient_list(const UniPoly& p) {
    std::vector<std::pair<Exponent, Eisenstein>> out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (!p.coeffs()[k].is_zero()) out.push_back({{static_cast<int>(k), 0, 0}, p.coeffs()[k]});
    return out;
}

inline HomForm scale(const Eisenstein& c, const HomForm& p) { return c * p; }
inline UniPoly scale(const Eisenstein& c, const UniPoly& p) { return UniPoly(c) * p; }

}  // namespace detail

/// c with p = c q, if p and q are proportional and both nonzero.
template <RelationPoly P>
std::optional<Eisenstein> proportionality_ratio(const P& p, const P& q) {
    auto a = detail::coefficient_list(p);
    auto b = detail::coefficient_list(q);
    if (a.empty() || b.empty() || a.size() != b.size()) return std::nullopt;
    if constexpr (std::same_as<P, HomForm>)
        if (p.degree() != q.degree()) return std::nullopt;
    Eisenstein ratio = a.front().second / b.front().second;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || a[i].second != ratio * b[i].second) return std::nullopt;
    return ratio;
}

/// Coefficients F and solution (f, g, h) of F1 f^3 + F2 g^3 + F3 h^3 = 0.
template <RelationPoly P>
struct Relation {
    std::array<P, 3> F;
    std::array<P, 3> sol;

    static constexpr bool univariate = std::same_as<P, UniPoly>;

    /// The three terms F_i * sol_i^3.
    std::array<P, 3> terms() const {
        return {F[0] * pow(sol[0], 3), F[1] * pow(sol[1], 3), F[2] * pow(sol[2], 3)};
    }

    int solution_degree() const {
        int d = -1;
        for (const auto& s : sol)
            if (!s.is_zero()) d = std::max(d, detail::poly_degree(s));
        return d;
    }
};

using PlaneRelation = Relation<HomForm>;
using UniRelation = Relation<UniPoly>;

/// Exact check of the identity, for a nonzero solution.
template <RelationPoly P>
bool verify_relation(const Relation<P>& rel) {
    if (std::all_of(rel.sol.begin(), rel.sol.end(), [](const P& s) { return s.is_zero(); })) return false;
    auto t = rel.terms();
    return detail::sum_vanishes(std::span<const P>(t));
}

namespace detail {

template <RelationPoly P>
void require_verified(const Relation<P>& rel, const char* where) {
    if (!verify_relation(rel)) throw Error(std::string(where) + ": relation does not verify");
}

}  // namespace detail

/// Equivalence of relations: F = lambda F', (f, g, h) = (lf f', lg g', lh h') with
/// lf/lh and lg/lh cube roots of unity and lf lg = lh^2.
template <RelationPoly P>
bool relations_equivalent(const Relation<P>& r1, const Relation<P>& r2) {
    if (!verify_relation(r1) || !verify_relation(r2)) throw DomainError("relations_equivalent expects verified relations");

    std::optional<Eisenstein> lambda;
    for (std::size_t i = 0; i < 3; ++i) {
        if (r1.F[i].is_zero() != r2.F[i].is_zero()) return false;
        if (r1.F[i].is_zero()) continue;
        auto c = proportionality_ratio(r1.F[i], r2.F[i]);
        if (!c || (lambda && *lambda != *c)) return false;
        lambda = c;
    }

    // Scale of each solution component; nullopt where both components vanish (free choice).
    std::array<std::optional<Eisenstein>, 3> scale;
    for (std::size_t i = 0; i < 3; ++i) {
        if (r1.sol[i].is_zero() != r2.sol[i].is_zero()) return false;
        if (r1.sol[i].is_zero()) continue;
        scale[i] = proportionality_ratio(r1.sol[i], r2.sol[i]);
        if (!scale[i]) return false;
    }

    const std::array<Eisenstein, 3> roots{1, Eisenstein::omega(), Eisenstein::omega_squared()};
    Eisenstein anchor = 1;
    for (const auto& s : scale)
        if (s) {
            anchor = *s;
            break;
        }
    // A free scale only has to be some unit multiple of a fixed one; try all three.
    std::array<std::vector<Eisenstein>, 3> choices;
    for (std::size_t i = 0; i < 3; ++i) {
        if (scale[i])
            choices[i] = {*scale[i]};
        else
            for (const auto& z : roots) choices[i].push_back(anchor * z);
    }
    for (const auto& lf : choices[0])
        for (const auto& lg : choices[1])
            for (const auto& lh : choices[2])
                if (is_cube_root_of_unity(lf / lh) && is_cube_root_of_unity(lg / lh) && lf * lg == lh * lh) return true;
    return false;
}

/// (lambda_1 F_1, lambda_2 F_2, lambda_3 F_3) with the solution (1, 1, 1).
inline PlaneRelation base_solution(const PencilDecomposition& pencil) {
    auto g = pencil.scaled_products();
    HomForm one = HomForm::constant(1);
    PlaneRelation rel{g, {one, one, one}};
    detail::require_verified(rel, "base_solution");
    return rel;
}

/// For G1 + G2 = G3 returns (f, g, h) = (-(G2 + G3), G1 + G3, 2 G1 - G3), which satisfies
/// G1 f^3 + G2 g^3 + G3 h^3 = 0. This is the duplication map on c^3 = ab, a + b = 1 with
/// denominators cleared.
template <RelationPoly P>
std::array<P, 3> doubling_step(const std::array<P, 3>& G) {
    std::array<P, 3> check{G[0], G[1], -G[2]};
    if (!detail::sum_vanishes(std::span<const P>(check))) throw DomainError("doubling_step expects G1 + G2 = G3");
    const Eisenstein two = 2;
    std::array<P, 3> out{-(G[1] + G[2]), G[0] + G[2], detail::scale(two, G[0]) - G[2]};
    Relation<P> rel{G, out};
    detail::require_verified(rel, "doubling_step");
    return out;
}

namespace detail {

/// Largest rational q with every coefficient of every polynomial in q * Z[w].
template <RelationPoly P>
Rational rational_content(const std::array<P, 3>& polys) {
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& p : polys)
        for (const auto& [key, c] : coefficient_list(p))
            for (const Rational* q : {&c.re(), &c.wc()}) {
                if (sgn(*q) == 0) continue;
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q->get_num_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q->get_den_mpz_t());
            }
    if (num_gcd == 0) return 1;
    Rational out(num_gcd, den_lcm);
    out.canonicalize();
    return out;
}

/// Divides the solution by its rational content and by common linear factors.
inline void reduce_solution(std::array<HomForm, 3>& sol, std::span<const HomForm> linear_forms) {
    for (const auto& l : linear_forms) {
        for (;;) {
            if (std::any_of(sol.begin(), sol.end(), [](const HomForm& s) { return !s.is_zero() && s.degree() == 0; })) break;
            std::array<FormDivision, 3> divs;
            bool all = true;
            for (std::size_t i = 0; i < 3 && all; ++i) {
                divs[i] = divide_by_linear(sol[i], l);
                all = divs[i].remainder.is_zero();
            }
            if (!all) break;
            for (std::size_t i = 0; i < 3; ++i) sol[i] = sol[i].is_zero() ? HomForm(sol[i].degree() - 1) : divs[i].quotient;
        }
    }
    Eisenstein inv = Rational(1 / rational_content(sol));
    for (auto& s : sol) s = inv * s;
}

/// Divides by the monic gcd and by the rational content.
inline void reduce_solution(std::array<UniPoly, 3>& sol) {
    UniPoly g = uni_gcd(sol[0], uni_gcd(sol[1], sol[2]));
    for (auto& s : sol) s = exact_div(s, g);
    Eisenstein inv = Rational(1 / rational_content(sol));
    for (auto& s : sol) s = UniPoly(inv) * s;
}

}  // namespace detail

/// Iterated doubling starting from a relation with solution (1, 1, 1), i.e. G1 + G2 + G3 = 0.
///
/// Each step writes the current relation as H1 + H2 = H3 with H = (G1 f^3, G2 g^3, -G3 h^3),
/// doubles, and multiplies back: the new solution is (f f', g g', -h h'). Plane solutions are
/// reduced by rational content and by the given linear forms; univariate ones by their gcd.
template <RelationPoly P>
std::vector<Relation<P>> generate_solutions(const Relation<P>& base, std::size_t steps,
                                            std::span<const HomForm> linear_forms = {}) {
    if (steps < 1) throw DomainError("generate_solutions needs at least one step");
    detail::require_verified(base, "generate_solutions");
    std::vector<Relation<P>> out;
    Relation<P> current = base;
    for (std::size_t k = 0; k < steps; ++k) {
        std::array<P, 3> t = current.terms();
        std::array<P, 3> h{t[0], t[1], -t[2]};
        std::array<P, 3> d = doubling_step(h);
        Relation<P> next{base.F, {current.sol[0] * d[0], current.sol[1] * d[1], -(current.sol[2] * d[2])}};
        if constexpr (std::same_as<P, HomForm>)
            detail::reduce_solution(next.sol, linear_forms);
        else
            detail::reduce_solution(next.sol);
        detail::require_verified(next, "generate_solutions");
        out.push_back(next);
        current = std::move(next);
    }
    return out;
}

inline std::vector<PlaneRelation> generate_solutions(const PencilDecomposition& pencil, std::size_t steps,
                                                     std::span<const HomForm> linear_forms = {}) {
    return generate_solutions(base_solution(pencil), steps, linear_forms);
}

/// a = -F1 f^3 / (F3 h^3), b = -F2 g^3 / (F3 h^3): the point of c^3 = ab, a + b = 1 attached
/// to a relation, kept as numerators over a common denominator.
template <RelationPoly P>
struct MWPointCoords {
    P a_numerator;
    P b_numerator;
    P denominator;

    bool sums_to_one() const {
        std::array<P, 3> t{a_numerator, b_numerator, -denominator};
        return detail::sum_vanishes(std::span<const P>(t));
    }
};

template <RelationPoly P>
MWPointCoords<P> mw_point_coords(const Relation<P>& rel) {
    auto t = rel.terms();
    if (t[2].is_zero()) throw DomainError("F3 h^3 vanishes; the point is at infinity");
    return {-t[0], -t[1], t[2]};
}

namespace detail {

/// sum_k c_k num^k den^(D - k) for p = sum_k c_k t^k, deg p <= D.
inline HomForm homogenize(const UniPoly& p, const HomForm& num, const HomForm& den, int total) {
    const int e = num.degree();
    HomForm out(e * total);
    std::vector<HomForm> num_pow{HomForm::constant(1)};
    std::vector<HomForm> den_pow{HomForm::constant(1)};
    for (int k = 1; k <= total; ++k) {
        num_pow.push_back(num_pow.back() * num);
        den_pow.push_back(den_pow.back() * den);
    }
    for (int k = 0; k <= p.degree(); ++k)
        out += p.coeffs()[static_cast<std::size_t>(k)] * (num_pow[static_cast<std::size_t>(k)] *
                                                          den_pow[static_cast<std::size_t>(total - k)]);
    return out;
}

}  // namespace detail

/// Substitutes t = num/den into a univariate relation and clears denominators.
inline PlaneRelation pullback_solution(const UniRelation& rel, const HomForm& num, const HomForm& den) {
    if (num.degree() != den.degree()) throw DegreeMismatch("pullback needs deg num = deg den");
    if (den.is_zero()) throw DomainError("pullback denominator is zero");
    detail::require_verified(rel, "pullback_solution");
    int coeff_degree = 0;
    for (const auto& f : rel.F) coeff_degree = std::max(coeff_degree, f.degree());
    int sol_degree = std::max(0, rel.solution_degree());
    PlaneRelation out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.F[i] = detail::homogenize(rel.F[i], num, den, coeff_degree);
        out.sol[i] = detail::homogenize(rel.sol[i], num, den, sol_degree);
    }
    detail::require_verified(out, "pullback_solution");
    return out;
}

/// Sets t = 1 in a form in two variables x, y with z absent: x -> t, y -> 1.
inline UniPoly dehomogenize_xy(const HomForm& f) {
    UniPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (e[2] != 0) throw DomainError("dehomogenize_xy: form involves z");
        out += UniPoly::monomial(c, static_cast<std::size_t>(e[0]));
    }
    return out;
}

/// Why a descent step could not proceed: u_index (0..2) is f + w^index g, and `leftover` is
/// what remains after removing known factors and cubes.
class DescentObstruction : public DomainError {
public:
    DescentObstruction(std::size_t index, UniPoly leftover)
        : DomainError("descent obstructed: f + w^" + std::to_string(index) + " g leaves non-constant factor " +
                      to_string(leftover)),
          index_(index),
          leftover_(std::move(leftover)) {}

    std::size_t index() const noexcept { return index_; }
    const UniPoly& leftover() const noexcept { return leftover_; }

private:
    std::size_t index_;
    UniPoly leftover_;
};

namespace detail {

/// Splits p = constant * prod known^e (e mod 3 kept) * v^3; returns (known part, v, rest).
struct KnownSplit {
    UniPoly known_part = 1;
    UniPoly cube_root = 1;
    UniPoly rest;
};

inline KnownSplit strip_known_factors(UniPoly p, std::span<const UniPoly> known) {
    KnownSplit out;
    for (const auto& raw : known) {
        if (raw.degree() != 1) throw DomainError("known factors must be linear");
        UniPoly l = raw.monic();
        unsigned e = 0;
        while (p.degree() >= 1 && divides(l, p)) {
            p = exact_div(p, l);
            ++e;
        }
        out.known_part *= pow(l, e % 3);
        out.cube_root *= pow(l, e / 3);
    }
    out.rest = std::move(p);
    return out;
}

}  // namespace detail

/// One descent step for f^3 + g^3 + F3 h^3 = 0 with F3 a product of known linear factors.
///
/// The factors u_k = f + w^k g multiply to f^3 + g^3 = -F3 h^3 and satisfy
/// u_0 + w u_1 + w^2 u_2 = 0. Writing u_k = a_k A_k v_k^3 with A_k built from known factors
/// gives the relation (a_0 A_0, w a_1 A_1, w^2 a_2 A_2) with solution (v_0, v_1, v_2), whose
/// coefficients are linearly dependent.
inline UniRelation descend_step(const UniRelation& rel, std::span<const UniPoly> known_factors) {
    if (rel.F[0] != UniPoly(1) || rel.F[1] != UniPoly(1)) throw DomainError("descend_step expects F1 = F2 = 1");
    if (rel.F[2].is_zero()) throw DomainError("descend_step: F3 = 0 is degenerate");
    detail::require_verified(rel, "descend_step");

    auto f3 = detail::strip_known_factors(rel.F[2], known_factors);
    if (!f3.rest.is_constant() || !f3.cube_root.is_constant())
        throw DomainError("F3 is not a product of the known factors with multiplicities <= 2");

    std::array<UniPoly, 3> sol = rel.sol;
    UniPoly g = uni_gcd(sol[0], uni_gcd(sol[1], sol[2]));
    for (auto& s : sol) s = exact_div(s, g);
    const int h_degree = std::max(0, sol[2].degree());

    const std::array<Eisenstein, 3> roots{1, Eisenstein::omega(), Eisenstein::omega_squared()};
    UniRelation out;
    for (std::size_t k = 0; k < 3; ++k) {
        UniPoly u = sol[0] + UniPoly(roots[k]) * sol[1];
        if (u.is_zero()) throw DomainError("descend_step: f^3 + g^3 = 0 is degenerate");
        auto split = detail::strip_known_factors(u, known_factors);
        CubeSplit cubes = squarefree_cube_split(split.rest);
        if (!cubes.remainder.is_constant()) throw DescentObstruction(k, cubes.remainder);
        out.F[k] = UniPoly(roots[k] * cubes.remainder.leading()) * split.known_part;
        out.sol[k] = split.cube_root * cubes.cube_root;
    }
    detail::require_verified(out, "descend_step");
    const bool all_constant = std::all_of(out.sol.begin(), out.sol.end(), [](const UniPoly& v) { return v.is_constant(); });
    if (!all_constant && out.solution_degree() >= h_degree) throw Error("descend_step did not decrease the solution degree");
    return out;
}

/// True when the three polynomials are linearly dependent over Q(w).
template <RelationPoly P>
bool linearly_dependent(const std::array<P, 3>& polys) {
    std::map<Exponent, std::size_t> columns;
    for (const auto& p : polys)
        for (const auto& [key, c] : detail::coefficient_list(p)) columns.try_emplace(key, columns.size());
    Matrix m(3, columns.size());
    for (std::size_t i = 0; i < 3; ++i)
        for (const auto& [key, c] : detail::coefficient_list(polys[i])) m(i, columns.at(key)) = c;
    return rank(m) < 3;
}

}  // namespace linarr
