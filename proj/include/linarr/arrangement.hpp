#pragma once

// Line arrangements in P^2 over Q(w): intersection points, multiplicities, combinatorics.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linarr/hom_form.hpp"
#include "linarr/linalg.hpp"

namespace linarr {

/// Scales a projective triple so that its first nonzero entry is 1.
inline Point normalize_projective(Point p) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (p[i].is_zero()) continue;
        Eisenstein inv = p[i].inverse();
        for (auto& c : p) c *= inv;
        return p;
    }
    throw DomainError("the zero vector is not a projective point");
}

inline Point cross(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// The line a x + b y + c z = 0, normalized so the first nonzero coefficient is 1.
class Line {
public:
    explicit Line(const Point& coeffs) : coeffs_(normalize_projective(coeffs)) {}
    Line(const Eisenstein& a, const Eisenstein& b, const Eisenstein& c) : Line(Point{a, b, c}) {}

    const Point& coeffs() const noexcept { return coeffs_; }
    HomForm form() const { return HomForm::linear(coeffs_[0], coeffs_[1], coeffs_[2]); }

    bool contains(const Point& p) const {
        return (coeffs_[0] * p[0] + coeffs_[1] * p[1] + coeffs_[2] * p[2]).is_zero();
    }

    friend bool operator==(const Line&, const Line&) = default;

private:
    Point coeffs_;
};

class Arrangement {
public:
    Arrangement() = default;

    /// Throws DomainError if two lines coincide.
    Arrangement(std::vector<Line> lines, std::string label) : lines_(std::move(lines)), label_(std::move(label)) {
        std::set<Point> seen;
        for (const auto& l : lines_)
            if (!seen.insert(l.coeffs()).second) throw DomainError("arrangement '" + label_ + "' repeats a line");
    }

    const std::vector<Line>& lines() const noexcept { return lines_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return lines_.size(); }

    std::vector<HomForm> forms() const {
        std::vector<HomForm> out;
        out.reserve(lines_.size());
        for (const auto& l : lines_) out.push_back(l.form());
        return out;
    }

    HomForm defining_polynomial() const {
        std::vector<HomForm> fs = forms();
        return product_of_linear_forms(fs);
    }

private:
    std::vector<Line> lines_;
    std::string label_;
};

struct IncidencePoint {
    Point point;
    std::vector<std::size_t> incident_lines;

    std::size_t multiplicity() const noexcept { return incident_lines.size(); }
};

/// All intersection points, ordered by their sorted incident-line lists.
inline std::vector<IncidencePoint> intersection_points(const Arrangement& arr) {
    std::map<Point, std::set<std::size_t>> grouped;
    const auto& lines = arr.lines();
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Point p = normalize_projective(cross(lines[i].coeffs(), lines[j].coeffs()));
            auto& s = grouped[p];
            s.insert(i);
            s.insert(j);
        }
    std::vector<IncidencePoint> out;
    out.reserve(grouped.size());
    for (auto& [p, s] : grouped) out.push_back({p, {s.begin(), s.end()}});
    std::sort(out.begin(), out.end(),
              [](const IncidencePoint& a, const IncidencePoint& b) { return a.incident_lines < b.incident_lines; });
    return out;
}

/// Number of points per multiplicity.
inline std::map<std::size_t, std::size_t> point_census(const std::vector<IncidencePoint>& points) {
    std::map<std::size_t, std::size_t> census;
    for (const auto& p : points) ++census[p.multiplicity()];
    return census;
}

inline std::vector<IncidencePoint> triple_points(const std::vector<IncidencePoint>& points) {
    std::vector<IncidencePoint> out;
    std::copy_if(points.begin(), points.end(), std::back_inserter(out),
                 [](const IncidencePoint& p) { return p.multiplicity() == 3; });
    return out;
}

/// First point of multiplicity > 3, if any; std::nullopt means the arrangement is admissible.
inline std::optional<IncidencePoint> validate_multiplicities(const Arrangement& arr) {
    for (auto& p : intersection_points(arr))
        if (p.multiplicity() > 3) return p;
    return std::nullopt;
}

class MultiplicityViolation : public DomainError {
public:
    explicit MultiplicityViolation(IncidencePoint p)
        : DomainError("intersection point of multiplicity " + std::to_string(p.multiplicity()) + " > 3"),
          point_(std::move(p)) {}

    const IncidencePoint& point() const noexcept { return point_; }

private:
    IncidencePoint point_;
};

inline void require_admissible(const Arrangement& arr) {
    if (auto bad = validate_multiplicities(arr)) throw MultiplicityViolation(*bad);
}

/// Incidence structure up to relabeling of lines.
///
/// For r <= kMaxExactLines the point list is the lexicographically smallest relabeling over all
/// line permutations, which is a complete invariant. Beyond that only the multiplicity census and
/// the per-line degree sequence are recorded and `weak` is set.
struct CombinatorialType {
    static constexpr std::size_t kMaxExactLines = 10;

    std::size_t lines = 0;
    bool weak = false;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> points;  ///< (multiplicity, lines)
    std::vector<std::vector<std::size_t>> degree_sequence;  ///< per line: sorted multiplicities, weak only

    friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;
};

namespace detail {

inline std::uint32_t relabel_mask(std::uint32_t mask, const std::vector<std::size_t>& perm) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U)
        if (mask & 1U) out |= 1U << perm[i];
    return out;
}

inline std::vector<std::size_t> mask_to_indices(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U)
        if (mask & 1U) out.push_back(i);
    return out;
}

}  // namespace detail

inline CombinatorialType combinatorial_type(const Arrangement& arr) {
    const std::size_t r = arr.size();
    std::vector<IncidencePoint> points = intersection_points(arr);
    CombinatorialType type;
    type.lines = r;

    if (r > CombinatorialType::kMaxExactLines) {
        type.weak = true;
        std::vector<std::vector<std::size_t>> per_line(r);
        for (const auto& p : points) {
            type.points.push_back({p.multiplicity(), {}});
            for (std::size_t l : p.incident_lines) per_line[l].push_back(p.multiplicity());
        }
        std::sort(type.points.begin(), type.points.end());
        for (auto& d : per_line) std::sort(d.begin(), d.end());
        std::sort(per_line.begin(), per_line.end());
        type.degree_sequence = std::move(per_line);
        return type;
    }

    // Double points are exactly the line pairs not covered by a point of higher multiplicity,
    // so it suffices to canonize the higher points.
    std::vector<std::uint32_t> masks;
    for (const auto& p : points) {
        if (p.multiplicity() < 3) continue;
        std::uint32_t m = 0;
        for (std::size_t l : p.incident_lines) m |= 1U << l;
        masks.push_back(m);
    }
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> current(masks.size());
    do {
        for (std::size_t k = 0; k < masks.size(); ++k) current[k] = detail::relabel_mask(masks[k], perm);
        std::sort(current.begin(), current.end());
        if (best.empty() || current < best) best = current;
    } while (!masks.empty() && std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<bool>> covered(r, std::vector<bool>(r, false));
    for (std::uint32_t m : best) {
        auto idx = detail::mask_to_indices(m);
        for (std::size_t a : idx)
            for (std::size_t b : idx) covered[a][b] = true;
        type.points.push_back({idx.size(), idx});
    }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            if (!covered[a][b]) type.points.push_back({2, {a, b}});
    std::sort(type.points.begin(), type.points.end());
    return type;
}

inline bool combinatorially_equivalent(const Arrangement& a, const Arrangement& b) {
    CombinatorialType ta = combinatorial_type(a);
    return !ta.weak && ta == combinatorial_type(b);
}

/// Image of the arrangement under the point map p -> M p; a line l becomes l M^{-1}.
inline Arrangement proj_transform(const Arrangement& arr, const Matrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw DomainError("projective transformation must be 3x3");
    if (determinant3(m).is_zero()) throw DomainError("singular projective transformation");
    Matrix inv = inverse(m);
    std::vector<Line> lines;
    lines.reserve(arr.size());
    for (const auto& l : arr.lines()) {
        Point c{};
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) c[j] += l.coeffs()[k] * inv(k, j);
        lines.emplace_back(c);
    }
    return {std::move(lines), arr.label()};
}

/// Same lines in the order given by `order` (a permutation of 0..r-1).
inline Arrangement reorder_lines(const Arrangement& arr, const std::vector<std::size_t>& order) {
    if (order.size() != arr.size()) throw DomainError("reordering has the wrong length");
    std::vector<Line> lines;
    lines.reserve(order.size());
    for (std::size_t i : order) lines.push_back(arr.lines().at(i));
    return {std::move(lines), arr.label()};
}

}  // namespace linarr
