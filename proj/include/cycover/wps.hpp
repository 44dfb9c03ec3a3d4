#pragma once

// Weighted projective space checks: well-formedness, quotient-singularity
// types at coordinate points, adjunction degree of a hypersurface, and the
// branch-degree test for a Calabi-Yau double cover of the base.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycover {

struct WeightedProjectiveSpace {
    std::vector<std::int64_t> weights;

    explicit WeightedProjectiveSpace(std::vector<std::int64_t> w)
        : weights(std::move(w)) {
        if (weights.size() < 2)
            throw std::invalid_argument("weighted projective space: need >= 2 weights");
        for (auto wi : weights)
            if (wi < 1)
                throw std::invalid_argument("weighted projective space: weights must be >= 1");
    }

    std::int64_t weight_sum() const {
        return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    }
};

// Quotient singularity 1/r(a_1, ..., a_n) with residues reduced mod r.
struct QuotientSingularityType {
    std::int64_t r = 2;
    std::vector<std::int64_t> residues;

    QuotientSingularityType(std::int64_t order, std::vector<std::int64_t> res)
        : r(order), residues(std::move(res)) {
        if (r < 2)
            throw std::invalid_argument("quotient singularity: r must be >= 2");
        for (auto& a : residues)
            a = ((a % r) + r) % r;
    }

    std::string str() const {
        std::string out = "1/" + std::to_string(r) + "(";
        for (std::size_t i = 0; i < residues.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(residues[i]);
        }
        return out + ")";
    }

    friend bool operator==(const QuotientSingularityType&,
                           const QuotientSingularityType&) = default;
};

struct HypersurfaceSpec {
    WeightedProjectiveSpace ambient;
    std::int64_t degree = 1;

    HypersurfaceSpec(WeightedProjectiveSpace amb, std::int64_t deg)
        : ambient(std::move(amb)), degree(deg) {
        if (degree < 1)
            throw std::invalid_argument("hypersurface: degree must be >= 1");
    }
};

// Well-formed iff every n of the n+1 weights are coprime.
inline bool well_formed(const WeightedProjectiveSpace& P) {
    const auto& w = P.weights;
    for (std::size_t omit = 0; omit < w.size(); ++omit) {
        std::int64_t g = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != omit)
                g = std::gcd(g, w[i]);
        if (g != 1)
            return false;
    }
    return true;
}

struct CoordinatePoint {
    std::size_t index = 0;
    // Empty when the coordinate point is smooth (weight 1).
    std::optional<QuotientSingularityType> singularity;
};

// Coordinate point P_i with w_i >= 2 is a quotient singularity of type
// 1/w_i(other weights mod w_i).
inline std::vector<CoordinatePoint>
coordinate_singularities(const WeightedProjectiveSpace& P) {
    if (!well_formed(P))
        throw std::invalid_argument("coordinate_singularities: space is not well-formed");
    std::vector<CoordinatePoint> out;
    for (std::size_t i = 0; i < P.weights.size(); ++i) {
        CoordinatePoint pt;
        pt.index = i;
        if (P.weights[i] >= 2) {
            std::vector<std::int64_t> res;
            for (std::size_t j = 0; j < P.weights.size(); ++j)
                if (j != i)
                    res.push_back(P.weights[j]);
            pt.singularity = QuotientSingularityType(P.weights[i], std::move(res));
        }
        out.push_back(std::move(pt));
    }
    return out;
}

// 1/2(1,...,1)?
inline bool is_half_one_type(const QuotientSingularityType& t) {
    if (t.r != 2)
        return false;
    for (auto a : t.residues)
        if (a != 1)
            return false;
    return true;
}

// degree - sum of weights; 0 means anticanonically balanced.
inline std::int64_t adjunction_degree(const HypersurfaceSpec& h) {
    return h.degree - h.ambient.weight_sum();
}

struct DoubleCoverReport {
    bool branch_degree_matches = false; // branch_degree == 2 * sum(weights)
    std::vector<CoordinatePoint> singular_points; // only the singular ones
    bool all_half_one = true;
    bool verdict = false;
};

// Degree-level check that a double cover of the base branched in degree
// branch_degree (plus the singular points) yields a Calabi-Yau: the branch
// divisor must lie in |-2K| and every coordinate singularity must be
// of type 1/2(1,...,1).
inline DoubleCoverReport double_cover_check(const WeightedProjectiveSpace& base,
                                            std::int64_t branch_degree) {
    DoubleCoverReport rep;
    rep.branch_degree_matches = (branch_degree == 2 * base.weight_sum());
    for (auto& pt : coordinate_singularities(base)) {
        if (pt.singularity) {
            if (!is_half_one_type(*pt.singularity))
                rep.all_half_one = false;
            rep.singular_points.push_back(pt);
        }
    }
    rep.verdict = rep.branch_degree_matches && rep.all_half_one;
    return rep;
}

} // namespace cycover
