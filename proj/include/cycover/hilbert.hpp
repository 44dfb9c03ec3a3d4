#pragma once

// Hilbert polynomial chi(O_X(nH)) = (H^3/6) n^3 + (H.c2/12) n of a polarized
// Calabi-Yau 3-fold, the embedding dimension under |8H|, and grouping of
// records into Hilbert-scheme families by coefficient equality.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycover/rational.hpp"
#include "cycover/types.hpp"

namespace cycover {

class HilbertPolynomial {
public:
    // Coefficients a3 = H^3/6 and a1 = c2H/12 of the odd cubic a3 n^3 + a1 n.
    HilbertPolynomial(Rational a3, Rational a1)
        : a3_(std::move(a3)), a1_(std::move(a1)) {
        if (!(a3_ > Rational(0)))
            throw std::invalid_argument("hilbert polynomial: leading coefficient <= 0");
        // Finite integrality scan; catches corrupted invariants, not a proof.
        for (std::int64_t n = -20; n <= 20; ++n)
            (void)evaluate(n);
    }

    const Rational& a3() const { return a3_; }
    const Rational& a1() const { return a1_; }

    // chi(O(nH)) as an exact integer.
    std::int64_t evaluate(std::int64_t n) const {
        Rational nn(n);
        Rational v = a3_ * nn * nn * nn + a1_ * nn;
        return v.to_int64();
    }

    friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        return a.a3_ == b.a3_ && a.a1_ == b.a1_;
    }

private:
    Rational a3_;
    Rational a1_;
};

inline HilbertPolynomial hilbert_polynomial(const CYInvariants& inv) {
    return HilbertPolynomial(Rational(inv.H3, 6), Rational(inv.c2H, 12));
}

inline std::int64_t chi(const HilbertPolynomial& poly, std::int64_t n) {
    return poly.evaluate(n);
}

// N with X embedded in P^N by |8H|: chi(O(8H)) - 1.
inline std::int64_t embedding_dimension(const CYInvariants& inv) {
    return hilbert_polynomial(inv).evaluate(8) - 1;
}

struct HilbertGroup {
    std::int64_t H3 = 0;
    std::int64_t c2H = 0;
    std::vector<std::int64_t> ids;
};

// Partition by Hilbert polynomial, equivalently by the pair (H3, c2H).
// Groups ordered by (H3, c2H); ids sorted within each group.
inline std::vector<HilbertGroup>
group_by_hilbert(const std::vector<std::pair<std::int64_t, CYInvariants>>& records) {
    if (records.empty())
        throw std::invalid_argument("group_by_hilbert: empty input");
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> buckets;
    for (const auto& [id, inv] : records)
        buckets[{inv.H3, inv.c2H}].push_back(id);
    std::vector<HilbertGroup> out;
    for (auto& [key, ids] : buckets) {
        std::sort(ids.begin(), ids.end());
        out.push_back({key.first, key.second, std::move(ids)});
    }
    return out;
}

} // namespace cycover
