#pragma once

// Invariants of the Calabi-Yau double cover of a Q-Fano 3-fold with only
// 1/2(1,1,1) singularities:
//
//   h^{1,1} = 2 h^2(Y) - k
//   H^3     = -2 K_Y^3
//   H.c2(X) = 48 - 3N - 2 K_Y^3
//   e(X)    = 2 e(Y) + 4 K_Y^3 + 2N - 48
//   h^{1,2} = 25 - e(Y) - 2 K_Y^3 - N
//
// plus the integrality test excluding the ambient multiple l = 2 and the
// Euler number of the branch surface used as a cross-check.

#include <cstdint>
#include <stdexcept>

#include "cycover/types.hpp"

namespace cycover {

// Outcome of the l=2 exclusion: l is forced to 1 unless both H^3/4 and
// (chi(O(H)) - 2) = (-K^3 - N)/8 would be integral under l=2.
struct L2Verdict {
    enum class Kind { ForcedL1, Ambiguous };
    Kind verdict = Kind::ForcedL1;
    bool h3_over_4_integral = false;
    bool chi_defect_integral = false;
};

inline std::int64_t cy_h11(const FanoRecord& rec) {
    std::int64_t h11 = 2 * rec.h2_Y - rec.k;
    if (h11 <= 0)
        throw std::domain_error("h11 = 2h2(Y) - k is not positive");
    return h11;
}

inline std::int64_t cy_H3(const FanoRecord& rec) {
    return (rec.minus_K3 * Rational(2)).to_int64();
}

inline std::int64_t cy_c2H(const FanoRecord& rec) {
    // K_Y^3 = -minus_K3
    Rational v = Rational(48) - Rational(3 * rec.N) + Rational(2) * rec.minus_K3;
    return v.to_int64();
}

inline std::int64_t cy_euler(const FanoRecord& rec) {
    Rational v = Rational(2 * rec.e_Y) - Rational(4) * rec.minus_K3 +
                 Rational(2 * rec.N) - Rational(48);
    return v.to_int64();
}

inline std::int64_t cy_h12(const FanoRecord& rec) {
    Rational v = Rational(25 - rec.e_Y) + Rational(2) * rec.minus_K3 - Rational(rec.N);
    std::int64_t h12 = v.to_int64();
    if (h12 < 0)
        throw std::domain_error("h12 is negative");
    return h12;
}

// e(S') for the pulled-back branch surface S' in the blow-up of Y.
inline std::int64_t euler_branch_surface(const FanoRecord& rec) {
    Rational v = Rational(48) - Rational(3 * rec.N) + Rational(4) * rec.minus_K3;
    return v.to_int64();
}

inline L2Verdict exclude_l2(const FanoRecord& rec) {
    L2Verdict out;
    out.h3_over_4_integral = (rec.minus_K3 / Rational(4)).is_integer();
    out.chi_defect_integral =
        ((rec.minus_K3 - Rational(rec.N)) / Rational(8)).is_integer();
    out.verdict = (out.h3_over_4_integral && out.chi_defect_integral)
                      ? L2Verdict::Kind::Ambiguous
                      : L2Verdict::Kind::ForcedL1;
    return out;
}

// All five invariants plus a flag for the one ambiguous input class:
// when (-K^3, N) = (4,4) the l=2 exclusion fails, so only h11 and e are
// unconditional; H3, c2H and h12 are reported under the l=1 convention
// with the warning set.
struct ComputedInvariants {
    CYInvariants values;
    bool l2_warning = false;
};

inline ComputedInvariants compute_all(const FanoRecord& rec) {
    ComputedInvariants out;
    out.values.h11 = cy_h11(rec);
    out.values.h12 = cy_h12(rec);
    out.values.H3 = cy_H3(rec);
    out.values.c2H = cy_c2H(rec);
    out.values.e = cy_euler(rec);
    out.l2_warning = exclude_l2(rec).verdict == L2Verdict::Kind::Ambiguous;

    if (out.values.e != 2 * (out.values.h11 - out.values.h12))
        throw std::domain_error("inconsistent inputs: e != 2(h11 - h12)");
    // c2H = 2 K_Y^3 + e(S'), i.e. c2H - (-2*minus_K3) ... with K^3 = -minus_K3
    Rational lhs = Rational(out.values.c2H);
    Rational rhs = Rational(-2) * rec.minus_K3 + Rational(euler_branch_surface(rec));
    if (lhs != rhs)
        throw std::domain_error("inconsistent inputs: c2H != 2K^3 + e(S')");
    if (out.values.H3 <= 0)
        throw std::domain_error("inconsistent inputs: H^3 <= 0");
    return out;
}

} // namespace cycover
