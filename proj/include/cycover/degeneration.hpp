#pragma once

// Integer bookkeeping for the semistable degeneration whose central fiber is
// V1 u V2 u E1 u ... u Em. Only dimensions of cohomology groups are tracked;
// the chain reproduces h^{1,1}(X) = 2 h^2(Y) - k for every m >= 1.

#include <cstdint>
#include <stdexcept>

namespace cycover {

struct DegenerationTrace {
    std::int64_t m = 0;   // #Sing(Y)
    std::int64_t h2_Y = 0;
    std::int64_t k = 0;
    std::int64_t r_components = 0; // m + 2
    std::int64_t h2_W0_prime = 0;  // h^2(V1 u V2)
    std::int64_t h2_W0 = 0;        // h^2 of the full central fiber
    std::int64_t h2_Wt = 0;        // h^2 of the generic fiber
    // The geometric hypotheses on the anticanonical member D (singularities
    // match Sing(Y), smooth intersection with the branch surface, h^1(O_D)=0)
    // are input metadata that this bookkeeping cannot verify.
    bool hypotheses_assumed = true;
};

// Clemens-Schmid rank count: h^2(W_t) = h^2(W_0) - r + 1 for a semistable
// degeneration with r central-fiber components and h^2(O_{W_t}) = 0.
inline std::int64_t clemens_schmid_h2(std::int64_t h2_W0, std::int64_t r) {
    if (r < 1)
        throw std::invalid_argument("clemens_schmid_h2: r must be >= 1");
    std::int64_t h2 = h2_W0 - r + 1;
    if (h2 < 0)
        throw std::domain_error("clemens_schmid_h2: negative rank");
    return h2;
}

inline std::int64_t h11_from_degeneration(std::int64_t h2_Y, std::int64_t k) {
    if (k < 0 || k > h2_Y)
        throw std::invalid_argument("h11_from_degeneration: need 0 <= k <= h2(Y)");
    return 2 * h2_Y - k;
}

inline DegenerationTrace semistable_bookkeeping(std::int64_t h2_Y, std::int64_t k,
                                                std::int64_t m) {
    if (k < 0 || k > h2_Y)
        throw std::invalid_argument("semistable_bookkeeping: need 0 <= k <= h2(Y)");
    if (m < 1)
        throw std::invalid_argument("semistable_bookkeeping: need m >= 1 singular point");

    DegenerationTrace t;
    t.m = m;
    t.h2_Y = h2_Y;
    t.k = k;
    t.r_components = m + 2;
    // Mayer-Vietoris over V1 u V2: 2 h^2(Y) + 2m + 1 - (k + m)
    t.h2_W0_prime = 2 * h2_Y + m + 1 - k;
    // Exceptional divisors add m ranks and the gluing removes m again.
    t.h2_W0 = t.h2_W0_prime;
    t.h2_Wt = t.h2_W0 - m - 1;

    if (t.h2_Wt != h11_from_degeneration(h2_Y, k))
        throw std::logic_error("semistable_bookkeeping: h2(W_t) != 2h2(Y) - k");
    if (t.h2_Wt != clemens_schmid_h2(t.h2_W0, t.r_components))
        throw std::logic_error("semistable_bookkeeping: Clemens-Schmid mismatch");
    return t;
}

} // namespace cycover
