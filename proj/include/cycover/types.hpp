#pragma once

// Shared domain types: the Q-Fano input datum and the Calabi-Yau output datum.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycover/rational.hpp"

namespace cycover {

// Input datum of a Q-Fano 3-fold with only 1/2(1,1,1) singularities.
// minus_K3 is the anticanonical degree -K_Y^3; half-integral values occur,
// so 2*minus_K3 must be an integer.
struct FanoRecord {
    std::vector<std::string> fano_ids;
    Rational minus_K3;
    std::int64_t N = 0;    // #Sing(Y)
    std::int64_t e_Y = 0;  // topological Euler number of Y
    std::int64_t h2_Y = 1; // h^2(Y, Q)
    std::int64_t k = 1;    // dim im(H^2(Y,Q) -> H^2(D,Q))

    FanoRecord(std::vector<std::string> ids, Rational mk3, std::int64_t n,
               std::int64_t ey, std::int64_t h2 = 1, std::int64_t kk = 1)
        : fano_ids(std::move(ids)), minus_K3(std::move(mk3)), N(n), e_Y(ey),
          h2_Y(h2), k(kk) {
        validate();
    }

    void validate() const {
        if (fano_ids.empty())
            throw std::invalid_argument("fano record: empty id list");
        if (!(minus_K3 > Rational(0)))
            throw std::invalid_argument("fano record: -K^3 must be positive");
        if (!(minus_K3 * Rational(2)).is_integer())
            throw std::invalid_argument(
                "fano record: 2*(-K^3) = " + (minus_K3 * Rational(2)).str() +
                " is not an integer");
        if (N < 0)
            throw std::invalid_argument("fano record: N < 0");
        if (h2_Y < 0 || k < 0 || k > h2_Y)
            throw std::invalid_argument("fano record: need 0 <= k <= h2(Y)");
    }
};

// Topological and Hodge invariants of the Calabi-Yau double cover.
struct CYInvariants {
    std::int64_t h11 = 0;
    std::int64_t h12 = 0;
    std::int64_t H3 = 0;  // degree of the ample generator
    std::int64_t c2H = 0; // H . c2(X)
    std::int64_t e = 0;   // topological Euler number

    friend bool operator==(const CYInvariants&, const CYInvariants&) = default;
};

} // namespace cycover
