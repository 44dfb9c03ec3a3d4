#pragma once

// Exact divisor-class calculus replaying the double-cover construction over
// a base with 1/2(1^[n]) points, for any odd n >= 3. Expressions live in one
// of three named bases; mixing bases is an error, not a coercion.
//
//   TildeY:       fK  = f*K_Y,  E  (exceptional divisor of the blow-up)
//   TildeX:       pfK = pi~* f* K_Y,  F = pi~^{-1}(E)
//   ExceptionalF: H   = ample generator of Pic(F)

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "cycover/rational.hpp"

namespace cycover {

enum class DivisorBasis { TildeY, TildeX, ExceptionalF };

inline const char* basis_name(DivisorBasis b) {
    switch (b) {
    case DivisorBasis::TildeY: return "TildeY";
    case DivisorBasis::TildeX: return "TildeX";
    case DivisorBasis::ExceptionalF: return "ExceptionalF";
    }
    return "?";
}

class DivisorExpr {
public:
    explicit DivisorExpr(DivisorBasis basis) : basis_(basis) {}

    DivisorBasis basis() const { return basis_; }
    const std::map<std::string, Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(const std::string& symbol) const {
        auto it = coeffs_.find(symbol);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    DivisorExpr& add_term(const std::string& symbol, const Rational& coeff) {
        check_symbol(symbol);
        Rational c = coefficient(symbol) + coeff;
        if (c == Rational(0))
            coeffs_.erase(symbol);
        else
            coeffs_[symbol] = c;
        return *this;
    }

    friend DivisorExpr operator+(const DivisorExpr& a, const DivisorExpr& b) {
        if (a.basis_ != b.basis_)
            throw std::invalid_argument(std::string("divisor basis mismatch: ") +
                                        basis_name(a.basis_) + " + " +
                                        basis_name(b.basis_));
        DivisorExpr out = a;
        for (const auto& [sym, c] : b.coeffs_)
            out.add_term(sym, c);
        return out;
    }

    friend DivisorExpr operator-(const DivisorExpr& a, const DivisorExpr& b) {
        return a + (Rational(-1) * b);
    }

    friend DivisorExpr operator*(const Rational& s, const DivisorExpr& a) {
        DivisorExpr out(a.basis_);
        if (s == Rational(0))
            return out;
        for (const auto& [sym, c] : a.coeffs_)
            out.coeffs_[sym] = s * c;
        return out;
    }

    friend bool operator==(const DivisorExpr& a, const DivisorExpr& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        if (coeffs_.empty())
            return "0";
        std::string out;
        for (const auto& [sym, c] : coeffs_) {
            if (!out.empty())
                out += " + ";
            if (c == Rational(1))
                out += sym;
            else if (c == Rational(-1))
                out += "-" + sym;
            else if (c.is_integer())
                out += c.str() + "*" + sym;
            else
                out += "(" + c.str() + ")*" + sym;
        }
        return out;
    }

private:
    void check_symbol(const std::string& symbol) const {
        bool ok = false;
        switch (basis_) {
        case DivisorBasis::TildeY: ok = symbol == "fK" || symbol == "E"; break;
        case DivisorBasis::TildeX: ok = symbol == "pfK" || symbol == "F"; break;
        case DivisorBasis::ExceptionalF: ok = symbol == "H"; break;
        }
        if (!ok)
            throw std::invalid_argument("symbol '" + symbol + "' not in basis " +
                                        basis_name(basis_));
    }

    DivisorBasis basis_;
    std::map<std::string, Rational> coeffs_;
};

inline DivisorExpr tilde_y_expr(Rational fK, Rational E) {
    DivisorExpr out(DivisorBasis::TildeY);
    out.add_term("fK", fK);
    out.add_term("E", E);
    return out;
}

namespace detail {
inline std::int64_t half_dim(std::int64_t n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("dimension must be odd and >= 3");
    return (n - 1) / 2; // m with n = 2m + 1
}
} // namespace detail

// K_Ytilde = f*K_Y + ((n-2)/2) E for the blow-up of a 1/2(1^[n]) point.
inline DivisorExpr blowup_canonical(std::int64_t n) {
    detail::half_dim(n);
    return tilde_y_expr(Rational(1), Rational(n - 2, 2));
}

// The branch half D = -K_Ytilde + mE; satisfies 2D = f*(-2K_Y) + E.
inline DivisorExpr branch_bundle(std::int64_t n) {
    std::int64_t m = detail::half_dim(n);
    DivisorExpr d = Rational(-1) * blowup_canonical(n) +
                    tilde_y_expr(Rational(0), Rational(m));
    DivisorExpr expected_2d = tilde_y_expr(Rational(-2), Rational(1));
    if (!(Rational(2) * d == expected_2d))
        throw std::logic_error("branch bundle identity 2D = f*(-2K_Y) + E failed");
    return d;
}

// Pullback along the double cover pi~: fK -> pfK, E -> 2F (E is in the
// branch locus). Linear in the expression.
inline DivisorExpr pullback_to_cover(const DivisorExpr& expr) {
    if (expr.basis() != DivisorBasis::TildeY)
        throw std::invalid_argument("pullback_to_cover: expression not in TildeY basis");
    DivisorExpr out(DivisorBasis::TildeX);
    out.add_term("pfK", expr.coefficient("fK"));
    out.add_term("F", Rational(2) * expr.coefficient("E"));
    return out;
}

// K_Xtilde = pi~*(K_Ytilde + D) = pi~*(mE) = 2mF.
inline DivisorExpr cover_canonical(std::int64_t n) {
    std::int64_t m = detail::half_dim(n);
    DivisorExpr downstairs = blowup_canonical(n) + branch_bundle(n);
    if (!(downstairs == tilde_y_expr(Rational(0), Rational(m))))
        throw std::logic_error("K_Ytilde + D != mE");
    return pullback_to_cover(downstairs);
}

// g*K_X = K_Xtilde - (n-1)F; must vanish identically.
inline DivisorExpr contracted_canonical(std::int64_t n) {
    DivisorExpr kx = cover_canonical(n);
    DivisorExpr f_part(DivisorBasis::TildeX);
    f_part.add_term("F", Rational(n - 1));
    DivisorExpr out = kx - f_part;
    if (!out.is_zero())
        throw std::logic_error("g*K_X = K_Xtilde - (n-1)F is nonzero");
    return out;
}

// Solve n (F|_F) = -n H from adjunction on F ~ P^{n-1}: F|_F = -H.
inline DivisorExpr f_normal_class(std::int64_t n) {
    detail::half_dim(n);
    DivisorExpr rhs(DivisorBasis::ExceptionalF);
    rhs.add_term("H", Rational(-n));
    DivisorExpr out = Rational(1, n) * rhs;
    return out;
}

} // namespace cycover
