#ifndef GHURWITZ_POLYNOMIAL_HPP
#define GHURWITZ_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ghurwitz/rational.hpp"

namespace ghurwitz {

/// Dense univariate polynomial over the rationals, ascending powers.
/// Normalized so that the leading coefficient is nonzero; the zero
/// polynomial has an empty coefficient vector and degree -1.
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
    /// x + r (monic linear factor with root -r... root at -r when r > 0).
    static RationalPoly linear(const Rational& r) { return RationalPoly({r, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::int64_t k) const {
        if (k < 0 || k >= static_cast<std::int64_t>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    RationalPoly derivative() const;
    RationalPoly monic() const;
    RationalPoly operator-() const;
    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const Rational& s, const RationalPoly& a);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    /// Substitutes -z for z.
    RationalPoly reflected() const;
    /// Multiplies by z^k (k >= 0).
    RationalPoly shifted_up(std::int64_t k) const;

    std::string str(const std::string& var = "z") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

struct PolyDivMod {
    RationalPoly quotient, remainder;
};
PolyDivMod divmod(const RationalPoly& a, const RationalPoly& b);

/// Monic gcd; gcd(0, 0) = 0, gcd of coprime polynomials is 1.
RationalPoly gcd_monic(RationalPoly a, RationalPoly b);

/// Yun decomposition: f = lc * prod factors[i]^(i+1) with factors[i]
/// monic, squarefree and pairwise coprime (some may be 1).
std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& f);

/// All real roots of f lie strictly inside (-bound, bound).
Rational cauchy_root_bound(const RationalPoly& f);

}  // namespace ghurwitz

#endif
