#ifndef GHURWITZ_LAURENT_HPP
#define GHURWITZ_LAURENT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ghurwitz/rational.hpp"

namespace ghurwitz {

struct range_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct insufficient_data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite slice of Laurent coefficients f_k, k in [lo, hi], with
/// coeffs[t] = f_{lo+t}. `exact` means each stored value equals the true
/// coefficient of the represented function; otherwise `tail_bound` bounds
/// the absolute error of every stored coefficient.
///
/// A window may be empty (no indices); empty windows arise naturally from
/// m-way splits of narrow windows and carry no coefficient claims.
struct LaurentWindow {
    std::int64_t lo = 0;
    std::vector<Rational> coeffs;
    bool exact = true;
    std::optional<double> tail_bound;

    LaurentWindow() = default;
    LaurentWindow(std::int64_t lo_, std::vector<Rational> coeffs_, bool exact_ = true,
                  std::optional<double> tail_bound_ = std::nullopt)
        : lo(lo_), coeffs(std::move(coeffs_)), exact(exact_), tail_bound(tail_bound_) {}

    bool empty() const { return coeffs.empty(); }
    std::int64_t hi() const { return lo + static_cast<std::int64_t>(coeffs.size()) - 1; }
    bool contains(std::int64_t k) const { return !empty() && k >= lo && k <= hi(); }
    const Rational& at(std::int64_t k) const {
        if (!contains(k)) throw range_error("coefficient index outside window");
        return coeffs[static_cast<std::size_t>(k - lo)];
    }
};

/// Symbolic description of a product-form generating function
///   C z^j e^{Az + A0/z} prod(1+z/beta)/prod(1-z/delta)
///                     * prod(1+z^{-1}/beta')/prod(1-z^{-1}/delta').
/// All listed parameters are strictly positive; lists are finite
/// truncations. `zero_at_origin` replaces the leading numerator factor of
/// the positive side by a plain factor z.
struct FactorSpec {
    Rational C = Rational(1);
    std::int64_t j = 0;
    Rational A = Rational(0);
    Rational A0 = Rational(0);
    std::vector<Rational> pos_zeros;
    std::vector<Rational> pos_poles;
    std::vector<Rational> neg_zeros;
    std::vector<Rational> neg_poles;
    bool zero_at_origin = false;
};

/// What is known about the true coefficients outside a window's index
/// range, declared by the caller of window_mul.
enum class Support {
    window_only,   // nothing known outside the stored range
    finite,        // true coefficients vanish outside the stored range
    lower_finite,  // vanish below lo; unknown above hi
    upper_finite,  // vanish above hi; unknown below lo
};

/// Geometric decay declaration for the open end(s) of an operand:
/// |f_k| <= (max stored |coeff|) * ratio^(distance beyond the window).
struct DecayDecl {
    double ratio = 0.0;  // in (0,1) to be usable
    bool usable() const { return ratio > 0.0 && ratio < 1.0; }
};

/// alpha*u + beta*v on the intersection of the index ranges.
LaurentWindow window_add(const LaurentWindow& u, const LaurentWindow& v, const Rational& alpha,
                         const Rational& beta);

/// Multiplication by z: index range shifts up by one.
LaurentWindow window_shift(const LaurentWindow& u);

/// Explicit zero-widening. The caller asserts that the true coefficients
/// vanish on the added indices; nothing in the library pads implicitly.
LaurentWindow pad_window(const LaurentWindow& u, std::int64_t new_lo, std::int64_t new_hi);

/// Cauchy product restricted to [out_lo, out_hi]. Exact only when every
/// contributing index pair is stored (given the declared supports);
/// truncated contributions need a decay declaration and yield an
/// approximate window with a documented tail bound.
LaurentWindow window_mul(const LaurentWindow& u, const LaurentWindow& v, std::int64_t out_lo,
                         std::int64_t out_hi, Support u_support, Support v_support,
                         DecayDecl u_decay = {}, DecayDecl v_decay = {});

/// Laurent coefficients of the product form on [out_lo, out_hi].
/// Exact iff one side of the product has finite support (no poles and no
/// exponential factor on that side); otherwise both infinite sides are
/// truncated at `exp_truncation` terms and a tail bound is reported.
LaurentWindow generate_product_form(const FactorSpec& spec, std::int64_t out_lo,
                                    std::int64_t out_hi, std::int64_t exp_truncation);

/// Even/odd split of f(z) = q(z^2) + z p(z^2): q_k = f_{2k}, p_k = f_{2k+1}.
struct EvenOddSplit {
    LaurentWindow p;
    LaurentWindow q;
};
EvenOddSplit split_even_odd(const LaurentWindow& f);

/// M-way split f(z) = sum_{n=0}^{M-1} z^n p_n(z^M): p_n at k is f_{kM+n}.
std::vector<LaurentWindow> split_m_way(const LaurentWindow& f, std::int64_t M);

/// Inverse of split_m_way over the original range (test/verification aid).
LaurentWindow interleave_m_way(const std::vector<LaurentWindow>& parts, std::int64_t lo,
                               std::int64_t hi);

/// Successive coefficient ratios a_k/a_{k+1} of a nonnegative window,
/// with annulus estimates and gap detection. A gap (zero between
/// nonzeros) is reported, not thrown: it falsifies total nonnegativity
/// of the associated Toeplitz matrix.
struct RatioProfile {
    struct Entry {
        std::int64_t index;
        bool infinite;   // a_k != 0, a_{k+1} == 0
        Rational ratio;  // meaningful iff !infinite
    };
    std::vector<Entry> ratios;
    std::optional<Entry> inner_estimate;  // first defined ratio
    std::optional<Entry> outer_estimate;  // last defined ratio
    std::vector<std::int64_t> gaps;
    bool nondecreasing = true;
};
RatioProfile ratio_profile(const LaurentWindow& u);

}  // namespace ghurwitz

#endif
