#ifndef GHURWITZ_REALROOTS_HPP
#define GHURWITZ_REALROOTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghurwitz/polynomial.hpp"

namespace ghurwitz {

/// Isolating interval for one distinct real root. lo == hi means the
/// root is known exactly.
struct RootInterval {
    Rational lo, hi;
    int multiplicity = 1;
    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
};

struct RootIsolation {
    std::vector<RootInterval> intervals;  // sorted, pairwise disjoint
};

/// Isolates the distinct real roots of p in (lo, hi], with multiplicities
/// from the exact squarefree decomposition.
RootIsolation sturm_isolate(const RationalPoly& p, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of a nonzero polynomial in (lo, hi],
/// by Sturm sign-variation counts.
int sturm_count(const RationalPoly& p, const Rational& lo, const Rational& hi);

struct ChainElement {
    enum class Kind { zero, pole };
    enum class Side { pos, neg };
    Kind kind = Kind::zero;
    Side side = Side::pos;
    bool exact = false;
    Rational value_lo, value_hi;  // equal when exact
};

/// Outcome of a structural interlacing check: either the labeled chain of
/// zeros and poles, or the first violation found.
struct SVerdict {
    bool is_s_function = false;
    std::vector<ChainElement> chain;
    std::string violation;  // empty when is_s_function
};

/// Checks that q(z)/p(z) is a ratio of the interlacing kind: all roots of
/// both polynomials real, simple and <= 0 (a zero of q at the origin is
/// allowed), positive for large positive z, and the merged roots ordered
/// by absolute value alternate starting with a root of q. A common factor
/// of p and q is removed first (it cancels in the ratio).
SVerdict check_interlacing(const RationalPoly& p, const RationalPoly& q);

struct Residue {
    RootInterval pole;                  // location of -alpha (negative)
    Rational pole_alpha_lo, pole_alpha_hi;  // alpha = -root, positive
    std::optional<Rational> exact_value;
    Rational value_lo, value_hi;  // certified enclosure of the coefficient
    int sign = 0;
};

struct PartialFractions {
    Rational constant_term;  // C q(0) / p(0)
    std::vector<Residue> residues;
    bool all_exact = true;
};

/// Residue coefficients A of C q(z)/p(z) = const + sum A z/(z+alpha):
/// A = C q(z) / (z p'(z)) at each pole z = -alpha. Exact for rational
/// poles; otherwise a sign-certified rational enclosure.
PartialFractions partial_fraction_residues(const Rational& C, const RationalPoly& q,
                                           const RationalPoly& p);

/// Routh-style exact quasi-stability certificate. The even/odd parts are
/// reduced by the symmetric factor gcd(f, +-f(-z)) (the classical
/// singular-row situation), the symmetric part is tested for purely
/// imaginary roots, and the remaining factor is decided by the sign
/// variations of its Euclidean remainder chain (the Routh array rows).
struct RouthCertificate {
    bool quasi_stable = false;
    std::int64_t origin_multiplicity = 0;  // z^a factor
    RationalPoly symmetric_even;           // E with gcd factor d(z) = E(z^2)
    bool symmetric_ok = true;              // all roots of E real and negative
    std::int64_t reduced_degree = 0;
    std::int64_t cauchy_index = 0;
    std::int64_t rhp_roots_reduced = 0;    // (reduced_degree - cauchy_index)/2
    std::vector<std::vector<Rational>> chain_rows;
    std::string failure;  // reason when not quasi-stable
};

/// True iff f has no roots with positive real part (imaginary-axis roots
/// allowed). Exact; f must be nonzero.
RouthCertificate routh_quasi_stability(const RationalPoly& f);

/// Zero lists of a two-sided product form: values are the positive
/// parameters; a value x on the neg side stands for a factor in 1/z and
/// enters the chain as 1/x.
struct SideLists {
    std::vector<Rational> pos;
    std::vector<Rational> neg;
};

/// Checks the two-sided chain: all reciprocal neg-side values below all
/// pos-side values, strict global alternation zero/pole ascending, the
/// largest neg-side element a pole and the smallest pos-side element a
/// zero. p_zeros are the poles of the ratio (alphas), q_zeros its zeros.
SVerdict laurent_interlacing_check(const SideLists& p_zeros, const SideLists& q_zeros);

/// Bounded-denominator rational root extraction: removes every rational
/// root r = u/v with v <= den_bound, returning (root, multiplicity) pairs
/// and the remaining factor. Used for exact residues and readable chains.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;
    RationalPoly remaining;
};
RationalRoots extract_rational_roots(const RationalPoly& f, long den_bound = 512);

}  // namespace ghurwitz

#endif
