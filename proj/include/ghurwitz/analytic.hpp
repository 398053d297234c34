#ifndef GHURWITZ_ANALYTIC_HPP
#define GHURWITZ_ANALYTIC_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ghurwitz/laurent.hpp"
#include "ghurwitz/polynomial.hpp"

namespace ghurwitz {

struct sampling_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct root_finding_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(Complex)>;

enum class Region { upper_half_plane, right_half_plane, sector, ray };

/// Seed-deterministic sampler, log-uniform in radius over (r_min, r_max)
/// and uniform in angle strictly inside the region.
struct ComplexSampler {
    Region region = Region::upper_half_plane;
    double sector_half_angle = 0.0;  // for Region::sector
    double ray_angle = 0.0;          // for Region::ray
    int count = 1000;
    std::uint64_t seed = 1;
    double r_min = 1e-3;
    double r_max = 1e3;

    std::vector<Complex> generate() const;
};

/// The numeric layer is a falsifier only: a pass is sampled evidence,
/// never a proof, and it never upgrades an exact verdict.
struct SampleReport {
    bool pass = true;
    Complex worst_z{0.0, 0.0};
    Complex worst_value{0.0, 0.0};
    double worst_metric = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
};

/// Pass iff Im z * Im F(z) >= -tol at every sample; reports the
/// minimizing sample. Samples landing on poles are redrawn.
SampleReport sample_im_nonneg(const ComplexFn& F, const ComplexSampler& sampler, double tol);

/// Scans G(ir) = e^{i A r - i A0 / r} (ir)^zpow F(ir) for r in (0, r_max]
/// for an argument crossing of an odd multiple of pi; returns a point
/// with Re G < 0 and |Im G| <= tol, or nullopt when r_max is too small.
/// Requires A^2 + A0^2 > 0.
std::optional<Complex> exhibit_negativity_exponential(double A, double A0, const ComplexFn& F,
                                                      int zpow, double r_max, double tol = 1e-9);

struct ModulusReport {
    SampleReport direct;  // |h(-z)|/|h(z)| <= 1 + tol
    SampleReport mobius;  // |q(z^2)-z p(z^2)| / |q(z^2)+z p(z^2)| <= 1 + tol
    bool pass() const { return direct.pass; }
};

/// Half-plane modulus inequality, evaluated both through h directly and
/// through the linear-fractional expression in (p, q).
ModulusReport check_modulus_inequality(const ComplexFn& h, const ComplexFn& p, const ComplexFn& q,
                                       const ComplexSampler& sampler, double tol);

/// Pass iff Re w(z) >= -tol at all samples, w(z) = z p(z^2) / q(z^2).
SampleReport check_rhp_mapping(const ComplexFn& p, const ComplexFn& q,
                               const ComplexSampler& sampler, double tol);

struct ApproxRoot {
    Complex value;
    int multiplicity = 1;
    double residual = 0.0;  // |f(value)| / sum |a_k| |value|^k
};

/// All complex roots via exact squarefree splitting followed by
/// Aberth-Ehrlich iteration on each (simple-rooted) factor.
std::vector<ApproxRoot> approximate_roots(const RationalPoly& f, double tol);

struct SectorReport {
    std::vector<ApproxRoot> roots;
    double min_abs_arg = 0.0;  // +infinity when there are no roots
    double half_angle = 0.0;   // pi / M
    bool pass = false;
};

/// Clears the monomial factor of a finite Laurent window and checks that
/// no root lies inside the open sector |arg z| < pi/M. Roots on the
/// boundary count as a pass (the sector is open).
SectorReport sector_check(const LaurentWindow& f, std::int64_t M, double tol,
                          double angular_tol = 1e-9);

/// Evaluators.
ComplexFn make_poly_fn(const RationalPoly& f);
ComplexFn make_window_fn(const LaurentWindow& w);

}  // namespace ghurwitz

#endif
