#include "ghurwitz/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace ghurwitz {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 53-bit uniform in [0, 1); fully determined by the mt19937_64 stream.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::vector<Complex> ComplexSampler::generate() const {
    if (count < 1 || !(r_min > 0.0) || !(r_max > r_min))
        throw sampling_error("sampler: malformed configuration");
    std::mt19937_64 rng(seed);
    const double llo = std::log(r_min), lhi = std::log(r_max);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(count));
    while (out.size() < static_cast<std::size_t>(count)) {
        const double r = std::exp(llo + uniform01(rng) * (lhi - llo));
        double theta = 0.0;
        switch (region) {
            case Region::upper_half_plane: theta = uniform01(rng) * kPi; break;
            case Region::right_half_plane: theta = (uniform01(rng) - 0.5) * kPi; break;
            case Region::sector: theta = (2.0 * uniform01(rng) - 1.0) * sector_half_angle; break;
            case Region::ray: theta = ray_angle; break;
        }
        if (region == Region::upper_half_plane && (theta <= 0.0 || theta >= kPi)) continue;
        if (region == Region::right_half_plane && std::fabs(theta) >= kPi / 2) continue;
        out.emplace_back(r * std::cos(theta), r * std::sin(theta));
    }
    return out;
}

namespace {

// Runs `metric` over the samples, redrawing (by advancing through extra
// samples) when the evaluation hits a pole. Pass iff min metric >= -tol.
SampleReport scan_min_metric(const ComplexSampler& sampler, double tol,
                             const std::function<std::optional<std::pair<double, Complex>>(Complex)>& metric) {
    ComplexSampler widened = sampler;
    widened.count = sampler.count * 4;  // redraw budget for pole hits
    const auto pool = widened.generate();
    SampleReport rep;
    rep.samples = sampler.count;
    rep.seed = sampler.seed;
    rep.tol = tol;
    rep.worst_metric = std::numeric_limits<double>::infinity();
    int used = 0;
    for (const Complex& z : pool) {
        if (used == sampler.count) break;
        const auto m = metric(z);
        if (!m) continue;  // pole hit; use the next pooled sample
        ++used;
        if (m->first < rep.worst_metric) {
            rep.worst_metric = m->first;
            rep.worst_z = z;
            rep.worst_value = m->second;
        }
    }
    if (used < sampler.count) throw sampling_error("sampler: too many pole hits");
    rep.pass = rep.worst_metric >= -tol;
    return rep;
}

}  // namespace

SampleReport sample_im_nonneg(const ComplexFn& F, const ComplexSampler& sampler, double tol) {
    return scan_min_metric(sampler, tol, [&](Complex z) -> std::optional<std::pair<double, Complex>> {
        const Complex v = F(z);
        if (!is_finite(v)) return std::nullopt;
        return std::make_pair(z.imag() * v.imag(), v);
    });
}

namespace {

Complex ipow(Complex z, std::int64_t n) {
    if (n == 0) return Complex(1.0, 0.0);
    Complex base = n > 0 ? z : 1.0 / z;
    std::uint64_t e = n > 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-n);
    Complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

std::optional<Complex> exhibit_negativity_exponential(double A, double A0, const ComplexFn& F,
                                                      int zpow, double r_max, double tol) {
    if (!(A * A + A0 * A0 > 0.0))
        throw domain_error("exhibit_negativity_exponential: needs A^2 + A0^2 > 0");
    const Complex i_unit(0.0, 1.0);

    const auto value = [&](double r) -> Complex {
        const Complex z = i_unit * r;
        const Complex expo = std::exp(Complex(0.0, A * r - A0 / r));
        return expo * ipow(z, zpow) * F(z);
    };

    // Walk down from r_max with adaptive log steps so the exponential
    // factor's argument moves by < 0.4 per step; the first bracketed odd
    // multiple of pi is then pinned by bisection on the continuous
    // argument. The argument speed grows like A0/r toward 0, so crossings
    // are reached after a bounded number of steps.
    const double r_floor = r_max * 1e-15;
    double r = r_max;
    Complex v = value(r);
    int guard = 0;
    while ((!is_finite(v) || std::abs(v) == 0.0) && guard++ < 64) {
        r *= 0.999;
        v = value(r);
    }
    if (!is_finite(v) || std::abs(v) == 0.0) return std::nullopt;
    double arg_cont = std::arg(v);

    for (long step = 0; step < 2000000 && r > r_floor; ++step) {
        const double speed = A * r + A0 / r;
        const double delta = 0.4 / (speed + 1.0);
        const double r2 = r * std::exp(-delta);
        const Complex v2 = value(r2);
        if (!is_finite(v2) || std::abs(v2) == 0.0) {
            r = r2;
            continue;
        }
        const double arg2 = arg_cont + std::arg(v2 / v);
        const double lo = std::min(arg_cont, arg2), hi = std::max(arg_cont, arg2);
        const double m = std::floor((hi / kPi - 1.0) / 2.0);
        const double target = (2.0 * m + 1.0) * kPi;
        if (target > lo && target < hi) {
            double a = r2, b = r;
            double arg_a = arg2;
            Complex va = v2;
            for (int it = 0; it < 200; ++it) {
                const double mid = std::sqrt(a * b);
                const Complex vm = value(mid);
                const double arg_m = arg_a + std::arg(vm / va);
                if ((arg_a < target) != (arg_m < target) || arg_m == target) {
                    b = mid;
                } else {
                    a = mid;
                    arg_a = arg_m;
                    va = vm;
                }
                const Complex vc = value(std::sqrt(a * b));
                if (vc.real() < 0.0 && std::fabs(vc.imag()) <= tol * std::abs(vc))
                    return i_unit * std::sqrt(a * b);
            }
            const Complex vc = value(std::sqrt(a * b));
            if (vc.real() < 0.0 && std::fabs(vc.imag()) <= tol * std::max(1.0, std::abs(vc)))
                return i_unit * std::sqrt(a * b);
        }
        arg_cont = arg2;
        r = r2;
        v = v2;
    }
    return std::nullopt;
}

ModulusReport check_modulus_inequality(const ComplexFn& h, const ComplexFn& p, const ComplexFn& q,
                                       const ComplexSampler& sampler, double tol) {
    ModulusReport rep;
    // Metric 1 - ratio: min >= -tol is exactly ratio <= 1 + tol everywhere.
    rep.direct = scan_min_metric(sampler, tol, [&](Complex z) -> std::optional<std::pair<double, Complex>> {
        const Complex num = h(-z);
        const Complex den = h(z);
        if (!is_finite(num) || !is_finite(den) || std::abs(den) == 0.0) return std::nullopt;
        const double ratio = std::abs(num) / std::abs(den);
        return std::make_pair(1.0 - ratio, num / den);
    });
    rep.mobius = scan_min_metric(sampler, tol, [&](Complex z) -> std::optional<std::pair<double, Complex>> {
        const Complex z2 = z * z;
        const Complex qv = q(z2);
        const Complex pv = p(z2);
        if (!is_finite(qv) || !is_finite(pv)) return std::nullopt;
        const Complex num = qv - z * pv;
        const Complex den = qv + z * pv;
        if (std::abs(den) == 0.0) return std::nullopt;
        const double ratio = std::abs(num) / std::abs(den);
        return std::make_pair(1.0 - ratio, num / den);
    });
    return rep;
}

SampleReport check_rhp_mapping(const ComplexFn& p, const ComplexFn& q,
                               const ComplexSampler& sampler, double tol) {
    return scan_min_metric(sampler, tol, [&](Complex z) -> std::optional<std::pair<double, Complex>> {
        const Complex z2 = z * z;
        const Complex qv = q(z2);
        if (!is_finite(qv) || std::abs(qv) == 0.0) return std::nullopt;
        const Complex w = z * p(z2) / qv;
        if (!is_finite(w)) return std::nullopt;
        return std::make_pair(w.real(), w);
    });
}

namespace {

Complex horner(const std::vector<double>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

double eval_scale(const std::vector<double>& coeffs, Complex z) {
    double acc = 0.0;
    const double az = std::abs(z);
    double zp = 1.0;
    for (const double c : coeffs) {
        acc += std::fabs(c) * zp;
        zp *= az;
    }
    return std::max(acc, std::numeric_limits<double>::min());
}

// Aberth-Ehrlich on a simple-rooted polynomial given by double coefficients.
std::vector<Complex> aberth(const std::vector<double>& coeffs, double tol) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<double> deriv(n);
    for (std::size_t i = 1; i <= n; ++i) deriv[i - 1] = static_cast<double>(i) * coeffs[i];

    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        radius = std::max(radius, std::pow(std::fabs(coeffs[i] / coeffs[n]), 1.0 / static_cast<double>(n - i)));
    radius = 2.0 * std::max(radius, 0.5);

    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ang = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n) + 0.4;
        z[i] = radius * Complex(std::cos(ang), std::sin(ang));
    }

    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex fv = horner(coeffs, z[i]);
            worst = std::max(worst, std::abs(fv) / eval_scale(coeffs, z[i]));
            const Complex dv = horner(deriv, z[i]);
            if (std::abs(fv) == 0.0) continue;
            Complex w = dv != Complex(0.0, 0.0) ? fv / dv : Complex(1e-12, 1e-12);
            Complex rep(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) rep += 1.0 / (z[i] - z[j]);
            const Complex denom = 1.0 - w * rep;
            z[i] -= std::abs(denom) > 1e-300 ? w / denom : w;
        }
        if (worst < std::min(tol, 1e-13)) break;
    }
    // Newton polish.
    for (std::size_t i = 0; i < n; ++i)
        for (int it = 0; it < 3; ++it) {
            const Complex dv = horner(deriv, z[i]);
            if (std::abs(dv) == 0.0) break;
            z[i] -= horner(coeffs, z[i]) / dv;
        }
    return z;
}

}  // namespace

std::vector<ApproxRoot> approximate_roots(const RationalPoly& f, double tol) {
    if (f.degree() < 0) throw domain_error("approximate_roots: zero polynomial");
    std::vector<ApproxRoot> out;
    if (f.degree() == 0) return out;

    const auto factors = squarefree_decomposition(f);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        RationalPoly fac = factors[i];
        const int mult = static_cast<int>(i) + 1;
        if (fac.degree() <= 0) continue;
        // Exact zero roots come off first; Aberth then sees a nonzero
        // constant term.
        int zero_mult = 0;
        while (fac.coeff(0).is_zero()) {
            std::vector<Rational> rest(fac.coeffs().begin() + 1, fac.coeffs().end());
            fac = RationalPoly(std::move(rest));
            ++zero_mult;
        }
        if (zero_mult > 0) out.push_back({Complex(0.0, 0.0), mult * zero_mult, 0.0});
        if (fac.degree() <= 0) continue;

        std::vector<double> coeffs;
        coeffs.reserve(static_cast<std::size_t>(fac.degree()) + 1);
        for (const auto& c : fac.coeffs()) coeffs.push_back(c.to_double());
        const auto roots = aberth(coeffs, tol);
        for (const Complex& r : roots) {
            const double res = std::abs(horner(coeffs, r)) / eval_scale(coeffs, r);
            if (!(res <= tol))
                throw root_finding_error("approximate_roots: residual " + std::to_string(res) +
                                         " above tolerance at root estimate (" +
                                         std::to_string(r.real()) + ", " + std::to_string(r.imag()) + ")");
            out.push_back({r, mult, res});
        }
    }
    std::size_t total = 0;
    for (const auto& r : out) total += static_cast<std::size_t>(r.multiplicity);
    if (total != static_cast<std::size_t>(f.degree()))
        throw root_finding_error("approximate_roots: root multiset size mismatch");
    return out;
}

SectorReport sector_check(const LaurentWindow& f, std::int64_t M, double tol, double angular_tol) {
    if (M < 1) throw domain_error("sector_check: M must be positive");
    if (f.empty()) throw domain_error("sector_check: empty window");
    std::vector<Rational> coeffs(f.coeffs);
    // Clear the monomial factor z^lo (and any further zero head).
    std::size_t head = 0;
    while (head < coeffs.size() && coeffs[head].is_zero()) ++head;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(head));
    RationalPoly poly(std::move(coeffs));
    if (poly.is_zero()) throw domain_error("sector_check: window holds the zero polynomial");

    SectorReport rep;
    rep.half_angle = kPi / static_cast<double>(M);
    rep.roots = approximate_roots(poly, tol);
    rep.min_abs_arg = std::numeric_limits<double>::infinity();
    for (const auto& r : rep.roots)
        rep.min_abs_arg = std::min(rep.min_abs_arg, std::fabs(std::arg(r.value)));
    rep.pass = !(rep.min_abs_arg < rep.half_angle - angular_tol);
    return rep;
}

ComplexFn make_poly_fn(const RationalPoly& f) {
    std::vector<double> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs.push_back(c.to_double());
    return [coeffs](Complex z) { return horner(coeffs, z); };
}

ComplexFn make_window_fn(const LaurentWindow& w) {
    std::vector<double> coeffs;
    coeffs.reserve(w.coeffs.size());
    for (const auto& c : w.coeffs) coeffs.push_back(c.to_double());
    const std::int64_t lo = w.lo;
    return [coeffs, lo](Complex z) { return horner(coeffs, z) * ipow(z, lo); };
}

}  // namespace ghurwitz
