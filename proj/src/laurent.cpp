#include "ghurwitz/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ghurwitz {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

double abs_upper(const Rational& r) {
    // |r| rounded away from zero; tail bounds only ever grow.
    double d = std::fabs(r.to_double());
    return std::nextafter(d, std::numeric_limits<double>::infinity());
}

}  // namespace

LaurentWindow window_add(const LaurentWindow& u, const LaurentWindow& v, const Rational& alpha,
                         const Rational& beta) {
    if (u.empty() || v.empty()) throw range_error("window_add: empty operand");
    const std::int64_t lo = std::max(u.lo, v.lo);
    const std::int64_t hi = std::min(u.hi(), v.hi());
    if (lo > hi) throw range_error("window_add: index ranges do not intersect");
    LaurentWindow out;
    out.lo = lo;
    out.coeffs.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t k = lo; k <= hi; ++k) out.coeffs.push_back(alpha * u.at(k) + beta * v.at(k));
    out.exact = u.exact && v.exact;
    if (!out.exact) {
        const double tu = u.tail_bound.value_or(0.0);
        const double tv = v.tail_bound.value_or(0.0);
        out.tail_bound = abs_upper(alpha) * tu + abs_upper(beta) * tv;
    }
    return out;
}

LaurentWindow window_shift(const LaurentWindow& u) {
    LaurentWindow out = u;
    out.lo += 1;
    return out;
}

LaurentWindow pad_window(const LaurentWindow& u, std::int64_t new_lo, std::int64_t new_hi) {
    if (new_lo > new_hi) throw range_error("pad_window: malformed range");
    if (!u.empty() && (new_lo > u.lo || new_hi < u.hi()))
        throw range_error("pad_window: new range must contain the old one");
    LaurentWindow out;
    out.lo = new_lo;
    out.coeffs.assign(static_cast<std::size_t>(new_hi - new_lo + 1), Rational(0));
    if (!u.empty())
        for (std::int64_t k = u.lo; k <= u.hi(); ++k)
            out.coeffs[static_cast<std::size_t>(k - new_lo)] = u.at(k);
    out.exact = u.exact;
    out.tail_bound = u.tail_bound;
    return out;
}

namespace {

struct SupportRange {
    // Declared true-support range of an operand, +-"infinity" encoded by flags.
    std::int64_t lo, hi;
    bool open_below, open_above;
};

SupportRange support_range(const LaurentWindow& w, Support s) {
    SupportRange r{w.lo, w.hi(), false, false};
    switch (s) {
        case Support::finite: break;
        case Support::lower_finite: r.open_above = true; break;
        case Support::upper_finite: r.open_below = true; break;
        case Support::window_only: r.open_below = r.open_above = true; break;
    }
    return r;
}

}  // namespace

LaurentWindow window_mul(const LaurentWindow& u, const LaurentWindow& v, std::int64_t out_lo,
                         std::int64_t out_hi, Support u_support, Support v_support,
                         DecayDecl u_decay, DecayDecl v_decay) {
    if (out_lo > out_hi) throw range_error("window_mul: malformed output range");
    if (u.empty() || v.empty()) throw range_error("window_mul: empty operand");
    const SupportRange su = support_range(u, u_support);
    const SupportRange sv = support_range(v, v_support);

    const double umax = [&] {
        double m = 0.0;
        for (const auto& c : u.coeffs) m = std::max(m, abs_upper(c));
        return m;
    }();
    const double vmax = [&] {
        double m = 0.0;
        for (const auto& c : v.coeffs) m = std::max(m, abs_upper(c));
        return m;
    }();

    bool truncated = false;
    double trunc_bound = 0.0;  // max over output coefficients of the missing mass

    // Upper bound for the modulus of a true coefficient at index k, or
    // nullopt when no declaration covers it.
    auto u_bound = [&](std::int64_t k) -> std::optional<double> {
        if (u.contains(k)) return abs_upper(u.at(k));
        if ((!su.open_below && k < su.lo) || (!su.open_above && k > su.hi)) return 0.0;
        if (k > u.hi() && u_decay.usable())
            return umax * std::pow(u_decay.ratio, static_cast<double>(k - u.hi()));
        if (k < u.lo && u_decay.usable())
            return umax * std::pow(u_decay.ratio, static_cast<double>(u.lo - k));
        return std::nullopt;
    };
    auto v_bound = [&](std::int64_t k) -> std::optional<double> {
        if (v.contains(k)) return abs_upper(v.at(k));
        if ((!sv.open_below && k < sv.lo) || (!sv.open_above && k > sv.hi)) return 0.0;
        if (k > v.hi() && v_decay.usable())
            return vmax * std::pow(v_decay.ratio, static_cast<double>(k - v.hi()));
        if (k < v.lo && v_decay.usable())
            return vmax * std::pow(v_decay.ratio, static_cast<double>(v.lo - k));
        return std::nullopt;
    };

    LaurentWindow out;
    out.lo = out_lo;
    out.coeffs.reserve(static_cast<std::size_t>(out_hi - out_lo + 1));

    for (std::int64_t n = out_lo; n <= out_hi; ++n) {
        // Contributing k: k in supp(u) and n-k in supp(v). A side of the
        // k-range is unbounded only when both relevant support ends are open.
        const bool unbounded_below = su.open_below && sv.open_above;
        const bool unbounded_above = su.open_above && sv.open_below;
        std::int64_t klo = 0, khi = 0;
        if (!unbounded_below)
            klo = !su.open_below ? (!sv.open_above ? std::max(su.lo, n - sv.hi) : su.lo)
                                 : n - sv.hi;
        if (!unbounded_above)
            khi = !su.open_above ? (!sv.open_below ? std::min(su.hi, n - sv.lo) : su.hi)
                                 : n - sv.lo;
        // Outside this envelope both factors are unstored.
        const std::int64_t env_lo = std::min(u.lo, n - v.hi());
        const std::int64_t env_hi = std::max(u.hi(), n - v.lo);
        const std::int64_t it_lo = unbounded_below ? env_lo : klo;
        const std::int64_t it_hi = unbounded_above ? env_hi : khi;

        Rational acc(0);
        double missing = 0.0;
        for (std::int64_t k = it_lo; k <= it_hi; ++k) {
            if (u.contains(k) && v.contains(n - k)) {
                acc += u.at(k) * v.at(n - k);
                continue;
            }
            const auto bu = u_bound(k);
            const auto bv = v_bound(n - k);
            if (!bu || !bv)
                throw insufficient_data_error(
                    "window_mul: coefficient at " + std::to_string(n) +
                    " needs values outside the operand windows without a decay declaration");
            missing += *bu * *bv;
        }
        // Unbounded rays: every term there has both factors beyond their
        // windows, each at distance >= 1, so the ray is dominated by
        // umax*vmax * sum_{d>=1} (ru*rv)^d.
        if (unbounded_below || unbounded_above) {
            if (!(u_decay.usable() && v_decay.usable()))
                throw insufficient_data_error(
                    "window_mul: coefficient is an infinite sum and no decay was declared");
            const double q = u_decay.ratio * v_decay.ratio;
            const int rays = (unbounded_below ? 1 : 0) + (unbounded_above ? 1 : 0);
            missing += rays * umax * vmax * q / (1.0 - q);
        }
        if (missing > 0.0) {
            trunc_bound = std::max(trunc_bound, missing);
            truncated = true;
        }
        out.coeffs.push_back(acc);
    }

    out.exact = u.exact && v.exact && !truncated;
    if (!out.exact) {
        const double tu = u.tail_bound.value_or(0.0);
        const double tv = v.tail_bound.value_or(0.0);
        const double su_abs = umax * static_cast<double>(u.coeffs.size());
        const double sv_abs = vmax * static_cast<double>(v.coeffs.size());
        out.tail_bound = trunc_bound + tu * sv_abs + tv * su_abs +
                         tu * tv * static_cast<double>(std::max(u.coeffs.size(), v.coeffs.size()));
    }
    return out;
}

namespace {

// One-sided series on [0, n_max], exact coefficients.
using Coeffs = std::vector<Rational>;

Coeffs conv_trunc(const Coeffs& a, const Coeffs& b, std::size_t n_max) {
    Coeffs out(std::min(n_max + 1, a.size() + b.size() - 1), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// e^{cz} up to order n_max.
Coeffs exp_series(const Rational& c, std::size_t n_max) {
    Coeffs out(n_max + 1);
    out[0] = Rational(1);
    for (std::size_t k = 1; k <= n_max; ++k) out[k] = out[k - 1] * c / Rational(static_cast<long>(k));
    return out;
}

// One side of the product form, expanded exactly on [0, n_max]:
// e^{cz} * prod (1 + z/beta) / prod (1 - z/delta).
Coeffs expand_side(const Rational& c, const std::vector<Rational>& zeros,
                   const std::vector<Rational>& poles, std::size_t n_max) {
    Coeffs acc{Rational(1)};
    if (!c.is_zero()) acc = exp_series(c, n_max);
    for (const auto& beta : zeros) acc = conv_trunc(acc, Coeffs{Rational(1), beta.inv()}, n_max);
    for (const auto& delta : poles) {
        Coeffs geo(n_max + 1);
        geo[0] = Rational(1);
        const Rational q = delta.inv();
        for (std::size_t k = 1; k <= n_max; ++k) geo[k] = geo[k - 1] * q;
        acc = conv_trunc(acc, geo, n_max);
    }
    if (acc.size() < n_max + 1) acc.resize(n_max + 1, Rational(0));
    return acc;
}

void validate_factor_spec(const FactorSpec& s) {
    if (s.C <= Rational(0)) throw domain_error("product form: C must be positive");
    if (s.A < Rational(0) || s.A0 < Rational(0))
        throw domain_error("product form: exponential coefficients must be nonnegative");
    auto check = [](const std::vector<Rational>& xs, const char* what) {
        for (const auto& x : xs)
            if (x <= Rational(0)) throw domain_error(std::string("product form: ") + what + " must be positive");
    };
    check(s.pos_zeros, "zeros");
    check(s.neg_zeros, "zeros");
    check(s.pos_poles, "poles");
    check(s.neg_poles, "poles");
}

// Cauchy-estimate data for a one-sided factor product at radius r:
// every coefficient of the side satisfies |c_k| <= M(r) / r^k.
struct SideBound {
    double r;
    double big_m;
};

SideBound side_bound(const Rational& c, const std::vector<Rational>& zeros,
                     const std::vector<Rational>& poles) {
    double r;
    if (poles.empty()) {
        r = 4.0;
    } else {
        double dmin = poles.front().to_double();
        for (const auto& d : poles) dmin = std::min(dmin, d.to_double());
        r = 0.9 * dmin;
    }
    double m = std::exp(c.to_double() * r);
    for (const auto& b : zeros) m *= 1.0 + r / b.to_double();
    for (const auto& d : poles) m /= 1.0 - r / d.to_double();
    return {r, m * 1.0001};
}

}  // namespace

LaurentWindow generate_product_form(const FactorSpec& spec, std::int64_t out_lo,
                                    std::int64_t out_hi, std::int64_t exp_truncation) {
    if (out_lo > out_hi) throw range_error("generate_product_form: malformed range");
    if (exp_truncation < 1) throw domain_error("generate_product_form: truncation must be >= 1");
    validate_factor_spec(spec);

    const std::int64_t j_eff = spec.j + (spec.zero_at_origin ? 1 : 0);
    const bool pos_finite = spec.pos_poles.empty() && spec.A.is_zero();
    const bool neg_finite = spec.neg_poles.empty() && spec.A0.is_zero();

    // Target coefficients of P(z) * N(1/z) at m = n - j_eff for n in range.
    const std::int64_t m_lo = out_lo - j_eff;
    const std::int64_t m_hi = out_hi - j_eff;

    LaurentWindow out;
    out.lo = out_lo;

    if (pos_finite || neg_finite) {
        Coeffs pos, neg;  // neg[i] is the coefficient of z^{-i}
        if (neg_finite) {
            const std::int64_t s = static_cast<std::int64_t>(spec.neg_zeros.size());
            neg = expand_side(Rational(0), spec.neg_zeros, {}, static_cast<std::size_t>(s));
            const std::int64_t pmax = std::max<std::int64_t>(0, m_hi + s);
            pos = expand_side(spec.A, spec.pos_zeros, spec.pos_poles, static_cast<std::size_t>(pmax));
        } else {
            const std::int64_t s = static_cast<std::int64_t>(spec.pos_zeros.size());
            pos = expand_side(Rational(0), spec.pos_zeros, {}, static_cast<std::size_t>(s));
            const std::int64_t nmax = std::max<std::int64_t>(0, -(m_lo)) + s;
            neg = expand_side(spec.A0, spec.neg_zeros, spec.neg_poles, static_cast<std::size_t>(nmax));
        }
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            Rational acc(0);
            for (std::int64_t k = std::max<std::int64_t>(0, m);
                 k < static_cast<std::int64_t>(pos.size()); ++k) {
                const std::int64_t ni = k - m;  // index into neg side (power of z^{-1})
                if (ni < 0) continue;
                if (ni >= static_cast<std::int64_t>(neg.size())) break;
                acc += pos[static_cast<std::size_t>(k)] * neg[static_cast<std::size_t>(ni)];
            }
            out.coeffs.push_back(spec.C * acc);
        }
        out.exact = true;
        return out;
    }

    // Both sides infinite: truncate each at exp_truncation terms and bound
    // the tail by Cauchy estimates |pos_k| <= Mp/rp^k, |neg_{-i}| <= Mn/rn^i.
    const std::size_t t = static_cast<std::size_t>(exp_truncation);
    const Coeffs pos = expand_side(spec.A, spec.pos_zeros, spec.pos_poles, t);
    const Coeffs neg = expand_side(spec.A0, spec.neg_zeros, spec.neg_poles, t);
    const SideBound bp = side_bound(spec.A, spec.pos_zeros, spec.pos_poles);
    const SideBound bn = side_bound(spec.A0, spec.neg_zeros, spec.neg_poles);
    const double q = bp.r * bn.r;
    if (q <= 1.0)
        throw domain_error("generate_product_form: truncation radii give an empty annulus");

    double worst_tail = 0.0;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        Rational acc(0);
        for (std::int64_t k = std::max<std::int64_t>(0, m);
             k <= static_cast<std::int64_t>(t) && k - m <= static_cast<std::int64_t>(t); ++k) {
            if (k - m < 0) continue;
            acc += pos[static_cast<std::size_t>(k)] * neg[static_cast<std::size_t>(k - m)];
        }
        out.coeffs.push_back(spec.C * acc);
        // Missing terms have k > t (pos tail) or k - m > t (neg tail); both
        // are dominated by sum_{k >= k0} Mp*Mn * rn^m / (rp*rn)^k.
        auto tail_from = [&](double k0) {
            return bp.big_m * bn.big_m * std::pow(bn.r, static_cast<double>(m)) *
                   std::pow(q, -k0) / (1.0 - 1.0 / q);
        };
        const double tail = tail_from(static_cast<double>(t) + 1.0) +
                            tail_from(static_cast<double>(m) + static_cast<double>(t) + 1.0);
        worst_tail = std::max(worst_tail, tail * spec.C.to_double());
    }
    out.exact = false;
    out.tail_bound = worst_tail * 1.0001;
    return out;
}

EvenOddSplit split_even_odd(const LaurentWindow& f) {
    auto parts = split_m_way(f, 2);
    return EvenOddSplit{std::move(parts[1]), std::move(parts[0])};
}

std::vector<LaurentWindow> split_m_way(const LaurentWindow& f, std::int64_t M) {
    if (M < 1) throw domain_error("split_m_way: M must be positive");
    std::vector<LaurentWindow> parts(static_cast<std::size_t>(M));
    if (f.empty()) return parts;
    for (std::int64_t n = 0; n < M; ++n) {
        auto& part = parts[static_cast<std::size_t>(n)];
        const std::int64_t klo = ceil_div(f.lo - n, M);
        const std::int64_t khi = floor_div(f.hi() - n, M);
        part.lo = klo;
        part.exact = f.exact;
        part.tail_bound = f.tail_bound;
        for (std::int64_t k = klo; k <= khi; ++k) part.coeffs.push_back(f.at(k * M + n));
    }
    return parts;
}

LaurentWindow interleave_m_way(const std::vector<LaurentWindow>& parts, std::int64_t lo,
                               std::int64_t hi) {
    if (parts.empty()) throw domain_error("interleave_m_way: no parts");
    const std::int64_t M = static_cast<std::int64_t>(parts.size());
    LaurentWindow out;
    out.lo = lo;
    out.exact = true;
    for (std::int64_t t = lo; t <= hi; ++t) {
        std::int64_t n = t % M;
        if (n < 0) n += M;
        const std::int64_t k = (t - n) / M;
        const auto& part = parts[static_cast<std::size_t>(n)];
        out.coeffs.push_back(part.at(k));
        out.exact = out.exact && part.exact;
    }
    return out;
}

RatioProfile ratio_profile(const LaurentWindow& u) {
    if (u.empty()) throw range_error("ratio_profile: empty window");
    for (const auto& c : u.coeffs)
        if (c.sign() < 0) throw domain_error("ratio_profile: negative coefficient");

    RatioProfile out;
    for (std::int64_t k = u.lo; k < u.hi(); ++k) {
        const Rational& a = u.at(k);
        const Rational& b = u.at(k + 1);
        if (b.is_zero()) {
            if (a.is_zero()) continue;  // undefined, skipped
            out.ratios.push_back({k, true, Rational(0)});
        } else {
            out.ratios.push_back({k, false, a / b});
        }
    }
    if (!out.ratios.empty()) {
        out.inner_estimate = out.ratios.front();
        out.outer_estimate = out.ratios.back();
    }
    // Gaps: zero coefficient with nonzero coefficients on both sides.
    std::int64_t first_nz = 0, last_nz = 0;
    bool any_nz = false;
    for (std::int64_t k = u.lo; k <= u.hi(); ++k) {
        if (!u.at(k).is_zero()) {
            if (!any_nz) first_nz = k;
            last_nz = k;
            any_nz = true;
        }
    }
    if (any_nz)
        for (std::int64_t k = first_nz + 1; k < last_nz; ++k)
            if (u.at(k).is_zero()) out.gaps.push_back(k);

    for (std::size_t i = 1; i < out.ratios.size(); ++i) {
        const auto& prev = out.ratios[i - 1];
        const auto& cur = out.ratios[i];
        const bool ok = prev.infinite ? cur.infinite : (cur.infinite || prev.ratio <= cur.ratio);
        if (!ok) out.nondecreasing = false;
    }
    return out;
}

}  // namespace ghurwitz
