#include <doctest.h>

#include <cmath>
#include <random>

#include "ghurwitz/analytic.hpp"

using namespace ghurwitz;

namespace {

constexpr double kPi = 3.14159265358979323846;

RationalPoly poly(std::vector<long> nums) {
    std::vector<Rational> c;
    for (long n : nums) c.emplace_back(n);
    return RationalPoly(std::move(c));
}

ComplexSampler uhp_sampler(std::uint64_t seed, int count = 1000) {
    ComplexSampler s;
    s.region = Region::upper_half_plane;
    s.count = count;
    s.seed = seed;
    return s;
}

ComplexSampler rhp_sampler(std::uint64_t seed, int count = 1000) {
    ComplexSampler s;
    s.region = Region::right_half_plane;
    s.count = count;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("sampler is deterministic and stays strictly inside its region") {
    const auto a = uhp_sampler(42).generate();
    const auto b = uhp_sampler(42).generate();
    REQUIRE(a.size() == 1000);
    CHECK(a == b);
    for (const auto& z : a) {
        CHECK(z.imag() > 0.0);
        const double r = std::abs(z);
        CHECK(r >= 1e-3);
        CHECK(r <= 1e3);
    }
    for (const auto& z : rhp_sampler(7).generate()) CHECK(z.real() > 0.0);

    ComplexSampler sec;
    sec.region = Region::sector;
    sec.sector_half_angle = kPi / 6;
    sec.count = 200;
    sec.seed = 3;
    for (const auto& z : sec.generate()) CHECK(std::fabs(std::arg(z)) <= kPi / 6);

    ComplexSampler ray;
    ray.region = Region::ray;
    ray.ray_angle = kPi / 4;
    ray.count = 50;
    ray.seed = 4;
    for (const auto& z : ray.generate()) CHECK(std::arg(z) == doctest::Approx(kPi / 4));
}

TEST_CASE("Im-sampler on the pinned ratios") {
    const auto good = [](Complex z) { return (z + 1.0) / (z + 2.0); };
    // Hand value at z = i: (1+i)(2-i)/5 = (3+i)/5.
    const Complex at_i = good(Complex(0, 1));
    CHECK(std::abs(at_i - Complex(0.6, 0.2)) < 1e-15);
    CHECK(sample_im_nonneg(good, uhp_sampler(1), 1e-9).pass);

    const auto bad = [](Complex z) { return (z + 2.0) / ((z + 1.0) * (z + 3.0)); };
    const auto rep = sample_im_nonneg(bad, uhp_sampler(1), 1e-9);
    CHECK_FALSE(rep.pass);
    CHECK(rep.worst_metric < 0.0);

    const auto constant = [](Complex) { return Complex(1.0, 0.0); };
    CHECK(sample_im_nonneg(constant, uhp_sampler(1), 1e-9).pass);
}

TEST_CASE("conjugate symmetry of real-coefficient evaluation at samples") {
    std::mt19937_64 rng(3);
    const auto f = make_poly_fn(poly({2, -3, 5, 1}));
    for (const auto& z : uhp_sampler(9, 200).generate()) {
        const Complex lhs = f(std::conj(z));
        const Complex rhs = std::conj(f(z));
        CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));
    }
    (void)rng;
}

TEST_CASE("negativity exhibit for pure exponential factors") {
    const auto one = [](Complex) { return Complex(1.0, 0.0); };
    const auto z1 = exhibit_negativity_exponential(1.0, 0.0, one, 0, 4.0, 1e-9);
    REQUIRE(z1.has_value());
    CHECK(std::abs(*z1 - Complex(0.0, kPi)) < 1e-6);
    const Complex g1 = std::exp(Complex(0.0, z1->imag()));
    CHECK(g1.real() < 0.0);

    const auto z2 = exhibit_negativity_exponential(0.0, 1.0, one, 0, 4.0, 1e-9);
    REQUIRE(z2.has_value());
    CHECK(std::abs(z2->imag() - 1.0 / kPi) < 1e-6);

    CHECK_THROWS_AS(exhibit_negativity_exponential(0.0, 0.0, one, 0, 4.0, 1e-9), domain_error);

    // r_max below the first crossing: nothing to report.
    CHECK_FALSE(exhibit_negativity_exponential(1.0, 0.0, one, 0, 1.0, 1e-9).has_value());
}

TEST_CASE("modulus inequality: quasi-stable polynomials pass, the counterexample fails") {
    // h = z + 1: q(u) = 1, p(u) = 1.
    const auto h1 = make_poly_fn(poly({1, 1}));
    const auto one = make_poly_fn(poly({1}));
    const auto m1 = check_modulus_inequality(h1, one, one, rhp_sampler(11), 1e-9);
    CHECK(m1.direct.pass);
    CHECK(m1.mobius.pass);

    // h = (z+1)^2: q(u) = 1 + u, p(u) = 2.
    const auto h2 = make_poly_fn(poly({1, 2, 1}));
    const auto m2 = check_modulus_inequality(h2, make_poly_fn(poly({2})), make_poly_fn(poly({1, 1})),
                                             rhp_sampler(12), 1e-9);
    CHECK(m2.direct.pass);
    CHECK(m2.mobius.pass);

    // f = q(z^2) + z p(z^2) for p=(3,4,1), q=(2,1): z^5+4z^3+z^2+3z+2.
    const auto h3 = make_poly_fn(poly({2, 3, 1, 4, 0, 1}));
    const auto m3 = check_modulus_inequality(h3, make_poly_fn(poly({3, 4, 1})),
                                             make_poly_fn(poly({2, 1})), rhp_sampler(13), 1e-9);
    CHECK_FALSE(m3.direct.pass);
    CHECK_FALSE(m3.mobius.pass);
    CHECK(m3.direct.pass == m3.mobius.pass);
}

TEST_CASE("right half-plane mapping of w(z) = z p(z^2)/q(z^2)") {
    // f = (z+1)^2.
    const auto p = make_poly_fn(poly({2}));
    const auto q = make_poly_fn(poly({1, 1}));
    const Complex w1 = Complex(1, 0) * p(Complex(1, 0)) / q(Complex(1, 0));
    CHECK(std::abs(w1 - Complex(1, 0)) < 1e-15);
    const Complex z(1, 1);
    const Complex w2 = z * p(z * z) / q(z * z);
    CHECK(w2.real() > 0.0);
    CHECK(check_rhp_mapping(p, q, rhp_sampler(17), 1e-9).pass);

    // f = z^2 - z + 1: q(u) = 1 + u, p(u) = -1.
    const auto rep = check_rhp_mapping(make_poly_fn(poly({-1})), make_poly_fn(poly({1, 1})),
                                       rhp_sampler(18), 1e-9);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("approximate_roots pinned spectra") {
    const auto r1 = approximate_roots(poly({2, 3, 1}), 1e-10);
    REQUIRE(r1.size() == 2);
    double best1 = 1e9, best2 = 1e9;
    for (const auto& r : r1) {
        best1 = std::min(best1, std::abs(r.value - Complex(-1, 0)));
        best2 = std::min(best2, std::abs(r.value - Complex(-2, 0)));
    }
    CHECK(best1 < 1e-10);
    CHECK(best2 < 1e-10);

    const auto r2 = approximate_roots(poly({1, 0, 0, 1}), 1e-10);
    REQUIRE(r2.size() == 3);
    for (const auto& r : r2) {
        const double d1 = std::abs(r.value - Complex(-1, 0));
        const double d2 = std::abs(r.value - std::polar(1.0, kPi / 3));
        const double d3 = std::abs(r.value - std::polar(1.0, -kPi / 3));
        CHECK(std::min({d1, d2, d3}) < 1e-10);
        CHECK(r.residual <= 1e-10);
    }

    const auto r3 = approximate_roots(poly({1, 0, 1}), 1e-10);
    REQUIRE(r3.size() == 2);
    for (const auto& r : r3) CHECK(std::abs(std::abs(r.value.imag()) - 1.0) < 1e-12);

    // Multiple roots pass through the exact squarefree split.
    const auto r4 = approximate_roots(poly({1, 1}) * poly({1, 1}) * poly({1, 1}) * poly({1, 1}), 1e-10);
    REQUIRE(r4.size() == 1);
    CHECK(r4[0].multiplicity == 4);
    CHECK(std::abs(r4[0].value - Complex(-1, 0)) < 1e-12);
}

TEST_CASE("root multiset size always matches the degree") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> c;
        const int deg = 1 + static_cast<int>(rng() % 7);
        for (int k = 0; k <= deg; ++k)
            c.emplace_back(static_cast<long>(rng() % 17) - 8, 1 + static_cast<long>(rng() % 4));
        RationalPoly f(std::move(c));
        if (f.degree() < 1) continue;
        const auto roots = approximate_roots(f, 1e-8);
        std::int64_t total = 0;
        for (const auto& r : roots) total += r.multiplicity;
        CHECK(total == f.degree());
    }
}

TEST_CASE("interlacing ratios satisfy the half-plane checks at tight tolerance") {
    // Chains (q, p) with q = prod(z + beta), p = prod(z + alpha).
    struct Chain {
        std::vector<long> betas, alphas;
    };
    const Chain chains[] = {{{1, 3}, {2, 4}}, {{1}, {2}}, {{1, 5, 9}, {3, 7}}, {{2, 6}, {4}}};
    for (const auto& ch : chains) {
        RationalPoly q = RationalPoly::constant(Rational(1));
        RationalPoly p = RationalPoly::constant(Rational(1));
        for (long b : ch.betas) q = q * RationalPoly::linear(Rational(b));
        for (long a : ch.alphas) p = p * RationalPoly::linear(Rational(a));

        const auto pf = make_poly_fn(p);
        const auto qf = make_poly_fn(q);
        const auto ratio = [&](Complex z) { return qf(z) / pf(z); };
        CHECK(sample_im_nonneg(ratio, uhp_sampler(1234), 1e-12).pass);

        // f(z) = q(z^2) + z p(z^2): interleave even/odd coefficients.
        std::vector<Rational> fc(2 * static_cast<std::size_t>(
                                         std::max(q.degree() + 1, p.degree() + 2)),
                                 Rational(0));
        for (std::int64_t k = 0; k <= q.degree(); ++k) fc[2 * static_cast<std::size_t>(k)] = q.coeff(k);
        for (std::int64_t k = 0; k <= p.degree(); ++k)
            fc[2 * static_cast<std::size_t>(k) + 1] = p.coeff(k);
        const auto h = make_poly_fn(RationalPoly(std::move(fc)));
        const auto mod = check_modulus_inequality(h, pf, qf, rhp_sampler(77), 1e-9);
        CHECK(mod.direct.pass);
        CHECK(mod.mobius.pass);
        CHECK(check_rhp_mapping(pf, qf, rhp_sampler(78), 1e-9).pass);
    }
}

TEST_CASE("sector check pinned cases") {
    // (1+z)^4, M = 3.
    LaurentWindow quartic{0, {Rational(1), Rational(4), Rational(6), Rational(4), Rational(1)}};
    const auto s1 = sector_check(quartic, 3, 1e-10);
    CHECK(s1.pass);
    CHECK(s1.min_abs_arg == doctest::Approx(kPi).epsilon(1e-9));

    // z^3 + 1, M = 3: boundary roots count as a pass (open sector).
    LaurentWindow cubic{0, {Rational(1), Rational(0), Rational(0), Rational(1)}};
    const auto s2 = sector_check(cubic, 3, 1e-10);
    CHECK(s2.pass);
    CHECK(std::fabs(s2.min_abs_arg - kPi / 3) <= 1e-9);
    CHECK(s2.half_angle == doctest::Approx(kPi / 3));

    // z - 1, M = 2: root on the positive axis sits inside the sector.
    LaurentWindow linear{0, {Rational(-1), Rational(1)}};
    const auto s3 = sector_check(linear, 2, 1e-10);
    CHECK_FALSE(s3.pass);
    CHECK(s3.min_abs_arg == doctest::Approx(0.0));

    // A monomial clears to a constant: no roots, vacuous pass.
    LaurentWindow mono{5, {Rational(3)}};
    const auto s4 = sector_check(mono, 2, 1e-10);
    CHECK(s4.pass);
    CHECK(s4.roots.empty());
}
