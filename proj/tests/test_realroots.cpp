#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ghurwitz/analytic.hpp"
#include "ghurwitz/realroots.hpp"

using namespace ghurwitz;

namespace {

RationalPoly poly(std::vector<long> nums) {
    std::vector<Rational> c;
    for (long n : nums) c.emplace_back(n);
    return RationalPoly(std::move(c));
}

RationalPoly from_neg_roots(std::vector<Rational> vals) {
    RationalPoly acc = RationalPoly::constant(Rational(1));
    for (const auto& v : vals) acc = acc * RationalPoly::linear(v);
    return acc;  // roots at -v
}

}  // namespace

TEST_CASE("polynomial kernel: divmod, gcd, squarefree") {
    const auto a = poly({2, 3, 1});  // (z+1)(z+2)
    const auto b = poly({1, 1});
    const auto dm = divmod(a, b);
    CHECK(dm.quotient == poly({2, 1}));
    CHECK(dm.remainder.is_zero());

    CHECK(gcd_monic(a, poly({3, 4, 1})) == poly({1, 1}));  // common (z+1)

    const auto sq = poly({1, 1}) * poly({1, 1}) * poly({2, 1});
    const auto dec = squarefree_decomposition(sq);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0] == poly({2, 1}));
    CHECK(dec[1] == poly({1, 1}));
}

TEST_CASE("sturm_isolate pinned examples") {
    // z^2 - 2 on (0, 2]: one root, inside (1, 3/2) after refinement.
    const auto iso = sturm_isolate(poly({-2, 0, 1}), Rational(0), Rational(2));
    REQUIRE(iso.intervals.size() == 1);
    const auto& iv = iso.intervals[0];
    CHECK(iv.multiplicity == 1);
    CHECK(iv.lo >= Rational(1));
    CHECK(iv.hi <= Rational(3, 2));
    // Sign-change oracle: the root lies where the polynomial flips sign.
    CHECK(poly({-2, 0, 1}).sign_at(iv.lo) * poly({-2, 0, 1}).sign_at(iv.hi) < 0);

    const auto two = sturm_isolate(poly({3, 4, 1}), Rational(-4), Rational(0));
    REQUIRE(two.intervals.size() == 2);
    CHECK(two.intervals[0].exact());
    CHECK(two.intervals[0].lo == Rational(-3));
    CHECK(two.intervals[1].lo == Rational(-1));
    CHECK(two.intervals[0].multiplicity == 1);

    const auto dbl = sturm_isolate(poly({1, 2, 1}), Rational(-2), Rational(0));
    REQUIRE(dbl.intervals.size() == 1);
    CHECK(dbl.intervals[0].exact());
    CHECK(dbl.intervals[0].lo == Rational(-1));
    CHECK(dbl.intervals[0].multiplicity == 2);

    CHECK_THROWS_AS(sturm_isolate(RationalPoly(), Rational(0), Rational(1)), domain_error);
}

TEST_CASE("sturm count equals construction on random factored polynomials") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 200; ++it) {
        RationalPoly f = RationalPoly::constant(Rational(1));
        int real_roots = 0;
        std::vector<Rational> used;
        const int factors = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < factors; ++t) {
            if (rng() % 3 == 0) {
                // Complex pair z^2 + 2cz + (c^2 + d): no real roots.
                const Rational c(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
                const Rational d(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
                f = f * RationalPoly({c * c + d, c + c, Rational(1)});
            } else {
                Rational v(1 + static_cast<long>(rng() % 24), 1 + static_cast<long>(rng() % 6));
                while (std::find(used.begin(), used.end(), v) != used.end()) v += Rational(1, 7);
                used.push_back(v);
                f = f * RationalPoly::linear(v);
                ++real_roots;
            }
        }
        const Rational b = cauchy_root_bound(f);
        CHECK(sturm_count(f, -b, b) == real_roots);
        const auto iso = sturm_isolate(f, -b, b);
        CHECK(static_cast<int>(iso.intervals.size()) == real_roots);
    }
}

TEST_CASE("check_interlacing accepts the named chain and reports it exactly") {
    const auto p = from_neg_roots({Rational(2), Rational(4)});
    const auto q = from_neg_roots({Rational(1), Rational(3)});
    const auto v = check_interlacing(p, q);
    REQUIRE(v.is_s_function);
    REQUIRE(v.chain.size() == 4);
    const long expected[4] = {1, 2, 3, 4};
    const ChainElement::Kind kinds[4] = {ChainElement::Kind::zero, ChainElement::Kind::pole,
                                         ChainElement::Kind::zero, ChainElement::Kind::pole};
    for (int i = 0; i < 4; ++i) {
        CHECK(v.chain[i].exact);
        CHECK(v.chain[i].value_lo == Rational(expected[i]));
        CHECK(v.chain[i].kind == kinds[i]);
    }
}

TEST_CASE("check_interlacing rejects the swapped chain") {
    const auto p = from_neg_roots({Rational(1), Rational(3)});
    const auto q = from_neg_roots({Rational(2)});
    const auto v = check_interlacing(p, q);
    CHECK_FALSE(v.is_s_function);
    CHECK(v.violation == "chain starts with a pole");
}

TEST_CASE("check_interlacing corner cases") {
    // q = z, p = z + 1: the zero at the origin is allowed.
    const auto v1 = check_interlacing(poly({1, 1}), poly({0, 1}));
    REQUIRE(v1.is_s_function);
    REQUIRE(v1.chain.size() == 2);
    CHECK(v1.chain[0].value_lo == Rational(0));
    CHECK(v1.chain[0].kind == ChainElement::Kind::zero);

    // q = z, p = z: constant ratio after cancellation.
    const auto v2 = check_interlacing(poly({0, 1}), poly({0, 1}));
    CHECK(v2.is_s_function);
    CHECK(v2.chain.empty());

    // Multiple zero of the ratio.
    const auto v3 = check_interlacing(poly({2, 1}), poly({1, 1}) * poly({1, 1}));
    CHECK_FALSE(v3.is_s_function);

    // Nonreal zeros.
    const auto v4 = check_interlacing(poly({1, 1}), poly({1, 1, 1}));
    CHECK_FALSE(v4.is_s_function);

    // Positive zero.
    const auto v5 = check_interlacing(poly({1, 1}), poly({-1, 1}));
    CHECK_FALSE(v5.is_s_function);

    CHECK_THROWS_AS(check_interlacing(RationalPoly(), poly({1})), domain_error);
}

TEST_CASE("accepted chains stay accepted after the z/F relabeling") {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> vals;
        const int total = 1 + static_cast<int>(rng() % 5);
        while (static_cast<int>(vals.size()) < total) {
            Rational v(1 + static_cast<long>(rng() % 24), 1 + static_cast<long>(rng() % 6));
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        std::sort(vals.begin(), vals.end());
        std::vector<Rational> betas, alphas;
        for (std::size_t i = 0; i < vals.size(); ++i)
            (i % 2 == 0 ? betas : alphas).push_back(vals[i]);
        const auto q = from_neg_roots(betas);
        const auto p = from_neg_roots(alphas);
        REQUIRE(check_interlacing(p, q).is_s_function);
        // z/F = z p / q: numerator z*p, denominator q.
        const auto relabeled = check_interlacing(q, p.shifted_up(1));
        CHECK(relabeled.is_s_function);
    }
}

TEST_CASE("partial fraction residues: pinned values and the identity") {
    const auto p = from_neg_roots({Rational(2), Rational(4)});
    const auto q = from_neg_roots({Rational(1), Rational(3)});
    const auto pf = partial_fraction_residues(Rational(1), q, p);
    CHECK(pf.all_exact);
    CHECK(pf.constant_term == Rational(3, 8));
    REQUIRE(pf.residues.size() == 2);
    CHECK(pf.residues[0].pole_alpha_lo == Rational(2));
    CHECK(*pf.residues[0].exact_value == Rational(1, 4));
    CHECK(pf.residues[1].pole_alpha_lo == Rational(4));
    CHECK(*pf.residues[1].exact_value == Rational(3, 8));
    // F(infinity) = const + sum A  and F(1) matches the decomposition.
    CHECK(pf.constant_term + Rational(1, 4) + Rational(3, 8) == Rational(1));
    Rational lhs = q.eval(Rational(1)) / p.eval(Rational(1));
    Rational rhs = pf.constant_term;
    for (const auto& r : pf.residues)
        rhs += *r.exact_value * Rational(1) / (Rational(1) + r.pole_alpha_lo);
    CHECK(lhs == rhs);

    const auto single = partial_fraction_residues(Rational(1), poly({1, 1}), poly({2, 1}));
    REQUIRE(single.residues.size() == 1);
    CHECK(*single.residues[0].exact_value == Rational(1, 2));

    // Swapped, non-interlacing: some residue coefficient goes negative.
    const auto sw = partial_fraction_residues(Rational(1), poly({2, 1}),
                                              from_neg_roots({Rational(1), Rational(3)}));
    bool has_negative = false;
    for (const auto& r : sw.residues) has_negative = has_negative || r.sign < 0;
    CHECK(has_negative);

    CHECK_THROWS_AS(partial_fraction_residues(Rational(1), poly({1, 1}), poly({1, 1})), domain_error);
    CHECK_THROWS_AS(partial_fraction_residues(Rational(1), poly({1}), poly({1, 2, 1})), domain_error);
}

TEST_CASE("irrational poles get sign-certified residue enclosures") {
    // p = z^2 + 4z + 2 has roots -2 +- sqrt(2); q = z + 1.
    const auto pf = partial_fraction_residues(Rational(1), poly({1, 1}), poly({2, 4, 1}));
    CHECK_FALSE(pf.all_exact);
    REQUIRE(pf.residues.size() == 2);
    for (const auto& r : pf.residues) {
        CHECK(r.sign != 0);
        CHECK(r.value_lo <= r.value_hi);
        CHECK((r.value_lo.sign() > 0) == (r.sign > 0));
    }
}

TEST_CASE("interlacing implies positive residues") {
    std::mt19937_64 rng(97);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> vals;
        const int pairs = 1 + static_cast<int>(rng() % 2);
        while (static_cast<int>(vals.size()) < 2 * pairs) {
            Rational v(1 + static_cast<long>(rng() % 24), 1 + static_cast<long>(rng() % 6));
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        std::sort(vals.begin(), vals.end());
        std::vector<Rational> betas, alphas;
        for (std::size_t i = 0; i < vals.size(); ++i)
            (i % 2 == 0 ? betas : alphas).push_back(vals[i]);
        const auto q = from_neg_roots(betas);
        const auto p = from_neg_roots(alphas);
        REQUIRE(check_interlacing(p, q).is_s_function);
        const auto pf = partial_fraction_residues(Rational(1), q, p);
        for (const auto& r : pf.residues) CHECK(r.sign > 0);
    }
}

TEST_CASE("routh quasi-stability pinned verdicts") {
    CHECK(routh_quasi_stability(poly({2, 3, 1})).quasi_stable);
    CHECK_FALSE(routh_quasi_stability(poly({1, -1, 1})).quasi_stable);
    // z (z^2 + 1)(z + 1): imaginary-axis zeros allowed.
    const auto boundary = poly({0, 1}) * poly({1, 0, 1}) * poly({1, 1});
    CHECK(routh_quasi_stability(boundary).quasi_stable);
    // (z+1)(z^2+z+1)
    CHECK(routh_quasi_stability(poly({1, 1}) * poly({1, 1, 1})).quasi_stable);
    // Symmetric real pair {1, -1}: caught by the symmetric factor.
    const auto sym = routh_quasi_stability(poly({-1, 0, 1}));
    CHECK_FALSE(sym.quasi_stable);
    CHECK_FALSE(sym.symmetric_ok);
    // Pure monomial and constants.
    CHECK(routh_quasi_stability(poly({0, 0, 1})).quasi_stable);
    CHECK(routh_quasi_stability(poly({5})).quasi_stable);
    CHECK_THROWS_AS(routh_quasi_stability(RationalPoly()), domain_error);
}

TEST_CASE("routh agrees with a numeric root-count oracle on random products") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 60; ++it) {
        RationalPoly f = RationalPoly::constant(Rational(1));
        bool rhp = false;
        const int factors = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < factors; ++t) {
            const long pick = static_cast<long>(rng() % 4);
            const Rational a(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 3));
            const Rational b(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 3));
            if (pick == 0) {
                f = f * poly({0, 1});  // z
            } else if (pick == 1) {
                const bool flip = rng() % 2 == 0;
                f = f * RationalPoly({flip ? -a : a, Rational(1)});
                rhp = rhp || flip;
            } else if (pick == 2) {
                const bool flip = rng() % 2 == 0;
                const Rational c = flip ? -a : a;
                f = f * RationalPoly({a * a + b, c + c, Rational(1)});
                rhp = rhp || flip;
            } else {
                f = f * RationalPoly({b * b, Rational(0), Rational(1)});  // axis pair
            }
        }
        CAPTURE(f.str());
        CHECK(routh_quasi_stability(f).quasi_stable == !rhp);
    }
}

TEST_CASE("routh agrees with the independent numeric root finder on random coefficients") {
    // approximate_roots (Aberth) and the Cauchy-index decision share no
    // code path; compare them away from the imaginary axis.
    std::mt19937_64 rng(113);
    int checked = 0;
    for (int it = 0; it < 120 && checked < 60; ++it) {
        std::vector<Rational> c;
        const int deg = 1 + static_cast<int>(rng() % 7);
        for (int k = 0; k <= deg; ++k)
            c.emplace_back(static_cast<long>(rng() % 17) - 8, 1 + static_cast<long>(rng() % 4));
        RationalPoly f(std::move(c));
        if (f.degree() < 1) continue;
        double max_re = -1e300;
        for (const auto& r : approximate_roots(f, 1e-9)) max_re = std::max(max_re, r.value.real());
        if (std::fabs(max_re) < 1e-7) continue;  // too close to the axis to compare fairly
        ++checked;
        CAPTURE(f.str());
        CHECK(routh_quasi_stability(f).quasi_stable == (max_re < 0.0));
    }
    CHECK(checked >= 40);
}

TEST_CASE("two-sided chain check follows the displayed ordering") {
    SideLists p1{{Rational(2)}, {Rational(3)}};
    SideLists q1{{Rational(1)}, {Rational(2)}};
    CHECK_FALSE(laurent_interlacing_check(p1, q1).is_s_function);

    SideLists p2{{Rational(2)}, {Rational(2)}};
    SideLists q2{{Rational(1)}, {Rational(3)}};
    const auto v2 = laurent_interlacing_check(p2, q2);
    REQUIRE(v2.is_s_function);
    REQUIRE(v2.chain.size() == 4);
    CHECK(v2.chain[0].value_lo == Rational(1, 3));
    CHECK(v2.chain[0].kind == ChainElement::Kind::zero);
    CHECK(v2.chain[1].value_lo == Rational(1, 2));
    CHECK(v2.chain[1].kind == ChainElement::Kind::pole);
    CHECK(v2.chain[2].value_lo == Rational(1));
    CHECK(v2.chain[3].value_lo == Rational(2));

    CHECK(laurent_interlacing_check(SideLists{}, SideLists{}).is_s_function);

    // Reciprocal negative-side values must sit below the positive side.
    SideLists p3{{Rational(5)}, {Rational(1, 2)}};  // reciprocals 2 and 4 exceed pos zero 1
    SideLists q3{{Rational(1)}, {Rational(1, 4)}};
    const auto v3 = laurent_interlacing_check(p3, q3);
    CHECK_FALSE(v3.is_s_function);
    CHECK(v3.violation == "negative-side chain overlaps the positive side");

    // One-sided chains follow the simple alternation.
    CHECK(laurent_interlacing_check(SideLists{{Rational(2)}, {}}, SideLists{{Rational(1)}, {}})
              .is_s_function);
    CHECK_FALSE(
        laurent_interlacing_check(SideLists{{Rational(1)}, {}}, SideLists{{Rational(2)}, {}})
            .is_s_function);

    CHECK_THROWS_AS(laurent_interlacing_check(SideLists{{Rational(0)}, {}}, SideLists{}),
                    domain_error);
}
