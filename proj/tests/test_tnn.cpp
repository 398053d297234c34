#include <doctest.h>

#include <random>

#include "ghurwitz/tnn.hpp"
#include "oracles.hpp"

using namespace ghurwitz;

namespace {

WindowMatrix dense(std::vector<std::vector<long>> rows) {
    WindowMatrix m;
    m.row_lo = 1;
    m.col_lo = 1;
    m.n_rows = rows.size();
    m.n_cols = rows[0].size();
    for (const auto& r : rows)
        for (long v : r) m.entries.emplace_back(v);
    return m;
}

LaurentWindow win(std::int64_t lo, std::vector<long> nums) {
    LaurentWindow w;
    w.lo = lo;
    for (long n : nums) w.coeffs.emplace_back(n);
    return w;
}

WindowMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m, long span = 9) {
    WindowMatrix out;
    out.row_lo = 1;
    out.col_lo = 1;
    out.n_rows = n;
    out.n_cols = m;
    for (std::size_t i = 0; i < n * m; ++i)
        out.entries.emplace_back(static_cast<long>(rng() % (2 * span + 1)) - span);
    return out;
}

}  // namespace

TEST_CASE("exact_det on pinned small matrices and error path") {
    CHECK(exact_det(dense({{1, 2}, {0, 1}})) == Rational(1));
    CHECK(exact_det(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == Rational(1));
    CHECK(exact_det(dense({{4, 1}, {1, 0}})) == Rational(-1));
    WindowMatrix bad;
    bad.row_lo = bad.col_lo = 1;
    bad.n_rows = 1;
    bad.n_cols = 2;
    bad.entries = {Rational(1), Rational(2)};
    CHECK_THROWS_AS(exact_det(bad), shape_error);
}

TEST_CASE("exact_det agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 120; ++it) {
        const std::size_t n = 1 + rng() % 6;
        const auto m = random_matrix(rng, n, n);
        CHECK(exact_det(m) == testing::cofactor_det(m));
    }
    // Rational entries too.
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = 1 + rng() % 5;
        WindowMatrix m;
        m.row_lo = m.col_lo = 1;
        m.n_rows = m.n_cols = n;
        for (std::size_t i = 0; i < n * n; ++i)
            m.entries.emplace_back(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 6));
        CHECK(exact_det(m) == testing::cofactor_det(m));
    }
}

TEST_CASE("check_tnn finds the pinned witness of the named counterexample") {
    const auto m = dense({{3, 4, 1, 0}, {2, 1, 0, 0}, {0, 3, 4, 1}, {0, 2, 1, 0}});
    const auto v = check_tnn(m, 2);
    REQUIRE_FALSE(v.nonnegative());
    CHECK(v.witness->rows == std::vector<std::int64_t>{1, 2});
    CHECK(v.witness->cols == std::vector<std::int64_t>{2, 3});
    CHECK(v.witness->value == Rational(-1));
    // Oracle: that submatrix really has determinant -1.
    CHECK(testing::cofactor_minor(m, {1, 2}, {2, 3}) == Rational(-1));
}

TEST_CASE("check_tnn accepts the interlacing window and diagonal matrices") {
    const auto m = dense({{8, 6, 1, 0}, {3, 4, 1, 0}, {0, 8, 6, 1}, {0, 3, 4, 1}});
    const auto v = check_tnn(m, 4);
    CHECK(v.nonnegative());
    CHECK(v.order_checked == 4);

    const auto d = dense({{2, 0, 0}, {0, 5, 0}, {0, 0, 7}});
    CHECK(check_tnn(d, 3).nonnegative());
}

TEST_CASE("check_tnn witness is stable as the order budget grows") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 40; ++it) {
        const auto m = random_matrix(rng, 4 + rng() % 2, 4 + rng() % 2);
        const auto v2 = check_tnn(m, 2);
        const auto v4 = check_tnn(m, 4);
        if (!v2.nonnegative()) {
            REQUIRE_FALSE(v4.nonnegative());
            CHECK(v4.witness->rows == v2.witness->rows);
            CHECK(v4.witness->cols == v2.witness->cols);
            CHECK(v4.witness->value == v2.witness->value);
        }
    }
}

TEST_CASE("nonnegative verdicts restrict to sub-windows") {
    // An totally nonnegative window stays nonnegative on any sub-window.
    const auto m = dense({{8, 6, 1, 0}, {3, 4, 1, 0}, {0, 8, 6, 1}, {0, 3, 4, 1}});
    REQUIRE(check_tnn(m, 4).nonnegative());
    WindowMatrix sub;
    sub.row_lo = 2;
    sub.col_lo = 2;
    sub.n_rows = sub.n_cols = 3;
    for (std::int64_t i = 2; i <= 4; ++i)
        for (std::int64_t j = 2; j <= 4; ++j) sub.entries.push_back(m.at(i, j));
    CHECK(check_tnn(sub, 3).nonnegative());
}

TEST_CASE("has_nonzero_minor_of_order") {
    const auto a = dense({{1, 2}, {0, 1}});
    const auto w = has_nonzero_minor_of_order(a, 2);
    REQUIRE(w.has_value());
    CHECK(w->value == Rational(1));

    // Rank-one Toeplitz window of f_k = 2^k.
    LaurentWindow geo{-2, {}, true, std::nullopt};
    for (std::int64_t k = -2; k <= 2; ++k) geo.coeffs.push_back(Rational(2).pow(k));
    const auto rank1 = extract_window(MatrixView::toeplitz(geo), 1, 3, 1, 3);
    CHECK_FALSE(has_nonzero_minor_of_order(rank1, 2).has_value());

    const auto z = dense({{0, 0}, {0, 0}});
    CHECK_FALSE(has_nonzero_minor_of_order(z, 1).has_value());
}

TEST_CASE("geometric degeneracy detection on pinned instances") {
    LaurentWindow p{-2, {}, true, std::nullopt}, q{-2, {}, true, std::nullopt};
    for (std::int64_t k = -2; k <= 2; ++k) {
        p.coeffs.push_back(Rational(2).pow(k));
        q.coeffs.push_back(Rational(3) * Rational(2).pow(k));
    }
    const auto hit = detect_geometric_degeneracy(p, q);
    REQUIRE(hit.has_value());
    CHECK(hit->first == Rational(2));
    CHECK(hit->second == Rational(3));

    const auto miss =
        detect_geometric_degeneracy(win(0, {3, 4, 1}), win(0, {2, 1}));
    CHECK_FALSE(miss.has_value());

    const auto ones = detect_geometric_degeneracy(win(0, {1, 1}), win(0, {1, 1}));
    REQUIRE(ones.has_value());
    CHECK(ones->first == Rational(1));
    CHECK(ones->second == Rational(1));

    CHECK_THROWS_AS(detect_geometric_degeneracy(win(0, {0, 1}), win(0, {1})), domain_error);
}

TEST_CASE("degeneracy present iff every stored order-2 minor vanishes") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 25; ++it) {
        LaurentWindow p{-2, {}, true, std::nullopt}, q{-2, {}, true, std::nullopt};
        const Rational r(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
        const Rational a0(1 + static_cast<long>(rng() % 4));
        const Rational s(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 2));
        for (std::int64_t k = -2; k <= 3; ++k) {
            p.coeffs.push_back(a0 * r.pow(k));
            q.coeffs.push_back(s * a0 * r.pow(k));
        }
        const bool mutate = it % 2 == 1;
        if (mutate) p.coeffs[4] += Rational(1, 7);

        const auto hit = detect_geometric_degeneracy(p, q);
        const auto m = extract_window(MatrixView::hurwitz_type(p, q), 1, 6, 1, 4);
        const bool all_zero = !has_nonzero_minor_of_order(m, 2).has_value();
        CHECK(hit.has_value() == all_zero);
        CHECK(hit.has_value() == !mutate);
    }
}

TEST_CASE("nonnegative Hurwitz window with a nonzero order-2 minor passes it to the Toeplitz window") {
    // Interlacing instance: q = (z+1)(z+3), p = (z+2)(z+4).
    const auto p = pad_window(win(0, {8, 6, 1}), -5, 8);
    const auto q = pad_window(win(0, {3, 4, 1}), -5, 8);
    const auto h = extract_window(MatrixView::hurwitz_type(p, q), 1, 8, 1, 8);
    REQUIRE(check_tnn(h, 2).nonnegative());
    REQUIRE(has_nonzero_minor_of_order(h, 2).has_value());
    const auto t = extract_window(MatrixView::toeplitz(p), 1, 6, 1, 6);
    CHECK(has_nonzero_minor_of_order(t, 2).has_value());
}
