#include "ghurwitz/tnn.hpp"

#include <algorithm>

namespace ghurwitz {

namespace {

// Determinant of the k x k rational matrix given row-major in `a`.
// Rows are scaled by the lcm of their denominators, the integer matrix is
// reduced by Bareiss' fraction-free elimination (every division is exact),
// and the result is divided by the product of the row scales.
Rational det_dense(std::vector<mpq_class> a, std::size_t k) {
    if (k == 0) return Rational(1);
    if (k == 1) return Rational(a[0]);
    if (k == 2) return Rational(mpq_class(a[0] * a[3] - a[1] * a[2]));

    std::vector<mpz_class> m(k * k);
    mpz_class scale(1);
    for (std::size_t i = 0; i < k; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < k; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i * k + j].get_den_mpz_t());
        for (std::size_t j = 0; j < k; ++j) {
            mpq_class scaled = a[i * k + j] * l;
            m[i * k + j] = scaled.get_num();  // denominator is 1 by construction
        }
        scale *= l;
    }

    int sign = 1;
    mpz_class prev(1);
    for (std::size_t col = 0; col + 1 < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv * k + col] == 0) ++piv;
        if (piv == k) return Rational(0);
        if (piv != col) {
            for (std::size_t j = col; j < k; ++j) std::swap(m[piv * k + j], m[col * k + j]);
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < k; ++i) {
            for (std::size_t j = col + 1; j < k; ++j) {
                mpz_class t = m[i * k + j] * m[col * k + col] - m[i * k + col] * m[col * k + j];
                mpz_divexact(m[i * k + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i * k + col] = 0;
        }
        prev = m[col * k + col];
    }
    mpz_class det = m[(k - 1) * k + (k - 1)];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

Rational minor_det(const WindowMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1)
        return m.entries[rows[0] * m.n_cols + cols[0]];
    if (k == 2) {
        const Rational& a = m.entries[rows[0] * m.n_cols + cols[0]];
        const Rational& b = m.entries[rows[0] * m.n_cols + cols[1]];
        const Rational& c = m.entries[rows[1] * m.n_cols + cols[0]];
        const Rational& d = m.entries[rows[1] * m.n_cols + cols[1]];
        return a * d - b * c;
    }
    std::vector<mpq_class> sub;
    sub.reserve(k * k);
    for (std::size_t r : rows)
        for (std::size_t c : cols) sub.push_back(m.entries[r * m.n_cols + c].raw());
    return det_dense(std::move(sub), k);
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<std::size_t>> combinations_desc(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    all.push_back(c);
    while (next_combination(c, n)) all.push_back(c);
    std::reverse(all.begin(), all.end());
    return all;
}

MinorWitness make_witness(const WindowMatrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols, Rational value) {
    MinorWitness w;
    for (std::size_t r : rows) w.rows.push_back(m.row_lo + static_cast<std::int64_t>(r));
    for (std::size_t c : cols) w.cols.push_back(m.col_lo + static_cast<std::int64_t>(c));
    w.value = std::move(value);
    return w;
}

// Scans minors of order k in the documented order and returns the first
// whose determinant satisfies `hit`.
template <typename Pred>
std::optional<MinorWitness> scan_minors(const WindowMatrix& m, int k, Pred hit) {
    const std::size_t kk = static_cast<std::size_t>(k);
    const auto cols_desc = combinations_desc(m.n_cols, kk);
    std::vector<std::size_t> rows(kk);
    for (std::size_t i = 0; i < kk; ++i) rows[i] = i;
    do {
        for (const auto& cols : cols_desc) {
            Rational d = minor_det(m, rows, cols);
            if (hit(d)) return make_witness(m, rows, cols, std::move(d));
        }
    } while (next_combination(rows, m.n_rows));
    return std::nullopt;
}

}  // namespace

Rational exact_det(const WindowMatrix& m) {
    if (m.n_rows != m.n_cols) throw shape_error("exact_det: matrix is not square");
    std::vector<mpq_class> a;
    a.reserve(m.entries.size());
    for (const auto& e : m.entries) a.push_back(e.raw());
    return det_dense(std::move(a), m.n_rows);
}

int default_max_order(const WindowMatrix& m) {
    return static_cast<int>(std::min<std::size_t>(5, std::min(m.n_rows, m.n_cols)));
}

TnnVerdict check_tnn(const WindowMatrix& m, int max_order) {
    if (max_order < 1 || static_cast<std::size_t>(max_order) > std::min(m.n_rows, m.n_cols))
        throw shape_error("check_tnn: max_order must be between 1 and the window min dimension");
    TnnVerdict v;
    v.order_checked = max_order;
    v.row_lo = m.row_lo;
    v.row_hi = m.row_hi();
    v.col_lo = m.col_lo;
    v.col_hi = m.col_hi();
    for (int k = 1; k <= max_order; ++k) {
        auto w = scan_minors(m, k, [](const Rational& d) { return d.sign() < 0; });
        if (w) {
            v.status = TnnVerdict::Status::negative_minor;
            v.witness = std::move(w);
            return v;
        }
    }
    v.status = TnnVerdict::Status::nonnegative_up_to;
    return v;
}

std::optional<MinorWitness> has_nonzero_minor_of_order(const WindowMatrix& m, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > std::min(m.n_rows, m.n_cols))
        throw shape_error("has_nonzero_minor_of_order: order exceeds window");
    return scan_minors(m, k, [](const Rational& d) { return !d.is_zero(); });
}

std::optional<std::pair<Rational, Rational>> detect_geometric_degeneracy(const LaurentWindow& p,
                                                                         const LaurentWindow& q) {
    if (!p.contains(0) || !p.contains(1))
        throw domain_error("detect_geometric_degeneracy: p window must contain indices 0 and 1");
    if (!q.contains(0)) throw domain_error("detect_geometric_degeneracy: q window must contain index 0");
    const Rational& a0 = p.at(0);
    if (a0.is_zero()) throw domain_error("detect_geometric_degeneracy: a_0 must be nonzero");

    const Rational ratio = p.at(1) / a0;
    const Rational scale = q.at(0) / a0;

    // a_0 r^k; undefined (and never matched) for k < 0 when r = 0.
    auto geometric = [&](std::int64_t k) -> std::optional<Rational> {
        if (ratio.is_zero() && k < 0) return std::nullopt;
        return a0 * ratio.pow(k);
    };

    for (std::int64_t k = p.lo; k <= p.hi(); ++k) {
        const auto g = geometric(k);
        if (!g || p.at(k) != *g) return std::nullopt;
    }
    for (std::int64_t k = q.lo; k <= q.hi(); ++k) {
        if (scale.is_zero()) {
            if (!q.at(k).is_zero()) return std::nullopt;
            continue;
        }
        const auto g = geometric(k);
        if (!g || q.at(k) != scale * *g) return std::nullopt;
    }
    return std::make_pair(ratio, scale);
}

}  // namespace ghurwitz
