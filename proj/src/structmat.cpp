#include "ghurwitz/structmat.hpp"

namespace ghurwitz {

MatrixView MatrixView::toeplitz(LaurentWindow f) { return MatrixView(Toeplitz{std::move(f)}); }

MatrixView MatrixView::hurwitz_type(LaurentWindow p, LaurentWindow q) {
    return MatrixView(HurwitzType{std::move(p), std::move(q)});
}

MatrixView MatrixView::hurwitz_of(const LaurentWindow& f) {
    auto split = split_even_odd(f);
    return hurwitz_type(std::move(split.p), std::move(split.q));
}

MatrixView MatrixView::generalized(LaurentWindow f, std::int64_t M, std::int64_t row_offset) {
    if (M < 1) throw domain_error("generalized Hurwitz view: M must be positive");
    return MatrixView(GeneralizedHurwitz{std::move(f), M, row_offset});
}

MatrixView MatrixView::two_band_mask(Rational A, Rational B) {
    return MatrixView(TwoBandMask{std::move(A), std::move(B)});
}

namespace {

const Rational& coeff_or_throw(const LaurentWindow& w, std::int64_t k, const char* what) {
    if (!w.contains(k))
        throw outside_window_error(std::string(what) + ": coefficient index " + std::to_string(k) +
                                   " outside backing window");
    return w.at(k);
}

}  // namespace

Rational MatrixView::entry(std::int64_t i, std::int64_t j) const {
    if (const auto* t = std::get_if<Toeplitz>(&v_))
        return coeff_or_throw(t->f, j - i, "Toeplitz entry");
    if (const auto* h = std::get_if<HurwitzType>(&v_)) {
        if (i % 2 != 0) return coeff_or_throw(h->p, j - (i + 1) / 2, "Hurwitz-type entry");
        return coeff_or_throw(h->q, j - i / 2, "Hurwitz-type entry");
    }
    if (const auto* g = std::get_if<GeneralizedHurwitz>(&v_))
        return coeff_or_throw(g->f, j * g->M - (i + g->row_offset) + 1, "generalized Hurwitz entry");
    const auto& m = std::get<TwoBandMask>(v_);
    if (j == 2 * i - 1) return m.A;
    if (j == 2 * i) return m.B;
    return Rational(0);
}

std::optional<Rational> MatrixView::try_entry(std::int64_t i, std::int64_t j) const {
    try {
        return entry(i, j);
    } catch (const outside_window_error&) {
        return std::nullopt;
    }
}

WindowMatrix extract_window(const MatrixView& view, std::int64_t row_lo, std::int64_t row_hi,
                            std::int64_t col_lo, std::int64_t col_hi) {
    if (row_lo > row_hi || col_lo > col_hi)
        throw range_error("extract_window: malformed window bounds");
    WindowMatrix out;
    out.row_lo = row_lo;
    out.col_lo = col_lo;
    out.n_rows = static_cast<std::size_t>(row_hi - row_lo + 1);
    out.n_cols = static_cast<std::size_t>(col_hi - col_lo + 1);
    out.entries.reserve(out.n_rows * out.n_cols);
    for (std::int64_t i = row_lo; i <= row_hi; ++i)
        for (std::int64_t j = col_lo; j <= col_hi; ++j) out.entries.push_back(view.entry(i, j));
    return out;
}

bool row_shift_check(const LaurentWindow& p, const LaurentWindow& q, std::int64_t row_lo,
                     std::int64_t row_hi, std::int64_t col_lo, std::int64_t col_hi) {
    const MatrixView hpq = MatrixView::hurwitz_type(p, q);
    const MatrixView hq_zp = MatrixView::hurwitz_type(q, window_shift(p));
    for (std::int64_t i = row_lo; i <= row_hi; ++i)
        for (std::int64_t j = col_lo; j <= col_hi; ++j)
            if (hq_zp.entry(i, j) != hpq.entry(i + 1, j)) return false;
    return true;
}

bool factorization_check(const LaurentWindow& p, const LaurentWindow& q, const Rational& A,
                         const Rational& B, std::int64_t row_lo, std::int64_t row_hi,
                         std::int64_t col_lo, std::int64_t col_hi) {
    const LaurentWindow zp = window_shift(p);
    const MatrixView t1 = MatrixView::toeplitz(window_add(p, q, A, B));
    const MatrixView t2 = MatrixView::toeplitz(window_add(q, zp, A, B));
    const MatrixView hpq = MatrixView::hurwitz_type(p, q);
    const MatrixView hq_zp = MatrixView::hurwitz_type(q, zp);
    for (std::int64_t i = row_lo; i <= row_hi; ++i) {
        for (std::int64_t j = col_lo; j <= col_hi; ++j) {
            const Rational lhs1 = t1.entry(i, j);
            const Rational rhs1 = A * hpq.entry(2 * i - 1, j) + B * hpq.entry(2 * i, j);
            if (lhs1 != rhs1) return false;
            const Rational lhs2 = t2.entry(i, j);
            const Rational rhs2 = A * hq_zp.entry(2 * i - 1, j) + B * hq_zp.entry(2 * i, j);
            if (lhs2 != rhs2) return false;
        }
    }
    return true;
}

}  // namespace ghurwitz
