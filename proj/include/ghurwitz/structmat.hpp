#ifndef GHURWITZ_STRUCTMAT_HPP
#define GHURWITZ_STRUCTMAT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ghurwitz/laurent.hpp"
#include "ghurwitz/rational.hpp"

namespace ghurwitz {

struct outside_window_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lazily-indexed structured matrix over all integer indices. Entry
/// lookups that need a series coefficient outside its backing window
/// throw; nothing is ever zero-filled implicitly. The representation
/// origin (1,1) is the uppermost-left position of the usual displays,
/// but any integer indices are valid.
///
/// Entry formulas (indices i = row, j = column):
///   Toeplitz(f):              f_{j-i}
///   HurwitzType(p, q):        a_{j-(i+1)/2} for odd i, b_{j-i/2} for even i
///   GeneralizedHurwitz(f, M): f_{jM-(i+offset)+1}
///   TwoBandMask(A, B):        A at j = 2i-1, B at j = 2i, else 0
class MatrixView {
  public:
    struct Toeplitz {
        LaurentWindow f;
    };
    struct HurwitzType {
        LaurentWindow p;  // odd rows (a-coefficients)
        LaurentWindow q;  // even rows (b-coefficients)
    };
    struct GeneralizedHurwitz {
        LaurentWindow f;
        std::int64_t M = 2;
        // Display convention at 0; the in-prose variant (f_{jM-i}) is offset 1.
        std::int64_t row_offset = 0;
    };
    struct TwoBandMask {
        Rational A, B;
    };

    static MatrixView toeplitz(LaurentWindow f);
    static MatrixView hurwitz_type(LaurentWindow p, LaurentWindow q);
    /// Hurwitz matrix of f via the even/odd split f(z) = q(z^2) + z p(z^2).
    static MatrixView hurwitz_of(const LaurentWindow& f);
    static MatrixView generalized(LaurentWindow f, std::int64_t M, std::int64_t row_offset = 0);
    static MatrixView two_band_mask(Rational A, Rational B);

    Rational entry(std::int64_t i, std::int64_t j) const;
    std::optional<Rational> try_entry(std::int64_t i, std::int64_t j) const;

    const std::variant<Toeplitz, HurwitzType, GeneralizedHurwitz, TwoBandMask>& data() const {
        return v_;
    }

  private:
    explicit MatrixView(std::variant<Toeplitz, HurwitzType, GeneralizedHurwitz, TwoBandMask> v)
        : v_(std::move(v)) {}
    std::variant<Toeplitz, HurwitzType, GeneralizedHurwitz, TwoBandMask> v_;
};

/// Dense exact copy of a finite index window of a MatrixView.
struct WindowMatrix {
    std::int64_t row_lo = 1;
    std::int64_t col_lo = 1;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<Rational> entries;  // row-major

    std::int64_t row_hi() const { return row_lo + static_cast<std::int64_t>(n_rows) - 1; }
    std::int64_t col_hi() const { return col_lo + static_cast<std::int64_t>(n_cols) - 1; }

    const Rational& at(std::int64_t i, std::int64_t j) const {
        if (i < row_lo || i > row_hi() || j < col_lo || j > col_hi())
            throw outside_window_error("WindowMatrix: index outside extracted window");
        return entries[static_cast<std::size_t>(i - row_lo) * n_cols +
                       static_cast<std::size_t>(j - col_lo)];
    }
    Rational& at(std::int64_t i, std::int64_t j) {
        return const_cast<Rational&>(static_cast<const WindowMatrix&>(*this).at(i, j));
    }
};

WindowMatrix extract_window(const MatrixView& view, std::int64_t row_lo, std::int64_t row_hi,
                            std::int64_t col_lo, std::int64_t col_hi);

/// Entrywise check of H(q, zp)(i, j) = H(p, q)(i+1, j) on the window.
bool row_shift_check(const LaurentWindow& p, const LaurentWindow& q, std::int64_t row_lo,
                     std::int64_t row_hi, std::int64_t col_lo, std::int64_t col_hi);

/// Entrywise check of the two mask factorizations on the window:
///   T(Ap+Bq)(i,j)  = A H(p,q)(2i-1,j) + B H(p,q)(2i,j)
///   T(Aq+Bzp)(i,j) = A H(q,zp)(2i-1,j) + B H(q,zp)(2i,j)
bool factorization_check(const LaurentWindow& p, const LaurentWindow& q, const Rational& A,
                         const Rational& B, std::int64_t row_lo, std::int64_t row_hi,
                         std::int64_t col_lo, std::int64_t col_hi);

}  // namespace ghurwitz

#endif
