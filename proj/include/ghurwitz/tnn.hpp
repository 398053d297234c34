#ifndef GHURWITZ_TNN_HPP
#define GHURWITZ_TNN_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ghurwitz/laurent.hpp"
#include "ghurwitz/structmat.hpp"

namespace ghurwitz {

struct shape_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Certificate: row/column index sets (absolute window indices, strictly
/// increasing) and the exact determinant of the selected submatrix.
struct MinorWitness {
    std::vector<std::int64_t> rows;
    std::vector<std::int64_t> cols;
    Rational value;
};

/// Window/order-qualified verdict; carries no claim about the infinite
/// matrix beyond the searched window.
struct TnnVerdict {
    enum class Status { nonnegative_up_to, negative_minor };
    Status status = Status::nonnegative_up_to;
    int order_checked = 0;
    std::int64_t row_lo = 0, row_hi = 0, col_lo = 0, col_hi = 0;
    std::optional<MinorWitness> witness;

    bool nonnegative() const { return status == Status::nonnegative_up_to; }
};

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational exact_det(const WindowMatrix& m);

int default_max_order(const WindowMatrix& m);

/// Enumerates all k x k minors for k = 1..max_order. Minors are scanned in
/// a fixed deterministic order: ascending order k, row index sets in
/// ascending lexicographic order, and column index sets scanned
/// right-to-left (descending lexicographic order). The first negative
/// minor in this order is returned as the witness.
TnnVerdict check_tnn(const WindowMatrix& m, int max_order);

/// First k x k minor with nonzero value in the same scan order, if any.
std::optional<MinorWitness> has_nonzero_minor_of_order(const WindowMatrix& m, int k);

/// Detects the rank-one (coefficient-wise geometric) degeneracy
/// a_k = a_0 r^k, b_k = s a_k on the given windows. Returns (r, s) =
/// (a_1/a_0, b_0/a_0) when present. Presence is equivalent, on the
/// window, to all order-2 minors of H(p, q) vanishing.
std::optional<std::pair<Rational, Rational>> detect_geometric_degeneracy(const LaurentWindow& p,
                                                                         const LaurentWindow& q);

}  // namespace ghurwitz

#endif
