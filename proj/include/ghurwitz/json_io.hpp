#ifndef GHURWITZ_JSON_IO_HPP
#define GHURWITZ_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "ghurwitz/analytic.hpp"
#include "ghurwitz/laurent.hpp"
#include "ghurwitz/realroots.hpp"
#include "ghurwitz/structmat.hpp"
#include "ghurwitz/tnn.hpp"

namespace ghurwitz {

using json = nlohmann::json;

struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// SeriesSpec: {"kind":"explicit","lo":int,"coeffs":["num/den",...]} or
/// {"kind":"factors","C":...,"j":...,"A":...,"A0":...,"pos_zeros":[...],
///  "pos_poles":[...],"neg_zeros":[...],"neg_poles":[...],
///  "zero_at_origin":bool}. A factors spec may pin its expansion range
/// with "lo"/"hi" and the truncation depth with "exp_truncation".
struct SeriesSpec {
    struct Factors {
        FactorSpec spec;
        std::optional<std::int64_t> lo, hi;
        std::int64_t exp_truncation = 24;
    };
    std::variant<LaurentWindow, Factors> data;

    bool is_explicit() const { return std::holds_alternative<LaurentWindow>(data); }
    /// Explicit windows are returned as stored; factor specs are expanded
    /// on their pinned range, or on [need_lo, need_hi] if unpinned.
    LaurentWindow realize(std::int64_t need_lo, std::int64_t need_hi) const;
};

SeriesSpec parse_series_spec(const json& j);
json series_spec_to_json(const SeriesSpec& s);
json window_to_json(const LaurentWindow& w);

/// MatrixSpec:
///   {"kind":"toeplitz","series":S}
///   {"kind":"hurwitz_type","p":S,"q":S}
///   {"kind":"hurwitz_of_f","series":S}
///   {"kind":"generalized","series":S,"M":int,"row_offset":int}
struct MatrixSpec {
    std::string kind;
    std::optional<SeriesSpec> series;
    std::optional<SeriesSpec> p, q;
    std::int64_t M = 2;
    std::int64_t row_offset = 0;

    /// Builds the view with series windows sized for the requested matrix
    /// window; optional padding widens explicit series windows first.
    MatrixView realize(std::int64_t row_lo, std::int64_t row_hi, std::int64_t col_lo,
                       std::int64_t col_hi,
                       std::optional<std::pair<std::int64_t, std::int64_t>> pad) const;
};

MatrixSpec parse_matrix_spec(const json& j);

json window_matrix_to_json(const WindowMatrix& m);
WindowMatrix window_matrix_from_json(const json& j);

json tnn_verdict_to_json(const TnnVerdict& v);
json minor_witness_to_json(const MinorWitness& w);
json sverdict_to_json(const SVerdict& v);
json sample_report_to_json(const SampleReport& r);
json sector_report_to_json(const SectorReport& r);
json routh_certificate_to_json(const RouthCertificate& c);
json partial_fractions_to_json(const PartialFractions& p);

RationalPoly poly_from_json(const json& j);  // {"coeffs":["num/den",...]} ascending
json poly_to_json(const RationalPoly& p);

/// Canonical serialization used everywhere a report is written to disk:
/// 2-space indent, sorted keys (nlohmann maps are ordered), trailing
/// newline. Byte-stable for identical inputs.
std::string dump_report(const json& j);

}  // namespace ghurwitz

#endif
