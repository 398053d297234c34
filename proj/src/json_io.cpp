#include "ghurwitz/json_io.hpp"

#include <algorithm>

namespace ghurwitz {

namespace {

Rational rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw spec_error("expected a rational as \"num/den\" string or integer");
}

std::vector<Rational> rat_list_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw spec_error(std::string(what) + " must be an array");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

json rat_list_to_json(const std::vector<Rational>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

}  // namespace

LaurentWindow SeriesSpec::realize(std::int64_t need_lo, std::int64_t need_hi) const {
    if (const auto* w = std::get_if<LaurentWindow>(&data)) return *w;
    const auto& f = std::get<Factors>(data);
    const std::int64_t lo = f.lo.value_or(need_lo);
    const std::int64_t hi = f.hi.value_or(need_hi);
    return generate_product_form(f.spec, lo, hi, f.exp_truncation);
}

SeriesSpec parse_series_spec(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw spec_error("series spec: missing \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "explicit") {
        LaurentWindow w;
        w.lo = j.at("lo").get<std::int64_t>();
        w.coeffs = rat_list_from_json(j.at("coeffs"), "coeffs");
        if (w.coeffs.empty()) throw spec_error("series spec: empty coefficient list");
        w.exact = j.value("exact", true);
        if (j.contains("tail_bound")) w.tail_bound = j.at("tail_bound").get<double>();
        if (!w.exact && !w.tail_bound) throw spec_error("series spec: inexact window needs tail_bound");
        return SeriesSpec{w};
    }
    if (kind == "factors") {
        SeriesSpec::Factors f;
        if (j.contains("C")) f.spec.C = rat_from_json(j.at("C"));
        f.spec.j = j.value("j", std::int64_t{0});
        if (j.contains("A")) f.spec.A = rat_from_json(j.at("A"));
        if (j.contains("A0")) f.spec.A0 = rat_from_json(j.at("A0"));
        if (j.contains("pos_zeros")) f.spec.pos_zeros = rat_list_from_json(j.at("pos_zeros"), "pos_zeros");
        if (j.contains("pos_poles")) f.spec.pos_poles = rat_list_from_json(j.at("pos_poles"), "pos_poles");
        if (j.contains("neg_zeros")) f.spec.neg_zeros = rat_list_from_json(j.at("neg_zeros"), "neg_zeros");
        if (j.contains("neg_poles")) f.spec.neg_poles = rat_list_from_json(j.at("neg_poles"), "neg_poles");
        f.spec.zero_at_origin = j.value("zero_at_origin", false);
        if (j.contains("lo")) f.lo = j.at("lo").get<std::int64_t>();
        if (j.contains("hi")) f.hi = j.at("hi").get<std::int64_t>();
        f.exp_truncation = j.value("exp_truncation", std::int64_t{24});
        return SeriesSpec{f};
    }
    throw spec_error("series spec: unknown kind '" + kind + "'");
}

json window_to_json(const LaurentWindow& w) {
    json out;
    out["kind"] = "explicit";
    out["lo"] = w.lo;
    out["coeffs"] = rat_list_to_json(w.coeffs);
    out["exact"] = w.exact;
    if (w.tail_bound) out["tail_bound"] = *w.tail_bound;
    return out;
}

json series_spec_to_json(const SeriesSpec& s) {
    if (const auto* w = std::get_if<LaurentWindow>(&s.data)) return window_to_json(*w);
    const auto& f = std::get<SeriesSpec::Factors>(s.data);
    json out;
    out["kind"] = "factors";
    out["C"] = f.spec.C.str();
    out["j"] = f.spec.j;
    out["A"] = f.spec.A.str();
    out["A0"] = f.spec.A0.str();
    out["pos_zeros"] = rat_list_to_json(f.spec.pos_zeros);
    out["pos_poles"] = rat_list_to_json(f.spec.pos_poles);
    out["neg_zeros"] = rat_list_to_json(f.spec.neg_zeros);
    out["neg_poles"] = rat_list_to_json(f.spec.neg_poles);
    out["zero_at_origin"] = f.spec.zero_at_origin;
    if (f.lo) out["lo"] = *f.lo;
    if (f.hi) out["hi"] = *f.hi;
    out["exp_truncation"] = f.exp_truncation;
    return out;
}

namespace {

LaurentWindow maybe_pad(LaurentWindow w,
                        std::optional<std::pair<std::int64_t, std::int64_t>> pad) {
    if (!pad) return w;
    const std::int64_t lo = w.empty() ? pad->first : std::min(w.lo, pad->first);
    const std::int64_t hi = w.empty() ? pad->second : std::max(w.hi(), pad->second);
    return pad_window(w, lo, hi);
}

}  // namespace

MatrixView MatrixSpec::realize(std::int64_t row_lo, std::int64_t row_hi, std::int64_t col_lo,
                               std::int64_t col_hi,
                               std::optional<std::pair<std::int64_t, std::int64_t>> pad) const {
    if (kind == "toeplitz") {
        // entry(i,j) = f_{j-i}
        const std::int64_t need_lo = col_lo - row_hi, need_hi = col_hi - row_lo;
        return MatrixView::toeplitz(maybe_pad(series->realize(need_lo, need_hi), pad));
    }
    if (kind == "hurwitz_type") {
        const std::int64_t smin = (row_lo + 1) / 2 - 1, smax = row_hi / 2 + 1;
        const std::int64_t need_lo = col_lo - smax, need_hi = col_hi - smin;
        return MatrixView::hurwitz_type(maybe_pad(p->realize(need_lo, need_hi), pad),
                                        maybe_pad(q->realize(need_lo, need_hi), pad));
    }
    if (kind == "hurwitz_of_f") {
        const std::int64_t smin = (row_lo + 1) / 2 - 1, smax = row_hi / 2 + 1;
        const std::int64_t need_lo = 2 * (col_lo - smax), need_hi = 2 * (col_hi - smin) + 1;
        return MatrixView::hurwitz_of(maybe_pad(series->realize(need_lo, need_hi), pad));
    }
    if (kind == "generalized") {
        const std::int64_t need_lo = col_lo * M - (row_hi + row_offset) + 1;
        const std::int64_t need_hi = col_hi * M - (row_lo + row_offset) + 1;
        return MatrixView::generalized(maybe_pad(series->realize(need_lo, need_hi), pad), M,
                                       row_offset);
    }
    throw spec_error("matrix spec: unknown kind '" + kind + "'");
}

MatrixSpec parse_matrix_spec(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw spec_error("matrix spec: missing \"kind\"");
    MatrixSpec m;
    m.kind = j.at("kind").get<std::string>();
    if (m.kind == "hurwitz_type") {
        if (!j.contains("p") || !j.contains("q"))
            throw spec_error("matrix spec: hurwitz_type needs \"p\" and \"q\" series");
        m.p = parse_series_spec(j.at("p"));
        m.q = parse_series_spec(j.at("q"));
    } else if (m.kind == "toeplitz" || m.kind == "hurwitz_of_f" || m.kind == "generalized") {
        if (!j.contains("series")) throw spec_error("matrix spec: missing \"series\"");
        m.series = parse_series_spec(j.at("series"));
        if (m.kind == "generalized") {
            m.M = j.value("M", std::int64_t{2});
            if (m.M < 1) throw spec_error("matrix spec: M must be positive");
            m.row_offset = j.value("row_offset", std::int64_t{0});
        }
    } else {
        throw spec_error("matrix spec: unknown kind '" + m.kind + "'");
    }
    return m;
}

json window_matrix_to_json(const WindowMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n_cols; ++j) row.push_back(m.entries[i * m.n_cols + j].str());
        rows.push_back(std::move(row));
    }
    json out;
    out["row_lo"] = m.row_lo;
    out["row_hi"] = m.row_hi();
    out["col_lo"] = m.col_lo;
    out["col_hi"] = m.col_hi();
    out["entries"] = std::move(rows);
    return out;
}

WindowMatrix window_matrix_from_json(const json& j) {
    WindowMatrix m;
    m.row_lo = j.at("row_lo").get<std::int64_t>();
    m.col_lo = j.at("col_lo").get<std::int64_t>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.empty()) throw spec_error("window matrix: empty entries");
    m.n_rows = rows.size();
    m.n_cols = rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != m.n_cols) throw spec_error("window matrix: ragged rows");
        for (const auto& e : row) m.entries.push_back(rat_from_json(e));
    }
    return m;
}

json minor_witness_to_json(const MinorWitness& w) {
    json out;
    out["rows"] = w.rows;
    out["cols"] = w.cols;
    out["value"] = w.value.str();
    return out;
}

json tnn_verdict_to_json(const TnnVerdict& v) {
    json out;
    out["window"] = {{"row_lo", v.row_lo}, {"row_hi", v.row_hi}, {"col_lo", v.col_lo}, {"col_hi", v.col_hi}};
    out["order_checked"] = v.order_checked;
    if (v.nonnegative()) {
        out["status"] = "nonnegative_up_to";
        out["order"] = v.order_checked;
    } else {
        out["status"] = "negative_minor";
        out["rows"] = v.witness->rows;
        out["cols"] = v.witness->cols;
        out["value"] = v.witness->value.str();
    }
    return out;
}

json sverdict_to_json(const SVerdict& v) {
    json out;
    out["is_s_function"] = v.is_s_function;
    json chain = json::array();
    for (const auto& e : v.chain) {
        json el;
        el["kind"] = e.kind == ChainElement::Kind::zero ? "zero" : "pole";
        el["side"] = e.side == ChainElement::Side::pos ? "pos" : "neg";
        if (e.exact)
            el["value"] = e.value_lo.str();
        else
            el["value"] = json::array({e.value_lo.str(), e.value_hi.str()});
        chain.push_back(std::move(el));
    }
    out["chain"] = std::move(chain);
    if (!v.is_s_function) out["violation"] = v.violation;
    return out;
}

json sample_report_to_json(const SampleReport& r) {
    json out;
    out["pass"] = r.pass;
    out["worst"] = {{"z", {r.worst_z.real(), r.worst_z.imag()}},
                    {"value", {r.worst_value.real(), r.worst_value.imag()}},
                    {"metric", r.worst_metric}};
    out["samples"] = r.samples;
    out["seed"] = r.seed;
    out["tol"] = r.tol;
    return out;
}

json sector_report_to_json(const SectorReport& r) {
    json roots = json::array();
    json residuals = json::array();
    for (const auto& root : r.roots) {
        roots.push_back({root.value.real(), root.value.imag()});
        residuals.push_back(root.residual);
    }
    json out;
    out["roots"] = std::move(roots);
    out["residuals"] = std::move(residuals);
    if (std::isfinite(r.min_abs_arg))
        out["min_abs_arg"] = r.min_abs_arg;
    else
        out["min_abs_arg"] = nullptr;  // no roots after clearing the monomial
    out["half_angle"] = r.half_angle;
    out["pass"] = r.pass;
    return out;
}

json routh_certificate_to_json(const RouthCertificate& c) {
    json rows = json::array();
    for (const auto& row : c.chain_rows) rows.push_back(rat_list_to_json(row));
    json out;
    out["quasi_stable"] = c.quasi_stable;
    out["origin_multiplicity"] = c.origin_multiplicity;
    out["symmetric_factor_even"] = rat_list_to_json(c.symmetric_even.coeffs());
    out["symmetric_ok"] = c.symmetric_ok;
    out["reduced_degree"] = c.reduced_degree;
    out["cauchy_index"] = c.cauchy_index;
    out["rhp_roots_reduced"] = c.rhp_roots_reduced;
    out["chain_rows"] = std::move(rows);
    if (!c.failure.empty()) out["failure"] = c.failure;
    return out;
}

json partial_fractions_to_json(const PartialFractions& p) {
    json residues = json::array();
    for (const auto& r : p.residues) {
        json e;
        if (r.pole.exact())
            e["pole"] = r.pole.lo.str();
        else
            e["pole"] = json::array({r.pole.lo.str(), r.pole.hi.str()});
        if (r.exact_value)
            e["value"] = r.exact_value->str();
        else
            e["value"] = json::array({r.value_lo.str(), r.value_hi.str()});
        e["sign"] = r.sign;
        residues.push_back(std::move(e));
    }
    json out;
    out["constant_term"] = p.constant_term.str();
    out["residues"] = std::move(residues);
    out["all_exact"] = p.all_exact;
    return out;
}

RationalPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs")) throw spec_error("polynomial: missing \"coeffs\"");
    return RationalPoly(rat_list_from_json(j.at("coeffs"), "coeffs"));
}

json poly_to_json(const RationalPoly& p) {
    json out;
    out["coeffs"] = rat_list_to_json(p.coeffs());
    return out;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ghurwitz
