#include "ghurwitz/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

namespace ghurwitz {

namespace {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::uint64_t next() { return g(); }
    std::int64_t below(std::int64_t n) {
        return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n));
    }
    bool chance(int num, int den) { return below(den) < num; }
    Rational positive_rational(long num_max, long den_max) {
        return Rational(1 + static_cast<long>(below(num_max)), 1 + static_cast<long>(below(den_max)));
    }
};

std::uint64_t instance_seed(std::uint64_t suite_seed, std::uint64_t index) {
    // SplitMix64 over the pair; thread-schedule independent.
    std::uint64_t x = suite_seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    const int workers = std::min(threads, n);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const int i = cursor.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

LaurentWindow poly_window(const RationalPoly& f, std::int64_t pad_lo, std::int64_t pad_hi) {
    LaurentWindow w{0, f.coeffs(), true, std::nullopt};
    if (f.is_zero()) w = LaurentWindow{0, {Rational(0)}, true, std::nullopt};
    return pad_window(w, std::min<std::int64_t>(0, pad_lo), std::max(f.degree(), pad_hi));
}

// ---------------------------------------------------------------------
// Interlacing instances (positive-side chains) and their mutants.

struct ChainInstance {
    std::vector<Rational> betas;   // |zeros| of q ascending; betas[0] may be 0
    std::vector<Rational> alphas;  // |poles| ascending
    Rational C = Rational(1);
    RationalPoly p, q;
    std::string desc;
};

std::vector<Rational> draw_distinct_positive(Rng& rng, int n) {
    std::vector<Rational> vals;
    while (static_cast<int>(vals.size()) < n) {
        const Rational v = rng.positive_rational(96, 16);
        if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

RationalPoly poly_from_roots(const Rational& scale, const std::vector<Rational>& neg_of_roots) {
    RationalPoly acc = RationalPoly::constant(scale);
    for (const auto& r : neg_of_roots) acc = acc * RationalPoly::linear(r);
    return acc;
}

std::string chain_desc(const ChainInstance& inst) {
    std::string s = "q roots -";
    for (const auto& b : inst.betas) s += b.str() + ",";
    s += " p roots -";
    for (const auto& a : inst.alphas) s += a.str() + ",";
    s += " C=" + inst.C.str();
    return s;
}

ChainInstance gen_interlacing(Rng& rng, int max_chain_len, bool allow_zero_beta = true) {
    ChainInstance inst;
    const int total = 1 + static_cast<int>(rng.below(max_chain_len));
    auto vals = draw_distinct_positive(rng, total);
    if (allow_zero_beta && rng.chance(1, 8)) vals.front() = Rational(0);
    for (std::size_t i = 0; i < vals.size(); ++i)
        (i % 2 == 0 ? inst.betas : inst.alphas).push_back(vals[i]);
    inst.C = rng.positive_rational(8, 8);
    inst.q = poly_from_roots(inst.C, inst.betas);
    inst.p = poly_from_roots(Rational(1), inst.alphas);
    inst.desc = chain_desc(inst);
    return inst;
}

struct MutantInstance {
    RationalPoly p, q;
    std::string desc;
};

MutantInstance gen_mutant(Rng& rng, int max_chain_len, int cls) {
    MutantInstance out;
    switch (cls % 5) {
        case 0: {  // swapped: ratio starts with a pole
            ChainInstance base = gen_interlacing(rng, max_chain_len, /*allow_zero_beta=*/false);
            while (base.alphas.empty()) base = gen_interlacing(rng, max_chain_len, false);
            out.p = base.q;
            out.q = base.p;
            out.desc = "swapped(" + base.desc + ")";
            return out;
        }
        case 1: {  // broken alternation: two q-roots in a row
            auto vals = draw_distinct_positive(rng, 3 + static_cast<int>(rng.below(2)));
            std::vector<Rational> betas{vals[0], vals[1]};
            std::vector<Rational> alphas;
            for (std::size_t i = 2; i < vals.size(); ++i)
                (i % 2 == 0 ? alphas : betas).push_back(vals[i]);
            out.q = poly_from_roots(Rational(1), betas);
            out.p = poly_from_roots(Rational(1), alphas.empty() ? std::vector<Rational>{vals.back() + Rational(1)}
                                                                : alphas);
            out.desc = "broken-alternation";
            return out;
        }
        case 2: {  // complex pair in the denominator
            ChainInstance base = gen_interlacing(rng, max_chain_len - 2 > 0 ? max_chain_len - 2 : 1, false);
            const Rational c = rng.positive_rational(4, 4);
            const Rational d = c * c + rng.positive_rational(4, 4);  // discriminant < 0
            out.p = base.p * RationalPoly({d, c + c, Rational(1)});
            out.q = base.q;
            out.desc = "complex-pair(" + base.desc + ")";
            return out;
        }
        case 3: {  // negative coefficient injected into q
            ChainInstance base = gen_interlacing(rng, max_chain_len, false);
            while (base.q.degree() < 1) base = gen_interlacing(rng, max_chain_len, false);
            auto coeffs = base.q.coeffs();
            const std::size_t k = 1 + static_cast<std::size_t>(rng.below(base.q.degree()));
            coeffs[k] = -coeffs[k];
            out.q = RationalPoly(std::move(coeffs));
            out.p = base.p;
            out.desc = "negative-coefficient(" + base.desc + ")";
            return out;
        }
        default: {  // double zero of the ratio
            ChainInstance base = gen_interlacing(rng, max_chain_len - 2 > 0 ? max_chain_len - 2 : 1, false);
            Rational fresh = rng.positive_rational(16, 8);
            while (base.q.eval(-fresh).is_zero() || base.p.eval(-fresh).is_zero())
                fresh += Rational(1, 3);
            out.q = base.q * RationalPoly::linear(fresh) * RationalPoly::linear(fresh);
            out.p = base.p;
            out.desc = "double-zero(" + base.desc + ")";
            return out;
        }
    }
}

// Factored numeric evaluator for C prod(z+beta)/prod(z+alpha).
ComplexFn chain_fn(const ChainInstance& inst) {
    std::vector<double> betas, alphas;
    for (const auto& b : inst.betas) betas.push_back(b.to_double());
    for (const auto& a : inst.alphas) alphas.push_back(a.to_double());
    const double c = inst.C.to_double();
    return [betas, alphas, c](Complex z) {
        Complex acc(c, 0.0);
        for (double b : betas) acc *= z + b;
        for (double a : alphas) acc /= z + a;
        return acc;
    };
}

struct WitnessSearch {
    bool found = false;
    std::int64_t window_used = 0;
    int order_used = 0;
    TnnVerdict verdict;
};

WitnessSearch search_negative_minor(const RationalPoly& p, const RationalPoly& q,
                                    std::int64_t cap_window, int cap_order) {
    WitnessSearch out;
    std::vector<std::pair<std::int64_t, int>> stages = {
        {8, std::min(2, cap_order)}, {12, std::min(3, cap_order)}, {cap_window, cap_order}};
    for (const auto& [w, order] : stages) {
        if (w > cap_window) break;
        const std::int64_t shift_max = (w + 1) / 2;
        const LaurentWindow pw = poly_window(p, 1 - shift_max, w - 1);
        const LaurentWindow qw = poly_window(q, 1 - shift_max, w - 1);
        const WindowMatrix m = extract_window(MatrixView::hurwitz_type(pw, qw), 1, w, 1, w);
        const TnnVerdict v = check_tnn(m, order);
        if (!v.nonnegative()) {
            out.found = true;
            out.window_used = w;
            out.order_used = order;
            out.verdict = v;
            return out;
        }
        out.window_used = w;
        out.order_used = order;
    }
    return out;
}

// ---------------------------------------------------------------------
// Quasi-stable products and their reflections.

struct QuasiInstance {
    RationalPoly f;
    std::vector<Rational> real_roots;                   // factors (z + x), x > 0
    std::vector<std::pair<Rational, Rational>> pairs;   // z^2 + 2cz + m, 0 < c, c^2 < m
    std::vector<Rational> axis;                         // factors (z^2 + w^2)
    int zpow = 0;
    bool mirrored = false;
    std::string desc;
};

RationalPoly quasi_poly(const QuasiInstance& q) {
    RationalPoly f = RationalPoly::constant(Rational(1));
    const Rational sgn = q.mirrored ? Rational(-1) : Rational(1);
    for (const auto& x : q.real_roots) f = f * RationalPoly({sgn * x, Rational(1)});
    for (const auto& [c, m] : q.pairs) f = f * RationalPoly({m, sgn * (c + c), Rational(1)});
    for (const auto& w : q.axis) f = f * RationalPoly({w * w, Rational(0), Rational(1)});
    return f.shifted_up(q.zpow);
}

ComplexFn quasi_fn(const QuasiInstance& q) {
    std::vector<double> xs, cs, ms, ws;
    for (const auto& x : q.real_roots) xs.push_back(x.to_double());
    for (const auto& [c, m] : q.pairs) {
        cs.push_back(c.to_double());
        ms.push_back(m.to_double());
    }
    for (const auto& w : q.axis) ws.push_back(w.to_double());
    const double sgn = q.mirrored ? -1.0 : 1.0;
    const int zpow = q.zpow;
    return [xs, cs, ms, ws, sgn, zpow](Complex z) {
        Complex acc(1.0, 0.0);
        for (double x : xs) acc *= z + sgn * x;
        for (std::size_t i = 0; i < cs.size(); ++i) acc *= z * z + sgn * 2.0 * cs[i] * z + ms[i];
        for (double w : ws) acc *= z * z + w * w;
        for (int t = 0; t < zpow; ++t) acc *= z;
        return acc;
    };
}

QuasiInstance gen_quasi(Rng& rng, int degree_max) {
    QuasiInstance out;
    int budget = 1 + static_cast<int>(rng.below(degree_max));
    std::vector<Rational> moduli;
    auto fresh = [&](Rational v) {
        while (std::find(moduli.begin(), moduli.end(), v) != moduli.end()) v += Rational(1, 7);
        moduli.push_back(v);
        return v;
    };
    if (rng.chance(1, 4)) {
        out.zpow = 1;
        budget -= 1;
    }
    while (budget > 0) {
        const std::int64_t kind = rng.below(4);
        if (kind == 0 || budget == 1) {
            out.real_roots.push_back(fresh(rng.positive_rational(8, 4)));
            budget -= 1;
        } else if (kind == 3 && budget >= 2) {
            out.axis.push_back(fresh(rng.positive_rational(8, 4)));
            budget -= 2;
        } else {
            const Rational c = rng.positive_rational(4, 4);
            const Rational m = fresh(c * c + rng.positive_rational(4, 4));
            out.pairs.emplace_back(c, m);
            budget -= 2;
        }
    }
    if (out.real_roots.empty() && out.pairs.empty())
        out.real_roots.push_back(fresh(rng.positive_rational(8, 4)));
    out.f = quasi_poly(out);
    out.desc = "degree " + std::to_string(out.f.degree()) + ", " +
               std::to_string(out.real_roots.size()) + " real + " +
               std::to_string(out.pairs.size()) + " complex-pair + " +
               std::to_string(out.axis.size()) + " axis factor(s)" +
               (out.zpow ? ", z factor" : "");
    return out;
}

QuasiInstance mirror(const QuasiInstance& base) {
    QuasiInstance out = base;
    out.mirrored = true;
    out.f = quasi_poly(out);
    out.desc = "mirrored(" + base.desc + ")";
    return out;
}

TnnVerdict hurwitz_window_verdict(const RationalPoly& f, std::int64_t w, int order) {
    const std::int64_t shift_max = (w + 1) / 2;
    // Split indices [1 - shift_max, w - 1] pull f-indices in
    // [2(1-shift_max), 2(w-1)+1].
    const LaurentWindow fw = poly_window(f, 2 * (1 - shift_max), 2 * (w - 1) + 1);
    const WindowMatrix m = extract_window(MatrixView::hurwitz_of(fw), 1, w, 1, w);
    return check_tnn(m, order);
}

// ---------------------------------------------------------------------

json witness_search_json(const WitnessSearch& s) {
    json out;
    out["found"] = s.found;
    out["window"] = s.window_used;
    out["order"] = s.order_used;
    if (s.found) out["witness"] = minor_witness_to_json(*s.verdict.witness);
    return out;
}

}  // namespace

json run_config_to_json(const RunConfig& cfg) {
    json g = json::array();
    for (const auto& x : cfg.grid) g.push_back(x.str());
    json out;
    out["command"] = cfg.command;
    out["inputs"] = cfg.inputs;
    out["count"] = cfg.count;
    out["seed"] = cfg.seed;
    out["degree_max"] = cfg.degree_max;
    out["max_order"] = cfg.max_order;
    out["window"] = cfg.window;
    out["cap_window"] = cfg.cap_window;
    out["cap_order"] = cfg.cap_order;
    out["grid"] = std::move(g);
    out["mode"] = cfg.mode;
    out["tol"] = cfg.tol;
    out["samples"] = cfg.samples;
    out["M"] = cfg.M;
    return out;
}

json HarnessReport::to_json() const {
    json inst = json::array();
    for (const auto& r : instances) {
        json e;
        e["index"] = r.index;
        e["description"] = r.description;
        e["pass"] = r.pass;
        e["inconclusive"] = r.inconclusive;
        e["skipped"] = r.skipped;
        e["details"] = r.details;
        inst.push_back(std::move(e));
    }
    json out;
    out["theorem"] = theorem;
    out["config"] = run_config_to_json(config);
    out["instances"] = std::move(inst);
    out["aggregate_pass"] = aggregate_pass;
    out["inconclusive_count"] = inconclusive_count;
    return out;
}

int thread_count_from_env() {
    if (const char* env = std::getenv("GHURWITZ_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 512) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

HarnessReport equivalence_suite(const RunConfig& cfg, int threads) {
    HarnessReport rep;
    rep.theorem = "interlacing-tnn equivalence";
    rep.config = cfg;

    const int n_forward = cfg.count;
    const int n_mutant = cfg.count;
    const int total = n_forward + n_mutant + 1;  // +1 rank-one degenerate ride-along
    rep.instances.resize(static_cast<std::size_t>(total));

    const std::int64_t w = cfg.window;
    const std::int64_t pad_lo = -w - 1, pad_hi = 2 * w;

    auto eval_forward = [&](int i) {
        Rng rng(instance_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        ChainInstance inst;
        if (i == 0) {
            inst.betas = {Rational(1), Rational(3)};
            inst.alphas = {Rational(2), Rational(4)};
            inst.C = Rational(1);
            inst.q = poly_from_roots(inst.C, inst.betas);
            inst.p = poly_from_roots(Rational(1), inst.alphas);
            inst.desc = "named: " + chain_desc(inst);
        } else {
            inst = gen_interlacing(rng, 5);
        }

        InstanceResult res;
        res.index = i;
        res.description = "forward: " + inst.desc;
        json det;

        const SVerdict sv = check_interlacing(inst.p, inst.q);
        det["interlacing"] = sverdict_to_json(sv);
        bool ok = sv.is_s_function;

        const LaurentWindow pw = poly_window(inst.p, pad_lo, pad_hi);
        const LaurentWindow qw = poly_window(inst.q, pad_lo, pad_hi);

        const auto degen = detect_geometric_degeneracy(pw, qw);
        det["degenerate"] = degen.has_value();
        ok = ok && !degen.has_value();

        const WindowMatrix hm = extract_window(MatrixView::hurwitz_type(pw, qw), 1, w, 1, w);
        const TnnVerdict hv = check_tnn(hm, cfg.max_order);
        det["hurwitz_window"] = tnn_verdict_to_json(hv);
        ok = ok && hv.nonnegative();
        const auto nz2 = has_nonzero_minor_of_order(hm, 2);
        det["nonzero_order2"] = nz2.has_value();
        ok = ok && nz2.has_value();

        const int t_order = std::min(cfg.max_order, 3);
        bool grid_ok = true;
        bool fact_ok = true;
        for (const auto& A : cfg.grid) {
            for (const auto& B : cfg.grid) {
                const LaurentWindow s1 = window_add(pw, qw, A, B);
                const LaurentWindow s2 = window_add(qw, window_shift(pw), A, B);
                const WindowMatrix t1 = extract_window(MatrixView::toeplitz(s1), 1, w, 1, w);
                const WindowMatrix t2 = extract_window(MatrixView::toeplitz(s2), 1, w, 1, w);
                grid_ok = grid_ok && check_tnn(t1, t_order).nonnegative() &&
                          check_tnn(t2, t_order).nonnegative();
                fact_ok = fact_ok && factorization_check(pw, qw, A, B, 1, w / 2, 1, w);
            }
        }
        det["toeplitz_grid_nonnegative"] = grid_ok;
        det["factorization_identity"] = fact_ok;
        ok = ok && grid_ok && fact_ok;

        const PartialFractions pf = partial_fraction_residues(Rational(1), inst.q, inst.p);
        bool residues_pos = true;
        for (const auto& r : pf.residues) residues_pos = residues_pos && r.sign > 0;
        det["residues"] = partial_fractions_to_json(pf);
        det["residues_positive"] = residues_pos;
        ok = ok && residues_pos;

        ComplexSampler sampler;
        sampler.region = Region::upper_half_plane;
        sampler.count = cfg.samples;
        sampler.seed = instance_seed(cfg.seed, static_cast<std::uint64_t>(i) | (1ULL << 48));
        const SampleReport sr = sample_im_nonneg(chain_fn(inst), sampler, cfg.tol);
        det["im_sampler"] = sample_report_to_json(sr);
        ok = ok && sr.pass;

        res.pass = ok;
        res.details = std::move(det);
        return res;
    };

    auto eval_mutant = [&](int k) {
        const int i = n_forward + k;
        Rng rng(instance_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        MutantInstance inst;
        if (k == 0) {
            inst.p = RationalPoly({Rational(3), Rational(4), Rational(1)});
            inst.q = RationalPoly({Rational(2), Rational(1)});
            inst.desc = "named: p=(3,4,1), q=(2,1)";
        } else {
            inst = gen_mutant(rng, 5, k);
        }

        InstanceResult res;
        res.index = i;
        res.description = "converse: " + inst.desc;
        json det;

        const SVerdict sv = check_interlacing(inst.p, inst.q);
        det["interlacing"] = sverdict_to_json(sv);
        bool ok = !sv.is_s_function;

        const WitnessSearch ws = search_negative_minor(inst.p, inst.q, cfg.cap_window, cfg.cap_order);
        det["witness_search"] = witness_search_json(ws);
        if (!ws.found) {
            res.inconclusive = true;
        } else {
            ok = ok && ws.verdict.witness->value.sign() < 0;
        }
        res.pass = ok && ws.found;
        res.details = std::move(det);
        return res;
    };

    auto eval_degenerate = [&]() {
        InstanceResult res;
        res.index = total - 1;
        res.description = "degenerate: a_k = 2^k, b_k = 3*2^k on [-3,3]";
        json det;
        LaurentWindow pw{-3, {}, true, std::nullopt};
        LaurentWindow qw{-3, {}, true, std::nullopt};
        for (std::int64_t k = -3; k <= 3; ++k) {
            pw.coeffs.push_back(Rational(2).pow(k));
            qw.coeffs.push_back(Rational(3) * Rational(2).pow(k));
        }
        const auto degen = detect_geometric_degeneracy(pw, qw);
        det["degenerate"] = degen.has_value();
        bool ok = degen.has_value() && degen->first == Rational(2) && degen->second == Rational(3);
        if (degen) det["ratio_scale"] = {degen->first.str(), degen->second.str()};
        // Every fully stored order-2 minor must vanish.
        const WindowMatrix m = extract_window(MatrixView::hurwitz_type(pw, qw), 1, 8, 1, 4);
        const bool no2 = !has_nonzero_minor_of_order(m, 2).has_value();
        const bool tnn2 = check_tnn(m, 2).nonnegative();
        det["all_order2_zero"] = no2;
        det["window_nonnegative_order2"] = tnn2;
        ok = ok && no2 && tnn2;
        det["excluded_from_interlacing_check"] = true;
        res.pass = ok;
        res.details = std::move(det);
        return res;
    };

    parallel_for(total, threads, [&](int i) {
        if (i < n_forward)
            rep.instances[static_cast<std::size_t>(i)] = eval_forward(i);
        else if (i < n_forward + n_mutant)
            rep.instances[static_cast<std::size_t>(i)] = eval_mutant(i - n_forward);
        else
            rep.instances[static_cast<std::size_t>(i)] = eval_degenerate();
    });

    rep.aggregate_pass = true;
    for (const auto& r : rep.instances) {
        if (r.inconclusive) ++rep.inconclusive_count;
        rep.aggregate_pass = rep.aggregate_pass && (r.pass || r.inconclusive);
    }
    // Up to 2% of the mutated half may stay inconclusive.
    rep.aggregate_pass = rep.aggregate_pass && rep.inconclusive_count * 50 <= n_mutant;
    return rep;
}

HarnessReport quasi_stability_suite(const RunConfig& cfg, int threads) {
    HarnessReport rep;
    rep.theorem = "quasi-stability vs Hurwitz-window nonnegativity";
    rep.config = cfg;
    const int pairs = std::max(1, cfg.count / 2);
    rep.instances.resize(static_cast<std::size_t>(2 * pairs));

    const std::int64_t w = std::max<std::int64_t>(cfg.window, 10);
    const int order = cfg.max_order;

    auto eval_one = [&](int idx) {
        const int pair = idx / 2;
        const bool mutated = idx % 2 == 1;
        Rng rng(instance_seed(cfg.seed, static_cast<std::uint64_t>(pair)));
        const QuasiInstance base = gen_quasi(rng, cfg.degree_max);
        const QuasiInstance inst = mutated ? mirror(base) : base;

        InstanceResult res;
        res.index = idx;
        res.description = (mutated ? "mutant: " : "stable: ") + inst.desc;
        json det;

        const RouthCertificate cert = routh_quasi_stability(inst.f);
        det["routh"] = routh_certificate_to_json(cert);
        const TnnVerdict hv = hurwitz_window_verdict(inst.f, w, order);
        det["hurwitz_window"] = tnn_verdict_to_json(hv);
        const bool agree = cert.quasi_stable == hv.nonnegative();
        det["agreement"] = agree;
        bool ok = agree && (cert.quasi_stable == !mutated);

        // Half-plane numerics on the same instance.
        const auto split = split_even_odd(poly_window(inst.f, 0, inst.f.degree()));
        ComplexSampler sampler;
        sampler.region = Region::right_half_plane;
        sampler.count = cfg.samples;
        sampler.seed = instance_seed(cfg.seed, static_cast<std::uint64_t>(idx) | (1ULL << 49));
        const ModulusReport mod = check_modulus_inequality(
            quasi_fn(inst), make_window_fn(split.p), make_window_fn(split.q), sampler, cfg.tol);
        const SampleReport rhp =
            check_rhp_mapping(make_window_fn(split.p), make_window_fn(split.q), sampler, cfg.tol);
        det["modulus_direct"] = sample_report_to_json(mod.direct);
        det["modulus_mobius"] = sample_report_to_json(mod.mobius);
        det["rhp_mapping"] = sample_report_to_json(rhp);
        // Both evaluation routes of the modulus bound must agree.
        ok = ok && mod.direct.pass == mod.mobius.pass;
        if (!mutated) {
            ok = ok && mod.direct.pass && mod.mobius.pass && rhp.pass;
        } else {
            // A reflected instance violates both inequalities at samples.
            ok = ok && !mod.direct.pass && !rhp.pass;
        }

        res.pass = ok;
        res.details = std::move(det);
        return res;
    };

    parallel_for(2 * pairs, threads,
                 [&](int i) { rep.instances[static_cast<std::size_t>(i)] = eval_one(i); });

    rep.aggregate_pass = true;
    for (const auto& r : rep.instances) rep.aggregate_pass = rep.aggregate_pass && r.pass;
    return rep;
}

HarnessReport sector_suite(const RunConfig& cfg, int threads) {
    HarnessReport rep;
    rep.theorem = "split premise implies sector freedom";
    rep.config = cfg;
    rep.instances.resize(static_cast<std::size_t>(cfg.count));

    auto eval_one = [&](int i) {
        Rng rng(instance_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        InstanceResult res;
        res.index = i;
        json det;

        LaurentWindow f;
        std::int64_t M = cfg.M;
        std::string kind;
        if (i == 0) {
            // (1+z)^6, M = 3
            FactorSpec spec;
            spec.pos_zeros.assign(6, Rational(1));
            f = generate_product_form(spec, 0, 6, 8);
            M = 3;
            kind = "negroots: (1+z)^6";
        } else {
            switch (i % 4) {
                case 1: {
                    const QuasiInstance q = gen_quasi(rng, cfg.degree_max);
                    f = poly_window(q.f, 0, q.f.degree());
                    M = 2;
                    kind = "quasi-stable: " + q.desc;
                    break;
                }
                case 2: {
                    FactorSpec spec;
                    const int nroots = 1 + static_cast<int>(rng.below(6));
                    for (int t = 0; t < nroots; ++t) spec.pos_zeros.push_back(rng.positive_rational(6, 4));
                    spec.C = rng.positive_rational(4, 4);
                    f = generate_product_form(spec, 0, nroots, 8);
                    kind = "negroots";
                    break;
                }
                case 3: {
                    FactorSpec spec;
                    const int nroots = 2 + static_cast<int>(rng.below(5));
                    for (int t = 0; t < nroots; ++t) spec.pos_zeros.push_back(rng.positive_rational(6, 4));
                    f = generate_product_form(spec, 0, nroots, 8);
                    auto& c = f.coeffs[1 + static_cast<std::size_t>(rng.below(nroots - 1))];
                    c = -c;
                    kind = "sign-flip mutation";
                    break;
                }
                default: {
                    f = LaurentWindow{static_cast<std::int64_t>(rng.below(6)), {rng.positive_rational(6, 4)},
                                      true, std::nullopt};
                    kind = "monomial";
                    break;
                }
            }
        }
        res.description = kind + ", M=" + std::to_string(M);
        det["series"] = window_to_json(f);
        det["M"] = M;

        // Degenerate: nothing but a monomial left after clearing powers.
        std::size_t nonzero = 0;
        for (const auto& c : f.coeffs)
            if (!c.is_zero()) ++nonzero;
        if (nonzero <= 1) {
            res.skipped = true;
            res.pass = true;
            det["diagnostic"] = "monomial instance: no roots after clearing the z power";
            res.details = std::move(det);
            return res;
        }

        // Premise: all pairwise split matrices nonnegative on the window,
        // with a nonzero order-2 minor somewhere.
        const std::int64_t w = cfg.window;
        const int order = cfg.cap_order;
        const std::int64_t shift_max = (w + 1) / 2;
        const std::int64_t split_lo = 1 - shift_max, split_hi = w - 1;
        const LaurentWindow padded = pad_window(f, std::min(f.lo, M * split_lo),
                                                std::max(f.hi(), M * split_hi + (M - 1)));
        const auto parts = split_m_way(padded, M);
        bool premise_nonneg = true;
        bool premise_nonzero2 = false;
        json pair_verdicts = json::array();
        for (std::int64_t m = 1; m < M && premise_nonneg; ++m) {
            for (std::int64_t n = 0; n < m && premise_nonneg; ++n) {
                const WindowMatrix hm = extract_window(
                    MatrixView::hurwitz_type(parts[static_cast<std::size_t>(m)],
                                             parts[static_cast<std::size_t>(n)]),
                    1, w, 1, w);
                const TnnVerdict v = check_tnn(hm, order);
                json pv;
                pv["pair"] = {m, n};
                pv["verdict"] = tnn_verdict_to_json(v);
                premise_nonneg = premise_nonneg && v.nonnegative();
                if (v.nonnegative() && !premise_nonzero2)
                    premise_nonzero2 = has_nonzero_minor_of_order(hm, 2).has_value();
                pair_verdicts.push_back(std::move(pv));
            }
        }
        det["premise_pairs"] = std::move(pair_verdicts);
        const bool premise = premise_nonneg && premise_nonzero2;
        det["premise"] = premise;

        if (!premise) {
            det["recorded"] = "premise fails on the window; conclusion not asserted";
            res.pass = true;
            res.details = std::move(det);
            return res;
        }
        const SectorReport sr = sector_check(f, M, cfg.tol < 1e-10 ? cfg.tol : 1e-10);
        det["sector"] = sector_report_to_json(sr);
        res.pass = sr.pass;
        res.details = std::move(det);
        return res;
    };

    parallel_for(cfg.count, threads,
                 [&](int i) { rep.instances[static_cast<std::size_t>(i)] = eval_one(i); });

    rep.aggregate_pass = true;
    for (const auto& r : rep.instances) rep.aggregate_pass = rep.aggregate_pass && r.pass;
    return rep;
}

}  // namespace ghurwitz
