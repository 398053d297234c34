#ifndef GHURWITZ_HARNESS_HPP
#define GHURWITZ_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ghurwitz/json_io.hpp"

namespace ghurwitz {

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    int count = 50;
    std::uint64_t seed = 1;
    int degree_max = 8;
    int max_order = 4;
    std::int64_t window = 8;       // square window size for the main check
    std::int64_t cap_window = 16;  // cap for the negative-witness search
    int cap_order = 3;
    std::vector<Rational> grid = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    std::string mode = "exact";
    double tol = 1e-9;
    int samples = 1000;
    std::int64_t M = 3;
};

json run_config_to_json(const RunConfig& cfg);

struct InstanceResult {
    int index = 0;
    std::string description;
    bool pass = false;
    bool inconclusive = false;
    bool skipped = false;
    json details;
};

struct HarnessReport {
    std::string theorem;
    RunConfig config;
    std::vector<InstanceResult> instances;
    bool aggregate_pass = false;
    int inconclusive_count = 0;

    json to_json() const;
};

/// Interlacing equivalence: `count` interlacing instances are checked on
/// all three faces (structural chain, H-window nonnegativity, masked
/// Toeplitz grid, residues, half-plane sampling) and `count` mutated
/// non-interlacing instances must produce a negative-minor witness within
/// the capped window (inconclusive otherwise). Instance 0 of each half is
/// a fixed named instance; a rank-one degenerate pair rides along at the
/// end and only its degeneracy flag is asserted.
HarnessReport equivalence_suite(const RunConfig& cfg, int threads);

/// Quasi-stability: `count` instances (half quasi-stable products, half
/// their fully reflected mutants) must agree between the exact
/// Routh-style decision and the H-window verdict, and the half-plane
/// modulus/mapping samplers must pass exactly on the stable half.
HarnessReport quasi_stability_suite(const RunConfig& cfg, int threads);

/// Generalized split: instances whose pairwise split matrices pass the
/// window premise (nonnegative with a nonzero order-2 minor somewhere)
/// must have no roots inside the open sector |arg z| < pi/M; premise
/// failures are recorded, degenerate monomials skipped.
HarnessReport sector_suite(const RunConfig& cfg, int threads);

int thread_count_from_env();

}  // namespace ghurwitz

#endif
