// Monte Carlo and grid scanners for the multiplier estimates: null-structure
// size bounds, the sigma/phase lower-bound dichotomy, the dyadic case
// organisation, resonant set measures, and the L1-Fourier (W) norm of a
// localized symbol.
//
// All sampling is deterministic: points are drawn sequentially from one
// mt19937_64 stream seeded from the config, so results do not depend on the
// worker count.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stratwave/dyadic.hpp"
#include "stratwave/symbols.hpp"

namespace stratwave {

// localization of one frequency leg; pure dyadic bumps in |v|, the bucketized
// families (floor -40, top 0) in the two angular directions
struct LegIndex {
    int k = 0;
    int p = 0;
    std::optional<int> q;
};

// chi = product over the three legs xi, xi - eta, eta
struct ShellTriple {
    LegIndex out, left, right;  // xi, xi - eta, eta

    int p_max() const;
    int q_max() const;  // requires q on all legs
    int k_min() const;
    int k_max() const;
    std::string id() const;
};

double leg_weight(const LegIndex& leg, Vec2 v);
double chi_weight(const ShellTriple& sh, Vec2 xi, Vec2 eta);

struct ScanConfig {
    std::uint64_t seed = 20260826;
    std::size_t samples = 100000;
    std::size_t max_trials = 0;  // 0 means 2000 * samples
};

struct ScanRecord {
    std::string config_id;
    std::size_t samples = 0;  // accepted sample count
    std::string statistic;
    double value = 0.0;
    Vec2 argmax_xi, argmax_eta;
};

// thrown when rejection sampling cannot populate a shell configuration
struct EmptyRegionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sup over accepted samples of |m chi| / (2^k 2^(p_max [+ q_max])), where k is
// the output shell
ScanRecord scan_null_structure(const ShellTriple& sh, const MultId& id, const ScanConfig& cfg);

// same statistic for several multiplier kinds over one shared sampling pass;
// much cheaper than separate scans when rejection dominates
std::vector<ScanRecord> scan_null_structure_kinds(const ShellTriple& sh,
                                                  const std::vector<MultId>& ids,
                                                  const ScanConfig& cfg);

// over accepted samples with |Phi| chi < 2^(q_max - 10) for the given phase
// signs: min of |sigma| / (2^(k_min + k_max) 2^(p_max + q_max)); counts in
// `samples` are the near-resonant hits.  Requires q on all legs.
ScanRecord scan_sigma_lower_bound(const ShellTriple& sh, int outer, int mu, int nu,
                                  const ScanConfig& cfg);

// dense deterministic grid scan of the same ratio, used once to calibrate the
// shipped constant
double calibrate_sigma_constant(const ShellTriple& sh, int outer, int mu, int nu,
                                int grid_per_axis);

// calibrated lower bound for the near-resonant sigma ratio on the reference
// configuration out(k0,p-12,q0), legs (k0,p0,q-1), phase signs (+,+,+):
// Monte Carlo minima sit at 0.391-0.396 across seeds (1e5 accepted samples),
// dense grid scan gives 0.75; shipped with margin below both
inline constexpr double kSigmaLowerC0 = 0.35;

// dyadic interaction bookkeeping: for random (xi, eta) with p = p_min at most
// p_max - 10, the support constraints force one of three configurations
struct CaseOrgReport {
    std::size_t drawn = 0;
    std::size_t hypothesis_hits = 0;
    std::size_t case_counts[3] = {0, 0, 0};
    std::size_t violations = 0;
};
CaseOrgReport verify_case_organisation(const ScanConfig& cfg);

// Monte Carlo estimate of sup_xi int |chi psi(Phi/lambda)|^2 d eta, with a
// precondition scan that |d Phi / d eta1| stays above kappa_lower on the
// support
struct ResonantMeasure {
    double lambda;
    double measure;       // the sup_xi estimate
    double bound;         // 2^(k2 + p2) * lambda / kappa_lower
    double grad_min;      // min |dPhi/deta1| seen on the support
};
std::vector<ResonantMeasure> resonant_measure_check(const ShellTriple& sh, int outer, int mu,
                                                    int nu, const std::vector<double>& lambdas,
                                                    double kappa_lower, const ScanConfig& cfg);

// normal-form split of a symbol at threshold lambda
double resonant_part(const MultId& id, int outer, int mu, int nu, double lambda, Vec2 xi,
                     Vec2 eta);
double nonresonant_part(const MultId& id, int outer, int mu, int nu, double lambda, Vec2 xi,
                        Vec2 eta);

// l1 norm of the discrete 4-D Fourier transform of symbol * chi, sampled on
// grid_per_axis^4 points covering the support box; approximates
// ||F(m chi)||_{L1(R^2 x R^2)}
double w_norm_estimate(const ShellTriple& sh,
                       const std::function<double(Vec2, Vec2)>& symbol, int grid_per_axis);

void write_scan_csv(const std::string& path, const std::vector<ScanRecord>& records);

}  // namespace stratwave
