// The profile norms: the flat anisotropic norm B, the angular-weighted norm X,
// and their combination D over the scaling tower.
//
//   ||f||_B = sup_{k, p<=0} 2^(4k+) 2^(-k-/2) 2^(-p/2) ||P_{k,p} f||_2
//   ||f||_X = sup_{l+p>=0} 2^(4k+) 2^((1+beta) l) 2^((1/2+beta) p) ||P_{k,p} R_l^p f||_2
//   ||f||_D = sup_{0<=n<=2} ( ||S^n f||_B + ||S^n f||_X )
//
// Floor buckets carry the weight of their boundary index.  The angular factor
// of X is evaluated on the polar resampling of the spectral representation.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratwave/angular.hpp"
#include "stratwave/dyadic.hpp"
#include "stratwave/grid.hpp"

namespace stratwave {

struct NormConfig {
    double beta = 1e-2;
    double beta_prime = 5e-3;
    double kappa = 0.0;  // 0 selects the midpoint of (0, (beta - beta')/(1 + beta))
    int n0 = 8;          // Sobolev exponent used by solver monitors
    int s_tower_depth = 4;

    double kappa_eff() const {
        return kappa > 0.0 ? kappa : 0.5 * (beta - beta_prime) / (1.0 + beta);
    }
};

struct ShellEntry {
    int k = 0, p = 0;
    std::optional<int> q, l;
    double weight = 0.0, l2 = 0.0, weighted = 0.0;
};

double b_norm(const Field& profile_spec, const NormConfig& cfg,
              std::vector<ShellEntry>* table = nullptr);
double x_norm(const Field& profile_spec, const NormConfig& cfg,
              std::vector<ShellEntry>* table = nullptr);
double d_norm(const Field& profile_spec, const NormConfig& cfg);

// apply the scaling field S to a profile given spectrally; the returned field
// is spectral again
Field scaling_vf_spectral(const Field& profile_spec, bool* boundary_warning = nullptr);

void write_shell_table(const std::string& path, const std::vector<ShellEntry>& entries);

// pointwise Fourier control: per radial shell k, compare
//   sup_p || (P_{k,p} f)^hat ||_inf     (continuum normalization)
// against
//   2^(-4k+) 2^(-k) ( ||P_k f||_B + ||S P_k f||_B + ||P_k f||_X + ||S P_k f||_X )
struct FourierSupEntry {
    int k;
    double lhs, rhs, ratio;
};
std::vector<FourierSupEntry> fourier_sup_check(const Field& profile_spec, const NormConfig& cfg);

// stationary-phase decay: sup-norm of P_k exp(i t Lambda) f over a time list
struct DecayPoint {
    double t;
    double linf;
};
std::vector<DecayPoint> decay_experiment(const Field& profile_spec, int k,
                                         const std::vector<double>& times);
// least-squares slope of log linf against log t
double fit_log_slope(const std::vector<DecayPoint>& pts);

// angular splitting of one evolved shell: the cutoff l0 is the largest integer
// with 2^l0 <= t 2^p (t 2^(2p))^(-kappa); piece I keeps angular modes below
// the cutoff, piece II the rest.  The split residual is measured in the polar
// representation, where the two pieces sum to the resampled shell exactly.
struct DecaySplit {
    double t;
    int l0;
    double split_residual;  // || (I + II) - shell ||_2 relative, polar side
    double piece2_l2;
    double piece2_bound;    // 2^(-4k+) 2^(-(1+beta)(l0+1)) 2^(-p/2) 2^(-beta p) ||f||_X
};
DecaySplit decay_decomposition(const Field& profile_spec, int k, int p, double t,
                               const NormConfig& cfg);

}  // namespace stratwave
