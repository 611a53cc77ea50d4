// Time evolution for the two model flows:
//   SQG            d/dt theta + u . grad theta = R1 theta,
//                  u = grad_perp (-Delta)^(-1/2) theta
//   Boussinesq     d/dt omega + u . grad omega = -d1 rho
//                  d/dt rho   + u . grad rho   = d1 Delta^(-1) omega
//                  u = grad_perp Delta^(-1) omega
// and the dispersive unknowns Z_pm = |grad|^(-1) omega +- rho, which satisfy
//   (d/dt -+ R1) Z_pm = - |grad|^(-1) div(u omega) -+ u . grad rho
// with u = -(1/2) grad_perp |grad|^(-1) (Z_+ + Z_-).
//
// Fields are stored spectrally.  Advection products are pseudospectral with
// the 2/3-rule dealias.  The stepper is the classical integrating-factor RK4:
// SQG and the Z form absorb their linear flow exactly through exp(-+ i t
// Lambda); the (omega, rho) pair keeps its linear terms explicit inside the
// stage evaluations.

#pragma once

#include <string>
#include <vector>

#include "stratwave/grid.hpp"
#include "stratwave/norms.hpp"

namespace stratwave {

enum class Representation { SqgTheta, BoussinesqOmegaRho, BoussinesqZ };

struct FlowState {
    GridSpec grid;
    Representation rep = Representation::SqgTheta;
    double time = 0.0;
    std::vector<Field> comp;  // theta | omega, rho | Z+, Z-
};

FlowState omega_rho_to_z(const FlowState& s);
FlowState z_to_omega_rho(const FlowState& s);

// profile variables: exp(i t Lambda) theta, or exp(+- i t Lambda) Z_pm
std::vector<Field> to_profiles(const FlowState& s);

// one RK4 step of size dt
void step(FlowState& s, double dt);

// largest |u| on the grid times the largest resolved frequency
double cfl_speed(const FlowState& s);

// exact energy bookkeeping ||u||^2 + ||rho||^2 = (1/2)(||Z+||^2 + ||Z-||^2),
// as a relative residual; identically 0 for SQG states
double energy_identity_residual(const FlowState& s);

struct MonitorRow {
    double t = 0.0;
    double l2 = 0.0;
    double energy_residual = 0.0;
    double sobolev = 0.0;
    std::vector<double> s_tower;  // ||S^j profile||_2, j = 1..depth
    double b = 0.0, x = 0.0, d = 0.0;
};

struct SolverConfig {
    double dt = 2e-3;
    double t_final = 1.0;
    NormConfig norms;
    bool monitor_norms = false;  // B/X/D columns are expensive; 0 when off
    std::string trajectory_csv;  // empty disables the file
    std::string checkpoint_path; // written once at the end when set
};

struct RunResult {
    FlowState state;
    std::vector<MonitorRow> rows;
    bool aborted = false;       // a non-finite value appeared
    bool cfl_warning = false;   // dt * max|u| * max|xi| exceeded 0.5
};

RunResult run_simulation(FlowState init, const SolverConfig& cfg);

void write_trajectory_csv(const std::string& path, const std::vector<MonitorRow>& rows);

void write_checkpoint(const std::string& path, const FlowState& s);
FlowState read_checkpoint(const std::string& path);

}  // namespace stratwave
