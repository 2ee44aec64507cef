#pragma once

// Assemblages on the memory side: σ_{α|x} = Tr_A[(P_{x,α} ⊗ I) ρ]. Perfect
// coarse-grained steering of a setting means its members have pairwise
// orthogonal supports — the same condition the zero-uncertainty decision
// tests — and in that case the supports themselves form Bob's decoding
// measurement, padded with a discard outcome on the rest of supp ρ_B.

#include "zuslab/cp_maps.hpp"

namespace zuslab {

struct NotPerfect : Error {
  using Error::Error;
};

struct SteeringSetting {
  std::string label;                 // PVM name
  std::vector<std::string> outcomes;
  std::vector<Matrix> sigmas;        // σ_{α|x}, one per outcome
};

struct Assemblage {
  std::vector<SteeringSetting> settings;
  Matrix rho_b;
  Index d_b = 0;
};

Assemblage make_assemblage(const BipartiteState& state, const PvmFamily& family,
                           const ToleranceConfig& tol = {});

// No-signalling and positivity checks: each σ_{α|x} is PSD and each setting
// sums to ρ_B.
ValidationReport check_assemblage(const Assemblage& asm_, const ToleranceConfig& tol = {});

struct SettingVerdict {
  std::string setting;
  bool pass = false;
  double worst_overlap = 0.0;
  std::pair<std::string, std::string> worst_pair;
};

struct SteeringVerdict {
  bool pass = false;
  std::vector<SettingVerdict> settings;
};

SteeringVerdict perfect_steering_check(const Assemblage& asm_, const ToleranceConfig& tol = {});

// Bob's zero-error decoder for one setting: the support projections of its
// members plus a discard outcome, as a PVM on supp ρ_B (s × s coordinates).
struct BobDecoder {
  Pvm pvm;               // outcome labels plus trailing "discard"
  Matrix support_basis;  // d_b × s isometry fixing the coordinates
  double decoding_defect = 0.0;  // worst off-diagonal response Tr(Q_α σ_β)
};

BobDecoder bob_decoder(const Assemblage& asm_, const std::string& setting_label,
                       const ToleranceConfig& tol = {});

}  // namespace zuslab
