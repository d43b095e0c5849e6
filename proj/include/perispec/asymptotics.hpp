#ifndef PERISPEC_ASYMPTOTICS_HPP
#define PERISPEC_ASYMPTOTICS_HPP

#include <string_view>

#include "perispec/params.hpp"

namespace perispec {

/// Large-‖ν‖ approximations of the eigenvalues. For β ≠ n they are a constant
/// plus a power of z; for β = n (double pole) the power law turns into
/// log(z²). The neglected remainder is the oscillatory part of the pFq
/// expansion, of size z^{−(n+3)/2} (λ₂) and z^{−(n+1)/2} (λ₁,₁).
///
/// All functions require β < n + 2 and ‖ν‖ > 0 and throw DomainError otherwise.

enum class AsymptoticBranch { PowerLaw, Logarithmic };

/// |β − n| below this selects the logarithmic branch: the power-law form
/// subtracts two terms of size 1/|β − n| there.
inline constexpr double kBranchTolerance = 1e-9;

struct BranchInfo {
  AsymptoticBranch kind = AsymptoticBranch::PowerLaw;
  /// 0 < |β − n| < kBranchTolerance: snapped to the logarithmic branch.
  bool near_branch_point = false;
};

BranchInfo classify_branch(const MaterialParams& params);

double asym_lambda2(const MaterialParams& params, double nu_norm);
double asym_lambda11(const MaterialParams& params, double nu_norm);
/// −(λ*−μ) [Γ(b)Γ(a+1)/Γ(β/2)]² (4/δ²) z^{2(β−n−1)}; exactly 0 for β ∈ {0, −2, ...}.
double asym_lambda12(const MaterialParams& params, double nu_norm);
/// asym_lambda12 + asym_lambda11.
double asym_lambda1(const MaterialParams& params, double nu_norm);

enum class Eigenvalue { Lambda1, Lambda2 };

struct ErrorEnvelope {
  double decay_exponent = 0.0;
  std::string_view prefactor_note;
};

/// Exponent of z in the absolute error of the approximation: −(n+3)/2 for λ₂,
/// −(n+1)/2 for λ₁ (its λ₁,₁ part).
ErrorEnvelope envelope_shape(Eigenvalue which, int n);

/// Order-of-magnitude size of the neglected oscillatory terms at ‖ν‖, built
/// from the leading (c₀ = 1) coefficient only. For fits, not bounds.
double error_envelope(Eigenvalue which, const MaterialParams& params, double nu_norm);

struct Growth {
  enum class Kind { Bounded, LogDivergent, PowerDivergent };
  Kind kind = Kind::Bounded;
  /// Exponent of ‖ν‖ for PowerDivergent (β − n), 0 otherwise.
  double rate = 0.0;
};

Growth classify_growth(const MaterialParams& params);

}  // namespace perispec

#endif  // PERISPEC_ASYMPTOTICS_HPP
