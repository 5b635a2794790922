#pragma once

#include "homlie/complex_kahler.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlie {

/// (V, A, rho) over the hom-Lie algebra base; rho[i] is the matrix of rho(e_i).
struct Representation {
  std::size_t carrier_dim = 0;
  RationalMatrix A;
  std::vector<RationalMatrix> rho;
  HomLieAlgebra base;

  /// rho(u) = sum u_i rho(e_i).
  RationalMatrix at(const RationalVector& u) const;
};

/// (V*, A^T, -rho^T) in the dual basis e^i(e_j) = delta_ij.
struct DualRepresentation {
  RationalMatrix A_star;
  std::vector<RationalMatrix> rho_tilde;
  HomLieAlgebra base;

  Representation representation() const;
};

/// rho(phi u) A = A rho(u) and rho([u,v]) A = rho(phi u) rho(v) - rho(phi v) rho(u).
Check check_representation(const Representation& rep);

/// A rho(phi u) = rho(u) A and A rho([u,v]) = rho(u) rho(phi v) - rho(v) rho(phi u).
Check check_admissible(const Representation& rep);

/// rho(e_i) = ad(e_i), A = phi.
Representation adjoint_rep(const HomLieAlgebra& g);

/// rho(e_i) = L_{e_i}, A = phi, over the commutator algebra. Throws NotLeftSymmetric.
Representation left_mult_rep(const RationalTensor& product, const TwistMap& phi);

/// Throws NotAdmissible unless check_admissible passes.
DualRepresentation dual_rep(const Representation& rep);

/// <L~_{phi e_i} a*, phi e_j> = -<e_i·e_j, phi*(a*)> with L~ = -L^T, for all i, j and dual basis a*.
Check check_twisted_dual_pairing(const RationalTensor& product, const TwistMap& phi);

/// V + V* with basis (e_1..e_n, e^1..e^n).
struct PhaseSpaceInstance {
  std::size_t base_dim = 0;
  RationalTensor product;  // (u,a*)·(v,b*) = (u·v, L~_{phi u} b*)
  TwistMap twist;          // phi + phi^T
  SymplecticForm omega;    // <b*,u> - <a*,v>, block [[0,Id],[-Id,0]]
  RationalMatrix J_cal;    // (u,a*) -> (-phi(sharp a*), phi^T(flat u))
  MetricForm metric;       // base metric used by the musical maps
};

/// Builds the phase-space data for any product. Throws NonInvolutiveTwist or DimensionMismatch.
PhaseSpaceInstance assemble_phase_space(const RationalTensor& product, const TwistMap& phi,
                                        const std::optional<MetricForm>& g = std::nullopt);

/// assemble_phase_space restricted to involutive hom-left-symmetric bases. Throws NotLeftSymmetric.
PhaseSpaceInstance build_phase_space(const RationalTensor& product, const TwistMap& phi,
                                     const std::optional<MetricForm>& g = std::nullopt);

using NamedChecks = std::vector<std::pair<std::string, Check>>;

/// left-symmetric, hom-jacobi, twist-involutive, symplectic, complex-square, complex-commutes.
NamedChecks verify_phase_space(const PhaseSpaceInstance& ps);

/// N_{Phi∘J} = 0 for the commutator bracket; the witness is the first pair i < j with N != 0.
/// Throws PreconditionFailed when J_cal is not almost complex for Phi.
Check check_phase_space_complex(const PhaseSpaceInstance& ps);

}  // namespace homlie
