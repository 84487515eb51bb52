// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SQKD_ATTACK_MODEL_HPP
#define SQKD_ATTACK_MODEL_HPP

#include <array>
#include <cstdint>

#include "sqkd/quantum_math.hpp"

namespace sqkd {

/// A collective attack: one unitary applied on the forward pass (A -> B) and
/// one on the reverse pass (B -> A), both acting on qubit (x) ancilla with the
/// transit qubit as the first tensor factor. The ancilla starts in |0>.
struct CollectiveAttack {
  int ancilla_dim = 1;       // d_E
  ComplexMatrix u_forward;   // 2*d_E x 2*d_E
  ComplexMatrix u_reverse;   // 2*d_E x 2*d_E

  int total_dim() const { return 2 * ancilla_dim; }

  // Validates d_E >= 1, square matrices of dimension 2*d_E, unitarity
  // within kStructuralTol. Throws std::invalid_argument.
  static CollectiveAttack create(int ancilla_dim, ComplexMatrix u_forward,
                                 ComplexMatrix u_reverse);
};

/// The attack written out in unnormalized ancilla vectors:
///
///   U_F |0,0> = |0, f_0> + |1, f_1>      U_F |1,0> = |0, f_2> + |1, f_3>
///   U_R |i, f_j> = |0, r_{i,j,0}> + |1, r_{i,j,1}>
///   V |0,0> = |0, g_0> + |1, g_1>        V |1,0> = |0, g_2> + |1, g_3>
///
/// with V = U_R U_F (the round trip when B reflects). Norms are <v|v>.
/// lambda[i] are the real cross products entering the per-term eigenvalue
/// bound; the four companion cross products are the remaining terms of the
/// <g_0|g_3> and <g_1|g_2> expansions, whose row sums are eta1 and eta2.
struct AttackDecomposition {
  int ancilla_dim = 1;

  std::array<ComplexVector, 4> forward;                               // f_j
  std::array<std::array<std::array<ComplexVector, 2>, 4>, 2> reverse; // r_{i,j,k}
  std::array<ComplexVector, 4> roundtrip;                             // g_k

  std::array<double, 4> forward_norm{};
  std::array<std::array<std::array<double, 2>, 4>, 2> reverse_norm{};
  std::array<double, 4> roundtrip_norm{};

  // lambda[0] = Re<r_{0,0,0}|r_{1,3,1}>   lambda[1] = Re<r_{0,0,1}|r_{1,3,0}>
  // lambda[2] = Re<r_{1,1,1}|r_{0,2,0}>   lambda[3] = Re<r_{1,1,0}|r_{0,2,1}>
  std::array<double, 4> lambda{};

  // companion products: Re<r_{0,0,0}|r_{0,2,1}>, Re<r_{0,0,1}|r_{0,2,0}>,
  //                     Re<r_{1,1,0}|r_{1,3,1}>, Re<r_{1,1,1}|r_{1,3,0}>
  std::array<double, 4> companion{};

  double eta1() const { return companion[0] + companion[1]; }
  double eta2() const { return companion[2] + companion[3]; }
};

// Applies U_F, U_R and V to the basis inputs above and splits the results by
// the transit-qubit component.
AttackDecomposition decompose_attack(const CollectiveAttack& attack);

// Joint state of (A's key bit, B's key bit, Eve's memory) conditioned on a
// key iteration: A sends Z uniformly, Eve attacks, B measures and resends,
// Eve attacks again, A's X measurement is traced out. Dimension 2*2*d_E.
DensityOperator build_rho_abe(const CollectiveAttack& attack);

// Exact S(A|E) = S(AE) - S(E) of build_rho_abe. This is the oracle any
// statistics-only lower bound must stay below.
double true_s_ae(const CollectiveAttack& attack);

// The built-in reverse-channel attack that leaves every error event silent
// (no Z or X basis noise on the observable inputs) while Eve's ancilla ends
// orthogonal for B's two key bits: U_F = I and
//   U_R |+,0> = |+,0>,  U_R |-,0> = |+,1>.
// The two columns the definition leaves free (ancilla |1> inputs, which the
// protocol never reaches) are completed by Gram-Schmidt over the canonical
// basis; this puts U_R|0,1> = |-,0> and U_R|1,1> = |-,1>. d_E = 2.
CollectiveAttack paper_attack();

// Independent depolarizing channels with Z-error probability Q on each pass,
// realized as a unitary attack: d_E = 16 split into two 4-dimensional
// environment factors; U_F is the 4-Kraus dilation of the channel writing to
// the first factor, U_R the same dilation writing to the second.
// Requires 0 <= Q <= 1/2.
CollectiveAttack depolarizing_attack(double q_error);

// U_F, U_R drawn independently via random_unitary (substreams 0 and 1 of
// `seed`). Requires 1 <= ancilla_dim <= 16.
CollectiveAttack random_attack(int ancilla_dim, std::uint64_t seed);

}  // namespace sqkd

#endif
