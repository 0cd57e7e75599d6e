#pragma once

#include <complex>
#include <optional>

#include "qquad/field.hpp"

namespace qquad {

/// Parameters of the quadratic-form character sum
///   sum_{w in F_{q^2}} chi(A w^{q+1} + B w^2 + C w),   B != 0.
struct CharSumParams {
  Fq2Elem A, B, C;
};

enum class CharSumBranch { NoTheta, PlusQG, MinusQG, EtaD };

const char* charsum_branch_name(CharSumBranch b);

/// Tagged closed-form value. When a branch other than NoTheta is reported,
/// theta satisfies Tr(A) theta^q + 2B theta + C = 0 and |value| is q^{3/2}
/// (PlusQG/MinusQG) or q (EtaD).
struct CharSumValue {
  CharSumBranch branch = CharSumBranch::NoTheta;
  std::optional<Fq2Elem> theta;
  int eta_d = 0;  // eta(D) for the EtaD branch, else 0
  std::complex<double> value;
};

/// Canonical additive character of F_q: psi(u) = exp(2*pi*i*T(u)/p) with T
/// the absolute trace to F_p. Requires in_subfield(u).
std::complex<double> psi(const FieldCtx& F, const Fq2Elem& u);

/// Canonical additive character of F_{q^2}: chi = psi o Tr.
std::complex<double> chi(const FieldCtx& F, const Fq2Elem& x);

/// Quadratic Gauss sum G = sum_{u in F_q^*} eta(u) psi(u), cached per
/// context (write-once). Odd q only; G^2 = eta(-1) q.
std::complex<double> gauss_sum(const FieldCtx& F);

/// Solves Tr(A) theta^q + 2B theta + C = 0. With D = Tr(A)^2 - 4N(B) != 0
/// this is the closed form (-Tr(A) C^q + 2 B^q C) / D; with D = 0 the
/// F_p-linear system is solved directly and the result may be absent.
/// Odd q only.
std::optional<Fq2Elem> solve_theta(const FieldCtx& F, const CharSumParams& P);

/// Closed-form evaluation of the character sum (odd q, B != 0).
CharSumValue charsum_closed(const FieldCtx& F, const CharSumParams& P);

/// Direct summation oracle; works for even q too.
std::complex<double> charsum_bruteforce(const FieldCtx& F, const CharSumParams& P);

}  // namespace qquad
