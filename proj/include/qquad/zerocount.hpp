#pragma once

#include "qquad/field.hpp"

namespace qquad {

/// e*x^{q+1} + alpha*x^{2q} + beta*x^2 + a*x^q + b*x + c over F_{q^2},
/// with e restricted to {0,1}.
struct QQuadPoly {
  int e = 0;
  Fq2Elem alpha, beta, a, b, c;
};

Fq2Elem eval_qquad(const FieldCtx& F, const QQuadPoly& g, const Fq2Elem& x);

/// Monic cubic x^3 + A x^2 + B x + C with coefficients in F_q.
struct CubicOverFq {
  Fq2Elem A, B, C;
};

enum class CountMethod {
  BruteForce,
  PropN1Cubic,
  PropN1Eta,
  PropN2,
  AnyCharCubic,
  AnyCharQuadratic,
  AnyCharDirect,
};

const char* count_method_name(CountMethod m);

/// Zero count plus the intermediates behind it. Which diagnostic fields are
/// meaningful depends on method; count is signed so that a misbehaving
/// closed form surfaces as a mismatch instead of wrapping.
struct ZeroCountResult {
  int64_t count = 0;
  CountMethod method = CountMethod::BruteForce;
  CubicOverFq cubic{};        // PropN1Cubic, AnyCharCubic
  Fq2Elem quad_b, quad_c;     // AnyCharQuadratic: x^2 + quad_b x + quad_c
  Fq2Elem eta_arg;            // PropN1Eta
  int eta_val = 0;            // PropN1Eta
  int64_t m0 = -1;            // PropN1Eta
  Fq2Elem A0, A1, A2;         // PropN2
  Fq2Elem omega;              // kind-2 general reduction multiplier
};

/// Oracle: evaluates the polynomial map at all q^2 points.
ZeroCountResult count_zeros_bruteforce(const FieldCtx& F, const QQuadPoly& g);

/// A^2B^2 - 4B^3 - 4A^3C - 27C^2 + 18ABC, evaluated in F_q.
Fq2Elem cubic_discriminant(const FieldCtx& F, const CubicOverFq& g);

/// Number of distinct roots in F_q, by iteration.
int cubic_root_count(const FieldCtx& F, const CubicOverFq& g);

/// Exactly-one-root test: for odd q with nonzero discriminant this is the
/// character criterion eta(D) = -1; for even q the trace criterion on
/// x^2 + x + (A^2+B)^3/(AB+C)^2 + 1; otherwise falls back to counting.
bool cubic_has_unique_root(const FieldCtx& F, const CubicOverFq& g);

/// True iff x^2 + x + cbar has no root in F_q (absolute trace of cbar is 1).
/// Even q only; cbar in F_q.
bool quad_irreducible_artin_schreier(const FieldCtx& F, const Fq2Elem& cbar);

/// Zeros of x^{q+1} + x^2 + a x^q + b x + c in F_{q^2}; odd q closed form.
ZeroCountResult count_zeros_kind1_oddq(const FieldCtx& F, const Fq2Elem& a,
                                       const Fq2Elem& b, const Fq2Elem& c);

/// Same polynomial, any characteristic, via the factorisation
/// (x+a)(x^q+x-a+b) + a^2-ab+c.
ZeroCountResult count_zeros_kind1_anychar(const FieldCtx& F, const Fq2Elem& a,
                                          const Fq2Elem& b, const Fq2Elem& c);

/// Zeros of -beta^q x^{2q} + beta x^2 + a x^q + b x + c; odd q, beta != 0.
ZeroCountResult count_zeros_kind2(const FieldCtx& F, const Fq2Elem& beta,
                                  const Fq2Elem& a, const Fq2Elem& b,
                                  const Fq2Elem& c);

/// Zeros of alpha x^{2q} + beta x^2 + a x^q + b x + c with
/// N(alpha) = N(beta) != 0: normalises alpha to -beta'^q by a Hilbert-90
/// multiplier and delegates to count_zeros_kind2.
ZeroCountResult count_zeros_kind2_general(const FieldCtx& F, const Fq2Elem& alpha,
                                          const Fq2Elem& beta, const Fq2Elem& a,
                                          const Fq2Elem& b, const Fq2Elem& c);

}  // namespace qquad
