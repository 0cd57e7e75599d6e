#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qquad/zerocount.hpp"

namespace qquad {

/// Point of F_{q^2} together with the point at infinity.
struct ProjectivePoint {
  bool is_infinity = false;
  Fq2Elem value;

  static ProjectivePoint infinity() { return {true, {}}; }
  static ProjectivePoint finite(const Fq2Elem& x) { return {false, x}; }
  bool operator==(const ProjectivePoint&) const = default;
};

/// numerator / (x^q + x + d) with d outside F_q, so the denominator has no
/// zero in F_{q^2}. The numerator must have one of e, alpha, beta nonzero.
struct RationalFnSpec {
  QQuadPoly numerator;
  Fq2Elem d;
};

/// Validates the RationalFnSpec invariants (DInSubfield, DegenerateNumerator).
RationalFnSpec make_rational_fn(const FieldCtx& F, const QQuadPoly& numerator,
                                const Fq2Elem& d);

/// Total evaluation on F_{q^2} plus infinity; infinity maps to infinity.
ProjectivePoint eval_rational(const FieldCtx& F, const RationalFnSpec& f,
                              const ProjectivePoint& x);

/// Image-set permutation test over F_{q^2} (the primary oracle).
bool is_permutation_bruteforce(const FieldCtx& F, const RationalFnSpec& f);

/// Equivalent criterion: numerator + t*(x^q+x+d) has exactly one zero for
/// every t. Quartic in q; used as a cross-check.
bool is_permutation_tcriterion(const FieldCtx& F, const RationalFnSpec& f);

using Witnesses = std::vector<std::pair<std::string, std::string>>;

struct ConditionReport {
  bool holds = false;
  Witnesses witnesses;
};

// Theorem-condition predicates. The *_holds forms are the allocation-free
// versions used by exhaustive sweeps; the report forms add named witnesses.

/// Odd q, numerator x^{q+1}+x^2+ax^q+bx+c: permutation iff
/// gamma in {0, -eps^2}, delta = 0 and eps != 0, with gamma = a^2-ab+c,
/// delta = a-b+d, eps = a^q-a-b^q+b.
ConditionReport thm_odd_kind1(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                              const Fq2Elem& c, const Fq2Elem& d);
bool thm_odd_kind1_holds(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                         const Fq2Elem& c, const Fq2Elem& d);

/// Even q, same numerator: a^2+ab+c in {0, Tr(a+b)^2} and a+b+d = 0 is
/// sufficient for a permutation (no converse claimed).
ConditionReport thm_even_kind1(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                               const Fq2Elem& c, const Fq2Elem& d);
bool thm_even_kind1_holds(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                          const Fq2Elem& c, const Fq2Elem& d);

/// Odd q, numerator x^{q+1}+beta x^2+ax^q+bx+c with N(beta)=1, beta != 1:
/// never a permutation. holds is always false; the report carries the
/// parameters for the harness.
ConditionReport prop_normone_kind1(const FieldCtx& F, const Fq2Elem& beta,
                                   const Fq2Elem& a, const Fq2Elem& b,
                                   const Fq2Elem& c, const Fq2Elem& d);

/// Numerator -beta^q x^{2q}+beta x^2+ax^q+bx+c: permutation iff q = 3,
/// a^q+b outside F_q, beta^2 = (b^2-a^2-beta c)^2 = 1 and beta(a-b)-d = 0.
ConditionReport prop_kind2(const FieldCtx& F, const Fq2Elem& beta, const Fq2Elem& a,
                           const Fq2Elem& b, const Fq2Elem& c, const Fq2Elem& d);
bool prop_kind2_holds(const FieldCtx& F, const Fq2Elem& beta, const Fq2Elem& a,
                      const Fq2Elem& b, const Fq2Elem& c, const Fq2Elem& d);

/// Reduction of x^{q+1}+alpha x^{2q}+beta x^2+ax^q+bx+c over x^q+x+d with
/// alpha+beta = 1, N(alpha) != N(beta) to the monic kind-1 shape. The
/// original is a permutation iff the reduced spec is: pre-compose with the
/// bijection T(x) = t_c1 x^q + t_c0 x, post-compose with y -> lambda*y.
struct ReductionResult {
  RationalFnSpec reduced;
  Fq2Elem lambda;  // common value of the two coefficient expressions
  Fq2Elem t_c1, t_c0;
};

ReductionResult reduce_general_numerator(const FieldCtx& F, const Fq2Elem& alpha,
                                         const Fq2Elem& beta, const Fq2Elem& a,
                                         const Fq2Elem& b, const Fq2Elem& c,
                                         const Fq2Elem& d);

enum class PermFamily { OddKind1, EvenKind1, Kind2 };

struct PermTuple {
  Fq2Elem beta;  // 1 for the kind-1 families
  Fq2Elem a, b, c, d;
};

/// All parameter tuples whose family condition holds, sorted by the
/// canonical index order (beta, a, b, c, d).
std::vector<PermTuple> enumerate_permutations(const FieldCtx& F, PermFamily family);

/// The rational function a family tuple describes.
RationalFnSpec spec_for_family(const FieldCtx& F, PermFamily family, const PermTuple& t);

}  // namespace qquad
