#include "qquad/permtest.hpp"

#include <algorithm>

#include "qquad/parse.hpp"

namespace qquad {

RationalFnSpec make_rational_fn(const FieldCtx& F, const QQuadPoly& numerator,
                                const Fq2Elem& d) {
  if (F.in_subfield(d))
    throw Error(ErrorCode::DInSubfield, "denominator shift d must lie outside F_q");
  if (numerator.e == 0 && numerator.alpha.is_zero() && numerator.beta.is_zero())
    throw Error(ErrorCode::DegenerateNumerator,
                "numerator must have degree above q (one of e, alpha, beta nonzero)");
  return {numerator, d};
}

ProjectivePoint eval_rational(const FieldCtx& F, const RationalFnSpec& f,
                              const ProjectivePoint& x) {
  if (x.is_infinity) return ProjectivePoint::infinity();
  Fq2Elem num = eval_qquad(F, f.numerator, x.value);
  Fq2Elem den = F.add(F.add(F.frobenius_q(x.value), x.value), f.d);
  return ProjectivePoint::finite(F.mul(num, F.inv(den)));
}

bool is_permutation_bruteforce(const FieldCtx& F, const RationalFnSpec& f) {
  std::vector<char> seen(F.q2(), 0);
  for (uint64_t i = 0; i < F.q2(); ++i) {
    Fq2Elem x = F.element_of_index(i);
    Fq2Elem xq = F.frobenius_q(x);
    Fq2Elem num = F.mul(f.numerator.alpha, F.mul(xq, xq));
    num = F.add(num, F.mul(f.numerator.beta, F.mul(x, x)));
    num = F.add(num, F.mul(f.numerator.a, xq));
    num = F.add(num, F.mul(f.numerator.b, x));
    num = F.add(num, f.numerator.c);
    if (f.numerator.e) num = F.add(num, F.mul(xq, x));
    Fq2Elem den = F.add(F.add(xq, x), f.d);
    uint64_t j = F.index_of(F.mul(num, F.inv(den)));
    if (seen[j]) return false;
    seen[j] = 1;
  }
  return true;
}

bool is_permutation_tcriterion(const FieldCtx& F, const RationalFnSpec& f) {
  for (uint64_t ti = 0; ti < F.q2(); ++ti) {
    Fq2Elem t = F.element_of_index(ti);
    QQuadPoly g = f.numerator;  // numerator + t*(x^q + x + d)
    g.a = F.add(g.a, t);
    g.b = F.add(g.b, t);
    g.c = F.add(g.c, F.mul(t, f.d));
    if (count_zeros_bruteforce(F, g).count != 1) return false;
  }
  return true;
}

bool thm_odd_kind1_holds(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                         const Fq2Elem& c, const Fq2Elem& d) {
  Fq2Elem gamma = F.add(F.sub(F.mul(a, a), F.mul(a, b)), c);
  Fq2Elem delta = F.add(F.sub(a, b), d);
  Fq2Elem eps = F.add(F.sub(F.sub(F.frobenius_q(a), a), F.frobenius_q(b)), b);
  if (eps.is_zero() || !delta.is_zero()) return false;
  return gamma.is_zero() || gamma == F.neg(F.mul(eps, eps));
}

ConditionReport thm_odd_kind1(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                              const Fq2Elem& c, const Fq2Elem& d) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "theorem condition needs odd q");
  if (F.in_subfield(d)) throw Error(ErrorCode::DInSubfield, "d must lie outside F_q");
  Fq2Elem gamma = F.add(F.sub(F.mul(a, a), F.mul(a, b)), c);
  Fq2Elem delta = F.add(F.sub(a, b), d);
  Fq2Elem eps = F.add(F.sub(F.sub(F.frobenius_q(a), a), F.frobenius_q(b)), b);
  ConditionReport r;
  r.holds = thm_odd_kind1_holds(F, a, b, c, d);
  r.witnesses = {{"gamma", format_elem(F, gamma)},
                 {"delta", format_elem(F, delta)},
                 {"epsilon", format_elem(F, eps)},
                 {"neg_epsilon_sq", format_elem(F, F.neg(F.mul(eps, eps)))}};
  return r;
}

bool thm_even_kind1_holds(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                          const Fq2Elem& c, const Fq2Elem& d) {
  if (!F.add(F.add(a, b), d).is_zero()) return false;
  Fq2Elem lhs = F.add(F.add(F.mul(a, a), F.mul(a, b)), c);
  Fq2Elem tr = F.trace(F.add(a, b));
  return lhs.is_zero() || lhs == F.mul(tr, tr);
}

ConditionReport thm_even_kind1(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                               const Fq2Elem& c, const Fq2Elem& d) {
  if (F.odd_q())
    throw Error(ErrorCode::OddCharacteristic, "theorem condition needs even q");
  if (F.in_subfield(d)) throw Error(ErrorCode::DInSubfield, "d must lie outside F_q");
  Fq2Elem lhs = F.add(F.add(F.mul(a, a), F.mul(a, b)), c);
  Fq2Elem tr = F.trace(F.add(a, b));
  ConditionReport r;
  r.holds = thm_even_kind1_holds(F, a, b, c, d);
  r.witnesses = {{"a2_ab_c", format_elem(F, lhs)},
                 {"tr_ab_sq", format_elem(F, F.mul(tr, tr))},
                 {"a_b_d", format_elem(F, F.add(F.add(a, b), d))}};
  return r;
}

ConditionReport prop_normone_kind1(const FieldCtx& F, const Fq2Elem& beta,
                                   const Fq2Elem& a, const Fq2Elem& b,
                                   const Fq2Elem& c, const Fq2Elem& d) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "proposition needs odd q");
  if (!(F.norm(beta) == F.one()))
    throw Error(ErrorCode::NormNotOne, "beta must have norm 1");
  if (beta == F.one()) throw Error(ErrorCode::BetaIsOne, "beta must differ from 1");
  if (F.in_subfield(d)) throw Error(ErrorCode::DInSubfield, "d must lie outside F_q");
  ConditionReport r;
  r.holds = false;  // the family contains no permutation
  r.witnesses = {{"beta", format_elem(F, beta)},
                 {"a", format_elem(F, a)},
                 {"b", format_elem(F, b)},
                 {"c", format_elem(F, c)},
                 {"d", format_elem(F, d)}};
  return r;
}

bool prop_kind2_holds(const FieldCtx& F, const Fq2Elem& beta, const Fq2Elem& a,
                      const Fq2Elem& b, const Fq2Elem& c, const Fq2Elem& d) {
  if (F.q() != 3) return false;
  if (F.in_subfield(F.add(F.frobenius_q(a), b))) return false;
  if (!(F.mul(beta, beta) == F.one())) return false;
  Fq2Elem t = F.sub(F.sub(F.mul(b, b), F.mul(a, a)), F.mul(beta, c));
  if (!(F.mul(t, t) == F.one())) return false;
  return F.sub(F.mul(beta, F.sub(a, b)), d).is_zero();
}

ConditionReport prop_kind2(const FieldCtx& F, const Fq2Elem& beta, const Fq2Elem& a,
                           const Fq2Elem& b, const Fq2Elem& c, const Fq2Elem& d) {
  if (beta.is_zero()) throw Error(ErrorCode::ZeroBeta, "beta must be nonzero");
  if (F.in_subfield(d)) throw Error(ErrorCode::DInSubfield, "d must lie outside F_q");
  Fq2Elem t = F.sub(F.sub(F.mul(b, b), F.mul(a, a)), F.mul(beta, c));
  ConditionReport r;
  r.holds = prop_kind2_holds(F, beta, a, b, c, d);
  r.witnesses = {{"q", std::to_string(F.q())},
                 {"beta_sq", format_elem(F, F.mul(beta, beta))},
                 {"b2_a2_bc_sq", format_elem(F, F.mul(t, t))},
                 {"beta_ab_minus_d", format_elem(F, F.sub(F.mul(beta, F.sub(a, b)), d))},
                 {"aq_b", format_elem(F, F.add(F.frobenius_q(a), b))}};
  return r;
}

ReductionResult reduce_general_numerator(const FieldCtx& F, const Fq2Elem& alpha,
                                         const Fq2Elem& beta, const Fq2Elem& a,
                                         const Fq2Elem& b, const Fq2Elem& c,
                                         const Fq2Elem& d) {
  if (!(F.add(alpha, beta) == F.one()))
    throw Error(ErrorCode::AlphaBetaSumNotOne, "requires alpha + beta = 1");
  if (F.norm(alpha) == F.norm(beta))
    throw Error(ErrorCode::NormsEqual, "requires N(alpha) != N(beta)");
  if (F.in_subfield(d)) throw Error(ErrorCode::DInSubfield, "d must lie outside F_q");

  const Fq2Elem aq = F.frobenius_q(alpha);
  const Fq2Elem bq = F.frobenius_q(beta);
  const Fq2Elem s = F.sub(aq, bq);  // nonzero since alpha != beta

  // lambda = (N(a)-2ab+N(b)) / s^{q+1} = (a^{2q+1}+b^{2q+1}-a^q b^q) / s^2
  const Fq2Elem lam =
      F.mul(F.sub(F.add(F.norm(alpha), F.norm(beta)), F.mul_int(F.mul(alpha, beta), 2)),
            F.inv(F.norm(s)));

  // After composing with L(x) = alpha x^q - beta^q x and substituting x/s,
  // the inner bijection is T(x) = u x^q + v x:
  const Fq2Elem u = F.mul(alpha, F.inv(F.frobenius_q(s)));
  const Fq2Elem v = F.neg(F.mul(bq, F.inv(s)));
  // a T(x)^q + b T(x) = (a v^q + b u) x^q + (a u^q + b v) x
  const Fq2Elem app = F.add(F.mul(a, F.frobenius_q(v)), F.mul(b, u));
  const Fq2Elem bpp = F.add(F.mul(a, F.frobenius_q(u)), F.mul(b, v));

  const Fq2Elem linv = F.inv(lam);
  QQuadPoly num{1, F.zero(), F.one(), F.mul(app, linv), F.mul(bpp, linv),
                F.mul(c, linv)};
  return {make_rational_fn(F, num, d), lam, u, v};
}

RationalFnSpec spec_for_family(const FieldCtx& F, PermFamily family,
                               const PermTuple& t) {
  switch (family) {
    case PermFamily::OddKind1:
    case PermFamily::EvenKind1:
      return make_rational_fn(F, QQuadPoly{1, F.zero(), F.one(), t.a, t.b, t.c}, t.d);
    case PermFamily::Kind2:
      return make_rational_fn(
          F, QQuadPoly{0, F.neg(F.frobenius_q(t.beta)), t.beta, t.a, t.b, t.c}, t.d);
  }
  throw Error(ErrorCode::ParseError, "unknown family");
}

std::vector<PermTuple> enumerate_permutations(const FieldCtx& F, PermFamily family) {
  std::vector<PermTuple> out;
  switch (family) {
    case PermFamily::OddKind1: {
      if (!F.odd_q())
        throw Error(ErrorCode::EvenCharacteristic, "odd-q family needs odd q");
      // Condition solved for (c, d): eps != 0, d = b - a (delta = 0) and
      // c in {ab - a^2, ab - a^2 - eps^2} (gamma in {0, -eps^2}). eps != 0
      // already forces b - a (and a^q + b) outside F_q.
      for (uint64_t ai = 0; ai < F.q2(); ++ai) {
        Fq2Elem a = F.element_of_index(ai);
        for (uint64_t bi = 0; bi < F.q2(); ++bi) {
          Fq2Elem b = F.element_of_index(bi);
          Fq2Elem eps = F.add(F.sub(F.sub(F.frobenius_q(a), a), F.frobenius_q(b)), b);
          if (eps.is_zero()) continue;
          Fq2Elem d = F.sub(b, a);
          Fq2Elem c0 = F.sub(F.mul(a, b), F.mul(a, a));
          out.push_back({F.one(), a, b, c0, d});
          out.push_back({F.one(), a, b, F.sub(c0, F.mul(eps, eps)), d});
        }
      }
      break;
    }
    case PermFamily::EvenKind1: {
      if (F.odd_q())
        throw Error(ErrorCode::OddCharacteristic, "even-q family needs even q");
      // d = a + b (outside F_q) and c in {a^2+ab, a^2+ab+Tr(a+b)^2}.
      for (uint64_t ai = 0; ai < F.q2(); ++ai) {
        Fq2Elem a = F.element_of_index(ai);
        for (uint64_t bi = 0; bi < F.q2(); ++bi) {
          Fq2Elem b = F.element_of_index(bi);
          Fq2Elem d = F.add(a, b);
          if (F.in_subfield(d)) continue;
          Fq2Elem c0 = F.add(F.mul(a, a), F.mul(a, b));
          Fq2Elem tr = F.trace(d);
          out.push_back({F.one(), a, b, c0, d});
          out.push_back({F.one(), a, b, F.add(c0, F.mul(tr, tr)), d});
        }
      }
      break;
    }
    case PermFamily::Kind2: {
      if (F.q() != 3) break;  // prop_kind2_holds is false for every q != 3
      for (const Fq2Elem& beta : {F.one(), F.neg(F.one())}) {
        for (uint64_t ai = 0; ai < F.q2(); ++ai) {
          Fq2Elem a = F.element_of_index(ai);
          for (uint64_t bi = 0; bi < F.q2(); ++bi) {
            Fq2Elem b = F.element_of_index(bi);
            if (F.in_subfield(F.add(F.frobenius_q(a), b))) continue;
            Fq2Elem d = F.mul(beta, F.sub(a, b));
            Fq2Elem base = F.sub(F.mul(b, b), F.mul(a, a));
            // (b^2 - a^2 - beta c)^2 = 1  <=>  c = beta (b^2-a^2 -+ 1)
            out.push_back({beta, a, b, F.mul(beta, F.sub(base, F.one())), d});
            out.push_back({beta, a, b, F.mul(beta, F.add(base, F.one())), d});
          }
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [&](const PermTuple& x, const PermTuple& y) {
    auto key = [&](const PermTuple& t) {
      return std::array<uint64_t, 5>{F.index_of(t.beta), F.index_of(t.a),
                                     F.index_of(t.b), F.index_of(t.c),
                                     F.index_of(t.d)};
    };
    return key(x) < key(y);
  });
  return out;
}

}  // namespace qquad
