#include "qquad/zerocount.hpp"

namespace qquad {

const char* count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::BruteForce: return "BruteForce";
    case CountMethod::PropN1Cubic: return "PropN1Cubic";
    case CountMethod::PropN1Eta: return "PropN1Eta";
    case CountMethod::PropN2: return "PropN2";
    case CountMethod::AnyCharCubic: return "AnyCharCubic";
    case CountMethod::AnyCharQuadratic: return "AnyCharQuadratic";
    case CountMethod::AnyCharDirect: return "AnyCharDirect";
  }
  return "Unknown";
}

Fq2Elem eval_qquad(const FieldCtx& F, const QQuadPoly& g, const Fq2Elem& x) {
  Fq2Elem xq = F.frobenius_q(x);
  Fq2Elem acc = F.mul(g.alpha, F.mul(xq, xq));
  acc = F.add(acc, F.mul(g.beta, F.mul(x, x)));
  acc = F.add(acc, F.mul(g.a, xq));
  acc = F.add(acc, F.mul(g.b, x));
  acc = F.add(acc, g.c);
  if (g.e) acc = F.add(acc, F.mul(xq, x));
  return acc;
}

ZeroCountResult count_zeros_bruteforce(const FieldCtx& F, const QQuadPoly& g) {
  int64_t count = 0;
  for (uint64_t i = 0; i < F.q2(); ++i)
    if (eval_qquad(F, g, F.element_of_index(i)).is_zero()) ++count;
  ZeroCountResult r;
  r.count = count;
  r.method = CountMethod::BruteForce;
  return r;
}

Fq2Elem cubic_discriminant(const FieldCtx& F, const CubicOverFq& g) {
  const Fq2Elem A2 = F.mul(g.A, g.A);
  const Fq2Elem B2 = F.mul(g.B, g.B);
  Fq2Elem d = F.mul(A2, B2);
  d = F.sub(d, F.mul_int(F.mul(B2, g.B), 4));
  d = F.sub(d, F.mul_int(F.mul(F.mul(A2, g.A), g.C), 4));
  d = F.sub(d, F.mul_int(F.mul(g.C, g.C), 27));
  d = F.add(d, F.mul_int(F.mul(F.mul(g.A, g.B), g.C), 18));
  return d;
}

int cubic_root_count(const FieldCtx& F, const CubicOverFq& g) {
  int count = 0;
  for (const Fq2Elem& u : F.subfield_elements()) {
    Fq2Elem v = F.add(F.mul(F.add(F.mul(F.add(u, g.A), u), g.B), u), g.C);
    if (v.is_zero()) ++count;
  }
  return count;
}

bool quad_irreducible_artin_schreier(const FieldCtx& F, const Fq2Elem& cbar) {
  if (F.odd_q())
    throw Error(ErrorCode::OddCharacteristic, "Artin-Schreier test requires even q");
  // x^2 + x + cbar has a root in F_q iff the absolute trace of cbar is 0.
  return F.abs_trace_fp(cbar) != 0;
}

bool cubic_has_unique_root(const FieldCtx& F, const CubicOverFq& g) {
  if (!F.odd_q()) {
    Fq2Elem t1 = F.add(F.mul(g.A, g.A), g.B);   // A^2 + B
    Fq2Elem t2 = F.add(F.mul(g.A, g.B), g.C);   // AB + C
    if (t1.is_zero() && t2.is_zero()) return true;
    if (t2.is_zero()) return false;
    Fq2Elem cbar = F.add(F.mul(F.mul(F.mul(t1, t1), t1), F.inv(F.mul(t2, t2))), F.one());
    return quad_irreducible_artin_schreier(F, cbar);
  }
  Fq2Elem D = cubic_discriminant(F, g);
  if (!D.is_zero()) return F.quadratic_character(D) == -1;
  return cubic_root_count(F, g) == 1;  // criterion needs D != 0
}

ZeroCountResult count_zeros_kind1_oddq(const FieldCtx& F, const Fq2Elem& a,
                                       const Fq2Elem& b, const Fq2Elem& c) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "kind-1 closed form requires odd q");
  ZeroCountResult r;
  const Fq2Elem aq = F.frobenius_q(a);
  const Fq2Elem s = F.add(aq, b);  // a^q + b
  const Fq2Elem gamma = F.add(F.sub(F.mul(a, a), F.mul(a, b)), c);
  if (!F.in_subfield(s)) {
    const Fq2Elem eps = F.add(F.sub(F.sub(aq, a), F.frobenius_q(b)), b);
    const Fq2Elem eps2 = F.mul(eps, eps);  // in F_q since eps^q = -eps
    const Fq2Elem tr3ab = F.trace(F.sub(F.mul_int(a, 3), b));
    r.cubic.A = F.neg(tr3ab);
    r.cubic.B = F.sub(F.mul_int(F.trace(gamma), 4), eps2);
    r.cubic.C = F.add(F.mul_int(F.trace(F.mul(gamma, eps)), 4), F.mul(tr3ab, eps2));
    r.count = cubic_root_count(F, r.cubic);
    r.method = CountMethod::PropN1Cubic;
    return r;
  }
  r.eta_arg = F.sub(F.mul(s, s), F.mul_int(F.trace(c), 4));
  r.eta_val = F.quadratic_character(r.eta_arg);
  if (!F.trace(gamma).is_zero()) r.m0 = 1;
  else if (gamma.is_zero()) r.m0 = int64_t(F.q());
  else r.m0 = 0;
  r.count = r.eta_val + r.m0;
  r.method = CountMethod::PropN1Eta;
  return r;
}

ZeroCountResult count_zeros_kind1_anychar(const FieldCtx& F, const Fq2Elem& a,
                                          const Fq2Elem& b, const Fq2Elem& c) {
  ZeroCountResult r;
  const Fq2Elem diff = F.sub(a, b);
  const Fq2Elem gamma = F.add(F.sub(F.mul(a, a), F.mul(a, b)), c);
  if (!F.in_subfield(diff)) {
    const Fq2Elem bma = F.sub(b, a);
    r.cubic.A = F.trace(b);
    r.cubic.B = F.add(F.sub(F.trace(c), F.norm(a)), F.norm(b));
    r.cubic.C = F.add(F.trace(F.mul(F.frobenius_q(bma), gamma)),
                      F.mul(F.trace(a), F.norm(bma)));
    r.count = cubic_root_count(F, r.cubic);
    r.method = CountMethod::AnyCharCubic;
    return r;
  }
  if (!F.trace(gamma).is_zero()) {
    r.quad_b = F.add(F.frobenius_q(a), b);  // lies in F_q since a-b does
    r.quad_c = F.trace(c);
    int n = 0;
    for (const Fq2Elem& u : F.subfield_elements())
      if (F.add(F.mul(F.add(u, r.quad_b), u), r.quad_c).is_zero()) ++n;
    r.count = n;
    r.method = CountMethod::AnyCharQuadratic;
    return r;
  }
  const Fq2Elem w = F.sub(F.add(F.frobenius_q(a), F.mul_int(a, 2)), b);  // a^q+2a-b
  if (!gamma.is_zero()) r.count = w.is_zero() ? 0 : 1;
  else r.count = w.is_zero() ? int64_t(F.q()) : int64_t(F.q()) + 1;
  r.method = CountMethod::AnyCharDirect;
  return r;
}

ZeroCountResult count_zeros_kind2(const FieldCtx& F, const Fq2Elem& beta,
                                  const Fq2Elem& a, const Fq2Elem& b,
                                  const Fq2Elem& c) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "kind-2 closed form requires odd q");
  if (beta.is_zero()) throw Error(ErrorCode::ZeroBeta, "beta must be nonzero");
  ZeroCountResult r;
  r.method = CountMethod::PropN2;
  const int64_t q = int64_t(F.q());
  const Fq2Elem binv = F.inv(beta);
  const Fq2Elem aq = F.frobenius_q(a);
  const Fq2Elem s = F.add(aq, b);  // a^q + b
  const int eta_nb = F.quadratic_character(F.norm(beta));
  if (!s.is_zero()) {
    const Fq2Elem bma = F.sub(b, aq);
    r.A0 = F.sub(F.mul(binv, F.mul(bma, bma)), F.mul_int(c, 8));
    r.A1 = F.sub(F.mul(binv, F.sub(F.mul(b, b), F.mul(aq, aq))), F.mul_int(c, 4));
    r.A2 = F.mul(binv, F.mul(s, s));
    if (!F.in_subfield(r.A2)) {
      const Fq2Elem trA1 = F.trace(r.A1);
      const Fq2Elem arg = F.add(F.mul(trA1, trA1),
                                F.trace(F.mul(r.A0, F.sub(F.frobenius_q(r.A2), r.A2))));
      r.count = 1 + eta_nb * F.quadratic_character(arg);
    } else if (!F.trace(r.A1).is_zero()) {
      r.count = 1;
    } else if (!F.in_subfield(r.A0)) {
      r.count = 1 - eta_nb;
    } else {
      r.count = 1 + eta_nb * (q - 1);
    }
    return r;
  }
  if (!F.trace(c).is_zero()) {
    r.count = 0;
    return r;
  }
  const Fq2Elem u = F.sub(F.sub(F.mul(binv, F.mul(aq, aq)),
                                F.mul(F.frobenius_q(binv), F.mul(a, a))),
                          F.mul_int(c, 4));  // beta^{-1}a^{2q} - beta^{-q}a^2 - 4c
  r.count = !u.is_zero() ? q - eta_nb : q + eta_nb * (q - 1);
  return r;
}

ZeroCountResult count_zeros_kind2_general(const FieldCtx& F, const Fq2Elem& alpha,
                                          const Fq2Elem& beta, const Fq2Elem& a,
                                          const Fq2Elem& b, const Fq2Elem& c) {
  if (beta.is_zero()) throw Error(ErrorCode::ZeroBeta, "beta must be nonzero");
  const Fq2Elem na = F.norm(alpha);
  if (!(na == F.norm(beta)) || na.is_zero())
    throw Error(ErrorCode::NormMismatch, "requires N(alpha) = N(beta) != 0");
  // alpha = -beta^q w^{q-1}; multiplying the polynomial by w turns it into
  // the normalised shape with beta' = w*beta (same zero set).
  const Fq2Elem ratio = F.neg(F.mul(alpha, F.inv(F.frobenius_q(beta))));
  const Fq2Elem w = F.solve_qminus1_power(ratio);
  ZeroCountResult r = count_zeros_kind2(F, F.mul(w, beta), F.mul(w, a),
                                        F.mul(w, b), F.mul(w, c));
  r.omega = w;
  return r;
}

}  // namespace qquad
