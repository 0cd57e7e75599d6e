#include "qquad/charsum.hpp"

#include <numbers>
#include <vector>

namespace qquad {

const char* charsum_branch_name(CharSumBranch b) {
  switch (b) {
    case CharSumBranch::NoTheta: return "NoTheta";
    case CharSumBranch::PlusQG: return "PlusQG";
    case CharSumBranch::MinusQG: return "MinusQG";
    case CharSumBranch::EtaD: return "EtaD";
  }
  return "Unknown";
}

std::complex<double> psi(const FieldCtx& F, const Fq2Elem& u) {
  uint32_t t = F.abs_trace_fp(u);  // throws NotInSubfield
  return std::polar(1.0, 2.0 * std::numbers::pi * t / F.p());
}

std::complex<double> chi(const FieldCtx& F, const Fq2Elem& x) {
  return psi(F, F.trace(x));
}

std::complex<double> gauss_sum(const FieldCtx& F) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "Gauss sum requires odd q");
  std::call_once(F.gauss_once_, [&] {
    std::complex<double> g = 0.0;
    for (const Fq2Elem& u : F.subfield_elements()) {
      if (u.is_zero()) continue;
      g += double(F.quadratic_character(u)) * psi(F, u);
    }
    F.gauss_value_ = g;
  });
  return F.gauss_value_;
}

std::optional<Fq2Elem> solve_theta(const FieldCtx& F, const CharSumParams& P) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "solve_theta requires odd q");
  const Fq2Elem trA = F.trace(P.A);
  const Fq2Elem D = F.sub(F.mul(trA, trA), F.mul_int(F.norm(P.B), 4));
  if (!D.is_zero()) {
    Fq2Elem num = F.add(F.neg(F.mul(trA, F.frobenius_q(P.C))),
                        F.mul_int(F.mul(F.frobenius_q(P.B), P.C), 2));
    return F.mul(num, F.inv(D));
  }
  // D = 0: solve the F_p-linear system Tr(A) x^q + 2B x = -C directly.
  std::vector<Fq2Elem> cols(2 * F.m());
  uint64_t idx = 1;  // index of the basis vector x^i
  for (uint32_t i = 0; i < 2 * F.m(); ++i, idx *= F.p()) {
    Fq2Elem e = F.element_of_index(idx);
    cols[i] = F.add(F.mul(trA, F.frobenius_q(e)), F.mul_int(F.mul(P.B, e), 2));
  }
  return F.solve_linear(cols, F.neg(P.C));
}

CharSumValue charsum_closed(const FieldCtx& F, const CharSumParams& P) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "closed form requires odd q");
  if (P.B.is_zero()) throw Error(ErrorCode::ZeroB, "B must be nonzero");

  auto theta = solve_theta(F, P);
  if (!theta) return {CharSumBranch::NoTheta, std::nullopt, 0, 0.0};

  const double q = double(F.q());
  const Fq2Elem& th = *theta;
  // chi(-A theta^{q+1} - B theta^2)
  Fq2Elem arg = F.neg(F.add(F.mul(P.A, F.mul(F.frobenius_q(th), th)),
                            F.mul(P.B, F.mul(th, th))));
  std::complex<double> shift = chi(F, arg);

  const Fq2Elem trA = F.trace(P.A);
  const Fq2Elem root = F.pow(P.B, (F.q() + 1) / 2);  // B^{(q+1)/2}
  if (trA == F.mul_int(root, 2))
    return {CharSumBranch::PlusQG, theta, 0, q * gauss_sum(F) * shift};
  if (trA == F.mul_int(root, -2))
    return {CharSumBranch::MinusQG, theta, 0, -q * gauss_sum(F) * shift};

  const Fq2Elem D = F.sub(F.mul(trA, trA), F.mul_int(F.norm(P.B), 4));
  int eta_d = F.quadratic_character(D);  // D != 0 here
  return {CharSumBranch::EtaD, theta, eta_d, -double(eta_d) * q * shift};
}

std::complex<double> charsum_bruteforce(const FieldCtx& F, const CharSumParams& P) {
  std::complex<double> acc = 0.0;
  for (uint64_t i = 0; i < F.q2(); ++i) {
    Fq2Elem w = F.element_of_index(i);
    Fq2Elem wq = F.frobenius_q(w);
    Fq2Elem t = F.mul(P.A, F.mul(wq, w));
    t = F.add(t, F.mul(P.B, F.mul(w, w)));
    t = F.add(t, F.mul(P.C, w));
    acc += chi(F, t);
  }
  return acc;
}

}  // namespace qquad
