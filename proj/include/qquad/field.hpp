#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qquad {

enum class ErrorCode {
  NotPrime,
  DegreeTooLarge,
  DivisionByZero,
  EvenCharacteristic,
  OddCharacteristic,
  NotInSubfield,
  NormNotOne,
  ZeroB,
  ZeroBeta,
  NormMismatch,
  DInSubfield,
  BetaIsOne,
  AlphaBetaSumNotOne,
  NormsEqual,
  DegenerateNumerator,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Coefficient capacity per element. The tower F_p ⊂ F_q ⊂ F_{q^2} with
// q = p^m stores elements as degree-<2m polynomials over F_p, so any
// q = p^m <= 2^16 fits (m <= 16).
inline constexpr int kMaxCoeffs = 32;

inline constexpr uint64_t kDefaultQBound = uint64_t(1) << 16;

class FieldCtx;

/// Element of F_{q^2}: little-endian coefficient vector over F_p, always
/// reduced modulo the context's modulus and modulo p. Plain value type;
/// all arithmetic goes through a FieldCtx.
class Fq2Elem {
 public:
  Fq2Elem() = default;

  std::span<const uint16_t> coeffs() const { return {c_.data(), n_}; }

  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  // Unused tail entries are kept zero, so whole-array comparison is exact.
  bool operator==(const Fq2Elem&) const = default;

 private:
  friend class FieldCtx;
  std::array<uint16_t, kMaxCoeffs> c_{};
  uint8_t n_ = 0;
};

/// Immutable description of the tower F_p ⊂ F_q ⊂ F_{q^2}.
///
/// Construction is deterministic: the modulus is the lexicographically
/// smallest monic irreducible polynomial of degree 2m over F_p (coefficients
/// compared high-degree first), the generator is the smallest element in the
/// canonical index ordering with multiplicative order q^2-1, and epsilon0
/// (odd q) is the smallest nonzero element with x^q = -x.
///
/// The canonical index of an element is sum_i c_i p^i (little-endian base-p
/// value of its coefficient vector).
///
/// Contexts are immutable after construction and safe to share across
/// threads; every operation is a pure function of (ctx, inputs).
class FieldCtx {
 public:
  FieldCtx(uint32_t p, uint32_t m, uint64_t q_bound = kDefaultQBound);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint64_t q() const { return q_; }
  uint64_t q2() const { return q2_; }
  bool odd_q() const { return p_ != 2; }

  /// Modulus coefficients, little-endian, degree 2m (monic).
  std::span<const uint16_t> modulus() const { return {mod_.data(), size_t(n_) + 1}; }

  const Fq2Elem& zero() const { return zero_; }
  const Fq2Elem& one() const { return one_; }
  const Fq2Elem& generator() const { return gen_; }

  /// Canonical element with Tr(eps) = 0, eps not in F_q. Odd q only.
  const Fq2Elem& epsilon0() const;

  // --- arithmetic -----------------------------------------------------

  Fq2Elem add(const Fq2Elem& x, const Fq2Elem& y) const;
  Fq2Elem sub(const Fq2Elem& x, const Fq2Elem& y) const;
  Fq2Elem mul(const Fq2Elem& x, const Fq2Elem& y) const;
  Fq2Elem neg(const Fq2Elem& x) const;
  Fq2Elem inv(const Fq2Elem& x) const;  // throws DivisionByZero
  Fq2Elem pow(const Fq2Elem& x, uint64_t e) const;

  /// k*x for a (possibly negative) integer scalar k.
  Fq2Elem mul_int(const Fq2Elem& x, int64_t k) const;

  // --- Galois structure -----------------------------------------------

  /// x^q, the nontrivial automorphism of F_{q^2}/F_q (m-fold p-power map).
  Fq2Elem frobenius_q(const Fq2Elem& x) const;

  /// Relative trace x^q + x; lands in F_q.
  Fq2Elem trace(const Fq2Elem& x) const;

  /// Relative norm x^{q+1}; lands in F_q.
  Fq2Elem norm(const Fq2Elem& x) const;

  /// True iff x lies in F_q (x^q == x).
  bool in_subfield(const Fq2Elem& x) const;

  /// Quadratic character of F_q: 0 at 0, +1 on nonzero squares, -1 otherwise.
  /// Requires odd q and in_subfield(u).
  int quadratic_character(const Fq2Elem& u) const;

  /// Absolute trace F_q -> F_p as a residue. Requires in_subfield(u).
  uint32_t abs_trace_fp(const Fq2Elem& u) const;

  /// Solves w^{q-1} = c (Hilbert 90). Requires c != 0 and norm(c) == 1;
  /// found as a nonzero kernel vector of x -> x^q - c*x over F_p.
  Fq2Elem solve_qminus1_power(const Fq2Elem& c) const;

  // --- encoding and enumeration ----------------------------------------

  uint64_t index_of(const Fq2Elem& x) const;
  Fq2Elem element_of_index(uint64_t idx) const;

  /// Builds an element from little-endian residues; shorter vectors are
  /// zero-padded. Entries must be < p.
  Fq2Elem from_coeffs(std::span<const uint32_t> coeffs) const;
  Fq2Elem from_int(int64_t v) const;  // v mod p as a constant

  /// The q elements of F_q, sorted by canonical index. Cached.
  const std::vector<Fq2Elem>& subfield_elements() const;

  // --- F_p linear algebra helpers ---------------------------------------

  /// Solves sum_i x_i * cols[i] = rhs coefficient-wise over F_p; returns a
  /// particular solution (free variables zero) or nullopt if inconsistent.
  std::optional<Fq2Elem> solve_linear(std::span<const Fq2Elem> cols,
                                      const Fq2Elem& rhs) const;

  /// A nonzero kernel vector of the F_p-linear map with the given columns,
  /// or nullopt if the map is injective.
  std::optional<Fq2Elem> kernel_vector(std::span<const Fq2Elem> cols) const;

 private:
  friend std::complex<double> gauss_sum(const FieldCtx&);

  uint32_t p_ = 0;
  uint32_t m_ = 0;
  uint8_t n_ = 0;  // 2m
  uint64_t q_ = 0;
  uint64_t q2_ = 0;
  std::array<uint16_t, kMaxCoeffs + 1> mod_{};  // monic, mod_[2m] == 1

  Fq2Elem zero_, one_, gen_, eps_;
  bool has_eps_ = false;
  std::array<Fq2Elem, kMaxCoeffs> frob_p_cols_;  // x_i -> x_i^p
  std::array<Fq2Elem, kMaxCoeffs> frob_q_cols_;  // x_i -> x_i^q
  std::vector<uint64_t> q2m1_prime_factors_;

  mutable std::once_flag subfield_once_;
  mutable std::vector<Fq2Elem> subfield_;
  mutable std::once_flag gauss_once_;
  mutable std::complex<double> gauss_value_;

  Fq2Elem apply_matrix(const std::array<Fq2Elem, kMaxCoeffs>& cols,
                       const Fq2Elem& x) const;
  void find_modulus();
  void find_generator();
  void find_epsilon();
};

}  // namespace qquad
