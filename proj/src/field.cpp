#include "qquad/field.hpp"

#include <algorithm>
#include <cassert>

namespace qquad {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::NormNotOne: return "NormNotOne";
    case ErrorCode::ZeroB: return "ZeroB";
    case ErrorCode::ZeroBeta: return "ZeroBeta";
    case ErrorCode::NormMismatch: return "NormMismatch";
    case ErrorCode::DInSubfield: return "DInSubfield";
    case ErrorCode::BetaIsOne: return "BetaIsOne";
    case ErrorCode::AlphaBetaSumNotOne: return "AlphaBetaSumNotOne";
    case ErrorCode::NormsEqual: return "NormsEqual";
    case ErrorCode::DegenerateNumerator: return "DegenerateNumerator";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t pow_mod_u32(uint64_t base, uint64_t e, uint32_t mod) {
  uint64_t r = 1 % mod;
  base %= mod;
  while (e) {
    if (e & 1) r = r * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return uint32_t(r);
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) { return pow_mod_u32(a, p - 2, p); }

// Construction-time polynomial arithmetic over F_p (vectors, not hot).
using VPoly = std::vector<uint32_t>;

void vtrim(VPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

VPoly vmul(const VPoly& a, const VPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  VPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  }
  vtrim(r);
  return r;
}

// a mod b, b nonzero
VPoly vmod(VPoly a, const VPoly& b, uint32_t p) {
  vtrim(a);
  uint32_t lc_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    uint32_t t = uint32_t(uint64_t(a.back()) * lc_inv % p);
    size_t shift = a.size() - b.size();
    if (t) {
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t sub = uint64_t(t) * b[j] % p;
        a[shift + j] = uint32_t((a[shift + j] + p - sub) % p);
      }
    }
    a.pop_back();
    vtrim(a);
    if (a.empty()) break;
  }
  return a;
}

VPoly vgcd(VPoly a, VPoly b, uint32_t p) {
  vtrim(a);
  vtrim(b);
  while (!b.empty()) {
    VPoly r = vmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

VPoly vpowmod(VPoly base, uint64_t e, const VPoly& f, uint32_t p) {
  VPoly r{1};
  base = vmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = vmod(vmul(r, base, p), f, p);
    base = vmod(vmul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// f monic of degree n is irreducible iff gcd(f, x^{p^k} - x) = 1 for all
// k <= n/2 (every factor of degree d <= n/2 divides x^{p^d} - x).
bool poly_irreducible(const VPoly& f, uint32_t p) {
  size_t n = f.size() - 1;
  VPoly s{0, 1};  // x
  for (size_t k = 1; 2 * k <= n; ++k) {
    s = vpowmod(std::move(s), p, f, p);
    VPoly diff = s;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = uint32_t((diff[1] + p - 1) % p);
    vtrim(diff);
    VPoly g = vgcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

FieldCtx::FieldCtx(uint32_t p, uint32_t m, uint64_t q_bound) : p_(p), m_(m) {
  if (!is_prime_u32(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::DegreeTooLarge, "extension degree must be >= 1");
  if (2 * m > uint32_t(kMaxCoeffs))
    throw Error(ErrorCode::DegreeTooLarge, "2m exceeds coefficient capacity");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > q_bound)
      throw Error(ErrorCode::DegreeTooLarge,
                  "q = " + std::to_string(p) + "^" + std::to_string(m) +
                      " exceeds the size bound " + std::to_string(q_bound));
  }
  q_ = q;
  q2_ = q * q;
  n_ = uint8_t(2 * m);

  find_modulus();

  zero_ = Fq2Elem{};
  zero_.n_ = n_;
  one_ = from_int(1);

  // Frobenius matrices: columns are images of the basis x^i under the
  // p-power map, and under its m-fold iterate (the q-power map).
  for (int i = 0; i < n_; ++i) {
    Fq2Elem basis = zero_;
    basis.c_[i] = 1;
    frob_p_cols_[i] = pow(basis, p_);
  }
  for (int i = 0; i < n_; ++i) {
    Fq2Elem basis = zero_;
    basis.c_[i] = 1;
    Fq2Elem img = basis;
    for (uint32_t k = 0; k < m_; ++k) img = apply_matrix(frob_p_cols_, img);
    frob_q_cols_[i] = img;
  }

  // Distinct prime factors of q^2 - 1, for generator order checks.
  uint64_t r = q2_ - 1;
  for (uint64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      q2m1_prime_factors_.push_back(d);
      while (r % d == 0) r /= d;
    }
  }
  if (r > 1) q2m1_prime_factors_.push_back(r);

  find_generator();
  if (p_ != 2) find_epsilon();
}

void FieldCtx::find_modulus() {
  // Enumerate monic degree-2m candidates in lex order, high-degree
  // coefficients compared first; numeric order on n matches that ordering
  // when digit i of n (base p) is the coefficient of x^i.
  for (uint64_t cand = 0;; ++cand) {
    VPoly f(n_ + 1, 0);
    f[n_] = 1;
    uint64_t v = cand;
    for (int i = 0; i < n_; ++i) {
      f[i] = uint32_t(v % p_);
      v /= p_;
    }
    if (v != 0) break;  // exhausted (cannot happen: irreducibles exist)
    if (poly_irreducible(f, p_)) {
      for (int i = 0; i <= n_; ++i) mod_[i] = uint16_t(f[i]);
      return;
    }
  }
  throw Error(ErrorCode::DegreeTooLarge, "no irreducible modulus found");
}

void FieldCtx::find_generator() {
  for (uint64_t idx = 2; idx < q2_; ++idx) {
    Fq2Elem e = element_of_index(idx);
    bool ok = true;
    for (uint64_t ell : q2m1_prime_factors_) {
      if (pow(e, (q2_ - 1) / ell) == one_) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = e;
      return;
    }
  }
  assert(false && "no generator found");
}

void FieldCtx::find_epsilon() {
  for (uint64_t idx = 1; idx < q2_; ++idx) {
    Fq2Elem x = element_of_index(idx);
    if (frobenius_q(x) == neg(x)) {
      eps_ = x;
      has_eps_ = true;
      return;
    }
  }
  assert(false && "no trace-zero element found");
}

const Fq2Elem& FieldCtx::epsilon0() const {
  if (!has_eps_)
    throw Error(ErrorCode::EvenCharacteristic, "epsilon0 requires odd q");
  return eps_;
}

Fq2Elem FieldCtx::add(const Fq2Elem& x, const Fq2Elem& y) const {
  Fq2Elem r = zero_;
  for (int i = 0; i < n_; ++i) {
    uint32_t s = uint32_t(x.c_[i]) + y.c_[i];
    r.c_[i] = uint16_t(s >= p_ ? s - p_ : s);
  }
  return r;
}

Fq2Elem FieldCtx::sub(const Fq2Elem& x, const Fq2Elem& y) const {
  Fq2Elem r = zero_;
  for (int i = 0; i < n_; ++i) {
    uint32_t s = uint32_t(x.c_[i]) + p_ - y.c_[i];
    r.c_[i] = uint16_t(s >= p_ ? s - p_ : s);
  }
  return r;
}

Fq2Elem FieldCtx::neg(const Fq2Elem& x) const {
  Fq2Elem r = zero_;
  for (int i = 0; i < n_; ++i) r.c_[i] = uint16_t(x.c_[i] ? p_ - x.c_[i] : 0);
  return r;
}

Fq2Elem FieldCtx::mul(const Fq2Elem& x, const Fq2Elem& y) const {
  // Schoolbook product into 64-bit accumulators, then monic reduction.
  uint64_t acc[2 * kMaxCoeffs - 1] = {};
  for (int i = 0; i < n_; ++i) {
    if (!x.c_[i]) continue;
    uint64_t xi = x.c_[i];
    for (int j = 0; j < n_; ++j) acc[i + j] += xi * y.c_[j];
  }
  int top = 2 * n_ - 2;
  for (int i = 0; i <= top; ++i) acc[i] %= p_;
  for (int i = top; i >= n_; --i) {
    uint64_t t = acc[i];
    if (!t) continue;
    acc[i] = 0;
    for (int j = 0; j < n_; ++j)
      acc[i - n_ + j] = (acc[i - n_ + j] + t * (p_ - mod_[j])) % p_;
  }
  Fq2Elem r = zero_;
  for (int i = 0; i < n_; ++i) r.c_[i] = uint16_t(acc[i]);
  return r;
}

Fq2Elem FieldCtx::pow(const Fq2Elem& x, uint64_t e) const {
  Fq2Elem r = one_;
  Fq2Elem base = x;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq2Elem FieldCtx::mul_int(const Fq2Elem& x, int64_t k) const {
  int64_t kk = k % int64_t(p_);
  if (kk < 0) kk += p_;
  Fq2Elem r = zero_;
  for (int i = 0; i < n_; ++i) r.c_[i] = uint16_t(uint64_t(x.c_[i]) * kk % p_);
  return r;
}

Fq2Elem FieldCtx::inv(const Fq2Elem& x) const {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // Extended Euclid over F_p[x] against the (irreducible) modulus.
  int deg0 = n_, deg1 = -1;
  uint32_t r0[kMaxCoeffs + 1], r1[kMaxCoeffs + 1];
  uint32_t t0[kMaxCoeffs + 1] = {}, t1[kMaxCoeffs + 1] = {};
  for (int i = 0; i <= n_; ++i) r0[i] = mod_[i];
  for (int i = 0; i <= n_; ++i) r1[i] = 0;
  for (int i = 0; i < n_; ++i) {
    r1[i] = x.c_[i];
    if (x.c_[i]) deg1 = i;
  }
  t1[0] = 1;
  while (deg1 > 0) {
    // divide r0 by r1; fold quotient into t as we go
    uint32_t lcinv = inv_mod_p(r1[deg1], p_);
    while (deg0 >= deg1) {
      uint32_t coef = uint32_t(uint64_t(r0[deg0]) * lcinv % p_);
      int shift = deg0 - deg1;
      if (coef) {
        for (int j = 0; j <= deg1; ++j) {
          uint64_t s = uint64_t(coef) * r1[j] % p_;
          r0[shift + j] = uint32_t((r0[shift + j] + p_ - s) % p_);
        }
        for (int j = 0; j < n_; ++j) {
          uint64_t s = uint64_t(coef) * t1[j] % p_;
          int pos = shift + j;
          if (pos <= kMaxCoeffs) t0[pos] = uint32_t((t0[pos] + p_ - s) % p_);
        }
      }
      while (deg0 >= 0 && r0[deg0] == 0) --deg0;
    }
    std::swap_ranges(r0, r0 + kMaxCoeffs + 1, r1);
    std::swap_ranges(t0, t0 + kMaxCoeffs + 1, t1);
    std::swap(deg0, deg1);
    while (deg1 >= 0 && r1[deg1] == 0) --deg1;
  }
  if (deg1 == 0) {
    std::swap_ranges(r0, r0 + kMaxCoeffs + 1, r1);
    std::swap_ranges(t0, t0 + kMaxCoeffs + 1, t1);
    std::swap(deg0, deg1);
  }
  // r0 is now a nonzero constant gcd; t0 * x = r0 (mod modulus).
  uint32_t scale = inv_mod_p(r0[0], p_);
  Fq2Elem out = zero_;
  for (int i = 0; i < n_; ++i) out.c_[i] = uint16_t(uint64_t(t0[i]) * scale % p_);
  return out;
}

Fq2Elem FieldCtx::apply_matrix(const std::array<Fq2Elem, kMaxCoeffs>& cols,
                               const Fq2Elem& x) const {
  uint64_t acc[kMaxCoeffs] = {};
  for (int c = 0; c < n_; ++c) {
    uint64_t xc = x.c_[c];
    if (!xc) continue;
    const Fq2Elem& col = cols[c];
    for (int r = 0; r < n_; ++r) acc[r] += xc * col.c_[r];
  }
  Fq2Elem out = zero_;
  for (int r = 0; r < n_; ++r) out.c_[r] = uint16_t(acc[r] % p_);
  return out;
}

Fq2Elem FieldCtx::frobenius_q(const Fq2Elem& x) const {
  return apply_matrix(frob_q_cols_, x);
}

Fq2Elem FieldCtx::trace(const Fq2Elem& x) const { return add(frobenius_q(x), x); }

Fq2Elem FieldCtx::norm(const Fq2Elem& x) const { return mul(frobenius_q(x), x); }

bool FieldCtx::in_subfield(const Fq2Elem& x) const { return frobenius_q(x) == x; }

int FieldCtx::quadratic_character(const Fq2Elem& u) const {
  if (p_ == 2)
    throw Error(ErrorCode::EvenCharacteristic, "quadratic character requires odd q");
  if (!in_subfield(u))
    throw Error(ErrorCode::NotInSubfield, "quadratic character argument not in F_q");
  if (u.is_zero()) return 0;
  Fq2Elem r = pow(u, (q_ - 1) / 2);
  return r == one_ ? 1 : -1;
}

uint32_t FieldCtx::abs_trace_fp(const Fq2Elem& u) const {
  if (!in_subfield(u))
    throw Error(ErrorCode::NotInSubfield, "absolute trace argument not in F_q");
  Fq2Elem acc = u;
  Fq2Elem cur = u;
  for (uint32_t i = 1; i < m_; ++i) {
    cur = apply_matrix(frob_p_cols_, cur);
    acc = add(acc, cur);
  }
  return acc.c_[0];
}

Fq2Elem FieldCtx::solve_qminus1_power(const Fq2Elem& c) const {
  if (c.is_zero() || !(norm(c) == one_))
    throw Error(ErrorCode::NormNotOne, "solve_qminus1_power requires norm(c) == 1");
  if (c == one_) return one_;
  // Nonzero kernel vector of x -> x^q - c*x; exists by Hilbert 90.
  std::vector<Fq2Elem> cols(n_);
  for (int i = 0; i < n_; ++i) {
    Fq2Elem basis = zero_;
    basis.c_[i] = 1;
    cols[i] = sub(frob_q_cols_[i], mul(c, basis));
  }
  auto w = kernel_vector(cols);
  assert(w && "Hilbert 90 kernel must be nontrivial");
  return *w;
}

uint64_t FieldCtx::index_of(const Fq2Elem& x) const {
  uint64_t idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + x.c_[i];
  return idx;
}

Fq2Elem FieldCtx::element_of_index(uint64_t idx) const {
  Fq2Elem r = zero_;
  for (int i = 0; i < n_; ++i) {
    r.c_[i] = uint16_t(idx % p_);
    idx /= p_;
  }
  return r;
}

Fq2Elem FieldCtx::from_coeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() > size_t(n_))
    throw Error(ErrorCode::ParseError, "too many coefficients for this field");
  Fq2Elem r = zero_;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_)
      throw Error(ErrorCode::ParseError, "coefficient not a residue mod p");
    r.c_[i] = uint16_t(coeffs[i]);
  }
  return r;
}

Fq2Elem FieldCtx::from_int(int64_t v) const {
  int64_t r = v % int64_t(p_);
  if (r < 0) r += p_;
  Fq2Elem e = zero_;
  e.n_ = n_;
  e.c_[0] = uint16_t(r);
  return e;
}

const std::vector<Fq2Elem>& FieldCtx::subfield_elements() const {
  std::call_once(subfield_once_, [&] {
    std::vector<Fq2Elem> elems;
    elems.reserve(q_);
    elems.push_back(zero_);
    Fq2Elem h = pow(gen_, q_ + 1);  // generates the order-(q-1) subgroup F_q^*
    Fq2Elem cur = one_;
    for (uint64_t i = 0; i + 1 < q_; ++i) {
      elems.push_back(cur);
      cur = mul(cur, h);
    }
    std::sort(elems.begin(), elems.end(),
              [&](const Fq2Elem& a, const Fq2Elem& b) { return index_of(a) < index_of(b); });
    subfield_ = std::move(elems);
  });
  return subfield_;
}

std::optional<Fq2Elem> FieldCtx::solve_linear(std::span<const Fq2Elem> cols,
                                              const Fq2Elem& rhs) const {
  int n = n_;
  int ncols = int(cols.size());
  // Augmented matrix, row-reduced over F_p.
  std::vector<std::vector<uint32_t>> a(n, std::vector<uint32_t>(ncols + 1, 0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < ncols; ++c) a[r][c] = cols[c].c_[r];
    a[r][ncols] = rhs.c_[r];
  }
  std::vector<int> pivot_col(n, -1);
  int row = 0;
  for (int col = 0; col < ncols && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    uint32_t invp = inv_mod_p(a[row][col], p_);
    for (int c = col; c <= ncols; ++c)
      a[row][c] = uint32_t(uint64_t(a[row][c]) * invp % p_);
    for (int r = 0; r < n; ++r) {
      if (r == row || !a[r][col]) continue;
      uint64_t f = a[r][col];
      for (int c = col; c <= ncols; ++c) {
        uint64_t s = f * a[row][c] % p_;
        a[r][c] = uint32_t((a[r][c] + p_ - s) % p_);
      }
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (a[r][ncols]) return std::nullopt;  // inconsistent
  Fq2Elem x = zero_;
  for (int r = 0; r < row; ++r)
    if (pivot_col[r] >= 0) x.c_[pivot_col[r]] = uint16_t(a[r][ncols]);
  return x;
}

std::optional<Fq2Elem> FieldCtx::kernel_vector(std::span<const Fq2Elem> cols) const {
  int n = n_;
  int ncols = int(cols.size());
  std::vector<std::vector<uint32_t>> a(n, std::vector<uint32_t>(ncols, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < ncols; ++c) a[r][c] = cols[c].c_[r];
  std::vector<int> pivot_of_col(ncols, -1);
  int row = 0;
  for (int col = 0; col < ncols && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    uint32_t invp = inv_mod_p(a[row][col], p_);
    for (int c = col; c < ncols; ++c)
      a[row][c] = uint32_t(uint64_t(a[row][c]) * invp % p_);
    for (int r = 0; r < n; ++r) {
      if (r == row || !a[r][col]) continue;
      uint64_t f = a[r][col];
      for (int c = col; c < ncols; ++c) {
        uint64_t s = f * a[row][c] % p_;
        a[r][c] = uint32_t((a[r][c] + p_ - s) % p_);
      }
    }
    pivot_of_col[col] = row;
    ++row;
  }
  int free_col = -1;
  for (int col = 0; col < ncols; ++col)
    if (pivot_of_col[col] < 0) {
      free_col = col;
      break;
    }
  if (free_col < 0) return std::nullopt;  // injective
  // Free variable = 1, pivots balance it.
  Fq2Elem x = zero_;
  x.c_[free_col] = 1;
  for (int col = 0; col < ncols; ++col) {
    int pr = pivot_of_col[col];
    if (pr < 0) continue;
    uint32_t v = a[pr][free_col];
    x.c_[col] = uint16_t(v ? p_ - v : 0);
  }
  return x;
}

}  // namespace qquad
