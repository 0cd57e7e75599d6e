#include "qquad/suites.hpp"

#include <chrono>
#include <cmath>
#include <complex>

#include "qquad/charsum.hpp"
#include "qquad/rng.hpp"

namespace qquad::suites {

using nlohmann::ordered_json;

const char* suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::Gauss: return "gauss";
    case SuiteId::Charsum: return "charsum";
    case SuiteId::Kind1Odd: return "kind1_odd";
    case SuiteId::Kind1AnyChar: return "kind1_anychar";
    case SuiteId::Kind2: return "kind2";
    case SuiteId::ThmOdd: return "thm_odd";
    case SuiteId::ThmEven: return "thm_even";
    case SuiteId::PropNormOne: return "prop_normone";
    case SuiteId::PropKind2: return "prop_kind2";
    case SuiteId::Reduction: return "reduction";
    case SuiteId::Williams: return "williams";
  }
  return "unknown";
}

std::vector<SuiteId> all_suites() {
  return {SuiteId::Gauss,       SuiteId::Charsum,     SuiteId::Kind1Odd,
          SuiteId::Kind1AnyChar, SuiteId::Kind2,      SuiteId::ThmOdd,
          SuiteId::ThmEven,     SuiteId::PropNormOne, SuiteId::PropKind2,
          SuiteId::Reduction,   SuiteId::Williams};
}

std::optional<SuiteId> suite_from_name(const std::string& name) {
  for (SuiteId id : all_suites())
    if (name == suite_name(id)) return id;
  return std::nullopt;
}

namespace {

struct Sink {
  SuiteQReport& rep;
  void add(ordered_json rec) {
    ++rep.mismatch_count;
    if (rep.mismatches.size() < kMismatchCap) rep.mismatches.push_back(std::move(rec));
  }
};

Fq2Elem draw(const FieldCtx& F, Lcg64& rng) {
  return F.element_of_index(rng.below(F.q2()));
}

Fq2Elem draw_nonzero(const FieldCtx& F, Lcg64& rng) {
  return F.element_of_index(1 + rng.below(F.q2() - 1));
}

Fq2Elem draw_nonsubfield(const FieldCtx& F, Lcg64& rng) {
  for (;;) {
    Fq2Elem d = draw(F, rng);
    if (!F.in_subfield(d)) return d;
  }
}

std::string fe(const FieldCtx& F, const Fq2Elem& x) { return format_elem(F, x); }

void run_gauss(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
               Sink& sink) {
  std::complex<double> g = gauss_sum(F);
  int eta_m1 = F.quadratic_character(F.from_int(-1));
  double err = std::abs(g * g - std::complex<double>(double(eta_m1) * double(F.q()), 0));
  rep.instances = 1;
  if (err > opts.tol_scale * double(F.q()))
    sink.add({{"check", "gauss_square"}, {"eta_minus1", eta_m1}, {"err", err}});
}

void check_charsum_instance(const FieldCtx& F, const CharSumParams& P, double tol,
                            Sink& sink) {
  CharSumValue v = charsum_closed(F, P);
  std::complex<double> bf = charsum_bruteforce(F, P);
  Fq2Elem trA = F.trace(P.A);
  Fq2Elem D = F.sub(F.mul(trA, trA), F.mul_int(F.norm(P.B), 4));
  bool branch_ok = (v.branch == CharSumBranch::EtaD) ? !D.is_zero() : D.is_zero();
  if (std::abs(v.value - bf) > tol || !branch_ok)
    sink.add({{"A", fe(F, P.A)},
              {"B", fe(F, P.B)},
              {"C", fe(F, P.C)},
              {"branch", charsum_branch_name(v.branch)},
              {"closed", {v.value.real(), v.value.imag()}},
              {"brute", {bf.real(), bf.imag()}},
              {"branch_ok", branch_ok}});
}

void run_charsum(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
                 Sink& sink) {
  const double tol = opts.tol_scale * double(F.q2());
  if (opts.exhaustive) {
    for (uint64_t ai = 0; ai < F.q2(); ++ai)
      for (uint64_t bi = 1; bi < F.q2(); ++bi)
        for (uint64_t ci = 0; ci < F.q2(); ++ci) {
          ++rep.instances;
          check_charsum_instance(F,
                                 {F.element_of_index(ai), F.element_of_index(bi),
                                  F.element_of_index(ci)},
                                 tol, sink);
        }
  } else {
    Lcg64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples; ++i) {
      CharSumParams P{draw(F, rng), draw_nonzero(F, rng), draw(F, rng)};
      ++rep.instances;
      check_charsum_instance(F, P, tol, sink);
    }
  }
}

void check_kind1_instance(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                          const Fq2Elem& c, bool anychar, Sink& sink) {
  ZeroCountResult closed = anychar ? count_zeros_kind1_anychar(F, a, b, c)
                                   : count_zeros_kind1_oddq(F, a, b, c);
  QQuadPoly g{1, F.zero(), F.one(), a, b, c};
  int64_t oracle = count_zeros_bruteforce(F, g).count;
  if (closed.count != oracle)
    sink.add({{"a", fe(F, a)},
              {"b", fe(F, b)},
              {"c", fe(F, c)},
              {"method", count_method_name(closed.method)},
              {"closed", closed.count},
              {"oracle", oracle}});
  if (anychar && F.odd_q()) {
    int64_t oddq = count_zeros_kind1_oddq(F, a, b, c).count;
    if (closed.count != oddq)
      sink.add({{"a", fe(F, a)},
                {"b", fe(F, b)},
                {"c", fe(F, c)},
                {"check", "anychar_vs_oddq"},
                {"closed", closed.count},
                {"oddq", oddq}});
  }
}

void run_kind1(const FieldCtx& F, const SuiteOptions& opts, bool anychar,
               SuiteQReport& rep, Sink& sink) {
  if (opts.exhaustive) {
    for (uint64_t ai = 0; ai < F.q2(); ++ai)
      for (uint64_t bi = 0; bi < F.q2(); ++bi)
        for (uint64_t ci = 0; ci < F.q2(); ++ci) {
          ++rep.instances;
          check_kind1_instance(F, F.element_of_index(ai), F.element_of_index(bi),
                               F.element_of_index(ci), anychar, sink);
        }
  } else {
    Lcg64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples; ++i) {
      Fq2Elem a = draw(F, rng), b = draw(F, rng), c = draw(F, rng);
      ++rep.instances;
      check_kind1_instance(F, a, b, c, anychar, sink);
    }
  }
}

void check_kind2_instance(const FieldCtx& F, const Fq2Elem& beta, const Fq2Elem& a,
                          const Fq2Elem& b, const Fq2Elem& c, Sink& sink) {
  int64_t closed = count_zeros_kind2(F, beta, a, b, c).count;
  QQuadPoly g{0, F.neg(F.frobenius_q(beta)), beta, a, b, c};
  int64_t oracle = count_zeros_bruteforce(F, g).count;
  if (closed != oracle)
    sink.add({{"beta", fe(F, beta)},
              {"a", fe(F, a)},
              {"b", fe(F, b)},
              {"c", fe(F, c)},
              {"closed", closed},
              {"oracle", oracle}});
}

void run_kind2(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
               Sink& sink) {
  if (opts.exhaustive) {
    for (uint64_t ti = 1; ti < F.q2(); ++ti)
      for (uint64_t ai = 0; ai < F.q2(); ++ai)
        for (uint64_t bi = 0; bi < F.q2(); ++bi)
          for (uint64_t ci = 0; ci < F.q2(); ++ci) {
            ++rep.instances;
            check_kind2_instance(F, F.element_of_index(ti), F.element_of_index(ai),
                                 F.element_of_index(bi), F.element_of_index(ci), sink);
          }
  } else {
    Lcg64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples; ++i) {
      Fq2Elem beta = draw_nonzero(F, rng);
      Fq2Elem a = draw(F, rng), b = draw(F, rng), c = draw(F, rng);
      ++rep.instances;
      check_kind2_instance(F, beta, a, b, c, sink);
    }
  }
}

void check_thm_odd_instance(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b,
                            const Fq2Elem& c, const Fq2Elem& d, Sink& sink) {
  bool holds = thm_odd_kind1_holds(F, a, b, c, d);
  bool perm = is_permutation_bruteforce(
      F, RationalFnSpec{QQuadPoly{1, F.zero(), F.one(), a, b, c}, d});
  if (holds != perm)
    sink.add({{"a", fe(F, a)},
              {"b", fe(F, b)},
              {"c", fe(F, c)},
              {"d", fe(F, d)},
              {"holds", holds},
              {"oracle", perm}});
}

void run_thm_odd(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
                 Sink& sink) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "thm_odd suite requires odd q");
  if (opts.exhaustive) {
    for (uint64_t ai = 0; ai < F.q2(); ++ai)
      for (uint64_t bi = 0; bi < F.q2(); ++bi)
        for (uint64_t ci = 0; ci < F.q2(); ++ci)
          for (uint64_t di = 0; di < F.q2(); ++di) {
            Fq2Elem d = F.element_of_index(di);
            if (F.in_subfield(d)) continue;
            ++rep.instances;
            check_thm_odd_instance(F, F.element_of_index(ai), F.element_of_index(bi),
                                   F.element_of_index(ci), d, sink);
          }
  } else {
    Lcg64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples; ++i) {
      Fq2Elem a = draw(F, rng), b = draw(F, rng), c = draw(F, rng);
      Fq2Elem d = draw_nonsubfield(F, rng);
      ++rep.instances;
      check_thm_odd_instance(F, a, b, c, d, sink);
    }
  }
}

void run_thm_even(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
                  Sink& sink) {
  auto list = enumerate_permutations(F, PermFamily::EvenKind1);
  auto check = [&](const PermTuple& t) {
    ++rep.instances;
    if (!is_permutation_bruteforce(F, spec_for_family(F, PermFamily::EvenKind1, t)))
      sink.add({{"a", fe(F, t.a)},
                {"b", fe(F, t.b)},
                {"c", fe(F, t.c)},
                {"d", fe(F, t.d)},
                {"oracle", false}});
  };
  if (opts.exhaustive) {
    for (const PermTuple& t : list) check(t);
  } else {
    Lcg64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples && !list.empty(); ++i)
      check(list[rng.below(list.size())]);
  }
}

void run_prop_normone(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
                      Sink& sink) {
  if (!F.odd_q())
    throw Error(ErrorCode::EvenCharacteristic, "prop_normone suite requires odd q");
  // admissible beta: norm 1, beta != 1, in canonical index order
  std::vector<Fq2Elem> betas;
  for (uint64_t i = 1; i < F.q2(); ++i) {
    Fq2Elem x = F.element_of_index(i);
    if (F.norm(x) == F.one() && !(x == F.one())) betas.push_back(x);
  }
  auto check = [&](const Fq2Elem& beta, const Fq2Elem& a, const Fq2Elem& b,
                   const Fq2Elem& c, const Fq2Elem& d) {
    ++rep.instances;
    if (is_permutation_bruteforce(
            F, RationalFnSpec{QQuadPoly{1, F.zero(), beta, a, b, c}, d}))
      sink.add({{"beta", fe(F, beta)},
                {"a", fe(F, a)},
                {"b", fe(F, b)},
                {"c", fe(F, c)},
                {"d", fe(F, d)},
                {"oracle", true}});
  };
  if (opts.exhaustive) {
    for (const Fq2Elem& beta : betas)
      for (uint64_t ai = 0; ai < F.q2(); ++ai)
        for (uint64_t bi = 0; bi < F.q2(); ++bi)
          for (uint64_t ci = 0; ci < F.q2(); ++ci)
            for (uint64_t di = 0; di < F.q2(); ++di) {
              Fq2Elem d = F.element_of_index(di);
              if (F.in_subfield(d)) continue;
              check(beta, F.element_of_index(ai), F.element_of_index(bi),
                    F.element_of_index(ci), d);
            }
  } else {
    Lcg64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples && !betas.empty(); ++i) {
      Fq2Elem beta = betas[rng.below(betas.size())];
      Fq2Elem a = draw(F, rng), b = draw(F, rng), c = draw(F, rng);
      check(beta, a, b, c, draw_nonsubfield(F, rng));
    }
  }
}

void check_prop_kind2_instance(const FieldCtx& F, const Fq2Elem& beta,
                               const Fq2Elem& a, const Fq2Elem& b, const Fq2Elem& c,
                               const Fq2Elem& d, Sink& sink) {
  bool holds = prop_kind2_holds(F, beta, a, b, c, d);
  bool perm = is_permutation_bruteforce(
      F, spec_for_family(F, PermFamily::Kind2, {beta, a, b, c, d}));
  if (holds != perm)
    sink.add({{"beta", fe(F, beta)},
              {"a", fe(F, a)},
              {"b", fe(F, b)},
              {"c", fe(F, c)},
              {"d", fe(F, d)},
              {"holds", holds},
              {"oracle", perm}});
}

void run_prop_kind2(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
                    Sink& sink) {
  if (opts.exhaustive) {
    for (uint64_t ti = 1; ti < F.q2(); ++ti)
      for (uint64_t ai = 0; ai < F.q2(); ++ai)
        for (uint64_t bi = 0; bi < F.q2(); ++bi)
          for (uint64_t ci = 0; ci < F.q2(); ++ci)
            for (uint64_t di = 0; di < F.q2(); ++di) {
              Fq2Elem d = F.element_of_index(di);
              if (F.in_subfield(d)) continue;
              ++rep.instances;
              check_prop_kind2_instance(F, F.element_of_index(ti),
                                        F.element_of_index(ai), F.element_of_index(bi),
                                        F.element_of_index(ci), d, sink);
            }
  } else {
    Lcg64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples; ++i) {
      Fq2Elem beta = draw_nonzero(F, rng);
      Fq2Elem a = draw(F, rng), b = draw(F, rng), c = draw(F, rng);
      Fq2Elem d = draw_nonsubfield(F, rng);
      ++rep.instances;
      check_prop_kind2_instance(F, beta, a, b, c, d, sink);
    }
  }
}

void run_reduction(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
                   Sink& sink) {
  Lcg64 rng(opts.seed);
  auto draw_admissible = [&](Fq2Elem& alpha, Fq2Elem& beta) {
    for (;;) {
      alpha = draw(F, rng);
      beta = F.sub(F.one(), alpha);
      if (!(F.norm(alpha) == F.norm(beta))) return;
    }
  };
  const uint64_t ident_n = opts.samples;
  const uint64_t spec_n = std::max<uint64_t>(1, opts.samples / 5);
  for (uint64_t i = 0; i < ident_n; ++i) {
    Fq2Elem alpha, beta;
    draw_admissible(alpha, beta);
    ++rep.instances;
    Fq2Elem s = F.sub(F.frobenius_q(alpha), F.frobenius_q(beta));
    Fq2Elem lhs = F.mul(
        F.sub(F.add(F.norm(alpha), F.norm(beta)), F.mul_int(F.mul(alpha, beta), 2)),
        F.inv(F.norm(s)));
    Fq2Elem rhs =
        F.mul(F.sub(F.add(F.pow(alpha, 2 * F.q() + 1), F.pow(beta, 2 * F.q() + 1)),
                    F.mul(F.frobenius_q(alpha), F.frobenius_q(beta))),
              F.inv(F.mul(s, s)));
    if (!(lhs == rhs) || lhs.is_zero())
      sink.add({{"alpha", fe(F, alpha)},
                {"beta", fe(F, beta)},
                {"check", "coefficient_identity"},
                {"lhs", fe(F, lhs)},
                {"rhs", fe(F, rhs)}});
  }
  for (uint64_t i = 0; i < spec_n; ++i) {
    Fq2Elem alpha, beta;
    draw_admissible(alpha, beta);
    Fq2Elem a = draw(F, rng), b = draw(F, rng), c = draw(F, rng);
    Fq2Elem d = draw_nonsubfield(F, rng);
    ++rep.instances;
    auto red = reduce_general_numerator(F, alpha, beta, a, b, c, d);
    bool orig = is_permutation_bruteforce(
        F, RationalFnSpec{QQuadPoly{1, alpha, beta, a, b, c}, d});
    bool reduced = is_permutation_bruteforce(F, red.reduced);
    if (orig != reduced)
      sink.add({{"alpha", fe(F, alpha)},
                {"beta", fe(F, beta)},
                {"a", fe(F, a)},
                {"b", fe(F, b)},
                {"c", fe(F, c)},
                {"d", fe(F, d)},
                {"check", "permutation_preserved"},
                {"orig", orig},
                {"reduced", reduced}});
  }
}

void run_williams(const FieldCtx& F, const SuiteOptions& opts, SuiteQReport& rep,
                  Sink& sink) {
  const auto& sub = F.subfield_elements();
  auto check = [&](const Fq2Elem& A, const Fq2Elem& B, const Fq2Elem& C) {
    ++rep.instances;
    CubicOverFq g{A, B, C};
    bool unique = cubic_has_unique_root(F, g);
    int n = cubic_root_count(F, g);
    if (unique != (n == 1))
      sink.add({{"A", fe(F, A)},
                {"B", fe(F, B)},
                {"C", fe(F, C)},
                {"unique", unique},
                {"root_count", n}});
  };
  if (opts.exhaustive) {
    for (const Fq2Elem& A : sub)
      for (const Fq2Elem& B : sub)
        for (const Fq2Elem& C : sub) check(A, B, C);
  } else {
    Lcg64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.samples; ++i)
      check(sub[rng.below(sub.size())], sub[rng.below(sub.size())],
            sub[rng.below(sub.size())]);
  }
}

}  // namespace

SuiteQReport run_suite(SuiteId id, const FieldCtx& F, const SuiteOptions& opts) {
  SuiteQReport rep;
  rep.suite = suite_name(id);
  rep.field = format_field_spec(F);
  rep.exhaustive = opts.exhaustive && id != SuiteId::Reduction;
  rep.samples = opts.samples;
  rep.seed = opts.seed;
  Sink sink{rep};
  auto t0 = std::chrono::steady_clock::now();
  switch (id) {
    case SuiteId::Gauss: run_gauss(F, opts, rep, sink); break;
    case SuiteId::Charsum: run_charsum(F, opts, rep, sink); break;
    case SuiteId::Kind1Odd: run_kind1(F, opts, false, rep, sink); break;
    case SuiteId::Kind1AnyChar: run_kind1(F, opts, true, rep, sink); break;
    case SuiteId::Kind2: run_kind2(F, opts, rep, sink); break;
    case SuiteId::ThmOdd: run_thm_odd(F, opts, rep, sink); break;
    case SuiteId::ThmEven: run_thm_even(F, opts, rep, sink); break;
    case SuiteId::PropNormOne: run_prop_normone(F, opts, rep, sink); break;
    case SuiteId::PropKind2: run_prop_kind2(F, opts, rep, sink); break;
    case SuiteId::Reduction: run_reduction(F, opts, rep, sink); break;
    case SuiteId::Williams: run_williams(F, opts, rep, sink); break;
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

ordered_json report_record(const SuiteQReport& r) {
  ordered_json rec;
  rec["suite"] = r.suite;
  rec["field"] = r.field;
  rec["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  if (!r.exhaustive) {
    rec["samples"] = r.samples;
    rec["seed"] = r.seed;
  }
  rec["instances"] = r.instances;
  rec["mismatch_count"] = r.mismatch_count;
  rec["mismatches"] = r.mismatches;
  rec["pass"] = r.pass();
  return rec;
}

std::vector<FieldSpec> odd_prime_powers_upto(uint64_t bound) {
  std::vector<FieldSpec> out;
  for (uint64_t q = 3; q <= bound; ++q) {
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    if (p == 2) continue;
    uint64_t t = q;
    uint32_t m = 0;
    while (t % p == 0) {
      t /= p;
      ++m;
    }
    if (t == 1) out.push_back({uint32_t(p), m});
  }
  return out;
}

std::vector<SuiteRun> default_runs(SuiteId id) {
  auto ex = [](uint32_t p, uint32_t m) {
    SuiteRun r{{p, m}, {}};
    r.opts.exhaustive = true;
    return r;
  };
  auto sa = [](uint32_t p, uint32_t m, uint64_t n) {
    SuiteRun r{{p, m}, {}};
    r.opts.exhaustive = false;
    r.opts.samples = n;
    return r;
  };
  std::vector<SuiteRun> runs;
  switch (id) {
    case SuiteId::Gauss:
      for (const FieldSpec& fs : odd_prime_powers_upto(343)) runs.push_back(ex(fs.p, fs.m));
      break;
    case SuiteId::Charsum:
      runs = {ex(3, 1), ex(5, 1), sa(7, 1, 2000), sa(3, 2, 2000)};
      break;
    case SuiteId::Kind1Odd:
      runs = {ex(3, 1), ex(5, 1), sa(7, 1, 2000), sa(3, 2, 2000), sa(11, 1, 2000),
              sa(13, 1, 2000)};
      break;
    case SuiteId::Kind1AnyChar:
      runs = {ex(2, 1), ex(3, 1), ex(2, 2), ex(5, 1), ex(2, 3),
              sa(7, 1, 2000), sa(3, 2, 2000), sa(2, 4, 2000)};
      break;
    case SuiteId::Kind2:
      runs = {ex(3, 1), ex(5, 1), sa(7, 1, 1000), sa(3, 2, 1000), sa(11, 1, 1000),
              sa(13, 1, 1000)};
      break;
    case SuiteId::ThmOdd:
      runs = {ex(3, 1), ex(5, 1), sa(7, 1, 2000), sa(3, 2, 2000)};
      break;
    case SuiteId::ThmEven:
      runs = {ex(2, 1), ex(2, 2), ex(2, 3)};
      break;
    case SuiteId::PropNormOne:
      runs = {ex(3, 1)};
      break;
    case SuiteId::PropKind2:
      runs = {ex(3, 1), ex(5, 1)};
      break;
    case SuiteId::Reduction:
      runs = {sa(3, 1, 500), sa(5, 1, 500), sa(7, 1, 500)};
      break;
    case SuiteId::Williams:
      runs = {ex(2, 1), ex(3, 1), ex(2, 2), ex(5, 1), ex(7, 1), ex(2, 3), ex(3, 2)};
      break;
  }
  return runs;
}

}  // namespace qquad::suites
