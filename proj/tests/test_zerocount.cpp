#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qquad/rng.hpp"
#include "qquad/zerocount.hpp"

using namespace qquad;

namespace {

QQuadPoly kind1(const FieldCtx& F, const Fq2Elem& a, const Fq2Elem& b, const Fq2Elem& c) {
  return {1, F.zero(), F.one(), a, b, c};
}

QQuadPoly kind2_poly(const FieldCtx& F, const Fq2Elem& beta, const Fq2Elem& a,
                     const Fq2Elem& b, const Fq2Elem& c) {
  return {0, F.neg(F.frobenius_q(beta)), beta, a, b, c};
}

}  // namespace

TEST_CASE("brute-force oracle basics") {
  FieldCtx F(3, 1);
  // the map x
  QQuadPoly ident{0, F.zero(), F.zero(), F.zero(), F.one(), F.zero()};
  CHECK(count_zeros_bruteforce(F, ident).count == 1);
  // nonzero constant
  QQuadPoly cst{0, F.zero(), F.zero(), F.zero(), F.zero(), F.one()};
  CHECK(count_zeros_bruteforce(F, cst).count == 0);

  // x^{q+1} + x^2 at q=3: count every point by an independent loop.
  QQuadPoly g = kind1(F, F.zero(), F.zero(), F.zero());
  int64_t direct = 0;
  for (uint64_t i = 0; i < F.q2(); ++i) {
    Fq2Elem x = F.element_of_index(i);
    if (F.add(F.pow(x, F.q() + 1), F.pow(x, 2)).is_zero()) ++direct;
  }
  CHECK(direct == 3);
  CHECK(count_zeros_bruteforce(F, g).count == direct);
}

TEST_CASE("cubic discriminant") {
  FieldCtx F5(5, 1);
  CubicOverFq x3{F5.zero(), F5.zero(), F5.zero()};
  CHECK(cubic_discriminant(F5, x3).is_zero());
  // x^3 - x over F_5: D = -4*(-1)^3 = 4
  CubicOverFq g{F5.zero(), F5.from_int(-1), F5.zero()};
  CHECK(cubic_discriminant(F5, g) == F5.from_int(4));

  // any cubic with a repeated root has zero discriminant:
  // (x-r)^2 (x-s) = x^3 - (2r+s) x^2 + (r^2 + 2rs) x - r^2 s
  for (auto [p, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {7, 1}}) {
    FieldCtx F(p, m);
    for (const Fq2Elem& r : F.subfield_elements()) {
      for (const Fq2Elem& s : F.subfield_elements()) {
        CubicOverFq h{F.neg(F.add(F.mul_int(r, 2), s)),
                      F.add(F.mul(r, r), F.mul_int(F.mul(r, s), 2)),
                      F.neg(F.mul(F.mul(r, r), s))};
        CHECK(cubic_discriminant(F, h).is_zero());
        CHECK(cubic_root_count(F, h) == (r == s ? 1 : 2));
      }
    }
  }
}

TEST_CASE("cubic root counting") {
  FieldCtx F5(5, 1);
  CHECK(cubic_root_count(F5, {F5.zero(), F5.from_int(-1), F5.zero()}) == 3);  // x^3-x
  CHECK(cubic_root_count(F5, {F5.zero(), F5.zero(), F5.zero()}) == 1);        // x^3

  // x^3 - 3 over F_7: 3 is not a cube (cubes are {0,1,6}); derived by loop.
  FieldCtx F7(7, 1);
  CubicOverFq g{F7.zero(), F7.zero(), F7.from_int(-3)};
  int64_t direct = 0;
  for (const Fq2Elem& u : F7.subfield_elements())
    if (F7.pow(u, 3) == F7.from_int(3)) ++direct;
  CHECK(direct == 0);
  CHECK(cubic_root_count(F7, g) == 0);
}

TEST_CASE("Artin-Schreier irreducibility test") {
  FieldCtx F2(2, 1);
  CHECK_FALSE(quad_irreducible_artin_schreier(F2, F2.zero()));  // x^2+x = x(x+1)
  CHECK(quad_irreducible_artin_schreier(F2, F2.one()));         // x^2+x+1

  FieldCtx F4(2, 2);
  for (const Fq2Elem& cbar : F4.subfield_elements()) {
    bool has_root = false;
    for (const Fq2Elem& u : F4.subfield_elements())
      if (F4.add(F4.add(F4.mul(u, u), u), cbar).is_zero()) has_root = true;
    CHECK(quad_irreducible_artin_schreier(F4, cbar) == !has_root);
  }

  FieldCtx F3(3, 1);
  CHECK_THROWS_AS(quad_irreducible_artin_schreier(F3, F3.one()), Error);
}

TEST_CASE("unique-root criterion agrees with counting") {
  for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    FieldCtx F(p, m);
    const auto& sub = F.subfield_elements();
    for (const Fq2Elem& A : sub)
      for (const Fq2Elem& B : sub)
        for (const Fq2Elem& C : sub) {
          CubicOverFq g{A, B, C};
          CHECK(cubic_has_unique_root(F, g) == (cubic_root_count(F, g) == 1));
        }
  }
}

TEST_CASE("kind-1 odd-q closed form") {
  FieldCtx F(3, 1);
  SUBCASE("a=b=c=0 gives q zeros") {
    auto r = count_zeros_kind1_oddq(F, F.zero(), F.zero(), F.zero());
    CHECK(r.count == 3);
    CHECK(r.method == CountMethod::PropN1Eta);
    CHECK(r.m0 == 3);
    CHECK(r.eta_val == 0);
  }
  SUBCASE("cubic branch when a^q + b is outside F_q") {
    Fq2Elem a = F.epsilon0(), b = F.zero(), c = F.one();
    REQUIRE_FALSE(F.in_subfield(F.add(F.frobenius_q(a), b)));
    auto r = count_zeros_kind1_oddq(F, a, b, c);
    CHECK(r.method == CountMethod::PropN1Cubic);
    CHECK(r.count == cubic_root_count(F, r.cubic));
    CHECK(r.count == count_zeros_bruteforce(F, kind1(F, a, b, c)).count);
  }
  SUBCASE("exhaustive q=3 cross-check") {
    for (uint64_t ai = 0; ai < F.q2(); ++ai)
      for (uint64_t bi = 0; bi < F.q2(); ++bi)
        for (uint64_t ci = 0; ci < F.q2(); ++ci) {
          Fq2Elem a = F.element_of_index(ai), b = F.element_of_index(bi),
                  c = F.element_of_index(ci);
          auto closed = count_zeros_kind1_oddq(F, a, b, c);
          auto oracle = count_zeros_bruteforce(F, kind1(F, a, b, c));
          CHECK(closed.count == oracle.count);
          CHECK(closed.count >= 0);
        }
  }
  FieldCtx F4(2, 2);
  CHECK_THROWS_AS(count_zeros_kind1_oddq(F4, F4.zero(), F4.zero(), F4.zero()), Error);
}

TEST_CASE("kind-1 any-characteristic closed form") {
  SUBCASE("a=b=c=0 gives q zeros in every characteristic") {
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
      FieldCtx F(p, m);
      auto r = count_zeros_kind1_anychar(F, F.zero(), F.zero(), F.zero());
      CHECK(r.count == int64_t(F.q()));
      CHECK(r.method == CountMethod::AnyCharDirect);
    }
  }
  SUBCASE("exhaustive cross-check at q=3 and q=4") {
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {2, 2}}) {
      FieldCtx F(p, m);
      for (uint64_t ai = 0; ai < F.q2(); ++ai)
        for (uint64_t bi = 0; bi < F.q2(); ++bi)
          for (uint64_t ci = 0; ci < F.q2(); ++ci) {
            Fq2Elem a = F.element_of_index(ai), b = F.element_of_index(bi),
                    c = F.element_of_index(ci);
            auto closed = count_zeros_kind1_anychar(F, a, b, c);
            auto oracle = count_zeros_bruteforce(F, kind1(F, a, b, c));
            CHECK(closed.count == oracle.count);
            if (F.odd_q())
              CHECK(closed.count == count_zeros_kind1_oddq(F, a, b, c).count);
          }
    }
  }
}

TEST_CASE("kind-2 closed form") {
  FieldCtx F(3, 1);
  SUBCASE("a^q + b = 0 with Tr(c) != 0 means no zeros") {
    Fq2Elem a = F.generator();
    Fq2Elem b = F.neg(F.frobenius_q(a));
    Fq2Elem c = F.one();  // Tr(1) = 2 != 0
    REQUIRE_FALSE(F.trace(c).is_zero());
    auto r = count_zeros_kind2(F, F.one(), a, b, c);
    CHECK(r.count == 0);
    CHECK(count_zeros_bruteforce(F, kind2_poly(F, F.one(), a, b, c)).count == 0);
  }
  SUBCASE("q=3 exhaustive with b = -a^q forced and free c") {
    for (uint64_t beti = 1; beti < F.q2(); ++beti)
      for (uint64_t ai = 0; ai < F.q2(); ++ai)
        for (uint64_t ci = 0; ci < F.q2(); ++ci) {
          Fq2Elem beta = F.element_of_index(beti), a = F.element_of_index(ai),
                  c = F.element_of_index(ci);
          Fq2Elem b = F.neg(F.frobenius_q(a));
          auto closed = count_zeros_kind2(F, beta, a, b, c);
          auto oracle = count_zeros_bruteforce(F, kind2_poly(F, beta, a, b, c));
          CHECK(closed.count == oracle.count);
        }
  }
  SUBCASE("q=5 sampled cross-check") {
    FieldCtx K(5, 1);
    Lcg64 rng(5);
    for (int t = 0; t < 500; ++t) {
      Fq2Elem beta = K.element_of_index(1 + rng.below(K.q2() - 1));
      Fq2Elem a = K.element_of_index(rng.below(K.q2()));
      Fq2Elem b = K.element_of_index(rng.below(K.q2()));
      Fq2Elem c = K.element_of_index(rng.below(K.q2()));
      auto closed = count_zeros_kind2(K, beta, a, b, c);
      auto oracle = count_zeros_bruteforce(K, kind2_poly(K, beta, a, b, c));
      CHECK(closed.count == oracle.count);
    }
  }
  CHECK_THROWS_AS(count_zeros_kind2(F, F.zero(), F.one(), F.one(), F.one()), Error);
  FieldCtx F4(2, 2);
  CHECK_THROWS_AS(count_zeros_kind2(F4, F4.one(), F4.zero(), F4.zero(), F4.zero()),
                  Error);
}

TEST_CASE("kind-2 general reduction") {
  FieldCtx F(3, 1);
  SUBCASE("alpha = -beta^q delegates with omega = 1") {
    Fq2Elem beta = F.generator();
    Fq2Elem alpha = F.neg(F.frobenius_q(beta));
    Fq2Elem a = F.one(), b = F.epsilon0(), c = F.from_int(2);
    auto r = count_zeros_kind2_general(F, alpha, beta, a, b, c);
    CHECK(r.omega == F.one());
    CHECK(r.count == count_zeros_kind2(F, beta, a, b, c).count);
  }
  SUBCASE("twisted alpha matches the oracle on sampled coefficients") {
    Fq2Elem g = F.generator();
    Fq2Elem twist = F.pow(g, F.q() - 1);
    Lcg64 rng(99);
    for (int t = 0; t < 200; ++t) {
      Fq2Elem beta = F.element_of_index(1 + rng.below(F.q2() - 1));
      Fq2Elem alpha = F.mul(F.neg(F.frobenius_q(beta)), twist);
      REQUIRE(F.norm(alpha) == F.norm(beta));
      Fq2Elem a = F.element_of_index(rng.below(F.q2()));
      Fq2Elem b = F.element_of_index(rng.below(F.q2()));
      Fq2Elem c = F.element_of_index(rng.below(F.q2()));
      auto closed = count_zeros_kind2_general(F, alpha, beta, a, b, c);
      QQuadPoly g2{0, alpha, beta, a, b, c};
      CHECK(closed.count == count_zeros_bruteforce(F, g2).count);
    }
  }
  SUBCASE("norm mismatch is rejected") {
    Fq2Elem beta = F.one();
    Fq2Elem alpha = F.generator();  // N(g) generates F_q^*, != 1
    REQUIRE_FALSE(F.norm(alpha) == F.norm(beta));
    CHECK_THROWS_AS(count_zeros_kind2_general(F, alpha, beta, F.one(), F.one(), F.one()),
                    Error);
    try {
      count_zeros_kind2_general(F, alpha, beta, F.one(), F.one(), F.one());
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NormMismatch);
    }
  }
}

TEST_CASE("count sum over c is q^2 for fixed (a,b)") {
  FieldCtx F(3, 1);
  // each x contributes to exactly one c, so counts across c partition F_{q^2}
  for (auto [ai, bi] : {std::pair<uint64_t, uint64_t>{0, 0}, {4, 7}, {3, 1}, {5, 5}}) {
    Fq2Elem a = F.element_of_index(ai), b = F.element_of_index(bi);
    int64_t total = 0;
    for (uint64_t ci = 0; ci < F.q2(); ++ci)
      total += count_zeros_kind1_oddq(F, a, b, F.element_of_index(ci)).count;
    CHECK(total == int64_t(F.q2()));
  }
}

TEST_CASE("zero count is invariant under bijective linear substitution") {
  FieldCtx F(3, 1);
  Lcg64 rng(17);
  int tested = 0;
  while (tested < 50) {
    Fq2Elem c0 = F.element_of_index(rng.below(F.q2()));
    Fq2Elem c1 = F.element_of_index(rng.below(F.q2()));
    if (F.norm(c0) == F.norm(c1)) continue;  // need L bijective
    QQuadPoly g = kind1(F, F.element_of_index(rng.below(F.q2())),
                        F.element_of_index(rng.below(F.q2())),
                        F.element_of_index(rng.below(F.q2())));
    int64_t base = count_zeros_bruteforce(F, g).count;
    int64_t composed = 0;
    for (uint64_t i = 0; i < F.q2(); ++i) {
      Fq2Elem x = F.element_of_index(i);
      Fq2Elem lx = F.add(F.mul(c1, F.frobenius_q(x)), F.mul(c0, x));
      if (eval_qquad(F, g, lx).is_zero()) ++composed;
    }
    CHECK(base == composed);
    ++tested;
  }
}
