#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qquad/field.hpp"
#include "qquad/parse.hpp"
#include "qquad/rng.hpp"

using namespace qquad;

TEST_CASE("context construction for small fields") {
  FieldCtx F3(3, 1);
  CHECK(F3.q() == 3);
  CHECK(F3.q2() == 9);

  FieldCtx F4(2, 2);
  CHECK(F4.q() == 4);
  CHECK(F4.q2() == 16);
  CHECK_FALSE(F4.odd_q());
}

TEST_CASE("modulus for F_49 is the lex-smallest irreducible quadratic") {
  // Independent search: enumerate monic quadratics x^2 + c1 x + c0 over F_7
  // in lex order (c1 major), irreducibility by root search.
  int want_c1 = -1, want_c0 = -1;
  for (int c1 = 0; c1 < 7 && want_c1 < 0; ++c1) {
    for (int c0 = 0; c0 < 7; ++c0) {
      bool has_root = false;
      for (int x = 0; x < 7; ++x)
        if ((x * x + c1 * x + c0) % 7 == 0) has_root = true;
      if (!has_root) {
        want_c1 = c1;
        want_c0 = c0;
        break;
      }
    }
  }
  FieldCtx F(7, 1);
  auto mod = F.modulus();
  REQUIRE(mod.size() == 3);
  CHECK(mod[2] == 1);
  CHECK(mod[1] == want_c1);
  CHECK(mod[0] == want_c0);
}

TEST_CASE("field axioms and inverse") {
  for (auto [p, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    FieldCtx F(p, m);
    for (uint64_t i = 0; i < F.q2(); ++i) {
      Fq2Elem x = F.element_of_index(i);
      CHECK(F.index_of(x) == i);
      if (!x.is_zero()) {
        CHECK(F.mul(x, F.inv(x)) == F.one());
        CHECK(F.pow(x, F.q2() - 1) == F.one());
      }
      CHECK(F.add(x, F.neg(x)) == F.zero());
    }
  }
}

TEST_CASE("inverse of generator in F_9 by group exhaustion") {
  FieldCtx F(3, 1);
  const Fq2Elem g = F.generator();
  // Exhaust the cyclic group for the unique y with g*y = 1.
  Fq2Elem found = F.zero();
  int hits = 0;
  for (uint64_t k = 0; k < F.q2() - 1; ++k) {
    Fq2Elem y = F.pow(g, k);
    if (F.mul(g, y) == F.one()) {
      found = y;
      ++hits;
    }
  }
  CHECK(hits == 1);
  CHECK(F.inv(g) == found);
  CHECK(F.inv(g) == F.pow(g, 7));
}

TEST_CASE("frobenius is the involution fixing exactly F_q") {
  for (auto [p, m] : {std::pair<uint32_t, uint32_t>{3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}}) {
    FieldCtx F(p, m);
    uint64_t fixed = 0;
    for (uint64_t i = 0; i < F.q2(); ++i) {
      Fq2Elem x = F.element_of_index(i);
      CHECK(F.frobenius_q(F.frobenius_q(x)) == x);
      if (F.in_subfield(x)) ++fixed;
      CHECK(F.in_subfield(x) == (F.frobenius_q(x) == x));
    }
    CHECK(fixed == F.q());
    if (F.odd_q()) CHECK(F.frobenius_q(F.epsilon0()) == F.neg(F.epsilon0()));
  }
}

TEST_CASE("epsilon0 has zero trace and lies outside F_q") {
  FieldCtx F(3, 1);
  const Fq2Elem& e = F.epsilon0();
  CHECK_FALSE(e.is_zero());
  CHECK(F.trace(e) == F.zero());
  CHECK_FALSE(F.in_subfield(e));
  CHECK(F.in_subfield(F.zero()));

  FieldCtx F4(2, 2);
  CHECK_THROWS_AS(F4.epsilon0(), Error);
}

TEST_CASE("trace and norm land in F_q, trace additive, norm multiplicative") {
  FieldCtx F(7, 1);  // F_49
  Lcg64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Fq2Elem x = F.element_of_index(rng.below(F.q2()));
    Fq2Elem y = F.element_of_index(rng.below(F.q2()));
    CHECK(F.in_subfield(F.trace(x)));
    CHECK(F.in_subfield(F.norm(x)));
    CHECK(F.trace(F.add(x, y)) == F.add(F.trace(x), F.trace(y)));
    CHECK(F.norm(F.mul(x, y)) == F.mul(F.norm(x), F.norm(y)));
  }
  CHECK(F.trace(F.zero()) == F.zero());
  CHECK(F.norm(F.one()) == F.one());
  // x in F_q with p odd: trace(x) = 2x
  for (const Fq2Elem& u : F.subfield_elements())
    CHECK(F.trace(u) == F.mul_int(u, 2));
}

TEST_CASE("quadratic character") {
  FieldCtx F(3, 1);
  CHECK(F.quadratic_character(F.zero()) == 0);
  CHECK(F.quadratic_character(F.one()) == 1);
  CHECK(F.quadratic_character(F.from_int(2)) == -1);  // squares in F_3 are {0,1}
  CHECK_THROWS_AS(F.quadratic_character(F.epsilon0()), Error);

  FieldCtx F4(2, 2);
  CHECK_THROWS_AS(F4.quadratic_character(F4.one()), Error);

  // Multiplicative on F_q^*, and exactly (q-1)/2 residues.
  for (auto [p, m] : {std::pair<uint32_t, uint32_t>{5, 1}, {3, 2}, {7, 1}}) {
    FieldCtx K(p, m);
    const auto& sub = K.subfield_elements();
    int residues = 0;
    for (const Fq2Elem& u : sub) {
      if (u.is_zero()) continue;
      if (K.quadratic_character(u) == 1) ++residues;
      for (const Fq2Elem& v : sub) {
        if (v.is_zero()) continue;
        CHECK(K.quadratic_character(K.mul(u, v)) ==
              K.quadratic_character(u) * K.quadratic_character(v));
      }
    }
    CHECK(residues == int((K.q() - 1) / 2));
  }
}

TEST_CASE("subfield enumeration is canonical and closed") {
  FieldCtx F(5, 1);
  const auto& sub = F.subfield_elements();
  REQUIRE(sub.size() == 5);
  for (size_t i = 1; i < sub.size(); ++i)
    CHECK(F.index_of(sub[i - 1]) < F.index_of(sub[i]));
  for (const Fq2Elem& u : sub) CHECK(F.in_subfield(u));
}

TEST_CASE("Hilbert 90 solver") {
  FieldCtx F(5, 1);
  CHECK(F.solve_qminus1_power(F.one()) == F.one());

  const Fq2Elem g = F.generator();
  Fq2Elem c = F.pow(g, F.q() - 1);
  Fq2Elem w = F.solve_qminus1_power(c);
  CHECK_FALSE(w.is_zero());
  CHECK(F.pow(w, F.q() - 1) == c);

  // Every norm-1 element of F_25 is solvable, found by brute force.
  int norm1 = 0;
  for (uint64_t i = 1; i < F.q2(); ++i) {
    Fq2Elem x = F.element_of_index(i);
    if (F.norm(x) == F.one()) {
      ++norm1;
      Fq2Elem om = F.solve_qminus1_power(x);
      CHECK_FALSE(om.is_zero());
      CHECK(F.pow(om, F.q() - 1) == x);
    }
  }
  CHECK(norm1 == int(F.q() + 1));

  CHECK_THROWS_AS(F.solve_qminus1_power(F.from_int(2)), Error);  // norm(2)=4 != 1
  try {
    F.solve_qminus1_power(F.from_int(2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NormNotOne);
  }
}

TEST_CASE("construction is deterministic") {
  FieldCtx A(3, 2), B(3, 2);
  CHECK(std::equal(A.modulus().begin(), A.modulus().end(), B.modulus().begin()));
  CHECK(A.generator() == B.generator());
  CHECK(A.epsilon0() == B.epsilon0());
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FieldCtx(6, 1), Error);
  CHECK_THROWS_AS(FieldCtx(1, 1), Error);
  CHECK_THROWS_AS(FieldCtx(2, 17), Error);  // q = 2^17 over the default bound
  CHECK_THROWS_AS(FieldCtx(3, 0), Error);
  try {
    FieldCtx F(6, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  FieldCtx F(3, 1);
  CHECK_THROWS_AS(F.inv(F.zero()), Error);
}

TEST_CASE("field spec and element round trips") {
  auto fs = parse_field_spec("3^2");
  CHECK(fs.p == 3);
  CHECK(fs.m == 2);
  fs = parse_field_spec("9");
  CHECK(fs.p == 3);
  CHECK(fs.m == 2);
  CHECK_THROWS_AS(parse_field_spec("12"), Error);
  CHECK_THROWS_AS(parse_field_spec(""), Error);
  CHECK_THROWS_AS(parse_field_spec("x^2"), Error);

  FieldCtx F(3, 2);
  Lcg64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Fq2Elem x = F.element_of_index(rng.below(F.q2()));
    CHECK(parse_elem(F, format_elem(F, x)) == x);
  }
  CHECK(format_elem(F, F.zero()) == "0,0,0,0");
  CHECK(parse_elem(F, "1") == F.one());  // short lists are zero-padded
  CHECK_THROWS_AS(parse_elem(F, "3"), Error);
  CHECK_THROWS_AS(parse_elem(F, "1,1,1,1,1"), Error);
  auto list = parse_elem_list(F, "1;0,1;2");
  REQUIRE(list.size() == 3);
  CHECK(list[0] == F.one());
}

TEST_CASE("linear solver over F_p") {
  FieldCtx F(3, 1);
  // Columns of the map x -> trace(x): image is F_q, so a non-subfield rhs
  // must be inconsistent.
  std::vector<Fq2Elem> cols;
  for (uint64_t i = 0; i < 2; ++i) {
    Fq2Elem b = F.element_of_index(i == 0 ? 1 : F.p());
    cols.push_back(F.trace(b));
  }
  auto bad = F.solve_linear(cols, F.epsilon0());
  CHECK_FALSE(bad.has_value());
  auto ok = F.solve_linear(cols, F.from_int(2));
  REQUIRE(ok.has_value());
  CHECK(F.trace(*ok) == F.from_int(2));
}
