// Copyright 2026 The qpfaff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <qpfaff/frt.hpp>

using namespace qpfaff;

namespace {

// Swap-conjugation oracle for tensor placement: R13 = P23 R12 P23.
detail::TripleOp swap23(int n) {
  const std::size_t dim = static_cast<std::size_t>(n) * n * n;
  detail::TripleOp p(dim * dim);
  std::array<int, 3> t{};
  for (t[0] = 1; t[0] <= n; ++t[0])
    for (t[1] = 1; t[1] <= n; ++t[1])
      for (t[2] = 1; t[2] <= n; ++t[2]) {
        std::array<int, 3> s = {t[0], t[2], t[1]};
        p[detail::triple_flat(n, t) * dim + detail::triple_flat(n, s)] =
            Laurent::one();
      }
  return p;
}

const Laurent kQ = Laurent::q_power(1);
const Laurent kQDiff = Laurent::q_power(1) - Laurent::q_power(-1);

}  // namespace

TEST_CASE("r-matrix entries for n = 1 and n = 2") {
  RMatrix r1 = build_r_matrix(1);
  CHECK(r1.at(1, 1, 1, 1) == kQ);

  RMatrix r2 = build_r_matrix(2);
  CHECK(r2.at(1, 1, 1, 1) == kQ);
  CHECK(r2.at(1, 2, 1, 2) == Laurent::one());
  CHECK(r2.at(2, 1, 2, 1) == Laurent::one());
  CHECK(r2.at(2, 2, 2, 2) == kQ);
  CHECK(r2.at(2, 1, 1, 2) == kQDiff);
  // exactly five nonzero entries
  int nonzero = 0;
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      for (int j = 1; j <= 2; ++j)
        for (int l = 1; l <= 2; ++l)
          if (!r2.at(i, k, j, l).is_zero()) ++nonzero;
  CHECK(nonzero == 5);
}

TEST_CASE("r-matrix at q=1 is the identity") {
  for (int n : {1, 2, 3}) {
    RMatrix r = build_r_matrix(n);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j)
          for (int l = 1; l <= n; ++l) {
            const Rational v = r.at(i, k, j, l).is_zero()
                                   ? Rational(0)
                                   : r.at(i, k, j, l).eval_at(1);
            CHECK(v == ((i == j && k == l) ? 1 : 0));
          }
  }
}

TEST_CASE("yang-baxter holds for the builtin family") {
  for (int n : {1, 2, 3}) {
    YbeReport rep = check_ybe(build_r_matrix(n));
    CHECK(rep.ok);
  }
}

TEST_CASE("yang-baxter holds trivially for the identity matrix") {
  for (int n : {2, 3}) CHECK(check_ybe(identity_r_matrix(n)).ok);
}

TEST_CASE("a perturbed matrix fails yang-baxter with a witness") {
  RMatrix r = build_r_matrix(2);
  r.at(1, 2, 1, 2) += Laurent::q_power(5);
  YbeReport rep = check_ybe(r);
  CHECK_FALSE(rep.ok);
  CHECK(rep.lhs != rep.rhs);
}

TEST_CASE("explicit placement matches the swap-conjugation oracle") {
  for (int n : {2, 3}) {
    RMatrix r = build_r_matrix(n);
    const std::size_t dim = static_cast<std::size_t>(n) * n * n;
    auto direct = detail::place_on_slots(r, 0, 2);
    auto p23 = swap23(n);
    auto conjugated = detail::triple_mul(
        detail::triple_mul(p23, detail::place_on_slots(r, 0, 1), dim), p23, dim);
    CHECK(direct == conjugated);
  }
}

TEST_CASE("rtt entry equations: counts for n = 2") {
  RMatrix r = build_r_matrix(2);
  auto eqs = rtt_entry_equations(r);
  CHECK(eqs.size() == 16);
  int nontrivial = 0;
  for (const auto& e : eqs)
    if (!e.is_zero()) ++nontrivial;
  CHECK(nontrivial == 12);
}

TEST_CASE("rtt extraction for n = 1 is empty") {
  CHECK(extract_rtt_relations(build_r_matrix(1)).empty());
}

TEST_CASE("rtt extraction for n = 2 gives the six quantum-matrix relations") {
  auto rels = extract_rtt_relations(build_r_matrix(2));
  REQUIRE(rels.size() == 6);
  // t11=0 t12=1 t21=2 t22=3
  std::map<Word, NCPolynomial> by_lhs;
  for (const auto& rel : rels) {
    REQUIRE(rel.lhs.term_count() == 1);
    CHECK(rel.lhs.terms().begin()->second == Laurent::one());
    by_lhs[rel.lhs.terms().begin()->first] = rel.rhs;
  }
  auto expect = [&](Word lhs, NCPolynomial rhs) {
    REQUIRE(by_lhs.count(lhs) == 1);
    CHECK(by_lhs[lhs] == rhs);
  };
  expect({0, 1}, NCPolynomial::term({1, 0}, kQ));
  expect({0, 2}, NCPolynomial::term({2, 0}, kQ));
  expect({1, 3}, NCPolynomial::term({3, 1}, kQ));
  expect({2, 3}, NCPolynomial::term({3, 2}, kQ));
  expect({1, 2}, NCPolynomial::term({2, 1}, Laurent::one()));
  expect({0, 3}, NCPolynomial::term({3, 0}, Laurent::one()) +
                     NCPolynomial::term({2, 1}, kQDiff));
}

TEST_CASE("back-substitution: every entry equation reduces to zero") {
  RMatrix r = build_r_matrix(2);
  AlgebraPresentation pres = quantum_matrix_presentation(2);
  for (const auto& eq : rtt_entry_equations(r)) {
    CHECK(normal_form(eq, pres).is_zero());
  }
}

TEST_CASE("round-trip soundness of the oriented presentation") {
  auto rels = extract_rtt_relations(build_r_matrix(2));
  AlgebraPresentation pres =
      presentation_from_relations(rels, "round-trip", t_alphabet(2));
  for (const auto& rel : rels)
    CHECK(normal_form(rel.lhs, pres) == normal_form(rel.rhs, pres));
}

TEST_CASE("empty relation set yields a free presentation") {
  AlgebraPresentation pres =
      presentation_from_relations({}, "free-1", {"t"});
  CHECK(pres.rules().empty());
  // t * t needs no rule
  CHECK(normal_form(NCPolynomial::term({0, 0}, Laurent::one()), pres) ==
        NCPolynomial::term({0, 0}, Laurent::one()));
}

TEST_CASE("contradictory relations are not orientable") {
  // a b = b a together with b a = 2 a b
  QuadraticRelation r1{NCPolynomial::term({0, 1}, Laurent::one()),
                       NCPolynomial::term({1, 0}, Laurent::one())};
  QuadraticRelation r2{NCPolynomial::term({1, 0}, Laurent::one()),
                       NCPolynomial::term({0, 1}, Laurent(2))};
  CHECK_THROWS_AS(presentation_from_relations({r1, r2}, "cyclic", {"a", "b"}),
                  NotOrientable);
}

TEST_CASE("relations that do not decrease are not orientable") {
  // a a = a b cannot be turned into a pair rule
  QuadraticRelation bad{NCPolynomial::term({0, 0}, Laurent::one()),
                        NCPolynomial::term({0, 1}, Laurent::one())};
  CHECK_THROWS_AS(presentation_from_relations({bad}, "bad", {"a", "b"}),
                  NotOrientable);
}

TEST_CASE("quantum determinant is central for n = 2") {
  CHECK(check_detq_central(2));
  CHECK_THROWS_AS(check_detq_central(3), DomainError);
}

TEST_CASE("the q-less determinant is not central (negative control)") {
  AlgebraPresentation pres = quantum_matrix_presentation(2);
  NCPolynomial wrong =
      normal_form(NCPolynomial::term({0, 3}, Laurent::one()) -
                      NCPolynomial::term({1, 2}, Laurent::one()),
                  pres);
  CHECK_FALSE(is_central(wrong, pres));
}

TEST_CASE("centrality is trivial in the commutative specialization") {
  AlgebraPresentation pres = quantum_matrix_presentation(2).specialize(1);
  NCPolynomial d = quantum_matrix_determinant(pres, 2);
  CHECK(is_central(d, pres));
}

TEST_CASE("at q=1 the extracted relations are plain commutators") {
  for (const auto& rel : extract_rtt_relations(build_r_matrix(2))) {
    NCPolynomial diff = rel.lhs - rel.rhs;
    NCPolynomial at1 = specialize_q(diff, 1);
    // lhs word (a,b) and rhs word (b,a) with coefficients +1/-1
    REQUIRE(at1.term_count() == 2);
    for (const auto& [w, c] : at1.terms()) {
      (void)w;
      CHECK((c == Laurent::one() || c == Laurent(-1)));
    }
  }
}

TEST_CASE("triplet text format round-trips") {
  for (int n : {1, 2, 3}) {
    RMatrix r = build_r_matrix(n);
    std::string text = print_r_matrix(r);
    RMatrix back = parse_r_matrix(text);
    CHECK(back == r);
    CHECK(print_r_matrix(back) == text);
  }
  CHECK_THROWS_AS(parse_r_matrix("1,1 1,1 q"), ParseError);
  CHECK_THROWS_AS(parse_r_matrix("n 2\nx,1 1,1 q"), ParseError);
}
