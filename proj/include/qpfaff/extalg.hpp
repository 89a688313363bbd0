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

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qpfaff/qlinalg.hpp"

namespace qpfaff {

/// Strictly increasing tuple of v-indices: the canonical basis of the
/// q-exterior algebra.
using IndexTuple = std::vector<int>;

/// Graded element of the q-exterior algebra on v_1..v_2n with polynomial
/// coefficients from the matrix-entry algebra. Matrix entries commute with
/// the v generators (two-sided centrality) -- an axiom of this
/// implementation, without which products of 2-forms would be ill-defined.
class WedgeElement {
public:
  WedgeElement() = default;

  static WedgeElement zero() { return {}; }

  static WedgeElement term(IndexTuple t, NCPolynomial coef) {
    WedgeElement w;
    w.add_term(std::move(t), std::move(coef));
    return w;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexTuple, NCPolynomial>& terms() const { return terms_; }

  NCPolynomial coefficient(const IndexTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? NCPolynomial::zero() : it->second;
  }

  void add_term(IndexTuple t, NCPolynomial coef) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] >= t[i + 1])
        throw DomainError("wedge basis tuples must be strictly increasing");
    if (coef.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(std::move(t), std::move(coef));
    } else {
      it->second = it->second + coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend WedgeElement operator+(const WedgeElement& a, const WedgeElement& b) {
    WedgeElement r = a;
    for (const auto& [t, c] : b.terms_) r.add_merge(t, c);
    return r;
  }

private:
  void add_merge(const IndexTuple& t, const NCPolynomial& c) {
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  std::map<IndexTuple, NCPolynomial> terms_;
};

/// Sorts a concatenated tuple to strictly increasing form, accumulating a
/// factor (-q) per adjacent transposition; tuples with a repeated index
/// vanish. Returns absent on repeats, else (sorted tuple, (-q)^swaps).
inline std::optional<std::pair<IndexTuple, Laurent>> sort_tuple(IndexTuple t) {
  int swaps = 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    for (std::size_t j = 0; j + 1 < t.size() - i; ++j) {
      if (t[j] == t[j + 1]) return std::nullopt;
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        ++swaps;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return std::nullopt;
  return std::make_pair(std::move(t),
                        Laurent::monomial(swaps % 2 == 0 ? 1 : -1, swaps));
}

/// q-wedge product: concatenate tuples, sort with the (-q)-per-swap rule,
/// multiply coefficients through the entry algebra.
inline WedgeElement wedge_mul(const WedgeElement& a, const WedgeElement& b,
                              const AlgebraPresentation& pres,
                              Strategy strategy = Strategy::leftmost) {
  WedgeElement out;
  for (const auto& [t1, c1] : a.terms()) {
    for (const auto& [t2, c2] : b.terms()) {
      IndexTuple t = t1;
      t.insert(t.end(), t2.begin(), t2.end());
      auto sorted = sort_tuple(std::move(t));
      if (!sorted) continue;
      NCPolynomial coef = sorted->second * nc_mul(c1, c2, pres, strategy);
      out.add_term(std::move(sorted->first), std::move(coef));
    }
  }
  return out;
}

/// The quantum 2-form of a q-skew matrix: sum over i < j of a_ij v_i ^ v_j.
inline WedgeElement omega_from_matrix(const SkewMatrixSym& a) {
  if (a.dim() % 2 != 0) throw DomainError("omega needs even dimension");
  WedgeElement w;
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = i + 1; j <= a.dim(); ++j)
      w.add_term(IndexTuple{i, j}, NCPolynomial::generator(a.slot(i, j)));
  return w;
}

struct WedgeTopResult {
  NCPolynomial top;                       // coefficient of v_1 ^ ... ^ v_2n
  std::optional<Laurent> ratio_to_matching_pf;  // s(q) with top = s(q) Pf_q, if any
};

/// True iff num == s * den for a single Laurent scalar s; returns s.
/// Exact division of Laurent polynomials (test-free helper used by the
/// ratio probe; remainder must vanish).
inline std::optional<Laurent> laurent_ratio(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return Laurent::zero();
  // long division by the highest term of den
  Laurent quotient;
  Laurent rem = num;
  const int dtop = den.max_exponent();
  const Rational dlead = den.coefficient(dtop);
  // bound the number of steps by the exponent span
  for (int guard = 0; !rem.is_zero() && guard < 4096; ++guard) {
    const int rtop = rem.max_exponent();
    const Laurent piece = Laurent::monomial(rem.coefficient(rtop) / dlead, rtop - dtop);
    quotient += piece;
    rem -= piece * den;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

/// Computes omega^n by a left fold of wedge_mul and extracts the top
/// coefficient. If the top equals s(q) * Pf_q (matching-sum version) for a
/// pure scalar s(q), that ratio is returned; classically (q = 1) the ratio
/// is n!, a factor the wedge route genuinely carries.
inline WedgeTopResult wedge_power_top(const SkewMatrixSym& a,
                                      Strategy strategy = Strategy::leftmost) {
  if (a.dim() % 2 != 0) throw DomainError("wedge power needs even dimension");
  const int n = a.dim() / 2;
  WedgeElement omega = omega_from_matrix(a);
  WedgeElement acc = omega;
  for (int k = 1; k < n; ++k) acc = wedge_mul(acc, omega, a.presentation(), strategy);
  IndexTuple vol;
  for (int i = 1; i <= a.dim(); ++i) vol.push_back(i);
  WedgeTopResult result;
  result.top = acc.coefficient(vol);
  if (result.top.is_zero())
    throw DegenerateInput("top wedge coefficient is zero");

  NCPolynomial pf = quantum_pfaffian(a, strategy);
  // top = s * pf needs identical word support and one common coefficient ratio
  if (pf.term_count() == result.top.term_count()) {
    std::optional<Laurent> common;
    bool ok = true;
    for (const auto& [w, c] : result.top.terms()) {
      Laurent pc = pf.coefficient(w);
      auto r = laurent_ratio(c, pc);
      if (!r) {
        ok = false;
        break;
      }
      if (!common) {
        common = r;
      } else if (!(*common == *r)) {
        ok = false;
        break;
      }
    }
    if (ok && common) result.ratio_to_matching_pf = *common;
  }
  return result;
}

/// Same probe after specializing both routes at q := q0; the returned
/// ratio is a rational constant when proportionality holds.
inline std::optional<Rational> wedge_ratio_at(const SkewMatrixSym& a,
                                              const Rational& q0,
                                              Strategy strategy = Strategy::leftmost) {
  WedgeTopResult tr = wedge_power_top(a, strategy);
  NCPolynomial top1 = specialize_q(tr.top, q0);
  NCPolynomial pf1 = specialize_q(quantum_pfaffian(a, strategy), q0);
  if (top1.term_count() != pf1.term_count() || pf1.is_zero()) return std::nullopt;
  std::optional<Rational> common;
  for (const auto& [w, c] : top1.terms()) {
    Laurent pc = pf1.coefficient(w);
    if (pc.is_zero()) return std::nullopt;
    auto cv = c.as_q_power();
    auto pv = pc.as_q_power();
    if (!cv || !pv || cv->second != 0 || pv->second != 0) return std::nullopt;
    Rational r = cv->first / pv->first;
    if (!common)
      common = r;
    else if (*common != r)
      return std::nullopt;
  }
  return common;
}

}  // namespace qpfaff
