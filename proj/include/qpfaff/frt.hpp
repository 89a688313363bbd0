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

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qpfaff/ncpoly.hpp"

namespace qpfaff {

// ---------------------------------------------------------------------------
// R-matrices on C^n (x) C^n over exact Laurent scalars.
//
// Composite index convention: row (i,k) means first tensor factor i, second
// factor k, laid out first-factor-major as (i-1)*n + (k-1). E_ij (x) E_kl
// then has its single nonzero entry at row (i,k), column (j,l).
// ---------------------------------------------------------------------------

class RMatrix {
public:
  explicit RMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n * n * n) {
    if (n < 1) throw DomainError("R-matrix needs n >= 1");
  }

  int n() const { return n_; }
  int side() const { return n_ * n_; }

  Laurent& at(int row_i, int row_k, int col_j, int col_l) {
    return entries_[flat(row_i, row_k, col_j, col_l)];
  }
  const Laurent& at(int row_i, int row_k, int col_j, int col_l) const {
    return entries_[flat(row_i, row_k, col_j, col_l)];
  }

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  std::size_t flat(int i, int k, int j, int l) const {
    auto check = [&](int v) {
      if (v < 1 || v > n_) throw DomainError("tensor index out of range");
    };
    check(i); check(k); check(j); check(l);
    const std::size_t row = static_cast<std::size_t>(i - 1) * n_ + (k - 1);
    const std::size_t col = static_cast<std::size_t>(j - 1) * n_ + (l - 1);
    return row * side() + col;
  }
  int n_;
  std::vector<Laurent> entries_;
};

/// The standard one-parameter R-matrix family:
///   q on the (ii,ii) diagonal, 1 on the mixed (ik,ik) diagonal, and a
///   (q - q^-1) block below the diagonal at row (i,k), column (k,i) for
///   i > k. This is the reading of the textbook three-sum formula whose
///   RTT relations are the standard quantum-matrix ones (the mirrored
///   placement produces the q <-> q^-1 algebra instead).
inline RMatrix build_r_matrix(int n) {
  RMatrix r(n);
  const Laurent q = Laurent::q_power(1);
  const Laurent qdiff = Laurent::q_power(1) - Laurent::q_power(-1);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      r.at(i, k, i, k) = (i == k) ? q : Laurent::one();
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k < i; ++k)
      r.at(i, k, k, i) = qdiff;
  return r;
}

inline RMatrix identity_r_matrix(int n) {
  RMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) r.at(i, k, i, k) = Laurent::one();
  return r;
}

// ---------------------------------------------------------------------------
// Yang-Baxter check on the three-site space, exact.
// ---------------------------------------------------------------------------

struct YbeReport {
  bool ok = true;
  // witness entry on mismatch: (row triple, col triple, lhs value, rhs value)
  std::array<int, 3> row{};
  std::array<int, 3> col{};
  Laurent lhs, rhs;
};

namespace detail {

/// Dense operator on the n^3-dimensional triple space.
using TripleOp = std::vector<Laurent>;

inline std::size_t triple_flat(int n, const std::array<int, 3>& t) {
  return (static_cast<std::size_t>(t[0] - 1) * n + (t[1] - 1)) * n + (t[2] - 1);
}

/// Places R on tensor slots (s1, s2) of the triple space by explicit index
/// bookkeeping (no swap conjugation).
inline TripleOp place_on_slots(const RMatrix& r, int s1, int s2) {
  const int n = r.n();
  const std::size_t dim = static_cast<std::size_t>(n) * n * n;
  TripleOp op(dim * dim);
  std::array<int, 3> row{}, col{};
  for (row[0] = 1; row[0] <= n; ++row[0])
    for (row[1] = 1; row[1] <= n; ++row[1])
      for (row[2] = 1; row[2] <= n; ++row[2])
        for (col[0] = 1; col[0] <= n; ++col[0])
          for (col[1] = 1; col[1] <= n; ++col[1])
            for (col[2] = 1; col[2] <= n; ++col[2]) {
              bool spectator_ok = true;
              for (int s = 0; s < 3; ++s)
                if (s != s1 && s != s2 && row[s] != col[s]) spectator_ok = false;
              if (!spectator_ok) continue;
              const Laurent& v = r.at(row[s1], row[s2], col[s1], col[s2]);
              if (v.is_zero()) continue;
              op[triple_flat(n, row) * dim + triple_flat(n, col)] = v;
            }
  return op;
}

inline TripleOp triple_mul(const TripleOp& a, const TripleOp& b, std::size_t dim) {
  TripleOp out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      const Laurent& av = a[i * dim + k];
      if (av.is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        const Laurent& bv = b[k * dim + j];
        if (bv.is_zero()) continue;
        out[i * dim + j] += av * bv;
      }
    }
  return out;
}

}  // namespace detail

/// Verifies R12 R13 R23 = R23 R13 R12 entry-exactly over Laurent scalars.
inline YbeReport check_ybe(const RMatrix& r) {
  const int n = r.n();
  const std::size_t dim = static_cast<std::size_t>(n) * n * n;
  auto r12 = detail::place_on_slots(r, 0, 1);
  auto r13 = detail::place_on_slots(r, 0, 2);
  auto r23 = detail::place_on_slots(r, 1, 2);
  auto lhs = detail::triple_mul(detail::triple_mul(r12, r13, dim), r23, dim);
  auto rhs = detail::triple_mul(detail::triple_mul(r23, r13, dim), r12, dim);
  YbeReport rep;
  for (std::size_t i = 0; i < dim && rep.ok; ++i)
    for (std::size_t j = 0; j < dim && rep.ok; ++j)
      if (lhs[i * dim + j] != rhs[i * dim + j]) {
        rep.ok = false;
        std::size_t ri = i, ci = j;
        rep.row = {static_cast<int>(ri / (n * n)) + 1,
                   static_cast<int>((ri / n) % n) + 1,
                   static_cast<int>(ri % n) + 1};
        rep.col = {static_cast<int>(ci / (n * n)) + 1,
                   static_cast<int>((ci / n) % n) + 1,
                   static_cast<int>(ci % n) + 1};
        rep.lhs = lhs[i * dim + j];
        rep.rhs = rhs[i * dim + j];
      }
  return rep;
}

// ---------------------------------------------------------------------------
// RTT relations: R T1 T2 = T2 T1 R equated entrywise on the n^2 x n^2 space
// gives quadratic relations among the t_ij.
// ---------------------------------------------------------------------------

/// Quadratic relation lhs = rhs in the t_ij generators, normalized so that
/// lhs is the term-order-leading word with unit coefficient.
struct QuadraticRelation {
  NCPolynomial lhs;
  NCPolynomial rhs;
};

inline std::vector<std::string> t_alphabet(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      labels.push_back("t" + std::to_string(i) + std::to_string(j));
  return labels;
}

/// All n^4 entry equations of R T1 T2 - T2 T1 R as raw polynomials in the
/// free t algebra (zero entries included, so callers can count them).
inline std::vector<NCPolynomial> rtt_entry_equations(const RMatrix& r) {
  const int n = r.n();
  auto t = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  std::vector<NCPolynomial> eqs;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = 1; l <= n; ++l) {
          NCPolynomial diff;
          // (R T1 T2)[(i,k),(j,l)] = sum_{a,b} R[(i,k),(a,b)] t_{aj} t_{bl}
          for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
              const Laurent& v = r.at(i, k, a, b);
              if (!v.is_zero()) diff.add_term(Word{t(a, j), t(b, l)}, v);
            }
          // (T2 T1 R)[(i,k),(j,l)] = sum_{a,b} t_{kb} t_{ia} R[(a,b),(j,l)]
          for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
              const Laurent& v = r.at(a, b, j, l);
              if (!v.is_zero()) diff.add_term(Word{t(k, b), t(i, a)}, -v);
            }
          eqs.push_back(std::move(diff));
        }
  return eqs;
}

namespace detail {

inline const Word& leading_word(const NCPolynomial& p) {
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms()) {
    (void)c;
    if (!best || word_less(*best, w)) best = &w;
  }
  return *best;
}

/// Orients one relation polynomial into a candidate rewrite rule: the
/// leading word must be an ascending two-letter pair; everything else,
/// negated, becomes the right side.
inline RewriteRule orient(const NCPolynomial& diff,
                          const AlgebraPresentation& p) {
  const Word& lead = leading_word(diff);
  if (lead.size() != 2 || lead[0] >= lead[1])
    throw NotOrientable("leading word '" + p.word_string(lead) +
                        "' is not an ascending generator pair");
  auto mono = diff.coefficient(lead).as_q_power();
  if (!mono)
    throw NotOrientable("leading coefficient of '" + p.word_string(lead) +
                        "' relation is not invertible");
  const Laurent inv = Laurent::monomial(Rational(1) / mono->first, -mono->second);
  RewriteRule rule;
  rule.a = lead[0];
  rule.b = lead[1];
  const Word swapped{lead[1], lead[0]};
  for (const auto& [w, c] : diff.terms()) {
    if (w == lead) continue;
    if (!word_less(w, lead))
      throw NotOrientable("relation has a second non-decreasing word '" +
                          p.word_string(w) + "'");
    Laurent coef = -(inv * c);
    if (w == swapped)
      rule.swap_coef = coef;
    else
      rule.lower.emplace_back(coef, w);
  }
  return rule;
}

inline NCPolynomial rule_rhs(const RewriteRule& r) {
  NCPolynomial rhs = NCPolynomial::term(Word{r.b, r.a}, r.swap_coef);
  for (const auto& [c, w] : r.lower) rhs.add_term(w, c);
  return rhs;
}

}  // namespace detail

/// Builds a presentation whose normal form respects every input relation.
/// Relations for the same generator pair are merged when they agree after
/// normalizing their right sides; genuine conflicts (or relations that
/// cannot be oriented as decreasing rules) throw NotOrientable. The result
/// reduces both sides of every input relation to identical normal forms
/// (re-checked before returning).
inline AlgebraPresentation presentation_from_relations(
    const std::vector<QuadraticRelation>& relations, std::string name,
    std::vector<std::string> alphabet) {
  AlgebraPresentation scratch(name, alphabet);
  std::map<std::pair<int, int>, std::vector<RewriteRule>> candidates;
  for (const auto& rel : relations) {
    NCPolynomial diff = rel.lhs - rel.rhs;
    if (diff.is_zero()) continue;
    RewriteRule rule = detail::orient(diff, scratch);
    candidates[{rule.a, rule.b}].push_back(std::move(rule));
  }
  AlgebraPresentation pres(std::move(name), std::move(alphabet));
  for (auto& [pair, rules] : candidates) {
    (void)pair;
    pres.add_rule(rules.front());
  }
  // Normalize correction terms against the full rule set, then check that
  // alternative candidates for the same pair agree.
  AlgebraPresentation normalized(pres.name(), pres.alphabet());
  for (const auto& [pair, rules] : candidates) {
    NCPolynomial rhs0 = normal_form(detail::rule_rhs(rules.front()), pres);
    for (std::size_t k = 1; k < rules.size(); ++k) {
      NCPolynomial rhsk = normal_form(detail::rule_rhs(rules[k]), pres);
      if (!(rhs0 == rhsk))
        throw NotOrientable("conflicting relations for generator pair (" +
                            pres.label(pair.first) + ", " +
                            pres.label(pair.second) + ")");
    }
    RewriteRule merged;
    merged.a = pair.first;
    merged.b = pair.second;
    merged.swap_coef = rhs0.coefficient(Word{pair.second, pair.first});
    for (const auto& [w, c] : rhs0.terms())
      if (!(w == Word{pair.second, pair.first})) merged.lower.emplace_back(c, w);
    normalized.add_rule(std::move(merged));
  }
  // Round-trip soundness: both sides of every source relation reach the
  // same normal form.
  for (const auto& rel : relations) {
    if (!(normal_form(rel.lhs, normalized) == normal_form(rel.rhs, normalized)))
      throw NotOrientable("oriented presentation does not respect its input");
  }
  return normalized;
}

/// Extracts the independent quadratic relations of R T1 T2 = T2 T1 R:
/// trivial entry equations dropped, duplicates merged up to scalar and up
/// to rewriting by the extracted swap rules.
inline std::vector<QuadraticRelation> extract_rtt_relations(const RMatrix& r) {
  AlgebraPresentation scratch("rtt-scratch", t_alphabet(r.n()));
  std::vector<QuadraticRelation> raw;
  for (const auto& diff : rtt_entry_equations(r)) {
    if (diff.is_zero()) continue;
    RewriteRule rule = detail::orient(diff, scratch);
    QuadraticRelation rel;
    rel.lhs = NCPolynomial::term(Word{rule.a, rule.b}, Laurent::one());
    rel.rhs = detail::rule_rhs(rule);
    raw.push_back(std::move(rel));
  }
  AlgebraPresentation pres =
      presentation_from_relations(raw, "rtt-" + std::to_string(r.n()),
                                  t_alphabet(r.n()));
  std::vector<QuadraticRelation> out;
  for (const auto& [pair, rule] : pres.rules()) {
    (void)pair;
    QuadraticRelation rel;
    rel.lhs = NCPolynomial::term(Word{rule.a, rule.b}, Laurent::one());
    rel.rhs = detail::rule_rhs(rule);
    out.push_back(std::move(rel));
  }
  return out;
}

/// Presentation of the quantum-matrix algebra for the builtin R family.
inline AlgebraPresentation quantum_matrix_presentation(int n) {
  RMatrix r = build_r_matrix(n);
  return presentation_from_relations(extract_rtt_relations(r),
                                     "quantum-matrix-" + std::to_string(n),
                                     t_alphabet(n));
}

/// det_q(T) = sum over sigma of (-q)^l(sigma) t_{1 sigma(1)} ... t_{n sigma(n)},
/// normal-formed in the given t-algebra presentation.
inline NCPolynomial quantum_matrix_determinant(const AlgebraPresentation& pres,
                                               int n) {
  auto t = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  NCPolynomial raw;
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (images[a] > images[b]) ++inv;
    Word w;
    for (int i = 1; i <= n; ++i) w.push_back(t(i, images[i - 1]));
    raw.add_term(std::move(w), Laurent::monomial(inv % 2 == 0 ? 1 : -1, inv));
  } while (std::next_permutation(images.begin(), images.end()));
  return normal_form(raw, pres);
}

/// Does x commute with every generator of the presentation?
inline bool is_central(const NCPolynomial& x, const AlgebraPresentation& pres) {
  for (int g = 0; g < pres.size(); ++g) {
    NCPolynomial gen = NCPolynomial::generator(g);
    if (!(nc_mul(x, gen, pres) == nc_mul(gen, x, pres))) return false;
  }
  return true;
}

/// Centrality of the quantum determinant for n = 2 (desk scale), verified
/// by reducing all four commutators to zero.
inline bool check_detq_central(int n) {
  if (n != 2) throw DomainError("centrality check is implemented for n = 2");
  AlgebraPresentation pres = quantum_matrix_presentation(2);
  NCPolynomial d = quantum_matrix_determinant(pres, 2);
  return is_central(d, pres);
}

// ---------------------------------------------------------------------------
// Sparse triplet text format: "n <n>" then one line per nonzero entry,
//   i,k j,l scalar
// ---------------------------------------------------------------------------

inline std::string print_r_matrix(const RMatrix& r) {
  std::string out = "n " + std::to_string(r.n()) + "\n";
  for (int i = 1; i <= r.n(); ++i)
    for (int k = 1; k <= r.n(); ++k)
      for (int j = 1; j <= r.n(); ++j)
        for (int l = 1; l <= r.n(); ++l) {
          const Laurent& v = r.at(i, k, j, l);
          if (v.is_zero()) continue;
          out += std::to_string(i) + "," + std::to_string(k) + " " +
                 std::to_string(j) + "," + std::to_string(l) + " " +
                 v.to_string_compact() + "\n";
        }
  return out;
}

inline RMatrix parse_r_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<RMatrix> r;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "n") {
      int n = 0;
      if (r || !(ls >> n) || n < 1) throw ParseError("r-matrix: bad n line");
      r.emplace(n);
    } else {
      if (!r) throw ParseError("r-matrix: entries before n line");
      auto parse_pair = [&](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos)
          throw ParseError("r-matrix: bad index pair '" + s + "'");
        try {
          return std::make_pair(std::stoi(s.substr(0, comma)),
                                std::stoi(s.substr(comma + 1)));
        } catch (const std::exception&) {
          throw ParseError("r-matrix: bad index pair '" + s + "'");
        }
      };
      std::string colpair;
      if (!(ls >> colpair)) throw ParseError("r-matrix: bad entry line '" + line + "'");
      auto [i, k] = parse_pair(tok);
      auto [j, l] = parse_pair(colpair);
      std::string scalar;
      std::getline(ls, scalar);
      r->at(i, k, j, l) = parse_laurent(scalar);
    }
  }
  if (!r) throw ParseError("r-matrix: missing n line");
  return *r;
}

}  // namespace qpfaff
