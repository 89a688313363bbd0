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

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qpfaff/presentation.hpp"

namespace qpfaff {

/// Finite linear combination of words with Laurent coefficients. Stored
/// words are kept in normal form with respect to whatever presentation the
/// producing operation used; scalars commute with all generators.
class NCPolynomial {
public:
  NCPolynomial() = default;

  static NCPolynomial zero() { return {}; }
  static NCPolynomial unit(const Laurent& c = Laurent::one()) {
    NCPolynomial p;
    p.add_term(Word{}, c);
    return p;
  }
  static NCPolynomial term(Word w, const Laurent& c) {
    NCPolynomial p;
    p.add_term(std::move(w), c);
    return p;
  }
  static NCPolynomial generator(int g) {
    return term(Word{g}, Laurent::one());
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Laurent>& terms() const { return terms_; }

  Laurent coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent::zero() : it->second;
  }

  void add_term(Word w, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend NCPolynomial operator+(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }
  friend NCPolynomial operator-(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
  }
  friend NCPolynomial operator-(const NCPolynomial& a) {
    NCPolynomial r;
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
    return r;
  }
  friend NCPolynomial operator*(const Laurent& s, const NCPolynomial& a) {
    NCPolynomial r;
    for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
    return r;
  }
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPolynomial& a, const NCPolynomial& b) {
    return !(a == b);
  }

private:
  std::map<Word, Laurent> terms_;
};

enum class Strategy { leftmost, rightmost };

/// Rewrites every word to normal form under the presentation: repeatedly
/// replace an adjacent ascending pair (g_a g_b), a < b, using its rule,
/// until no reducible pair remains. Terminates because each replacement is
/// strictly smaller in the word_less order. The result is independent of
/// the strategy on all presentations shipped here (checked by tests, not
/// assumed). Throws MissingRelation on an ascending pair with no rule.
inline NCPolynomial normal_form(const NCPolynomial& input,
                                const AlgebraPresentation& pres,
                                Strategy strategy = Strategy::leftmost) {
  NCPolynomial out;
  std::vector<std::pair<Word, Laurent>> work(input.terms().begin(),
                                             input.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    long pos = -1;
    const long last = static_cast<long>(w.size()) - 1;
    if (strategy == Strategy::leftmost) {
      for (long i = 0; i < last; ++i) {
        if (w[i] < w[i + 1]) {
          pos = i;
          break;
        }
      }
    } else {
      for (long i = last - 1; i >= 0; --i) {
        if (w[i] < w[i + 1]) {
          pos = i;
          break;
        }
      }
    }
    if (pos < 0) {
      out.add_term(std::move(w), c);
      continue;
    }
    const int a = w[pos], b = w[pos + 1];
    const RewriteRule* rule = pres.rule(a, b);
    if (!rule) throw MissingRelation(pres.label(a), pres.label(b));
    if (!rule->swap_coef.is_zero()) {
      Word sw = w;
      std::swap(sw[pos], sw[pos + 1]);
      work.emplace_back(std::move(sw), c * rule->swap_coef);
    }
    for (const auto& [coef, repl] : rule->lower) {
      Word nw;
      nw.reserve(w.size() - 2 + repl.size());
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.insert(nw.end(), repl.begin(), repl.end());
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(nw), c * coef);
    }
  }
  return out;
}

/// Concatenate words bilinearly, then normal-order.
inline NCPolynomial nc_mul(const NCPolynomial& a, const NCPolynomial& b,
                           const AlgebraPresentation& pres,
                           Strategy strategy = Strategy::leftmost) {
  NCPolynomial raw;
  for (const auto& [w1, c1] : a.terms()) {
    for (const auto& [w2, c2] : b.terms()) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      raw.add_term(std::move(w), c1 * c2);
    }
  }
  return normal_form(raw, pres, strategy);
}

/// Evaluates every coefficient at q := q0 (exactly), pruning zero terms.
/// Words stay noncommutative. With classical_resort (allowed only at
/// q0 = 1, where every rule degrades to a plain swap) words are re-sorted
/// into fully ordered commutative monomials.
inline NCPolynomial specialize_q(const NCPolynomial& p, const Rational& q0,
                                 bool classical_resort = false) {
  if (q0 == 0) throw ZeroBase();
  if (classical_resort && q0 != 1)
    throw DomainError("classical_resort is only meaningful at q = 1");
  NCPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    Rational v = c.eval_at(q0);
    if (v == 0) continue;
    Word ww = w;
    if (classical_resort) std::sort(ww.begin(), ww.end(), std::greater<int>());
    out.add_term(std::move(ww), Laurent(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering. Stored words are descending; the display basis lists letters
// ascending, the order these expressions are conventionally written in.
// For monomial pure-swap presentations the two are exact rescalings of one
// another (each swap divides by its coefficient), so rendering converts;
// otherwise words print as stored.
// ---------------------------------------------------------------------------

struct DisplayTerm {
  Word word;      // in display order
  Laurent coef;
};

inline std::vector<DisplayTerm> display_terms(const NCPolynomial& p,
                                              const AlgebraPresentation& pres) {
  const bool transform = pres.is_monomial_swap();
  std::vector<DisplayTerm> out;
  for (const auto& [w, c] : p.terms()) {
    DisplayTerm t{w, c};
    if (transform) {
      // bubble sort ascending; each strict swap of (g_b, g_a) with a < b
      // divides the coefficient by that rule's swap coefficient.
      for (std::size_t i = 0; i + 1 < t.word.size(); ++i) {
        for (std::size_t j = 0; j + 1 < t.word.size() - i; ++j) {
          if (t.word[j] > t.word[j + 1]) {
            const RewriteRule* rule = pres.rule(t.word[j + 1], t.word[j]);
            if (!rule) {
              t = {w, c};  // unrelated pair: give up, print as stored
              goto done;
            }
            auto mono = rule->swap_coef.as_q_power();
            t.coef = t.coef * Laurent::monomial(Rational(1) / mono->first,
                                                -mono->second);
            std::swap(t.word[j], t.word[j + 1]);
          }
        }
      }
    done:;
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const DisplayTerm& a, const DisplayTerm& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

/// Plain ASCII rendering, e.g. "x*w - q*y*v + q^2*z*u".
inline std::string to_string(const NCPolynomial& p,
                             const AlgebraPresentation& pres) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : display_terms(p, pres)) {
    Laurent coef = t.coef;
    bool neg = false;
    bool all_negative = !coef.is_zero();
    for (const auto& [e, c] : coef.terms()) {
      (void)e;
      if (c > 0) all_negative = false;
    }
    if (all_negative) {
      neg = true;
      coef = -coef;
    }
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string word_part;
    for (std::size_t i = 0; i < t.word.size(); ++i) {
      if (i) word_part += "*";
      word_part += pres.label(t.word[i]);
    }
    std::string coef_part;
    if (coef.term_count() > 1) {
      coef_part = "(" + coef.to_string_compact() + ")";
    } else if (!coef.is_one()) {
      coef_part = coef.to_string_compact();
    }
    if (coef_part.empty() && word_part.empty())
      out += "1";
    else if (coef_part.empty())
      out += word_part;
    else if (word_part.empty())
      out += coef_part;
    else
      out += coef_part + "*" + word_part;
  }
  return out;
}

/// LaTeX rendering; labels of the form name+digits become subscripted.
inline std::string latex_label(const std::string& label) {
  std::size_t d = label.find_first_of("0123456789");
  if (d == std::string::npos || d == 0) return label;
  return label.substr(0, d) + "_{" + label.substr(d) + "}";
}

inline std::string latex_q_power(int e) {
  if (e == 1) return "q";
  return "q^{" + std::to_string(e) + "}";
}

inline std::string to_latex(const Laurent& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (e == 0)
      out += qpfaff::to_string(mag);
    else if (mag == 1)
      out += latex_q_power(e);
    else
      out += qpfaff::to_string(mag) + " " + latex_q_power(e);
  }
  return out;
}

inline std::string to_latex(const NCPolynomial& p,
                            const AlgebraPresentation& pres) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : display_terms(p, pres)) {
    Laurent coef = t.coef;
    bool neg = false;
    bool all_negative = !coef.is_zero();
    for (const auto& [e, c] : coef.terms()) {
      (void)e;
      if (c > 0) all_negative = false;
    }
    if (all_negative) {
      neg = true;
      coef = -coef;
    }
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string word_part;
    for (std::size_t i = 0; i < t.word.size(); ++i) {
      if (i) word_part += " ";
      word_part += latex_label(pres.label(t.word[i]));
    }
    std::string coef_part;
    if (coef.term_count() > 1)
      coef_part = "\\left(" + to_latex(coef) + "\\right)";
    else if (!coef.is_one())
      coef_part = to_latex(coef);
    if (coef_part.empty() && word_part.empty())
      out += "1";
    else if (coef_part.empty())
      out += word_part;
    else if (word_part.empty())
      out += coef_part;
    else
      out += coef_part + " \\, " + word_part;
  }
  return out;
}

}  // namespace qpfaff
