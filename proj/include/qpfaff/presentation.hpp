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
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qpfaff/errors.hpp"
#include "qpfaff/laurent.hpp"

namespace qpfaff {

/// A noncommutative monomial: sequence of generator indices into the
/// presentation's ordered alphabet. The empty word is the unit.
using Word = std::vector<int>;

/// Well-founded term order driving termination of the rewrite engine:
/// degree first, then left-to-right comparison in which a LARGER generator
/// index makes the word SMALLER. Words sorted with later generators first
/// (descending index) are minimal, so every oriented rule strictly
/// decreases and normal_form always halts.
inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

/// One quadratic rewrite rule
///   g_a g_b  ->  swap_coef * (g_b g_a)  +  sum_i lower[i].first * lower[i].second
/// with a < b in the alphabet. Every right-hand word must be strictly
/// smaller than (g_a g_b) in the term order.
struct RewriteRule {
  int a = 0;
  int b = 0;
  Laurent swap_coef;
  std::vector<std::pair<Laurent, Word>> lower;
};

/// Ordered generator alphabet plus pair-indexed quadratic rules. Immutable
/// after construction and freely shareable; all rewrite operations are pure.
///
/// Pairs without a rule do NOT commute silently: reducing a word that needs
/// such a pair throws MissingRelation.
class AlgebraPresentation {
public:
  AlgebraPresentation(std::string name, std::vector<std::string> alphabet)
      : name_(std::move(name)), labels_(std::move(alphabet)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
        throw ParseError("duplicate generator label '" + labels_[i] + "'");
    }
  }

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& alphabet() const { return labels_; }
  const std::string& label(int g) const { return labels_.at(g); }
  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw ParseError("unknown generator '" + label + "'");
    return it->second;
  }
  bool has_label(const std::string& label) const { return index_.count(label) > 0; }

  const std::map<std::pair<int, int>, RewriteRule>& rules() const { return rules_; }

  const RewriteRule* rule(int a, int b) const {
    auto it = rules_.find({a, b});
    return it == rules_.end() ? nullptr : &it->second;
  }

  /// Registers g_a g_b -> swap_coef (g_b g_a) + lower, validating that the
  /// rule strictly decreases the term order. At most one rule per pair.
  void add_rule(RewriteRule rule) {
    if (rule.a < 0 || rule.b < 0 || rule.a >= size() || rule.b >= size())
      throw DomainError("rule references generator outside the alphabet");
    if (rule.a >= rule.b)
      throw NotOrientable("rule left-hand side (" + label(rule.a) + " " +
                          label(rule.b) + ") is not an ascending pair");
    const Word lhs{rule.a, rule.b};
    for (const auto& [coef, w] : rule.lower) {
      (void)coef;
      if (!word_less(w, lhs))
        throw NotOrientable("correction term '" + word_string(w) +
                            "' does not decrease below '" + word_string(lhs) + "'");
    }
    auto key = std::make_pair(rule.a, rule.b);
    if (rules_.count(key))
      throw NotOrientable("two rules for generator pair (" + label(rule.a) +
                          ", " + label(rule.b) + ")");
    rules_.emplace(key, std::move(rule));
  }

  /// All pairs q-commute with the same coefficient: g_a g_b -> coef g_b g_a.
  static AlgebraPresentation uniform_q(std::string name,
                                       std::vector<std::string> alphabet,
                                       Laurent coef = Laurent::q_power(1)) {
    AlgebraPresentation p(std::move(name), std::move(alphabet));
    for (int a = 0; a < p.size(); ++a)
      for (int b = a + 1; b < p.size(); ++b)
        p.add_rule(RewriteRule{a, b, coef, {}});
    return p;
  }

  /// No rules at all; any out-of-order pair raises MissingRelation.
  static AlgebraPresentation free_algebra(std::string name,
                                          std::vector<std::string> alphabet) {
    return AlgebraPresentation(std::move(name), std::move(alphabet));
  }

  /// True when every rule is a bare swap with an invertible (monomial)
  /// coefficient. Such presentations admit the exact ascending-word display
  /// basis used by the renderer.
  bool is_monomial_swap() const {
    for (const auto& [key, rule] : rules_) {
      (void)key;
      if (!rule.lower.empty()) return false;
      if (!rule.swap_coef.as_q_power()) return false;
    }
    return true;
  }

  /// Coefficient-wise substitution q := q0 (rules whose corrections vanish
  /// lose them). Swap coefficients must stay nonzero, which holds for every
  /// monomial coefficient and any q0 != 0.
  AlgebraPresentation specialize(const Rational& q0) const {
    AlgebraPresentation p(name_ + "@q=" + to_string(q0), labels_);
    for (const auto& [key, rule] : rules_) {
      (void)key;
      RewriteRule r;
      r.a = rule.a;
      r.b = rule.b;
      r.swap_coef = Laurent(rule.swap_coef.eval_at(q0));
      if (r.swap_coef.is_zero())
        throw DomainError("swap coefficient vanishes at q = " + to_string(q0));
      for (const auto& [coef, w] : rule.lower) {
        Rational c = coef.eval_at(q0);
        if (c != 0) r.lower.emplace_back(Laurent(c), w);
      }
      p.add_rule(std::move(r));
    }
    return p;
  }

  std::string word_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += " ";
      out += label(w[i]);
    }
    return out;
  }

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, RewriteRule> rules_;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

// ---------------------------------------------------------------------------
// Presentation files: one header line each for the name and the ordered
// alphabet, then one rule per line, e.g.
//
//   name uniform-q-4
//   alphabet x y z u v w
//   x y -> q : y x
//   a d -> 1 : d a + (q - q^-1) : c b
//
// parse -> print round-trips byte-stably.
// ---------------------------------------------------------------------------

inline std::string print_presentation(const AlgebraPresentation& p) {
  std::string out = "name " + p.name() + "\n";
  out += "alphabet";
  for (const auto& l : p.alphabet()) out += " " + l;
  out += "\n";
  for (const auto& [key, rule] : p.rules()) {
    (void)key;
    auto scalar = [](const Laurent& s) {
      std::string t = s.to_string_compact();
      return s.term_count() > 1 ? "(" + t + ")" : t;
    };
    out += p.label(rule.a) + " " + p.label(rule.b) + " -> " +
           scalar(rule.swap_coef) + " : " + p.label(rule.b) + " " + p.label(rule.a);
    for (const auto& [coef, w] : rule.lower)
      out += " + " + scalar(coef) + " : " + p.word_string(w);
    out += "\n";
  }
  return out;
}

inline AlgebraPresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string name;
  std::vector<std::string> alphabet;
  std::vector<std::string> rule_lines;
  while (std::getline(in, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "name") {
      if (!(ls >> name)) throw ParseError("presentation: missing name");
    } else if (first == "alphabet") {
      std::string tok;
      while (ls >> tok) alphabet.push_back(tok);
    } else {
      rule_lines.push_back(line);
    }
  }
  if (alphabet.empty()) throw ParseError("presentation: missing alphabet line");
  if (name.empty()) name = "unnamed";
  AlgebraPresentation p(name, alphabet);

  for (const auto& rl : rule_lines) {
    auto arrow = rl.find("->");
    if (arrow == std::string::npos)
      throw ParseError("presentation: bad rule line '" + rl + "'");
    std::istringstream lhs(rl.substr(0, arrow));
    std::string la, lb, extra;
    if (!(lhs >> la >> lb) || (lhs >> extra))
      throw ParseError("presentation: rule left side must be two generators: '" + rl + "'");
    RewriteRule rule;
    rule.a = p.index_of(la);
    rule.b = p.index_of(lb);

    // right side: "+"-separated summands "scalar : word"
    std::string rhs = rl.substr(arrow + 2);
    std::vector<std::string> summands;
    {
      int depth = 0;
      std::string cur;
      for (char c : rhs) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
          summands.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      summands.push_back(cur);
    }
    bool first_summand = true;
    for (const auto& s : summands) {
      auto colon = s.find(':');
      if (colon == std::string::npos)
        throw ParseError("presentation: summand missing ':' in '" + rl + "'");
      std::string coef_text = s.substr(0, colon);
      // strip blanks and one optional layer of parentheses
      auto strip = [](std::string t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
        if (!t.empty() && t.front() == '(' && t.back() == ')')
          t = t.substr(1, t.size() - 2);
        return t;
      };
      Laurent coef = parse_laurent(strip(coef_text));
      Word w;
      std::istringstream ws(s.substr(colon + 1));
      std::string tok;
      while (ws >> tok) w.push_back(p.index_of(tok));
      if (first_summand) {
        if (w != Word{rule.b, rule.a})
          throw ParseError("presentation: first summand of '" + rl +
                           "' must be the swapped pair");
        rule.swap_coef = coef;
        first_summand = false;
      } else {
        rule.lower.emplace_back(coef, w);
      }
    }
    if (first_summand)
      throw ParseError("presentation: empty rule right side in '" + rl + "'");
    p.add_rule(std::move(rule));
  }
  return p;
}

}  // namespace qpfaff
