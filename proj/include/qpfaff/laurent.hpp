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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpfaff/errors.hpp"
#include "qpfaff/rational.hpp"

namespace qpfaff {

/// Exact Laurent polynomial in the deformation parameter q with rational
/// coefficients: a finite map exponent -> nonzero coefficient. Negative
/// exponents are first-class (q^-1 shows up in every R-matrix). The empty
/// map is zero; {0 -> 1} is one. Value semantics throughout, so instances
/// are freely shareable across threads.
class Laurent {
public:
  Laurent() = default;

  /// Constant polynomial.
  explicit Laurent(const Rational& c) {
    if (c != 0) terms_[0] = c;
  }
  explicit Laurent(long c) : Laurent(Rational(c)) {}

  /// c * q^exponent
  static Laurent monomial(const Rational& c, int exponent) {
    Laurent r;
    if (c != 0) r.terms_[exponent] = c;
    return r;
  }
  static Laurent q_power(int exponent) { return monomial(1, exponent); }
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
  }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  Rational coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Lowest/highest exponent; only meaningful on nonzero scalars.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) {
    return !(a == b);
  }
  friend bool operator<(const Laurent& a, const Laurent& b) {
    return a.terms_ < b.terms_;
  }

  void add_term(int exponent, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Exact substitution q := q0. q0 must be nonzero.
  Rational eval_at(const Rational& q0) const {
    if (q0 == 0) throw ZeroBase();
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational p = 1;
      const Rational base = e >= 0 ? q0 : Rational(1) / q0;
      for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
      total += c * p;
    }
    return total;
  }

  /// (c, k) iff this == c * q^k with c != 0; absent otherwise.
  std::optional<std::pair<Rational, int>> as_q_power() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    return std::make_pair(c, e);
  }

  /// Canonical textual form, ascending exponents, every coefficient explicit:
  /// "-1*q^-1 + 2 + 3*q^2". Zero prints "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      if (e == 0) {
        out += qpfaff::to_string(c);
      } else {
        out += qpfaff::to_string(c) + "*q^" + std::to_string(e);
      }
    }
    return out;
  }

  /// Compact form used inside polynomial terms and presentation files:
  /// unit coefficients are dropped ("q - q^-1", "2*q^3 + 1", "-q").
  std::string to_string_compact() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += qpfaff::to_string(mag);
      } else {
        std::string qpart = e == 1 ? "q" : "q^" + std::to_string(e);
        out += (mag == 1) ? qpart : qpfaff::to_string(mag) + "*" + qpart;
      }
    }
    return out;
  }

private:
  std::map<int, Rational> terms_;
};

inline Laurent operator*(const Rational& c, const Laurent& a) {
  return Laurent(c) * a;
}

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0, and [n]_q at q=1 is n.
inline Laurent q_integer(int n) {
  if (n < 0) throw DomainError("q_integer: negative argument");
  Laurent r;
  for (int i = 0; i < n; ++i) r.add_term(i, 1);
  return r;
}

/// [n]_q! = [1]_q [2]_q ... [n]_q
inline Laurent q_factorial(int n) {
  if (n < 0) throw DomainError("q_factorial: negative argument");
  Laurent r = Laurent::one();
  for (int i = 1; i <= n; ++i) r *= q_integer(i);
  return r;
}

/// Gaussian binomial [n k]_q, computed by the Pascal-type recursion
/// [n k] = [n-1 k-1] + q^k [n-1 k]. Always a genuine polynomial in q with
/// nonnegative integer coefficients and degree k(n-k).
inline Laurent q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("q_binomial: need 0 <= k <= n");
  // row-by-row on the k index
  std::vector<Laurent> row(static_cast<std::size_t>(k) + 1);
  row[0] = Laurent::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = (j == i) ? Laurent::one()
                        : row[j - 1] + Laurent::q_power(j) * row[j];
    }
  }
  return row[k];
}

/// Parses the grammar printed by to_string / to_string_compact:
/// sign-separated terms, each "[rational][*][q[^int]]".
inline Laurent parse_laurent(const std::string& text) {
  Laurent out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty scalar");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw ParseError("expected '+' or '-' in scalar '" + text + "'");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    first = false;
    // optional rational
    std::string num;
    while (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '/'))
      num += text[i++];
    skip_ws();
    bool has_q = false;
    int expo = 0;
    if (i < text.size() && text[i] == '*') {
      if (num.empty())
        throw ParseError("bad term in scalar '" + text + "'");
      ++i;
      skip_ws();
    }
    if (i < text.size() && text[i] == 'q') {
      has_q = true;
      ++i;
      expo = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string es;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) es += text[i++];
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') es += text[i++];
        if (es.empty() || es == "-" || es == "+")
          throw ParseError("bad exponent in scalar '" + text + "'");
        expo = std::stoi(es);
      }
    }
    if (num.empty() && !has_q)
      throw ParseError("bad term in scalar '" + text + "'");
    Rational c = num.empty() ? Rational(1) : parse_rational(num);
    out.add_term(expo, Rational(sign) * c);
    skip_ws();
  }
  return out;
}

}  // namespace qpfaff
