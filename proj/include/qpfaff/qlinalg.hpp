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

#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "qpfaff/combinat.hpp"
#include "qpfaff/ncpoly.hpp"

namespace qpfaff {

// ---------------------------------------------------------------------------
// Numeric skew-symmetric matrices: only the upper triangle is stored, the
// rest is defined by a_ji = -a_ij, a_ii = 0.
// ---------------------------------------------------------------------------

class SkewMatrixNum {
public:
  explicit SkewMatrixNum(int dim) : dim_(dim) {
    if (dim <= 0) throw DomainError("matrix dimension must be positive");
    upper_.resize(static_cast<std::size_t>(dim) * dim, Rational(0));
  }

  int dim() const { return dim_; }

  void set(int i, int j, const Rational& v) {
    check(i, j);
    if (i == j && v != 0) throw DomainError("diagonal entries are zero");
    if (i < j)
      upper_[slot(i, j)] = v;
    else if (j < i)
      upper_[slot(j, i)] = -v;
  }

  Rational entry(int i, int j) const {
    check(i, j);
    if (i == j) return 0;
    return i < j ? upper_[slot(i, j)] : -upper_[slot(j, i)];
  }

  /// Multiplies row i and column i by t (keeps skew-symmetry).
  void scale_index(int i, const Rational& t) {
    for (int j = 1; j <= dim_; ++j)
      if (j != i) set(i, j, entry(i, j) * t);
  }

private:
  void check(int i, int j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_)
      throw DomainError("matrix index out of range");
  }
  std::size_t slot(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * dim_ + (j - 1);
  }
  int dim_;
  std::vector<Rational> upper_;
};

/// Signed sum over perfect matchings, exact. Even dimension only.
inline Rational classical_pfaffian(const SkewMatrixNum& a) {
  if (a.dim() % 2 != 0)
    throw DomainError("Pfaffian needs even dimension");
  Rational total = 0;
  for_each_matching(a.dim(), [&](const PerfectMatching& m) {
    Rational prod = matching_sign(m);
    for (auto [i, j] : m.pairs) prod *= a.entry(i, j);
    total += prod;
  });
  return total;
}

/// Exact determinant of an arbitrary square rational matrix via
/// fraction-free (Bareiss) elimination with row pivoting.
inline Rational determinant_bareiss(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::vector<std::vector<Rational>> dense(const SkewMatrixNum& a) {
  std::vector<std::vector<Rational>> m(a.dim(), std::vector<Rational>(a.dim()));
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = 1; j <= a.dim(); ++j) m[i - 1][j - 1] = a.entry(i, j);
  return m;
}

inline Rational classical_determinant(const SkewMatrixNum& a) {
  return determinant_bareiss(dense(a));
}

// ---------------------------------------------------------------------------
// Symbolic q-skew-symmetric matrices: one generator per upper-triangle slot,
// lower entries DEFINED as (-q) * a_ij, zero diagonal. The generator
// alphabet is ordered lexicographically on (i, j) and must coincide with the
// ambient presentation's alphabet.
// ---------------------------------------------------------------------------

class SkewMatrixSym {
public:
  SkewMatrixSym(int dim, std::vector<std::string> labels, PresentationPtr pres)
      : dim_(dim), labels_(std::move(labels)), pres_(std::move(pres)) {
    if (dim <= 0) throw DomainError("matrix dimension must be positive");
    const std::size_t want = static_cast<std::size_t>(dim) * (dim - 1) / 2;
    if (labels_.size() != want)
      throw DomainError("expected one generator label per upper-triangle slot");
    if (!pres_) throw DomainError("symbolic matrix needs a presentation");
    if (pres_->alphabet() != labels_)
      throw DomainError(
          "presentation alphabet must list the matrix generators in "
          "lexicographic (i,j) order");
  }

  /// Default labels a{i}{j} under the uniform q-commutation presentation.
  static SkewMatrixSym uniform(int dim) {
    auto labels = default_labels(dim);
    auto pres = std::make_shared<AlgebraPresentation>(
        AlgebraPresentation::uniform_q("uniform-q-" + std::to_string(dim), labels));
    return SkewMatrixSym(dim, labels, pres);
  }

  static std::vector<std::string> default_labels(int dim) {
    std::vector<std::string> labels;
    for (int i = 1; i <= dim; ++i)
      for (int j = i + 1; j <= dim; ++j)
        labels.push_back("a" + std::to_string(i) + std::to_string(j));
    return labels;
  }

  int dim() const { return dim_; }
  const AlgebraPresentation& presentation() const { return *pres_; }
  PresentationPtr presentation_ptr() const { return pres_; }

  /// Generator index of the upper-triangle slot (i < j).
  int slot(int i, int j) const {
    if (!(1 <= i && i < j && j <= dim_))
      throw DomainError("slot wants 1 <= i < j <= dim");
    // slots before row i, plus offset inside row i
    int idx = 0;
    for (int r = 1; r < i; ++r) idx += dim_ - r;
    return idx + (j - i - 1);
  }

  /// entry(i,j) as a polynomial: a_ij above the diagonal, (-q) a_ij below,
  /// zero on it.
  NCPolynomial entry(int i, int j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_)
      throw DomainError("matrix index out of range");
    if (i == j) return NCPolynomial::zero();
    if (i < j) return NCPolynomial::generator(slot(i, j));
    return NCPolynomial::term(Word{slot(j, i)}, Laurent::monomial(-1, 1));
  }

private:
  int dim_;
  std::vector<std::string> labels_;
  PresentationPtr pres_;
};

/// Pf_q(A) = sum over matchings of (-q)^inv(pi) * a_{i1 j1} ... a_{in jn},
/// pairs sorted by first index, then normal-ordered.
inline NCPolynomial quantum_pfaffian(const SkewMatrixSym& a,
                                     Strategy strategy = Strategy::leftmost) {
  if (a.dim() % 2 != 0)
    throw DomainError("quantum Pfaffian needs even dimension");
  NCPolynomial total;
  for_each_matching(a.dim(), [&](const PerfectMatching& m) {
    const int inv = matching_inversions(m);
    Word w;
    for (auto [i, j] : m.pairs) w.push_back(a.slot(i, j));
    const Laurent coef = Laurent::monomial(inv % 2 == 0 ? 1 : -1, inv);
    total = total + normal_form(NCPolynomial::term(std::move(w), coef),
                                a.presentation(), strategy);
  });
  return total;
}

/// det_q(A) = sum over permutations of (-q)^l(sigma) * a_{1 sigma(1)} ...
/// a_{m sigma(m)}, rows ascending. Lower-triangle entries are substituted
/// as (-q) a_ij before normal ordering, so only derangements contribute
/// (the zero diagonal kills every fixed point). Odd dimensions are allowed.
inline NCPolynomial quantum_determinant(const SkewMatrixSym& a,
                                        Strategy strategy = Strategy::leftmost) {
  NCPolynomial total;
  for_each_permutation(a.dim(), [&](const Permutation& sigma) {
    Word w;
    int lower_count = 0;
    for (int i = 1; i <= a.dim(); ++i) {
      const int j = sigma.images[i - 1];
      if (i == j) return;  // zero diagonal
      if (i < j) {
        w.push_back(a.slot(i, j));
      } else {
        w.push_back(a.slot(j, i));
        ++lower_count;
      }
    }
    const int ell = inversions(sigma);
    // (-q)^ell from the weight, (-q) per lower-triangle substitution
    const int total_pow = ell + lower_count;
    const Laurent coef =
        Laurent::monomial(total_pow % 2 == 0 ? 1 : -1, total_pow);
    total = total + normal_form(NCPolynomial::term(std::move(w), coef),
                                a.presentation(), strategy);
  });
  return total;
}

// ---------------------------------------------------------------------------
// Identity scan: is det_q = sign * q^c * Pf_q^2, term for term?
// ---------------------------------------------------------------------------

struct IdentityScanResult {
  enum class Status { ExactPower, Failure } status;
  int sign = 1;           // the s of det = s q^c Pf^2 (best candidate on Failure)
  int c = 0;              // exponent (best candidate on Failure)
  NCPolynomial residual;  // det - s q^c Pf^2; empty on ExactPower
  std::string presentation_name;
};

/// Core comparator, exposed for direct testing. Searches sign in {+1,-1}
/// and c in [c_lo, c_hi] for det == sign * q^c * pf2. On failure returns
/// the candidate minimizing the residual term count; ties broken by
/// smaller |c|, then c >= 0, then sign +1.
inline IdentityScanResult scan_power_ratio(const NCPolynomial& det,
                                           const NCPolynomial& pf2,
                                           int c_lo, int c_hi,
                                           const std::string& pres_name) {
  if (pf2.is_zero()) throw DegenerateInput("Pf_q^2 is zero; nothing to scan");
  if (c_lo > c_hi) throw DomainError("empty exponent range");
  IdentityScanResult best;
  best.status = IdentityScanResult::Status::Failure;
  best.presentation_name = pres_name;
  std::size_t best_count = 0;
  bool have_best = false;
  auto better = [&](int c_new, int s_new, std::size_t count) {
    if (!have_best) return true;
    if (count != best_count) return count < best_count;
    const int ca = std::abs(c_new), cb = std::abs(best.c);
    if (ca != cb) return ca < cb;
    if ((c_new >= 0) != (best.c >= 0)) return c_new >= 0;
    return s_new > best.sign;
  };
  for (int c = c_lo; c <= c_hi; ++c) {
    for (int s : {1, -1}) {
      NCPolynomial cand = Laurent::monomial(s, c) * pf2;
      NCPolynomial resid = det - cand;
      if (resid.is_zero()) {
        IdentityScanResult r;
        r.status = IdentityScanResult::Status::ExactPower;
        r.sign = s;
        r.c = c;
        r.presentation_name = pres_name;
        return r;
      }
      if (better(c, s, resid.term_count())) {
        best.sign = s;
        best.c = c;
        best.residual = std::move(resid);
        best_count = best.residual.term_count();
        have_best = true;
      }
    }
  }
  return best;
}

/// Symbolic scan of det_q against Pf_q^2 over the matrix's presentation.
inline IdentityScanResult identity_scan(const SkewMatrixSym& a, int c_lo,
                                        int c_hi,
                                        Strategy strategy = Strategy::leftmost) {
  NCPolynomial pf = quantum_pfaffian(a, strategy);
  if (pf.is_zero()) throw DegenerateInput("Pf_q is zero");
  NCPolynomial pf2 = nc_mul(pf, pf, a.presentation(), strategy);
  NCPolynomial det = quantum_determinant(a, strategy);
  return scan_power_ratio(det, pf2, c_lo, c_hi, a.presentation().name());
}

/// Scan in the algebra specialized at q := q0. The question becomes
/// det = s * q0^c * Pf^2 over rational coefficients; at q0 = 1 (or -1)
/// distinct c collapse, so the exponent range shrinks to the canonical
/// representatives. The classical check at q0 = 1 reports ExactPower with
/// sign +1, c = 0.
inline IdentityScanResult identity_scan_at(const SkewMatrixSym& a,
                                           const Rational& q0, int c_lo,
                                           int c_hi,
                                           Strategy strategy = Strategy::leftmost) {
  if (q0 == 0) throw ZeroBase();
  if (c_lo > c_hi) throw DomainError("empty exponent range");
  NCPolynomial pf = specialize_q(quantum_pfaffian(a, strategy), q0);
  if (pf.is_zero()) throw DegenerateInput("Pf_q is zero at q = " + to_string(q0));
  auto spec_pres = a.presentation().specialize(q0);
  NCPolynomial pf2 = nc_mul(pf, pf, spec_pres, strategy);
  NCPolynomial det = specialize_q(quantum_determinant(a, strategy), q0);
  if (q0 == 1) {
    c_lo = std::max(c_lo, 0);
    c_hi = std::min(c_hi, 0);
  } else if (q0 == -1) {
    c_lo = std::max(c_lo, 0);
    c_hi = std::min(c_hi, 1);
  }
  if (c_lo > c_hi) { c_lo = 0; c_hi = 0; }

  IdentityScanResult best;
  best.status = IdentityScanResult::Status::Failure;
  best.presentation_name = spec_pres.name();
  std::size_t best_count = 0;
  bool have_best = false;
  for (int c = c_lo; c <= c_hi; ++c) {
    Rational pow = Laurent::q_power(c).eval_at(q0);
    for (int s : {1, -1}) {
      NCPolynomial cand = Laurent(Rational(s) * pow) * pf2;
      NCPolynomial resid = det - cand;
      if (resid.is_zero()) {
        best.status = IdentityScanResult::Status::ExactPower;
        best.sign = s;
        best.c = c;
        best.residual = NCPolynomial::zero();
        return best;
      }
      const std::size_t count = resid.term_count();
      const bool take =
          !have_best || count < best_count ||
          (count == best_count &&
           (std::abs(c) < std::abs(best.c) ||
            (std::abs(c) == std::abs(best.c) &&
             ((c >= 0) > (best.c >= 0) ||
              ((c >= 0) == (best.c >= 0) && s > best.sign)))));
      if (take) {
        best.sign = s;
        best.c = c;
        best.residual = std::move(resid);
        best_count = best.residual.term_count();
        have_best = true;
      }
    }
  }
  return best;
}

}  // namespace qpfaff
