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
#include <functional>
#include <numeric>
#include <vector>

#include "qpfaff/errors.hpp"

namespace qpfaff {

/// Partition of {1,...,2n} into n pairs (i,j), i < j, sorted by first
/// element. The index set of every Pfaffian sum.
struct PerfectMatching {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
    return a.pairs == b.pairs;
  }
  friend bool operator<(const PerfectMatching& a, const PerfectMatching& b) {
    return a.pairs < b.pairs;
  }
};

/// Bijection on {1,...,m} stored as its image sequence.
struct Permutation {
  std::vector<int> images;
};

/// Streams all (2n-1)!! perfect matchings in lexicographic order of the
/// flattened pair word i1 j1 i2 j2 ... . Nothing factorial-sized is ever
/// materialized; the visitor sees each matching once.
inline void for_each_matching(int two_n,
                              const std::function<void(const PerfectMatching&)>& visit) {
  if (two_n <= 0 || two_n % 2 != 0)
    throw DomainError("perfect matchings need a positive even ground set");
  std::vector<int> free;
  for (int i = 1; i <= two_n; ++i) free.push_back(i);
  PerfectMatching m;
  std::function<void()> rec = [&]() {
    if (free.empty()) {
      visit(m);
      return;
    }
    const int i = free.front();
    for (std::size_t k = 1; k < free.size(); ++k) {
      const int j = free[k];
      std::vector<int> rest;
      rest.reserve(free.size() - 2);
      for (int x : free)
        if (x != i && x != j) rest.push_back(x);
      std::swap(free, rest);
      m.pairs.emplace_back(i, j);
      rec();
      m.pairs.pop_back();
      std::swap(free, rest);
    }
  };
  rec();
}

inline std::vector<PerfectMatching> all_matchings(int two_n) {
  std::vector<PerfectMatching> out;
  for_each_matching(two_n, [&](const PerfectMatching& m) { out.push_back(m); });
  return out;
}

/// Inversion count of the flattened word i1 j1 i2 j2 ...: the number of
/// index pairs appearing out of ascending order. Note this is the
/// permutation-word statistic, not the chord-crossing count; the nested
/// matching {(1,4),(2,3)} has 2 inversions but 0 crossings.
inline int matching_inversions(const PerfectMatching& m) {
  std::vector<int> word;
  for (auto [i, j] : m.pairs) {
    word.push_back(i);
    word.push_back(j);
  }
  int inv = 0;
  for (std::size_t a = 0; a < word.size(); ++a)
    for (std::size_t b = a + 1; b < word.size(); ++b)
      if (word[a] > word[b]) ++inv;
  return inv;
}

inline int matching_sign(const PerfectMatching& m) {
  return matching_inversions(m) % 2 == 0 ? 1 : -1;
}

/// Chord-diagram crossing count: pairs (i,j) < (k,l) with i < k < j < l.
/// Diagnostic alternative to matching_inversions.
inline int crossing_number(const PerfectMatching& m) {
  int crossings = 0;
  for (std::size_t a = 0; a < m.pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < m.pairs.size(); ++b) {
      auto [i, j] = m.pairs[a];
      auto [k, l] = m.pairs[b];
      if (i < k && k < j && j < l) ++crossings;
    }
  }
  return crossings;
}

/// Streams all m! permutations of {1,...,m} in lexicographic order.
inline void for_each_permutation(int m,
                                 const std::function<void(const Permutation&)>& visit) {
  if (m < 0) throw DomainError("permutations of a negative-size set");
  Permutation p;
  p.images.resize(m);
  std::iota(p.images.begin(), p.images.end(), 1);
  do {
    visit(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
}

inline int inversions(const Permutation& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.images.size(); ++a)
    for (std::size_t b = a + 1; b < p.images.size(); ++b)
      if (p.images[a] > p.images[b]) ++inv;
  return inv;
}

inline int sign(const Permutation& p) { return inversions(p) % 2 == 0 ? 1 : -1; }

inline long double_factorial_odd(int two_n) {
  // (2n-1)!! matchings of {1..2n}
  long r = 1;
  for (int k = two_n - 1; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace qpfaff
