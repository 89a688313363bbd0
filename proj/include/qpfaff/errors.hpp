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

#include <stdexcept>
#include <string>

namespace qpfaff {

/// Precondition violations on mathematically meaningless inputs
/// (odd Pfaffian dimension, k > n in a q-binomial, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation of a Laurent polynomial at q = 0.
class ZeroBase : public DomainError {
public:
  ZeroBase() : DomainError("cannot evaluate at q = 0") {}
};

/// An adjacent out-of-order generator pair has no registered rewrite rule.
/// Silently commuting unrelated generators would fabricate relations, so the
/// rewrite engine refuses instead.
class MissingRelation : public std::runtime_error {
public:
  MissingRelation(std::string a, std::string b)
      : std::runtime_error("no rewrite rule registered for generator pair (" +
                           a + ", " + b + ")"),
        first(std::move(a)),
        second(std::move(b)) {}
  std::string first;
  std::string second;
};

/// A quadratic relation cannot be oriented as a terminating rewrite rule
/// (wrong shape, increasing right-hand side, or two conflicting rules for
/// the same generator pair).
class NotOrientable : public std::runtime_error {
public:
  explicit NotOrientable(const std::string& what) : std::runtime_error(what) {}
};

/// Scan or extraction called on input that makes the question vacuous
/// (e.g. Pf_q = 0, zero top coefficient).
class DegenerateInput : public std::runtime_error {
public:
  explicit DegenerateInput(const std::string& what)
      : std::runtime_error(what) {}
};

/// Malformed textual input (scalars, presentation files, matrix files).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpfaff
