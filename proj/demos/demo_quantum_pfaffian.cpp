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

// Minimal library walkthrough: build a 4x4 q-skew matrix over the uniform
// q-commutation rules, compute both quantum invariants, and scan for a
// power-of-q relation between det_q and Pf_q^2.

#include <iostream>

#include <qpfaff/qpfaff.hpp>

int main() {
  using namespace qpfaff;

  SkewMatrixSym a = SkewMatrixSym::uniform(4);
  const AlgebraPresentation& pres = a.presentation();

  NCPolynomial pf = quantum_pfaffian(a);
  NCPolynomial det = quantum_determinant(a);
  std::cout << "Pf_q  = " << to_string(pf, pres) << "\n";
  std::cout << "det_q = " << to_string(det, pres) << "\n";

  IdentityScanResult scan = identity_scan(a, -32, 32);
  if (scan.status == IdentityScanResult::Status::ExactPower) {
    std::cout << "det_q = " << (scan.sign < 0 ? "-" : "") << "q^" << scan.c
              << " * Pf_q^2\n";
  } else {
    std::cout << "no sign/power makes det_q = s*q^c*Pf_q^2; closest candidate "
              << "(s=" << scan.sign << ", c=" << scan.c << ") leaves "
              << scan.residual.term_count() << " residual terms\n";
  }

  IdentityScanResult classical = identity_scan_at(a, 1, -32, 32);
  std::cout << "at q=1: " << (classical.status == IdentityScanResult::Status::ExactPower
                                  ? "Pf^2 = det exactly"
                                  : "unexpected mismatch")
            << "\n";
  return 0;
}
