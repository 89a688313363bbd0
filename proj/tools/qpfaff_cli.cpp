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

// Command-line front end: load matrices and presentations, run every
// computation and verification experiment, and print results in plain,
// LaTeX, or JSON form.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 algebra error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <qpfaff/qpfaff.hpp>

using nlohmann::json;
using namespace qpfaff;

namespace {

constexpr int kMaxSymbolicDim = 6;
constexpr int kMaxNumericDim = 8;
constexpr int kMaxTensorN = 3;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string digest_hex(const std::string& bytes) {
  std::ostringstream os;
  os << std::hex << fnv1a(bytes);
  return os.str();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

enum class Format { plain, latex, js };

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "latex") return Format::latex;
  if (s == "json") return Format::js;
  throw ParseError("unknown format '" + s + "'");
}

struct QSpec {
  bool symbolic = true;
  Rational value;
};

QSpec parse_q(const std::string& s) {
  if (s == "symbolic") return {};
  QSpec q;
  q.symbolic = false;
  q.value = parse_rational(s);
  if (q.value == 0) throw ParseError("--q must be nonzero");
  return q;
}

std::pair<int, int> parse_c_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw ParseError("--c-range wants the form lo:hi");
  try {
    int lo = std::stoi(s.substr(0, colon));
    int hi = std::stoi(s.substr(colon + 1));
    if (lo > hi) throw ParseError("--c-range is empty");
    return {lo, hi};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("--c-range wants integers lo:hi");
  }
}

PresentationPtr resolve_presentation(const std::string& spec,
                                     const std::vector<std::string>& labels,
                                     int dim) {
  if (spec == "uniform-q")
    return std::make_shared<AlgebraPresentation>(AlgebraPresentation::uniform_q(
        "uniform-q-" + std::to_string(dim), labels));
  if (spec == "free")
    return std::make_shared<AlgebraPresentation>(
        AlgebraPresentation::free_algebra("free-" + std::to_string(dim), labels));
  auto pres = std::make_shared<AlgebraPresentation>(
      parse_presentation(read_file(spec)));
  return pres;
}

// Builtin desk-scale matrices used by the verification suites.
SkewMatrixNum builtin_numeric_4x4() {
  SkewMatrixNum a(4);
  a.set(1, 2, 3); a.set(1, 3, 2); a.set(1, 4, 5);
  a.set(2, 3, 7); a.set(2, 4, 4); a.set(3, 4, 6);
  return a;
}

SkewMatrixNum builtin_numeric_6x6() {
  SkewMatrixNum b(6);
  b.set(1, 2, 1); b.set(1, 3, 4); b.set(1, 4, 7); b.set(1, 5, 3); b.set(1, 6, 5);
  b.set(2, 3, 2); b.set(2, 4, 6); b.set(2, 5, 8); b.set(2, 6, 4);
  b.set(3, 4, 9); b.set(3, 5, 5); b.set(3, 6, 7);
  b.set(4, 5, 1); b.set(4, 6, 3); b.set(5, 6, 2);
  return b;
}

struct CheckList {
  std::vector<json> checks;
  int failed = 0;
  int informational = 0;

  void add(const std::string& name, bool pass, const std::string& expected,
           const std::string& actual, bool informational = false) {
    json c;
    c["name"] = name;
    c["pass"] = pass;
    c["expected"] = expected;
    c["actual"] = actual;
    if (informational) {
      c["informational"] = true;
      ++this->informational;
    }
    checks.push_back(c);
    if (!pass && !informational) ++failed;
  }
};

void print_checks_plain(const CheckList& cl) {
  for (const auto& c : cl.checks) {
    const bool info = c.contains("informational");
    std::cout << (c["pass"].get<bool>() ? "ok  " : (info ? "info" : "FAIL"))
              << "  " << c["name"].get<std::string>()
              << "  expected=" << c["expected"].get<std::string>()
              << "  actual=" << c["actual"].get<std::string>() << "\n";
  }
  const std::size_t counted = cl.checks.size() - cl.informational;
  std::cout << (cl.failed == 0 ? "PASS" : "FAIL") << " ("
            << counted - cl.failed << "/" << counted << " checks";
  if (cl.informational) std::cout << ", " << cl.informational << " informational";
  std::cout << ")\n";
}

json base_report(const std::string& command, const json& inputs,
                 const Timer& timer) {
  json r;
  r["command"] = command;
  r["inputs"] = inputs;
  r["timing_ms"] = timer.ms();
  r["version"] = kVersion;
  return r;
}

std::string scan_status_text(const IdentityScanResult& r) {
  return r.status == IdentityScanResult::Status::ExactPower ? "ExactPower"
                                                            : "Failure";
}

json scan_to_json(const IdentityScanResult& r, const AlgebraPresentation& pres) {
  json out;
  out["status"] = scan_status_text(r);
  out["sign"] = r.sign;
  out["c"] = r.c;
  out["presentation"] = r.presentation_name;
  if (r.status == IdentityScanResult::Status::Failure) {
    out["residual_terms"] = r.residual.term_count();
    out["residual"] = to_string(r.residual, pres);
  }
  return out;
}

// ---------------------------------------------------------------------------
// pf / det
// ---------------------------------------------------------------------------

int run_value_command(const std::string& command, const std::string& path,
                      std::string mode, const QSpec& q,
                      const std::string& pres_spec, Format format) {
  Timer timer;
  const std::string bytes = read_file(path);
  ParsedMatrix pm = parse_matrix_text(bytes);
  if (mode == "auto") mode = pm.symbolic ? "quantum" : "classical";

  json inputs;
  inputs["matrix_file"] = path;
  inputs["digest"] = digest_hex(bytes);
  inputs["mode"] = mode;
  inputs["q"] = q.symbolic ? "symbolic" : to_string(q.value);

  if (mode == "classical") {
    if (pm.symbolic)
      throw ParseError("classical mode needs a numeric matrix file");
    if (pm.dim > kMaxNumericDim)
      throw DomainError("numeric matrices are capped at dimension " +
                        std::to_string(kMaxNumericDim));
    SkewMatrixNum a = to_numeric(pm);
    Rational value = command == "pf" ? classical_pfaffian(a)
                                     : classical_determinant(a);
    if (format == Format::js) {
      json r = base_report(command, inputs, timer);
      r["output"] = to_string(value);
      std::cout << r.dump(2) << "\n";
    } else {
      std::cout << to_string(value) << "\n";
    }
    return 0;
  }

  if (!pm.symbolic)
    throw ParseError("quantum mode needs a symbolic matrix file");
  if (pm.dim > kMaxSymbolicDim)
    throw DomainError("symbolic matrices are capped at dimension " +
                      std::to_string(kMaxSymbolicDim));
  inputs["presentation"] = pres_spec;
  SkewMatrixSym a = to_symbolic(pm, resolve_presentation(pres_spec, pm.labels, pm.dim));
  NCPolynomial value = command == "pf" ? quantum_pfaffian(a)
                                       : quantum_determinant(a);
  std::string rendered;
  if (q.symbolic) {
    rendered = format == Format::latex ? to_latex(value, a.presentation())
                                       : to_string(value, a.presentation());
  } else {
    NCPolynomial spec = specialize_q(value, q.value, q.value == 1);
    AlgebraPresentation sp = a.presentation().specialize(q.value);
    rendered = format == Format::latex ? to_latex(spec, sp) : to_string(spec, sp);
  }
  if (format == Format::js) {
    json r = base_report(command, inputs, timer);
    r["output"] = rendered;
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << rendered << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// wedge
// ---------------------------------------------------------------------------

int run_wedge(const std::string& path, const std::string& what, const QSpec& q,
              const std::string& pres_spec, Format format) {
  Timer timer;
  const std::string bytes = read_file(path);
  ParsedMatrix pm = parse_matrix_text(bytes);
  if (!pm.symbolic) throw ParseError("wedge commands need a symbolic matrix");
  if (pm.dim > kMaxSymbolicDim)
    throw DomainError("symbolic matrices are capped at dimension " +
                      std::to_string(kMaxSymbolicDim));
  SkewMatrixSym a = to_symbolic(pm, resolve_presentation(pres_spec, pm.labels, pm.dim));

  json inputs;
  inputs["matrix_file"] = path;
  inputs["digest"] = digest_hex(bytes);
  inputs["what"] = what;
  inputs["q"] = q.symbolic ? "symbolic" : to_string(q.value);
  inputs["presentation"] = pres_spec;

  auto render_poly = [&](const NCPolynomial& p) {
    if (q.symbolic)
      return format == Format::latex ? to_latex(p, a.presentation())
                                     : to_string(p, a.presentation());
    NCPolynomial spec = specialize_q(p, q.value, q.value == 1);
    AlgebraPresentation sp = a.presentation().specialize(q.value);
    return format == Format::latex ? to_latex(spec, sp) : to_string(spec, sp);
  };

  if (what == "omega") {
    WedgeElement omega = omega_from_matrix(a);
    json terms = json::array();
    std::string plain;
    for (const auto& [tuple, coef] : omega.terms()) {
      std::string basis;
      std::string basis_latex;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        basis += (i ? "^" : "") + std::string("v") + std::to_string(tuple[i]);
        basis_latex += (i ? " \\wedge " : "") + std::string("v_{") +
                       std::to_string(tuple[i]) + "}";
      }
      if (format == Format::latex) {
        if (!plain.empty()) plain += " + ";
        plain += render_poly(coef) + " \\, " + basis_latex;
      } else {
        if (!plain.empty()) plain += " + ";
        plain += "(" + render_poly(coef) + ")*" + basis;
      }
      json t;
      t["basis"] = basis;
      t["coefficient"] = render_poly(coef);
      terms.push_back(t);
    }
    if (format == Format::js) {
      json r = base_report("wedge", inputs, timer);
      r["output"]["omega"] = terms;
      std::cout << r.dump(2) << "\n";
    } else {
      std::cout << plain << "\n";
    }
    return 0;
  }

  if (what != "top") throw ParseError("--what must be omega or top");
  WedgeTopResult wt = wedge_power_top(a);
  std::string ratio;
  if (q.symbolic) {
    ratio = wt.ratio_to_matching_pf
                ? wt.ratio_to_matching_pf->to_string_compact()
                : "none";
  } else {
    auto r = wedge_ratio_at(a, q.value);
    ratio = r ? to_string(*r) : "none";
  }
  if (format == Format::js) {
    json r = base_report("wedge", inputs, timer);
    r["output"]["top"] = render_poly(wt.top);
    r["output"]["ratio_to_matching_pf"] = ratio;
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "top: " << render_poly(wt.top) << "\n";
    std::cout << "ratio to matching-sum Pfaffian: " << ratio << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// frt
// ---------------------------------------------------------------------------

int run_frt(const std::string& action, int n, Format format) {
  Timer timer;
  if (n < 1 || n > kMaxTensorN)
    throw DomainError("frt supports 1 <= n <= " + std::to_string(kMaxTensorN));
  json inputs;
  inputs["action"] = action;
  inputs["n"] = n;

  if (action == "r-matrix") {
    RMatrix r = build_r_matrix(n);
    if (format == Format::js) {
      json rep = base_report("frt", inputs, timer);
      rep["output"]["triplets"] = print_r_matrix(r);
      std::cout << rep.dump(2) << "\n";
    } else {
      std::cout << print_r_matrix(r);
    }
    return 0;
  }
  if (action == "ybe") {
    YbeReport rep = check_ybe(build_r_matrix(n));
    if (format == Format::js) {
      json out = base_report("frt", inputs, timer);
      out["output"]["ybe"] = rep.ok;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "YBE: " << (rep.ok ? "PASS" : "FAIL") << "\n";
    }
    return rep.ok ? 0 : 1;
  }
  if (action == "relations") {
    auto rels = extract_rtt_relations(build_r_matrix(n));
    AlgebraPresentation pres = quantum_matrix_presentation(n);
    json list = json::array();
    for (const auto& rel : rels) {
      std::string line = to_string(rel.lhs, pres) + " = " + to_string(rel.rhs, pres);
      list.push_back(line);
      if (format != Format::js) std::cout << line << "\n";
    }
    if (format == Format::js) {
      json out = base_report("frt", inputs, timer);
      out["output"]["relations"] = list;
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  }
  if (action == "central") {
    bool ok = check_detq_central(2);
    if (format == Format::js) {
      json out = base_report("frt", inputs, timer);
      out["output"]["central"] = ok;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "CENTRAL: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
  }
  throw ParseError("unknown frt action '" + action + "'");
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& suite, int size, int n, int trials,
               std::uint64_t seed, const QSpec& q, std::pair<int, int> c_range,
               const std::string& pres_spec, Format format) {
  Timer timer;
  CheckList cl;
  json inputs;
  inputs["suite"] = suite;
  inputs["size"] = size;
  inputs["n"] = n;
  inputs["trials"] = trials;
  inputs["seed"] = seed;
  inputs["q"] = q.symbolic ? "symbolic" : to_string(q.value);

  if (suite == "classical-identity") {
    {
      SkewMatrixNum a = builtin_numeric_4x4();
      Rational pf = classical_pfaffian(a);
      Rational det = classical_determinant(a);
      cl.add("pf(builtin 4x4)", pf == 45, "45", to_string(pf));
      cl.add("det(builtin 4x4)", det == 2025, "2025", to_string(det));
      cl.add("pf^2 = det (4x4)", pf * pf == det, to_string(det), to_string(pf * pf));
    }
    {
      SkewMatrixNum b = builtin_numeric_6x6();
      Rational pf = classical_pfaffian(b);
      Rational det = classical_determinant(b);
      cl.add("pf^2 = det (6x6, two routes)", pf * pf == det, to_string(det),
             to_string(pf * pf));
      cl.add("pf(builtin 6x6) vs reference 540", pf == 540, "540", to_string(pf),
             /*informational=*/true);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    bool all = true;
    for (int two_n : {2, 4, 6}) {
      for (int t = 0; t < trials; ++t) {
        SkewMatrixNum a(two_n);
        for (int i = 1; i <= two_n; ++i)
          for (int j = i + 1; j <= two_n; ++j) a.set(i, j, dist(rng));
        Rational pf = classical_pfaffian(a);
        if (pf * pf != classical_determinant(a)) all = false;
      }
    }
    cl.add("random pf^2 = det (2n in {2,4,6}, " + std::to_string(trials) +
               " trials each)",
           all, "exact equality", all ? "exact equality" : "mismatch");
  } else if (suite == "quantum-scan") {
    if (size == 0) size = 4;
    if (size % 2 != 0 || size < 2 || size > kMaxSymbolicDim)
      throw DomainError("quantum-scan wants even 2 <= 2n <= " +
                        std::to_string(kMaxSymbolicDim));
    auto labels = SkewMatrixSym::default_labels(size);
    SkewMatrixSym a(size, labels, resolve_presentation(pres_spec, labels, size));
    inputs["presentation"] = a.presentation().name();
    if (q.symbolic) {
      IdentityScanResult left = identity_scan(a, c_range.first, c_range.second,
                                              Strategy::leftmost);
      IdentityScanResult right = identity_scan(a, c_range.first, c_range.second,
                                               Strategy::rightmost);
      const bool stable = left.status == right.status && left.sign == right.sign &&
                          left.c == right.c && left.residual == right.residual;
      cl.add("scan stable across reduction strategies", stable, "identical reports",
             stable ? "identical reports" : "reports differ");
      cl.add("scan report", true,
             "status recorded",
             scan_status_text(left) + " sign=" + std::to_string(left.sign) +
                 " c=" + std::to_string(left.c) +
                 (left.status == IdentityScanResult::Status::Failure
                      ? " residual_terms=" + std::to_string(left.residual.term_count())
                      : ""),
             /*informational=*/true);
      if (format == Format::js) inputs["scan"] = scan_to_json(left, a.presentation());
    } else {
      IdentityScanResult r =
          identity_scan_at(a, q.value, c_range.first, c_range.second);
      if (q.value == 1) {
        const bool ok = r.status == IdentityScanResult::Status::ExactPower &&
                        r.sign == 1 && r.c == 0;
        cl.add("classical collapse at q=1: ExactPower sign=+1 c=0", ok,
               "ExactPower sign=1 c=0",
               scan_status_text(r) + " sign=" + std::to_string(r.sign) +
                   " c=" + std::to_string(r.c));
      } else {
        cl.add("scan report at q=" + to_string(q.value), true, "status recorded",
               scan_status_text(r) + " sign=" + std::to_string(r.sign) +
                   " c=" + std::to_string(r.c),
               /*informational=*/true);
      }
    }
  } else if (suite == "ybe") {
    const int hi = n > 0 ? n : kMaxTensorN;
    if (hi > kMaxTensorN)
      throw DomainError("ybe is capped at n = " + std::to_string(kMaxTensorN));
    for (int k = 1; k <= hi; ++k) {
      YbeReport rep = check_ybe(build_r_matrix(k));
      cl.add("YBE n=" + std::to_string(k), rep.ok, "exact equality",
             rep.ok ? "exact equality" : "mismatch");
    }
  } else if (suite == "centrality") {
    AlgebraPresentation pres = quantum_matrix_presentation(2);
    NCPolynomial d = quantum_matrix_determinant(pres, 2);
    cl.add("det_q central (n=2)", is_central(d, pres), "true",
           is_central(d, pres) ? "true" : "false");
    // negative control: drop the q weight
    NCPolynomial wrong =
        normal_form(NCPolynomial::term(Word{0, 3}, Laurent::one()) -
                        NCPolynomial::term(Word{1, 2}, Laurent::one()),
                    pres);
    cl.add("q-less determinant not central (negative control)",
           !is_central(wrong, pres), "false", is_central(wrong, pres) ? "true" : "false");
  } else if (suite == "wedge-cross-check") {
    for (int two_n : {2, 4}) {
      SkewMatrixSym a = SkewMatrixSym::uniform(two_n);
      const int half = two_n / 2;
      long factorial = 1;
      for (int k = 2; k <= half; ++k) factorial *= k;
      WedgeTopResult wt = wedge_power_top(a);
      const bool has_ratio = wt.ratio_to_matching_pf.has_value();
      const bool s1_ok =
          has_ratio &&
          wt.ratio_to_matching_pf->eval_at(1) == Rational(factorial);
      cl.add("2n=" + std::to_string(two_n) +
                 ": top = s(q) * Pf_q with s(1) = " + std::to_string(factorial),
             s1_ok, "pure scalar ratio",
             has_ratio ? "s(q) = " + wt.ratio_to_matching_pf->to_string_compact()
                       : "no pure scalar ratio exists");
      auto r1 = wedge_ratio_at(a, 1);
      cl.add("2n=" + std::to_string(two_n) + ": ratio at q=1 equals " +
                 std::to_string(factorial),
             r1 && *r1 == factorial, std::to_string(factorial),
             r1 ? to_string(*r1) : "none");
    }
  } else if (suite == "matching-counts") {
    const int hi = size > 0 ? std::min(size, 10) : 8;
    std::vector<long> expected = {1, 3, 15, 105, 945};
    for (int two_n = 2, idx = 0; two_n <= hi; two_n += 2, ++idx) {
      long count = 0;
      for_each_matching(two_n, [&](const PerfectMatching&) { ++count; });
      cl.add("matchings(2n=" + std::to_string(two_n) + ")",
             count == expected[idx] && count == double_factorial_odd(two_n),
             std::to_string(expected[idx]), std::to_string(count));
    }
  } else {
    throw ParseError("unknown suite '" + suite + "'");
  }

  if (format == Format::js) {
    json r = base_report("verify", inputs, timer);
    r["checks"] = cl.checks;
    r["passed"] = cl.checks.size() - cl.failed;
    r["failed"] = cl.failed;
    std::cout << r.dump(2) << "\n";
  } else {
    print_checks_plain(cl);
  }
  return cl.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic toolkit for q-deformed Pfaffians, determinants, "
               "noncommutative rewriting, and R-matrix experiments"};
  app.require_subcommand(1);

  std::string format_str = "plain";
  app.add_option("--format", format_str, "Output format: plain|latex|json")
      ->capture_default_str();

  // pf / det
  std::string pf_file, det_file;
  std::string pf_mode = "auto", det_mode = "auto";
  std::string pf_q = "symbolic", det_q = "symbolic";
  std::string pf_pres = "uniform-q", det_pres = "uniform-q";
  auto* pf_cmd = app.add_subcommand("pf", "Pfaffian of a skew matrix file");
  pf_cmd->fallthrough();
  pf_cmd->add_option("matrix", pf_file, "matrix file")->required();
  pf_cmd->add_option("--mode", pf_mode, "classical|quantum (default: by file mode)");
  pf_cmd->add_option("--q", pf_q, "symbolic or a nonzero rational");
  pf_cmd->add_option("--presentation", pf_pres, "uniform-q, free, or a file");
  auto* det_cmd = app.add_subcommand("det", "Determinant of a matrix file");
  det_cmd->fallthrough();
  det_cmd->add_option("matrix", det_file, "matrix file")->required();
  det_cmd->add_option("--mode", det_mode, "classical|quantum (default: by file mode)");
  det_cmd->add_option("--q", det_q, "symbolic or a nonzero rational");
  det_cmd->add_option("--presentation", det_pres, "uniform-q, free, or a file");

  // wedge
  std::string wedge_file, wedge_what = "top", wedge_q = "symbolic",
              wedge_pres = "uniform-q";
  auto* wedge_cmd =
      app.add_subcommand("wedge", "Quantum 2-form and its top wedge power");
  wedge_cmd->fallthrough();
  wedge_cmd->add_option("matrix", wedge_file, "symbolic matrix file")->required();
  wedge_cmd->add_option("--what", wedge_what, "omega|top");
  wedge_cmd->add_option("--q", wedge_q, "symbolic or a nonzero rational");
  wedge_cmd->add_option("--presentation", wedge_pres, "uniform-q, free, or a file");

  // frt
  std::string frt_action = "ybe";
  int frt_n = 2;
  auto* frt_cmd = app.add_subcommand("frt", "R-matrix laboratory");
  frt_cmd->fallthrough();
  frt_cmd->add_option("--action", frt_action, "r-matrix|ybe|relations|central")
      ->required();
  frt_cmd->add_option("--n", frt_n, "module dimension (<= 3)");

  // verify
  std::string suite;
  int v_size = 0, v_n = 0, v_trials = 50;
  std::uint64_t v_seed = 20260810ull;
  std::string v_q = "symbolic", v_pres = "uniform-q", v_crange = "-32:32";
  auto* verify_cmd = app.add_subcommand("verify", "Verification suites");
  verify_cmd->fallthrough();
  verify_cmd
      ->add_option("--suite", suite,
                   "classical-identity|quantum-scan|ybe|centrality|"
                   "wedge-cross-check|matching-counts")
      ->required();
  verify_cmd->add_option("--size", v_size, "matrix dimension 2n (default: per suite)");
  verify_cmd->add_option("--n", v_n, "tensor dimension for ybe");
  verify_cmd->add_option("--trials", v_trials, "random trials");
  verify_cmd->add_option("--seed", v_seed, "random seed");
  verify_cmd->add_option("--q", v_q, "symbolic or a nonzero rational");
  verify_cmd->add_option("--presentation", v_pres, "uniform-q, free, or a file");
  verify_cmd->add_option("--c-range", v_crange, "exponent search range lo:hi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(format_str);
    if (pf_cmd->parsed())
      return run_value_command("pf", pf_file, pf_mode, parse_q(pf_q), pf_pres,
                               format);
    if (det_cmd->parsed())
      return run_value_command("det", det_file, det_mode, parse_q(det_q),
                               det_pres, format);
    if (wedge_cmd->parsed())
      return run_wedge(wedge_file, wedge_what, parse_q(wedge_q), wedge_pres,
                       format);
    if (frt_cmd->parsed()) return run_frt(frt_action, frt_n, format);
    if (verify_cmd->parsed())
      return run_verify(suite, v_size, v_n, v_trials, v_seed, parse_q(v_q),
                        parse_c_range(v_crange), v_pres, format);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroBase& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MissingRelation& e) {
    std::cerr << "algebra error: " << e.what() << "\n";
    return 3;
  } catch (const NotOrientable& e) {
    std::cerr << "algebra error: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateInput& e) {
    std::cerr << "algebra error: " << e.what() << "\n";
    return 3;
  }
}
