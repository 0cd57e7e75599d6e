// Command-line surface: per-instance queries against the closed forms, family
// enumeration, and the oracle verification harness.
//
// Exit codes: 0 pass, 1 mismatch/verification failure, 2 usage error.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "qquad/charsum.hpp"
#include "qquad/suites.hpp"

using namespace qquad;

namespace {

std::unique_ptr<FieldCtx> make_ctx(const std::string& spec) {
  FieldSpec fs = parse_field_spec(spec);
  return std::make_unique<FieldCtx>(fs.p, fs.m);
}

std::string poly_str(std::span<const uint16_t> coeffs) {
  std::string s;
  for (int i = int(coeffs.size()) - 1; i >= 0; --i) {
    if (!coeffs[i]) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || coeffs[i] != 1) s += std::to_string(coeffs[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string cplx_str(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", z.real(), z.imag());
  return buf;
}

void require_coeffs(const std::vector<Fq2Elem>& v, size_t n, const char* what) {
  if (v.size() != n)
    throw Error(ErrorCode::ParseError,
                std::string("--coeffs needs ") + std::to_string(n) +
                    " semicolon-separated elements (" + what + ")");
}

int cmd_field_info(const std::string& field) {
  auto F = make_ctx(field);
  std::printf("field: %s  (p=%u, m=%u, q=%llu, q^2=%llu)\n",
              format_field_spec(*F).c_str(), F->p(), F->m(),
              (unsigned long long)F->q(), (unsigned long long)F->q2());
  std::string mod_coeffs;
  for (size_t i = 0; i < F->modulus().size(); ++i) {
    if (i) mod_coeffs += ',';
    mod_coeffs += std::to_string(F->modulus()[i]);
  }
  std::printf("modulus: %s  (%s)\n", mod_coeffs.c_str(),
              poly_str(F->modulus()).c_str());
  std::printf("generator: %s\n", format_elem(*F, F->generator()).c_str());
  if (F->odd_q())
    std::printf("epsilon0: %s\n", format_elem(*F, F->epsilon0()).c_str());
  else
    std::printf("epsilon0: (none; even q)\n");
  std::printf("subfield size: %llu\n", (unsigned long long)F->q());
  return 0;
}

void print_details(const FieldCtx& F, const ZeroCountResult& r) {
  switch (r.method) {
    case CountMethod::PropN1Cubic:
    case CountMethod::AnyCharCubic:
      std::printf("details: cubic A=%s B=%s C=%s\n", format_elem(F, r.cubic.A).c_str(),
                  format_elem(F, r.cubic.B).c_str(), format_elem(F, r.cubic.C).c_str());
      break;
    case CountMethod::PropN1Eta:
      std::printf("details: eta_arg=%s eta=%d m0=%lld\n",
                  format_elem(F, r.eta_arg).c_str(), r.eta_val, (long long)r.m0);
      break;
    case CountMethod::AnyCharQuadratic:
      std::printf("details: quadratic x^2 + (%s)x + (%s)\n",
                  format_elem(F, r.quad_b).c_str(), format_elem(F, r.quad_c).c_str());
      break;
    case CountMethod::PropN2:
      std::printf("details: A0=%s A1=%s A2=%s", format_elem(F, r.A0).c_str(),
                  format_elem(F, r.A1).c_str(), format_elem(F, r.A2).c_str());
      if (!r.omega.is_zero())
        std::printf(" omega=%s", format_elem(F, r.omega).c_str());
      std::printf("\n");
      break;
    default:
      break;
  }
}

int cmd_count_zeros(const std::string& field, const std::string& kind,
                    const std::string& coeffs) {
  auto F = make_ctx(field);
  auto elems = parse_elem_list(*F, coeffs);
  ZeroCountResult closed;
  QQuadPoly poly;
  if (kind == "kind1") {
    require_coeffs(elems, 3, "a;b;c");
    closed = count_zeros_kind1_oddq(*F, elems[0], elems[1], elems[2]);
    poly = {1, F->zero(), F->one(), elems[0], elems[1], elems[2]};
  } else if (kind == "kind1-anychar") {
    require_coeffs(elems, 3, "a;b;c");
    closed = count_zeros_kind1_anychar(*F, elems[0], elems[1], elems[2]);
    poly = {1, F->zero(), F->one(), elems[0], elems[1], elems[2]};
  } else if (kind == "kind2") {
    require_coeffs(elems, 4, "beta;a;b;c");
    closed = count_zeros_kind2(*F, elems[0], elems[1], elems[2], elems[3]);
    poly = {0, F->neg(F->frobenius_q(elems[0])), elems[0], elems[1], elems[2],
            elems[3]};
  } else if (kind == "kind2-general") {
    require_coeffs(elems, 5, "alpha;beta;a;b;c");
    closed = count_zeros_kind2_general(*F, elems[0], elems[1], elems[2], elems[3],
                                       elems[4]);
    poly = {0, elems[0], elems[1], elems[2], elems[3], elems[4]};
  } else {
    throw Error(ErrorCode::ParseError, "unknown --kind '" + kind + "'");
  }
  int64_t oracle = count_zeros_bruteforce(*F, poly).count;
  bool match = closed.count == oracle;
  std::printf("field: %s\nkind: %s\n", format_field_spec(*F).c_str(), kind.c_str());
  std::printf("closed count: %lld  (method %s)\n", (long long)closed.count,
              count_method_name(closed.method));
  print_details(*F, closed);
  std::printf("oracle count: %lld\nmatch: %s\n", (long long)oracle,
              match ? "true" : "false");
  return match ? 0 : 1;
}

int cmd_charsum(const std::string& field, const std::string& coeffs) {
  auto F = make_ctx(field);
  auto elems = parse_elem_list(*F, coeffs);
  require_coeffs(elems, 3, "A;B;C");
  CharSumParams P{elems[0], elems[1], elems[2]};
  CharSumValue v = charsum_closed(*F, P);
  std::complex<double> bf = charsum_bruteforce(*F, P);
  double tol = 1e-6 * double(F->q2());
  double diff = std::abs(v.value - bf);
  std::printf("field: %s\nbranch: %s\n", format_field_spec(*F).c_str(),
              charsum_branch_name(v.branch));
  if (v.theta) std::printf("theta: %s\n", format_elem(*F, *v.theta).c_str());
  std::printf("closed: %s\nbrute:  %s\n|diff|: %.3g  (tol %.3g)\nmatch: %s\n",
              cplx_str(v.value).c_str(), cplx_str(bf).c_str(), diff, tol,
              diff <= tol ? "true" : "false");
  return diff <= tol ? 0 : 1;
}

int cmd_is_perm(const std::string& field, const std::string& family,
                const std::string& coeffs) {
  auto F = make_ctx(field);
  auto elems = parse_elem_list(*F, coeffs);
  ConditionReport rep;
  RationalFnSpec spec;
  bool iff = false;       // condition claims equivalence
  bool never = false;     // condition claims impossibility
  if (family == "odd-kind1") {
    require_coeffs(elems, 4, "a;b;c;d");
    rep = thm_odd_kind1(*F, elems[0], elems[1], elems[2], elems[3]);
    spec = make_rational_fn(*F, {1, F->zero(), F->one(), elems[0], elems[1], elems[2]},
                            elems[3]);
    iff = true;
  } else if (family == "even-kind1") {
    require_coeffs(elems, 4, "a;b;c;d");
    rep = thm_even_kind1(*F, elems[0], elems[1], elems[2], elems[3]);
    spec = make_rational_fn(*F, {1, F->zero(), F->one(), elems[0], elems[1], elems[2]},
                            elems[3]);
  } else if (family == "normone-kind1") {
    require_coeffs(elems, 5, "beta;a;b;c;d");
    rep = prop_normone_kind1(*F, elems[0], elems[1], elems[2], elems[3], elems[4]);
    spec = make_rational_fn(*F, {1, F->zero(), elems[0], elems[1], elems[2], elems[3]},
                            elems[4]);
    never = true;
  } else if (family == "kind2") {
    require_coeffs(elems, 5, "beta;a;b;c;d");
    rep = prop_kind2(*F, elems[0], elems[1], elems[2], elems[3], elems[4]);
    spec = spec_for_family(*F, PermFamily::Kind2,
                           {elems[0], elems[1], elems[2], elems[3], elems[4]});
    iff = true;
  } else {
    throw Error(ErrorCode::ParseError, "unknown --family '" + family + "'");
  }
  bool perm = is_permutation_bruteforce(*F, spec);
  std::printf("field: %s\nfamily: %s\n", format_field_spec(*F).c_str(), family.c_str());
  std::printf("condition: %s\n", rep.holds ? "holds" : "not satisfied");
  for (const auto& [k, v] : rep.witnesses)
    std::printf("  %s = %s\n", k.c_str(), v.c_str());
  std::printf("oracle: %s\n", perm ? "permutation" : "not a permutation");
  bool consistent = iff     ? rep.holds == perm
                    : never ? !perm
                            : (!rep.holds || perm);
  std::printf("consistent: %s\n", consistent ? "true" : "false");
  return consistent ? 0 : 1;
}

int cmd_enumerate(const std::string& field, const std::string& family, bool check) {
  auto F = make_ctx(field);
  PermFamily fam;
  if (family == "odd-kind1") fam = PermFamily::OddKind1;
  else if (family == "even-kind1") fam = PermFamily::EvenKind1;
  else if (family == "kind2") fam = PermFamily::Kind2;
  else throw Error(ErrorCode::ParseError, "unknown --family '" + family + "'");

  auto list = enumerate_permutations(*F, fam);
  uint64_t bad = 0;
  for (const PermTuple& t : list) {
    if (fam == PermFamily::Kind2)
      std::printf("%s;%s;%s;%s;%s\n", format_elem(*F, t.beta).c_str(),
                  format_elem(*F, t.a).c_str(), format_elem(*F, t.b).c_str(),
                  format_elem(*F, t.c).c_str(), format_elem(*F, t.d).c_str());
    else
      std::printf("%s;%s;%s;%s\n", format_elem(*F, t.a).c_str(),
                  format_elem(*F, t.b).c_str(), format_elem(*F, t.c).c_str(),
                  format_elem(*F, t.d).c_str());
    if (check && !is_permutation_bruteforce(*F, spec_for_family(*F, fam, t))) {
      ++bad;
      std::fprintf(stderr, "oracle FAILED for the entry above\n");
    }
  }
  std::fprintf(stderr, "%zu tuples%s\n", list.size(),
               check ? (bad ? ", oracle check FAILED" : ", oracle check passed") : "");
  return bad == 0 ? 0 : 1;
}

int cmd_verify(std::vector<std::string> suite_names, std::vector<std::string> fields,
               const std::string& mode, uint64_t samples, uint64_t seed,
               double tolerance, const std::string& out_path) {
  if (samples < 1)
    throw Error(ErrorCode::ParseError, "--samples must be at least 1");
  std::vector<suites::SuiteId> ids;
  if (suite_names.empty()) {
    ids = suites::all_suites();
  } else {
    for (const auto& n : suite_names) {
      auto id = suites::suite_from_name(n);
      if (!id) throw Error(ErrorCode::ParseError, "unknown suite '" + n + "'");
      ids.push_back(*id);
    }
  }

  std::vector<suites::SuiteQReport> reports;
  for (suites::SuiteId id : ids) {
    std::vector<suites::SuiteRun> runs;
    if (fields.empty()) {
      runs = suites::default_runs(id);
    } else {
      for (const auto& f : fields) {
        suites::SuiteRun r{parse_field_spec(f), {}};
        r.opts.exhaustive = mode != "sampled";
        r.opts.samples = samples;
        runs.push_back(r);
      }
    }
    for (auto& r : runs) {
      r.opts.seed = seed;
      r.opts.tol_scale = tolerance;
      if (!fields.empty()) r.opts.samples = samples;
      FieldCtx F(r.field.p, r.field.m);
      reports.push_back(suites::run_suite(id, F, r.opts));
      const auto& rep = reports.back();
      std::fprintf(stderr, "%-14s %-6s %-10s %9llu instances  %4llu mismatches  %8.1f ms\n",
                   rep.suite.c_str(), rep.field.c_str(),
                   rep.exhaustive ? "exhaustive" : "sampled",
                   (unsigned long long)rep.instances,
                   (unsigned long long)rep.mismatch_count, rep.wall_ms);
    }
  }

  bool pass = true;
  uint64_t mismatches = 0;
  std::string lines;
  for (const auto& rep : reports) {
    pass = pass && rep.pass();
    mismatches += rep.mismatch_count;
    lines += suites::report_record(rep).dump();
    lines += '\n';
  }
  nlohmann::ordered_json overall;
  overall["overall"] = {{"pass", pass},
                        {"suites_run", reports.size()},
                        {"mismatch_count", mismatches}};
  lines += overall.dump();
  lines += '\n';

  if (!out_path.empty()) {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw Error(ErrorCode::ParseError, "cannot open --out file " + out_path);
    os << lines;
  } else {
    std::fputs(lines.c_str(), stdout);
  }
  std::fprintf(stderr, "verify: %s (%zu suite runs, %llu mismatches)\n",
               pass ? "PASS" : "FAIL", reports.size(),
               (unsigned long long)mismatches);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field zero counts and permutation rational function testing"};
  app.require_subcommand(1);

  std::string field, kind, coeffs, family, mode = "exhaustive", out_path;
  std::vector<std::string> suite_names, fields;
  uint64_t samples = 2000, seed = 1;
  double tolerance = 1e-6;
  bool check = false;

  auto* info = app.add_subcommand("field-info", "describe a field context");
  info->add_option("--field", field, "field spec p^m")->required();

  auto* cz = app.add_subcommand("count-zeros", "closed-form zero count vs oracle");
  cz->add_option("--field", field)->required();
  cz->add_option("--kind", kind, "kind1 | kind1-anychar | kind2 | kind2-general")
      ->required();
  cz->add_option("--coeffs", coeffs, "semicolon-separated elements")->required();

  auto* cs = app.add_subcommand("charsum", "character sum closed form vs summation");
  cs->add_option("--field", field)->required();
  cs->add_option("--coeffs", coeffs, "A;B;C")->required();

  auto* ip = app.add_subcommand("is-perm", "theorem condition vs permutation oracle");
  ip->add_option("--field", field)->required();
  ip->add_option("--family", family, "odd-kind1 | even-kind1 | normone-kind1 | kind2")
      ->required();
  ip->add_option("--coeffs", coeffs)->required();

  auto* en = app.add_subcommand("enumerate", "stream all condition-satisfying tuples");
  en->add_option("--field", field)->required();
  en->add_option("--family", family, "odd-kind1 | even-kind1 | kind2")->required();
  en->add_flag("--check", check, "verify each tuple against the oracle");

  auto* ve = app.add_subcommand("verify", "run oracle suites, emit JSON-lines report");
  ve->add_option("--suite", suite_names, "suite name (repeatable; default: all)");
  ve->add_option("--field", fields, "field spec (repeatable; default: per-suite)");
  ve->add_option("--mode", mode, "exhaustive | sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  ve->add_option("--samples", samples, "sample count for sampled mode");
  ve->add_option("--seed", seed, "RNG seed recorded in the report");
  ve->add_option("--tolerance", tolerance,
                 "numeric tolerance scale (default 1e-6 per summand)");
  ve->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*info) return cmd_field_info(field);
    if (*cz) return cmd_count_zeros(field, kind, coeffs);
    if (*cs) return cmd_charsum(field, coeffs);
    if (*ip) return cmd_is_perm(field, family, coeffs);
    if (*en) return cmd_enumerate(field, family, check);
    if (*ve) return cmd_verify(suite_names, fields, mode, samples, seed, tolerance, out_path);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
