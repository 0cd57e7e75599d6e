#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qquad/charsum.hpp"
#include "qquad/suites.hpp"

namespace py = pybind11;
using namespace qquad;

namespace {

std::vector<int> out(const Fq2Elem& x) {
  auto cs = x.coeffs();
  return {cs.begin(), cs.end()};
}

Fq2Elem in(const FieldCtx& F, const std::vector<uint32_t>& coeffs) {
  return F.from_coeffs(coeffs);
}

using Coeffs = std::vector<uint32_t>;

py::dict count_dict(const FieldCtx& F, const ZeroCountResult& r) {
  py::dict d;
  d["count"] = r.count;
  d["method"] = count_method_name(r.method);
  switch (r.method) {
    case CountMethod::PropN1Cubic:
    case CountMethod::AnyCharCubic:
      d["cubic"] = py::make_tuple(out(r.cubic.A), out(r.cubic.B), out(r.cubic.C));
      break;
    case CountMethod::PropN1Eta:
      d["eta_arg"] = out(r.eta_arg);
      d["eta"] = r.eta_val;
      d["m0"] = r.m0;
      break;
    case CountMethod::AnyCharQuadratic:
      d["quad"] = py::make_tuple(out(r.quad_b), out(r.quad_c));
      break;
    case CountMethod::PropN2:
      d["A0"] = out(r.A0);
      d["A1"] = out(r.A1);
      d["A2"] = out(r.A2);
      if (!r.omega.is_zero()) d["omega"] = out(r.omega);
      break;
    default:
      break;
  }
  return d;
}

py::dict report_dict(const ConditionReport& r) {
  py::dict d;
  d["holds"] = r.holds;
  py::dict w;
  for (const auto& [k, v] : r.witnesses) w[py::str(k)] = v;
  d["witnesses"] = w;
  return d;
}

PermFamily family_from(const std::string& name) {
  if (name == "odd-kind1") return PermFamily::OddKind1;
  if (name == "even-kind1") return PermFamily::EvenKind1;
  if (name == "kind2") return PermFamily::Kind2;
  throw Error(ErrorCode::ParseError, "unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_qquad, m) {
  m.doc() = "zero counts of q-quadratic polynomials over F_{q^2} and "
            "permutation rational function tests, with brute-force oracles";

  py::register_exception<Error>(m, "Error");

  py::class_<FieldCtx>(m, "FieldCtx")
      .def(py::init<uint32_t, uint32_t>(), py::arg("p"), py::arg("m"))
      .def(py::init([](const std::string& spec) {
             FieldSpec fs = parse_field_spec(spec);
             return std::make_unique<FieldCtx>(fs.p, fs.m);
           }),
           py::arg("spec"))
      .def_property_readonly("p", &FieldCtx::p)
      .def_property_readonly("m", &FieldCtx::m)
      .def_property_readonly("q", &FieldCtx::q)
      .def_property_readonly("q2", &FieldCtx::q2)
      .def_property_readonly("modulus",
                             [](const FieldCtx& F) {
                               auto ms = F.modulus();
                               return std::vector<int>(ms.begin(), ms.end());
                             })
      .def_property_readonly("zero", [](const FieldCtx& F) { return out(F.zero()); })
      .def_property_readonly("one", [](const FieldCtx& F) { return out(F.one()); })
      .def_property_readonly("generator",
                             [](const FieldCtx& F) { return out(F.generator()); })
      .def_property_readonly("epsilon0",
                             [](const FieldCtx& F) { return out(F.epsilon0()); })
      .def("add", [](const FieldCtx& F, const Coeffs& x, const Coeffs& y) {
        return out(F.add(in(F, x), in(F, y)));
      })
      .def("sub", [](const FieldCtx& F, const Coeffs& x, const Coeffs& y) {
        return out(F.sub(in(F, x), in(F, y)));
      })
      .def("mul", [](const FieldCtx& F, const Coeffs& x, const Coeffs& y) {
        return out(F.mul(in(F, x), in(F, y)));
      })
      .def("neg", [](const FieldCtx& F, const Coeffs& x) { return out(F.neg(in(F, x))); })
      .def("inv", [](const FieldCtx& F, const Coeffs& x) { return out(F.inv(in(F, x))); })
      .def("pow", [](const FieldCtx& F, const Coeffs& x, uint64_t e) {
        return out(F.pow(in(F, x), e));
      })
      .def("frobenius_q",
           [](const FieldCtx& F, const Coeffs& x) { return out(F.frobenius_q(in(F, x))); })
      .def("trace", [](const FieldCtx& F, const Coeffs& x) { return out(F.trace(in(F, x))); })
      .def("norm", [](const FieldCtx& F, const Coeffs& x) { return out(F.norm(in(F, x))); })
      .def("in_subfield",
           [](const FieldCtx& F, const Coeffs& x) { return F.in_subfield(in(F, x)); })
      .def("quadratic_character",
           [](const FieldCtx& F, const Coeffs& x) { return F.quadratic_character(in(F, x)); })
      .def("solve_qminus1_power",
           [](const FieldCtx& F, const Coeffs& c) {
             return out(F.solve_qminus1_power(in(F, c)));
           })
      .def("index_of",
           [](const FieldCtx& F, const Coeffs& x) { return F.index_of(in(F, x)); })
      .def("element_of_index",
           [](const FieldCtx& F, uint64_t i) { return out(F.element_of_index(i)); })
      .def("subfield",
           [](const FieldCtx& F) {
             std::vector<std::vector<int>> r;
             for (const Fq2Elem& u : F.subfield_elements()) r.push_back(out(u));
             return r;
           })
      .def("__repr__", [](const FieldCtx& F) {
        return "FieldCtx(" + format_field_spec(F) + ")";
      });

  // characters
  m.def("psi", [](const FieldCtx& F, const Coeffs& u) { return psi(F, in(F, u)); });
  m.def("chi", [](const FieldCtx& F, const Coeffs& x) { return chi(F, in(F, x)); });
  m.def("gauss_sum", [](const FieldCtx& F) { return gauss_sum(F); });
  m.def("solve_theta",
        [](const FieldCtx& F, const Coeffs& A, const Coeffs& B, const Coeffs& C)
            -> std::optional<std::vector<int>> {
          auto th = solve_theta(F, {in(F, A), in(F, B), in(F, C)});
          if (!th) return std::nullopt;
          return out(*th);
        });
  m.def("charsum_closed",
        [](const FieldCtx& F, const Coeffs& A, const Coeffs& B, const Coeffs& C) {
          CharSumValue v = charsum_closed(F, {in(F, A), in(F, B), in(F, C)});
          py::dict d;
          d["branch"] = charsum_branch_name(v.branch);
          d["value"] = v.value;
          d["eta_d"] = v.eta_d;
          if (v.theta) d["theta"] = out(*v.theta);
          return d;
        });
  m.def("charsum_bruteforce",
        [](const FieldCtx& F, const Coeffs& A, const Coeffs& B, const Coeffs& C) {
          return charsum_bruteforce(F, {in(F, A), in(F, B), in(F, C)});
        });

  // zero counts
  m.def("count_zeros_bruteforce",
        [](const FieldCtx& F, int e, const Coeffs& alpha, const Coeffs& beta,
           const Coeffs& a, const Coeffs& b, const Coeffs& c) {
          QQuadPoly g{e, in(F, alpha), in(F, beta), in(F, a), in(F, b), in(F, c)};
          return count_zeros_bruteforce(F, g).count;
        },
        py::arg("F"), py::arg("e"), py::arg("alpha"), py::arg("beta"), py::arg("a"),
        py::arg("b"), py::arg("c"));
  m.def("count_zeros_kind1_oddq",
        [](const FieldCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& c) {
          return count_dict(F, count_zeros_kind1_oddq(F, in(F, a), in(F, b), in(F, c)));
        });
  m.def("count_zeros_kind1_anychar",
        [](const FieldCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& c) {
          return count_dict(F,
                            count_zeros_kind1_anychar(F, in(F, a), in(F, b), in(F, c)));
        });
  m.def("count_zeros_kind2",
        [](const FieldCtx& F, const Coeffs& beta, const Coeffs& a, const Coeffs& b,
           const Coeffs& c) {
          return count_dict(
              F, count_zeros_kind2(F, in(F, beta), in(F, a), in(F, b), in(F, c)));
        });
  m.def("count_zeros_kind2_general",
        [](const FieldCtx& F, const Coeffs& alpha, const Coeffs& beta, const Coeffs& a,
           const Coeffs& b, const Coeffs& c) {
          return count_dict(F, count_zeros_kind2_general(F, in(F, alpha), in(F, beta),
                                                         in(F, a), in(F, b), in(F, c)));
        });
  m.def("cubic_discriminant",
        [](const FieldCtx& F, const Coeffs& A, const Coeffs& B, const Coeffs& C) {
          return out(cubic_discriminant(F, {in(F, A), in(F, B), in(F, C)}));
        });
  m.def("cubic_root_count",
        [](const FieldCtx& F, const Coeffs& A, const Coeffs& B, const Coeffs& C) {
          return cubic_root_count(F, {in(F, A), in(F, B), in(F, C)});
        });
  m.def("cubic_has_unique_root",
        [](const FieldCtx& F, const Coeffs& A, const Coeffs& B, const Coeffs& C) {
          return cubic_has_unique_root(F, {in(F, A), in(F, B), in(F, C)});
        });
  m.def("quad_irreducible_artin_schreier",
        [](const FieldCtx& F, const Coeffs& cbar) {
          return quad_irreducible_artin_schreier(F, in(F, cbar));
        });

  // permutation testing
  m.def("is_permutation_bruteforce",
        [](const FieldCtx& F, int e, const Coeffs& alpha, const Coeffs& beta,
           const Coeffs& a, const Coeffs& b, const Coeffs& c, const Coeffs& d) {
          QQuadPoly g{e, in(F, alpha), in(F, beta), in(F, a), in(F, b), in(F, c)};
          return is_permutation_bruteforce(F, make_rational_fn(F, g, in(F, d)));
        },
        py::arg("F"), py::arg("e"), py::arg("alpha"), py::arg("beta"), py::arg("a"),
        py::arg("b"), py::arg("c"), py::arg("d"));
  m.def("thm_odd_kind1",
        [](const FieldCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& c,
           const Coeffs& d) {
          return report_dict(thm_odd_kind1(F, in(F, a), in(F, b), in(F, c), in(F, d)));
        });
  m.def("thm_even_kind1",
        [](const FieldCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& c,
           const Coeffs& d) {
          return report_dict(thm_even_kind1(F, in(F, a), in(F, b), in(F, c), in(F, d)));
        });
  m.def("prop_normone_kind1",
        [](const FieldCtx& F, const Coeffs& beta, const Coeffs& a, const Coeffs& b,
           const Coeffs& c, const Coeffs& d) {
          return report_dict(prop_normone_kind1(F, in(F, beta), in(F, a), in(F, b),
                                                in(F, c), in(F, d)));
        });
  m.def("prop_kind2",
        [](const FieldCtx& F, const Coeffs& beta, const Coeffs& a, const Coeffs& b,
           const Coeffs& c, const Coeffs& d) {
          return report_dict(
              prop_kind2(F, in(F, beta), in(F, a), in(F, b), in(F, c), in(F, d)));
        });
  m.def("reduce_general_numerator",
        [](const FieldCtx& F, const Coeffs& alpha, const Coeffs& beta, const Coeffs& a,
           const Coeffs& b, const Coeffs& c, const Coeffs& d) {
          auto r = reduce_general_numerator(F, in(F, alpha), in(F, beta), in(F, a),
                                            in(F, b), in(F, c), in(F, d));
          py::dict out_d;
          out_d["a"] = out(r.reduced.numerator.a);
          out_d["b"] = out(r.reduced.numerator.b);
          out_d["c"] = out(r.reduced.numerator.c);
          out_d["d"] = out(r.reduced.d);
          out_d["lambda"] = out(r.lambda);
          out_d["t_c1"] = out(r.t_c1);
          out_d["t_c0"] = out(r.t_c0);
          return out_d;
        });
  m.def("enumerate_permutations",
        [](const FieldCtx& F, const std::string& family) {
          auto list = enumerate_permutations(F, family_from(family));
          py::list result;
          for (const PermTuple& t : list) {
            py::dict d;
            d["beta"] = out(t.beta);
            d["a"] = out(t.a);
            d["b"] = out(t.b);
            d["c"] = out(t.c);
            d["d"] = out(t.d);
            result.append(d);
          }
          return result;
        });

  // verification suites
  m.def("run_suite",
        [](const FieldCtx& F, const std::string& suite, bool exhaustive,
           uint64_t samples, uint64_t seed) {
          auto id = suites::suite_from_name(suite);
          if (!id) throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "'");
          suites::SuiteOptions opts;
          opts.exhaustive = exhaustive;
          opts.samples = samples;
          opts.seed = seed;
          auto rep = suites::run_suite(*id, F, opts);
          py::dict d;
          d["suite"] = rep.suite;
          d["field"] = rep.field;
          d["instances"] = rep.instances;
          d["mismatch_count"] = rep.mismatch_count;
          d["pass"] = rep.pass();
          return d;
        },
        py::arg("F"), py::arg("suite"), py::arg("exhaustive") = true,
        py::arg("samples") = 2000, py::arg("seed") = 1);
  m.def("suite_names", [] {
    std::vector<std::string> names;
    for (auto id : suites::all_suites()) names.push_back(suites::suite_name(id));
    return names;
  });

  m.attr("__version__") = "0.1.0";
}
