// Python bindings.  Words are lists of 1-based generator letters; characters
// cross the boundary as dicts mapping weight tuples to int coefficients
// (arbitrary precision survives both directions via decimal strings).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "demazure/braid.hpp"
#include "demazure/demazure.hpp"
#include "demazure/errors.hpp"
#include "demazure/harness.hpp"
#include "demazure/json_io.hpp"

namespace py = pybind11;
using namespace demazure;

namespace {

py::int_ int_to_py(const Int& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Int int_from_py(py::handle h) { return Int(py::str(h).cast<std::string>()); }

Word to_word(const std::vector<int>& letters) {
  Word w;
  w.letters = letters;
  return w;
}

LaurentChar char_from_py(const RootDatum& datum, const py::dict& terms) {
  LaurentChar f(datum.rank);
  for (auto item : terms) {
    auto coords = item.first.cast<std::vector<std::int64_t>>();
    if (static_cast<int>(coords.size()) != datum.rank)
      throw RankMismatch("weight has " + std::to_string(coords.size()) +
                         " coordinates, datum has rank " + std::to_string(datum.rank));
    f.add_term(Weight(std::move(coords)), int_from_py(item.second));
  }
  return f;
}

py::dict char_to_py(const LaurentChar& f) {
  py::dict out;
  for (const auto& [w, c] : f.terms()) {
    py::tuple key(w.rank());
    for (int k = 0; k < w.rank(); ++k) key[k] = py::int_(w[k]);
    out[key] = int_to_py(c);
  }
  return out;
}

std::vector<int> canonical_letters(const RootDatum& datum, const WeylElt& w) {
  return canonical_word(datum, w).letters;
}

py::dict check_to_py(const CheckResult& check) {
  py::dict d;
  d["identity"] = check.identity;
  d["cases"] = check.cases;
  d["passed"] = check.passed;
  d["counterexample"] = check.passed ? py::object(py::none()) : py::object(py::str(check.counterexample));
  return d;
}

py::dict report_to_py(const SuiteReport& report) {
  py::dict d;
  d["suite"] = report.suite;
  d["passed"] = report.passed();
  py::list checks;
  for (const CheckResult& check : report.checks) checks.append(check_to_py(check));
  d["checks"] = checks;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Weyl group combinatorics, Demazure operators on character "
            "rings, braid monoid normal forms, and descent membership.";

  py::class_<RootDatum>(m, "RootDatum")
      .def(py::init([](const std::string& type) { return build_root_datum(type); }),
           py::arg("type"), "Construct from a Cartan type code such as \"A2\" or \"G2\".")
      .def_property_readonly("rank", [](const RootDatum& d) { return d.rank; })
      .def_property_readonly("type", [](const RootDatum& d) { return type_code(d); })
      .def_property_readonly("cartan",
          [](const RootDatum& d) {
            std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(d.rank));
            for (int i = 1; i <= d.rank; ++i)
              for (int j = 1; j <= d.rank; ++j)
                rows[static_cast<std::size_t>(i - 1)].push_back(d.cartan_at(i, j));
            return rows;
          })
      .def_property_readonly("positive_roots",
          [](const RootDatum& d) {
            std::vector<std::vector<std::int64_t>> out;
            for (const auto& beta : d.pos_roots) out.push_back(beta.weight.coords);
            return out;
          })
      .def("coxeter_order",
          [](const RootDatum& d, int i, int j) { return d.coxeter_order(i, j); },
          py::arg("i"), py::arg("j"))
      .def("length",
          [](const RootDatum& d, const std::vector<int>& word) {
            return word_to_element(d, to_word(word)).len;
          },
          py::arg("word"), "Coxeter length of the product of the word's letters.")
      .def("canonical_word",
          [](const RootDatum& d, const std::vector<int>& word) {
            return canonical_letters(d, word_to_element(d, to_word(word)));
          },
          py::arg("word"), "ShortLex-minimal reduced word of the product.")
      .def("longest_word",
          [](const RootDatum& d) { return canonical_letters(d, longest_element(d)); })
      .def("order",
          [](const RootDatum& d, std::size_t max_group) {
            return enumerate_group(d, max_group).size();
          },
          py::arg("max_group") = kDefaultGroupBound)
      .def("all_reduced_words",
          [](const RootDatum& d, const std::vector<int>& word) {
            std::vector<std::vector<int>> out;
            for (const Word& w : all_reduced_words(d, word_to_element(d, to_word(word))))
              out.push_back(w.letters);
            return out;
          },
          py::arg("word"))
      .def("bruhat_leq",
          [](const RootDatum& d, const std::vector<int>& u, const std::vector<int>& w) {
            return bruhat_leq(d, word_to_element(d, to_word(u)), word_to_element(d, to_word(w)));
          },
          py::arg("u"), py::arg("w"))
      .def("demazure_product",
          [](const RootDatum& d, const std::vector<int>& word) {
            return canonical_letters(d, demazure_product(d, to_word(word)));
          },
          py::arg("word"), "Canonical word of the 0-Hecke fold of the word.")
      .def("braid_equal",
          [](const RootDatum& d, const std::vector<int>& a, const std::vector<int>& b) {
            return braid_equal(d, BraidWord(a), BraidWord(b));
          },
          py::arg("a"), py::arg("b"))
      .def("braid_normal_form",
          [](const RootDatum& d, const std::vector<int>& word) {
            std::vector<std::vector<int>> out;
            for (const WeylElt& f : braid_normal_form(d, BraidWord(word)).factors)
              out.push_back(canonical_letters(d, f));
            return out;
          },
          py::arg("word"), "Left-greedy factors, each as a canonical reduced word.")
      .def("act",
          [](const RootDatum& d, const std::vector<int>& word, const py::dict& f) {
            return char_to_py(char_act(word_to_element(d, to_word(word)), char_from_py(d, f)));
          },
          py::arg("word"), py::arg("character"))
      .def("demazure",
          [](const RootDatum& d, int i, const py::dict& f) {
            return char_to_py(demazure_simple(d, i, char_from_py(d, f)));
          },
          py::arg("i"), py::arg("character"))
      .def("demazure_word",
          [](const RootDatum& d, const std::vector<int>& word, const py::dict& f) {
            return char_to_py(demazure_word(d, to_word(word), char_from_py(d, f)));
          },
          py::arg("word"), py::arg("character"),
          "Compose the operators of the word's letters, leftmost outermost.")
      .def("demazure_elt",
          [](const RootDatum& d, const std::vector<int>& word, const py::dict& f) {
            return char_to_py(
                demazure_elt(d, word_to_element(d, to_word(word)), char_from_py(d, f)));
          },
          py::arg("word"), py::arg("character"),
          "Operator of the group element the word multiplies to.")
      .def("descent_witness",
          [](const RootDatum& d, const py::dict& f) {
            return descent_witness(d, char_from_py(d, f));
          },
          py::arg("character"), "Least i with D_i f != f, or None.")
      .def("is_descent_member",
          [](const RootDatum& d, const py::dict& f) {
            return is_descent_member(d, char_from_py(d, f));
          },
          py::arg("character"))
      .def("is_invariant",
          [](const RootDatum& d, const py::dict& f) {
            return is_invariant(d, char_from_py(d, f));
          },
          py::arg("character"))
      .def("symmetrize",
          [](const RootDatum& d, const py::dict& f, std::size_t max_group) {
            return char_to_py(symmetrize(d, char_from_py(d, f), max_group));
          },
          py::arg("character"), py::arg("max_group") = kDefaultGroupBound)
      .def("weyl_character",
          [](const RootDatum& d, const std::vector<std::int64_t>& coords,
             std::size_t max_group) {
            return char_to_py(weyl_character(d, Weight(std::vector<std::int64_t>(coords)),
                                             max_group));
          },
          py::arg("weight"), py::arg("max_group") = kDefaultGroupBound)
      .def("weyl_dimension",
          [](const RootDatum& d, const std::vector<std::int64_t>& coords) {
            return int_to_py(weyl_dimension(d, Weight(std::vector<std::int64_t>(coords))));
          },
          py::arg("weight"))
      .def("verify",
          [](const RootDatum& d, const std::string& suite, int radius, std::uint64_t seed,
             std::size_t samples, std::size_t max_group) {
            std::vector<Suite> suites;
            if (suite == "all") {
              suites = all_suites();
            } else if (auto s = parse_suite(suite)) {
              suites.push_back(*s);
            } else {
              throw MalformedInput("unknown suite \"" + suite + "\"");
            }
            HarnessOptions options;
            options.radius = radius;
            options.seed = seed;
            options.samples = samples;
            options.max_group = max_group;
            bool passed = true;
            py::list reports;
            for (Suite s : suites) {
              SuiteReport report = run_suite(d, s, options);
              passed = passed && report.passed();
              reports.append(report_to_py(report));
            }
            py::dict out;
            out["passed"] = passed;
            out["suites"] = reports;
            return out;
          },
          py::arg("suite") = "all", py::arg("radius") = -1, py::arg("seed") = 0,
          py::arg("samples") = 200, py::arg("max_group") = kDefaultGroupBound)
      .def("char_to_json",
          [](const RootDatum& d, const py::dict& f) {
            return char_to_string(char_from_py(d, f));
          },
          py::arg("character"), "Canonical JSON serialization (sorted terms, decimal strings).")
      .def("char_from_json",
          [](const RootDatum& d, const std::string& text) {
            LaurentChar f = char_from_string(text);
            if (f.rank() != d.rank)
              throw RankMismatch("character has rank " + std::to_string(f.rank()) +
                                 ", datum has rank " + std::to_string(d.rank));
            return char_to_py(f);
          },
          py::arg("text"))
      .def("__repr__",
          [](const RootDatum& d) { return "RootDatum(\"" + type_code(d) + "\")"; });
}
