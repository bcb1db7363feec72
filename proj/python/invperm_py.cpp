#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "invperm/bijections.hpp"
#include "invperm/cli.hpp"
#include "invperm/counting.hpp"
#include "invperm/oracle.hpp"
#include "invperm/text.hpp"
#include "invperm/verify.hpp"

namespace py = pybind11;
using namespace invperm;

namespace {

py::int_ to_py(const BigCount& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigCount>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

std::vector<int> word(const Permutation& p) { return {p.begin(), p.end()}; }

std::optional<CountingMethod> method_from(const std::string& text) {
  using Tag = CountingMethod::Tag;
  if (text.empty() || text == "auto") return std::nullopt;
  if (text == "oracle") return CountingMethod{Tag::oracle, ""};
  if (text == "recurrence_321") return CountingMethod{Tag::recurrence_321, ""};
  if (text == "recurrence_123") return CountingMethod{Tag::recurrence_123, ""};
  if (text == "recurrence_gorenstein") return CountingMethod{Tag::recurrence_gorenstein, ""};
  if (text.rfind("gf:", 0) == 0) return CountingMethod{Tag::gf_named, text.substr(3)};
  if (text.rfind("closed_form:", 0) == 0) {
    return CountingMethod{Tag::closed_form_named, text.substr(12)};
  }
  throw std::invalid_argument("unknown method '" + text + "'");
}

}  // namespace

PYBIND11_MODULE(invperm, m) {
  m.doc() = "Indecomposable pattern-avoiding permutations counted by inversions";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  m.def(
      "count",
      [](const std::string& patterns, int k, const std::string& method) {
        return to_py(count(parse_pattern_set(patterns), k, method_from(method)));
      },
      py::arg("patterns"), py::arg("k"), py::arg("method") = "auto",
      "Number of indecomposable permutations with k inversions avoiding the patterns.");
  m.def(
      "count_upto",
      [](const std::string& patterns, int kmax, const std::string& method) {
        return to_py(count_upto(parse_pattern_set(patterns), kmax, method_from(method)));
      },
      py::arg("patterns"), py::arg("kmax"), py::arg("method") = "auto");
  m.def("method", [](const std::string& patterns) {
    return select_method(parse_pattern_set(patterns)).name();
  });
  m.def("canonicalize", [](const std::string& patterns) {
    const auto [canon, g] = canonicalize_patterns(parse_pattern_set(patterns));
    return py::make_tuple(format_pattern_set(canon), group_element_name(g));
  });
  m.def(
      "enumerate",
      [](const std::string& patterns, int k) {
        std::vector<std::vector<int>> out;
        for (const Permutation& p : enumerate_Ik(k, parse_pattern_set(patterns))) {
          out.push_back(word(p));
        }
        return out;
      },
      py::arg("patterns"), py::arg("k"));
  m.def(
      "enumerate_family",
      [](const std::string& family, int k) {
        const auto f = parse_family(family);
        if (!f) throw std::invalid_argument("unknown family '" + family + "'");
        std::vector<std::string> out;
        for (const auto& obj : enumerate_objects(*f, k)) out.push_back(format_object(obj));
        return out;
      },
      py::arg("family"), py::arg("k"));
  m.def("count_321", [](int k) { return to_py(count_321(k)); });
  m.def("count_123", [](int k) { return to_py(count_123(k)); });
  m.def("count_gorenstein", [](int n) { return to_py(count_gorenstein(n)); });
  m.def("gf_coefficients",
        [](const std::string& name, int kmax) { return to_py(gf_coefficients(name, kmax)); });
  m.def("closed_form", [](const std::string& name, int k) { return to_py(closed_form(name, k)); });
  m.def("gf_names", &gf_names);
  m.def("closed_form_names", &closed_form_names);

  m.def("inversion_table", [](const std::vector<int>& p) {
    const auto t = inversion_table(Permutation(p));
    return std::vector<int>(t.entries().begin(), t.entries().end());
  });
  m.def("p132_to_partition", [](const std::vector<int>& p) {
    const Partition q = p132_to_partition(Permutation(p));
    return std::vector<int>(q.parts().begin(), q.parts().end());
  });
  m.def("partition_to_p132",
        [](const std::vector<int>& q) { return word(partition_to_p132(Partition(q))); });
  m.def("p231_to_fountain", [](const std::vector<int>& p) {
    return format_fountain(p231_to_fountain(Permutation(p)));
  });
  m.def("fountain_to_p231",
        [](const std::string& f) { return word(fountain_to_p231(parse_fountain(f))); });
  m.def("p321_to_polyomino", [](const std::vector<int>& p) {
    return format_polyomino(p321_to_polyomino(Permutation(p)));
  });
  m.def("polyomino_to_p321",
        [](const std::string& q) { return word(polyomino_to_p321(parse_polyomino(q))); });
  m.def("p321_to_even_fountain", [](const std::vector<int>& p) {
    return format_fountain(coinset_to_fountain(p321_to_even_fountain(Permutation(p))));
  });
  m.def("even_fountain_to_p321", [](const std::string& f) {
    return word(even_fountain_to_p321(fountain_to_coinset(parse_fountain(f))));
  });
  m.def("is_valid_321_table",
        [](const std::vector<int>& t) { return is_valid_321_table(t); });

  m.def(
      "conjecture_check",
      [](const std::string& name, int kmax) {
        py::list rows;
        for (const auto& r : conjecture_check(name, kmax)) {
          py::dict row;
          row["k"] = r.k;
          row["oracle"] = to_py(r.oracle);
          row["formula"] = to_py(r.formula);
          row["match"] = r.match;
          row["printed"] = r.printed ? py::object(to_py(*r.printed)) : py::object(py::none());
          rows.append(row);
        }
        return rows;
      },
      py::arg("name"), py::arg("kmax") = 12);
  m.def(
      "verify",
      [](int kmax) {
        const VerifyResult r = run_verification(kmax);
        py::dict out;
        out["report"] = r.report;
        out["checks"] = r.checks;
        out["mismatches"] = r.mismatches;
        out["errata"] = r.errata;
        return out;
      },
      py::arg("kmax") = 9);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool; returns (exit code, stdout, stderr).");
}
