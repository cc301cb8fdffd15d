/* Copyright (C) 2026 The chainring authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */


// Python bindings. Elements cross the boundary in their JSON encoding:
// an int, or a (nested) list of ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chainring/cyclic.hpp"
#include "chainring/io.hpp"
#include "chainring/suites.hpp"

namespace py = pybind11;
using namespace chainring;

namespace {

json to_json(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) fail(ErrorKind::ParseError, "booleans are not ring elements");
  if (py::isinstance<py::int_>(h)) return h.cast<int64_t>();
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    json a = json::array();
    for (const auto& x : h) a.push_back(to_json(x));
    return a;
  }
  fail(ErrorKind::ParseError, "expected an int or a list");
}

py::object to_py(const json& j) {
  if (j.is_number_integer()) return py::int_(j.get<int64_t>());
  if (j.is_array()) {
    py::list l;
    for (const auto& x : j) l.append(to_py(x));
    return l;
  }
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_object()) {
    py::dict d;
    for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
    return d;
  }
  return py::none();
}

struct PyRing {
  RingPtr ring;
  Element el(const py::handle& h) const { return element_from_json(*ring, to_json(h)); }
};

struct PyTower {
  TowerPtr tower;
};

py::object out(const Element& e) { return to_py(element_to_json(e)); }

py::object out(const Mat& m) { return to_py(matrix_to_json(m)); }

py::object out(const Poly& f) { return to_py(poly_to_json(f)); }

std::vector<Vec> rows_in(const Ring& r, const py::handle& rows) {
  std::vector<Vec> vs;
  for (const auto& row : rows) {
    Vec v;
    for (const auto& x : row) v.push_back(element_from_json(r, to_json(x)));
    vs.push_back(v);
  }
  return vs;
}

py::dict suite_dict(const SuiteResult& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["cases"] = r.cases;
  d["passed"] = r.passed;
  d["failed"] = r.failed;
  d["ok"] = r.ok();
  d["counterexample"] = r.counterexample;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(chainring, m) {
  m.doc() = "Linear codes over finite chain rings and their Galois extensions";

  static py::handle error_type = py::exception<Error>(m, "ChainRingError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(e.name()) + ": " + e.what()).c_str());
    }
  });

  py::class_<PyRing>(m, "Ring")
      .def(py::init([](const std::string& family, int64_t p, int n, int s) {
             return PyRing{Ring::make(parse_family(family), p, n, s)};
           }),
           py::arg("family"), py::arg("p"), py::arg("n"), py::arg("s"))
      .def_property_readonly("name", [](const PyRing& r) { return r.ring->name(); })
      .def_property_readonly("p", [](const PyRing& r) { return r.ring->p(); })
      .def_property_readonly("s", [](const PyRing& r) { return r.ring->s(); })
      .def_property_readonly("residue_size", [](const PyRing& r) { return r.ring->residue_size(); })
      .def_property_readonly("size", [](const PyRing& r) { return r.ring->size(); })
      .def_property_readonly("unit_count", [](const PyRing& r) { return r.ring->unit_count(); })
      .def("elements", [](const PyRing& r) {
        py::list l;
        for (uint64_t i = 0; i < r.ring->size(); ++i) l.append(out(r.ring->from_index(i)));
        return l;
      })
      .def("add", [](const PyRing& r, py::handle a, py::handle b) { return out(r.el(a) + r.el(b)); })
      .def("sub", [](const PyRing& r, py::handle a, py::handle b) { return out(r.el(a) - r.el(b)); })
      .def("mul", [](const PyRing& r, py::handle a, py::handle b) { return out(r.el(a) * r.el(b)); })
      .def("neg", [](const PyRing& r, py::handle a) { return out(-r.el(a)); })
      .def("inv", [](const PyRing& r, py::handle a) { return out(r.el(a).inv()); })
      .def("pow", [](const PyRing& r, py::handle a, uint64_t e) { return out(r.el(a).pow(e)); })
      .def("valuation", [](const PyRing& r, py::handle a) { return r.el(a).valuation(); })
      .def("degree", [](const PyRing& r, py::handle a) -> py::object {
        Degree d = r.el(a).degree();
        if (d.is_neg_inf()) return py::none();
        return py::int_(d.value());
      })
      .def("theta", [](const PyRing& r) { return out(r.ring->theta()); })
      .def("theta_adic", [](const PyRing& r, py::handle a) {
        py::list l;
        for (const auto& c : r.ring->theta_adic(r.el(a))) l.append(out(c));
        return l;
      })
      .def("teichmuller_set", [](const PyRing& r) {
        py::list l;
        for (const auto& g : r.ring->teichmuller_set()) l.append(out(g));
        return l;
      })
      .def("__repr__", [](const PyRing& r) { return "<Ring " + r.ring->name() + ">"; });

  py::class_<PyTower>(m, "Tower")
      .def_static("extend", [](const PyRing& base, int deg) { return PyTower{Tower::extend(base.ring, deg)}; })
      .def_static("fixture", [](const std::string& name) { return PyTower{fixture(name)}; })
      .def_property_readonly("base", [](const PyTower& t) { return PyRing{t.tower->base_ptr()}; })
      .def_property_readonly("top", [](const PyTower& t) { return PyRing{t.tower->top_ptr()}; })
      .def_property_readonly("m", [](const PyTower& t) { return t.tower->m(); })
      .def("frobenius", [](const PyTower& t, py::handle a, int k) {
        return out(t.tower->frobenius(element_from_json(t.tower->top(), to_json(a)), k));
      }, py::arg("a"), py::arg("k") = 1)
      .def("trace", [](const PyTower& t, py::handle a) {
        return out(t.tower->trace(element_from_json(t.tower->top(), to_json(a))));
      })
      .def("dual_basis", [](const PyTower& t) {
        py::list l;
        for (const auto& b : t.tower->dual_basis()) l.append(out(b));
        return l;
      })
      .def("primitive_root", [](const PyTower& t, int ell) { return out(t.tower->primitive_root(ell)); })
      .def("to_json", [](const PyTower& t) { return tower_to_json(*t.tower).dump(); })
      .def("__repr__", [](const PyTower& t) {
        return "<Tower " + t.tower->top().name() + " | " + t.tower->base().name() + ">";
      });

  m.def("fixture_names", &fixture_names);

  py::class_<Code>(m, "Code")
      .def(py::init([](const PyTower& t, int length, py::handle rows) {
             return Code::from_generators(t.tower, length, rows_in(t.tower->top(), rows));
           }),
           py::arg("tower"), py::arg("length"), py::arg("rows"))
      .def_static("from_json", [](const std::string& text) { return code_from_json(json::parse(text)); })
      .def("to_json", [](const Code& c) { return code_to_json(c).dump(); })
      .def_property_readonly("tower", [](const Code& c) { return PyTower{c.tower()}; })
      .def_property_readonly("length", &Code::length)
      .def_property_readonly("rank", &Code::rank)
      .def_property_readonly("type", &Code::type)
      .def_property_readonly("rsf", [](const Code& c) { return out(c.rsf()); })
      .def_property_readonly("log2_cardinality", &Code::log2_cardinality)
      .def("is_zero", &Code::is_zero)
      .def("contains", [](const Code& c, py::handle word) {
        return c.contains(rows_in(c.ring(), py::make_tuple(word))[0]);
      })
      .def("issuperset", [](const Code& c, const Code& sub) { return c.contains(sub); })
      .def("__eq__", [](const Code& a, const Code& b) { return a == b; })
      .def("__repr__", [](const Code& c) { return "<Code " + type_to_text(c) + ">"; });

  m.def("dual", [](const Code& b, const std::string& form) {
    if (form == "euclidean") return dual(b);
    if (form == "hermitian") return dual(b, Form::hermitian);
    if (form == "phi") return dual_phi_prime(b);
    fail(ErrorKind::ParseError, "unknown form '" + form + "'");
  }, py::arg("code"), py::arg("form") = "euclidean");
  m.def("sum", &sum);
  m.def("intersect", &intersect);
  m.def("restriction", &restriction);
  m.def("trace_code", &trace_code);
  m.def("extension", [](const Code& c, const PyTower& t) { return extension(c, t.tower); });
  m.def("closure", &closure);
  m.def("interior", &interior);
  m.def("apply_automorphism", &apply_automorphism);
  m.def("is_galois_invariant", &is_galois_invariant);
  m.def("level_set", &level_set);
  m.def("delsarte_check", [](const Code& b) {
    auto r = delsarte_check(b);
    return py::make_tuple(r.lhs, r.rhs, r.equal);
  });
  m.def("bounds_report", [](const Code& b) {
    auto r = bounds_report(b);
    py::list checks;
    for (const auto& c : r.checks) {
      py::dict d;
      d["name"] = c.name;
      d["lhs"] = c.lhs;
      d["relation"] = c.relation;
      d["rhs"] = c.rhs;
      d["holds"] = c.holds;
      checks.append(d);
    }
    py::dict d;
    d["level_set"] = r.level_set;
    d["rank_code"] = r.rank_code;
    d["rank_restriction"] = r.rank_restriction;
    d["rank_trace"] = r.rank_trace;
    d["rank_interior"] = r.rank_interior;
    d["rank_closure"] = r.rank_closure;
    d["checks"] = checks;
    return d;
  });
  m.def("min_weight", &min_weight);
  m.def("is_cyclic", &is_cyclic);

  m.def("cyclotomic_cosets", [](int ell, uint64_t q) { return cyclotomic_cosets(ell, q).cosets; });
  m.def("find_interval", [](const DefiningSet& a, int ell) -> py::object {
    auto iv = find_interval(normalize_set(a, ell), ell);
    if (!iv) return py::none();
    return py::make_tuple(iv->w, iv->u, iv->v);
  });

  py::class_<CyclicContext, std::shared_ptr<CyclicContext>>(m, "CyclicContext")
      .def(py::init([](const PyRing& base, int ell) {
        return std::const_pointer_cast<CyclicContext>(CyclicContext::make(base.ring, ell));
      }))
      .def_property_readonly("ell", &CyclicContext::ell)
      .def_property_readonly("tower", [](const CyclicContext& c) { return PyTower{c.tower()}; })
      .def_property_readonly("cosets", [](const CyclicContext& c) { return c.cosets().cosets; })
      .def_property_readonly("xi", [](const CyclicContext& c) { return out(c.xi()); })
      .def("factors", [](const CyclicContext& c) {
        py::list l;
        for (const auto& f : c.factors()) l.append(out(f));
        return l;
      })
      .def("idempotents", [](const CyclicContext& c) {
        py::list l;
        for (const auto& f : c.idempotents()) l.append(out(f));
        return l;
      })
      .def("minimal_code", &CyclicContext::minimal_code)
      .def("code_from_multiindex", &CyclicContext::code_from_multiindex)
      .def("all_multiindices", &CyclicContext::all_multiindices)
      .def("eval_code", [](const CyclicContext& c, const DefiningSet& a, int t) {
        return c.eval_code(normalize_set(a, c.ell()), t);
      }, py::arg("a"), py::arg("t") = 0)
      .def("generator_polynomial", [](const CyclicContext& c, const DefiningSet& a) {
        return out(c.generator_polynomial(normalize_set(a, c.ell())));
      })
      .def("bch_check", [](const CyclicContext& c, const DefiningSet& a, int t) {
        auto r = c.bch_check(normalize_set(a, c.ell()), t);
        py::dict d;
        d["interval"] = py::make_tuple(r.interval.w, r.interval.u, r.interval.v);
        d["q_invariant"] = r.q_invariant;
        d["code"] = r.code;
        d["min_weight"] = r.min_weight ? py::object(py::int_(*r.min_weight)) : py::object(py::none());
        d["designed"] = r.designed;
        d["holds"] = r.holds;
        return d;
      }, py::arg("a"), py::arg("t") = 0);

  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& name, uint64_t seed, int cases, std::vector<std::string> fixtures) {
    SuiteOptions o;
    o.seed = seed;
    o.cases = cases;
    o.fixtures = std::move(fixtures);
    SuiteResult r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, o);
    }
    return suite_dict(r);
  }, py::arg("suite"), py::arg("seed") = 0, py::arg("cases") = -1,
        py::arg("fixtures") = std::vector<std::string>{});
}
