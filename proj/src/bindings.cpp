#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "loewy/chardim.hpp"
#include "loewy/ext.hpp"
#include "loewy/loewy.hpp"
#include "loewy/projective.hpp"
#include "loewy/report.hpp"
#include "loewy/verify.hpp"

namespace py = pybind11;
using namespace loewy;

namespace {

// Arbitrary-precision integers cross the boundary as Python ints via their
// decimal form.
py::int_ to_py(const Integer& x) { return py::int_(py::reinterpret_steal<py::object>(
    PyLong_FromString(x.str().c_str(), nullptr, 10))); }

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

py::tuple to_py(const Weight& w) {
  py::tuple t(w.rank());
  for (int k = 0; k < w.rank(); ++k) t[k] = to_py(w[static_cast<std::size_t>(k)]);
  return t;
}

Weight weight_from(int n, const std::optional<py::sequence>& seq) {
  if (!seq) return Weight::zero(n);
  std::vector<Integer> c;
  for (const auto& v : *seq) c.push_back(from_py(v));
  if (static_cast<int>(c.size()) != n) throw std::invalid_argument("weight must have n coordinates");
  return Weight(std::move(c));
}

py::tuple to_py(const IrreducibleLabel& l) { return py::make_tuple(l.index, to_py(l.nu)); }

IrreducibleLabel label_from(const BlockContext& ctx, const py::sequence& s) {
  if (py::len(s) != 2) throw std::invalid_argument("label must be (i, nu)");
  return ctx.label(s[0].cast<int>(), weight_from(ctx.n(), s[1].cast<py::sequence>()));
}

py::list to_py(const LabelMultiset& m) {
  py::list out;
  for (const auto& [label, mult] : m) out.append(py::make_tuple(to_py(label), mult));
  return out;
}

py::list to_py(const LayerDecomposition& d) {
  py::list out;
  for (const auto& layer : d.layers()) out.append(to_py(layer));
  return out;
}

py::object json_to_py(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Loewy structures of baby Verma modules and projective covers in the block of lambda_0.";

  py::class_<BlockContext>(m, "Block")
      .def(py::init<int, long>(), py::arg("n"), py::arg("p"))
      .def_property_readonly("n", &BlockContext::n)
      .def_property_readonly("p", &BlockContext::p)
      .def_property_readonly("lambdas", [](const BlockContext& c) {
        py::list out;
        for (const auto& w : c.lambdas()) out.append(to_py(w));
        return out;
      })
      .def("weight_of", [](const BlockContext& c, const py::sequence& l) { return to_py(c.weight_of(label_from(c, l))); })
      .def("__repr__", [](const BlockContext& c) {
        return "Block(n=" + std::to_string(c.n()) + ", p=" + std::to_string(c.p()) + ")";
      });

  m.def("weyl_dim", [](const py::sequence& w) { return to_py(weyl_dim(weight_from(static_cast<int>(py::len(w)), w))); },
        py::arg("weight"), "Weyl dimension of a dominant weight in fundamental-weight coordinates.");
  m.def("dim_M", [](const BlockContext& c, int i, const std::string& side) {
        return to_py(dim_M(c, i, side == "J" ? ParabolicSide::J : ParabolicSide::I));
      }, py::arg("block"), py::arg("i"), py::arg("side") = "I");
  m.def("verify_dim_identity", [](const BlockContext& c, int i, const std::string& side) {
        return verify_dim_identity(c, i, side == "J" ? ParabolicSide::J : ParabolicSide::I);
      }, py::arg("block"), py::arg("i"), py::arg("side") = "I");
  m.def("jantzen_decompose", [](const py::int_& mm, long p) {
        const auto d = jantzen_decompose(from_py(mm), p);
        return py::make_tuple(d.s, to_py(d.a), to_py(d.b));
      }, py::arg("m"), py::arg("p"), "Returns (s, a, b) with m = a p^s + b p^(s+1).");
  m.def("block_simple", [](const BlockContext& c) {
        const auto r = check_block_simplicity(c);
        py::dict out;
        out["ok"] = r.ok();
        out["certificates"] = r.certificates.size();
        out["failures"] = r.failures.size();
        py::list cases;
        for (const auto& rep : r.replays) cases.append(py::make_tuple(rep.index, rep.sub_case, rep.valid));
        out["replays"] = cases;
        return out;
      }, py::arg("block"));

  auto opt_nu = py::arg("nu") = py::none();
  m.def("rad_layers_Z_g1", [](const BlockContext& c, int i) { return to_py(rad_layers_Z_g1(c, i)); },
        py::arg("block"), py::arg("i"));
  m.def("rad_layers_Z", [](const BlockContext& c, int i, std::optional<py::sequence> nu) {
        return to_py(rad_layers_Z_g1t(c, i, weight_from(c.n(), nu)));
      }, py::arg("block"), py::arg("i"), opt_nu);
  m.def("soc_layers_Z", [](const BlockContext& c, int i, std::optional<py::sequence> nu) {
        return to_py(soc_layers_Z_g1t(c, i, weight_from(c.n(), nu)));
      }, py::arg("block"), py::arg("i"), opt_nu, "Entry j-1 is soc_j.");
  m.def("rad_layers_Zprime", [](const BlockContext& c, int i, std::optional<py::sequence> nu) {
        return to_py(rad_layers_Zprime_g1t(c, i, weight_from(c.n(), nu)));
      }, py::arg("block"), py::arg("i"), opt_nu);
  m.def("rad_layers_Q", [](const BlockContext& c, int i, std::optional<py::sequence> nu) {
        const auto q = rad_layers_Qhat(c, i, weight_from(c.n(), nu));
        py::dict out;
        out["layers"] = to_py(q.layers);
        out["conditional_on_loewy_length_conjecture"] = q.conditional_on_loewy_length_conjecture;
        return out;
      }, py::arg("block"), py::arg("i"), opt_nu);
  m.def("verma_support", [](const BlockContext& c, int i, std::optional<py::sequence> nu) {
        py::list out;
        for (const auto& e : verma_support(c, i, weight_from(c.n(), nu))) {
          out.append(py::make_tuple(to_py(e.verma), e.layer, e.mult));
        }
        return out;
      }, py::arg("block"), py::arg("i"), opt_nu);
  m.def("ext1_g1", [](const BlockContext& c, int i, int j) { return std::string(to_string(ext1_g1(c, i, j).kind)); },
        py::arg("block"), py::arg("i"), py::arg("j"));
  m.def("ext1_dim", [](const BlockContext& c, const py::sequence& a, const py::sequence& b) {
        return ext1_g1t_dim(c, label_from(c, a), label_from(c, b));
      }, py::arg("block"), py::arg("a"), py::arg("b"));
  m.def("rad1_Q", [](const BlockContext& c, int i, std::optional<py::sequence> nu) {
        return to_py(rad1_Qhat(c, i, weight_from(c.n(), nu)));
      }, py::arg("block"), py::arg("i"), opt_nu);
  m.def("verify", [](const BlockContext& c) { return json_to_py(to_json(run_verification(c))); }, py::arg("block"));
  m.def("report_json", [](const BlockContext& c, int i, std::optional<py::sequence> nu) {
        LayerReport r{c.n(), c.p(), "Z^ radical layers", rad_layers_Z_g1t(c, i, weight_from(c.n(), nu)), false};
        return json_to_py(to_json(r, 0));
      }, py::arg("block"), py::arg("i"), opt_nu);
}
