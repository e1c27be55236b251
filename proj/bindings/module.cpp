#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bruhat/class_enum.hpp"
#include "bruhat/coincidence.hpp"
#include "bruhat/json_io.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/orders.hpp"
#include "bruhat/partition.hpp"

namespace py = pybind11;
using namespace bruhat;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    using value_t = nlohmann::json::value_t;
    switch (j.type()) {
        case value_t::null: return py::none();
        case value_t::boolean: return py::bool_(j.get<bool>());
        case value_t::number_integer: return py::int_(j.get<long long>());
        case value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case value_t::number_float: return py::float_(j.get<double>());
        case value_t::string: return py::str(j.get<std::string>());
        case value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

nlohmann::json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& item : obj) out.push_back(py_to_json(item));
        return out;
    }
    if (py::isinstance<py::dict>(obj)) {
        nlohmann::json out = nlohmann::json::object();
        for (const auto& item : obj.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    throw std::invalid_argument("cannot convert python object to json");
}

InterchangePos pos_from_tuple(const py::tuple& t) {
    if (t.size() != 4) throw std::invalid_argument("position must be (i, j, k, l)");
    return InterchangePos(t[0].cast<int>(), t[1].cast<int>(), t[2].cast<int>(), t[3].cast<int>());
}

ClassSpec spec_from_args(const py::object& n, const py::object& k, const py::object& R,
                         const py::object& S) {
    if (!n.is_none() && !k.is_none()) return ClassSpec::from_nk(n.cast<int>(), k.cast<int>());
    if (!R.is_none() && !S.is_none())
        return ClassSpec::from_margins(R.cast<std::vector<int>>(), S.cast<std::vector<int>>());
    throw std::invalid_argument("give either n and k, or R and S");
}

const char* reach_text(Reach r) {
    switch (r) {
        case Reach::yes: return "yes";
        case Reach::no: return "no";
        default: return "exhausted";
    }
}

}  // namespace

PYBIND11_MODULE(bruhat_orders, mod) {
    mod.doc() = "Bruhat and secondary Bruhat orders on classes A(R,S) of (0,1)-matrices";

    py::class_<BinaryMatrix>(mod, "BinaryMatrix")
        .def(py::init([](const std::vector<std::string>& rows) {
                 return BinaryMatrix::from_rows(rows);
             }),
             py::arg("rows"))
        .def_property_readonly("m", &BinaryMatrix::row_count)
        .def_property_readonly("n", &BinaryMatrix::col_count)
        .def("at", &BinaryMatrix::at, py::arg("i"), py::arg("j"), "1-based entry access")
        .def("rows",
             [](const BinaryMatrix& a) {
                 std::vector<std::string> out;
                 for (int i = 1; i <= a.row_count(); ++i) out.push_back(a.row_text(i));
                 return out;
             })
        .def("row_sums", &BinaryMatrix::row_sums)
        .def("col_sums", &BinaryMatrix::col_sums)
        .def("to_text", &BinaryMatrix::to_text)
        .def("__eq__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a == b; })
        .def("__lt__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a < b; })
        .def("__hash__", [](const BinaryMatrix& a) { return MatrixHash{}(a); })
        .def("__repr__", [](const BinaryMatrix& a) {
            return "BinaryMatrix(" + std::to_string(a.row_count()) + "x" +
                   std::to_string(a.col_count()) + ")";
        });

    mod.def("sigma", [](const BinaryMatrix& a) {
        const SigmaMatrix s = sigma(a);
        std::vector<std::vector<int>> out;
        for (int i = 1; i <= s.row_count(); ++i) {
            std::vector<int> row;
            for (int j = 1; j <= s.col_count(); ++j) row.push_back(s.at(i, j));
            out.push_back(std::move(row));
        }
        return out;
    });

    mod.def("bruhat_leq", &bruhat_leq, py::arg("a"), py::arg("c"));

    mod.def(
        "secondary_leq",
        [](const BinaryMatrix& a, const BinaryMatrix& c, std::size_t budget) -> py::object {
            switch (secondary_leq(a, c, budget)) {
                case Reach::yes: return py::bool_(true);
                case Reach::no: return py::bool_(false);
                default: return py::none();  // budget exhausted
            }
        },
        py::arg("a"), py::arg("c"), py::arg("budget") = kDefaultBfsBudget);

    mod.def(
        "submatrix_type",
        [](const BinaryMatrix& a, const py::tuple& pos) {
            switch (submatrix_type(a, pos_from_tuple(pos))) {
                case PatternType::L2: return "L2";
                case PatternType::I2: return "I2";
                default: return "other";
            }
        },
        py::arg("a"), py::arg("pos"));

    mod.def(
        "apply_interchange",
        [](const BinaryMatrix& a, const py::tuple& pos) {
            return apply_interchange(a, pos_from_tuple(pos));
        },
        py::arg("a"), py::arg("pos"));

    mod.def(
        "secondary_cover_check",
        [](const BinaryMatrix& c, const py::tuple& pos) {
            const CoverWitness w = secondary_cover_check(c, pos_from_tuple(pos));
            py::dict out;
            out["lower"] = w.lower;
            out["conditions"] = w.conditions;
            out["holds"] = w.holds();
            return out;
        },
        py::arg("c"), py::arg("pos"));

    mod.def("complement_rotate", &complement_rotate);
    mod.def("block_assemble", &block_assemble);
    mod.def("direct_sum", &direct_sum);

    mod.def("sort_desc",
            [](std::vector<int> v) { return sort_desc(std::move(v)).parts(); });
    mod.def("conjugate",
            [](const std::vector<int>& v) { return conjugate(Partition(v)).parts(); });
    mod.def("dominance_leq", [](const std::vector<int>& a, const std::vector<int>& b) {
        return dominance_leq(Partition(a), Partition(b));
    });
    mod.def("gale_ryser_feasible", &gale_ryser_feasible, py::arg("R"), py::arg("S"));
    mod.def("ryser_witness", &ryser_witness, py::arg("R"), py::arg("S"));
    mod.def("special_margin", [](int k, int m) { return special_margin(k, m).parts(); });
    mod.def("verify_lemma_family",
            [](int k, int m) { return json_to_py(lemma_report_to_json(verify_lemma_family(k, m))); });

    mod.def(
        "class_members",
        [](const py::object& n, const py::object& k, const py::object& R, const py::object& S,
           std::size_t cap) { return members(spec_from_args(n, k, R, S), cap); },
        py::arg("n") = py::none(), py::arg("k") = py::none(), py::arg("R") = py::none(),
        py::arg("S") = py::none(), py::arg("cap") = kDefaultEnumCap);

    mod.def(
        "class_count",
        [](const py::object& n, const py::object& k, const py::object& R, const py::object& S,
           std::size_t cap) { return count(spec_from_args(n, k, R, S), cap); },
        py::arg("n") = py::none(), py::arg("k") = py::none(), py::arg("R") = py::none(),
        py::arg("S") = py::none(), py::arg("cap") = kDefaultEnumCap);

    mod.def(
        "build_hasse",
        [](const py::object& n, const py::object& k, const py::object& R, const py::object& S,
           const std::string& kind, std::size_t cap) {
            const HasseDiagram h =
                build_hasse(spec_from_args(n, k, R, S),
                            kind == "secondary" ? OrderKind::secondary : OrderKind::bruhat, cap);
            return json_to_py(hasse_to_json(h));
        },
        py::arg("n") = py::none(), py::arg("k") = py::none(), py::arg("R") = py::none(),
        py::arg("S") = py::none(), py::arg("kind") = "bruhat",
        py::arg("cap") = kDefaultPairwiseCap);

    mod.def(
        "orders_coincide",
        [](const py::object& n, const py::object& k, const py::object& R, const py::object& S,
           std::size_t cap) {
            const ClassSpec spec = spec_from_args(n, k, R, S);
            return json_to_py(coincidence_to_json(spec, orders_coincide(spec, cap)));
        },
        py::arg("n") = py::none(), py::arg("k") = py::none(), py::arg("R") = py::none(),
        py::arg("S") = py::none(), py::arg("cap") = kDefaultPairwiseCap);

    mod.def("counterexample", [](int n, int k) {
        return json_to_py(certificate_to_json(counterexample(n, k)));
    });

    mod.def("verify_certificate", [](const py::dict& cert) {
        return json_to_py(report_to_json(verify_certificate(certificate_from_json(py_to_json(cert)))));
    });

    mod.def(
        "verify_theorem",
        [](int max_n, std::size_t cap, int threads) {
            return json_to_py(theorem_table_to_json(verify_theorem(max_n, cap, threads)));
        },
        py::arg("max_n"), py::arg("cap") = kDefaultPairwiseCap, py::arg("threads") = 1);

    mod.def("secondary_leq_reach_text", [](const BinaryMatrix& a, const BinaryMatrix& c,
                                           std::size_t budget) {
        return std::string(reach_text(secondary_leq(a, c, budget)));
    }, py::arg("a"), py::arg("c"), py::arg("budget") = kDefaultBfsBudget);
}
