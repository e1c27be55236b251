#include "bruhat/json_io.hpp"

#include <stdexcept>

namespace bruhat {

using nlohmann::json;

json matrix_to_json(const BinaryMatrix& a) {
    json rows = json::array();
    for (int i = 1; i <= a.row_count(); ++i) rows.push_back(a.row_text(i));
    return json{{"m", a.row_count()}, {"n", a.col_count()}, {"rows", rows}};
}

BinaryMatrix matrix_from_json(const json& j) {
    std::vector<std::string> rows;
    for (const auto& r : j.at("rows")) rows.push_back(r.get<std::string>());
    BinaryMatrix a = BinaryMatrix::from_rows(rows);
    if (a.row_count() != j.at("m").get<int>() || a.col_count() != j.at("n").get<int>())
        throw std::invalid_argument("matrix_from_json: declared shape disagrees with rows");
    return a;
}

json class_to_json(const ClassSpec& spec) {
    if (spec.is_constant()) return json{{"n", spec.n()}, {"k", spec.k()}};
    return json{{"R", spec.margins.row_sums}, {"S", spec.margins.col_sums}};
}

ClassSpec class_from_json(const json& j) {
    if (j.contains("n") && j.contains("k"))
        return ClassSpec::from_nk(j.at("n").get<int>(), j.at("k").get<int>());
    return ClassSpec::from_margins(j.at("R").get<std::vector<int>>(),
                                   j.at("S").get<std::vector<int>>());
}

json hasse_to_json(const HasseDiagram& h) {
    json nodes = json::array();
    for (const auto& node : h.nodes) nodes.push_back(matrix_to_json(node));
    json edges = json::array();
    for (const auto& [a, c] : h.edges) edges.push_back(json::array({a, c}));
    return json{{"kind", h.kind == OrderKind::bruhat ? "bruhat" : "secondary"},
                {"nodes", nodes},
                {"edges", edges}};
}

namespace {

json witness_to_json(const CoverWitness& w) {
    return json{{"pos", json{{"i", w.pos.i}, {"j", w.pos.j}, {"k", w.pos.k}, {"l", w.pos.l}}},
                {"conditions", w.conditions}};
}

CoverWitness witness_from_json(const json& j, const BinaryMatrix& upper) {
    const auto& p = j.at("pos");
    const InterchangePos pos(p.at("i").get<int>(), p.at("j").get<int>(), p.at("k").get<int>(),
                             p.at("l").get<int>());
    CoverWitness w{upper, apply_interchange(upper, pos), pos, {}};
    const auto conds = j.at("conditions").get<std::vector<bool>>();
    if (conds.size() != 4)
        throw std::invalid_argument("certificate_from_json: need four condition flags");
    for (std::size_t t = 0; t < 4; ++t) w.conditions[t] = conds[t];
    return w;
}

}  // namespace

json certificate_to_json(const CounterexampleCertificate& cert) {
    return json{{"class", class_to_json(cert.spec)},
                {"narrative", cert.narrative},
                {"x", matrix_to_json(cert.x)},
                {"y", matrix_to_json(cert.y)},
                {"z", matrix_to_json(cert.z)},
                {"cover_xz", witness_to_json(cert.cover_xz)},
                {"cover_yz", witness_to_json(cert.cover_yz)}};
}

CounterexampleCertificate certificate_from_json(const json& j) {
    CounterexampleCertificate cert{class_from_json(j.at("class")),
                                   matrix_from_json(j.at("x")),
                                   matrix_from_json(j.at("y")),
                                   matrix_from_json(j.at("z")),
                                   witness_from_json(j.at("cover_xz"), matrix_from_json(j.at("z"))),
                                   witness_from_json(j.at("cover_yz"), matrix_from_json(j.at("z"))),
                                   j.at("narrative").get<std::string>()};
    return cert;
}

json report_to_json(const CertificateReport& rep) {
    json checks = json::array();
    for (const auto& line : rep.checks)
        checks.push_back(json{{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});
    return json{{"ok", rep.ok}, {"checks", checks}};
}

json lemma_report_to_json(const LemmaFamilyReport& rep) {
    return json{{"k", rep.k},
                {"m", rep.m},
                {"R", rep.margin.to_string()},
                {"R_conjugate", rep.conjugate_margin.to_string()},
                {"prefix_diffs", rep.prefix_diffs},
                {"dominated", rep.dominated},
                {"strictly_below", rep.strictly_below},
                {"closed_forms",
                 json{{"s_k3", json{{"s", rep.k - 3}, {"observed", rep.diff_at_k3}, {"expected", rep.expected_k3}}},
                      {"s_k2", json{{"s", rep.k - 2}, {"observed", rep.diff_at_k2}, {"expected", rep.expected_k2}}},
                      {"s_k1", json{{"s", rep.k - 1}, {"observed", rep.diff_at_k1}, {"expected", rep.expected_k1}}}}},
                {"closed_forms_match", rep.closed_forms_match},
                {"ok", rep.ok()}};
}

json coincidence_to_json(const ClassSpec& spec, const CoincidenceResult& res) {
    json out{{"class", class_to_json(spec)}};
    switch (res.status) {
        case CoincideStatus::coincide:
            out["status"] = "coincide";
            out["size"] = res.class_size;
            break;
        case CoincideStatus::differ:
            out["status"] = "differ";
            out["size"] = res.class_size;
            out["witness"] = json{{"a", matrix_to_json(res.witness->first)},
                                  {"c", matrix_to_json(res.witness->second)},
                                  {"refinement_violation", res.witness_is_refinement_violation}};
            break;
        case CoincideStatus::too_large:
            out["status"] = "too-large";
            break;
    }
    return out;
}

json theorem_table_to_json(const std::vector<TheoremCell>& cells) {
    json rows = json::array();
    for (const auto& cell : cells) {
        json row{{"n", cell.n},
                 {"k", cell.k},
                 {"expected", cell.expected_coincide ? "coincide" : "differ"},
                 {"observed", cell.observed == CellObserved::coincide  ? "coincide"
                              : cell.observed == CellObserved::differ ? "differ"
                                                                      : "unchecked"},
                 {"method", cell.method == CellMethod::exhaustive    ? "exhaustive"
                            : cell.method == CellMethod::certificate ? "certificate"
                                                                     : "asserted"},
                 {"ok", cell.ok},
                 {"note", cell.note}};
        if (cell.class_size > 0) row["size"] = cell.class_size;
        rows.push_back(row);
    }
    return json{{"cells", rows}};
}

}  // namespace bruhat
