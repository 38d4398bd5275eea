#include <bergekit/report_json.hpp>

namespace bergekit {

namespace {

std::string column_string(Column c, int rows) {
    std::string s(static_cast<std::size_t>(rows), '0');
    for (int r = 0; r < rows; ++r) {
        if ((c >> r) & 1U) {
            s[static_cast<std::size_t>(r)] = '1';
        }
    }
    return s;
}

nlohmann::json rational_json(const Rational& r) { return {{"num", r.num}, {"den", r.den}}; }

}  // namespace

nlohmann::json matrix_json(const BitMatrix& a) {
    auto cols = nlohmann::json::array();
    for (Column c : a.columns()) {
        cols.push_back(column_string(c, a.rows()));
    }
    return {{"rows", a.rows()}, {"columns", cols}};
}

nlohmann::json embedding_json(const Embedding& e) { return {{"rows", e.row_map}, {"columns", e.col_map}}; }

nlohmann::json solve_json(const SolveResult& r) {
    return {{"schema", kJsonSchema},
            {"value", r.value},
            {"witness", matrix_json(r.witness)},
            {"nodes", r.nodes},
            {"mode", to_string(r.mode)}};
}

nlohmann::json class_json(const AsymptoticClass& c) {
    nlohmann::json out;
    if (c.kind == AsymptoticClass::Kind::Theta) {
        out["theta"] = rational_json(c.lo);
    } else {
        out["between"] = {{"lo", rational_json(c.lo)}, {"hi", rational_json(c.hi)}};
    }
    out["conditional"] = c.conditional;
    auto rules = nlohmann::json::array();
    for (const auto& r : c.rules) {
        rules.push_back({{"name", r.name}, {"anchor", r.anchor}});
    }
    out["rules"] = rules;
    out["witness"] = c.lower_witness ? nlohmann::json(c.lower_witness->describe()) : nlohmann::json(nullptr);
    out["notes"] = c.notes;
    return out;
}

nlohmann::json corpus_json(const CorpusReport& report) {
    auto entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json j = class_json(e.cls);
        j["matrix"] = matrix_json(e.matrix);
        j["origin"] = e.origin;
        j["class"] = e.cls.label();
        j["witness_ok"] = e.witness_ok;
        if (e.constant_ok) {
            j["constant_ok"] = *e.constant_ok;
        }
        entries.push_back(std::move(j));
    }
    return {{"schema", kJsonSchema},
            {"k", report.k},
            {"max_cols", report.max_cols},
            {"witness_rows", report.witness_rows},
            {"failures", report.failures()},
            {"entries", entries}};
}

}  // namespace bergekit
