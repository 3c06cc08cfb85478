#include <galilei/report/report.hpp>

#include <algorithm>
#include <sstream>

namespace galilei::report {

void Report::verdict(std::string claim, bool pass, std::string detail) {
    verdicts.push_back({std::move(claim), pass, std::move(detail)});
}

bool Report::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["params"] = params;
    j["results"] = results;
    Json vs = Json::array();
    for (const auto& v : verdicts) {
        Json entry{{"claim", v.claim}, {"pass", v.pass}};
        if (!v.detail.empty()) entry["detail"] = v.detail;
        vs.push_back(std::move(entry));
    }
    j["verdicts"] = std::move(vs);
    j["wall_time_ms"] = wall_time_ms;
    return j;
}

Report Report::from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    r.results = j.at("results");
    for (const auto& v : j.at("verdicts"))
        r.verdicts.push_back({v.at("claim").get<std::string>(), v.at("pass").get<bool>(), v.value("detail", std::string())});
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
}

Json table(std::vector<std::string> columns, const std::vector<std::vector<std::string>>& rows) {
    Json t;
    t["columns"] = std::move(columns);
    t["rows"] = rows;
    return t;
}

bool is_table(const Json& j) {
    return j.is_object() && j.size() == 2 && j.contains("columns") && j.contains("rows") && j["columns"].is_array() &&
           j["rows"].is_array();
}

namespace {

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_null()) return "none";
    return j.dump();
}

bool is_flat_array(const Json& j) {
    return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void render(std::ostringstream& out, const std::string& key, const Json& value, int indent) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (is_table(value)) {
        out << pad << key << ":\n";
        std::istringstream lines(render_table(value));
        for (std::string line; std::getline(lines, line);) out << pad << "  " << line << "\n";
    } else if (value.is_object()) {
        out << pad << key << ":\n";
        for (const auto& [k, v] : value.items()) render(out, k, v, indent + 2);
    } else if (is_flat_array(value)) {
        out << pad << key << ": ";
        for (size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
        out << "\n";
    } else if (value.is_array()) {
        out << pad << key << ":\n";
        for (size_t i = 0; i < value.size(); ++i) render(out, "[" + std::to_string(i) + "]", value[i], indent + 2);
    } else {
        out << pad << key << ": " << scalar_text(value) << "\n";
    }
}

}  // namespace

std::string render_table(const Json& t) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header;
    for (const auto& c : t["columns"]) header.push_back(scalar_text(c));
    cells.push_back(header);
    for (const auto& row : t["rows"]) {
        std::vector<std::string> line;
        for (const auto& c : row) line.push_back(scalar_text(c));
        cells.push_back(std::move(line));
    }
    std::vector<size_t> width;
    for (const auto& row : cells) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) line += " | ";
            line += row[i] + std::string(width[i] - row[i].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    };
    emit(cells[0]);
    std::string rule;
    for (size_t i = 0; i < width.size(); ++i) rule += (i ? "-+-" : "") + std::string(width[i], '-');
    out << rule << "\n";
    for (size_t r = 1; r < cells.size(); ++r) emit(cells[r]);
    return out.str();
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "command: " << command << "\n";
    if (!params.empty()) {
        out << "params:";
        for (const auto& [k, v] : params.items()) out << " " << k << "=" << scalar_text(v);
        out << "\n";
    }
    for (const auto& [k, v] : results.items()) render(out, k, v, 0);
    for (const auto& v : verdicts) {
        out << v.claim << ": " << (v.pass ? "PASS" : "FAIL");
        if (!v.detail.empty()) out << " (" << v.detail << ")";
        out << "\n";
    }
    out << "wall time: " << static_cast<long long>(wall_time_ms) << " ms\n";
    return out.str();
}

Json series_json(const exact::TruncatedSeries& s) {
    Json a = Json::array();
    for (const auto& c : s.coefficients()) a.push_back(c.get_str());
    return a;
}

}  // namespace galilei::report
