#pragma once

// Reports produced by every CLI command: {command, params, results,
// verdicts, wall_time_ms}. Results are free-form JSON; an object of the form
// {"columns": [...], "rows": [[...], ...]} is rendered as an aligned table.

#include <galilei/exact/series.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace galilei::report {

using Json = nlohmann::ordered_json;

struct Verdict {
    std::string claim;
    bool pass = false;
    std::string detail;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Report {
    std::string command;
    Json params = Json::object();
    Json results = Json::object();
    std::vector<Verdict> verdicts;
    double wall_time_ms = 0;

    void verdict(std::string claim, bool pass, std::string detail = {});
    bool all_pass() const;

    Json to_json() const;
    static Report from_json(const Json& j);
    std::string to_text() const;

    friend bool operator==(const Report&, const Report&) = default;
};

Json table(std::vector<std::string> columns, const std::vector<std::vector<std::string>>& rows);
bool is_table(const Json& j);
std::string render_table(const Json& table);

// Coefficients as exact strings, lowest degree first.
Json series_json(const exact::TruncatedSeries& s);

}  // namespace galilei::report
