#include <doctest.h>

#include <galilei/report/report.hpp>
#include <galilei/report/series_cache.hpp>

#include <cstdlib>
#include <fstream>

using namespace galilei;
using namespace galilei::report;
namespace fs = std::filesystem;

namespace {

Report sample() {
    Report r;
    r.command = "young rank";
    r.params = {{"upto", 2}};
    r.results["ranks"] = table({"n", "rank"}, {{"1", "1"}, {"2", "2"}});
    r.results["note"] = "exact";
    r.verdict("rank = n", true);
    r.verdict("something else", false, "detail here");
    r.wall_time_ms = 1.5;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("galilei-test-" + std::to_string(std::rand()))) {}
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("structured output round-trips") {
    const Report r = sample();
    CHECK(Report::from_json(r.to_json()) == r);
    CHECK(Report::from_json(Json::parse(r.to_json().dump())) == r);
    CHECK(!r.all_pass());
}

TEST_CASE("text rendering") {
    const auto text = sample().to_text();
    CHECK(text.find("command: young rank") != std::string::npos);
    CHECK(text.find("note: exact") != std::string::npos);
    CHECK(text.find("rank = n: PASS") != std::string::npos);
    CHECK(text.find("something else: FAIL (detail here)") != std::string::npos);
    const auto t = render_table(table({"a", "long header"}, {{"xyz", "1"}}));
    CHECK(t.find("a   | long header") != std::string::npos);
    CHECK(is_table(table({"a"}, {})));
    CHECK(!is_table(Json::object()));
}

TEST_CASE("series json") {
    exact::TruncatedSeries s({1, make_rational(-1, 2), 0}, 2);
    CHECK(series_json(s) == Json::array({"1", "-1/2", "0"}));
}

TEST_CASE("cache stores, loads and rejects tampering") {
    TempDir dir;
    SeriesCache cache(dir.path);
    exact::TruncatedSeries s({1, 2, make_rational(3, 4)}, 2);
    CHECK(!cache.load("k").has_value());
    cache.store("k", s);
    CHECK(cache.load("k") == s);
    CHECK(!cache.load("other").has_value());

    int calls = 0;
    auto compute = [&] {
        ++calls;
        return s;
    };
    CHECK(cache.get_or_compute("k2", compute) == s);
    CHECK(cache.get_or_compute("k2", compute) == s);
    CHECK(calls == 1);

    for (const auto& entry : fs::directory_iterator(dir.path)) {
        std::ifstream in(entry.path());
        std::string body((std::istreambuf_iterator<char>(in)), {});
        in.close();
        const auto pos = body.find("3/4");
        if (pos == std::string::npos) continue;
        body.replace(pos, 3, "5/4");
        std::ofstream(entry.path()) << body;
    }
    CHECK(!cache.load("k").has_value());
    CHECK(cache.get_or_compute("k", compute) == s);
    CHECK(cache.load("k") == s);
}

TEST_CASE("fnv1a") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
