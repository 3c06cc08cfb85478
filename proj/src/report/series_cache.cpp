#include <galilei/report/series_cache.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace galilei::report {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string checksum(const Json& coefficients) { return hex(fnv1a(coefficients.dump())); }

}  // namespace

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path SeriesCache::default_dir() {
    if (const char* env = std::getenv("GALILEI_CACHE_DIR"); env && *env) return env;
    return ".galilei-cache";
}

fs::path SeriesCache::path_for(const std::string& key) const { return dir_ / (hex(fnv1a(key)) + ".json"); }

std::optional<exact::TruncatedSeries> SeriesCache::load(const std::string& key) const {
    std::lock_guard lock(mutex_);
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        const Json& coeffs = j.at("coefficients");
        if (j.at("checksum").get<std::string>() != checksum(coeffs)) return std::nullopt;
        std::vector<Rational> values;
        for (const auto& c : coeffs) values.push_back(parse_rational(c.get<std::string>()));
        const int truncation = j.at("truncation").get<int>();
        if (static_cast<int>(values.size()) != truncation + 1) return std::nullopt;
        return exact::TruncatedSeries(std::move(values), truncation);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void SeriesCache::store(const std::string& key, const exact::TruncatedSeries& s) const {
    std::lock_guard lock(mutex_);
    fs::create_directories(dir_);
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
    Json j{{"key", key}, {"truncation", s.truncation()}, {"coefficients", coeffs}, {"checksum", checksum(coeffs)}};
    const fs::path target = path_for(key);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << "\n";
    }
    fs::rename(tmp, target);
}

exact::TruncatedSeries SeriesCache::get_or_compute(const std::string& key,
                                                   const std::function<exact::TruncatedSeries()>& compute) const {
    if (auto hit = load(key)) return *hit;
    auto s = compute();
    store(key, s);
    return s;
}

}  // namespace galilei::report
