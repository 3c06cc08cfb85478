#pragma once

// On-disk cache for expensive series, one JSON file per key. The file name
// is the FNV-1a hash of the key; each entry carries the key and a checksum
// of its coefficients, and anything that fails to verify counts as a miss.

#include <galilei/exact/series.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <string>

namespace galilei::report {

std::uint64_t fnv1a(const std::string& data);

class SeriesCache {
public:
    explicit SeriesCache(std::filesystem::path dir);

    // $GALILEI_CACHE_DIR, or ".galilei-cache" when unset.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<exact::TruncatedSeries> load(const std::string& key) const;
    void store(const std::string& key, const exact::TruncatedSeries& s) const;
    exact::TruncatedSeries get_or_compute(const std::string& key, const std::function<exact::TruncatedSeries()>& compute) const;

private:
    std::filesystem::path path_for(const std::string& key) const;

    std::filesystem::path dir_;
    mutable std::mutex mutex_;
};

}  // namespace galilei::report
