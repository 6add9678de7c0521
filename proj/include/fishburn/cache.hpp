#pragma once

#include <memory>
#include <optional>
#include <string>

namespace fishburn {

inline constexpr const char* kToolVersion = "1.0.0";

// A single-document JSON result cache keyed by (class spec, statistic set)
// and n.  Values are stored as strings, exactly as they are printed, so a
// hit reproduces output byte for byte.  Saving writes a temp file and
// renames it into place.  A corrupt file is discarded with a warning.
class ResultCache {
public:
    ResultCache(std::string path, std::string version = kToolVersion);

    // Returns false when the file was missing, unreadable, or carried a
    // different tool version (entries are then dropped).
    bool load();
    void save() const;

    std::optional<std::string> get(const std::string& key, int n) const;
    void put(const std::string& key, int n, const std::string& value);

    const std::string& path() const { return path_; }

    // FISHBURN_LAB_CACHE env override, else a per-user cache directory.
    static std::string default_path();

private:
    std::string path_;
    std::string version_;
    // key -> (n -> value), kept as parsed JSON internally
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

}  // namespace fishburn
