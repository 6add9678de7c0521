#include "fishburn/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>

#include <json.hpp>

namespace fishburn {

struct ResultCache::Impl {
    std::map<std::string, std::map<int, std::string>> entries;
};

ResultCache::ResultCache(std::string path, std::string version)
    : path_(std::move(path)), version_(std::move(version)), impl_(std::make_shared<Impl>()) {}

std::string ResultCache::default_path() {
    if (const char* env = std::getenv("FISHBURN_LAB_CACHE")) return env;
    std::filesystem::path base;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
        base = xdg;
    } else if (const char* home = std::getenv("HOME")) {
        base = std::filesystem::path(home) / ".cache";
    } else {
        base = std::filesystem::temp_directory_path();
    }
    return (base / "fishburn-lab" / "cache.json").string();
}

bool ResultCache::load() {
    impl_->entries.clear();
    std::ifstream in(path_);
    if (!in) return false;
    nlohmann::json doc;
    try {
        in >> doc;
        if (!doc.is_object() || doc.value("version", "") != version_) return false;
        for (const auto& [key, values] : doc.at("entries").items())
            for (const auto& [n, v] : values.items())
                impl_->entries[key][std::stoi(n)] = v.get<std::string>();
    } catch (const std::exception& e) {
        std::cerr << "warning: discarding corrupt cache " << path_ << " (" << e.what() << ")\n";
        impl_->entries.clear();
        return false;
    }
    return true;
}

void ResultCache::save() const {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, values] : impl_->entries) {
        nlohmann::json byn = nlohmann::json::object();
        for (const auto& [n, v] : values) byn[std::to_string(n)] = v;
        entries[key] = std::move(byn);
    }
    nlohmann::json doc{{"version", version_}, {"entries", std::move(entries)}};
    const std::filesystem::path target(path_);
    if (target.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(target.parent_path(), ec);
    }
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp);
        out << doc.dump(1) << "\n";
        if (!out) {
            std::cerr << "warning: could not write cache " << tmp << "\n";
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::cerr << "warning: could not move cache into place: " << ec.message() << "\n";
}

std::optional<std::string> ResultCache::get(const std::string& key, int n) const {
    const auto it = impl_->entries.find(key);
    if (it == impl_->entries.end()) return std::nullopt;
    const auto jt = it->second.find(n);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

void ResultCache::put(const std::string& key, int n, const std::string& value) {
    impl_->entries[key][n] = value;
}

}  // namespace fishburn
