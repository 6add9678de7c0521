#include "fishburn/oeis.hpp"

#include <fstream>
#include <stdexcept>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

namespace fishburn {

namespace {

bool contains_run(const std::vector<std::int64_t>& data, const std::vector<std::int64_t>& terms) {
    if (terms.empty() || terms.size() > data.size()) return false;
    for (std::size_t start = 0; start + terms.size() <= data.size(); ++start) {
        bool match = true;
        for (std::size_t i = 0; i < terms.size() && match; ++i)
            match = data[start + i] == terms[i];
        if (match) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> oeis_offline_lookup(const std::vector<std::int64_t>& terms,
                                             const std::string& fixture_path) {
    if (terms.empty()) throw std::invalid_argument("oeis lookup requires at least one term");
    std::ifstream in(fixture_path);
    if (!in) throw std::runtime_error("cannot open OEIS fixture " + fixture_path);
    nlohmann::json doc;
    in >> doc;
    std::vector<std::string> hits;
    for (const auto& [id, data] : doc.items()) {
        std::vector<std::int64_t> seq;
        for (const auto& v : data) seq.push_back(v.get<std::int64_t>());
        if (contains_run(seq, terms)) hits.push_back(id);
    }
    return hits;
}

std::vector<std::string> oeis_online_lookup(const std::vector<std::int64_t>& terms) {
    if (terms.empty()) throw std::invalid_argument("oeis lookup requires at least one term");
    std::string query;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) query += ",";
        query += std::to_string(terms[i]);
    }
    httplib::SSLClient client("oeis.org", 443);
    client.set_connection_timeout(10);
    client.set_read_timeout(10);
    const auto res = client.Get("/search?q=" + query + "&fmt=json");
    if (!res)
        throw std::runtime_error(
            "OEIS request failed (" + httplib::to_string(res.error()) +
            "); retry later or use --offline with the bundled fixture");
    if (res->status != 200)
        throw std::runtime_error("OEIS returned status " + std::to_string(res->status) +
                                 "; retry later or use --offline with the bundled fixture");
    const auto doc = nlohmann::json::parse(res->body);
    std::vector<std::string> hits;
    const auto* results = doc.contains("results") ? &doc["results"] : nullptr;
    if (results != nullptr && results->is_array()) {
        for (const auto& entry : *results) {
            if (!entry.contains("number")) continue;
            char buf[16];
            std::snprintf(buf, sizeof buf, "A%06d", entry["number"].get<int>());
            hits.emplace_back(buf);
        }
    }
    return hits;
}

}  // namespace fishburn
