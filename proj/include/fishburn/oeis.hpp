#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fishburn {

// Identifiers of fixture sequences whose data contains `terms` as a
// contiguous run.  The fixture is a JSON object mapping A-numbers to term
// arrays (see data/oeis_fixture.json).
std::vector<std::string> oeis_offline_lookup(const std::vector<std::int64_t>& terms,
                                             const std::string& fixture_path);

// Queries the OEIS search endpoint (JSON format, 10 s timeout, no retries).
// Throws on network failure with a hint to retry or use the offline fixture.
std::vector<std::string> oeis_online_lookup(const std::vector<std::int64_t>& terms);

}  // namespace fishburn
