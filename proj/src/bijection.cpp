#include "fishburn/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fishburn {

std::vector<int> active_sites(const Permutation& p) {
    const auto& w = p.values();
    if (detail::word_contains_f(w)) throw std::invalid_argument("not a Fishburn permutation");
    const int n = p.size();
    std::vector<int> sites;
    std::vector<int> trial;
    trial.reserve(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) {
        trial.assign(w.begin(), w.begin() + s);
        trial.push_back(n + 1);
        trial.insert(trial.end(), w.begin() + s, w.end());
        if (!detail::word_contains_f(trial)) sites.push_back(s);
    }
    return sites;
}

Permutation insert_max(const Permutation& p, int site) {
    if (site < 0 || site > p.size()) throw std::out_of_range("insertion site out of range");
    std::vector<int> vals = p.values();
    vals.insert(vals.begin() + site, p.size() + 1);
    return Permutation(std::move(vals));
}

namespace detail {

void word_active_sites(const std::vector<int>& w, const std::vector<int>& pos,
                       std::vector<int>& out) {
    const int n = static_cast<int>(w.size());
    out.clear();
    out.push_back(0);
    for (int s = 1; s <= n; ++s) {
        const int a = w[s - 1];
        if (a == 1 || pos[static_cast<std::size_t>(a - 1)] < s) out.push_back(s);
    }
}

}  // namespace detail

IntSequence g_map(const Permutation& p) {
    const auto& w = p.values();
    if (detail::word_contains_f(w)) throw std::invalid_argument("not a Fishburn permutation");
    const int n = p.size();
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> partial;  // w restricted to values < j, in order
    partial.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        partial.clear();
        int site_of_j = 0;
        for (int v : w) {
            if (v < j) partial.push_back(v);
            if (v == j) site_of_j = static_cast<int>(partial.size());
        }
        const auto sites = active_sites(Permutation(partial));
        const auto it = std::find(sites.begin(), sites.end(), site_of_j);
        if (it == sites.end()) throw std::logic_error("g_map: insertion site not active");
        labels[static_cast<std::size_t>(j) - 1] = static_cast<int>(it - sites.begin());
    }
    return IntSequence(std::move(labels));
}

Permutation g_inverse(const IntSequence& s) {
    const auto& a = s.entries();
    const int n = s.size();
    if (n > 0 && a[0] != 0)
        throw std::invalid_argument("not an ascent sequence: entry 1 must be 0");
    int asc = 0;
    for (int j = 1; j < n; ++j) {
        if (a[static_cast<std::size_t>(j)] > 1 + asc)
            throw std::invalid_argument("not an ascent sequence: entry " + std::to_string(j + 1) +
                                        " exceeds 1 + ascents of its prefix");
        if (a[static_cast<std::size_t>(j) - 1] < a[static_cast<std::size_t>(j)]) ++asc;
    }
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const auto sites = active_sites(Permutation(w));
        const int label = a[static_cast<std::size_t>(j) - 1];
        if (label >= static_cast<int>(sites.size()))
            throw std::invalid_argument("no active site with label " + std::to_string(label) +
                                        " at position " + std::to_string(j));
        w.insert(w.begin() + sites[static_cast<std::size_t>(label)], j);
    }
    return Permutation(std::move(w));
}

}  // namespace fishburn
