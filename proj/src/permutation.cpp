#include "fishburn/permutation.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fishburn/checked.hpp"

namespace fishburn {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation must be a rearrangement of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> vals;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad permutation literal: " + text);
            vals.push_back(c - '0');
        }
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                vals.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad permutation entry: " + tok);
            }
        }
    }
    return Permutation(std::move(vals));
}

std::string Permutation::str() const {
    const int n = size();
    std::string out;
    if (n <= 9) {
        for (int v : values_) out.push_back(static_cast<char>('0' + v));
    } else {
        for (int i = 0; i < n; ++i) {
            if (i) out.push_back(',');
            out += std::to_string(values_[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

PatternSpec::PatternSpec(bool fish, Permutation pat) : fishburn_(fish), pattern_(std::move(pat)) {}

PatternSpec PatternSpec::classical(Permutation p) {
    if (p.empty()) throw std::invalid_argument("classical pattern must be nonempty");
    return PatternSpec(false, std::move(p));
}

PatternSpec PatternSpec::fishburn() { return PatternSpec(true, Permutation{}); }

std::string PatternSpec::str() const { return fishburn_ ? "f" : pattern_.str(); }

SubsetSpec::SubsetSpec(int n_, std::vector<int> members_) : n(n_), members(std::move(members_)) {
    if (n < 1) throw std::invalid_argument("SubsetSpec requires n >= 1");
    std::sort(members.begin(), members.end());
    int prev = 0;
    for (int m : members) {
        if (m < 2 || m > n || m == prev)
            throw std::invalid_argument("SubsetSpec members must be a subset of {2..n}");
        prev = m;
    }
}

std::string to_string(Restrictiveness r) {
    switch (r) {
        case Restrictiveness::Restrictive: return "restrictive";
        case Restrictiveness::Unrestrictive: return "unrestrictive";
        default: return "neither";
    }
}

std::int64_t inv(const Permutation& p) {
    const int n = p.size();
    std::int64_t count = 0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (p[j] > p[k]) ++count;
    return count;
}

int ltrmax(const Permutation& p) {
    int count = 0, best = 0;
    for (int v : p.values()) {
        if (v > best) {
            best = v;
            ++count;
        }
    }
    return count;
}

int afterone(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("afterone undefined on empty permutation");
    for (int i = 0; i < p.size(); ++i)
        if (p[i] == 1) return p.size() - 1 - i;
    return 0;  // unreachable
}

namespace detail {

namespace {

// Backtracking subsequence search: grow a match from the left, pruning on
// order inconsistency and on insufficient remaining length.  Patterns here
// have length <= 5 and words length <= ~16, so this is plenty fast.
bool match_from(const std::vector<int>& w, const std::vector<int>& pat,
                std::vector<int>& chosen, int pat_idx, int start) {
    const int k = static_cast<int>(pat.size());
    const int n = static_cast<int>(w.size());
    if (pat_idx == k) return true;
    for (int i = start; i <= n - (k - pat_idx); ++i) {
        bool ok = true;
        for (int j = 0; j < pat_idx && ok; ++j)
            ok = (pat[j] < pat[pat_idx]) == (w[chosen[j]] < w[i]);
        if (!ok) continue;
        chosen[pat_idx] = i;
        if (match_from(w, pat, chosen, pat_idx + 1, i + 1)) return true;
    }
    return false;
}

}  // namespace

bool word_contains_classical(const std::vector<int>& w, const std::vector<int>& pat) {
    if (pat.empty()) return true;
    if (pat.size() > w.size()) return false;
    std::vector<int> chosen(pat.size());
    return match_from(w, pat, chosen, 0, 0);
}

bool word_contains_f(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    if (n < 3) return false;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[i])] = i;
    for (int j = 0; j + 1 < n; ++j) {
        if (w[j + 1] <= w[j] || w[j] < 2) continue;
        if (pos[static_cast<std::size_t>(w[j] - 1)] > j + 1) return true;
    }
    return false;
}

namespace {

bool match_pinned(const std::vector<int>& w, const std::vector<int>& pat,
                  int max_idx, int pinned_pos, std::vector<int>& chosen,
                  int pat_idx, int start) {
    const int k = static_cast<int>(pat.size());
    const int n = static_cast<int>(w.size());
    if (pat_idx == k) return true;
    if (pat_idx == max_idx) {
        if (start > pinned_pos) return false;
        chosen[pat_idx] = pinned_pos;
        return match_pinned(w, pat, max_idx, pinned_pos, chosen, pat_idx + 1, pinned_pos + 1);
    }
    // Positions before the pattern maximum must sit left of the pin.
    const int limit = pat_idx < max_idx ? pinned_pos : n;
    for (int i = start; i <= limit - (max_idx > pat_idx ? max_idx - pat_idx : k - pat_idx); ++i) {
        if (i == pinned_pos) continue;
        bool ok = true;
        for (int j = 0; j < pat_idx && ok; ++j) {
            if (j == max_idx) continue;  // w[pinned] is the maximum, always consistent
            ok = (pat[j] < pat[pat_idx]) == (w[chosen[j]] < w[i]);
        }
        if (!ok) continue;
        chosen[pat_idx] = i;
        if (match_pinned(w, pat, max_idx, pinned_pos, chosen, pat_idx + 1, i + 1)) return true;
    }
    return false;
}

}  // namespace

bool word_occurrence_through_max(const std::vector<int>& w, int inserted_pos,
                                 const std::vector<int>& pat) {
    const int k = static_cast<int>(pat.size());
    if (k == 0 || k > static_cast<int>(w.size())) return k == 0;
    int max_idx = 0;
    for (int i = 1; i < k; ++i)
        if (pat[i] > pat[max_idx]) max_idx = i;
    std::vector<int> chosen(pat.size());
    return match_pinned(w, pat, max_idx, inserted_pos, chosen, 0, 0);
}

}  // namespace detail

bool contains(const Permutation& p, const PatternSpec& pat) {
    if (pat.is_fishburn()) return detail::word_contains_f(p.values());
    return detail::word_contains_classical(p.values(), pat.pattern().values());
}

std::int64_t count_f_occurrences(const Permutation& p) {
    const int n = p.size();
    if (n < 3) return 0;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(p[i])] = i;
    std::int64_t count = 0;
    // For each ascent p[j] < p[j+1], the only candidate third entry is the
    // value p[j] - 1, so each j contributes at most one occurrence.
    for (int j = 0; j + 1 < n; ++j) {
        if (p[j + 1] <= p[j] || p[j] < 2) continue;
        if (pos[static_cast<std::size_t>(p[j] - 1)] > j + 1) ++count;
    }
    return count;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> vals = a.values();
    vals.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int v : b.values()) vals.push_back(v + a.size());
    return Permutation(std::move(vals));
}

bool is_indecomposable(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("indecomposability undefined on empty permutation");
    int prefix_max = 0;
    for (int k = 0; k + 1 < p.size(); ++k) {
        prefix_max = std::max(prefix_max, p[k]);
        if (prefix_max == k + 1) return false;  // prefix is a rearrangement of 1..k+1
    }
    return true;
}

Restrictiveness classify_restrictive(const Permutation& p) {
    static const std::vector<int> p123{1, 2, 3}, p2413{2, 4, 1, 3}, p3412{3, 4, 1, 2};
    const auto& w = p.values();
    if (detail::word_contains_classical(w, p123) || !detail::word_contains_f(w))
        return Restrictiveness::Neither;
    const bool wide = detail::word_contains_classical(w, p2413) ||
                      detail::word_contains_classical(w, p3412);
    return wide ? Restrictiveness::Unrestrictive : Restrictiveness::Restrictive;
}

Permutation pi_of_A(const SubsetSpec& a) {
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(a.n));
    for (auto it = a.members.rbegin(); it != a.members.rend(); ++it) vals.push_back(*it);
    vals.push_back(1);
    std::vector<bool> used(static_cast<std::size_t>(a.n) + 1, false);
    for (int m : a.members) used[static_cast<std::size_t>(m)] = true;
    for (int v = a.n; v >= 2; --v)
        if (!used[static_cast<std::size_t>(v)]) vals.push_back(v);
    return Permutation(std::move(vals));
}

}  // namespace fishburn
