#include "fishburn/sequences.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fishburn {

IntSequence::IntSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("sequence entries must be nonnegative");
}

IntSequence IntSequence::parse(const std::string& text) {
    std::vector<int> vals;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad sequence literal: " + text);
            vals.push_back(c - '0');
        }
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                vals.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad sequence entry: " + tok);
            }
        }
    }
    return IntSequence(std::move(vals));
}

bool IntSequence::is_binary() const {
    for (int e : entries_)
        if (e > 1) return false;
    return true;
}

std::string IntSequence::str() const {
    bool digits = true;
    for (int e : entries_)
        if (e > 9) digits = false;
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (digits) {
            out.push_back(static_cast<char>('0' + entries_[i]));
        } else {
            if (i) out.push_back(',');
            out += std::to_string(entries_[i]);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntSequence& s) { return os << s.str(); }

namespace detail {

int count_ascents(const std::vector<int>& s) {
    int asc = 0;
    for (std::size_t j = 1; j < s.size(); ++j)
        if (s[j - 1] < s[j]) ++asc;
    return asc;
}

bool word_is_ascent_sequence(const std::vector<int>& s) {
    if (s.empty()) return true;
    if (s[0] != 0) return false;
    int asc = 0;
    for (std::size_t j = 1; j < s.size(); ++j) {
        if (s[j] > 1 + asc) return false;
        if (s[j - 1] < s[j]) ++asc;
    }
    return true;
}

namespace {

int sign3(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

bool seq_match_from(const std::vector<int>& s, const std::vector<int>& pat,
                    std::vector<int>& chosen, int pat_idx, int start) {
    const int k = static_cast<int>(pat.size());
    const int n = static_cast<int>(s.size());
    if (pat_idx == k) return true;
    for (int i = start; i <= n - (k - pat_idx); ++i) {
        bool ok = true;
        for (int j = 0; j < pat_idx && ok; ++j)
            ok = sign3(pat[j], pat[pat_idx]) == sign3(s[chosen[j]], s[i]);
        if (!ok) continue;
        chosen[pat_idx] = i;
        if (seq_match_from(s, pat, chosen, pat_idx + 1, i + 1)) return true;
    }
    return false;
}

bool seq_match_pinned_last(const std::vector<int>& s, const std::vector<int>& pat,
                           std::vector<int>& chosen, int pat_idx, int start) {
    const int k = static_cast<int>(pat.size());
    const int n = static_cast<int>(s.size());
    const int last = n - 1;
    if (pat_idx == k - 1) return start <= last;  // the pin itself
    for (int i = start; i <= last - (k - 1 - pat_idx); ++i) {
        bool ok = sign3(pat[pat_idx], pat[k - 1]) == sign3(s[i], s[last]);
        for (int j = 0; j < pat_idx && ok; ++j)
            ok = sign3(pat[j], pat[pat_idx]) == sign3(s[chosen[j]], s[i]);
        if (!ok) continue;
        chosen[pat_idx] = i;
        if (seq_match_pinned_last(s, pat, chosen, pat_idx + 1, i + 1)) return true;
    }
    return false;
}

}  // namespace

bool seq_word_contains(const std::vector<int>& s, const std::vector<int>& pat) {
    if (pat.empty()) return true;
    if (pat.size() > s.size()) return false;
    std::vector<int> chosen(pat.size());
    return seq_match_from(s, pat, chosen, 0, 0);
}

bool seq_occurrence_through_last(const std::vector<int>& s, const std::vector<int>& pat) {
    if (pat.empty()) return true;
    if (pat.size() > s.size()) return false;
    std::vector<int> chosen(pat.size());
    return seq_match_pinned_last(s, pat, chosen, 0, 0);
}

bool bin_word_contains(const std::vector<int>& s, const std::vector<int>& beta) {
    std::size_t at = 0;
    for (int e : s) {
        if (at < beta.size() && e == beta[at]) ++at;
        if (at == beta.size()) return true;
    }
    return at == beta.size();
}

}  // namespace detail

bool is_ascent_sequence(const IntSequence& s) {
    return detail::word_is_ascent_sequence(s.entries());
}

bool seq_contains(const IntSequence& s, const IntSequence& pattern) {
    return detail::seq_word_contains(s.entries(), pattern.entries());
}

bool bin_contains(const IntSequence& s, const IntSequence& beta) {
    if (!s.is_binary() || !beta.is_binary())
        throw std::invalid_argument("binary containment requires 0/1 entries");
    return detail::bin_word_contains(s.entries(), beta.entries());
}

BinaryStats binary_stats(const IntSequence& s) {
    if (!s.is_binary()) throw std::invalid_argument("binary stats require 0/1 entries");
    if (s.empty()) throw std::invalid_argument("lastentry undefined on empty sequence");
    BinaryStats out;
    std::int64_t zeros_seen = 0, ones_seen = 0;
    for (int e : s.entries()) {
        if (e == 0) {
            out.inv += ones_seen;
            out.zerozeros += zeros_seen;
            ++zeros_seen;
        } else {
            out.oneones += ones_seen;
            ++ones_seen;
        }
    }
    out.ones = static_cast<int>(ones_seen);
    out.lastentry = s[s.size() - 1];
    return out;
}

}  // namespace fishburn
