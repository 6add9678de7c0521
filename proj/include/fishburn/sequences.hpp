#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fishburn {

// A word of nonnegative integers.  Depending on context it plays the role
// of an ascent sequence, a sequence pattern, or a binary sequence; the
// binary-only operations validate their inputs.
class IntSequence {
public:
    IntSequence() = default;
    explicit IntSequence(std::vector<int> entries);

    // Accepts a digit string ("0110132") or a comma-separated list.
    static IntSequence parse(const std::string& text);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    bool is_binary() const;

    std::string str() const;

    friend bool operator==(const IntSequence&, const IntSequence&) = default;
    friend auto operator<=>(const IntSequence&, const IntSequence&) = default;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntSequence& s);

// a_1 = 0 and each a_j <= 1 + (number of ascents among a_1..a_{j-1}).
bool is_ascent_sequence(const IntSequence& s);

// Containment up to relative order, with equalities preserved: a subsequence
// matches the pattern when every pairwise <,=,> comparison agrees.
bool seq_contains(const IntSequence& s, const IntSequence& pattern);

// Literal containment on binary words: beta must appear as an identical
// subsequence.  Distinct from seq_contains (1111 bin-avoids 000 but
// seq-contains it).
bool bin_contains(const IntSequence& s, const IntSequence& beta);

struct BinaryStats {
    std::int64_t inv = 0;        // pairs (j,k), j<k, s_j=1, s_k=0
    std::int64_t zerozeros = 0;  // pairs of 0s
    std::int64_t oneones = 0;    // pairs of 1s
    int ones = 0;
    int lastentry = 0;
};

BinaryStats binary_stats(const IntSequence& s);

namespace detail {

int count_ascents(const std::vector<int>& s);
bool word_is_ascent_sequence(const std::vector<int>& s);
bool seq_word_contains(const std::vector<int>& s, const std::vector<int>& pat);
// Occurrence of pat that uses the final entry of s as the final entry of
// pat; this is the only new containment possible after appending to s.
bool seq_occurrence_through_last(const std::vector<int>& s, const std::vector<int>& pat);
bool bin_word_contains(const std::vector<int>& s, const std::vector<int>& beta);

}  // namespace detail

}  // namespace fishburn
