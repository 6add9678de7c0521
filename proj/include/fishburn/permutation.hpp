#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fishburn {

// A permutation of {1,...,n} in one-line notation, immutable after
// construction.  The empty permutation (n = 0) is valid; it avoids every
// nonempty pattern, which keeps the x^0 terms of all generating functions
// well defined.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);

    // Accepts a digit string ("3142") for lengths up to 9, or a
    // comma-separated entry list ("3,1,4,2") for any length.
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// A pattern to search for: either a classical permutation pattern or the
// bivincular pattern (231,{1},{1}), whose avoiders are the Fishburn
// permutations.  An occurrence of the bivincular pattern is a subsequence
// p[j], p[j+1], p[k] with j+1 < k, p[j] = p[k] + 1 and p[j+1] > p[j].
class PatternSpec {
public:
    static PatternSpec classical(Permutation p);
    static PatternSpec fishburn();

    bool is_fishburn() const { return fishburn_; }
    const Permutation& pattern() const { return pattern_; }

    std::string str() const;

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;

private:
    PatternSpec(bool fish, Permutation pat);
    bool fishburn_ = false;
    Permutation pattern_;
};

// A subset of {2,...,n}, giving the entries placed before the 1 in the
// two-descending-runs normal form of a 123-avoiding Fishburn permutation.
struct SubsetSpec {
    int n = 0;
    std::vector<int> members;  // strictly increasing, all in {2,...,n}

    SubsetSpec(int n, std::vector<int> members);
};

enum class Restrictiveness { Restrictive, Unrestrictive, Neither };

std::string to_string(Restrictiveness r);

// -- statistics ------------------------------------------------------------

std::int64_t inv(const Permutation& p);
int ltrmax(const Permutation& p);
// Number of entries strictly to the right of the value 1; undefined on the
// empty permutation.
int afterone(const Permutation& p);

// -- containment -----------------------------------------------------------

bool contains(const Permutation& p, const PatternSpec& pat);
std::int64_t count_f_occurrences(const Permutation& p);

// -- structure -------------------------------------------------------------

Permutation direct_sum(const Permutation& a, const Permutation& b);
bool is_indecomposable(const Permutation& p);
Restrictiveness classify_restrictive(const Permutation& p);
Permutation pi_of_A(const SubsetSpec& a);

// Low-level helpers shared with the enumerator; `w` is one-line notation
// over {1..n}.
namespace detail {

bool word_contains_classical(const std::vector<int>& w, const std::vector<int>& pat);
bool word_contains_f(const std::vector<int>& w);
// True when w (which already holds its maximum at position inserted_pos)
// has an occurrence of pat using that maximum.  Any occurrence created by
// inserting a new maximum must use it in the role of the pattern's largest
// entry, so this is the only containment that needs rechecking.
bool word_occurrence_through_max(const std::vector<int>& w, int inserted_pos,
                                 const std::vector<int>& pat);

}  // namespace detail

}  // namespace fishburn
