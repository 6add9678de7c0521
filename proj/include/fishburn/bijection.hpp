#pragma once

#include <vector>

#include "fishburn/permutation.hpp"
#include "fishburn/sequences.hpp"

namespace fishburn {

// Sites of a permutation of length n are the n+1 gaps between entries,
// identified by the number of entries to their left.  A site is active when
// inserting n+1 there keeps the permutation Fishburn.  The leftmost site is
// always active; active sites are labeled 0,1,... from left to right.

// All active sites of p in left-to-right order, computed definitionally by
// trial insertion.  Throws if p itself contains the Fishburn pattern.
std::vector<int> active_sites(const Permutation& p);

// Insert |p|+1 so that `site` entries precede it.
Permutation insert_max(const Permutation& p, int site);

// The Bousquet-Melou--Claesson--Dukes--Kitaev bijection: rebuild p by
// inserting 1,2,...,n and record the label of the active site used at each
// step.  The result is an ascent sequence.
IntSequence g_map(const Permutation& p);

// Reconstructs the unique Fishburn permutation with the given label
// sequence.  Rejects inputs that are not ascent sequences, naming the first
// offending position.
Permutation g_inverse(const IntSequence& s);

namespace detail {

// Active sites of a raw word via the local criterion: inserting the new
// maximum at site s creates an occurrence of the Fishburn pattern exactly
// when the entry a just left of the site has a-1 somewhere to its right.
// Used by the enumerator; the trial-insertion definition above is the
// oracle it is tested against.
void word_active_sites(const std::vector<int>& w, const std::vector<int>& pos,
                       std::vector<int>& out);

}  // namespace detail

}  // namespace fishburn
