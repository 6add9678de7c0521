#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fishburn/permutation.hpp"
#include "fishburn/poly.hpp"
#include "fishburn/sequences.hpp"

namespace fishburn {

// A permutation avoidance class.  Members are generated by inserting the new
// maximum into every site (base All) or every active site (base Fishburn),
// pruning a branch as soon as an avoided classical pattern appears; pattern
// containment is monotone under insertion, so pruning is sound.
struct ClassSpec {
    enum class Base { All, Fishburn };
    Base base = Base::Fishburn;
    std::vector<Permutation> avoid;  // classical patterns, pairwise distinct
    bool indecomposable_only = false;

    std::string key() const;  // canonical serialization, used as cache key
};

ClassSpec make_class(ClassSpec::Base base, std::initializer_list<const char*> avoid,
                     bool indecomposable_only = false);

struct SeqClassSpec {
    enum class Kind { AscentSeq, BinarySeq };
    Kind kind = Kind::AscentSeq;
    // Order-isomorphic patterns for ascent sequences, literal binary words
    // for binary sequences.
    std::vector<IntSequence> avoid;

    std::string key() const;
};

// Work distribution for the enumeration DFS.  Subtrees rooted at depth
// `split_depth` are farmed out to `threads` workers; results merge by an
// associative, commutative addition, so the outcome is independent of the
// split and of scheduling.
struct RunOptions {
    int threads = 1;
    int split_depth = 0;
};

struct StatSet {
    bool inv = false;
    bool ltrmax = false;
    bool afterone = false;

    std::string key() const;
};

std::int64_t count_class(const ClassSpec& c, int n, const RunOptions& opts = {});
SparsePoly poly_class(const ClassSpec& c, int n, const StatSet& stats,
                      const RunOptions& opts = {});
// Visits each member exactly once, in depth-first order by ascending
// insertion site.
void for_each_class(const ClassSpec& c, int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> list_class(const ClassSpec& c, int n);

std::int64_t count_seq_class(const SeqClassSpec& c, int n);
void for_each_seq_class(const SeqClassSpec& c, int n,
                        const std::function<void(const IntSequence&)>& fn);

// -- generating-tree labels ---------------------------------------------------

enum class Tree { T1423, T3124, T2143 };

Tree tree_parse(const std::string& name);  // "1423" | "3124" | "2143"
ClassSpec tree_class(Tree tree);

// A node label in one of the three generating trees.  The trees use
// disjoint tag sets:
//   T1423: (1) (2a) (2b) (2c) (2d) (3)
//   T3124: (1a) (1b) (k) for k >= 2
//   T2143: (1a) (k) for k >= 2, (k*) for k >= 1
struct GenTreeLabel {
    enum class Tag { L1, L2a, L2b, L2c, L2d, L3, L1a, L1b, LK, LKStar };
    Tree tree = Tree::T1423;
    Tag tag = Tag::L1;
    int k = 0;  // meaningful for LK / LKStar

    std::string str() const;
    friend bool operator==(const GenTreeLabel&, const GenTreeLabel&) = default;
    friend auto operator<=>(const GenTreeLabel&, const GenTreeLabel&) = default;
};

// The unique case of the label classification for p, which must belong to
// the tree's class and be nonempty.
GenTreeLabel label_of(Tree tree, const Permutation& p);

// Labels of the in-class children of p, ordered by ascending insertion site.
std::vector<GenTreeLabel> children_labels(Tree tree, const Permutation& p);

// Statistic polynomials refined by label; values sum to poly_class of the
// whole class.
std::map<GenTreeLabel, SparsePoly> label_distribution(Tree tree, int n, const StatSet& stats,
                                                      const RunOptions& opts = {});

// -- auxiliary enumerations for the open-problem equinumerosities -------------

// Lattice paths of n steps U/F/D from height 0 back to 0, never negative,
// with exactly one maximal run of U steps.
std::int64_t count_motzkin_one_ascent(int n);

// Binary words of length n in which no two successive 1s are separated by
// two or more 0s.
std::int64_t count_gap_binary(int n);

// Involutions of length n avoiding every pattern in `avoid`.
std::int64_t count_involutions_avoiding(int n, const std::vector<Permutation>& avoid);

}  // namespace fishburn
