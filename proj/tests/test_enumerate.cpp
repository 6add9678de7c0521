#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fishburn/enumerate.hpp"
#include "fishburn/series.hpp"

using namespace fishburn;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

using Base = ClassSpec::Base;

// brute-force class count: filter all n! permutations
std::int64_t oracle_count(const ClassSpec& spec, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::int64_t count = 0;
    do {
        const Permutation p(v);
        if (spec.base == Base::Fishburn && contains(p, PatternSpec::fishburn())) continue;
        bool ok = true;
        for (const auto& pat : spec.avoid)
            if (contains(p, PatternSpec::classical(pat))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (spec.indecomposable_only && (n == 0 || !is_indecomposable(p))) continue;
        ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    return count;
}

SeqClassSpec seq_spec(SeqClassSpec::Kind kind, std::initializer_list<const char*> avoid) {
    SeqClassSpec s;
    s.kind = kind;
    for (const char* a : avoid) s.avoid.push_back(IntSequence::parse(a));
    return s;
}

}  // namespace

TEST_CASE("Fishburn numbers by enumeration") {
    const auto cls = make_class(Base::Fishburn, {});
    const std::vector<std::int64_t> expect{1, 1, 2, 5, 15, 53, 217, 1014, 5335};
    for (int n = 0; n <= 8; ++n) CHECK(count_class(cls, n) == expect[static_cast<std::size_t>(n)]);
}

TEST_CASE("single-pattern class sizes from the literature") {
    CHECK(count_class(make_class(Base::Fishburn, {"4123"}), 10) == 20753);
    for (int n = 0; n <= 7; ++n)
        CHECK(count_class(make_class(Base::All, {"21"}), n) == 1);
}

TEST_CASE("iteration yields each member once in site order") {
    const auto f2 = list_class(make_class(Base::Fishburn, {}), 2);
    REQUIRE(f2.size() == 2);
    // depth-first by ascending site: prepending before appending
    CHECK(f2 == std::vector<Permutation>{P("21"), P("12")});
    CHECK(list_class(make_class(Base::Fishburn, {}), 4).size() == 15);
    const auto f123 = list_class(make_class(Base::Fishburn, {"123"}), 3);
    CHECK(std::set<Permutation>(f123.begin(), f123.end()) ==
          std::set<Permutation>{P("132"), P("213"), P("312"), P("321")});
    // no duplicates at larger sizes
    auto members = list_class(make_class(Base::Fishburn, {}), 6);
    std::sort(members.begin(), members.end());
    CHECK(std::adjacent_find(members.begin(), members.end()) == members.end());
}

TEST_CASE("pruned counting equals brute-force filtering") {
    const std::vector<ClassSpec> specs{
        make_class(Base::Fishburn, {}),
        make_class(Base::Fishburn, {"123"}),
        make_class(Base::Fishburn, {"321", "1423"}),
        make_class(Base::Fishburn, {"2413", "2431"}),
        make_class(Base::Fishburn, {"2413", "2431"}, true),
        make_class(Base::All, {"231", "123", "312"}),
        make_class(Base::All, {"2413", "3412"}),
    };
    for (const auto& spec : specs)
        for (int n = 0; n <= 6; ++n) CHECK(count_class(spec, n) == oracle_count(spec, n));
}

TEST_CASE("sequence class counts") {
    CHECK(count_seq_class(seq_spec(SeqClassSpec::Kind::AscentSeq, {"120"}), 10) == 20754);
    CHECK(count_seq_class(seq_spec(SeqClassSpec::Kind::AscentSeq, {"101"}), 6) == 132);
    CHECK(count_seq_class(seq_spec(SeqClassSpec::Kind::BinarySeq, {"000"}), 4) == 11);
    // unconstrained ascent sequences are counted by the Fishburn numbers
    const std::vector<std::int64_t> fish{1, 1, 2, 5, 15, 53, 217, 1014};
    for (int n = 0; n <= 7; ++n)
        CHECK(count_seq_class(seq_spec(SeqClassSpec::Kind::AscentSeq, {}), n) ==
              fish[static_cast<std::size_t>(n)]);
    // brute-force cross-check for binary words
    for (int n = 0; n <= 10; ++n) {
        const auto beta = IntSequence::parse("101");
        std::int64_t oracle = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (mask >> i) & 1;
            if (!bin_contains(IntSequence(w), beta)) ++oracle;
        }
        CHECK(count_seq_class(seq_spec(SeqClassSpec::Kind::BinarySeq, {"101"}), n) == oracle);
    }
}

TEST_CASE("enumeration is deterministic under parallel splitting") {
    const std::vector<ClassSpec> specs{
        make_class(Base::Fishburn, {}),
        make_class(Base::Fishburn, {"321", "2143"}),
        make_class(Base::All, {"231"}),
    };
    for (const auto& spec : specs) {
        const std::int64_t reference = count_class(spec, 7);
        const SparsePoly ref_poly = poly_class(spec, 7, {true, true, false});
        for (int depth : {0, 1, 2})
            for (int threads : {1, 2, 4}) {
                const RunOptions opts{threads, depth};
                CHECK(count_class(spec, 7, opts) == reference);
                CHECK(poly_class(spec, 7, {true, true, false}, opts) == ref_poly);
            }
    }
}

TEST_CASE("statistic polynomials") {
    // length 0: the empty permutation contributes the constant 1
    CHECK(poly_class(make_class(Base::Fishburn, {}), 0, {true, true, false}) ==
          SparsePoly::constant(1));
    CHECK_THROWS_AS(poly_class(make_class(Base::Fishburn, {}), 0, {false, false, true}),
                    std::invalid_argument);
    // F_2(123): permutations 21 and 12 weigh qt and t^2 r
    CHECK(poly_class(make_class(Base::Fishburn, {"123"}), 2, {true, true, true}) ==
          SparsePoly::term(1, 1, 1, 0) + SparsePoly::term(1, 0, 2, 1));
}

TEST_CASE("one-ascent Motzkin paths") {
    CHECK(count_motzkin_one_ascent(0) == 0);
    CHECK(count_motzkin_one_ascent(3) == 3);
    CHECK(count_motzkin_one_ascent(5) == 14);
    // brute force over all step words
    for (int n = 0; n <= 9; ++n) {
        std::int64_t oracle = 0;
        std::int64_t total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (std::int64_t word = 0; word < total; ++word) {
            std::int64_t w = word;
            int h = 0, runs = 0;
            bool prev_up = false, ok = true;
            for (int i = 0; i < n && ok; ++i) {
                const int step = static_cast<int>(w % 3);
                w /= 3;
                if (step == 0) {
                    if (!prev_up) ++runs;
                    ++h;
                    prev_up = true;
                } else {
                    prev_up = false;
                    if (step == 2) ok = --h >= 0;
                }
            }
            if (ok && h == 0 && runs == 1) ++oracle;
        }
        CHECK(count_motzkin_one_ascent(n) == oracle);
    }
}

TEST_CASE("gap-constrained binary words") {
    CHECK(count_gap_binary(0) == 1);
    CHECK(count_gap_binary(3) == 8);
    CHECK(count_gap_binary(4) == 15);
    for (int n = 0; n <= 12; ++n) {
        std::int64_t oracle = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            int zeros_since = -1;  // -1: no 1 seen yet
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if ((mask >> i) & 1) {
                    ok = zeros_since <= 1;
                    zeros_since = 0;
                } else if (zeros_since >= 0) {
                    ++zeros_since;
                }
            }
            if (ok) ++oracle;
        }
        CHECK(count_gap_binary(n) == oracle);
    }
}

TEST_CASE("involution enumeration") {
    const std::vector<std::int64_t> involutions{1, 1, 2, 4, 10, 26, 76, 232, 764};
    for (int n = 0; n <= 8; ++n)
        CHECK(count_involutions_avoiding(n, {}) == involutions[static_cast<std::size_t>(n)]);
    // avoiding 21 leaves only the identity
    for (int n = 0; n <= 6; ++n)
        CHECK(count_involutions_avoiding(n, {P("21")}) == 1);
}

TEST_CASE("class spec validation and keys") {
    ClassSpec dup;
    dup.avoid = {P("321"), P("321")};
    CHECK_THROWS_AS(count_class(dup, 3), std::invalid_argument);
    CHECK(make_class(Base::Fishburn, {"321", "1423"}).key() == "fishburn|1423|321");
    CHECK(make_class(Base::All, {}, true).key() == "all|ind");
    CHECK(seq_spec(SeqClassSpec::Kind::AscentSeq, {"101"}).key() == "ascent|101");
}
