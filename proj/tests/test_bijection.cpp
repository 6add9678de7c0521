#include <doctest.h>

#include <algorithm>
#include <functional>

#include "fishburn/bijection.hpp"
#include "fishburn/enumerate.hpp"

using namespace fishburn;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
IntSequence S(const char* s) { return IntSequence::parse(s); }

std::vector<Permutation> fishburn_perms(int n) {
    return list_class(make_class(ClassSpec::Base::Fishburn, {}), n);
}

}  // namespace

TEST_CASE("active sites of known permutations") {
    CHECK(active_sites(P("415326")) == std::vector<int>{0, 2, 3, 5, 6});
    CHECK(active_sites(P("1")) == std::vector<int>{0, 1});
    CHECK(active_sites(Permutation{}) == std::vector<int>{0});
    for (int n : {2, 5, 8}) {
        std::vector<int> down(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i)] = n - i;
        CHECK(active_sites(Permutation(down)) == std::vector<int>{0, n});
    }
    CHECK_THROWS_WITH_AS(active_sites(P("35142")), "not a Fishburn permutation",
                         std::invalid_argument);
}

TEST_CASE("insert_max") {
    CHECK(insert_max(P("415326"), 0) == P("7415326"));
    CHECK(insert_max(P("415326"), 6) == P("4153267"));
    CHECK(insert_max(P("1"), 0) == P("21"));
    CHECK_THROWS_AS(insert_max(P("1"), 2), std::out_of_range);
}

TEST_CASE("the local active-site rule matches trial insertion") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : fishburn_perms(n)) {
            std::vector<int> pos(static_cast<std::size_t>(n) + 2, 0);
            for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(p[i])] = i;
            std::vector<int> fast;
            detail::word_active_sites(p.values(), pos, fast);
            CHECK(fast == active_sites(p));
        }
}

TEST_CASE("g on known permutations") {
    // Inserting 7 into the site labeled 2 of 415326 (active sites 0,2,3,5,6)
    // puts it after the 5, so 4157326 is the permutation with image 0110132;
    // 4175326 uses the site labeled 1 instead.
    CHECK(g_map(P("4157326")) == S("0110132"));
    CHECK(g_map(P("4175326")) == S("0110131"));
    CHECK(g_map(P("3142")) == S("0101"));
    CHECK(g_map(P("54321")) == S("00000"));
    CHECK(g_map(Permutation{}) == IntSequence{});
    CHECK_THROWS_AS(g_map(P("35142")), std::invalid_argument);
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : fishburn_perms(n)) CHECK(is_ascent_sequence(g_map(p)));
}

TEST_CASE("g_inverse on known sequences") {
    CHECK(g_inverse(S("0110132")) == P("4157326"));
    CHECK(g_inverse(S("0101")) == P("3142"));
    CHECK(g_inverse(S("0")) == P("1"));
    CHECK(g_inverse(IntSequence{}) == Permutation{});
    CHECK_THROWS_WITH_AS(g_inverse(S("1")), "not an ascent sequence: entry 1 must be 0",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(g_inverse(S("02")),
                         "not an ascent sequence: entry 2 exceeds 1 + ascents of its prefix",
                         std::invalid_argument);
}

TEST_CASE("g round trip") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : fishburn_perms(n)) CHECK(g_inverse(g_map(p)) == p);
    // and the other direction over all ascent sequences
    SeqClassSpec all_ascent;
    for (int n = 0; n <= 8; ++n)
        for_each_seq_class(all_ascent, n,
                           [&](const IntSequence& s) { CHECK(g_map(g_inverse(s)) == s); });
}

TEST_CASE("insertion updates active sites one site at a time") {
    // clauses: inactive sites stay inactive, other active sites stay active,
    // the site left of the new maximum is active, the site right of it is
    // active exactly when the new maximum sits right of the previous one.
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : fishburn_perms(n - 1)) {
            const auto before = active_sites(p);
            for (int s : before) {
                const Permutation q = insert_max(p, s);
                const auto after = active_sites(q);
                auto active_after = [&](int site) {
                    return std::find(after.begin(), after.end(), site) != after.end();
                };
                for (int u = 0; u <= p.size(); ++u) {
                    if (u == s) continue;
                    const bool was = std::find(before.begin(), before.end(), u) != before.end();
                    const int image = u < s ? u : u + 1;
                    CHECK(active_after(image) == was);
                }
                CHECK(active_after(s));
                int pos_prev_max = 0;
                for (int i = 0; i < p.size(); ++i)
                    if (p[i] == p.size()) pos_prev_max = i;
                const bool right_of_prev = p.size() == 0 || s > pos_prev_max;
                CHECK(active_after(s + 1) == right_of_prev);
            }
        }
}

TEST_CASE("labels respect the order of values in the permutation") {
    // if j < k and the k-th label is at most the j-th, then k sits left of j
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : fishburn_perms(n)) {
            const auto a = g_map(p);
            std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
            for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(p[i])] = i;
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    if (a[k - 1] <= a[j - 1])
                        CHECK(pos[static_cast<std::size_t>(k)] < pos[static_cast<std::size_t>(j)]);
        }
}

TEST_CASE("site labels never decrease along insertion chains") {
    // Follow every chain of active-site insertions up to length 7.  A site
    // is a physical gap, identified by the value immediately to its left
    // (0 for the leftmost gap); insertions to the left shift its position
    // but its active-site label may only grow.
    auto labels_by_left_value = [](const Permutation& p) {
        const auto sites = active_sites(p);
        std::vector<int> labels(static_cast<std::size_t>(p.size()) + 1, -1);
        for (std::size_t i = 0; i < sites.size(); ++i) {
            const int s = sites[i];
            const int left = s == 0 ? 0 : p[s - 1];
            labels[static_cast<std::size_t>(left)] = static_cast<int>(i);
        }
        return labels;  // indexed by left-neighbor value
    };
    struct Chain {
        std::vector<std::vector<int>> ancestors;
    };
    std::function<void(const Permutation&, Chain&)> walk = [&](const Permutation& p, Chain& ch) {
        const auto labels = labels_by_left_value(p);
        for (const auto& old : ch.ancestors)
            for (std::size_t v = 0; v < old.size(); ++v)
                if (old[v] >= 0 && labels[v] >= 0) CHECK(old[v] <= labels[v]);
        if (p.size() == 7) return;
        ch.ancestors.push_back(labels);
        for (int s : active_sites(p)) walk(insert_max(p, s), ch);
        ch.ancestors.pop_back();
    };
    Chain ch;
    walk(Permutation{}, ch);
}

TEST_CASE("123-avoidance, binary images and statistics correspondence") {
    const PatternSpec c123 = PatternSpec::classical(P("123"));
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : list_class(make_class(ClassSpec::Base::Fishburn, {"123"}), n)) {
            const auto g = g_map(p);
            REQUIRE(g.is_binary());
            const auto st = binary_stats(g);
            CHECK(afterone(p) == st.ones);
            CHECK(ltrmax(p) == 1 + st.lastentry);
            CHECK(inv(p) == st.inv + st.zerozeros + st.oneones);
        }
}

TEST_CASE("pi_of_A is a bijection onto the 123-avoiding Fishburn permutations") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Permutation> image;
        // iterate subsets of {2..n}
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> members;
            for (int b = 0; b < n - 1; ++b)
                if ((mask >> b) & 1) members.push_back(b + 2);
            image.push_back(pi_of_A(SubsetSpec(n, members)));
        }
        std::sort(image.begin(), image.end());
        CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());  // injective
        auto target = list_class(make_class(ClassSpec::Base::Fishburn, {"123"}), n);
        std::sort(target.begin(), target.end());
        CHECK(image == target);
    }
}
