#include "fishburn/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "fishburn/bijection.hpp"
#include "fishburn/checked.hpp"

namespace fishburn {

std::string ClassSpec::key() const {
    std::string k = base == Base::All ? "all" : "fishburn";
    std::vector<std::string> pats;
    for (const auto& p : avoid) pats.push_back(p.str());
    std::sort(pats.begin(), pats.end());
    for (const auto& s : pats) k += "|" + s;
    if (indecomposable_only) k += "|ind";
    return k;
}

ClassSpec make_class(ClassSpec::Base base, std::initializer_list<const char*> avoid,
                     bool indecomposable_only) {
    ClassSpec c;
    c.base = base;
    for (const char* s : avoid) c.avoid.push_back(Permutation::parse(s));
    c.indecomposable_only = indecomposable_only;
    return c;
}

std::string SeqClassSpec::key() const {
    std::string k = kind == Kind::AscentSeq ? "ascent" : "binary";
    std::vector<std::string> pats;
    for (const auto& p : avoid) pats.push_back(p.str());
    std::sort(pats.begin(), pats.end());
    for (const auto& s : pats) k += "|" + s;
    return k;
}

std::string StatSet::key() const {
    std::string k;
    if (inv) k += "inv,";
    if (ltrmax) k += "ltrmax,";
    if (afterone) k += "afterone,";
    if (!k.empty()) k.pop_back();
    return k;
}

namespace {

void validate_class(const ClassSpec& c) {
    for (std::size_t i = 0; i < c.avoid.size(); ++i) {
        if (c.avoid[i].empty()) throw std::invalid_argument("avoided pattern must be nonempty");
        for (std::size_t j = i + 1; j < c.avoid.size(); ++j)
            if (c.avoid[i] == c.avoid[j])
                throw std::invalid_argument("avoided patterns must be pairwise distinct");
    }
}

// DFS over the insertion tree.  `w` holds the current permutation and `pos`
// its inverse; both are restored on backtrack.
struct ClassDfs {
    const ClassSpec& spec;
    int target;
    std::vector<int> w;
    std::vector<int> pos;  // pos[v], 1-based values
    std::vector<int> sites;
    std::vector<std::vector<int>> avoid_words;

    explicit ClassDfs(const ClassSpec& c, int n) : spec(c), target(n), pos(n + 2, 0) {
        w.reserve(static_cast<std::size_t>(n));
        for (const auto& p : c.avoid) avoid_words.push_back(p.values());
    }

    bool word_indecomposable() const {
        int prefix_max = 0;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            prefix_max = std::max(prefix_max, w[k]);
            if (prefix_max == static_cast<int>(k) + 1) return false;
        }
        return !w.empty();
    }

    void insert_at(int s) {
        const int v = static_cast<int>(w.size()) + 1;
        w.insert(w.begin() + s, v);
        for (int u = 1; u < v; ++u)
            if (pos[static_cast<std::size_t>(u)] >= s) ++pos[static_cast<std::size_t>(u)];
        pos[static_cast<std::size_t>(v)] = s;
    }

    void remove_at(int s) {
        const int v = static_cast<int>(w.size());
        w.erase(w.begin() + s);
        for (int u = 1; u < v; ++u)
            if (pos[static_cast<std::size_t>(u)] > s) --pos[static_cast<std::size_t>(u)];
    }

    bool extension_allowed(int s) {
        insert_at(s);
        bool ok = true;
        for (const auto& pat : avoid_words) {
            if (detail::word_occurrence_through_max(w, s, pat)) {
                ok = false;
                break;
            }
        }
        if (!ok) remove_at(s);
        return ok;
    }

    template <typename Leaf>
    void run(Leaf&& leaf) {
        if (static_cast<int>(w.size()) == target) {
            if (!spec.indecomposable_only || word_indecomposable()) leaf(w);
            return;
        }
        const int len = static_cast<int>(w.size());
        std::vector<int> local_sites;
        if (spec.base == ClassSpec::Base::Fishburn) {
            detail::word_active_sites(w, pos, local_sites);
        } else {
            local_sites.resize(static_cast<std::size_t>(len) + 1);
            std::iota(local_sites.begin(), local_sites.end(), 0);
        }
        for (int s : local_sites) {
            if (!extension_allowed(s)) continue;
            run(leaf);
            remove_at(s);
        }
    }

    // Collect the words at a fixed depth, for parallel subtree dispatch.
    void frontier(int depth, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(w.size()) == depth) {
            out.push_back(w);
            return;
        }
        const int len = static_cast<int>(w.size());
        std::vector<int> local_sites;
        if (spec.base == ClassSpec::Base::Fishburn) {
            detail::word_active_sites(w, pos, local_sites);
        } else {
            local_sites.resize(static_cast<std::size_t>(len) + 1);
            std::iota(local_sites.begin(), local_sites.end(), 0);
        }
        for (int s : local_sites) {
            if (!extension_allowed(s)) continue;
            frontier(depth, out);
            remove_at(s);
        }
    }

    void seed(const std::vector<int>& start) {
        w = start;
        for (std::size_t i = 0; i < w.size(); ++i)
            pos[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
    }
};

// Runs the DFS, splitting at opts.split_depth across opts.threads workers.
// Tally needs: leaf(const std::vector<int>&), merge(Tally&&).
template <typename Tally>
Tally enumerate_class_impl(const ClassSpec& spec, int n, const RunOptions& opts,
                           const Tally& prototype) {
    validate_class(spec);
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    const int depth = std::max(0, std::min(opts.split_depth, n));
    const int threads = std::max(1, opts.threads);
    if (depth == 0) {
        Tally tally = prototype;
        ClassDfs dfs(spec, n);
        dfs.run([&](const std::vector<int>& w) { tally.leaf(w); });
        return tally;
    }
    std::vector<std::vector<int>> tasks;
    {
        ClassDfs dfs(spec, n);
        dfs.frontier(depth, tasks);
    }
    std::vector<Tally> partial(tasks.size(), prototype);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            ClassDfs dfs(spec, n);
            dfs.seed(tasks[i]);
            dfs.run([&](const std::vector<int>& w) { partial[i].leaf(w); });
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    Tally tally = prototype;
    for (auto& p : partial) tally.merge(std::move(p));
    return tally;
}

struct CountTally {
    std::int64_t value = 0;
    void leaf(const std::vector<int>&) { value = checked_add(value, 1); }
    void merge(CountTally&& o) { value = checked_add(value, o.value); }
};

std::int64_t word_inv(const std::vector<int>& w) {
    std::int64_t count = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t k = j + 1; k < w.size(); ++k)
            if (w[j] > w[k]) ++count;
    return count;
}

int word_ltrmax(const std::vector<int>& w) {
    int count = 0, best = 0;
    for (int v : w)
        if (v > best) {
            best = v;
            ++count;
        }
    return count;
}

int word_afterone(const std::vector<int>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 1) return static_cast<int>(w.size() - 1 - i);
    return 0;
}

SparsePoly stat_monomial(const std::vector<int>& w, const StatSet& stats) {
    const int eq = stats.inv ? static_cast<int>(word_inv(w)) : 0;
    const int et = stats.ltrmax ? word_ltrmax(w) : 0;
    const int er = stats.afterone && !w.empty() ? word_afterone(w) : 0;
    return SparsePoly::term(1, eq, et, er);
}

struct PolyTally {
    StatSet stats;
    SparsePoly value;
    void leaf(const std::vector<int>& w) { value += stat_monomial(w, stats); }
    void merge(PolyTally&& o) { value += o.value; }
};

}  // namespace

std::int64_t count_class(const ClassSpec& c, int n, const RunOptions& opts) {
    return enumerate_class_impl(c, n, opts, CountTally{}).value;
}

SparsePoly poly_class(const ClassSpec& c, int n, const StatSet& stats, const RunOptions& opts) {
    if (stats.afterone && n < 1)
        throw std::invalid_argument("afterone requires length >= 1");
    PolyTally proto;
    proto.stats = stats;
    return enumerate_class_impl(c, n, opts, proto).value;
}

namespace {

struct VisitTally {
    const std::function<void(const Permutation&)>* fn = nullptr;
    void leaf(const std::vector<int>& w) { (*fn)(Permutation(w)); }
    void merge(VisitTally&&) {}
};

}  // namespace

void for_each_class(const ClassSpec& c, int n, const std::function<void(const Permutation&)>& fn) {
    VisitTally proto;
    proto.fn = &fn;
    enumerate_class_impl(c, n, RunOptions{}, proto);
}

std::vector<Permutation> list_class(const ClassSpec& c, int n) {
    std::vector<Permutation> out;
    for_each_class(c, n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

// -- sequence classes ----------------------------------------------------------

namespace {

struct SeqDfs {
    const SeqClassSpec& spec;
    int target;
    std::vector<int> s;
    int asc = 0;

    SeqDfs(const SeqClassSpec& c, int n) : spec(c), target(n) {
        s.reserve(static_cast<std::size_t>(n));
        if (c.kind == SeqClassSpec::Kind::BinarySeq)
            for (const auto& pat : c.avoid)
                if (!pat.is_binary())
                    throw std::invalid_argument("binary sequence patterns must be 0/1 words");
    }

    bool extension_allowed() const {
        for (const auto& pat : spec.avoid) {
            if (spec.kind == SeqClassSpec::Kind::AscentSeq) {
                if (detail::seq_occurrence_through_last(s, pat.entries())) return false;
            } else {
                const auto& b = pat.entries();
                if (!b.empty() && s.back() == b.back() &&
                    [&] {
                        std::vector<int> head(s.begin(), s.end() - 1);
                        std::vector<int> bhead(b.begin(), b.end() - 1);
                        return detail::bin_word_contains(head, bhead);
                    }())
                    return false;
                if (b.empty()) return false;
            }
        }
        return true;
    }

    template <typename Leaf>
    void run(Leaf&& leaf) {
        if (static_cast<int>(s.size()) == target) {
            leaf(s);
            return;
        }
        const int len = static_cast<int>(s.size());
        int hi;
        if (spec.kind == SeqClassSpec::Kind::AscentSeq) {
            hi = len == 0 ? 0 : 1 + asc;
        } else {
            hi = 1;
        }
        for (int v = 0; v <= hi; ++v) {
            s.push_back(v);
            const bool rose = len > 0 && s[static_cast<std::size_t>(len) - 1] < v;
            if (rose) ++asc;
            if (extension_allowed()) run(leaf);
            if (rose) --asc;
            s.pop_back();
        }
    }
};

}  // namespace

std::int64_t count_seq_class(const SeqClassSpec& c, int n) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    std::int64_t count = 0;
    SeqDfs dfs(c, n);
    dfs.run([&](const std::vector<int>&) { count = checked_add(count, 1); });
    return count;
}

void for_each_seq_class(const SeqClassSpec& c, int n,
                        const std::function<void(const IntSequence&)>& fn) {
    SeqDfs dfs(c, n);
    dfs.run([&](const std::vector<int>& s) { fn(IntSequence(s)); });
}

// -- generating-tree labels ------------------------------------------------------

Tree tree_parse(const std::string& name) {
    if (name == "1423") return Tree::T1423;
    if (name == "3124") return Tree::T3124;
    if (name == "2143") return Tree::T2143;
    throw std::invalid_argument("unknown tree '" + name + "' (expected 1423, 3124 or 2143)");
}

ClassSpec tree_class(Tree tree) {
    switch (tree) {
        case Tree::T1423: return make_class(ClassSpec::Base::Fishburn, {"321", "1423"});
        case Tree::T3124: return make_class(ClassSpec::Base::Fishburn, {"321", "3124"});
        default: return make_class(ClassSpec::Base::Fishburn, {"321", "2143"});
    }
}

std::string GenTreeLabel::str() const {
    switch (tag) {
        case Tag::L1: return "(1)";
        case Tag::L2a: return "(2a)";
        case Tag::L2b: return "(2b)";
        case Tag::L2c: return "(2c)";
        case Tag::L2d: return "(2d)";
        case Tag::L3: return "(3)";
        case Tag::L1a: return "(1a)";
        case Tag::L1b: return "(1b)";
        case Tag::LK: return "(" + std::to_string(k) + ")";
        default: return "(" + std::to_string(k) + "*)";
    }
}

namespace {

bool word_has_descent(const std::vector<int>& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) return true;
    return false;
}

void require_in_class(Tree tree, const Permutation& p) {
    const ClassSpec spec = tree_class(tree);
    if (detail::word_contains_f(p.values())) throw std::invalid_argument("not in class");
    for (const auto& pat : spec.avoid)
        if (detail::word_contains_classical(p.values(), pat.values()))
            throw std::invalid_argument("not in class");
}

GenTreeLabel label_1423(const Permutation& p) {
    const auto& w = p.values();
    const int n = p.size();
    auto mk = [](GenTreeLabel::Tag tag, int k = 0) {
        return GenTreeLabel{Tree::T1423, tag, k};
    };
    if (n == 1) return mk(GenTreeLabel::Tag::L2a);
    if (!word_has_descent(w)) return mk(GenTreeLabel::Tag::L3);
    if (w[static_cast<std::size_t>(n) - 1] == n) return mk(GenTreeLabel::Tag::L2d);
    if (w[static_cast<std::size_t>(n) - 2] == n) {
        const int last = w[static_cast<std::size_t>(n) - 1];
        if (last == n - 1) return mk(GenTreeLabel::Tag::L1);
        if (last > 1 && last < n - 1 && n >= 4) return mk(GenTreeLabel::Tag::L2b);
        throw std::logic_error("label proposition violated");
    }
    // remaining case: suffix n,1,2,...,k,n-1 for some 1 <= k <= n-2
    if (w[static_cast<std::size_t>(n) - 1] == n - 1) {
        const int k = w[static_cast<std::size_t>(n) - 2];
        if (k >= 1 && k <= n - 2 && n - 2 - k >= 0 &&
            w[static_cast<std::size_t>(n - 2 - k)] == n) {
            bool ok = true;
            for (int i = 1; i <= k && ok; ++i)
                ok = w[static_cast<std::size_t>(n - 2 - k + i)] == i;
            if (ok) return mk(GenTreeLabel::Tag::L2c);
        }
    }
    throw std::logic_error("label proposition violated");
}

GenTreeLabel label_3124(const Permutation& p) {
    static const std::vector<int> p312{3, 1, 2};
    const auto& w = p.values();
    const int n = p.size();
    auto mk = [](GenTreeLabel::Tag tag, int k = 0) {
        return GenTreeLabel{Tree::T3124, tag, k};
    };
    if (detail::word_contains_classical(w, p312)) return mk(GenTreeLabel::Tag::L1b);
    if (w[static_cast<std::size_t>(n) - 1] == n) {
        // (k) with k-1 = length of the maximal run of consecutive values
        // n-m+1,...,n occupying the last m positions.
        int m = 1;
        while (m < n && w[static_cast<std::size_t>(n - 1 - m)] == n - m) ++m;
        return mk(GenTreeLabel::Tag::LK, m + 1);
    }
    if (n >= 2 && w[static_cast<std::size_t>(n) - 2] == n &&
        w[static_cast<std::size_t>(n) - 1] == n - 1)
        return mk(GenTreeLabel::Tag::L1a);
    throw std::logic_error("label proposition violated");
}

GenTreeLabel label_2143(const Permutation& p) {
    const auto& w = p.values();
    const int n = p.size();
    auto mk = [](GenTreeLabel::Tag tag, int k) { return GenTreeLabel{Tree::T2143, tag, k}; };
    if (!word_has_descent(w)) return mk(GenTreeLabel::Tag::LK, n + 1);
    if (w[static_cast<std::size_t>(n) - 1] == n) return mk(GenTreeLabel::Tag::L1a, 0);
    int pos_n = 0;
    for (int i = 0; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] == n) pos_n = i;
    const int m = n - 1 - pos_n;  // entries to the right of n
    const int last = w[static_cast<std::size_t>(n) - 1];
    if (last == n - 1) return mk(GenTreeLabel::Tag::LKStar, m);
    if (last < n - 1) return mk(GenTreeLabel::Tag::LKStar, m + 1);
    throw std::logic_error("label proposition violated");
}

}  // namespace

GenTreeLabel label_of(Tree tree, const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("label undefined on empty permutation");
    require_in_class(tree, p);
    switch (tree) {
        case Tree::T1423: return label_1423(p);
        case Tree::T3124: return label_3124(p);
        default: return label_2143(p);
    }
}

std::vector<GenTreeLabel> children_labels(Tree tree, const Permutation& p) {
    require_in_class(tree, p);
    const ClassSpec spec = tree_class(tree);
    std::vector<GenTreeLabel> out;
    for (int s : active_sites(p)) {
        const Permutation child = insert_max(p, s);
        bool in_class = true;
        for (const auto& pat : spec.avoid)
            if (detail::word_contains_classical(child.values(), pat.values())) {
                in_class = false;
                break;
            }
        if (in_class) out.push_back(label_of(tree, child));
    }
    return out;
}

std::map<GenTreeLabel, SparsePoly> label_distribution(Tree tree, int n, const StatSet& stats,
                                                      const RunOptions& opts) {
    if (n < 1) throw std::invalid_argument("label distribution requires n >= 1");
    struct LabelTally {
        Tree tree = Tree::T1423;
        StatSet stats;
        std::map<GenTreeLabel, SparsePoly> value;
        void leaf(const std::vector<int>& w) {
            Permutation p(w);
            value[label_of(tree, p)] += stat_monomial(w, stats);
        }
        void merge(LabelTally&& o) {
            for (auto& [k, v] : o.value) value[k] += v;
        }
    };
    LabelTally proto;
    proto.tree = tree;
    proto.stats = stats;
    return enumerate_class_impl(tree_class(tree), n, opts, proto).value;
}

// -- open-problem enumerations ---------------------------------------------------

namespace {

std::int64_t motzkin_dfs(int remaining, int height, int runs, bool in_run) {
    if (remaining == 0) return height == 0 && runs == 1 ? 1 : 0;
    if (runs > 1) return 0;
    std::int64_t total = 0;
    // U
    total += motzkin_dfs(remaining - 1, height + 1, in_run ? runs : runs + 1, true);
    // F
    total = checked_add(total, motzkin_dfs(remaining - 1, height, runs, false));
    // D
    if (height > 0) total = checked_add(total, motzkin_dfs(remaining - 1, height - 1, runs, false));
    return total;
}

}  // namespace

std::int64_t count_motzkin_one_ascent(int n) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    return motzkin_dfs(n, 0, 0, false);
}

std::int64_t count_gap_binary(int n) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    // States: no 1 yet; 0, 1 or >=2 zeros since the last 1.  A 1 may follow
    // at most one 0 since the previous 1.
    std::int64_t none = 1, z0 = 0, z1 = 0, z2 = 0;
    for (int i = 0; i < n; ++i) {
        const std::int64_t nnone = none;
        const std::int64_t nz0 = checked_add(checked_add(none, z0), z1);
        const std::int64_t nz1 = z0;
        const std::int64_t nz2 = checked_add(z1, z2);
        none = nnone;
        z0 = nz0;
        z1 = nz1;
        z2 = nz2;
    }
    return checked_add(checked_add(none, z0), checked_add(z1, z2));
}

namespace {

struct InvolutionDfs {
    int n;
    const std::vector<std::vector<int>>& avoid;
    std::vector<int> sigma;  // sigma[i] = value at position i+1; 0 = unset
    std::int64_t count = 0;

    InvolutionDfs(int n_in, const std::vector<std::vector<int>>& a)
        : n(n_in), avoid(a), sigma(static_cast<std::size_t>(n_in), 0) {}

    void finish() {
        for (const auto& pat : avoid)
            if (detail::word_contains_classical(sigma, pat)) return;
        count = checked_add(count, 1);
    }

    void place(int i) {
        while (i < n && sigma[static_cast<std::size_t>(i)] != 0) ++i;
        if (i == n) {
            finish();
            return;
        }
        sigma[static_cast<std::size_t>(i)] = i + 1;  // fixed point
        place(i + 1);
        sigma[static_cast<std::size_t>(i)] = 0;
        for (int j = i + 1; j < n; ++j) {
            if (sigma[static_cast<std::size_t>(j)] != 0) continue;
            sigma[static_cast<std::size_t>(i)] = j + 1;
            sigma[static_cast<std::size_t>(j)] = i + 1;
            place(i + 1);
            sigma[static_cast<std::size_t>(i)] = 0;
            sigma[static_cast<std::size_t>(j)] = 0;
        }
    }
};

}  // namespace

std::int64_t count_involutions_avoiding(int n, const std::vector<Permutation>& avoid) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    std::vector<std::vector<int>> words;
    for (const auto& p : avoid) words.push_back(p.values());
    InvolutionDfs dfs(n, words);
    dfs.place(0);
    return dfs.count;
}

}  // namespace fishburn
