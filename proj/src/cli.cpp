#include "fishburn/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fishburn/bijection.hpp"
#include "fishburn/cache.hpp"
#include "fishburn/enumerate.hpp"
#include "fishburn/oeis.hpp"
#include "fishburn/registry.hpp"
#include "fishburn/verify.hpp"

namespace fishburn::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An --avoid value is a comma-separated list of digit-string patterns; when
// every token is a single digit the whole value is read as one
// comma-separated pattern instead ("3,1,4,2" means 3142).
std::vector<Permutation> parse_pattern_list(const std::string& text) {
    if (text.empty()) return {};
    std::vector<std::string> tokens;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) tokens.push_back(tok);
    for (const auto& s : tokens) {
        if (s.empty()) throw UsageError("empty pattern in --avoid");
        if (s == "f")
            throw UsageError("pattern literal 'f' is not accepted in --avoid; "
                             "select Fishburn avoidance with --base fishburn");
        for (char c : s)
            if (c < '0' || c > '9')
                throw UsageError("bad pattern token '" + s + "'");
    }
    bool all_single = true;
    for (const auto& s : tokens) all_single = all_single && s.size() == 1;
    std::vector<Permutation> out;
    try {
        if (all_single && tokens.size() > 1) {
            out.push_back(Permutation::parse(text));
        } else {
            for (const auto& s : tokens) out.push_back(Permutation::parse(s));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return out;
}

std::vector<IntSequence> parse_seq_list(const std::string& text) {
    std::vector<IntSequence> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw UsageError("empty sequence pattern");
        try {
            out.push_back(IntSequence::parse(tok));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

ordered_json poly_json(const SparsePoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back(ordered_json{{"q", e[0]}, {"t", e[1]}, {"r", e[2]},
                                     {"coeff", std::to_string(c)}});
    }
    return terms;
}

struct CommonOpts {
    int threads = 1;
    int split_depth = 0;
    bool no_timing = false;
    bool no_cache = false;
    std::string cache_path;

    RunOptions run() const { return RunOptions{threads, split_depth}; }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--threads", c.threads, "worker threads for enumeration");
    cmd->add_option("--split-depth", c.split_depth, "depth at which the search tree is split");
    cmd->add_flag("--no-timing", c.no_timing, "omit timing fields from output");
    cmd->add_flag("--no-cache", c.no_cache, "bypass the result cache");
    cmd->add_option("--cache", c.cache_path, "cache file path");
}

class CacheSession {
public:
    CacheSession(const CommonOpts& opts, std::ostream& err) : err_(err) {
        if (opts.no_cache) return;
        cache_.emplace(opts.cache_path.empty() ? ResultCache::default_path() : opts.cache_path);
        cache_->load();
    }
    std::optional<std::string> get(const std::string& key, int n) {
        if (!cache_) return std::nullopt;
        auto hit = cache_->get(key, n);
        err_ << "cache:" << (hit ? "hit" : "miss") << " key=" << key << " n=" << n << "\n";
        return hit;
    }
    void put(const std::string& key, int n, const std::string& value) {
        if (!cache_) return;
        cache_->put(key, n, value);
        dirty_ = true;
    }
    ~CacheSession() {
        if (cache_ && dirty_) cache_->save();
    }

private:
    std::ostream& err_;
    std::optional<ResultCache> cache_;
    bool dirty_ = false;
};

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// -- count -----------------------------------------------------------------

struct CountArgs {
    std::string base = "fishburn";
    std::string avoid;
    bool indecomposable = false;
    int n = -1;
    std::string n_range;
    std::string format = "json";
    CommonOpts common;
};

ClassSpec class_from(const std::string& base, const std::string& avoid, bool ind) {
    ClassSpec spec;
    if (base == "all") {
        spec.base = ClassSpec::Base::All;
    } else if (base == "fishburn") {
        spec.base = ClassSpec::Base::Fishburn;
    } else {
        throw UsageError("--base must be 'all' or 'fishburn'");
    }
    spec.avoid = parse_pattern_list(avoid);
    spec.indecomposable_only = ind;
    return spec;
}

std::pair<int, int> resolve_range(int n, const std::string& range) {
    if (!range.empty()) {
        const auto dots = range.find("..");
        if (dots == std::string::npos)
            throw UsageError("--n-range must look like A..B");
        try {
            const int a = std::stoi(range.substr(0, dots));
            const int b = std::stoi(range.substr(dots + 2));
            if (a < 0 || b < a) throw UsageError("--n-range must satisfy 0 <= A <= B");
            return {a, b};
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad --n-range '" + range + "'");
        }
    }
    if (n < 0) throw UsageError("one of --n or --n-range is required");
    return {n, n};
}

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
    const ClassSpec spec = class_from(a.base, a.avoid, a.indecomposable);
    const auto [lo, hi] = resolve_range(a.n, a.n_range);
    if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
    CacheSession cache(a.common, err);
    const std::string key = "count|" + spec.key();
    for (int n = lo; n <= hi; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string value;
        if (auto hit = cache.get(key, n)) {
            value = *hit;
        } else {
            value = std::to_string(count_class(spec, n, a.common.run()));
            cache.put(key, n, value);
        }
        if (a.format == "csv") {
            out << n << "," << value << "\n";
        } else {
            ordered_json rec{{"request",
                              ordered_json{{"command", "count"},
                                           {"base", a.base},
                                           {"avoid", a.avoid},
                                           {"indecomposable", a.indecomposable},
                                           {"n", n}}},
                             {"n", n},
                             {"count", value}};
            if (!a.common.no_timing) rec["elapsed_ms"] = ms_since(t0);
            out << rec.dump() << "\n";
        }
    }
    return 0;
}

// -- poly ------------------------------------------------------------------

struct PolyArgs {
    std::string base = "fishburn";
    std::string avoid;
    bool indecomposable = false;
    int n = -1;
    std::string stats = "inv,ltrmax";
    bool label_split = false;
    std::string tree;
    CommonOpts common;
};

StatSet parse_stats(const std::string& text) {
    StatSet s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "inv") s.inv = true;
        else if (tok == "ltrmax") s.ltrmax = true;
        else if (tok == "afterone") s.afterone = true;
        else if (!tok.empty()) throw UsageError("unknown statistic '" + tok + "'");
    }
    return s;
}

int cmd_poly(const PolyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n < 0) throw UsageError("--n is required");
    const StatSet stats = parse_stats(a.stats);
    const auto t0 = std::chrono::steady_clock::now();
    ordered_json rec{{"request", ordered_json{{"command", "poly"},
                                              {"base", a.base},
                                              {"avoid", a.avoid},
                                              {"stats", a.stats},
                                              {"n", a.n}}},
                     {"n", a.n}};
    if (a.label_split) {
        if (a.tree.empty()) throw UsageError("--label-split requires --tree");
        Tree tree;
        try {
            tree = tree_parse(a.tree);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto dist = label_distribution(tree, a.n, stats, a.common.run());
        ordered_json labels = ordered_json::object();
        for (const auto& [label, poly] : dist) labels[label.str()] = poly_json(poly);
        rec["labels"] = std::move(labels);
        if (!a.common.no_timing) rec["elapsed_ms"] = ms_since(t0);
        out << rec.dump() << "\n";
        return 0;
    }
    const ClassSpec spec = class_from(a.base, a.avoid, a.indecomposable);
    CacheSession cache(a.common, err);
    const std::string key = "poly|" + spec.key() + "|" + stats.key();
    std::string value;
    if (auto hit = cache.get(key, a.n)) {
        value = *hit;
    } else {
        value = poly_json(poly_class(spec, a.n, stats, a.common.run())).dump();
        cache.put(key, a.n, value);
    }
    rec["poly"] = ordered_json::parse(value);
    if (!a.common.no_timing) rec["elapsed_ms"] = ms_since(t0);
    out << rec.dump() << "\n";
    return 0;
}

// -- seqcount ----------------------------------------------------------------

struct SeqArgs {
    std::string kind = "ascent";
    std::string avoid;
    int n = -1;
    CommonOpts common;
};

int cmd_seqcount(const SeqArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n < 0) throw UsageError("--n is required");
    SeqClassSpec spec;
    if (a.kind == "ascent") {
        spec.kind = SeqClassSpec::Kind::AscentSeq;
    } else if (a.kind == "binary") {
        spec.kind = SeqClassSpec::Kind::BinarySeq;
    } else {
        throw UsageError("--kind must be 'ascent' or 'binary'");
    }
    spec.avoid = parse_seq_list(a.avoid);
    CacheSession cache(a.common, err);
    const std::string key = "seqcount|" + spec.key();
    const auto t0 = std::chrono::steady_clock::now();
    std::string value;
    if (auto hit = cache.get(key, a.n)) {
        value = *hit;
    } else {
        value = std::to_string(count_seq_class(spec, a.n));
        cache.put(key, a.n, value);
    }
    ordered_json rec{{"request", ordered_json{{"command", "seqcount"},
                                              {"kind", a.kind},
                                              {"avoid", a.avoid},
                                              {"n", a.n}}},
                     {"n", a.n},
                     {"count", value}};
    if (!a.common.no_timing) rec["elapsed_ms"] = ms_since(t0);
    out << rec.dump() << "\n";
    return 0;
}

// -- gmap / activesites / label ------------------------------------------------

Permutation parse_perm_arg(const std::string& text) {
    try {
        return Permutation::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

IntSequence parse_seq_arg(const std::string& text) {
    try {
        return IntSequence::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_gmap(const std::string& perm, const std::string& seq, bool inverse, std::ostream& out) {
    if (inverse) {
        if (seq.empty()) throw UsageError("--inverse requires --seq");
        const Permutation p = g_inverse(parse_seq_arg(seq));
        out << ordered_json{{"seq", seq}, {"perm", p.str()}}.dump() << "\n";
    } else {
        if (perm.empty()) throw UsageError("--perm is required");
        const IntSequence s = g_map(parse_perm_arg(perm));
        out << ordered_json{{"perm", perm}, {"gmap", s.str()}}.dump() << "\n";
    }
    return 0;
}

int cmd_activesites(const std::string& perm, std::ostream& out) {
    if (perm.empty()) throw UsageError("--perm is required");
    const auto sites = active_sites(parse_perm_arg(perm));
    out << ordered_json{{"perm", perm}, {"active_sites", sites}}.dump() << "\n";
    return 0;
}

int cmd_label(const std::string& tree_name, const std::string& perm, std::ostream& out) {
    if (perm.empty()) throw UsageError("--perm is required");
    Tree tree;
    try {
        tree = tree_parse(tree_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto label = label_of(tree, parse_perm_arg(perm));
    out << ordered_json{{"tree", tree_name}, {"perm", perm}, {"label", label.str()}}.dump()
        << "\n";
    return 0;
}

// -- series ---------------------------------------------------------------------

struct SeriesArgs {
    std::string gf;
    int k = -1;
    int order = -1;
    std::string at;
    CommonOpts common;
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
    if (a.gf.empty()) throw UsageError("--gf is required");
    if (a.order < 0) throw UsageError("--order is required");
    RationalGF gf;
    try {
        gf = named_gf(a.gf, a.k);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<std::pair<int, std::int64_t>> subs;  // var index, value
    if (!a.at.empty()) {
        std::stringstream ss(a.at);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto eqs = tok.find('=');
            if (eqs == std::string::npos) throw UsageError("bad --at entry '" + tok + "'");
            const std::string var = tok.substr(0, eqs);
            int idx;
            if (var == "q") idx = 0;
            else if (var == "t") idx = 1;
            else if (var == "r") idx = 2;
            else throw UsageError("unknown variable '" + var + "' in --at");
            try {
                subs.emplace_back(idx, std::stoll(tok.substr(eqs + 1)));
            } catch (const std::exception&) {
                throw UsageError("bad --at entry '" + tok + "'");
            }
        }
    }
    const auto series = expand_rational(gf, a.order);
    for (int n = 0; n <= a.order; ++n) {
        SparsePoly c = series.at(n);
        for (const auto& [idx, value] : subs) c = c.substituted(idx, value);
        ordered_json rec{{"request", ordered_json{{"command", "series"},
                                                  {"gf", a.gf},
                                                  {"k", a.k},
                                                  {"order", a.order},
                                                  {"at", a.at}}},
                         {"n", n}};
        if (c.is_constant()) {
            rec["value"] = std::to_string(c.constant_value());
        } else {
            rec["poly"] = poly_json(c);
        }
        out << rec.dump() << "\n";
    }
    return 0;
}

// -- verify -----------------------------------------------------------------------

struct VerifyArgs {
    std::string check;
    bool all = false;
    int n_max = -1;
    CommonOpts common;
};

void print_result(const CheckResult& r, bool no_timing, std::ostream& out) {
    out << r.id << " " << to_string(r.kind) << " n=[" << r.n_lo << ".." << r.n_hi << "] ";
    if (r.all_equal) {
        out << "AllEqual";
    } else {
        out << "FirstMismatch n=" << r.mismatch_n << " [" << r.what << "] lhs=" << r.lhs
            << " rhs=" << r.rhs;
    }
    if (!no_timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
        out << buf;
    }
    out << "\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::vector<CheckResult> results;
    if (!a.check.empty()) {
        const CheckSpec* spec;
        try {
            spec = &find_check(a.check);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const int n_max = a.n_max >= 0 ? a.n_max : spec->default_n_max;
        results.push_back(run_check(a.check, n_max, a.common.run()));
    } else {
        const int n_max = a.n_max >= 0 ? a.n_max : 1000000;
        results = run_all(n_max, a.common.run());
    }
    bool ok = true;
    for (const auto& r : results) {
        print_result(r, a.common.no_timing, out);
        ok = ok && r.all_equal;
    }
    return ok ? 0 : 3;
}

// -- oeis --------------------------------------------------------------------------

int cmd_oeis(const std::string& terms_text, const std::string& offline, std::ostream& out) {
    if (terms_text.empty()) throw UsageError("--terms is required");
    std::vector<std::int64_t> terms;
    std::stringstream ss(terms_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            terms.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw UsageError("bad term '" + tok + "'");
        }
    }
    if (terms.empty()) throw UsageError("--terms is required");
    const auto hits = offline.empty() ? oeis_online_lookup(terms)
                                      : oeis_offline_lookup(terms, offline);
    out << ordered_json{{"terms", terms}, {"matches", hits}}.dump() << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pattern-avoiding Fishburn permutation laboratory"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count a permutation avoidance class");
    count->add_option("--base", count_args.base, "all | fishburn");
    count->add_option("--avoid", count_args.avoid, "comma-separated patterns");
    count->add_flag("--indecomposable", count_args.indecomposable,
                    "restrict to indecomposable permutations");
    count->add_option("--n", count_args.n, "length");
    count->add_option("--n-range", count_args.n_range, "length range A..B");
    count->add_option("--format", count_args.format, "json | csv");
    add_common(count, count_args.common);

    PolyArgs poly_args;
    auto* poly = app.add_subcommand("poly", "statistic polynomial of a class");
    poly->add_option("--base", poly_args.base, "all | fishburn");
    poly->add_option("--avoid", poly_args.avoid, "comma-separated patterns");
    poly->add_flag("--indecomposable", poly_args.indecomposable,
                   "restrict to indecomposable permutations");
    poly->add_option("--n", poly_args.n, "length");
    poly->add_option("--stats", poly_args.stats, "subset of inv,ltrmax,afterone");
    poly->add_flag("--label-split", poly_args.label_split, "refine by generating-tree label");
    poly->add_option("--tree", poly_args.tree, "1423 | 3124 | 2143");
    add_common(poly, poly_args.common);

    SeqArgs seq_args;
    auto* seqcount = app.add_subcommand("seqcount", "count a sequence avoidance class");
    seqcount->add_option("--kind", seq_args.kind, "ascent | binary");
    seqcount->add_option("--avoid", seq_args.avoid, "comma-separated sequence patterns");
    seqcount->add_option("--n", seq_args.n, "length");
    add_common(seqcount, seq_args.common);

    std::string gmap_perm, gmap_seq;
    bool gmap_inverse = false;
    auto* gmap_cmd = app.add_subcommand("gmap", "apply the Fishburn/ascent-sequence bijection");
    gmap_cmd->add_option("--perm", gmap_perm, "permutation (one-line)");
    gmap_cmd->add_option("--seq", gmap_seq, "ascent sequence");
    gmap_cmd->add_flag("--inverse", gmap_inverse, "map an ascent sequence to a permutation");

    std::string as_perm;
    auto* as_cmd = app.add_subcommand("activesites", "list active sites of a permutation");
    as_cmd->add_option("--perm", as_perm, "permutation (one-line)");

    std::string label_tree, label_perm;
    auto* label_cmd = app.add_subcommand("label", "generating-tree label of a permutation");
    label_cmd->add_option("--tree", label_tree, "1423 | 3124 | 2143");
    label_cmd->add_option("--perm", label_perm, "permutation (one-line)");

    SeriesArgs series_args;
    auto* series_cmd = app.add_subcommand("series", "expand a named generating function");
    series_cmd->add_option("--gf", series_args.gf, "registry name");
    series_cmd->add_option("--k", series_args.k, "pattern-length parameter");
    series_cmd->add_option("--order", series_args.order, "truncation order");
    series_cmd->add_option("--at", series_args.at, "substitutions, e.g. q=1,t=1");
    add_common(series_cmd, series_args.common);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run theorem/conjecture checks");
    verify_cmd->add_option("--check", verify_args.check, "check id");
    verify_cmd->add_flag("--all", verify_args.all, "run the whole registry");
    verify_cmd->add_option("--n-max", verify_args.n_max, "upper bound for n");
    add_common(verify_cmd, verify_args.common);

    std::string oeis_terms, oeis_offline;
    auto* oeis_cmd = app.add_subcommand("oeis", "look up a sequence");
    oeis_cmd->add_option("--terms", oeis_terms, "comma-separated terms");
    oeis_cmd->add_option("--offline", oeis_offline, "fixture path (no network)");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (count->parsed()) return cmd_count(count_args, out, err);
        if (poly->parsed()) return cmd_poly(poly_args, out, err);
        if (seqcount->parsed()) return cmd_seqcount(seq_args, out, err);
        if (gmap_cmd->parsed()) return cmd_gmap(gmap_perm, gmap_seq, gmap_inverse, out);
        if (as_cmd->parsed()) return cmd_activesites(as_perm, out);
        if (label_cmd->parsed()) return cmd_label(label_tree, label_perm, out);
        if (series_cmd->parsed()) return cmd_series(series_args, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
        if (oeis_cmd->parsed()) return cmd_oeis(oeis_terms, oeis_offline, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no command given\n";
    return 1;
}

}  // namespace fishburn::cli
