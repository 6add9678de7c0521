// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line per criterion.  All comparisons are exact; the exit code is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "fishburn/bijection.hpp"
#include "fishburn/enumerate.hpp"
#include "fishburn/registry.hpp"
#include "fishburn/series.hpp"
#include "fishburn/verify.hpp"

using namespace fishburn;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, double seconds) {
    std::printf("%s %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& what, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, ok, what + (ok || detail.empty() ? "" : " -- " + detail), secs);
}

bool check_ok(const char* id, int n_max, std::string& detail) {
    const auto r = run_check(id, n_max, RunOptions{});
    if (!r.all_equal)
        detail += std::string(id) + " mismatch at n=" + std::to_string(r.mismatch_n) + " [" +
                  r.what + "] " + r.lhs + " != " + r.rhs + "; ";
    return r.all_equal;
}

using Base = ClassSpec::Base;

std::int64_t brute_count(const ClassSpec& spec, int n) {
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

// every permutation class the criteria above exercise
std::vector<ClassSpec> exercised_classes() {
    std::vector<ClassSpec> out;
    auto f = [&](std::initializer_list<const char*> avoid, bool ind = false) {
        out.push_back(make_class(Base::Fishburn, avoid, ind));
    };
    auto s = [&](std::initializer_list<const char*> avoid) {
        out.push_back(make_class(Base::All, avoid));
    };
    f({});
    f({"123"});
    f({"3412"});
    f({"231"});
    f({"4123"});
    f({"321", "1423"});
    f({"321", "3124"});
    f({"321", "2143"});
    f({"321", "4123"});
    f({"2413"});
    f({"2431"});
    f({"3241"});
    f({"3214"});
    f({"4132"});
    f({"4213"});
    f({"1324", "2143"});
    f({"1423", "2143"});
    f({"1423", "3124"});
    f({"1324", "1423"});
    f({"1324", "3124"});
    f({"2143", "1423", "3124"});
    f({"1324", "2143", "1423"});
    f({"1324", "2143", "3124"});
    f({"1324", "1423", "3124"});
    f({"1324", "2143", "1423", "3124"});
    f({"2143", "3124"});
    f({"1243", "2134"});
    f({"1243", "3124"});
    f({"2413", "2431"});
    f({"2431", "3241"});
    f({"2413", "2431"}, true);
    f({"2431", "3241"}, true);
    f({"321", "31452"});
    f({"321", "31524"});
    f({"321", "41523"});
    f({"321", "1243"});
    f({"321", "2134"});
    f({"321", "1324"});
    f({"321", "3142", "2143"});
    f({"321", "1423", "2143"});
    f({"321", "2143", "3124"});
    f({"321", "2143", "4123"});
    f({"321", "1423", "3124"});
    f({"321", "1423", "4123"});
    f({"321", "3124", "4123"});
    f({"321", "14253"});
    f({"321", "21354"});
    f({"132"});
    f({"213"});
    f({"312"});
    s({"231", "4123"});
    s({"321", "2143", "3124"});
    s({"231", "4132", "2134"});
    s({"123", "3241"});
    s({"2413", "3142", "2143"});
    s({"2413", "3412"});
    s({"321", "231", "2143"});
    s({"231", "123", "132"});
    s({"231"});
    return out;
}

}  // namespace

int main() {
    criterion(1, "Fishburn numbers: enumeration to n=11, product series to n=12",
              [](std::string& detail) {
                  static const std::int64_t table[] = {1, 1, 2, 5, 15, 53, 217, 1014, 5335};
                  const auto series = fishburn_series(12);
                  for (int n = 0; n <= 8; ++n)
                      if (series[static_cast<std::size_t>(n)] != table[n]) {
                          detail = "series vs table at n=" + std::to_string(n);
                          return false;
                      }
                  const auto cls = make_class(Base::Fishburn, {});
                  for (int n = 0; n <= 11; ++n)
                      if (count_class(cls, n, RunOptions{4, 2}) !=
                          series[static_cast<std::size_t>(n)]) {
                          detail = "enumeration vs series at n=" + std::to_string(n);
                          return false;
                      }
                  return true;
              });

    criterion(2, "bijection g: round trip on all Fishburn permutations to n=9",
              [](std::string& detail) {
                  // 4157326, not 4175326: inserting 7 into the site labeled 2
                  // of 415326 (active sites 0,2,3,5,6) lands right of the 5.
                  if (g_map(Permutation::parse("4157326")) != IntSequence::parse("0110132")) {
                      detail = "g(4157326)";
                      return false;
                  }
                  if (g_map(Permutation::parse("4175326")) != IntSequence::parse("0110131")) {
                      detail = "g(4175326)";
                      return false;
                  }
                  if (g_map(Permutation::parse("3142")) != IntSequence::parse("0101")) {
                      detail = "g(3142)";
                      return false;
                  }
                  const auto cls = make_class(Base::Fishburn, {});
                  for (int n = 0; n <= 9; ++n) {
                      bool ok = true;
                      for_each_class(cls, n, [&](const Permutation& p) {
                          if (g_inverse(g_map(p)) != p) ok = false;
                      });
                      if (!ok) {
                          detail = "round trip failed at n=" + std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "g(F_n(3412)) = A_n(201) to n=9; |A_10(120)| and |F_10(4123)|",
              [](std::string& detail) {
                  bool ok = check_ok("T_3412_201", 9, detail);
                  SeqClassSpec a120;
                  a120.avoid = {IntSequence::parse("120")};
                  if (count_seq_class(a120, 10) != 20754) {
                      detail += "|A_10(120)| != 20754; ";
                      ok = false;
                  }
                  if (count_class(make_class(Base::Fishburn, {"4123"}), 10) != 20753) {
                      detail += "|F_10(4123)| != 20753; ";
                      ok = false;
                  }
                  return ok;
              });

    criterion(4, "F_n(123) closed forms to n=10; q-binomial identities", [](std::string& detail) {
        return check_ok("T_F123_POLY", 10, detail) & check_ok("T_QBINOM", 12, detail);
    });

    criterion(5, "binary/ascent-sequence closed forms and F_n(123,sigma) to n=10",
              [](std::string& detail) {
                  bool ok = check_ok("T_BN_BETA", 10, detail);
                  ok &= check_ok("T_AN_012_BETA", 10, detail);
                  ok &= check_ok("T_AN_012_BIN", 10, detail);
                  ok &= check_ok("T_FN123_SIGMA", 10, detail);
                  ok &= check_ok("T_RESTRICTIVE", 10, detail);
                  ok &= check_ok("T_UNRESTRICTIVE", 10, detail);
                  ok &= check_ok("T_S231_123_GF", 10, detail);
                  return ok;
              });

    criterion(6, "generating tree for F_n(321,1423) to n=10", [](std::string& detail) {
        return check_ok("T_1423", 10, detail);
    });

    criterion(7, "generating tree for F_n(321,3124) to n=11", [](std::string& detail) {
        return check_ok("T_3124", 11, detail);
    });

    criterion(8, "generating tree for F_n(321,2143) to n=12", [](std::string& detail) {
        return check_ok("T_2143", 12, detail);
    });

    criterion(9, "every conjecture check to n=10", [](std::string& detail) {
        bool ok = true;
        for (const auto& spec : list_checks()) {
            if (spec.kind != CheckKind::Conjecture) continue;
            const int n_max = std::min(spec.default_n_max, 10);
            const auto r = run_check(spec.id, n_max, RunOptions{});
            if (!r.all_equal) {
                detail += spec.id + " mismatch at n=" + std::to_string(r.mismatch_n) + "; ";
                ok = false;
            }
        }
        return ok;
    });

    criterion(10, "open-problem equinumerosities to n=10", [](std::string& detail) {
        bool ok = check_ok("E_1423_BINSEQ", 10, detail);
        ok &= check_ok("E_1423_MOTZKIN", 10, detail);
        ok &= check_ok("E_3124_MOTZKIN", 10, detail);
        ok &= check_ok("E_1B_MOTZKIN", 10, detail);
        return ok;
    });

    criterion(11, "tree-pruned counts equal brute-force filtering to n=7",
              [](std::string& detail) {
                  for (const auto& spec : exercised_classes()) {
                      for (int n = 0; n <= 7; ++n) {
                          if (count_class(spec, n) != brute_count(spec, n)) {
                              detail = "mismatch for " + spec.key() + " at n=" +
                                       std::to_string(n);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(12, "determinism across split depths and worker counts", [](std::string& detail) {
        const std::vector<ClassSpec> specs{
            make_class(Base::Fishburn, {}),
            make_class(Base::Fishburn, {"321", "2143"}),
            make_class(Base::All, {"231", "123", "132"}),
        };
        for (const auto& spec : specs) {
            const std::int64_t ref = count_class(spec, 8);
            const SparsePoly ref_poly = poly_class(spec, 8, {true, true, false});
            for (int depth : {0, 1, 2})
                for (int threads : {1, 2, 4}) {
                    const RunOptions opts{threads, depth};
                    if (count_class(spec, 8, opts) != ref ||
                        poly_class(spec, 8, {true, true, false}, opts) != ref_poly) {
                        detail = "spec " + spec.key() + " depth " + std::to_string(depth) +
                                 " threads " + std::to_string(threads);
                        return false;
                    }
                }
        }
        return true;
    });

    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return failures;
}
