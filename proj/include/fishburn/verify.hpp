#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fishburn/enumerate.hpp"
#include "fishburn/poly.hpp"

namespace fishburn {

enum class CheckKind { Theorem, Conjecture, OpenProblemEquinumerosity };

std::string to_string(CheckKind k);

struct CheckResult {
    std::string id;
    CheckKind kind = CheckKind::Theorem;
    int n_lo = 0;
    int n_hi = -1;  // executed upper bound; n_hi < n_lo means nothing ran
    bool all_equal = true;
    int mismatch_n = 0;
    std::string what;  // which comparison failed first
    std::string lhs;
    std::string rhs;
    std::vector<std::string> notes;
    double seconds = 0;
};

// Accumulates comparisons for one check run.  Records the first mismatch;
// later comparisons still execute unless the body consults failed().
class CheckContext {
public:
    CheckContext(int n_lo, int n_hi, RunOptions opts)
        : n_lo_(n_lo), n_hi_(n_hi), opts_(opts) {}

    int n_lo() const { return n_lo_; }
    int n_hi() const { return n_hi_; }
    const RunOptions& opts() const { return opts_; }

    void eq(int n, std::int64_t lhs, std::int64_t rhs, const std::string& what = "");
    void eq(int n, const SparsePoly& lhs, const SparsePoly& rhs, const std::string& what = "");
    void eq_str(int n, const std::string& lhs, const std::string& rhs,
                const std::string& what = "");
    void note(const std::string& text) { notes_.push_back(text); }
    bool failed() const { return failed_; }

    // first-mismatch record, consumed by run_check
    bool failed_ = false;
    int mismatch_n_ = 0;
    std::string what_, lhs_, rhs_;
    std::vector<std::string> notes_;

private:
    int n_lo_, n_hi_;
    RunOptions opts_;
};

struct CheckSpec {
    std::string id;
    CheckKind kind = CheckKind::Theorem;
    std::string summary;
    int min_n = 0;
    int default_n_max = 10;
    std::function<void(CheckContext&)> body;
};

const std::vector<CheckSpec>& list_checks();
const CheckSpec& find_check(const std::string& id);

// Runs one check for min_n <= n <= n_max.  Exact equality throughout.
CheckResult run_check(const std::string& id, int n_max, const RunOptions& opts = {});

// Runs every registered check at min(its default_n_max, n_max_default).
// Failures are recorded in the results, never thrown.
std::vector<CheckResult> run_all(int n_max_default, const RunOptions& opts = {});

}  // namespace fishburn
