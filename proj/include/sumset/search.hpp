#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "sumset/families.hpp"
#include "sumset/solution.hpp"

namespace sumset {

// For each positive difference d, the ascending list of squares x^2 with
// x^2 + d also a square. This turns "a + b_j is a square for every j" into
// an intersection of sorted lists.
struct SearchIndex {
    Integer bound_n; // largest stored square
    Integer bound_s; // largest allowed sum x^2 + d
    std::map<Integer, std::vector<Integer>> by_diff;
};

// Complete for all x >= 0, d >= 1 with x^2 <= N and x^2 + d <= S.
// Requires 1 <= N <= S.
SearchIndex build_index(const Integer& n, const Integer& s);

struct SearchConfig {
    Integer bound_n;                 // max element value
    std::size_t m = 1, n = 1;        // shape
    std::size_t max_results = 0;     // 0 = unlimited
    int thread_count = 0;            // 0 = all available
};

// All pairs in search standard form: b1 = 0 < b2 < ... < bn <= N and m
// distinct ascending squares a <= N with every a + b_j a square. Output is
// deterministic (lexicographic by b-tuple, then a-set) regardless of the
// thread count. Work is partitioned across OpenMP workers by b2 value.
std::vector<SolutionPair> find_solutions(const SearchConfig& cfg);

// Single-threaded reference implementation with the same contract, kept
// deliberately simple; the parallel kernel is tested against it.
std::vector<SolutionPair> find_solutions_serial(const SearchConfig& cfg);

// True iff the canonicalized output of generate(id, params) is found by the
// search at the given bound. Pairs with repeated elements are matched as
// multisets (the enumeration then allows repeated values; duplicates are
// never collapsed). Throws rejected_input naming the minimal sufficient
// bound when N is too small.
bool cross_validate(FamilyId id, const std::vector<Integer>& params,
                    const Integer& bound_n);

// Streaming variant used by the CLI: solutions are reported in the same
// deterministic order, grouped into per-b2 "slots" so interrupted runs can
// resume. Slots are processed in parallel chunks but reported in order.
// Returns the number of solutions emitted (capped by max_results).
struct StreamHooks {
    std::function<void(const SolutionPair&)> on_solution;
    // called after all solutions of slot `index` (0-based) were reported
    std::function<void(std::size_t index)> on_slot_done;
};
std::size_t find_solutions_streamed(const SearchConfig& cfg,
                                    std::size_t resume_after_slots,
                                    const StreamHooks& hooks);

// Number of slots a streamed run of this config consists of.
std::size_t stream_slot_count(const SearchConfig& cfg);

} // namespace sumset
