#include "sumset/search.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

namespace sumset {

SearchIndex build_index(const Integer& n, const Integer& s) {
    if (n < 1 || n > s) throw domain_error("build_index: require 1 <= N <= S");
    SearchIndex idx{n, s, {}};
    for (Integer x = 0; x * x <= n; ++x) {
        Integer x2 = x * x;
        for (Integer y = x + 1; y * y <= s; ++y) {
            // entries arrive in ascending x order, so each list stays sorted
            idx.by_diff[y * y - x2].push_back(x2);
        }
    }
    return idx;
}

namespace {

std::size_t gallop_lower_bound(const std::vector<Integer>& v, std::size_t from,
                               const Integer& x) {
    std::size_t lo = from, hi = from, step = 1;
    while (hi < v.size() && v[hi] < x) {
        lo = hi + 1;
        hi += step;
        step <<= 1;
    }
    hi = std::min(hi, v.size());
    return static_cast<std::size_t>(
        std::lower_bound(v.begin() + static_cast<long>(lo),
                         v.begin() + static_cast<long>(hi), x) -
        v.begin());
}

// Sorted intersection; gallops through the larger list when the size ratio
// is lopsided, otherwise linear merge.
std::vector<Integer> intersect_sorted(const std::vector<Integer>& a,
                                      const std::vector<Integer>& b) {
    const std::vector<Integer>* small = &a;
    const std::vector<Integer>* large = &b;
    if (small->size() > large->size()) std::swap(small, large);
    std::vector<Integer> out;
    if (small->empty()) return out;
    if (large->size() / small->size() >= 16) {
        std::size_t pos = 0;
        for (const Integer& x : *small) {
            pos = gallop_lower_bound(*large, pos, x);
            if (pos == large->size()) break;
            if ((*large)[pos] == x) {
                out.push_back(x);
                ++pos;
            }
        }
        return out;
    }
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = cmp(a[i], b[j]);
        if (c < 0)
            ++i;
        else if (c > 0)
            ++j;
        else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

struct Plan {
    Integer bound;
    std::size_t m, n;
    std::size_t cap; // per-slot and global result cap
    bool allow_repeats;
    SearchIndex index;
    std::vector<Integer> keys; // candidate b values; leading 0 in repeat mode
    std::vector<Integer> base; // all squares in [0, bound]
};

Plan make_plan(const SearchConfig& cfg, bool allow_repeats) {
    if (cfg.bound_n < 1 || cfg.m < 1 || cfg.n < 1)
        throw domain_error("find_solutions: require N >= 1, m >= 1, n >= 1");
    Plan plan;
    plan.bound = cfg.bound_n;
    plan.m = cfg.m;
    plan.n = cfg.n;
    plan.cap = cfg.max_results == 0 ? std::numeric_limits<std::size_t>::max()
                                    : cfg.max_results;
    plan.allow_repeats = allow_repeats;
    plan.index = build_index(cfg.bound_n, 2 * cfg.bound_n);
    if (allow_repeats) plan.keys.push_back(0);
    for (const auto& [d, list] : plan.index.by_diff) {
        if (d > cfg.bound_n) break;
        plan.keys.push_back(d);
    }
    for (Integer x = 0; x * x <= cfg.bound_n; ++x) plan.base.push_back(x * x);
    return plan;
}

void emit_combinations(const Plan& plan, const std::vector<Integer>& bvals,
                       const std::vector<Integer>& cands,
                       std::vector<SolutionPair>& out) {
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (out.size() >= plan.cap) return;
        if (pick.size() == plan.m) {
            SolutionPair sol;
            sol.a.reserve(plan.m);
            sol.b.reserve(plan.n);
            for (std::size_t idx : pick) sol.a.emplace_back(cands[idx]);
            for (const Integer& b : bvals) sol.b.emplace_back(b);
            out.push_back(std::move(sol));
            return;
        }
        std::size_t remaining = plan.m - pick.size();
        for (std::size_t i = start; i < cands.size(); ++i) {
            if (!plan.allow_repeats && cands.size() - i < remaining) break;
            pick.push_back(i);
            self(self, plan.allow_repeats ? i : i + 1);
            pick.pop_back();
            if (out.size() >= plan.cap) return;
        }
    };
    if (plan.allow_repeats ? cands.empty() : cands.size() < plan.m) return;
    rec(rec, 0);
}

void extend_tuple(const Plan& plan, std::size_t key_start, std::vector<Integer>& bvals,
                  const std::vector<Integer>& cands, std::vector<SolutionPair>& out) {
    if (bvals.size() == plan.n) {
        emit_combinations(plan, bvals, cands, out);
        return;
    }
    std::size_t needed = plan.n - bvals.size();
    for (std::size_t ki = key_start; ki < plan.keys.size(); ++ki) {
        if (out.size() >= plan.cap) return;
        if (!plan.allow_repeats && plan.keys.size() - ki < needed) return;
        const Integer& d = plan.keys[ki];
        std::vector<Integer> next =
            d == 0 ? cands : intersect_sorted(cands, plan.index.by_diff.at(d));
        if (plan.allow_repeats ? next.empty() : next.size() < plan.m) continue;
        bvals.push_back(d);
        extend_tuple(plan, plan.allow_repeats ? ki : ki + 1, bvals, next, out);
        bvals.pop_back();
    }
}

// One slot per b2 choice (a single slot when n == 1).
std::size_t slot_count(const Plan& plan) {
    return plan.n == 1 ? 1 : plan.keys.size();
}

std::vector<SolutionPair> compute_slot(const Plan& plan, std::size_t slot) {
    std::vector<SolutionPair> out;
    if (plan.n == 1) {
        std::vector<Integer> bvals{Integer(0)};
        emit_combinations(plan, bvals, plan.base, out);
        return out;
    }
    const Integer& d = plan.keys[slot];
    if (!plan.allow_repeats && plan.keys.size() - slot < plan.n - 1) return out;
    std::vector<Integer> cands =
        d == 0 ? plan.base : intersect_sorted(plan.base, plan.index.by_diff.at(d));
    if (plan.allow_repeats ? cands.empty() : cands.size() < plan.m) return out;
    std::vector<Integer> bvals{Integer(0), d};
    extend_tuple(plan, plan.allow_repeats ? slot : slot + 1, bvals, cands, out);
    return out;
}

std::size_t run_streamed(const Plan& plan, int thread_count,
                         std::size_t resume_after_slots, const StreamHooks& hooks) {
    std::size_t slots = slot_count(plan);
    int threads = thread_count > 0 ? thread_count : omp_get_max_threads();
    std::size_t chunk = std::max<std::size_t>(1, 8 * static_cast<std::size_t>(threads));
    std::size_t emitted = 0;
    for (std::size_t begin = resume_after_slots; begin < slots && emitted < plan.cap;
         begin += chunk) {
        std::size_t end = std::min(slots, begin + chunk);
        std::vector<std::vector<SolutionPair>> buffers(end - begin);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < static_cast<long>(end - begin); ++i)
            buffers[static_cast<std::size_t>(i)] =
                compute_slot(plan, begin + static_cast<std::size_t>(i));
        for (std::size_t i = 0; i < buffers.size() && emitted < plan.cap; ++i) {
            for (const SolutionPair& sol : buffers[i]) {
                if (emitted >= plan.cap) break;
                if (hooks.on_solution) hooks.on_solution(sol);
                ++emitted;
            }
            if (hooks.on_slot_done) hooks.on_slot_done(begin + i);
        }
    }
    return emitted;
}

} // namespace

std::vector<SolutionPair> find_solutions(const SearchConfig& cfg) {
    Plan plan = make_plan(cfg, false);
    std::vector<SolutionPair> out;
    StreamHooks hooks;
    hooks.on_solution = [&](const SolutionPair& sol) { out.push_back(sol); };
    run_streamed(plan, cfg.thread_count, 0, hooks);
    return out;
}

std::vector<SolutionPair> find_solutions_serial(const SearchConfig& cfg) {
    if (cfg.bound_n < 1 || cfg.m < 1 || cfg.n < 1)
        throw domain_error("find_solutions: require N >= 1, m >= 1, n >= 1");
    SearchIndex index = build_index(cfg.bound_n, 2 * cfg.bound_n);
    std::vector<Integer> keys;
    for (const auto& [d, list] : index.by_diff)
        if (d <= cfg.bound_n) keys.push_back(d);
    std::vector<Integer> base;
    for (Integer x = 0; x * x <= cfg.bound_n; ++x) base.push_back(x * x);

    std::size_t cap = cfg.max_results == 0 ? std::numeric_limits<std::size_t>::max()
                                           : cfg.max_results;
    std::vector<SolutionPair> out;

    std::vector<Integer> bvals{Integer(0)};
    auto emit = [&](const std::vector<Integer>& cands) {
        std::vector<Integer> chosen;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (out.size() >= cap) return;
            if (chosen.size() == cfg.m) {
                SolutionPair sol;
                for (const Integer& v : chosen) sol.a.emplace_back(v);
                for (const Integer& v : bvals) sol.b.emplace_back(v);
                out.push_back(std::move(sol));
                return;
            }
            for (std::size_t i = start; i < cands.size(); ++i) {
                chosen.push_back(cands[i]);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
    };
    auto descend = [&](auto&& self, std::size_t key_start,
                       const std::vector<Integer>& cands) -> void {
        if (out.size() >= cap) return;
        if (bvals.size() == cfg.n) {
            if (cands.size() >= cfg.m) emit(cands);
            return;
        }
        for (std::size_t ki = key_start; ki < keys.size(); ++ki) {
            const std::vector<Integer>& list = index.by_diff.at(keys[ki]);
            std::vector<Integer> next;
            std::set_intersection(cands.begin(), cands.end(), list.begin(),
                                  list.end(), std::back_inserter(next));
            if (next.empty()) continue;
            bvals.push_back(keys[ki]);
            self(self, ki + 1, next);
            bvals.pop_back();
        }
    };
    descend(descend, 0, base);
    return out;
}

std::size_t stream_slot_count(const SearchConfig& cfg) {
    return slot_count(make_plan(cfg, false));
}

std::size_t find_solutions_streamed(const SearchConfig& cfg,
                                    std::size_t resume_after_slots,
                                    const StreamHooks& hooks) {
    Plan plan = make_plan(cfg, false);
    return run_streamed(plan, cfg.thread_count, resume_after_slots, hooks);
}

bool cross_validate(FamilyId id, const std::vector<Integer>& params,
                    const Integer& bound_n) {
    SolutionPair cano = canonicalize(generate(id, params).pair);
    Integer max_element = 0;
    for (const Ratio& x : cano.a) max_element = std::max(max_element, x.num());
    for (const Ratio& x : cano.b) max_element = std::max(max_element, x.num());
    if (max_element > bound_n)
        throw rejected_input("bound too small; minimal N is " + max_element.get_str());

    SearchConfig cfg;
    cfg.bound_n = bound_n;
    cfg.m = cano.m();
    cfg.n = cano.n();
    bool repeats = has_duplicates(cano.a) || has_duplicates(cano.b);
    Plan plan = make_plan(cfg, repeats);
    bool found = false;
    StreamHooks hooks;
    hooks.on_solution = [&](const SolutionPair& sol) { found = found || sol == cano; };
    run_streamed(plan, cfg.thread_count, 0, hooks);
    return found;
}

} // namespace sumset
