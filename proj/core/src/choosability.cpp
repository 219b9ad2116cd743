#include <algorithm>
#include <bitset>
#include <numeric>

#include "rotsys/colorlab.hpp"

namespace rotsys {

namespace {

constexpr int kMaxPot = 128;

// Exhaustive search for a "bad" assignment: lists of the given sizes that
// admit no proper coloring. Assignments are generated in canonical form:
// colors are relabeled by first appearance in vertex order and each list is
// kept sorted, so each color-permutation class is visited once. At vertex i
// a list is an (s_i - t)-subset of the colors used so far plus t fresh
// colors; t = 0 and lexicographically smallest reuse come first, so the
// all-lists-equal assignment is the first leaf.
//
// Two reductions cut the space down to feasible size. Both follow from
// considering a bad assignment whose pot (set of distinct colors) is
// minimum; each is an exchange that preserves badness and shrinks the pot,
// so a minimum-pot bad assignment satisfies both constraints and searching
// only assignments that do stays complete.
//
//  1. Merge: if colors c, d never share a list, replacing d by c everywhere
//     keeps the assignment bad. (Given a proper coloring of the merged
//     assignment, map the color c back to d on the vertices whose original
//     list held d, not c; adjacent repeats would force two adjacent
//     vertices both colored c in the merged coloring.) Hence in a
//     minimum-pot bad assignment every pair of pot colors co-occurs in
//     some list.
//
//  2. Private swap: if color c lies only in L(v) and some pot color
//     d sits outside L(v), replacing c by d in L(v) keeps the assignment
//     bad. (A proper coloring using d at v recolors v with the private c,
//     which no neighbor can hold.) Hence in a minimum-pot bad assignment,
//     a private color forces pot <= |L(v)| + 1 <= max(sizes) + 1.
//
// A leaf therefore only needs checking when pot <= max(sizes) + 1, or when
// every color occurs twice and every color pair co-occurs. Branches that
// can no longer reach either shape are pruned against the remaining list
// capacity.
//
// A third prune comes from Hall's theorem. An injective choice of one
// color per list is a proper coloring outright (all colors distinct), so a
// bad assignment admits no system of distinct representatives: some set W
// of vertices has |union of L(v) over W| <= |W| - 1. At a search node the
// best deficiency any completion can reach is computable exactly: a set of
// already-fixed lists contributes its union, and extending W by k suffix
// vertices of list size <= t grows the union to at most max(current, t)
// while adding k to |W|. If even the best reachable deficiency is
// nonnegative, no completion below the node is bad.
class ChoosabilitySearch {
  public:
    ChoosabilitySearch(const RotationGraph& g, const std::vector<int>& sizes,
                       const SearchBudget& budget)
        : g_(g), sizes_(sizes), steps_(budget.max_steps), n_(g.vertex_count()) {
        small_cap_ = 1 + *std::max_element(sizes.begin(), sizes.end());
        suffix_slots_.assign(n_ + 1, 0);
        suffix_pairs_.assign(n_ + 1, 0);
        for (int i = n_ - 1; i >= 0; --i) {
            suffix_slots_[i] = suffix_slots_[i + 1] + sizes[i];
            suffix_pairs_[i] = suffix_pairs_[i + 1] + sizes[i] * (sizes[i] - 1) / 2;
        }
        // suffix_sizes_[i]: sizes of vertices i..n-1, ascending.
        suffix_sizes_.resize(n_ + 1);
        for (int i = 0; i <= n_; ++i) {
            suffix_sizes_[i].assign(sizes.begin() + i, sizes.end());
            std::sort(suffix_sizes_[i].begin(), suffix_sizes_[i].end());
        }
        lists_.resize(n_);
        listbits_.assign(n_, {});
        occ_.assign(kMaxPot, 0);
        cooc_.assign(kMaxPot, {});
        last_good_.assign(n_, -1);
    }

    ChoosabilityResult run() {
        ChoosabilityResult result;
        result.choosable = !dfs(0);
        result.assignments_checked = checked_;
        if (!result.choosable) {
            ListAssignment witness;
            witness.lists = lists_;
            for (auto& list : witness.lists)
                for (int& c : list) ++c;  // 1-based colors in reports
            result.witness = std::move(witness);
        }
        return result;
    }

  private:
    // Returns true when a bad assignment was found (lists_ holds it).
    bool dfs(int i) {
        steps_.tick("choosability search budget exceeded");
        if (i == n_) return leaf();

        // Cannot reach a small pot anymore and cannot repair the
        // minimum-pot invariants with the remaining capacity: prune.
        if (used_ > small_cap_ &&
            (singles_ > suffix_slots_[i] || pairs_missing_ > suffix_pairs_[i]))
            return false;

        if (i >= 2 && !hall_violator_reachable(i)) return false;

        const int s = sizes_[i];
        std::vector<int>& list = lists_[i];
        for (int fresh = 0; fresh <= s; ++fresh) {
            const int reuse = s - fresh;
            if (reuse > used_) continue;
            if (used_ + fresh > kMaxPot) break;
            // First subset: the lexicographically smallest `reuse` colors.
            std::vector<int> subset(reuse);
            std::iota(subset.begin(), subset.end(), 0);
            while (true) {
                list.clear();
                list.insert(list.end(), subset.begin(), subset.end());
                for (int k = 0; k < fresh; ++k) list.push_back(used_ + k);
                push_list(i, list);
                const bool found = dfs(i + 1);
                pop_list(list);
                if (found) return true;
                // Next `reuse`-subset of [0, used_) in lexicographic order.
                int k = reuse - 1;
                while (k >= 0 && subset[k] == used_ - reuse + k) --k;
                if (k < 0) break;
                ++subset[k];
                for (int j = k + 1; j < reuse; ++j) subset[j] = subset[j - 1] + 1;
            }
        }
        return false;
    }

    bool leaf() {
        const bool small_pot = used_ <= small_cap_;
        if (!small_pot && (singles_ != 0 || pairs_missing_ != 0)) return false;
        ++checked_;
        if (colorable()) return false;
        return true;  // bad assignment in lists_
    }

    // Exact test whether some completion of the current prefix can contain
    // a Hall-deficient vertex set. Scans all subsets of the fixed prefix;
    // for each, the suffix is absorbed optimally in ascending size order.
    bool hall_violator_reachable(int i) {
        const auto& suffix = suffix_sizes_[i];
        const int nsuf = static_cast<int>(suffix.size());
        // Gray-code walk over prefix subsets, keeping the union as a stack
        // of bitsets.
        std::vector<std::bitset<kMaxPot>> union_stack(i + 1);
        std::vector<int> member(i + 1, 0);
        int depth = 0;
        // Depth-first over subsets: at each step either stop or extend with
        // a vertex index above the last one.
        auto deficiency = [&](const std::bitset<kMaxPot>& u_bits, int w) {
            int u = static_cast<int>(u_bits.count());
            int best = u - w;
            for (int k = 0; k < nsuf; ++k) {
                // absorb suffix vertices with the k+1 smallest sizes
                const int t = suffix[k];
                best = std::min(best, std::max(u, t) - w - (k + 1));
            }
            return best;
        };
        auto rec = [&](auto&& self, int next) -> bool {
            if (deficiency(union_stack[depth], depth) <= -1) return true;
            for (int v = next; v < i; ++v) {
                union_stack[depth + 1] = union_stack[depth] | listbits_[v];
                member[depth + 1] = v;
                ++depth;
                const bool hit = self(self, v + 1);
                --depth;
                if (hit) return true;
            }
            return false;
        };
        return rec(rec, 0);
    }

    // Does some proper coloring pick from lists_? Tries the previous
    // solution first; most consecutive leaves share it.
    bool colorable() {
        if (last_good_[0] >= 0) {
            bool ok = true;
            for (int v = 0; v < n_ && ok; ++v)
                ok = std::binary_search(lists_[v].begin(), lists_[v].end(), last_good_[v]);
            if (ok) return true;
        }
        std::vector<int> color(n_, -1);
        if (!color_dfs(color, 0)) return false;
        last_good_ = color;
        return true;
    }

    bool color_dfs(std::vector<int>& color, int v) {
        steps_.tick("choosability search budget exceeded");
        if (v == n_) return true;
        for (int c : lists_[v]) {
            bool ok = true;
            for (int u : g_.rotation(v))
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (color_dfs(color, v + 1)) return true;
        }
        color[v] = -1;
        return false;
    }

    void push_list(int i, const std::vector<int>& list) {
        listbits_[i].reset();
        for (int c : list) listbits_[i].set(c);
        Undo u;
        u.old_used = used_;
        for (int c : list) {
            if (c >= used_) {
                // Fresh color: must eventually co-occur with every earlier one.
                pairs_missing_ += used_;
                ++used_;
                ++singles_;
                cooc_[c].reset();
                cooc_[c].set(c);
                occ_[c] = 1;
            } else {
                if (occ_[c] == 1) --singles_;
                ++occ_[c];
            }
        }
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                const int x = list[a], y = list[b];
                if (!cooc_[x].test(y)) {
                    cooc_[x].set(y);
                    cooc_[y].set(x);
                    --pairs_missing_;
                    u.paired.emplace_back(x, y);
                }
            }
        undo_.push_back(std::move(u));
    }

    void pop_list(const std::vector<int>& list) {
        Undo& u = undo_.back();
        for (auto [x, y] : u.paired) {
            cooc_[x].reset(y);
            cooc_[y].reset(x);
            ++pairs_missing_;
        }
        for (int c : list) {
            if (c >= u.old_used) {
                --used_;
                --singles_;
                pairs_missing_ -= used_;
                occ_[c] = 0;
            } else {
                --occ_[c];
                if (occ_[c] == 1) ++singles_;
            }
        }
        undo_.pop_back();
    }

    struct Undo {
        int old_used = 0;
        std::vector<std::pair<int, int>> paired;
    };

    const RotationGraph& g_;
    const std::vector<int>& sizes_;
    StepCounter steps_;
    int n_;
    int small_cap_ = 0;
    int used_ = 0;
    int singles_ = 0;
    long long pairs_missing_ = 0;
    std::uint64_t checked_ = 0;
    std::vector<int> suffix_slots_;
    std::vector<long long> suffix_pairs_;
    std::vector<std::vector<int>> suffix_sizes_;
    std::vector<std::vector<int>> lists_;
    std::vector<std::bitset<kMaxPot>> listbits_;
    std::vector<int> occ_;
    std::vector<std::bitset<kMaxPot>> cooc_;
    std::vector<int> last_good_;
    std::vector<Undo> undo_;
};

}  // namespace

ChoosabilityResult is_f_choosable(const RotationGraph& g, const std::vector<int>& sizes,
                                  const SearchBudget& budget) {
    const int n = g.vertex_count();
    if (static_cast<int>(sizes.size()) != n)
        throw ValidationError("sizes must cover the vertex set");
    const int cap = budget.max_vertices > 0 ? budget.max_vertices : 9;
    if (n > cap)
        throw BudgetExceeded("is_f_choosable: vertex cap " + std::to_string(cap) + " exceeded");

    ChoosabilityResult result;
    if (n == 0) {
        result.choosable = true;
        return result;
    }

    // A zero-size list can never be colored: the assignment giving every
    // other vertex its first few palette colors is already bad.
    for (int v = 0; v < n; ++v) {
        if (sizes[v] > 0) continue;
        ListAssignment witness;
        witness.lists.resize(n);
        for (int u = 0; u < n; ++u)
            for (int c = 1; c <= sizes[u]; ++c) witness.lists[u].push_back(c);
        result.choosable = false;
        result.witness = std::move(witness);
        result.assignments_checked = 1;
        return result;
    }

    long long total = 0;
    for (int s : sizes) total += s;
    if (total > kMaxPot)
        throw BudgetExceeded("is_f_choosable: palette larger than " + std::to_string(kMaxPot));

    return ChoosabilitySearch(g, sizes, budget).run();
}

}  // namespace rotsys
