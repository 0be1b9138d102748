#include "gpl/packing.hpp"

#include <algorithm>

#include "gpl/errors.hpp"

namespace gpl {

namespace {

void validate_fixed_set(const FiniteGroup& group, const std::vector<int>& fixed_set,
                        bool require_conjugation_closed) {
    std::vector<char> in(group.order(), 0);
    for (int x : fixed_set) {
        if (x < 0 || x >= group.order()) throw Error("fixed set contains an out-of-range element");
        if (x == FiniteGroup::identity) throw Error("fixed set must not contain the identity");
        if (in[x]) throw Error("fixed set contains duplicates");
        in[x] = 1;
    }
    for (int x : fixed_set) {
        if (!in[group.inv(x)]) throw Error("fixed set is not inverse-closed");
        if (require_conjugation_closed)
            for (int g = 0; g < group.order(); ++g)
                if (!in[group.conjugate(g, x)]) throw Error("fixed set is not conjugation-closed");
    }
}

// Branch and bound for maximum cliques on a bitset graph. Vertices are
// processed smallest-first everywhere, which makes runs reproducible and
// makes the greedy reconstruction below yield the lexicographically least
// maximum clique.
class CliqueSolver {
public:
    CliqueSolver(const std::vector<std::vector<uint64_t>>& adj, int n,
                 std::chrono::steady_clock::time_point deadline)
        : adj_(adj), n_(n), words_((n + 63) / 64), deadline_(deadline) {}

    long long nodes() const { return nodes_; }
    bool truncated() const { return truncated_; }

    // Largest clique; `initial_bound` prunes cliques of that size or below
    // (their witnesses are not reported).
    std::pair<int, std::vector<int>> solve(int initial_bound) {
        best_size_ = initial_bound;
        best_.clear();
        current_.clear();
        std::vector<uint64_t> all(words_, 0);
        for (int v = 0; v < n_; ++v) all[v >> 6] |= 1ULL << (v & 63);
        expand(all);
        return {best_size_, best_};
    }

    // Is there a clique of size `need` inside `candidates`?
    bool exists(std::vector<uint64_t> candidates, int need) {
        if (need <= 0) return true;
        found_target_ = need;
        best_size_ = need - 1; // only improvements count
        best_.clear();
        current_.clear();
        expand(std::move(candidates));
        found_target_ = 0;
        return static_cast<int>(best_.size()) >= need;
    }

private:
    bool over_budget() {
        if (truncated_) return true;
        if ((nodes_ & 63) == 1 && std::chrono::steady_clock::now() > deadline_) truncated_ = true;
        return truncated_;
    }

    void expand(std::vector<uint64_t> cand) {
        ++nodes_;
        if (over_budget()) return;

        std::vector<int> verts;
        for (int w = 0; w < words_; ++w)
            for (uint64_t bits = cand[w]; bits; bits &= bits - 1)
                verts.push_back((w << 6) + std::countr_zero(bits));

        if (verts.empty()) {
            if (static_cast<int>(current_.size()) > best_size_) {
                best_size_ = static_cast<int>(current_.size());
                best_ = current_;
            }
            return;
        }

        // greedy sequential coloring in index order; a clique cannot exceed
        // the number of colors used
        std::vector<int> color(verts.size());
        std::vector<std::vector<uint64_t>> classes;
        for (size_t i = 0; i < verts.size(); ++i) {
            const int v = verts[i];
            size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int w = 0; w < words_ && !clash; ++w)
                    clash = (classes[c][w] & adj_[v][w]) != 0;
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back(words_, 0);
            classes[c][v >> 6] |= 1ULL << (v & 63);
            color[i] = static_cast<int>(c) + 1;
        }
        std::vector<int> suffix_max(verts.size() + 1, 0);
        for (size_t i = verts.size(); i-- > 0;)
            suffix_max[i] = std::max(suffix_max[i + 1], color[i]);

        for (size_t i = 0; i < verts.size(); ++i) {
            if (static_cast<int>(current_.size()) + suffix_max[i] <= best_size_) return;
            if (truncated_) return;
            const int v = verts[i];
            cand[v >> 6] &= ~(1ULL << (v & 63));
            std::vector<uint64_t> child(words_);
            bool any = false;
            for (int w = 0; w < words_; ++w) {
                child[w] = cand[w] & adj_[v][w];
                any |= child[w] != 0;
            }
            current_.push_back(v);
            if (any) {
                expand(std::move(child));
            } else {
                ++nodes_;
                if (static_cast<int>(current_.size()) > best_size_) {
                    best_size_ = static_cast<int>(current_.size());
                    best_ = current_;
                }
            }
            current_.pop_back();
            if (found_target_ && static_cast<int>(best_.size()) >= found_target_) return;
        }
    }

    const std::vector<std::vector<uint64_t>>& adj_;
    int n_;
    int words_;
    std::chrono::steady_clock::time_point deadline_;
    long long nodes_ = 0;
    bool truncated_ = false;
    int best_size_ = 0;
    int found_target_ = 0;
    std::vector<int> best_;
    std::vector<int> current_;
};

} // namespace

CompatibilityGraph CompatibilityGraph::build(const FiniteGroup& group, std::vector<int> fixed_set) {
    std::sort(fixed_set.begin(), fixed_set.end());
    validate_fixed_set(group, fixed_set, false);
    CompatibilityGraph g;
    g.group_ = &group;
    g.in_fixed_.assign(group.order(), 0);
    for (int x : fixed_set) g.in_fixed_[x] = 1;
    g.fixed_set_ = std::move(fixed_set);
    return g;
}

bool CompatibilityGraph::adjacent(int x, int y) const {
    if (x == y) return false;
    return !in_fixed_[group_->mul(group_->inv(x), y)];
}

bool graphs_disjoint(const FiniteGroup& group, const std::vector<int>& fixed_set, int x, int y) {
    if (x == y) throw SameElement("graphs_disjoint needs two distinct automorphisms");
    return !std::binary_search(fixed_set.begin(), fixed_set.end(), group.mul(group.inv(x), y));
}

bool verify_packing(const FiniteGroup& group, const std::vector<int>& fixed_set,
                    std::span<const int> subset) {
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (!graphs_disjoint(group, fixed_set, subset[i], subset[j])) return false;
    return true;
}

PackingResult max_packing(const FiniteGroup& group, const std::vector<int>& fixed_set,
                          const PackingOptions& options) {
    std::vector<int> F = fixed_set;
    std::sort(F.begin(), F.end());
    validate_fixed_set(group, F, true);
    const CompatibilityGraph graph = CompatibilityGraph::build(group, F);

    // Every maximum packing has a left translate containing the identity, so
    // it suffices to search among the identity's neighbours: the elements
    // outside F.
    std::vector<int> verts;
    for (int x = 1; x < group.order(); ++x)
        if (!std::binary_search(F.begin(), F.end(), x)) verts.push_back(x);

    const int n = static_cast<int>(verts.size());
    const int words = (n + 63) / 64;
    std::vector<std::vector<uint64_t>> adj(n, std::vector<uint64_t>(words, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && graph.adjacent(verts[i], verts[j])) adj[i][j >> 6] |= 1ULL << (j & 63);

    const auto deadline = std::chrono::steady_clock::now() + options.time_budget;
    CliqueSolver solver(adj, n, deadline);

    // deterministic greedy clique as the starting bound
    std::vector<int> greedy;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j : greedy) ok = ok && ((adj[j][i >> 6] >> (i & 63)) & 1) != 0;
        if (ok) greedy.push_back(i);
    }

    int floor_size = static_cast<int>(greedy.size());
    if (options.seed_lower_bound > 0) floor_size = std::max(floor_size, options.seed_lower_bound - 1);
    auto [size, clique] = solver.solve(floor_size);

    PackingResult result;
    result.nodes_explored = solver.nodes();
    result.time_bounded = solver.truncated();
    if (clique.empty() && size <= floor_size) {
        // nothing beat the floor; fall back to the recorded greedy clique,
        // unless a seed promised more than the search could confirm
        if (options.seed_lower_bound - 1 > static_cast<int>(greedy.size()) && !result.time_bounded)
            return max_packing(group, fixed_set, PackingOptions{options.time_budget, 0});
        size = static_cast<int>(greedy.size());
        clique = greedy;
    }
    result.m = size + 1; // the identity joins every packing of its neighbours

    if (!result.time_bounded) {
        // rebuild the witness as the lexicographically least maximum clique:
        // grow smallest-first, keeping a vertex iff the target stays reachable;
        // these decision probes are cheap next to the completed search and
        // run unclocked
        const auto unbounded = std::chrono::steady_clock::time_point::max();
        std::vector<int> chosen;
        std::vector<uint64_t> cand(words, 0);
        for (int v = 0; v < n; ++v) cand[v >> 6] |= 1ULL << (v & 63);
        while (static_cast<int>(chosen.size()) < size) {
            bool advanced = false;
            for (int v = 0; v < n && !advanced; ++v) {
                if (!((cand[v >> 6] >> (v & 63)) & 1)) continue;
                std::vector<uint64_t> rest(words);
                for (int w = 0; w < words; ++w) rest[w] = cand[w] & adj[v][w];
                for (int w = 0; w <= v >> 6; ++w) {
                    uint64_t mask = (v >> 6) == w ? ~((1ULL << (v & 63)) * 2 - 1) : 0;
                    rest[w] &= mask; // only vertices above v keep the witness sorted
                }
                CliqueSolver probe(adj, n, unbounded);
                if (probe.exists(rest, size - static_cast<int>(chosen.size()) - 1)) {
                    chosen.push_back(v);
                    cand = std::move(rest);
                    advanced = true;
                } else {
                    cand[v >> 6] &= ~(1ULL << (v & 63));
                }
            }
            if (!advanced) throw Error("witness reconstruction lost the clique (internal)");
        }
        clique = std::move(chosen);
    }

    result.witness.push_back(FiniteGroup::identity);
    for (int i : clique) result.witness.push_back(verts[i]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

namespace {

void brute_extend(const CompatibilityGraph& graph, std::vector<int>& current, int next, int& best) {
    best = std::max(best, static_cast<int>(current.size()));
    for (int v = next; v < graph.size(); ++v) {
        bool feasible = true;
        for (int u : current) feasible = feasible && graph.adjacent(u, v);
        if (!feasible) continue;
        current.push_back(v);
        brute_extend(graph, current, v + 1, best);
        current.pop_back();
    }
}

} // namespace

int brute_force_max_packing(const FiniteGroup& group, const std::vector<int>& fixed_set) {
    if (group.order() > 64)
        throw GroupTooLarge("brute-force packing is limited to groups of order <= 64");
    std::vector<int> F = fixed_set;
    std::sort(F.begin(), F.end());
    const CompatibilityGraph graph = CompatibilityGraph::build(group, F);
    int best = 0;
    std::vector<int> current;
    brute_extend(graph, current, 0, best);
    return best;
}

long long count_max_packings(const FiniteGroup& group, const std::vector<int>& fixed_set) {
    if (group.order() > 120)
        throw GroupTooLarge("packing counting is limited to groups of order <= 120");
    const int m = max_packing(group, fixed_set).m;
    std::vector<int> F = fixed_set;
    std::sort(F.begin(), F.end());
    const CompatibilityGraph graph = CompatibilityGraph::build(group, F);

    long long count = 0;
    std::vector<int> current;
    auto rec = [&](auto&& self, const std::vector<int>& cand, int next) -> void {
        if (static_cast<int>(current.size()) == m) {
            ++count;
            return;
        }
        for (size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            if (v < next) continue;
            if (static_cast<int>(current.size() + cand.size() - i) < m) return;
            std::vector<int> sub;
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (graph.adjacent(v, cand[j])) sub.push_back(cand[j]);
            current.push_back(v);
            self(self, sub, v + 1);
            current.pop_back();
        }
    };
    std::vector<int> all(group.order());
    for (int v = 0; v < group.order(); ++v) all[v] = v;
    rec(rec, all, 0);
    return count;
}

Rat packing_ratio(long long m, long long genus) {
    if (genus < 2) throw GenusTooSmall("packing ratio needs genus >= 2");
    return Rat(Int(m), Int(genus - 1));
}

} // namespace gpl
