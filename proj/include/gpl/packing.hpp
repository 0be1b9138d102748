#ifndef GPL_PACKING_HPP
#define GPL_PACKING_HPP

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "gpl/group.hpp"
#include "gpl/rat.hpp"

namespace gpl {

/// Compatibility graph of a fixed-point set F: vertices are the group
/// elements, and x ~ y iff x != y and x^-1 y is not in F; packings are
/// exactly the cliques. F must be inverse-closed (this makes the relation
/// symmetric) and must not contain the identity.
class CompatibilityGraph {
public:
    static CompatibilityGraph build(const FiniteGroup& group, std::vector<int> fixed_set);

    const FiniteGroup& group() const { return *group_; }
    const std::vector<int>& fixed_set() const { return fixed_set_; }
    int size() const { return group_->order(); }
    bool adjacent(int x, int y) const;

private:
    const FiniteGroup* group_ = nullptr;
    std::vector<int> fixed_set_;  // sorted
    std::vector<char> in_fixed_;
};

/// True iff the graphs of x and y are disjoint, i.e. x^-1 y has no fixed
/// point. Throws SameElement when x == y.
bool graphs_disjoint(const FiniteGroup& group, const std::vector<int>& fixed_set, int x, int y);

/// True iff every unordered pair of S passes graphs_disjoint. Empty sets and
/// singletons are vacuously valid packings.
bool verify_packing(const FiniteGroup& group, const std::vector<int>& fixed_set,
                    std::span<const int> subset);

struct PackingOptions {
    std::chrono::milliseconds time_budget{60000};
    /// Known-achievable lower bound used to prune; 0 disables seeding.
    int seed_lower_bound = 0;
};

struct PackingResult {
    int m = 0;
    /// A maximum packing containing the identity; when the search completed,
    /// the lexicographically least such witness.
    std::vector<int> witness;
    long long nodes_explored = 0;
    /// Set when the time budget truncated the search; m is then only a
    /// lower bound and the witness is the best packing found.
    bool time_bounded = false;
};

/// Exact maximum packing by branch and bound over cliques containing the
/// identity (valid by left-translation equivariance), with a greedy-coloring
/// upper bound and smallest-index-first branching. Deterministic.
/// F must be inverse- and conjugation-closed.
PackingResult max_packing(const FiniteGroup& group, const std::vector<int>& fixed_set,
                          const PackingOptions& options = {});

/// Independent oracle: exhaustive lexicographic subset extension with no
/// pruning beyond pairwise feasibility. Guarded to |G| <= 64.
int brute_force_max_packing(const FiniteGroup& group, const std::vector<int>& fixed_set);

/// Number of maximum packings (all of them, not only those containing the
/// identity). Guarded to |G| <= 120.
long long count_max_packings(const FiniteGroup& group, const std::vector<int>& fixed_set);

/// Exact ratio m/(g-1); throws GenusTooSmall for g < 2.
Rat packing_ratio(long long m, long long genus);

} // namespace gpl

#endif
