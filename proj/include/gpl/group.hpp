#ifndef GPL_GROUP_HPP
#define GPL_GROUP_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gpl/errors.hpp"

namespace gpl {

/// Permutation of {0..d-1} given by its image list: point i maps to p[i].
using Perm = std::vector<int>;

/// A small finite group stored as a dense multiplication table.
///
/// Elements are indices 0..n-1 with the identity always at index 0.
/// Construction validates the group axioms (associativity in full for
/// n <= 600, sampled above) and relabels the identity to 0 if needed.
/// Instances are immutable once built and safe to share across threads.
class FiniteGroup {
public:
    static constexpr int identity = 0;

    /// Validates `table` as a group multiplication table. Throws NotAGroup
    /// with the first violation found.
    static FiniteGroup from_multiplication_table(std::string name,
                                                 const std::vector<std::vector<int>>& table);

    /// Closes `generators` (bijections of {0..degree-1}) under composition.
    /// Throws OrderCapExceeded when the closure grows past `order_cap`.
    /// The resulting group records one permutation per element.
    static FiniteGroup from_permutations(std::string name, int degree,
                                         const std::vector<Perm>& generators,
                                         int order_cap = 5000);

    const std::string& name() const { return name_; }
    int order() const { return n_; }

    int mul(int x, int y) const { return mul_[static_cast<size_t>(x) * n_ + y]; }
    int inv(int x) const { return inv_[x]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

    /// Least t >= 1 with x^t = identity; always divides the group order.
    int element_order(int x) const;
    /// Orders of all elements, index-aligned.
    std::vector<int> element_orders() const;

    /// {g x g^-1 : g in G}, sorted.
    std::vector<int> conjugacy_class(int x) const;
    /// Smallest-index representative of each conjugacy class, ascending.
    std::vector<int> conjugacy_class_representatives() const;

    /// Closure of `gens` under products and inverses, sorted.
    /// Empty input yields {identity}. The size always divides the order.
    std::vector<int> subgroup_generated(std::span<const int> gens) const;

    bool has_perm_images() const { return !perm_images_.empty(); }
    int permutation_degree() const { return perm_images_.empty() ? 0 : static_cast<int>(perm_images_[0].size()); }
    const std::vector<Perm>& perm_images() const { return perm_images_; }
    /// Index of the element acting as permutation `p`, or -1.
    int element_with_permutation(const Perm& p) const;

private:
    FiniteGroup() = default;
    void finalize(); // identity normalization + axiom validation
    void check_index(int x) const;

    std::string name_;
    int n_ = 0;
    std::vector<int> mul_; // flattened n x n
    std::vector<int> inv_;
    std::vector<Perm> perm_images_; // empty unless built from permutations
};

/// Constructs one of the built-in groups from a spec string:
///   cyclic(n), dihedral(n), abelian(n1,...,nt), symmetric(n<=6),
///   alternating(n<=7), sl2(p), psl2(p) for prime p <= 13,
///   product(spec,spec), trivial.
/// Throws UnsupportedSpec for anything else.
FiniteGroup builtin(const std::string& spec);

/// Reads groups from the line-oriented catalog format:
///   group <name> degree <d>
///   i1 i2 ... id        (one line per generator, 1-based images)
///   end
/// '#' starts a comment; blank lines are ignored. Duplicate names are
/// rejected. Throws ParseError with the offending line number.
std::vector<FiniteGroup> parse_catalog(std::istream& in);

/// Permutation induced by the matrix [[a,b],[c,d]] in SL(2,p) on the
/// p^2-1 nonzero column vectors of F_p^2, in row-major vector order.
/// This is the encoding used by builtin("sl2(p)").
Perm sl2_matrix_permutation(int p, int a, int b, int c, int d);

} // namespace gpl

#endif
