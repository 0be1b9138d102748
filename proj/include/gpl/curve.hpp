#ifndef GPL_CURVE_HPP
#define GPL_CURVE_HPP

#include <span>
#include <string>
#include <vector>

#include "gpl/group.hpp"

namespace gpl {

/// Topological type of a group action on a curve: genus of the quotient
/// plus the ordered branch multiplicities nu_1 <= ... <= nu_k (each >= 2).
class CurveType {
public:
    CurveType() = default;
    CurveType(int quotient_genus, std::vector<int> branch_orders);

    int quotient_genus() const { return h_; }
    const std::vector<int>& branch_orders() const { return nu_; }
    int num_branch_points() const { return static_cast<int>(nu_.size()); }

    /// Wire format used on the CLI and in files, e.g. "h=0;2,3,7".
    std::string str() const;
    /// Display format "(2,3,7)"; quotient genus is suppressed.
    std::string paren() const;

    friend bool operator==(const CurveType&, const CurveType&) = default;
    friend bool operator<(const CurveType& a, const CurveType& b) {
        return a.h_ != b.h_ ? a.h_ < b.h_ : a.nu_ < b.nu_;
    }

private:
    int h_ = 0;
    std::vector<int> nu_;
};

CurveType parse_curve_type(const std::string& text);

/// Genus g of the covering curve from the Hurwitz formula
///   2g - 2 = |G| (2h - 2 + sum_i (1 - 1/nu_i)),
/// evaluated exactly. Throws NonIntegralGenus when g is not an integer and
/// NegativeGenus when g < 0.
long long riemann_hurwitz_genus(long long group_order, int quotient_genus,
                                std::span<const int> branch_orders);

/// Elements g_1,...,g_k of prescribed orders with product 1 generating the
/// group; encodes a branched action with genus-zero quotient.
struct GeneratingVector {
    const FiniteGroup* group = nullptr;
    std::vector<int> elements;
};

/// All generating vectors of the given type (quotient genus 0, k >= 3),
/// reduced up to simultaneous conjugation: one canonical representative
/// (lexicographically least conjugate) per class, emitted in lexicographic
/// order. With require_distinct, vectors with repeated entries are dropped.
std::vector<GeneratingVector> enumerate_generating_vectors(const FiniteGroup& group,
                                                           const CurveType& type,
                                                           bool require_distinct = false);

/// The set F of nontrivial elements with fixed points: all conjugates of the
/// nontrivial powers of the vector entries. Sorted; identity excluded.
std::vector<int> fixed_point_elements(const FiniteGroup& group, std::span<const int> vector_elements);

/// Upper bound |G| / nu_k on the size of a packing (nu_k = 1 encodes "no
/// ramification"). Throws NonDivisor when nu_k does not divide the order.
long long mu_upper_bound(long long group_order, int nu_k);

/// One row of the exceptional-type table: a genus-zero type together with
/// the coefficients c, c' in m <= c (g-1) and |G| = c' (g-1).
struct ExceptionalType {
    CurveType type;
    long long m_coefficient = 0;
    long long order_coefficient = 0;
};

/// The complete list of genus-zero types with 0 < lambda < 2/3, where
/// lambda = nu_k (-2 + sum_i (1 - 1/nu_i)); these are the only types that
/// may beat the 3(g-1) packing bound. Exactly eight rows.
std::vector<ExceptionalType> enumerate_exceptional_types();

/// Triangle types (quotient genus 0, three branch points) give rigid pairs.
bool is_rigid_triangle(const CurveType& type);

/// A validated branched action: group, type, generating vector, the derived
/// curve genus (>= 2 enforced) and the fixed-point element set.
struct CurveAction {
    const FiniteGroup* group = nullptr;
    CurveType type;
    GeneratingVector vector;
    long long genus = 0;
    std::vector<int> fixed_set;

    /// Validates the vector against the type, derives the genus (rejecting
    /// genus <= 1 with GenusTooSmall) and computes the fixed-point set.
    static CurveAction create(const FiniteGroup& group, const CurveType& type,
                              std::vector<int> elements);
};

} // namespace gpl

#endif
