#ifndef GPL_SLOPE_HPP
#define GPL_SLOPE_HPP

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "gpl/rat.hpp"

namespace gpl {

/// One ramification stratum over a branch component: index r >= 2 with
/// multiplicity n >= 1 (n sheets of ramification order r).
struct Stratum {
    int r = 2;
    long long n = 1;
};

/// Branch-locus component with its degrees over the two factors and its
/// ramification strata; the covering degree satisfies d = sum n_j r_j.
struct BranchComponent {
    long long d1 = 1;
    long long d2 = 1;
    std::vector<Stratum> strata;
};

/// Consistent Euler number d1*e1 = d2*e2 of a component; throws
/// InconsistentDegrees when the two products differ.
long long euler_of_component(long long e1, long long e2, long long d1, long long d2);

/// The numerical branch data of a branched covering of a product of two
/// curves: Euler numbers e_i = 2 - 2b_i (b_i >= 2) of the factors, covering
/// degree d, and one BranchComponent per component of the branch divisor.
/// All constraints are checked eagerly at construction.
class AdmissibleConfiguration {
public:
    AdmissibleConfiguration(long long e1, long long e2, long long d,
                            std::vector<BranchComponent> components, bool galois);

    long long e1() const { return e1_; }
    long long e2() const { return e2_; }
    long long d() const { return d_; }
    const std::vector<BranchComponent>& components() const { return components_; }
    int num_components() const { return static_cast<int>(components_.size()); }

    bool galois() const { return galois_; }
    /// Every component is the graph of a map (degree one over the first factor).
    bool simple() const { return simple_; }
    /// Simple with equal factors (graphs of automorphisms).
    bool very_simple() const { return simple_ && e1_ == e2_; }

    long long euler_of_component(int i) const;
    /// Genus of the second factor, (2 - e2)/2.
    long long genus_b2() const { return (2 - e2_) / 2; }

private:
    long long e1_, e2_, d_;
    std::vector<BranchComponent> components_;
    bool galois_;
    bool simple_;
};

/// Chern and signature invariants of the covering surface, all exact.
struct SurfaceInvariants {
    Rat c2;
    Rat c1sq;
    Rat sigma; // (c1sq - 2 c2)/3
    Rat slope; // c1sq / c2
};

SurfaceInvariants invariants(const AdmissibleConfiguration& config);

/// Slope straight from the defining formula
///   2 + [-sum n(r-1)(r+1)/r e(D_i)] / [d e1 e2 - sum beta_i e(D_i)];
/// always equal to invariants(config).slope.
Rat abstract_slope(const AdmissibleConfiguration& config);

/// Galois specialization: one ramification index r_i per component.
Rat galois_slope(std::span<const long long> component_eulers, std::span<const int> r_list,
                 long long e1, long long e2);

/// Simple Galois specialization in terms of the genus g of the target curve:
///   2 + [1 - (1/m) sum 1/r_i^2] / [(2g-2)/m + 1 - (1/m) sum 1/r_i].
/// The denominator is provably positive for g >= 2.
Rat simple_galois_slope(long long genus, std::span<const int> r_list);

/// Numerator and denominator (positive) of simple_galois_slope - 2, given m
/// and the power sums of the reciprocals. Shared kernel of the bound checks.
std::pair<Rat, Rat> simple_galois_excess(long long genus, long long m,
                                         const Rat& sum_inv_r, const Rat& sum_inv_r2);

enum class BoundVerdict { below, equal, above };

struct SlopeBoundCheck {
    BoundVerdict verdict;
    Rat slope;
};

/// Compares the simple Galois slope with 8/3 under the hypothesis
/// m <= 3(g-1) (PreconditionViolated otherwise). Equality is asserted to
/// occur exactly when m = 3(g-1) and every r_i = 3.
SlopeBoundCheck check_slope_bound(long long genus, std::span<const int> r_list);

/// True iff omitting the last component strictly decreases the slope, i.e.
/// simple_galois_slope(g, r_list minus last) < simple_galois_slope(g, r_list).
/// Requires |r_list| >= 2 and |r_list| <= 4(g-1); always true there, and
/// asserted as such.
bool dropping_last_component_decreases_slope(long long genus, std::span<const int> r_list);

/// Slope of the branched double cover over m disjoint graphs (one graph is
/// dropped when m is odd): simple_galois_slope with all indices equal to 2.
/// Reaches 3 exactly at (effective) m = 8(g-1).
Rat betterbound_slope(long long m, long long genus);

/// Fibre genus of a degree-r cyclic cover of a genus g_base fibre branched
/// at m points: 2g' - 2 = r(2 g_base - 2) + m(r - 1).
long long cyclic_cover_fiber_genus(int r, long long genus_base, long long branch_points);

/// A degree-r simple cyclic cover branched on m graph components needs the
/// restricted branch class divisible by r: true iff r | m.
bool branch_divisibility_ok(int r, long long m);

/// Reads one configuration from the line-oriented text format:
///   e1 <int>   e2 <int>   d <int>   galois yes|no
///   component d1 <int> d2 <int> strata r:n[,r:n...]
/// '#' starts a comment. Throws ParseError with the line number.
AdmissibleConfiguration parse_configuration(std::istream& in);

} // namespace gpl

#endif
