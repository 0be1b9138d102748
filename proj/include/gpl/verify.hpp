#ifndef GPL_VERIFY_HPP
#define GPL_VERIFY_HPP

#include <string>
#include <vector>

#include "gpl/group.hpp"

namespace gpl {

struct VerificationStep {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Runs the built-in end-to-end scenario: the order-24 matrix group acting
/// on a genus-2 curve with type (3,3,4), its explicit 3-element packing,
/// the maximum packing m = 3 = 3(g-1), the 8/3 slope, the genus-7 fibre of
/// the cyclic cover, rigidity of the triangle type, and the exceptional
/// table. Twelve steps, evaluated in order; evaluation stops at the first
/// failure. The candidate group is injectable so the negative path is
/// testable; the CLI passes builtin("sl2(3)").
std::vector<VerificationStep> run_paper_verification(const FiniteGroup& candidate);
std::vector<VerificationStep> run_paper_verification();

} // namespace gpl

#endif
