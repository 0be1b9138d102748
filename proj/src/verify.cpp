#include "gpl/verify.hpp"

#include <functional>

#include "gpl/curve.hpp"
#include "gpl/packing.hpp"
#include "gpl/slope.hpp"

namespace gpl {

namespace {

struct TableRow {
    std::vector<int> type;
    long long m_coeff;
    long long order_coeff;
};

// the eight exceptional rows, frozen independently of the enumerator
const std::vector<TableRow> kExpectedTable = {
    {{2, 2, 2, 3}, 4, 12}, {{2, 3, 7}, 12, 84}, {{2, 3, 8}, 6, 48}, {{2, 3, 9}, 4, 36},
    {{2, 4, 5}, 8, 40},    {{2, 4, 6}, 4, 24},  {{2, 5, 5}, 4, 20}, {{3, 3, 4}, 6, 24},
};

} // namespace

std::vector<VerificationStep> run_paper_verification(const FiniteGroup& candidate) {
    std::vector<VerificationStep> steps;
    bool failed = false;

    auto step = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
        if (failed) return;
        VerificationStep s;
        s.name = name;
        try {
            auto [ok, detail] = body();
            s.ok = ok;
            s.detail = detail;
        } catch (const std::exception& e) {
            s.ok = false;
            s.detail = e.what();
        }
        failed = !s.ok;
        steps.push_back(std::move(s));
    };

    auto locate = [&](int a, int b, int c, int d) {
        if (!candidate.has_perm_images() || candidate.permutation_degree() != 8)
            throw Error("group has no degree-8 permutation action");
        int idx = candidate.element_with_permutation(sl2_matrix_permutation(3, a, b, c, d));
        if (idx < 0)
            throw Error("matrix [[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," + std::to_string(d) + "]] not found in the permutation action");
        return idx;
    };

    int g1 = -1, g2 = -1, g3 = -1, phi2 = -1, phi3 = -1;
    std::vector<int> fixed;

    step("group order is 24", [&]() -> std::pair<bool, std::string> {
        return {candidate.order() == 24, "order " + std::to_string(candidate.order())};
    });

    step("g1 and g2 generate the group", [&]() -> std::pair<bool, std::string> {
        g1 = locate(0, 2, 1, 2);
        g2 = locate(0, 1, 2, 2);
        g3 = locate(2, 2, 2, 1);
        const size_t generated = candidate.subgroup_generated(std::vector<int>{g1, g2}).size();
        return {static_cast<int>(generated) == candidate.order(),
                "<g1,g2> has " + std::to_string(generated) + " elements"};
    });

    step("(g1,g2,g3) is a generating vector of type (3,3,4)", [&]() -> std::pair<bool, std::string> {
        const int o1 = candidate.element_order(g1), o2 = candidate.element_order(g2), o3 = candidate.element_order(g3);
        const int prod = candidate.mul(candidate.mul(g1, g2), g3);
        const bool ok = o1 == 3 && o2 == 3 && o3 == 4 && prod == FiniteGroup::identity;
        return {ok, "orders (" + std::to_string(o1) + "," + std::to_string(o2) + "," + std::to_string(o3) + "), product index " + std::to_string(prod)};
    });

    step("the action has genus 2", [&]() -> std::pair<bool, std::string> {
        const CurveAction action = CurveAction::create(candidate, CurveType(0, {3, 3, 4}), {g1, g2, g3});
        fixed = action.fixed_set;
        return {action.genus == 2, "genus " + std::to_string(action.genus)};
    });

    step("the explicit 3-element set is a packing", [&]() -> std::pair<bool, std::string> {
        phi2 = locate(2, 0, 1, 2);
        phi3 = locate(0, 1, 2, 1);
        const bool ok = verify_packing(candidate, fixed, std::vector<int>{FiniteGroup::identity, phi2, phi3});
        return {ok, "{1, phi2, phi3} pairwise fixed-point-free quotients"};
    });

    step("the maximum packing has m = 3", [&]() -> std::pair<bool, std::string> {
        const PackingResult result = max_packing(candidate, fixed);
        return {result.m == 3 && !result.time_bounded, "m = " + std::to_string(result.m)};
    });

    step("the ratio m/(g-1) equals 3", [&]() -> std::pair<bool, std::string> {
        const Rat ratio = packing_ratio(3, 2);
        return {ratio == Rat(3), "ratio " + ratio.str()};
    });

    step("the slope of the (3,3,3) cover is 8/3", [&]() -> std::pair<bool, std::string> {
        const Rat slope = simple_galois_slope(2, std::vector<int>{3, 3, 3});
        return {slope == Rat(8, 3), "slope " + slope.str()};
    });

    step("the cyclic cover has fibre genus 7", [&]() -> std::pair<bool, std::string> {
        const long long genus = cyclic_cover_fiber_genus(3, 2, 3);
        return {genus == 7, "fibre genus " + std::to_string(genus)};
    });

    step("the branch class is divisible by 3", [&]() -> std::pair<bool, std::string> {
        return {branch_divisibility_ok(3, 3), "3 components, degree-3 cover"};
    });

    step("the triangle type (3,3,4) is rigid", [&]() -> std::pair<bool, std::string> {
        return {is_rigid_triangle(CurveType(0, {3, 3, 4})), "quotient genus 0 with 3 branch points"};
    });

    step("the exceptional table has the eight expected rows", [&]() -> std::pair<bool, std::string> {
        const auto table = enumerate_exceptional_types();
        if (table.size() != kExpectedTable.size())
            return {false, std::to_string(table.size()) + " rows"};
        for (size_t i = 0; i < table.size(); ++i) {
            if (table[i].type.branch_orders() != kExpectedTable[i].type ||
                table[i].m_coefficient != kExpectedTable[i].m_coeff ||
                table[i].order_coefficient != kExpectedTable[i].order_coeff)
                return {false, "row " + std::to_string(i + 1) + " is " + table[i].type.paren()};
        }
        return {true, "8 rows"};
    });

    return steps;
}

std::vector<VerificationStep> run_paper_verification() {
    const FiniteGroup sl23 = builtin("sl2(3)");
    return run_paper_verification(sl23);
}

} // namespace gpl
