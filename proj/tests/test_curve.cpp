#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gpl/curve.hpp"
#include "gpl/rat.hpp"

using namespace gpl;

namespace {

// all-tuples reference enumeration, no conjugation reduction and no pruning
std::set<std::vector<int>> brute_force_vectors(const FiniteGroup& g, const CurveType& type) {
    const auto& nu = type.branch_orders();
    const int k = static_cast<int>(nu.size());
    std::set<std::vector<int>> found;
    std::vector<int> tuple(k);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            int prod = FiniteGroup::identity;
            for (int x : tuple) prod = g.mul(prod, x);
            if (prod != FiniteGroup::identity) return;
            if (static_cast<int>(g.subgroup_generated(tuple).size()) != g.order()) return;
            found.insert(tuple);
            return;
        }
        for (int x = 0; x < g.order(); ++x) {
            if (g.element_order(x) != nu[depth]) continue;
            tuple[depth] = x;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return found;
}

std::set<std::vector<int>> expand_by_conjugation(const FiniteGroup& g,
                                                 const std::vector<GeneratingVector>& vectors) {
    std::set<std::vector<int>> expanded;
    for (const GeneratingVector& vec : vectors)
        for (int h = 0; h < g.order(); ++h) {
            std::vector<int> conj(vec.elements.size());
            for (size_t i = 0; i < conj.size(); ++i) conj[i] = g.conjugate(h, vec.elements[i]);
            expanded.insert(std::move(conj));
        }
    return expanded;
}

} // namespace

TEST_CASE("curve type parsing and formatting") {
    const CurveType t = parse_curve_type("h=0;2,3,7");
    CHECK(t.quotient_genus() == 0);
    CHECK(t.branch_orders() == std::vector<int>{2, 3, 7});
    CHECK(t.str() == "h=0;2,3,7");
    CHECK(t.paren() == "(2,3,7)");

    const CurveType unramified = parse_curve_type("h=2;");
    CHECK(unramified.quotient_genus() == 2);
    CHECK(unramified.branch_orders().empty());

    CHECK(parse_curve_type("h=0;7,2,3").branch_orders() == std::vector<int>{2, 3, 7});

    CHECK_THROWS_AS(parse_curve_type("0;2,3"), Error);
    CHECK_THROWS_AS(parse_curve_type("h=0;1,2"), Error);
    CHECK_THROWS_AS(parse_curve_type("h=-1;2,2"), Error);
    CHECK_THROWS_AS(parse_curve_type("h=0;2,x"), Error);
}

TEST_CASE("Hurwitz genus values") {
    CHECK(riemann_hurwitz_genus(24, 0, std::vector<int>{3, 3, 4}) == 2);
    CHECK(riemann_hurwitz_genus(1, 2, std::vector<int>{}) == 2);
    CHECK(riemann_hurwitz_genus(168, 0, std::vector<int>{2, 3, 7}) == 3);
    CHECK(riemann_hurwitz_genus(84, 0, std::vector<int>{2, 3, 7}) == 2);
    CHECK(riemann_hurwitz_genus(1, 0, std::vector<int>{}) == 0);
    CHECK(riemann_hurwitz_genus(12, 0, std::vector<int>{2, 2, 2, 3}) == 2);
    CHECK_THROWS_AS(riemann_hurwitz_genus(10, 0, std::vector<int>{2, 3, 7}), NonIntegralGenus);
    CHECK_THROWS_AS(riemann_hurwitz_genus(2, 0, std::vector<int>{}), NegativeGenus);
}

TEST_CASE("no (2,2,2) vectors over the 2-element group") {
    const FiniteGroup c2 = builtin("cyclic(2)");
    CHECK(enumerate_generating_vectors(c2, CurveType(0, {2, 2, 2})).empty());
    CHECK(brute_force_vectors(c2, CurveType(0, {2, 2, 2})).empty());
}

TEST_CASE("no vectors over the trivial group") {
    const FiniteGroup t = builtin("trivial");
    CHECK(enumerate_generating_vectors(t, CurveType(0, {2, 2, 2})).empty());
    CHECK(enumerate_generating_vectors(t, CurveType(0, {3, 3, 4})).empty());
}

TEST_CASE("the enumeration finds the explicit (3,3,4) vector of sl2(3)") {
    const FiniteGroup g = builtin("sl2(3)");
    const std::vector<int> explicit_vector{g.element_with_permutation(sl2_matrix_permutation(3, 0, 2, 1, 2)),
                                 g.element_with_permutation(sl2_matrix_permutation(3, 0, 1, 2, 2)),
                                 g.element_with_permutation(sl2_matrix_permutation(3, 2, 2, 2, 1))};
    const auto vectors = enumerate_generating_vectors(g, CurveType(0, {3, 3, 4}));
    CHECK_FALSE(vectors.empty());
    const auto expanded = expand_by_conjugation(g, vectors);
    CHECK(expanded.count(explicit_vector) == 1);
}

TEST_CASE("enumeration matches the all-tuples reference") {
    struct Case {
        const char* spec;
        CurveType type;
    };
    const Case cases[] = {
        {"sl2(3)", CurveType(0, {3, 3, 4})},
        {"dihedral(6)", CurveType(0, {2, 2, 2, 3})},
        {"cyclic(6)", CurveType(0, {2, 3, 6})},
        {"symmetric(4)", CurveType(0, {2, 3, 4})},
        {"abelian(2,2)", CurveType(0, {2, 2, 2})},
    };
    for (const Case& c : cases) {
        CAPTURE(c.spec);
        const FiniteGroup g = builtin(c.spec);
        const auto vectors = enumerate_generating_vectors(g, c.type);
        CHECK(expand_by_conjugation(g, vectors) == brute_force_vectors(g, c.type));
        // one canonical representative per class: expanding and re-reducing
        // must not merge classes
        std::set<std::vector<int>> canon;
        for (const auto& v : vectors) canon.insert(v.elements);
        CHECK(canon.size() == vectors.size());
    }
}

TEST_CASE("enumerated vectors satisfy the definition") {
    for (const char* spec : {"sl2(3)", "dihedral(6)", "symmetric(4)"}) {
        const FiniteGroup g = builtin(spec);
        for (const CurveType& type :
             {CurveType(0, {2, 2, 2, 3}), CurveType(0, {3, 3, 4}), CurveType(0, {2, 4, 6})}) {
            for (const GeneratingVector& vec : enumerate_generating_vectors(g, type)) {
                const auto& nu = type.branch_orders();
                REQUIRE(vec.elements.size() == nu.size());
                int prod = FiniteGroup::identity;
                for (size_t i = 0; i < nu.size(); ++i) {
                    CHECK(g.element_order(vec.elements[i]) == nu[i]);
                    prod = g.mul(prod, vec.elements[i]);
                }
                CHECK(prod == FiniteGroup::identity);
                CHECK(static_cast<int>(g.subgroup_generated(vec.elements).size()) == g.order());
            }
        }
    }
}

TEST_CASE("require_distinct drops vectors with repeated entries") {
    const FiniteGroup c2 = builtin("cyclic(2)");
    const CurveType type(0, {2, 2, 2, 2});
    CHECK(enumerate_generating_vectors(c2, type).size() == 1); // (1,1,1,1)
    CHECK(enumerate_generating_vectors(c2, type, true).empty());
}

TEST_CASE("fixed points of a free cyclic action cover everything nontrivial") {
    const FiniteGroup c5 = builtin("cyclic(5)");
    const auto F = fixed_point_elements(c5, std::vector<int>{1, 2, 2});
    CHECK(F == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("empty vector has no fixed points") {
    const FiniteGroup g = builtin("sl2(3)");
    CHECK(fixed_point_elements(g, std::vector<int>{}).empty());
}

TEST_CASE("the example's fixed set misses the three packing quotients") {
    const FiniteGroup g = builtin("sl2(3)");
    const std::vector<int> explicit_vector{g.element_with_permutation(sl2_matrix_permutation(3, 0, 2, 1, 2)),
                                 g.element_with_permutation(sl2_matrix_permutation(3, 0, 1, 2, 2)),
                                 g.element_with_permutation(sl2_matrix_permutation(3, 2, 2, 2, 1))};
    const auto F = fixed_point_elements(g, explicit_vector);
    CHECK(F.size() == 15); // 8 of order 3, 6 of order 4, and -I

    const int phi2 = g.element_with_permutation(sl2_matrix_permutation(3, 2, 0, 1, 2));
    const int phi3 = g.element_with_permutation(sl2_matrix_permutation(3, 0, 1, 2, 1));
    const int quot = g.mul(phi3, g.inv(phi2));
    for (int x : {phi2, phi3, quot}) {
        CHECK(g.element_order(x) == 6);
        CHECK_FALSE(std::binary_search(F.begin(), F.end(), x));
    }
}

TEST_CASE("fixed sets are inverse- and conjugation-closed") {
    for (const char* spec : {"sl2(3)", "dihedral(6)", "symmetric(4)"}) {
        const FiniteGroup g = builtin(spec);
        for (const CurveType& type : {CurveType(0, {3, 3, 4}), CurveType(0, {2, 2, 2, 3})}) {
            for (const GeneratingVector& vec : enumerate_generating_vectors(g, type)) {
                const auto F = fixed_point_elements(g, vec.elements);
                for (int x : F) {
                    CHECK(std::binary_search(F.begin(), F.end(), g.inv(x)));
                    for (int h = 0; h < g.order(); ++h)
                        CHECK(std::binary_search(F.begin(), F.end(), g.conjugate(h, x)));
                }
                // |F| <= sum |G| (nu_i - 1)/nu_i
                Rat bound;
                for (int nu : type.branch_orders()) bound += Rat(g.order() * (nu - 1), nu);
                CHECK(Rat(static_cast<long long>(F.size())) <= bound);
            }
        }
    }
}

TEST_CASE("mu upper bound") {
    CHECK(mu_upper_bound(24, 4) == 6);
    CHECK(mu_upper_bound(84, 7) == 12);
    CHECK(mu_upper_bound(17, 1) == 17);
    CHECK_THROWS_AS(mu_upper_bound(10, 4), NonDivisor);
}

TEST_CASE("the exceptional table is reproduced bit-exactly") {
    const auto rows = enumerate_exceptional_types();
    REQUIRE(rows.size() == 8);
    const std::vector<std::vector<int>> types = {{2, 2, 2, 3}, {2, 3, 7}, {2, 3, 8}, {2, 3, 9},
                                                 {2, 4, 5},    {2, 4, 6}, {2, 5, 5}, {3, 3, 4}};
    const std::vector<long long> m_coeffs = {4, 12, 6, 4, 8, 4, 4, 6};
    const std::vector<long long> order_coeffs = {12, 84, 48, 36, 40, 24, 20, 24};
    for (size_t i = 0; i < 8; ++i) {
        CHECK(rows[i].type.quotient_genus() == 0);
        CHECK(rows[i].type.branch_orders() == types[i]);
        CHECK(rows[i].m_coefficient == m_coeffs[i]);
        CHECK(rows[i].order_coefficient == order_coeffs[i]);
    }
}

TEST_CASE("rigid triangle flag") {
    CHECK(is_rigid_triangle(CurveType(0, {3, 3, 4})));
    CHECK(is_rigid_triangle(CurveType(0, {2, 3, 7})));
    CHECK_FALSE(is_rigid_triangle(CurveType(0, {2, 2, 2, 3})));
    CHECK_FALSE(is_rigid_triangle(CurveType(1, {2, 2, 2})));
}

TEST_CASE("curve actions validate and derive") {
    const FiniteGroup g = builtin("sl2(3)");
    const std::vector<int> explicit_vector{g.element_with_permutation(sl2_matrix_permutation(3, 0, 2, 1, 2)),
                                 g.element_with_permutation(sl2_matrix_permutation(3, 0, 1, 2, 2)),
                                 g.element_with_permutation(sl2_matrix_permutation(3, 2, 2, 2, 1))};
    const CurveAction action = CurveAction::create(g, CurveType(0, {3, 3, 4}), explicit_vector);
    CHECK(action.genus == 2);
    CHECK(action.fixed_set == fixed_point_elements(g, explicit_vector));
    CHECK(riemann_hurwitz_genus(g.order(), 0, action.type.branch_orders()) == action.genus);

    // wrong orders
    CHECK_THROWS_AS(CurveAction::create(g, CurveType(0, {2, 3, 4}), explicit_vector), Error);
    // genus 1 is rejected
    const FiniteGroup c6 = builtin("cyclic(6)");
    const auto torus_vectors = enumerate_generating_vectors(c6, CurveType(0, {2, 3, 6}));
    REQUIRE_FALSE(torus_vectors.empty());
    CHECK_THROWS_AS(CurveAction::create(c6, CurveType(0, {2, 3, 6}), torus_vectors[0].elements),
                    GenusTooSmall);
}
