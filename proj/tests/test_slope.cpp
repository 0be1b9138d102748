#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "gpl/slope.hpp"

using namespace gpl;

namespace {

AdmissibleConfiguration example_configuration(long long e1) {
    const long long d2 = e1 / -2; // graphs over the first factor, e2 = -2
    std::vector<BranchComponent> comps(3, BranchComponent{1, d2, {{3, 1}}});
    return AdmissibleConfiguration(e1, -2, 3, std::move(comps), true);
}

struct RandomGaloisSimple {
    AdmissibleConfiguration config;
    std::vector<int> r_list;
};

// valid Galois simple configuration: graphs over the first factor, one
// ramification index per component, common covering degree
RandomGaloisSimple random_galois_simple(std::mt19937& rng) {
    std::uniform_int_distribution<long long> genus2(2, 6);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<int> rpick(2, 9);

    const long long e2 = 2 - 2 * genus2(rng);
    const long long e1 = e2 * mult(rng); // divisibility keeps d2 integral
    const int m = count(rng);
    std::vector<int> r_list;
    long long d = 1;
    for (int i = 0; i < m; ++i) {
        r_list.push_back(rpick(rng));
        d = std::lcm(d, static_cast<long long>(r_list.back()));
    }
    d *= mult(rng);

    std::vector<BranchComponent> comps;
    for (int r : r_list) {
        const long long sheets = d / r; // t_i * n_i
        std::uniform_int_distribution<long long> split(1, sheets);
        long long t = split(rng);
        while (sheets % t != 0) --t;
        BranchComponent comp{1, e1 / e2, {}};
        for (long long j = 0; j < t; ++j) comp.strata.push_back(Stratum{r, sheets / t});
        comps.push_back(std::move(comp));
    }
    return {AdmissibleConfiguration(e1, e2, d, std::move(comps), true), std::move(r_list)};
}

} // namespace

TEST_CASE("component Euler numbers") {
    CHECK(euler_of_component(-2, -2, 1, 1) == -2);
    CHECK(euler_of_component(-2, -4, 2, 1) == -4);
    CHECK_THROWS_AS(euler_of_component(-2, -2, 2, 3), InconsistentDegrees);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(AdmissibleConfiguration(-1, -2, 1, {}, false), Error); // odd
    CHECK_THROWS_AS(AdmissibleConfiguration(0, -2, 1, {}, false), Error);  // genus < 2
    CHECK_THROWS_AS(AdmissibleConfiguration(-2, -2, 0, {}, false), Error); // degree
    // strata must sum to the degree
    CHECK_THROWS_AS(AdmissibleConfiguration(-2, -2, 4, {BranchComponent{1, 1, {{3, 1}}}}, false), Error);
    // Galois needs a single index per component
    CHECK_THROWS_AS(
        AdmissibleConfiguration(-2, -2, 7, {BranchComponent{1, 1, {{3, 1}, {2, 2}}}}, true), Error);
    // mixed strata are fine without the flag
    const AdmissibleConfiguration mixed(-2, -2, 7, {BranchComponent{1, 1, {{3, 1}, {2, 2}}}}, false);
    CHECK_FALSE(mixed.galois());
    CHECK(mixed.simple());
    // degree mismatch across the two factors
    CHECK_THROWS_AS(AdmissibleConfiguration(-2, -4, 2, {BranchComponent{1, 2, {{2, 1}}}}, false),
                    InconsistentDegrees);
}

TEST_CASE("etale coverings have slope 2 and signature 0") {
    const AdmissibleConfiguration etale(-2, -2, 1, {}, false);
    const SurfaceInvariants inv = invariants(etale);
    CHECK(inv.c2 == Rat(4));
    CHECK(inv.c1sq == Rat(8));
    CHECK(inv.sigma == Rat(0));
    CHECK(inv.slope == Rat(2));
    CHECK(abstract_slope(etale) == Rat(2));
}

TEST_CASE("the example configuration has slope 8/3 for every admissible e1") {
    for (long long e1 : {-2, -4, -6, -10, -40}) {
        const AdmissibleConfiguration config = example_configuration(e1);
        CHECK(config.galois());
        CHECK(config.simple());
        CHECK(config.very_simple() == (e1 == -2));
        const SurfaceInvariants inv = invariants(config);
        CHECK(inv.slope == Rat(8, 3));
        CHECK(abstract_slope(config) == Rat(8, 3));
        CHECK(inv.sigma * 3 == inv.c1sq - inv.c2 * 2);
    }
}

TEST_CASE("hand-expanded single-component configuration") {
    // r=2, n=1, d=2, e1=e2=-2, graphs both ways: e(D)=-2, beta=1,
    // c2 = 2*4 + 2 = 10, c1^2 = 2*10 - (3/2)(-2) = 23
    const AdmissibleConfiguration config(-2, -2, 2, {BranchComponent{1, 1, {{2, 1}}}}, true);
    const SurfaceInvariants inv = invariants(config);
    CHECK(inv.c2 == Rat(10));
    CHECK(inv.c1sq == Rat(23));
    CHECK(abstract_slope(config) == Rat(23, 10));
    CHECK(inv.slope == Rat(23, 10));
}

TEST_CASE("galois slope formula") {
    CHECK(galois_slope({}, {}, -2, -2) == Rat(2));
    const std::vector<long long> eulers{-2, -2, -2};
    const std::vector<int> rs{3, 3, 3};
    CHECK(galois_slope(eulers, rs, -2, -2) == Rat(8, 3));
    CHECK_THROWS_AS(galois_slope(std::vector<long long>{-2}, std::vector<int>{}, -2, -2), Error);
}

TEST_CASE("simple galois slope values") {
    CHECK(simple_galois_slope(2, std::vector<int>{3, 3, 3}) == Rat(8, 3));
    CHECK(simple_galois_slope(2, std::vector<int>(8, 2)) == Rat(3));
    for (int r = 2; r <= 12; ++r) {
        // m=1 at genus 2: direct substitution
        const Rat expected = Rat(2) + (Rat(1) - Rat(1, static_cast<long long>(r) * r)) / (Rat(3) - Rat(1, r));
        CHECK(simple_galois_slope(2, std::vector<int>{r}) == expected);
    }
    CHECK_THROWS_AS(simple_galois_slope(1, std::vector<int>{3}), Error);
    CHECK_THROWS_AS(simple_galois_slope(2, std::vector<int>{}), Error);
}

TEST_CASE("slope formulas agree on random Galois simple configurations") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        const RandomGaloisSimple sample = random_galois_simple(rng);
        const AdmissibleConfiguration& config = sample.config;

        const SurfaceInvariants inv = invariants(config);
        const Rat via_abstract = abstract_slope(config);
        std::vector<long long> eulers;
        for (int i = 0; i < config.num_components(); ++i) eulers.push_back(config.euler_of_component(i));
        const Rat via_galois = galois_slope(eulers, sample.r_list, config.e1(), config.e2());
        const Rat via_simple = simple_galois_slope(config.genus_b2(), sample.r_list);

        CHECK(inv.slope == via_abstract);
        CHECK(via_abstract == via_galois);
        CHECK(via_galois == via_simple);
        CHECK(inv.sigma * 3 == inv.c1sq - inv.c2 * 2);
    }
}

TEST_CASE("signature identity also holds off the Galois simple locus") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> t_pick(1, 4);
    std::uniform_int_distribution<long long> d1_pick(1, 4);
    std::uniform_int_distribution<int> r_pick(2, 7);
    std::uniform_int_distribution<int> m_pick(0, 4);
    for (int trial = 0; trial < 10000; ++trial) {
        const long long t = t_pick(rng), d1 = d1_pick(rng), dd2 = d1_pick(rng);
        const long long e1 = -2 * dd2 * t, e2 = -2 * d1 * t;
        const int m = m_pick(rng);
        // build strata summing to a shared degree d
        const int r0 = r_pick(rng);
        const long long d = static_cast<long long>(r0) * (1 + m_pick(rng));
        std::vector<BranchComponent> comps;
        bool feasible = true;
        for (int i = 0; i < m; ++i) {
            BranchComponent comp{d1, dd2, {}};
            long long remaining = d;
            while (remaining >= 2) {
                const int r = std::min<long long>(r_pick(rng), remaining);
                if (r < 2) break;
                const long long n = std::uniform_int_distribution<long long>(1, remaining / r)(rng);
                comp.strata.push_back(Stratum{r, n});
                remaining -= n * r;
            }
            if (remaining != 0) {
                feasible = false;
                break;
            }
            comps.push_back(std::move(comp));
        }
        if (!feasible) continue;
        const AdmissibleConfiguration config(e1, e2, d, std::move(comps), false);
        const SurfaceInvariants inv = invariants(config);
        CHECK(inv.sigma * 3 == inv.c1sq - inv.c2 * 2);
        CHECK(abstract_slope(config) == inv.slope);
    }
}

TEST_CASE("slope bound verdicts") {
    const auto equal = check_slope_bound(2, std::vector<int>{3, 3, 3});
    CHECK(equal.verdict == BoundVerdict::equal);
    CHECK(equal.slope == Rat(8, 3));

    CHECK(check_slope_bound(2, std::vector<int>{3, 3, 4}).verdict == BoundVerdict::below);
    CHECK(check_slope_bound(2, std::vector<int>{2, 2, 2}).verdict == BoundVerdict::below);
    CHECK(check_slope_bound(4, std::vector<int>{3, 3, 3}).verdict == BoundVerdict::below);

    CHECK_THROWS_AS(check_slope_bound(2, std::vector<int>{2, 2, 2, 2}), PreconditionViolated);
}

TEST_CASE("slope bound holds exhaustively at small genus") {
    for (long long g = 2; g <= 3; ++g) {
        std::vector<int> rs;
        auto rec = [&](auto&& self, int low) -> void {
            if (!rs.empty()) {
                const auto check = check_slope_bound(g, rs);
                const bool extremal = static_cast<long long>(rs.size()) == 3 * (g - 1) &&
                                      std::all_of(rs.begin(), rs.end(), [](int r) { return r == 3; });
                CHECK((check.verdict == BoundVerdict::equal) == extremal);
                CHECK(check.slope <= Rat(8, 3));
                CHECK(check.slope > Rat(2));
            }
            if (static_cast<long long>(rs.size()) == 3 * (g - 1)) return;
            for (int r = low; r <= 12; ++r) {
                rs.push_back(r);
                self(self, r);
                rs.pop_back();
            }
        };
        rec(rec, 2);
    }
}

TEST_CASE("dropping the last component decreases the slope") {
    CHECK(dropping_last_component_decreases_slope(2, std::vector<int>{3, 3, 3}));
    CHECK(dropping_last_component_decreases_slope(3, std::vector<int>{2, 5}));
    CHECK_THROWS_AS(dropping_last_component_decreases_slope(2, std::vector<int>{2, 2, 2, 2, 2}),
                    PreconditionViolated);
    CHECK_THROWS_AS(dropping_last_component_decreases_slope(2, std::vector<int>{2}),
                    PreconditionViolated);

    for (long long g = 2; g <= 3; ++g) {
        std::vector<int> rs;
        auto rec = [&](auto&& self, int low) -> void {
            if (rs.size() >= 2) CHECK(dropping_last_component_decreases_slope(g, rs));
            if (static_cast<long long>(rs.size()) == 4 * (g - 1)) return;
            for (int r = low; r <= 12; ++r) {
                rs.push_back(r);
                self(self, r);
                rs.pop_back();
            }
        };
        rec(rec, 2);
    }
}

TEST_CASE("double-cover slope boundary") {
    CHECK(betterbound_slope(8, 2) == Rat(3));
    CHECK(betterbound_slope(3, 2) == Rat(5, 2));
    CHECK(betterbound_slope(16, 3) == Rat(3));
    CHECK(betterbound_slope(1, 2) == Rat(2)); // odd m drops its only component
    CHECK(betterbound_slope(7, 2) == betterbound_slope(6, 2));
    for (long long g = 2; g <= 6; ++g) {
        CHECK(betterbound_slope(8 * (g - 1), g) == Rat(3));
        for (long long m = 2; m < 8 * (g - 1); m += 2) CHECK(betterbound_slope(m, g) < Rat(3));
    }
}

TEST_CASE("cyclic cover fibre genus") {
    CHECK(cyclic_cover_fiber_genus(3, 2, 3) == 7);
    CHECK(cyclic_cover_fiber_genus(2, 2, 0) == 3);
    CHECK_THROWS_AS(cyclic_cover_fiber_genus(2, 2, 1), NonIntegralGenus);
    CHECK_THROWS_AS(cyclic_cover_fiber_genus(1, 2, 0), Error);
}

TEST_CASE("branch divisibility") {
    CHECK(branch_divisibility_ok(3, 3));
    CHECK_FALSE(branch_divisibility_ok(3, 4));
    CHECK(branch_divisibility_ok(2, 8));
    CHECK(branch_divisibility_ok(5, 0));
}

TEST_CASE("configuration files parse") {
    std::istringstream good("# demo\ne1 -2\ne2 -2\nd 3\ngalois yes\n"
                            "component d1 1 d2 1 strata 3:1\n"
                            "component d1 1 d2 1 strata 3:1\n"
                            "component d1 1 d2 1 strata 3:1\n");
    const AdmissibleConfiguration config = parse_configuration(good);
    CHECK(abstract_slope(config) == Rat(8, 3));

    std::istringstream multi("e1 -2\ne2 -2\nd 7\ngalois no\ncomponent d1 1 d2 1 strata 3:1,2:2\n");
    CHECK(parse_configuration(multi).components()[0].strata.size() == 2);

    SUBCASE("missing field") {
        std::istringstream in("e1 -2\ne2 -2\nd 3\n");
        CHECK_THROWS_AS(parse_configuration(in), ParseError);
    }
    SUBCASE("bad stratum carries the line number") {
        std::istringstream in("e1 -2\ne2 -2\nd 3\ngalois yes\ncomponent d1 1 d2 1 strata 3-1\n");
        try {
            parse_configuration(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_number == 5);
        }
    }
    SUBCASE("unknown key") {
        std::istringstream in("e3 -2\n");
        CHECK_THROWS_AS(parse_configuration(in), ParseError);
    }
}
