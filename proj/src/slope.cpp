#include "gpl/slope.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "gpl/errors.hpp"

namespace gpl {

long long euler_of_component(long long e1, long long e2, long long d1, long long d2) {
    if (d1 < 1 || d2 < 1) throw Error("component degrees must be positive");
    if (d1 * e1 != d2 * e2)
        throw InconsistentDegrees("component Euler number mismatch: " + std::to_string(d1) + "*" + std::to_string(e1) + " != " + std::to_string(d2) + "*" + std::to_string(e2));
    return d1 * e1;
}

AdmissibleConfiguration::AdmissibleConfiguration(long long e1, long long e2, long long d,
                                                 std::vector<BranchComponent> components,
                                                 bool galois)
    : e1_(e1), e2_(e2), d_(d), components_(std::move(components)), galois_(galois) {
    for (long long e : {e1_, e2_})
        if (e > -2 || e % 2 != 0)
            throw Error("factor Euler numbers must be negative even integers (genus >= 2)");
    if (d_ < 1) throw Error("covering degree must be positive");
    simple_ = true;
    for (const BranchComponent& comp : components_) {
        if (comp.strata.empty()) throw Error("every component needs at least one stratum");
        long long total = 0;
        for (const Stratum& s : comp.strata) {
            if (s.r < 2) throw Error("ramification indices must be >= 2");
            if (s.n < 1) throw Error("stratum multiplicities must be >= 1");
            total += s.n * s.r;
        }
        if (total != d_)
            throw Error("component strata sum to " + std::to_string(total) + ", expected the covering degree " + std::to_string(d_));
        gpl::euler_of_component(e1_, e2_, comp.d1, comp.d2);
        if (galois_)
            for (const Stratum& s : comp.strata)
                if (s.r != comp.strata.front().r)
                    throw Error("a Galois configuration has one ramification index per component");
        simple_ = simple_ && comp.d1 == 1;
    }
}

long long AdmissibleConfiguration::euler_of_component(int i) const {
    const BranchComponent& comp = components_.at(i);
    return gpl::euler_of_component(e1_, e2_, comp.d1, comp.d2);
}

SurfaceInvariants invariants(const AdmissibleConfiguration& config) {
    Rat c2 = Rat(config.d()) * config.e1() * config.e2();
    Rat correction; // sum over strata of n(r-1)(r+1)/r e(D_i)
    for (int i = 0; i < config.num_components(); ++i) {
        const BranchComponent& comp = config.components()[i];
        const long long euler = config.euler_of_component(i);
        long long beta = 0;
        for (const Stratum& s : comp.strata) {
            beta += s.n * (s.r - 1);
            correction += Rat(s.n * (s.r - 1) * (s.r + 1), s.r) * euler;
        }
        c2 -= Rat(beta) * euler;
    }
    SurfaceInvariants inv;
    inv.c2 = c2;
    inv.c1sq = Rat(2) * c2 - correction;
    inv.sigma = (inv.c1sq - Rat(2) * inv.c2) / 3;
    if (inv.c2.is_zero()) throw ZeroDenominator("c2 vanishes; slope undefined");
    inv.slope = inv.c1sq / inv.c2;
    return inv;
}

Rat abstract_slope(const AdmissibleConfiguration& config) {
    Rat numerator;
    Rat denominator = Rat(config.d()) * config.e1() * config.e2();
    for (int i = 0; i < config.num_components(); ++i) {
        const BranchComponent& comp = config.components()[i];
        const long long euler = config.euler_of_component(i);
        long long beta = 0;
        for (const Stratum& s : comp.strata) {
            numerator -= Rat(s.n * (s.r - 1) * (s.r + 1), s.r) * euler;
            beta += s.n * (s.r - 1);
        }
        denominator -= Rat(beta) * euler;
    }
    if (denominator.is_zero()) throw ZeroDenominator("abstract slope has zero denominator");
    return Rat(2) + numerator / denominator;
}

Rat galois_slope(std::span<const long long> component_eulers, std::span<const int> r_list,
                 long long e1, long long e2) {
    if (component_eulers.size() != r_list.size())
        throw Error("galois slope needs one Euler number per ramification index");
    Rat numerator;
    Rat denominator = Rat(e1) * e2;
    for (size_t i = 0; i < r_list.size(); ++i) {
        const int r = r_list[i];
        if (r < 2) throw Error("ramification indices must be >= 2");
        numerator -= Rat(static_cast<long long>(r) * r - 1, static_cast<long long>(r) * r) * component_eulers[i];
        denominator -= Rat(r - 1, r) * component_eulers[i];
    }
    if (denominator.is_zero()) throw ZeroDenominator("galois slope has zero denominator");
    return Rat(2) + numerator / denominator;
}

std::pair<Rat, Rat> simple_galois_excess(long long genus, long long m,
                                         const Rat& sum_inv_r, const Rat& sum_inv_r2) {
    Rat num = Rat(1) - sum_inv_r2 / m;
    Rat den = Rat(2 * genus - 2, m) + 1 - sum_inv_r / m;
    return {std::move(num), std::move(den)};
}

Rat simple_galois_slope(long long genus, std::span<const int> r_list) {
    if (genus < 2) throw Error("simple Galois slope needs genus >= 2");
    if (r_list.empty()) throw Error("simple Galois slope needs at least one component");
    Rat s1, s2;
    for (int r : r_list) {
        if (r < 2) throw Error("ramification indices must be >= 2");
        s1 += Rat(1, r);
        s2 += Rat(1, static_cast<long long>(r) * r);
    }
    auto [num, den] = simple_galois_excess(genus, static_cast<long long>(r_list.size()), s1, s2);
    return Rat(2) + num / den;
}

SlopeBoundCheck check_slope_bound(long long genus, std::span<const int> r_list) {
    const long long m = static_cast<long long>(r_list.size());
    if (genus < 2) throw Error("slope bound check needs genus >= 2");
    if (m > 3 * (genus - 1))
        throw PreconditionViolated("slope bound requires m <= 3(g-1): m=" + std::to_string(m) + ", g=" + std::to_string(genus));
    SlopeBoundCheck check;
    check.slope = simple_galois_slope(genus, r_list);
    const Rat bound(8, 3);
    check.verdict = check.slope < bound  ? BoundVerdict::below
                    : check.slope == bound ? BoundVerdict::equal
                                           : BoundVerdict::above;
    const bool extremal = m == 3 * (genus - 1) &&
                          std::all_of(r_list.begin(), r_list.end(), [](int r) { return r == 3; });
    if ((check.verdict == BoundVerdict::equal) != extremal || check.verdict == BoundVerdict::above)
        throw Error("slope bound violated at g=" + std::to_string(genus) + ", m=" + std::to_string(m) + " (internal inconsistency)");
    return check;
}

bool dropping_last_component_decreases_slope(long long genus, std::span<const int> r_list) {
    if (genus < 2) throw Error("slope monotonicity check needs genus >= 2");
    if (r_list.size() < 2)
        throw PreconditionViolated("monotonicity check needs at least two components");
    if (static_cast<long long>(r_list.size()) > 4 * (genus - 1))
        throw PreconditionViolated("monotonicity check requires m+1 <= 4(g-1)");
    Rat full = simple_galois_slope(genus, r_list);
    Rat dropped = simple_galois_slope(genus, r_list.subspan(0, r_list.size() - 1));
    const bool decreases = dropped < full;
    if (!decreases)
        throw Error("slope monotonicity violated at g=" + std::to_string(genus) + " (internal inconsistency)");
    return decreases;
}

Rat betterbound_slope(long long m, long long genus) {
    if (genus < 2) throw Error("betterbound slope needs genus >= 2");
    if (m < 1) throw Error("betterbound slope needs m >= 1");
    // an odd component count leaves one graph out of the branch locus
    const long long effective = m % 2 == 0 ? m : m - 1;
    if (effective == 0) return Rat(2);
    std::vector<int> twos(effective, 2);
    return simple_galois_slope(genus, twos);
}

long long cyclic_cover_fiber_genus(int r, long long genus_base, long long branch_points) {
    if (r < 2) throw Error("cyclic cover degree must be >= 2");
    if (genus_base < 2) throw Error("cyclic cover base genus must be >= 2");
    if (branch_points < 0) throw Error("branch point count must be >= 0");
    const long long doubled = r * (2 * genus_base - 2) + branch_points * (r - 1);
    if (doubled % 2 != 0)
        throw NonIntegralGenus("2g-2 = " + std::to_string(doubled) + " is odd; no such cover");
    return doubled / 2 + 1;
}

bool branch_divisibility_ok(int r, long long m) {
    if (r < 2) throw Error("cyclic cover degree must be >= 2");
    if (m < 0) throw Error("component count must be >= 0");
    return m % r == 0;
}

// ---------------------------------------------------------------------------
// configuration files

AdmissibleConfiguration parse_configuration(std::istream& in) {
    bool have_e1 = false, have_e2 = false, have_d = false, have_galois = false;
    long long e1 = 0, e2 = 0, d = 0;
    bool galois = false;
    std::vector<BranchComponent> components;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string key;
        if (!(line >> key)) continue;

        auto read_int = [&](long long& out) {
            if (!(line >> out)) throw ParseError(lineno, "expected an integer after '" + key + "'");
        };
        if (key == "e1") {
            read_int(e1);
            have_e1 = true;
        } else if (key == "e2") {
            read_int(e2);
            have_e2 = true;
        } else if (key == "d") {
            read_int(d);
            have_d = true;
        } else if (key == "galois") {
            std::string v;
            if (!(line >> v) || (v != "yes" && v != "no"))
                throw ParseError(lineno, "expected 'yes' or 'no' after 'galois'");
            galois = v == "yes";
            have_galois = true;
        } else if (key == "component") {
            BranchComponent comp;
            std::string kw1, kw2, kw3, strata;
            if (!(line >> kw1 >> comp.d1 >> kw2 >> comp.d2 >> kw3 >> strata) || kw1 != "d1" || kw2 != "d2" || kw3 != "strata")
                throw ParseError(lineno, "expected 'component d1 <int> d2 <int> strata r:n[,r:n...]'");
            std::string extra;
            if (line >> extra) throw ParseError(lineno, "trailing tokens after strata list");
            size_t pos = 0;
            while (pos < strata.size()) {
                size_t comma = strata.find(',', pos);
                std::string item = strata.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                size_t colon = item.find(':');
                Stratum s;
                try {
                    if (colon == std::string::npos) throw std::invalid_argument("");
                    size_t used = 0;
                    s.r = std::stoi(item.substr(0, colon), &used);
                    if (used != colon) throw std::invalid_argument("");
                    s.n = std::stoll(item.substr(colon + 1), &used);
                    if (used != item.size() - colon - 1) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad stratum '" + item + "', expected r:n");
                }
                comp.strata.push_back(s);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (comp.strata.empty()) throw ParseError(lineno, "empty strata list");
            components.push_back(std::move(comp));
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    if (!have_e1 || !have_e2 || !have_d || !have_galois)
        throw ParseError(lineno, "configuration needs e1, e2, d and galois");
    return AdmissibleConfiguration(e1, e2, d, std::move(components), galois);
}

} // namespace gpl
