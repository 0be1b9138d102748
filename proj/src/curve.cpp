#include "gpl/curve.hpp"

#include <algorithm>
#include <set>

#include "gpl/rat.hpp"

namespace gpl {

CurveType::CurveType(int quotient_genus, std::vector<int> branch_orders)
    : h_(quotient_genus), nu_(std::move(branch_orders)) {
    if (h_ < 0) throw Error("quotient genus must be >= 0");
    for (int nu : nu_)
        if (nu < 2) throw Error("branch multiplicities must be >= 2");
    std::sort(nu_.begin(), nu_.end());
}

std::string CurveType::str() const {
    std::string s = "h=" + std::to_string(h_) + ";";
    for (size_t i = 0; i < nu_.size(); ++i) s += (i ? "," : "") + std::to_string(nu_[i]);
    return s;
}

std::string CurveType::paren() const {
    std::string s = "(";
    for (size_t i = 0; i < nu_.size(); ++i) s += (i ? "," : "") + std::to_string(nu_[i]);
    return s + ")";
}

CurveType parse_curve_type(const std::string& text) {
    auto semi = text.find(';');
    if (text.rfind("h=", 0) != 0 || semi == std::string::npos)
        throw Error("curve type must look like 'h=0;2,3,7' (got '" + text + "')");
    int h = 0;
    try {
        size_t used = 0;
        h = std::stoi(text.substr(2, semi - 2), &used);
        if (used != semi - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw Error("bad quotient genus in curve type '" + text + "'");
    }
    std::vector<int> nu;
    size_t pos = semi + 1;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            size_t used = 0;
            nu.push_back(std::stoi(item, &used));
            if (used != item.size() || item.empty()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw Error("bad branch multiplicity '" + item + "' in curve type '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return CurveType(h, std::move(nu));
}

long long riemann_hurwitz_genus(long long group_order, int quotient_genus,
                                std::span<const int> branch_orders) {
    if (group_order < 1) throw Error("group order must be positive");
    if (quotient_genus < 0) throw Error("quotient genus must be >= 0");
    Rat chi = Rat(2 * static_cast<long long>(quotient_genus) - 2);
    for (int nu : branch_orders) {
        if (nu < 2) throw Error("branch multiplicities must be >= 2");
        chi += Rat(nu - 1, nu);
    }
    Rat genus = Rat(group_order) * chi / 2 + 1;
    if (!genus.is_integer())
        throw NonIntegralGenus("Hurwitz formula yields non-integral genus " + genus.str());
    if (genus.sign() < 0)
        throw NegativeGenus("Hurwitz formula yields negative genus " + genus.str());
    return static_cast<long long>(genus.to_integer());
}

std::vector<int> fixed_point_elements(const FiniteGroup& group, std::span<const int> vector_elements) {
    const int n = group.order();
    std::vector<char> in(n, 0);
    for (int gi : vector_elements) {
        int power = gi;
        while (power != FiniteGroup::identity) {
            for (int h = 0; h < n; ++h) in[group.conjugate(h, power)] = 1;
            power = group.mul(power, gi);
        }
    }
    in[FiniteGroup::identity] = 0;
    std::vector<int> fixed;
    for (int x = 0; x < n; ++x)
        if (in[x]) fixed.push_back(x);
    return fixed;
}

std::vector<GeneratingVector> enumerate_generating_vectors(const FiniteGroup& group,
                                                           const CurveType& type,
                                                           bool require_distinct) {
    if (type.quotient_genus() != 0)
        throw Error("vector enumeration requires quotient genus 0");
    const auto& nu = type.branch_orders();
    const int k = static_cast<int>(nu.size());
    if (k < 3) throw Error("vector enumeration requires at least 3 branch points");

    const int n = group.order();
    std::vector<int> orders = group.element_orders();

    // candidates per slot; slot 0 is restricted to class representatives,
    // which is harmless because conjugation preserves everything we report
    std::vector<std::vector<int>> slot(k);
    for (int x = 0; x < n; ++x)
        for (int i = 1; i < k; ++i)
            if (orders[x] == nu[i]) slot[i].push_back(x);
    for (int rep : group.conjugacy_class_representatives())
        if (orders[rep] == nu[0]) slot[0].push_back(rep);

    std::set<std::vector<int>> canonical;
    std::vector<int> chosen(k);

    auto canonicalize = [&](const std::vector<int>& v) {
        std::vector<int> best, cand(k);
        for (int h = 0; h < n; ++h) {
            for (int i = 0; i < k; ++i) cand[i] = group.conjugate(h, v[i]);
            if (best.empty() || cand < best) best = cand;
        }
        return best;
    };

    auto emit = [&]() {
        // last slot is forced by the product-one relation
        int prod = FiniteGroup::identity;
        for (int i = 0; i + 1 < k; ++i) prod = group.mul(prod, chosen[i]);
        const int last = group.inv(prod);
        if (orders[last] != nu[k - 1]) return;
        chosen[k - 1] = last;
        // the last entry is a product of the others, so generation by all k
        // equals generation by the first k-1
        if (static_cast<int>(group.subgroup_generated(std::span<const int>(chosen.data(), k - 1)).size()) != n)
            return;
        canonical.insert(canonicalize(chosen));
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k - 1) {
            emit();
            return;
        }
        for (int x : slot[depth]) {
            chosen[depth] = x;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);

    std::vector<GeneratingVector> out;
    for (const auto& v : canonical) {
        if (require_distinct) {
            std::vector<int> sorted = v;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        }
        out.push_back(GeneratingVector{&group, v});
    }
    return out;
}

long long mu_upper_bound(long long group_order, int nu_k) {
    if (group_order < 1 || nu_k < 1) throw Error("mu bound needs positive order and multiplicity");
    if (group_order % nu_k != 0)
        throw NonDivisor(std::to_string(nu_k) + " does not divide the group order " + std::to_string(group_order));
    return group_order / nu_k;
}

std::vector<ExceptionalType> enumerate_exceptional_types() {
    // lambda = nu_k (-2 + sum (1 - 1/nu_i)) is linear and increasing in nu_k
    // for a fixed prefix, so the scan below terminates quickly; k >= 5 and
    // nu >= 24 are far beyond the feasible region.
    const Rat two_thirds(2, 3);
    std::vector<ExceptionalType> rows;
    std::vector<int> nu;

    auto scan = [&](auto&& self, int k, Rat prefix_sum) -> void {
        const int depth = static_cast<int>(nu.size());
        const int low = depth == 0 ? 2 : nu.back();
        if (depth == k - 1) {
            for (int last = low; last <= 24; ++last) {
                Rat lambda = Rat(last) * (prefix_sum + Rat(last - 1, last) - 2);
                if (lambda.sign() <= 0) continue;
                if (lambda >= two_thirds) break;
                nu.push_back(last);
                ExceptionalType row;
                row.type = CurveType(0, nu);
                row.m_coefficient = static_cast<long long>((Rat(2) / lambda).to_integer());
                row.order_coefficient = static_cast<long long>((Rat(2 * last) / lambda).to_integer());
                rows.push_back(std::move(row));
                nu.pop_back();
            }
            return;
        }
        for (int v = low; v <= 24; ++v) {
            nu.push_back(v);
            self(self, k, prefix_sum + Rat(v - 1, v));
            nu.pop_back();
        }
    };
    for (int k = 3; k <= 5; ++k) scan(scan, k, Rat(0));

    std::sort(rows.begin(), rows.end(),
              [](const ExceptionalType& a, const ExceptionalType& b) { return a.type < b.type; });
    return rows;
}

bool is_rigid_triangle(const CurveType& type) {
    return type.quotient_genus() == 0 && type.num_branch_points() == 3;
}

CurveAction CurveAction::create(const FiniteGroup& group, const CurveType& type,
                                std::vector<int> elements) {
    if (type.quotient_genus() != 0) throw Error("curve actions require quotient genus 0");
    const auto& nu = type.branch_orders();
    if (elements.size() != nu.size())
        throw Error("vector length " + std::to_string(elements.size()) + " does not match type " + type.paren());
    for (size_t i = 0; i < elements.size(); ++i)
        if (group.element_order(elements[i]) != nu[i])
            throw Error("entry " + std::to_string(i) + " has order " + std::to_string(group.element_order(elements[i])) + ", expected " + std::to_string(nu[i]));
    int prod = FiniteGroup::identity;
    for (int x : elements) prod = group.mul(prod, x);
    if (prod != FiniteGroup::identity) throw Error("vector entries do not multiply to the identity");
    if (static_cast<int>(group.subgroup_generated(elements).size()) != group.order())
        throw Error("vector entries do not generate the group");

    CurveAction action;
    action.group = &group;
    action.type = type;
    action.genus = riemann_hurwitz_genus(group.order(), 0, nu);
    if (action.genus < 2)
        throw GenusTooSmall("derived curve genus " + std::to_string(action.genus) + " is below 2");
    action.fixed_set = fixed_point_elements(group, elements);
    action.vector = GeneratingVector{&group, std::move(elements)};
    return action;
}

} // namespace gpl
