#include "gpl/group.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace gpl {

namespace {

struct PermHash {
    size_t operator()(const Perm& p) const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : p) h = (h ^ static_cast<size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};

bool is_bijection(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<char> seen(degree, 0);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm compose(const Perm& first_applied_last, const Perm& applied_first) {
    const Perm& a = first_applied_last;
    const Perm& b = applied_first;
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

} // namespace

void FiniteGroup::check_index(int x) const {
    if (x < 0 || x >= n_) throw Error("element index " + std::to_string(x) + " out of range for group of order " + std::to_string(n_));
}

void FiniteGroup::finalize() {
    const int n = n_;
    if (n <= 0) throw NotAGroup(name_ + ": empty multiplication table");

    // locate the two-sided identity
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = mul(cand, x) == x && mul(x, cand) == x;
        if (ok) e = cand;
    }
    if (e < 0) throw NotAGroup(name_ + ": no identity element");

    if (e != 0) {
        // relabel by the transposition (0 e)
        auto relabel = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
        std::vector<int> fixed(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                fixed[static_cast<size_t>(relabel(x)) * n + relabel(y)] = relabel(mul(x, y));
        mul_ = std::move(fixed);
        if (!perm_images_.empty()) std::swap(perm_images_[0], perm_images_[e]);
    }

    // every row and column must be a permutation of the element set
    std::vector<char> seen(n);
    for (int x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 0; y < n; ++y) {
            int v = mul(x, y);
            if (seen[v]) throw NotAGroup(name_ + ": row " + std::to_string(x) + " of the multiplication table is not a permutation");
            seen[v] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 0; y < n; ++y) {
            int v = mul(y, x);
            if (seen[v]) throw NotAGroup(name_ + ": column " + std::to_string(x) + " of the multiplication table is not a permutation");
            seen[v] = 1;
        }
    }

    inv_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (mul(x, y) == identity && mul(y, x) == identity) {
                inv_[x] = y;
                break;
            }
        }
        if (inv_[x] < 0) throw NotAGroup(name_ + ": element " + std::to_string(x) + " has no two-sided inverse");
    }

    auto assoc_fail = [&](int x, int y, int z) {
        throw NotAGroup(name_ + ": associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
    };
    if (n <= 600) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int xy = mul(x, y);
                for (int z = 0; z < n; ++z)
                    if (mul(xy, z) != mul(x, mul(y, z))) assoc_fail(x, y, z);
            }
    } else {
        // sampled check; the seed is fixed so validation stays reproducible
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 10 * n; ++t) {
            int x = pick(rng), y = pick(rng), z = pick(rng);
            if (mul(mul(x, y), z) != mul(x, mul(y, z))) assoc_fail(x, y, z);
        }
    }
}

FiniteGroup FiniteGroup::from_multiplication_table(std::string name,
                                                   const std::vector<std::vector<int>>& table) {
    FiniteGroup g;
    g.name_ = std::move(name);
    const int n = static_cast<int>(table.size());
    g.n_ = n;
    g.mul_.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n)
            throw NotAGroup(g.name_ + ": table is not square");
        for (int y = 0; y < n; ++y) {
            int v = table[x][y];
            if (v < 0 || v >= n)
                throw NotAGroup(g.name_ + ": entry (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
            g.mul_[static_cast<size_t>(x) * n + y] = v;
        }
    }
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string name, int degree,
                                           const std::vector<Perm>& generators, int order_cap) {
    if (degree < 1) throw Error(name + ": permutation degree must be positive");
    for (const Perm& p : generators)
        if (!is_bijection(p, degree))
            throw Error(name + ": generator is not a permutation of {0.." + std::to_string(degree - 1) + "}");

    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    // breadth-first closure under right multiplication by the generators;
    // for each element remember (parent, generator) so the full table can be
    // filled without composing all n^2 pairs
    std::vector<Perm> elems{id};
    std::unordered_map<Perm, int, PermHash> index{{id, 0}};
    std::vector<std::pair<int, int>> via{{-1, -1}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t gi = 0; gi < generators.size(); ++gi) {
            Perm p = compose(elems[head], generators[gi]);
            auto [it, fresh] = index.try_emplace(std::move(p), static_cast<int>(elems.size()));
            if (fresh) {
                if (static_cast<int>(elems.size()) >= order_cap)
                    throw OrderCapExceeded(name + ": closure exceeds order cap " + std::to_string(order_cap));
                elems.push_back(it->first);
                via.emplace_back(static_cast<int>(head), static_cast<int>(gi));
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    // column of each generator: z -> z * g
    std::vector<std::vector<int>> gencol(generators.size(), std::vector<int>(n));
    for (size_t gi = 0; gi < generators.size(); ++gi)
        for (int z = 0; z < n; ++z)
            gencol[gi][z] = index.at(compose(elems[z], generators[gi]));

    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = n;
    g.mul_.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) g.mul_[static_cast<size_t>(x) * n + 0] = x;
    for (int y = 1; y < n; ++y) {
        auto [parent, gi] = via[y];
        for (int x = 0; x < n; ++x)
            g.mul_[static_cast<size_t>(x) * n + y] = gencol[gi][g.mul(x, parent)];
    }
    g.perm_images_ = std::move(elems);
    g.finalize();
    return g;
}

int FiniteGroup::element_order(int x) const {
    check_index(x);
    int t = 1;
    int acc = x;
    while (acc != identity) {
        acc = mul(acc, x);
        ++t;
    }
    return t;
}

std::vector<int> FiniteGroup::element_orders() const {
    std::vector<int> orders(n_);
    for (int x = 0; x < n_; ++x) orders[x] = element_order(x);
    return orders;
}

std::vector<int> FiniteGroup::conjugacy_class(int x) const {
    check_index(x);
    std::vector<char> in(n_, 0);
    for (int g = 0; g < n_; ++g) in[conjugate(g, x)] = 1;
    std::vector<int> cls;
    for (int y = 0; y < n_; ++y)
        if (in[y]) cls.push_back(y);
    return cls;
}

std::vector<int> FiniteGroup::conjugacy_class_representatives() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> reps;
    for (int x = 0; x < n_; ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int y : conjugacy_class(x)) seen[y] = 1;
    }
    return reps;
}

std::vector<int> FiniteGroup::subgroup_generated(std::span<const int> gens) const {
    std::vector<char> in(n_, 0);
    std::vector<int> elems{identity};
    in[identity] = 1;
    for (int g : gens) {
        check_index(g);
        if (!in[g]) {
            in[g] = 1;
            elems.push_back(g);
        }
    }
    // worklist closure under products; inverses follow from finiteness
    for (size_t head = 0; head < elems.size(); ++head) {
        const int z = elems[head];
        for (size_t j = 0; j < elems.size(); ++j) {
            for (int w : {mul(z, elems[j]), mul(elems[j], z)}) {
                if (!in[w]) {
                    in[w] = 1;
                    elems.push_back(w);
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    if (n_ % static_cast<int>(elems.size()) != 0)
        throw Error(name_ + ": generated subgroup size " + std::to_string(elems.size()) + " does not divide the group order (corrupt table)");
    return elems;
}

int FiniteGroup::element_with_permutation(const Perm& p) const {
    for (int x = 0; x < static_cast<int>(perm_images_.size()); ++x)
        if (perm_images_[x] == p) return x;
    return -1;
}

// ---------------------------------------------------------------------------
// builtins

namespace {

constexpr int kBuiltinOrderCap = 4096;

FiniteGroup make_cyclic(const std::string& name, int n) {
    if (n < 1 || n > kBuiltinOrderCap) throw UnsupportedSpec(name + ": order out of range");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
    return FiniteGroup::from_multiplication_table(name, t);
}

FiniteGroup make_dihedral(const std::string& name, int n) {
    if (n < 1 || 2 * n > kBuiltinOrderCap) throw UnsupportedSpec(name + ": order out of range");
    const int order = 2 * n;
    // element i + n*j is the rotation r^i when j=0 and the reflection r^i s when j=1
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < 2; ++d) {
                    int rot = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
                    t[a + n * b][c + n * d] = rot + n * (b ^ d);
                }
    return FiniteGroup::from_multiplication_table(name, t);
}

FiniteGroup make_abelian(const std::string& name, const std::vector<int>& factors) {
    long long order = 1;
    for (int f : factors) {
        if (f < 1) throw UnsupportedSpec(name + ": factors must be positive");
        order *= f;
        if (order > kBuiltinOrderCap) throw UnsupportedSpec(name + ": order out of range");
    }
    const int n = static_cast<int>(order);
    auto add = [&](int x, int y) {
        int r = 0, place = 1;
        for (int f : factors) {
            r += place * ((x % f + y % f) % f);
            place *= f;
            x /= f;
            y /= f;
        }
        return r;
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = add(x, y);
    return FiniteGroup::from_multiplication_table(name, t);
}

FiniteGroup make_product(const std::string& name, const FiniteGroup& a, const FiniteGroup& b) {
    long long order = static_cast<long long>(a.order()) * b.order();
    if (order > kBuiltinOrderCap) throw UnsupportedSpec(name + ": order out of range");
    const int n = static_cast<int>(order), n2 = b.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = a.mul(x / n2, y / n2) * n2 + b.mul(x % n2, y % n2);
    return FiniteGroup::from_multiplication_table(name, t);
}

FiniteGroup make_symmetric(const std::string& name, int n) {
    if (n < 1 || n > 6) throw UnsupportedSpec(name + ": symmetric(n) supports 1 <= n <= 6");
    std::vector<Perm> gens;
    if (n >= 2) {
        Perm swap01(n), cycle(n);
        for (int i = 0; i < n; ++i) swap01[i] = i, cycle[i] = (i + 1) % n;
        std::swap(swap01[0], swap01[1]);
        gens = {swap01, cycle};
    }
    return FiniteGroup::from_permutations(name, n, gens, 721);
}

FiniteGroup make_alternating(const std::string& name, int n) {
    if (n < 1 || n > 7) throw UnsupportedSpec(name + ": alternating(n) supports 1 <= n <= 7");
    std::vector<Perm> gens;
    if (n >= 3) {
        Perm three(n);
        for (int i = 0; i < n; ++i) three[i] = i;
        three[0] = 1, three[1] = 2, three[2] = 0;
        gens.push_back(three);
        if (n > 3) {
            Perm big(n);
            if (n % 2 == 1) {
                for (int i = 0; i < n; ++i) big[i] = (i + 1) % n; // n-cycle, even for odd n
            } else {
                big[0] = 0;
                for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1; // (n-1)-cycle fixing 0
            }
            gens.push_back(big);
        }
    }
    return FiniteGroup::from_permutations(name, n, gens, 2521);
}

bool small_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13; }

FiniteGroup make_sl2(const std::string& name, int p) {
    if (!small_prime(p)) throw UnsupportedSpec(name + ": sl2(p) supports prime p <= 13");
    std::vector<Perm> gens{sl2_matrix_permutation(p, 1, 1, 0, 1), sl2_matrix_permutation(p, 1, 0, 1, 1)};
    const int order = p * (p * p - 1);
    FiniteGroup g = FiniteGroup::from_permutations(name, p * p - 1, gens, order + 1);
    if (g.order() != order) throw Error(name + ": closure produced wrong order");
    return g;
}

FiniteGroup make_psl2(const std::string& name, int p) {
    if (!small_prime(p)) throw UnsupportedSpec(name + ": psl2(p) supports prime p <= 13");
    // action on the projective line: points [x:1] for x in 0..p-1, plus [1:0] at index p
    auto proj_perm = [&](int a, int b, int c, int d) {
        Perm r(p + 1);
        auto image = [&](int v0, int v1) {
            int w0 = (a * v0 + b * v1) % p, w1 = (c * v0 + d * v1) % p;
            return w1 == 0 ? p : static_cast<int>((static_cast<long long>(w0) * [&] {
                       // inverse of w1 mod p by Fermat
                       long long base = w1, acc = 1;
                       for (int e = p - 2; e > 0; e >>= 1, base = base * base % p)
                           if (e & 1) acc = acc * base % p;
                       return acc;
                   }()) % p);
        };
        for (int x = 0; x < p; ++x) r[x] = image(x, 1);
        r[p] = image(1, 0);
        return r;
    };
    std::vector<Perm> gens{proj_perm(1, 1, 0, 1), proj_perm(1, 0, 1, 1)};
    const int order = p == 2 ? 6 : p * (p * p - 1) / 2;
    FiniteGroup g = FiniteGroup::from_permutations(name, p + 1, gens, order + 1);
    if (g.order() != order) throw Error(name + ": closure produced wrong order");
    return g;
}

struct SpecParser {
    const std::string& s;
    size_t pos = 0;

    explicit SpecParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        return s.substr(start, pos - start);
    }
    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw UnsupportedSpec("expected a number in group spec '" + s + "'");
        return std::stoi(s.substr(start, pos - start));
    }

    FiniteGroup parse() {
        std::string head = ident();
        if (head == "trivial") return make_cyclic("trivial", 1);
        if (!eat('(')) throw UnsupportedSpec("unknown group spec '" + s + "'");
        FiniteGroup result = dispatch(head);
        if (!eat(')')) throw UnsupportedSpec("missing ')' in group spec '" + s + "'");
        return result;
    }

    FiniteGroup dispatch(const std::string& head) {
        if (head == "cyclic") {
            int n = number();
            return make_cyclic("cyclic(" + std::to_string(n) + ")", n);
        }
        if (head == "dihedral") {
            int n = number();
            return make_dihedral("dihedral(" + std::to_string(n) + ")", n);
        }
        if (head == "abelian") {
            std::vector<int> fs{number()};
            while (eat(',')) fs.push_back(number());
            std::string nm = "abelian(";
            for (size_t i = 0; i < fs.size(); ++i) nm += (i ? "," : "") + std::to_string(fs[i]);
            return make_abelian(nm + ")", fs);
        }
        if (head == "symmetric") {
            int n = number();
            return make_symmetric("symmetric(" + std::to_string(n) + ")", n);
        }
        if (head == "alternating") {
            int n = number();
            return make_alternating("alternating(" + std::to_string(n) + ")", n);
        }
        if (head == "sl2") {
            int p = number();
            return make_sl2("sl2(" + std::to_string(p) + ")", p);
        }
        if (head == "psl2") {
            int p = number();
            return make_psl2("psl2(" + std::to_string(p) + ")", p);
        }
        if (head == "product") {
            FiniteGroup a = parse();
            if (!eat(',')) throw UnsupportedSpec("product(spec,spec) needs two arguments in '" + s + "'");
            FiniteGroup b = parse();
            return make_product("product(" + a.name() + "," + b.name() + ")", a, b);
        }
        throw UnsupportedSpec("unknown group spec '" + s + "'");
    }
};

} // namespace

FiniteGroup builtin(const std::string& spec) {
    SpecParser parser(spec);
    FiniteGroup g = parser.parse();
    parser.skip_ws();
    if (parser.pos != spec.size()) throw UnsupportedSpec("trailing characters in group spec '" + spec + "'");
    return g;
}

Perm sl2_matrix_permutation(int p, int a, int b, int c, int d) {
    auto norm = [&](int v) { return ((v % p) + p) % p; };
    a = norm(a), b = norm(b), c = norm(c), d = norm(d);
    if (norm(a * d - b * c) != 1) throw Error("matrix is not in SL(2," + std::to_string(p) + ")");
    auto vec_index = [&](int v0, int v1) { return v0 * p + v1 - 1; }; // row-major, skipping (0,0)
    Perm r(p * p - 1);
    for (int v0 = 0; v0 < p; ++v0)
        for (int v1 = 0; v1 < p; ++v1) {
            if (v0 == 0 && v1 == 0) continue;
            r[vec_index(v0, v1)] = vec_index(norm(a * v0 + b * v1), norm(c * v0 + d * v1));
        }
    return r;
}

// ---------------------------------------------------------------------------
// catalog ingestion

std::vector<FiniteGroup> parse_catalog(std::istream& in) {
    std::vector<FiniteGroup> groups;
    std::vector<std::string> names;

    std::string raw;
    int lineno = 0;

    std::string pending_name;
    int pending_degree = 0, header_line = 0;
    std::vector<Perm> pending_gens;
    bool open = false;

    auto flush = [&]() {
        groups.push_back(FiniteGroup::from_permutations(pending_name, pending_degree, pending_gens));
        pending_gens.clear();
        open = false;
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string first;
        if (!(line >> first)) continue; // blank

        if (first == "group") {
            if (open) throw ParseError(lineno, "'group' before 'end' of previous group");
            std::string kw;
            if (!(line >> pending_name >> kw >> pending_degree) || kw != "degree" || pending_degree < 1)
                throw ParseError(lineno, "expected 'group <name> degree <d>'");
            std::string extra;
            if (line >> extra) throw ParseError(lineno, "trailing tokens after group header");
            if (std::find(names.begin(), names.end(), pending_name) != names.end())
                throw ParseError(lineno, "duplicate group name '" + pending_name + "'");
            names.push_back(pending_name);
            header_line = lineno;
            open = true;
        } else if (first == "end") {
            if (!open) throw ParseError(lineno, "'end' without 'group'");
            std::string extra;
            if (line >> extra) throw ParseError(lineno, "trailing tokens after 'end'");
            flush();
        } else {
            if (!open) throw ParseError(lineno, "generator line outside a group block");
            Perm gen(pending_degree);
            std::istringstream gl(raw);
            for (int i = 0; i < pending_degree; ++i) {
                int img;
                if (!(gl >> img) || img < 1 || img > pending_degree)
                    throw ParseError(lineno, "expected " + std::to_string(pending_degree) + " images in 1.." + std::to_string(pending_degree));
                gen[i] = img - 1;
            }
            std::string extra;
            if (gl >> extra) throw ParseError(lineno, "trailing tokens after generator images");
            if (!is_bijection(gen, pending_degree)) throw ParseError(lineno, "generator is not a permutation");
            pending_gens.push_back(std::move(gen));
        }
    }
    if (open) throw ParseError(header_line, "group '" + pending_name + "' not terminated by 'end'");
    return groups;
}

} // namespace gpl
