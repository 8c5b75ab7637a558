#pragma once

// Catalog of simple Lie algebras in the fundamental-coweight basis.
//
// A vector x = sum_i c_i lambda_i^vee is stored as its coordinates c.  Since
// (lambda_i^vee, alpha_j) = delta_ij, the coordinates of any x are the pairings
// ((x, alpha_1), ..., (x, alpha_r)); the Gram matrix of the basis is the inverse
// of the Gram matrix of the simple roots (long roots have length squared 2).

#include "quadlattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace wzw {

struct AlgebraId {
    char series = 'A';  // one of A B C D E F G
    int rank = 1;

    std::string name() const {
        char s = (series == 'E' || series == 'F' || series == 'G') ? char(std::tolower(series)) : series;
        return std::string(1, s) + std::to_string(rank);
    }
    bool operator==(const AlgebraId& o) const { return series == o.series && rank == o.rank; }
    bool operator!=(const AlgebraId& o) const { return !(*this == o); }
    bool operator<(const AlgebraId& o) const {
        return series != o.series ? series < o.series : rank < o.rank;
    }
    bool is_d_even() const { return series == 'D' && rank % 2 == 0; }
    bool is_d_odd() const { return series == 'D' && rank % 2 == 1; }
};

inline void validate_algebra_id(const AlgebraId& id) {
    bool ok = false;
    switch (id.series) {
        case 'A': ok = id.rank >= 1; break;
        case 'B': ok = id.rank >= 2; break;
        case 'C': ok = id.rank >= 3; break;
        case 'D': ok = id.rank >= 4; break;
        case 'E': ok = id.rank >= 6 && id.rank <= 8; break;
        case 'F': ok = id.rank == 4; break;
        case 'G': ok = id.rank == 2; break;
        default: break;
    }
    if (!ok) throw std::invalid_argument("no such algebra: " + std::string(1, id.series) + std::to_string(id.rank));
}

inline AlgebraId parse_algebra(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("bad algebra name: " + text);
    AlgebraId id;
    id.series = char(std::toupper(static_cast<unsigned char>(text[0])));
    std::string digits = text.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 3)
        throw std::invalid_argument("bad algebra name: " + text);
    id.rank = std::stoi(digits);
    validate_algebra_id(id);
    return id;
}

struct Root {
    std::vector<int> simple;  // coefficients over the simple roots
    Vec coweight;             // the root itself in the coweight basis
    Vec coroot;               // 2 beta / (beta, beta) in the coweight basis
    Rational norm2;
    int height = 0;
};

struct OuterAut {
    std::string name;
    std::vector<int> perm;  // alpha_i -> alpha_{perm[i]}
    bool operator==(const OuterAut& o) const { return perm == o.perm; }
};

struct TheoryVariant {
    int sign = +1;
};

struct LevelRule {
    int modulus = 1;  // admissible k in modulus * Z
};

struct CenterElement {
    int index = 0;  // position in AlgebraData::center
    Vec rep;        // canonical representative in P^vee
};

struct CenterSubgroup {
    std::string name;
    std::vector<CenterElement> generators;  // used by the bihomomorphism
    std::vector<int> elements;              // sorted center indices
    std::vector<int> orders;                // order of each generator
    std::map<int, std::vector<int>> coeffs; // element -> coefficients over generators

    std::size_t order() const { return elements.size(); }
    bool contains(int idx) const { return std::binary_search(elements.begin(), elements.end(), idx); }
    bool operator==(const CenterSubgroup& o) const { return elements == o.elements; }
};

struct AlgebraData {
    AlgebraId id;
    QuadSpace space;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
    Mat root_gram;                         // (alpha_i, alpha_j)
    std::vector<Vec> simple_roots, simple_coroots, fundamental_coweights;
    IntegerLattice coroot_lattice, coweight_lattice;
    Vec lowest_root_coroot;
    int highest_root = 0;
    std::vector<Root> roots;  // positives by height, then their negatives in the same order
    int num_positive = 0;
    std::vector<OuterAut> diagram_automorphisms;

    // center P^vee / Q^vee
    SmithForm snf;                      // of the coroot matrix (columns = simple coroots)
    std::vector<std::size_t> torsion;   // positions i with d_i > 1
    std::vector<long> torsion_orders;
    std::vector<CenterElement> center;  // center[0] is the identity
    std::vector<std::vector<int>> center_add;
    std::vector<CenterSubgroup> subgroups;
    std::vector<int> designated;        // node indices of the designated generators

    int rank() const { return id.rank; }
    int negate_root(int i) const { return i < num_positive ? i + num_positive : i - num_positive; }

    std::vector<long> class_key(const Vec& x) const {
        if (!is_integral(x)) throw std::domain_error("vector not in the coweight lattice: " + to_string(x));
        IVec ix(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) ix[i] = x[i].get_num();
        IVec y = imat_vec(snf.P, ix);
        std::vector<long> key;
        for (std::size_t t = 0; t < torsion.size(); ++t) {
            Integer r;
            Integer d = snf.D[torsion[t]][torsion[t]];
            mpz_fdiv_r(r.get_mpz_t(), y[torsion[t]].get_mpz_t(), d.get_mpz_t());
            key.push_back(r.get_si());
        }
        return key;
    }

    // Index in `center` of the class of x (x must lie in P^vee).
    int center_index(const Vec& x) const {
        auto key = class_key(x);
        long idx = 0;
        for (std::size_t t = 0; t < key.size(); ++t) idx = idx * torsion_orders[t] + key[t];
        return int(key_to_index.at(idx));
    }

    bool in_coweight_lattice(const Vec& x) const { return is_integral(x); }
    bool in_coroot_lattice(const Vec& x) const { return is_integral(x) && center_index(x) == 0; }

    int center_order() const { return int(center.size()); }

    int element_order(int idx) const {
        int o = 1, cur = idx;
        while (cur != 0) cur = center_add[cur][idx], ++o;
        return o;
    }

    int center_multiple(int idx, long m) const {
        long n = center_order();
        m %= n;
        if (m < 0) m += n;
        int cur = 0;
        for (long i = 0; i < m; ++i) cur = center_add[cur][idx];
        return cur;
    }

    int center_neg(int idx) const { return center_multiple(idx, center_order() - 1); }

    const OuterAut& outer(const std::string& name) const {
        for (auto& a : diagram_automorphisms)
            if (a.name == name) return a;
        throw std::invalid_argument("no automorphism '" + name + "' for " + id.name());
    }

    const CenterSubgroup& subgroup(const std::string& name) const;

    std::map<long, std::size_t> key_to_index;
};

// ---------------------------------------------------------------------------
// root Gram matrices per type

namespace detail {

inline Mat simple_root_gram(const AlgebraId& id) {
    const int r = id.rank;
    Mat b = zero_mat(r, r);
    auto link = [&](int i, int j, Rational v) { b[i][j] = v, b[j][i] = v; };
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 <= upto; ++i) link(i, i + 1, -1);
    };
    for (int i = 0; i < r; ++i) b[i][i] = 2;
    switch (id.series) {
        case 'A': chain(r - 1); break;
        case 'B':
            chain(r - 1);
            b[r - 1][r - 1] = 1;
            break;
        case 'C':
            // alpha_i = (e_i - e_{i+1})/2, alpha_r = e_r with (e_i, e_j) = 2 delta_ij
            for (int i = 0; i < r - 1; ++i) b[i][i] = 1;
            for (int i = 0; i + 2 < r; ++i) link(i, i + 1, make_rational(-1, 2));
            link(r - 2, r - 1, -1);
            break;
        case 'D':
            chain(r - 2);
            link(r - 3, r - 1, -1);
            break;
        case 'E':
            // chain of r-1 nodes, the last node attached to the fourth from its end
            chain(r - 2);
            link(r - 4, r - 1, -1);
            break;
        case 'F':
            b[2][2] = 1, b[3][3] = 1;
            link(0, 1, -1);
            link(1, 2, -1);
            link(2, 3, make_rational(-1, 2));
            break;
        case 'G':
            b[0][0] = make_rational(2, 3);
            link(0, 1, -1);
            break;
    }
    return b;
}

inline std::vector<OuterAut> outer_automorphisms(const AlgebraId& id) {
    const int r = id.rank;
    std::vector<int> idp(r);
    for (int i = 0; i < r; ++i) idp[i] = i;
    std::vector<OuterAut> out{{"id", idp}};
    auto with = [&](std::string name, std::vector<std::pair<int, int>> images) {
        auto p = idp;
        for (auto [from, to] : images) p[from] = to;
        out.push_back({std::move(name), p});
    };
    if (id.series == 'A' && r >= 2) {
        std::vector<std::pair<int, int>> m;
        for (int i = 0; i < r; ++i) m.push_back({i, r - 1 - i});
        with("flip", m);
    } else if (id.series == 'D' && r == 4) {
        with("w1", {{2, 3}, {3, 2}});
        with("w2", {{0, 2}, {2, 0}});
        with("w3", {{0, 3}, {3, 0}});
        with("w4", {{0, 3}, {3, 2}, {2, 0}});
        with("w4inv", {{0, 2}, {2, 3}, {3, 0}});
    } else if (id.series == 'D') {
        with("flip", {{r - 2, r - 1}, {r - 1, r - 2}});
    } else if (id.series == 'E' && r == 6) {
        with("flip", {{0, 4}, {4, 0}, {1, 3}, {3, 1}});
    }
    return out;
}

// Node indices (0-based) of the fundamental coweights generating the center.
inline std::vector<int> designated_generators(const AlgebraId& id) {
    const int r = id.rank;
    switch (id.series) {
        case 'A': return {r - 1};
        case 'B': return {0};
        case 'C': return {r - 1};
        case 'D': return r % 2 ? std::vector<int>{r - 1} : std::vector<int>{r - 1, 0};
        case 'E':
            if (r == 6) return {4};
            if (r == 7) return {0};
            return {};
        default: return {};
    }
}

// Nonnegative integer vectors ordered by total, then lexicographically.
inline void compositions(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == n - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int c = 0; c <= total; ++c) {
        cur.push_back(c);
        compositions(n, total - c, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

inline Vec apply_outer(const OuterAut& aut, const Vec& v) {
    if (aut.perm.size() != v.size()) throw std::invalid_argument("automorphism/algebra mismatch");
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[aut.perm[i]] = v[i];
    return w;
}

inline OuterAut compose(const OuterAut& a, const OuterAut& b) {  // a after b
    OuterAut c{"", std::vector<int>(a.perm.size())};
    for (std::size_t i = 0; i < a.perm.size(); ++i) c.perm[i] = a.perm[b.perm[i]];
    return c;
}

inline OuterAut inverse(const OuterAut& a) {
    OuterAut c{"", std::vector<int>(a.perm.size())};
    for (std::size_t i = 0; i < a.perm.size(); ++i) c.perm[a.perm[i]] = int(i);
    return c;
}

inline const OuterAut& find_outer(const AlgebraData& alg, const OuterAut& a) {
    for (auto& x : alg.diagram_automorphisms)
        if (x.perm == a.perm) return x;
    throw std::invalid_argument("permutation is not a diagram automorphism of " + alg.id.name());
}

inline int aut_order(const OuterAut& a) {
    OuterAut cur = a;
    int o = 1;
    std::vector<int> idp(a.perm.size());
    for (std::size_t i = 0; i < idp.size(); ++i) idp[i] = int(i);
    while (cur.perm != idp) cur = compose(a, cur), ++o;
    return o;
}

namespace detail {

inline CenterSubgroup make_subgroup(const AlgebraData& alg, std::string name, std::vector<int> gens) {
    CenterSubgroup z;
    z.name = std::move(name);
    for (int g : gens) {
        z.generators.push_back(alg.center[g]);
        z.orders.push_back(alg.element_order(g));
    }
    // all combinations sum m_i g_i with 0 <= m_i < ord_i
    std::vector<int> m(gens.size(), 0);
    while (true) {
        int e = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) e = alg.center_add[e][alg.center_multiple(gens[i], m[i])];
        if (!z.coeffs.count(e)) z.coeffs[e] = m;
        std::size_t i = 0;
        while (i < gens.size() && ++m[i] == z.orders[i]) m[i] = 0, ++i;
        if (i == gens.size()) break;
    }
    for (auto& [e, c] : z.coeffs) z.elements.push_back(e);
    return z;
}

inline void build_subgroups(AlgebraData& alg) {
    const int n = alg.center_order();
    auto elt_of_node = [&](int node) { return alg.center_index(alg.fundamental_coweights[node]); };
    if (alg.id.is_d_even()) {
        const int r = alg.rank();
        int z1 = elt_of_node(r - 1), z2 = elt_of_node(0);
        int zd = alg.center_add[z1][z2];
        alg.subgroups.push_back(make_subgroup(alg, "trivial", {}));
        alg.subgroups.push_back(make_subgroup(alg, "Z1", {z1}));
        alg.subgroups.push_back(make_subgroup(alg, "Z2", {z2}));
        alg.subgroups.push_back(make_subgroup(alg, "Zdiag", {zd}));
        alg.subgroups.push_back(make_subgroup(alg, "full", {z1, z2}));
        return;
    }
    // cyclic center
    if (n == 1) {
        alg.subgroups.push_back(make_subgroup(alg, "trivial", {}));
        return;
    }
    int theta = elt_of_node(alg.designated.at(0));
    if (alg.element_order(theta) != n) throw std::logic_error("designated generator does not generate the center");
    for (int p = 1; p <= n; ++p) {
        if (n % p) continue;
        int g = alg.center_multiple(theta, n / p);
        alg.subgroups.push_back(make_subgroup(alg, p == 1 ? "trivial" : "Z" + std::to_string(p),
                                              p == 1 ? std::vector<int>{} : std::vector<int>{g}));
    }
}

}  // namespace detail

inline const CenterSubgroup& AlgebraData::subgroup(const std::string& raw) const {
    std::string name = raw;
    if (!name.empty() && name[0] == 'z') name[0] = 'Z';
    if (name == "1" || name == "{1}" || (name == "Z1" && !id.is_d_even())) name = "trivial";
    if (name == "full") return subgroups.back();
    for (auto& z : subgroups)
        if (z.name == name) return z;
    throw std::invalid_argument("no center subgroup '" + raw + "' in " + id.name());
}

inline AlgebraData build_algebra(const AlgebraId& id) {
    validate_algebra_id(id);
    AlgebraData alg;
    alg.id = id;
    const int r = id.rank;
    alg.root_gram = detail::simple_root_gram(id);
    alg.space = QuadSpace(inverse(alg.root_gram));
    alg.cartan.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational c = 2 * alg.root_gram[i][j] / alg.root_gram[i][i];
            if (!is_integer(c)) throw std::logic_error("non-integer Cartan entry");
            alg.cartan[i][j] = int(c.get_num().get_si());
        }
    for (int i = 0; i < r; ++i) {
        alg.simple_roots.push_back(alg.root_gram[i]);
        Vec cr(r);
        for (int j = 0; j < r; ++j) cr[j] = alg.cartan[i][j];
        alg.simple_coroots.push_back(cr);
        alg.fundamental_coweights.push_back(unit_vec(r, i));
    }
    alg.coroot_lattice.basis = alg.simple_coroots;
    alg.coweight_lattice.basis = alg.fundamental_coweights;

    // roots as the Weyl orbit of the simple roots
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> todo;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto b = todo.back();
        todo.pop_back();
        for (int i = 0; i < r; ++i) {
            int pair = 0;
            for (int j = 0; j < r; ++j) pair += b[j] * alg.cartan[i][j];
            if (!pair) continue;
            auto c = b;
            c[i] -= pair;
            if (seen.insert(c).second) todo.push_back(c);
        }
    }
    std::vector<std::vector<int>> pos;
    for (auto& v : seen)
        if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) pos.push_back(v);
    auto height = [](const std::vector<int>& v) {
        int h = 0;
        for (int x : v) h += x;
        return h;
    };
    std::sort(pos.begin(), pos.end(), [&](auto& a, auto& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a > b;
    });
    alg.num_positive = int(pos.size());
    auto make_root = [&](const std::vector<int>& s) {
        Root rt;
        rt.simple = s;
        rt.height = height(s);
        rt.coweight = zero_vec(r);
        for (int j = 0; j < r; ++j)
            if (s[j]) rt.coweight = rt.coweight + Rational(s[j]) * alg.simple_roots[j];
        Rational n2 = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) n2 += s[i] * s[j] * alg.root_gram[i][j];
        rt.norm2 = n2;
        rt.coroot = (2 / n2) * rt.coweight;
        return rt;
    };
    for (auto& p : pos) alg.roots.push_back(make_root(p));
    for (auto& p : pos) {
        auto n = p;
        for (auto& x : n) x = -x;
        alg.roots.push_back(make_root(n));
    }
    alg.highest_root = alg.num_positive - 1;
    alg.lowest_root_coroot = alg.roots[alg.negate_root(alg.highest_root)].coroot;
    alg.diagram_automorphisms = detail::outer_automorphisms(id);
    alg.designated = detail::designated_generators(id);

    // center from the Smith form of the coroot matrix
    IMat k(r, IVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) k[i][j] = alg.cartan[j][i];
    alg.snf = smith_normal_form(k);
    for (int i = 0; i < r; ++i)
        if (alg.snf.D[i][i] > 1) {
            alg.torsion.push_back(i);
            alg.torsion_orders.push_back(alg.snf.D[i][i].get_si());
        }
    long n = 1;
    for (long d : alg.torsion_orders) n *= d;
    // canonical representatives: smallest coordinate sum, then lexicographic
    std::map<long, Vec> reps;
    for (int total = 0; long(reps.size()) < n; ++total) {
        std::vector<std::vector<int>> cands;
        std::vector<int> cur;
        detail::compositions(r, total, cur, cands);
        for (auto& c : cands) {
            Vec v(r);
            for (int i = 0; i < r; ++i) v[i] = c[i];
            auto key = alg.class_key(v);
            long idx = 0;
            for (std::size_t t = 0; t < key.size(); ++t) idx = idx * alg.torsion_orders[t] + key[t];
            if (!reps.count(idx)) reps[idx] = v;
        }
    }
    for (auto& [idx, v] : reps) {
        alg.key_to_index[idx] = alg.center.size();
        alg.center.push_back({int(alg.center.size()), v});
    }
    const int nc = int(alg.center.size());
    alg.center_add.assign(nc, std::vector<int>(nc, 0));
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) alg.center_add[a][b] = alg.center_index(alg.center[a].rep + alg.center[b].rep);
    detail::build_subgroups(alg);
    return alg;
}

// Shared immutable catalog entries.
inline const AlgebraData& algebra(const AlgebraId& id) {
    static std::mutex mu;
    static std::map<AlgebraId, std::unique_ptr<AlgebraData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, std::make_unique<AlgebraData>(build_algebra(id))).first;
    return *it->second;
}

inline const AlgebraData& algebra(const std::string& name) { return algebra(parse_algebra(name)); }

inline std::vector<CenterSubgroup> center_subgroups(const AlgebraData& alg) { return alg.subgroups; }

inline const CenterSubgroup& full_center(const AlgebraData& alg) { return alg.subgroups.back(); }

inline bool is_full_center(const AlgebraData& alg, const CenterSubgroup& z) {
    return int(z.order()) == alg.center_order();
}

// Admissible levels as printed case by case.
inline LevelRule admissible_levels(const AlgebraData& alg, const CenterSubgroup& z, TheoryVariant variant = {}) {
    const AlgebraId& id = alg.id;
    if (variant.sign != 1 && variant.sign != -1) throw std::invalid_argument("variant must be +1 or -1");
    if (variant.sign == -1 && !id.is_d_even())
        throw std::invalid_argument("the - variant exists only for D_r with r even");
    const int p = int(z.order());
    if (p == 1) return {1};
    const int r = id.rank;
    switch (id.series) {
        case 'A': {
            int q = (r + 1) / p;
            return {(p % 2 == 0 && q % 2 == 1) ? 2 : 1};
        }
        case 'B': return {1};
        case 'C': return {r % 2 ? 2 : 1};
        case 'D':
            if (r % 2) return {p == 4 ? 2 : 1};
            if ((r / 2) % 2 == 0) return {1};
            return {z.name == "Z2" ? 1 : 2};
        case 'E': return {r == 7 ? 2 : 1};
        default: return {1};
    }
}

inline int apply_outer_center(const AlgebraData& alg, const OuterAut& aut, int idx) {
    return alg.center_index(apply_outer(aut, alg.center[idx].rep));
}

inline const CenterSubgroup& match_subgroup(const AlgebraData& alg, const std::vector<int>& elements) {
    for (auto& z : alg.subgroups)
        if (z.elements == elements) return z;
    throw std::logic_error("element set is not a catalogued subgroup");
}

// Image of a subgroup under a diagram automorphism.
inline const CenterSubgroup& apply_outer(const AlgebraData& alg, const OuterAut& aut, const CenterSubgroup& z) {
    std::vector<int> img;
    for (int e : z.elements) img.push_back(apply_outer_center(alg, aut, e));
    std::sort(img.begin(), img.end());
    return match_subgroup(alg, img);
}

// Z^omega = { z : z omega(z)^{-1} in Z }
inline const CenterSubgroup& z_omega(const AlgebraData& alg, const CenterSubgroup& z, const OuterAut& aut) {
    std::vector<int> els;
    for (int e = 0; e < alg.center_order(); ++e) {
        int d = alg.center_add[e][alg.center_neg(apply_outer_center(alg, aut, e))];
        if (z.contains(d)) els.push_back(e);
    }
    return match_subgroup(alg, els);
}

// Euclidean models used for naming and for converting tabulated vectors.

// D_r: lambda_i = e_1+...+e_i (i <= r-2), lambda_{r-1} = (e_1+...+e_{r-1}-e_r)/2,
// lambda_r = (e_1+...+e_r)/2.
inline Vec d_series_euclid(int r, const Vec& c) {
    Vec x = zero_vec(r);
    for (int i = 0; i < r; ++i) {
        if (sgn(c[i]) == 0) continue;
        Vec l = zero_vec(r);
        if (i <= r - 3) {
            for (int j = 0; j <= i; ++j) l[j] = 1;
        } else {
            for (int j = 0; j < r; ++j) l[j] = make_rational(1, 2);
            if (i == r - 2) l[r - 1] = make_rational(-1, 2);
        }
        x = x + c[i] * l;
    }
    return x;
}

// A_r: alpha_i = e_i - e_{i+1} in R^{r+1}; coordinates are consecutive differences.
inline Vec a_series_from_euclid(const Vec& x) {
    Rational s = 0;
    for (auto& v : x) s += v;
    if (sgn(s) != 0) throw std::invalid_argument("vector is not traceless: " + to_string(x));
    Vec c(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) c[i] = x[i] - x[i + 1];
    return c;
}

inline Vec a_series_euclid(const Vec& c) {
    const std::size_t r = c.size();
    Vec x = zero_vec(r + 1);
    for (std::size_t i = 0; i < r; ++i) {
        Rational frac = Rational(long(i + 1)) / Rational(long(r + 1));
        for (std::size_t j = 0; j <= r; ++j) x[j] += c[i] * ((j <= i ? Rational(1) : Rational(0)) - frac);
    }
    return x;
}

// e6 in R^7 orthogonal to (1,...,1,0): alpha_i = e_i - e_{i+1} (i <= 5),
// alpha_6 = (-e1-e2-e3+e4+e5+e6)/2 + e7/sqrt2.  The vector is (x_1..x_6, y/sqrt2);
// `y` is the rational coefficient of 1/sqrt2.
inline Vec e6_from_euclid(const Vec& x6, const Rational& y) {
    if (x6.size() != 6) throw std::invalid_argument("e6 Euclidean vector needs 6 rational coordinates");
    Rational s = 0;
    for (auto& v : x6) s += v;
    if (sgn(s) != 0) throw std::invalid_argument("vector not orthogonal to (1,...,1,0)");
    Vec c(6);
    for (int i = 0; i < 5; ++i) c[i] = x6[i] - x6[i + 1];
    c[5] = (-x6[0] - x6[1] - x6[2] + x6[3] + x6[4] + x6[5]) / 2 + y / 2;
    return c;
}

}  // namespace wzw
