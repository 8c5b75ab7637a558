#pragma once

// Regular semisimple subalgebras via the extended-diagram closure, their
// Cartan embeddings, curated (non-regular) embeddings and Dynkin indices.

#include "liealg.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_map>

namespace wzw {

// ---------------------------------------------------------------------------
// root index tables

struct RootBits {
    std::array<std::uint64_t, 4> w{};  // up to 256 roots
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool operator==(const RootBits& o) const { return w == o.w; }
    bool operator<(const RootBits& o) const { return w < o.w; }
    bool subset_of(const RootBits& o) const {
        for (int i = 0; i < 4; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
};

struct RootBitsHash {
    std::size_t operator()(const RootBits& b) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : b.w) h = (h ^ x) * 1099511628211ull + (h >> 29);
        return std::size_t(h);
    }
};

struct RootTables {
    int n = 0;                               // number of roots
    std::vector<std::vector<int>> pairing;   // pairing[b][g] = <beta_b, beta_g^vee>
    std::vector<std::vector<int>> reflect;   // reflect[g][b] = s_g(beta_b)
    std::map<std::vector<int>, int> index;   // simple coordinates -> root index
};

inline RootTables build_root_tables(const AlgebraData& alg) {
    RootTables t;
    t.n = int(alg.roots.size());
    if (t.n > 256) throw std::logic_error("root system too large for RootBits");
    for (int i = 0; i < t.n; ++i) t.index[alg.roots[i].simple] = i;
    const int r = alg.rank();
    std::vector<Vec> b_times(t.n);
    for (int i = 0; i < t.n; ++i) {
        Vec v = zero_vec(r);
        for (int j = 0; j < r; ++j) v[j] = alg.roots[i].simple[j];
        b_times[i] = mat_vec(alg.root_gram, v);
    }
    t.pairing.assign(t.n, std::vector<int>(t.n, 0));
    for (int b = 0; b < t.n; ++b)
        for (int g = 0; g < t.n; ++g) {
            Rational ip = 0;
            for (int j = 0; j < r; ++j) ip += alg.roots[b].simple[j] * b_times[g][j];
            Rational p = 2 * ip / alg.roots[g].norm2;
            t.pairing[b][g] = int(p.get_num().get_si());
        }
    t.reflect.assign(t.n, std::vector<int>(t.n, 0));
    for (int g = 0; g < t.n; ++g)
        for (int b = 0; b < t.n; ++b) {
            auto v = alg.roots[b].simple;
            int p = t.pairing[b][g];
            for (int j = 0; j < r; ++j) v[j] -= p * alg.roots[g].simple[j];
            t.reflect[g][b] = t.index.at(v);
        }
    return t;
}

// Roots of the subsystem generated by `simple` (closure under its reflections).
inline RootBits subsystem_bits(const RootTables& t, const AlgebraData& alg, const std::vector<int>& simple) {
    RootBits bits;
    std::vector<int> todo;
    for (int s : simple)
        for (int x : {s, alg.negate_root(s)})
            if (!bits.test(x)) bits.set(x), todo.push_back(x);
    while (!todo.empty()) {
        int b = todo.back();
        todo.pop_back();
        for (int s : simple) {
            int c = t.reflect[s][b];
            if (!bits.test(c)) bits.set(c), todo.push_back(c);
        }
    }
    return bits;
}

inline RootBits reflect_bits(const RootTables& t, const RootBits& b, int simple_root) {
    RootBits out;
    for (int i = 0; i < t.n; ++i)
        if (b.test(i)) out.set(t.reflect[simple_root][i]);
    return out;
}

// ---------------------------------------------------------------------------
// component types

struct Ideal {
    char series = 'A';
    int rank = 1;
    std::vector<int> roots;  // simple roots of the ideal (root indices of g)

    std::string type_name() const {
        char s = (series == 'E' || series == 'F' || series == 'G') ? char(std::tolower(series)) : series;
        return std::string(1, s) + std::to_string(rank);
    }
};

namespace detail {

// Type of a connected Cartan matrix; `norm` are the root lengths squared.
inline std::pair<char, int> classify_connected(const std::vector<std::vector<int>>& a, const std::vector<Rational>& norm) {
    const int n = int(a.size());
    if (n == 1) return {'A', 1};
    std::vector<int> deg(n, 0);
    int max_bond = 1;
    std::pair<int, int> multi{-1, -1};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || a[i][j] == 0) continue;
            ++deg[i];
            int bond = a[i][j] * a[j][i];
            if (bond > max_bond) max_bond = bond, multi = {i, j};
        }
    if (max_bond == 3) return {'G', 2};
    if (max_bond == 2) {
        if (n == 2) return {'B', 2};
        auto [i, j] = multi;
        if (deg[i] == 2 && deg[j] == 2) return {'F', 4};
        int end = deg[i] == 1 ? i : j;
        int other = end == i ? j : i;
        return {norm[end] < norm[other] ? 'B' : 'C', n};
    }
    int branch = -1;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 3) branch = i;
    if (branch < 0) return {'A', n};
    std::vector<int> legs;
    for (int j = 0; j < n; ++j) {
        if (j == branch || a[branch][j] == 0) continue;
        int len = 1, prev = branch, cur = j;
        while (true) {
            int next = -1;
            for (int k = 0; k < n; ++k)
                if (k != cur && k != prev && a[cur][k] != 0) next = k;
            if (next < 0) break;
            prev = cur, cur = next, ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return {'D', n};
    return {'E', n};
}

}  // namespace detail

struct RegularSpec {
    std::vector<Ideal> ideals;      // sorted by series, then decreasing rank
    int embedding_choice = 1;
    std::vector<int> root_subset;   // simple roots of h (root indices of g)
    int class_id = -1;              // Weyl-conjugacy class within the enumeration

    std::string name() const {
        std::string s;
        for (std::size_t i = 0; i < ideals.size();) {
            std::size_t j = i;
            while (j < ideals.size() && ideals[j].series == ideals[i].series && ideals[j].rank == ideals[i].rank) ++j;
            if (!s.empty()) s += "+";
            if (j - i > 1) s += std::to_string(j - i);
            s += ideals[i].type_name();
            i = j;
        }
        return s;
    }
    int rank() const { return int(root_subset.size()); }
};

// ---------------------------------------------------------------------------
// per-algebra Weyl-class bookkeeping

class RegularCatalog {
public:
    explicit RegularCatalog(const AlgebraData& alg) : alg_(alg), t_(build_root_tables(alg)) {
        for (int i = 0; i < alg.rank(); ++i) {
            std::vector<int> e(alg.rank(), 0);
            e[i] = 1;
            simple_.push_back(t_.index.at(e));
        }
    }

    const AlgebraData& algebra() const { return alg_; }
    const RootTables& tables() const { return t_; }

    // Weyl class of the subsystem generated by `simple`.
    // Canonical representative of the Weyl orbit of a subsystem: move 2 rho_S
    // (for the positive system Phi_S cap Phi^+) into the dominant chamber, then
    // take the smallest image under the parabolic stabilizer of that vector.
    RootBits canonical(const RootBits& bits) const {
        const int r = alg_.rank();
        std::vector<long> v(r, 0);
        for (int i = 0; i < alg_.num_positive; ++i)
            if (bits.test(i))
                for (int j = 0; j < r; ++j) v[j] += alg_.roots[i].simple[j];
        auto pair = [&](int i) {
            long p = 0;
            for (int j = 0; j < r; ++j) p += v[j] * alg_.cartan[i][j];
            return p;
        };
        RootBits cur = bits;
        for (bool moved = true; moved;) {
            moved = false;
            for (int i = 0; i < r; ++i) {
                long p = pair(i);
                if (p < 0) {
                    v[i] -= p;
                    cur = reflect_bits(t_, cur, simple_[i]);
                    moved = true;
                }
            }
        }
        std::vector<int> stab;
        for (int i = 0; i < r; ++i)
            if (pair(i) == 0) stab.push_back(simple_[i]);
        std::set<RootBits> orbit{cur};
        std::vector<RootBits> todo{cur};
        while (!todo.empty()) {
            RootBits x = todo.back();
            todo.pop_back();
            for (int s : stab) {
                RootBits y = reflect_bits(t_, x, s);
                if (orbit.insert(y).second) todo.push_back(y);
            }
        }
        return *orbit.begin();
    }

    // Weyl class of the subsystem generated by `simple`.
    int class_of(const std::vector<int>& simple) {
        RootBits b = subsystem_bits(t_, alg_, simple);
        auto it = class_of_bits_.find(b);
        if (it != class_of_bits_.end()) return it->second;
        RootBits c = canonical(b);
        auto [jt, fresh] = class_of_canonical_.emplace(c, next_class_);
        if (fresh) ++next_class_;
        class_of_bits_.emplace(b, jt->second);
        return jt->second;
    }

    std::vector<std::vector<int>> components(const std::vector<int>& simple) const {
        const int n = int(simple.size());
        std::vector<int> comp(n, -1);
        std::vector<std::vector<int>> out;
        for (int i = 0; i < n; ++i) {
            if (comp[i] >= 0) continue;
            std::vector<int> c{simple[i]};
            comp[i] = int(out.size());
            for (std::size_t k = 0; k < c.size(); ++k)
                for (int j = 0; j < n; ++j)
                    if (comp[j] < 0 && t_.pairing[c[k]][simple[j]] != 0) comp[j] = comp[i], c.push_back(simple[j]);
            out.push_back(c);
        }
        return out;
    }

    // Lowest root of the irreducible subsystem with simple roots `comp`.
    int lowest_root(const std::vector<int>& comp) const {
        std::map<int, std::vector<int>> coef;
        std::vector<int> todo;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            std::vector<int> e(comp.size(), 0);
            e[i] = 1;
            coef[comp[i]] = e;
            todo.push_back(comp[i]);
        }
        while (!todo.empty()) {
            int b = todo.back();
            todo.pop_back();
            for (std::size_t j = 0; j < comp.size(); ++j) {
                int c = t_.reflect[comp[j]][b];
                if (coef.count(c)) continue;
                auto v = coef[b];
                v[j] -= t_.pairing[b][comp[j]];
                coef[c] = v;
                todo.push_back(c);
            }
        }
        int best = -1, best_h = -1;
        for (auto& [root, v] : coef) {
            int h = 0;
            bool pos = true;
            for (int x : v) h += x, pos = pos && x >= 0;
            if (pos && h > best_h) best = root, best_h = h;
        }
        return alg_.negate_root(best);
    }

    std::pair<char, int> component_type(const std::vector<int>& comp) const {
        std::vector<std::vector<int>> a(comp.size(), std::vector<int>(comp.size()));
        std::vector<Rational> norm;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            norm.push_back(alg_.roots[comp[i]].norm2);
            for (std::size_t j = 0; j < comp.size(); ++j) a[i][j] = t_.pairing[comp[j]][comp[i]];
        }
        return detail::classify_connected(a, norm);
    }

    // Ideals with D-labels where the D_r block bookkeeping needs them.
    std::vector<Ideal> ideals(const std::vector<int>& simple) const {
        std::vector<Ideal> out;
        auto comps = components(simple);
        if (alg_.id.series != 'D') {
            for (auto& c : comps) {
                auto [s, r] = component_type(c);
                out.push_back({s, r, c});
            }
        } else {
            const int r = alg_.rank();
            std::vector<std::set<int>> support;
            for (auto& c : comps) {
                std::set<int> sup;
                for (int b : c) {
                    Vec x = d_series_euclid(r, alg_.roots[b].coweight);
                    for (int i = 0; i < r; ++i)
                        if (sgn(x[i]) != 0) sup.insert(i);
                }
                support.push_back(sup);
            }
            std::vector<bool> used(comps.size(), false);
            for (std::size_t i = 0; i < comps.size(); ++i) {
                if (used[i]) continue;
                used[i] = true;
                auto [s, rk] = component_type(comps[i]);
                std::vector<int> roots = comps[i];
                if (s == 'A' && rk == 1) {
                    for (std::size_t j = i + 1; j < comps.size(); ++j)
                        if (!used[j] && support[j] == support[i]) {
                            used[j] = true;
                            roots.insert(roots.end(), comps[j].begin(), comps[j].end());
                            s = 'D', rk = 2;
                            break;
                        }
                } else if (s == 'A' && rk == 3 && support[i].size() == 3) {
                    s = 'D';
                }
                out.push_back({s, rk, roots});
            }
        }
        std::stable_sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
            return a.series != b.series ? a.series < b.series : a.rank > b.rank;
        });
        return out;
    }

    // D_r, r even: all ideals of A type with odd rank filling the rank bound.
    bool has_two_embeddings(const std::vector<Ideal>& ideals) const {
        if (!alg_.id.is_d_even()) return false;
        int total = 0;
        for (auto& i : ideals) {
            if (i.series != 'A' || i.rank % 2 == 0) return false;
            total += i.rank + 1;
        }
        return total == alg_.rank();
    }

    // Block embedding using alpha_1 .. alpha_{r-1} (first embedding).
    std::vector<int> first_embedding(const std::vector<Ideal>& ideals) const {
        const int r = alg_.rank();
        std::vector<int> simple;
        int start = 0;
        for (auto& i : ideals) {
            for (int k = 0; k < i.rank; ++k) {
                std::vector<int> e(r, 0);
                e[start + k] = 1;
                simple.push_back(t_.index.at(e));
            }
            start += i.rank + 1;
        }
        return simple;
    }

    RegularSpec make_spec(const std::vector<int>& simple) {
        RegularSpec spec;
        spec.root_subset = simple;
        spec.ideals = ideals(simple);
        spec.class_id = class_of(simple);
        if (has_two_embeddings(spec.ideals))
            spec.embedding_choice = class_of(first_embedding(spec.ideals)) == spec.class_id ? 1 : 2;
        return spec;
    }

    // Delete-node / extend-and-delete closure, one representative per Weyl class.
    const std::vector<RegularSpec>& enumerate() {
        if (done_) return specs_;
        std::vector<int> full;
        for (int i = 0; i < alg_.rank(); ++i) {
            std::vector<int> e(alg_.rank(), 0);
            e[i] = 1;
            full.push_back(t_.index.at(e));
        }
        std::set<int> seen;
        std::deque<std::vector<int>> q{full};
        seen.insert(class_of(full));
        specs_.push_back(make_spec(full));
        while (!q.empty()) {
            auto s = q.front();
            q.pop_front();
            std::vector<std::vector<int>> kids;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto k = s;
                k.erase(k.begin() + long(i));
                if (!k.empty()) kids.push_back(k);
            }
            for (auto& comp : components(s)) {
                int low = lowest_root(comp);
                std::vector<int> rest;
                for (int x : s)
                    if (std::find(comp.begin(), comp.end(), x) == comp.end()) rest.push_back(x);
                for (std::size_t i = 0; i < comp.size(); ++i) {
                    auto k = rest;
                    for (std::size_t j = 0; j < comp.size(); ++j)
                        if (j != i) k.push_back(comp[j]);
                    k.push_back(low);
                    kids.push_back(k);
                }
            }
            for (auto& k : kids) {
                std::sort(k.begin(), k.end());
                int c = class_of(k);
                if (seen.insert(c).second) {
                    q.push_back(k);
                    specs_.push_back(make_spec(k));
                }
            }
        }
        std::stable_sort(specs_.begin(), specs_.end(), [](const RegularSpec& a, const RegularSpec& b) {
            if (a.rank() != b.rank()) return a.rank() < b.rank();
            if (a.name() != b.name()) return a.name() < b.name();
            return a.embedding_choice < b.embedding_choice;
        });
        done_ = true;
        return specs_;
    }

    // Direct children in the closure (subsystems of the given spec).
    std::vector<RegularSpec> children(const RegularSpec& spec) {
        std::vector<RegularSpec> out;
        std::set<int> seen;
        auto s = spec.root_subset;
        std::vector<std::vector<int>> kids;
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto k = s;
            k.erase(k.begin() + long(i));
            if (!k.empty()) kids.push_back(k);
        }
        for (auto& comp : components(s)) {
            int low = lowest_root(comp);
            std::vector<int> rest;
            for (int x : s)
                if (std::find(comp.begin(), comp.end(), x) == comp.end()) rest.push_back(x);
            for (std::size_t i = 0; i < comp.size(); ++i) {
                auto k = rest;
                for (std::size_t j = 0; j < comp.size(); ++j)
                    if (j != i) k.push_back(comp[j]);
                k.push_back(low);
                kids.push_back(k);
            }
        }
        for (auto& k : kids) {
            std::sort(k.begin(), k.end());
            RootBits b = subsystem_bits(t_, alg_, k);
            if (b == subsystem_bits(t_, alg_, s)) continue;
            if (seen.insert(class_of(k)).second) out.push_back(make_spec(k));
        }
        return out;
    }

    int full_class() {
        std::vector<int> full;
        for (int i = 0; i < alg_.rank(); ++i) {
            std::vector<int> e(alg_.rank(), 0);
            e[i] = 1;
            full.push_back(t_.index.at(e));
        }
        return class_of(full);
    }

    std::string label(const RegularSpec& spec) {
        if (spec.class_id == full_class()) return "g";
        std::string n = spec.name();
        if (has_two_embeddings(spec.ideals)) n += "@" + std::to_string(spec.embedding_choice);
        return n;
    }

    // Root index of a diagram automorphism image.
    int apply_outer_root(const OuterAut& aut, int root) const {
        const auto& s = alg_.roots[root].simple;
        std::vector<int> img(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) img[aut.perm[i]] = s[i];
        return t_.index.at(img);
    }

    RegularSpec apply_outer(const OuterAut& aut, const RegularSpec& spec) {
        std::vector<int> img;
        for (int b : spec.root_subset) img.push_back(apply_outer_root(aut, b));
        std::sort(img.begin(), img.end());
        return make_spec(img);
    }

    // The enumerated spec in the same Weyl class.
    const RegularSpec& representative(int class_id) {
        for (auto& s : enumerate())
            if (s.class_id == class_id) return s;
        throw std::logic_error("class not in the enumeration");
    }

private:
    const AlgebraData& alg_;
    RootTables t_;
    std::vector<int> simple_;
    std::unordered_map<RootBits, int, RootBitsHash> class_of_bits_;
    std::unordered_map<RootBits, int, RootBitsHash> class_of_canonical_;
    int next_class_ = 0;
    std::vector<RegularSpec> specs_;
    bool done_ = false;
};

// Shared catalog per algebra.  Enumeration mutates memo tables, so callers
// hold the returned lock while they use it.
struct CatalogHandle {
    std::unique_lock<std::mutex> lock;
    RegularCatalog* catalog;
    RegularCatalog* operator->() const { return catalog; }
};

inline CatalogHandle regular_catalog(const AlgebraData& alg) {
    static std::mutex map_mu;
    static std::map<AlgebraId, std::pair<std::unique_ptr<std::mutex>, std::unique_ptr<RegularCatalog>>> cache;
    std::pair<std::unique_ptr<std::mutex>, std::unique_ptr<RegularCatalog>>* entry;
    {
        std::lock_guard<std::mutex> g(map_mu);
        auto it = cache.find(alg.id);
        if (it == cache.end())
            it = cache.emplace(alg.id, std::make_pair(std::make_unique<std::mutex>(), std::make_unique<RegularCatalog>(alg)))
                     .first;
        entry = &it->second;
    }
    return {std::unique_lock<std::mutex>(*entry->first), entry->second.get()};
}

inline std::vector<RegularSpec> enumerate_regular(const AlgebraData& alg) {
    auto cat = regular_catalog(alg);
    return cat->enumerate();
}

// ---------------------------------------------------------------------------
// embeddings

struct CuratedIdeal {
    std::string type;                 // e.g. "A2", "C4", "g2"
    std::string label;                // printable, e.g. "A2(i2)"
    std::vector<Vec> center_images;   // iota(lambda^vee) for generators of Z(H_i)
    std::vector<int> center_orders;
    std::vector<Vec> coroot_images;   // iota of the simple coroots, when known
    std::optional<long> tabulated_index;
};

struct SubalgebraEmbedding {
    AlgebraId ambient;
    std::string label;
    std::vector<Vec> cartan_basis;    // spans it_h when cartan_complete
    bool cartan_complete = false;
    std::string provenance;           // "regular" or "curated"
    std::optional<RegularSpec> regular;
    std::string row_id;
    std::vector<CuratedIdeal> ideals; // curated entries

    std::vector<Vec> center_generators_images() const {
        std::vector<Vec> out;
        for (auto& i : ideals) out.insert(out.end(), i.center_images.begin(), i.center_images.end());
        return out;
    }
};

inline SubalgebraEmbedding embed_regular(const AlgebraData& alg, const RegularSpec& spec) {
    auto cat = regular_catalog(alg);
    if (spec.embedding_choice == 2 && !cat->has_two_embeddings(spec.ideals))
        throw std::invalid_argument("second embedding exists only for saturated odd A-sums in D_r, r even");
    RegularSpec s = spec;
    if (spec.embedding_choice == 2 && cat->make_spec(spec.root_subset).embedding_choice != 2) {
        // apply the alpha_{r-1} <-> alpha_r flip
        OuterAut flip{"flip", {}};
        for (int i = 0; i < alg.rank(); ++i) flip.perm.push_back(i);
        std::swap(flip.perm[alg.rank() - 2], flip.perm[alg.rank() - 1]);
        s = cat->apply_outer(flip, spec);
    }
    SubalgebraEmbedding e;
    e.ambient = alg.id;
    e.label = cat->label(s);
    for (int b : s.root_subset) e.cartan_basis.push_back(alg.roots[b].coroot);
    e.cartan_complete = true;
    e.provenance = "regular";
    e.regular = s;
    return e;
}

inline SubalgebraEmbedding full_embedding(const AlgebraData& alg) {
    SubalgebraEmbedding e;
    e.ambient = alg.id;
    e.label = "g";
    e.cartan_basis = alg.simple_coroots;
    e.cartan_complete = true;
    e.provenance = "regular";
    auto cat = regular_catalog(alg);
    e.regular = cat->representative(cat->full_class());
    return e;
}

// Designated center generators of a simple algebra, written over its simple
// coroots (rational coefficients).
inline std::vector<Vec> center_generators_in_coroots(const AlgebraData& h) {
    Mat k = transpose(Mat(h.simple_coroots.begin(), h.simple_coroots.end()));
    std::vector<Vec> out;
    if (h.id.is_d_even()) {
        for (int node : h.designated) out.push_back(*solve(k, h.fundamental_coweights[node]));
    } else if (h.center_order() > 1) {
        out.push_back(*solve(k, h.fundamental_coweights[h.designated.at(0)]));
    }
    return out;
}

inline AlgebraId ideal_algebra_id(const std::string& type) {
    AlgebraId id;
    id.series = char(std::toupper(static_cast<unsigned char>(type.at(0))));
    id.rank = std::stoi(type.substr(1));
    return id;  // ranks below the catalog bounds (B2, C2, C3, D3 ...) are allowed here
}

inline const AlgebraData& ideal_algebra(const std::string& type) {
    AlgebraId id = ideal_algebra_id(type);
    // small ranks are built directly without the public range check
    static std::mutex mu;
    static std::map<AlgebraId, std::unique_ptr<AlgebraData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it == cache.end()) {
        AlgebraId probe = id;
        bool in_range = true;
        try {
            validate_algebra_id(probe);
        } catch (...) {
            in_range = false;
        }
        if (in_range) return algebra(id);
        if (!((id.series == 'B' && id.rank >= 2) || (id.series == 'C' && id.rank >= 2) ||
              (id.series == 'D' && id.rank >= 3) || id.series == 'A'))
            throw std::invalid_argument("unsupported ideal type " + type);
        // map low-rank coincidences onto catalog types
        AlgebraId alias = id;
        if (id.series == 'C' && id.rank == 2) alias = {'B', 2};
        if (id.series == 'D' && id.rank == 3) alias = {'A', 3};
        it = cache.emplace(id, std::make_unique<AlgebraData>(build_algebra(alias))).first;
    }
    return *it->second;
}

// Fill center_images / orders from coroot images when absent.
inline void complete_curated_ideal(CuratedIdeal& ideal) {
    const AlgebraData& h = ideal_algebra(ideal.type);
    if (!ideal.coroot_images.empty()) {
        if (int(ideal.coroot_images.size()) != h.rank())
            throw std::invalid_argument("coroot image count does not match " + ideal.type);
        if (ideal.center_images.empty()) {
            for (auto& c : center_generators_in_coroots(h)) {
                Vec img = zero_vec(ideal.coroot_images[0].size());
                for (int j = 0; j < h.rank(); ++j) img = img + c[j] * ideal.coroot_images[j];
                ideal.center_images.push_back(img);
            }
        }
    }
    if (ideal.center_orders.empty()) {
        if (h.id.is_d_even())
            ideal.center_orders = {2, 2};
        else if (!ideal.center_images.empty())
            ideal.center_orders = {h.center_order()};
    }
}

// Dynkin index of a simple ideal.
inline Rational dynkin_index(const AlgebraData& alg, const SubalgebraEmbedding& emb, std::size_t ideal_index) {
    if (emb.provenance == "regular") {
        if (!emb.regular || ideal_index >= emb.regular->ideals.size())
            throw std::invalid_argument("no such ideal");
        const Ideal& i = emb.regular->ideals[ideal_index];
        Rational best = 0;
        int long_root = -1;
        for (int b : i.roots)
            if (long_root < 0 || alg.roots[b].norm2 > alg.roots[long_root].norm2) long_root = b;
        best = norm2(alg.space, alg.roots[long_root].coroot) / 2;
        return best;
    }
    if (ideal_index >= emb.ideals.size()) throw std::invalid_argument("no such ideal");
    const CuratedIdeal& i = emb.ideals[ideal_index];
    const AlgebraData& h = ideal_algebra(i.type);
    if (!i.coroot_images.empty()) {
        int long_node = 0;
        for (int j = 0; j < h.rank(); ++j)
            if (h.root_gram[j][j] > h.root_gram[long_node][long_node]) long_node = j;
        return norm2(alg.space, i.coroot_images[long_node]) / 2;
    }
    if (!i.center_images.empty()) {
        int node = h.designated.at(0);
        Rational hn = norm2(h.space, h.fundamental_coweights[node]);
        return norm2(alg.space, i.center_images[0]) / hn;
    }
    throw std::invalid_argument("insufficient embedding data for the Dynkin index of " + i.type);
}

// z in Z^omega whose class meets the torus of H.
inline std::vector<int> subgroup_intersection_classes(const AlgebraData& alg, const SubalgebraEmbedding& emb,
                                                      const CenterSubgroup& zomega) {
    std::vector<int> out;
    if (emb.cartan_complete) {
        for (int e : zomega.elements)
            if (coset_meets_subspace(alg.coroot_lattice, alg.center[e].rep, emb.cartan_basis).meets) out.push_back(e);
        return out;
    }
    std::vector<Vec> gens = emb.center_generators_images();
    std::vector<int> orders;
    for (auto& i : emb.ideals) orders.insert(orders.end(), i.center_orders.begin(), i.center_orders.end());
    std::set<int> found;
    std::vector<int> m(gens.size(), 0);
    while (true) {
        Vec v = zero_vec(alg.rank());
        for (std::size_t i = 0; i < gens.size(); ++i) v = v + Rational(m[i]) * gens[i];
        if (alg.in_coweight_lattice(v)) {
            int e = alg.center_index(v);
            if (zomega.contains(e)) found.insert(e);
        }
        std::size_t i = 0;
        while (i < gens.size() && ++m[i] == orders[i]) m[i] = 0, ++i;
        if (i == gens.size()) break;
    }
    return {found.begin(), found.end()};
}

inline SubalgebraEmbedding apply_outer(const AlgebraData& alg, const OuterAut& aut, const SubalgebraEmbedding& emb) {
    if (emb.provenance == "regular" && emb.regular) {
        auto cat = regular_catalog(alg);
        RegularSpec img = cat->apply_outer(aut, *emb.regular);
        SubalgebraEmbedding e;
        e.ambient = alg.id;
        e.label = cat->label(img);
        for (int b : img.root_subset) e.cartan_basis.push_back(alg.roots[b].coroot);
        e.cartan_complete = true;
        e.provenance = "regular";
        e.regular = img;
        return e;
    }
    SubalgebraEmbedding e = emb;
    e.label = aut.name + "(" + emb.label + ")";
    for (auto& v : e.cartan_basis) v = wzw::apply_outer(aut, v);
    for (auto& i : e.ideals) {
        for (auto& v : i.center_images) v = wzw::apply_outer(aut, v);
        for (auto& v : i.coroot_images) v = wzw::apply_outer(aut, v);
    }
    return e;
}

}  // namespace wzw
