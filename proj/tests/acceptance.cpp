// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <wzw/anomaly.hpp>
#include <wzw/curated.hpp>

#include <iostream>

#include "oracles.hpp"

using namespace wzw;

namespace {

struct Tally {
    long checked = 0, failed = 0;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
};

ModelConfig config(const AlgebraData& alg, const CenterSubgroup& z, const SubalgebraEmbedding& h, const OuterAut& w,
                   int variant = 1) {
    ModelConfig c;
    c.alg = alg.id;
    c.Z = z;
    c.h = h;
    c.twist = w;
    c.variant.sign = variant;
    return c;
}

std::vector<int> variants(const AlgebraData& alg) {
    return alg.id.is_d_even() ? std::vector<int>{1, -1} : std::vector<int>{1};
}

bool matches(const LevelSet& got, const oracle::Pred& want, long adm) {
    for (long k = -60; k <= 60; ++k)
        if (k % adm == 0 && got.contains(k) != want(k)) return false;
    return true;
}

std::string describe(const ModelConfig& c) {
    return c.alg.name() + " h=" + c.h.label + " Z=" + c.Z.name + " w=" + c.twist.name +
           (c.variant.sign < 0 ? " (-)" : "");
}

void check_pred(Tally& t, const ModelConfig& cfg, const oracle::Pred& want) {
    LevelSet got = classify_levels(cfg);
    t.expect(matches(got, want, config_admissibility(cfg).modulus), describe(cfg) + " got " + got.to_string());
}

Tally criterion1() {
    Tally t;
    for (auto id : oracle::catalog(8)) {
        const AlgebraData& alg = algebra(id);
        SubalgebraEmbedding g = full_embedding(alg);
        for (auto& z : alg.subgroups)
            for (auto& w : alg.diagram_automorphisms)
                for (int v : variants(alg))
                    check_pred(t, config(alg, z, g, w, v), oracle::h_equals_g(id.series, id.rank, z.name, z.order(), w.name, v));
    }
    return t;
}

Tally criterion_a(int r) {
    Tally t;
    const AlgebraData& alg = algebra(AlgebraId{'A', r});
    for (auto& s : enumerate_regular(alg)) {
        SubalgebraEmbedding e = embed_regular(alg, s);
        for (auto& z : alg.subgroups)
            check_pred(t, config(alg, z, e, alg.outer("id")),
                       r == 4 ? oracle::a4_regular(e.label, z.name) : oracle::a5_regular(e.label, z.name));
    }
    return t;
}

Tally criterion4() {
    Tally t;
    // D5: D3+D2, A1+D3 and g are the anomalous ones
    const AlgebraData& d5 = algebra("D5");
    static const std::set<std::string> special = {"D3+D2", "A1+D3", "g"};
    for (auto& s : enumerate_regular(d5)) {
        SubalgebraEmbedding e = embed_regular(d5, s);
        for (auto& z : d5.subgroups)
            for (auto& w : d5.diagram_automorphisms) {
                oracle::Pred want = oracle::all();
                if (z.name == "Z4") want = w.name == "id" && special.count(e.label) ? oracle::mult(4) : oracle::mult(2);
                if (z.name == "Z2") want = w.name == "id" && special.count(e.label) ? oracle::mult(2) : oracle::all();
                check_pred(t, config(d5, z, e, w), want);
            }
    }
    const AlgebraData& d4 = algebra("D4");
    for (auto& s : enumerate_regular(d4)) {
        SubalgebraEmbedding e = embed_regular(d4, s);
        for (auto& z : d4.subgroups)
            for (auto& w : d4.diagram_automorphisms)
                for (int v : {1, -1}) check_pred(t, config(d4, z, e, w, v), oracle::d4_regular(e.label, z.name, w.name, v));
    }
    return t;
}

Tally criterion5() {
    Tally t;
    for (int r = 1; r <= 8; ++r) {
        const AlgebraData& alg = algebra(AlgebraId{'A', r});
        for (auto& s : enumerate_regular(alg)) {
            SubalgebraEmbedding e = embed_regular(alg, s);
            for (auto& z : alg.subgroups) {
                LevelSet a = ar_closed_form(r, z.order(), s), b = classify_levels(config(alg, z, e, alg.outer("id")));
                t.expect(a == b, "A" + std::to_string(r) + " " + e.label + " " + z.name + ": " + a.to_string() + " vs " +
                                     b.to_string());
            }
        }
    }
    return t;
}

Tally criterion6() {
    Tally t;
    std::map<std::string, int> rows;
    for (auto& rec : curated_records()) {
        const AlgebraData& alg = algebra(rec.ambient);
        SubalgebraEmbedding e = curated_embedding(rec);
        rows[rec.id.substr(0, rec.id.rfind(':'))]++;
        if (rec.compat) {
            std::string got = lattice_compat(alg, e.ideals.at(0).center_images.at(0));
            t.expect(got == *rec.compat, rec.id + " compat " + got);
        }
        if (rec.atilde) {
            // a~ is the class of the image as a multiple of the designated generator
            const Vec& v = e.ideals.at(0).center_images.at(0);
            int theta = alg.center_index(alg.fundamental_coweights[alg.designated.at(0)]);
            int cls = alg.center_index(v);
            t.expect(alg.center_multiple(theta, *rec.atilde) == cls, rec.id + " atilde");
        }
        for (auto& [zname, want] : rec.expect) {
            LevelSet got = classify_levels(config(alg, alg.subgroup(zname), e, alg.outer("id")));
            t.expect(got == LevelSet::parse(want), rec.id + " " + zname + " got " + got.to_string());
        }
    }
    t.expect(rows["e6:table2"] == 20, "table 2 rows");
    t.expect(rows["e6:table3"] == 2, "table 3 rows");
    t.expect(rows["e6:table4"] == 7, "table 4 rows");
    t.expect(rows["e6:table5"] == 15, "table 5 rows");
    t.expect(rows["A4:S"] + rows["A5:S"] == 6, "A4/A5 vectors");
    return t;
}

Tally criterion7() {
    Tally t;
    t.expect(oracle::lcm_divisibility_failures(60) == 0, "lcm divisibility");
    t.expect(oracle::lcm_fraction_failures(60) == 0, "lcm of fractions");
    return t;
}

Rational pair_exponent(const ModelConfig& cfg, long k, const Vec& mt, const Vec& m) {
    const AlgebraData& alg = algebra(cfg.alg);
    Vec om = apply_outer(cfg.twist, mt);
    int w = alg.center_index(mt - om);
    Rational e = bihom_linear(alg, cfg.Z, cfg.variant, cfg.Z.coeffs.at(w), cfg.Z.coeffs.at(alg.center_index(m)))
                     .at(k)
                     .exponent;
    return e - 2 * Rational(k) * inner(alg.space, m, om);
}

Tally criterion8() {
    Tally t;
    // bihomomorphism laws
    for (auto id : oracle::catalog(8)) {
        const AlgebraData& alg = algebra(id);
        for (auto& z : alg.subgroups)
            for (int v : variants(alg))
                for (long adm = admissible_levels(alg, z, {v}).modulus, k = 0; k < 4 * adm; k += adm)
                    for (int a : z.elements)
                        for (int b : z.elements)
                            for (int c : z.elements) {
                                TheoryVariant tv{v};
                                t.expect(bihom(alg, z, tv, k, alg.center_add[a][b], c) ==
                                             bihom(alg, z, tv, k, a, c) * bihom(alg, z, tv, k, b, c),
                                         id.name() + " bihom first slot");
                                t.expect(bihom(alg, z, tv, k, a, alg.center_add[b][c]) ==
                                             bihom(alg, z, tv, k, a, b) * bihom(alg, z, tv, k, a, c),
                                         id.name() + " bihom second slot");
                            }
    }
    // representative independence under Q^vee shifts, 1000 per algebra
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (auto id : oracle::catalog(8)) {
        const AlgebraData& alg = algebra(id);
        SubalgebraEmbedding g = full_embedding(alg);
        std::vector<ModelConfig> cfgs;
        for (auto& z : alg.subgroups)
            for (auto& w : alg.diagram_automorphisms)
                for (int v : variants(alg)) cfgs.push_back(config(alg, z, g, w, v));
        for (int trial = 0; trial < 1000; ++trial) {
            const ModelConfig& cfg = cfgs[trial % cfgs.size()];
            const CenterSubgroup& zo = z_omega(alg, cfg.Z, cfg.twist);
            int zt = zo.elements[std::uniform_int_distribution<int>(0, int(zo.elements.size()) - 1)(rng)];
            int zz = cfg.Z.elements[std::uniform_int_distribution<int>(0, int(cfg.Z.elements.size()) - 1)(rng)];
            long k = config_admissibility(cfg).modulus * std::uniform_int_distribution<long>(-5, 5)(rng);
            Vec mt = alg.center[zt].rep, m = alg.center[zz].rep, mt2 = mt, m2 = m;
            for (int i = 0; i < alg.rank(); ++i) {
                mt2 = mt2 + Rational(coef(rng)) * alg.simple_coroots[i];
                m2 = m2 + Rational(coef(rng)) * alg.simple_coroots[i];
            }
            Rational d = pair_exponent(cfg, k, mt, m) - pair_exponent(cfg, k, mt2, m2);
            t.expect(is_integer(d / 2), describe(cfg) + " shift");
        }
    }
    // monotonicity along regular inclusions in A_r, D_r, r <= 6
    for (char series : {'A', 'D'})
        for (int r = series == 'A' ? 1 : 4; r <= 6; ++r) {
            const AlgebraData& alg = algebra(AlgebraId{series, r});
            for (auto& s : enumerate_regular(alg)) {
                std::vector<RegularSpec> kids;
                {
                    auto cat = regular_catalog(alg);
                    kids = cat->children(s);
                }
                SubalgebraEmbedding eh = embed_regular(alg, s);
                for (auto& kid : kids) {
                    SubalgebraEmbedding ek = embed_regular(alg, kid);
                    for (auto& z : alg.subgroups)
                        for (auto& w : alg.diagram_automorphisms)
                            for (int v : variants(alg)) {
                                ModelConfig big = config(alg, z, eh, w, v), small = config(alg, z, ek, w, v);
                                LevelSet a = classify_levels(big), b = classify_levels(small);
                                bool ok = true;
                                for (long k = 0; k < 4 * std::lcm(a.modulus, b.modulus); ++k)
                                    ok = ok && (!a.contains(k) || b.contains(k));
                                t.expect(ok, describe(big) + " > " + ek.label);
                            }
                }
            }
        }
    // outer-automorphism covariance for D4 and e6
    for (auto name : {"D4", "e6"}) {
        const AlgebraData& alg = algebra(name);
        std::vector<SubalgebraEmbedding> hs;
        for (auto& s : enumerate_regular(alg)) hs.push_back(embed_regular(alg, s));
        if (std::string(name) == "e6")
            for (auto& e : curated_embeddings(alg.id)) hs.push_back(e);
        for (auto& h : hs)
            for (auto& z : alg.subgroups)
                for (auto& tw : alg.diagram_automorphisms)
                    for (int v : variants(alg))
                        for (auto& w : alg.diagram_automorphisms)
                            t.expect(twisted_reduction_check(config(alg, z, h, tw, v), w),
                                     describe(config(alg, z, h, tw, v)) + " by " + w.name);
    }
    return t;
}

Tally criterion9() {
    Tally t;
    auto s = oracle::coset_search_trials(600, 77);
    t.checked = s.trials;
    t.failed = s.disagreements + s.bad_witnesses;
    if (s.trials < 500 || s.meets == 0 || s.misses == 0) ++t.failed;
    t.notes.push_back(std::to_string(s.meets) + " meeting, " + std::to_string(s.misses) + " disjoint, " +
                      std::to_string(s.beyond_bound) + " needing coefficients beyond 6");
    return t;
}

}  // namespace

int main() {
    struct Item {
        int n;
        const char* what;
        Tally (*run)();
    };
    const Item items[] = {
        {1, "h = g level sets, all algebras of rank <= 8", criterion1},
        {2, "A4 regular subalgebras", [] { return criterion_a(4); }},
        {3, "A5 regular subalgebras", [] { return criterion_a(5); }},
        {4, "D5 and D4 regular subalgebras", criterion4},
        {5, "A_r closed form against the engine, r <= 8", criterion5},
        {6, "curated e6, A4 and A5 tables", criterion6},
        {7, "lcm identities, a <= 60, up to three terms", criterion7},
        {8, "property suites", criterion8},
        {9, "coset_meets_subspace against bounded search", criterion9},
    };
    int failures = 0;
    for (auto& it : items) {
        Tally t;
        std::string error;
        try {
            t = it.run();
        } catch (const std::exception& e) {
            error = e.what();
            t.failed = 1;
        }
        bool ok = t.failed == 0;
        failures += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << it.n << ": " << it.what << " (" << t.checked
                  << " checks, " << t.failed << " failed)";
        if (!error.empty()) std::cout << " error: " << error;
        std::cout << "\n";
        for (auto& n : t.notes) std::cout << "    " << n << "\n";
    }
    return failures ? 1 : 0;
}
