#pragma once

// The no-anomaly test: phase arithmetic for the bihomomorphism and the trace
// term, verdicts at fixed level and the full set of anomaly-free levels.

#include "subalg.hpp"

namespace wzw {

// e^{i pi x}, x reduced to [0, 2).
struct Phase {
    Rational exponent = 0;

    static Phase of(const Rational& x) {
        Rational t = x / 2;
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        Phase p;
        p.exponent = x - 2 * Rational(fl);
        return p;
    }
    Phase operator*(const Phase& o) const { return of(exponent + o.exponent); }
    bool trivial() const { return exponent == 0; }
    bool operator==(const Phase& o) const { return exponent == o.exponent; }
};

// Exponent k*x + s (units of i pi); s comes only from the variant sign.
struct LinearExponent {
    Rational x = 0;
    Rational s = 0;
    Phase at(long k) const { return Phase::of(Rational(k) * x + s); }
    LinearExponent operator+(const LinearExponent& o) const { return {x + o.x, s + o.s}; }
};

struct LevelSet {
    long modulus = 1;
    std::vector<long> residues{0};  // sorted, in [0, modulus)

    bool contains(long k) const {
        long m = ((k % modulus) + modulus) % modulus;
        return std::binary_search(residues.begin(), residues.end(), m);
    }
    bool empty() const { return residues.empty(); }
    bool operator==(const LevelSet& o) const { return modulus == o.modulus && residues == o.residues; }

    static LevelSet multiples(long m) { return {m, {0}}; }
    static LevelSet none() { return {1, {}}; }

    // "Z", "3Z", "1+2Z", "{0,2}+4Z", "empty"
    std::string to_string() const {
        if (residues.empty()) return "empty";
        if (residues.size() == 1) {
            std::string m = modulus == 1 ? "Z" : std::to_string(modulus) + "Z";
            return residues[0] == 0 ? m : std::to_string(residues[0]) + "+" + m;
        }
        std::string s = "{";
        for (std::size_t i = 0; i < residues.size(); ++i) s += (i ? "," : "") + std::to_string(residues[i]);
        return s + "}+" + std::to_string(modulus) + "Z";
    }

    // Inverse of to_string.
    static LevelSet parse(const std::string& text) {
        if (text == "empty") return none();
        LevelSet out;
        auto plus = text.find('+');
        std::string base = plus == std::string::npos ? text : text.substr(plus + 1);
        if (base.empty() || base.back() != 'Z') throw std::invalid_argument("bad level set '" + text + "'");
        base.pop_back();
        out.modulus = base.empty() ? 1 : std::stol(base);
        if (out.modulus <= 0) throw std::invalid_argument("bad level set '" + text + "'");
        out.residues.clear();
        if (plus == std::string::npos) {
            out.residues = {0};
        } else {
            std::string rs = text.substr(0, plus);
            if (!rs.empty() && rs.front() == '{') {
                if (rs.back() != '}') throw std::invalid_argument("bad level set '" + text + "'");
                std::istringstream in(rs.substr(1, rs.size() - 2));
                std::string tok;
                while (std::getline(in, tok, ',')) out.residues.push_back(std::stol(tok));
            } else {
                out.residues.push_back(std::stol(rs));
            }
        }
        for (auto& r : out.residues) r = ((r % out.modulus) + out.modulus) % out.modulus;
        std::sort(out.residues.begin(), out.residues.end());
        out.residues.erase(std::unique(out.residues.begin(), out.residues.end()), out.residues.end());
        return out;
    }
};

struct ModelConfig {
    AlgebraId alg;
    CenterSubgroup Z;
    SubalgebraEmbedding h;
    OuterAut twist;
    TheoryVariant variant;
};

struct Witness {
    Vec M_tilde;
    Vec M;
    Phase phase;
};

struct Verdict {
    bool anomalous = false;
    std::optional<Witness> witness;
    bool extrapolated = false;
};

// ---------------------------------------------------------------------------
// bihomomorphism

inline bool uses_pm_rule(const AlgebraData& alg, const CenterSubgroup& z) {
    return alg.id.is_d_even() && z.generators.size() == 2;
}

inline LinearExponent bihom_linear(const AlgebraData& alg, const CenterSubgroup& z, TheoryVariant variant,
                                   const std::vector<int>& m, const std::vector<int>& n) {
    if (variant.sign == -1 && !alg.id.is_d_even())
        throw std::invalid_argument("the - variant exists only for D_r with r even");
    if (z.generators.empty()) return {};
    if (!uses_pm_rule(alg, z)) {
        const Vec& g = z.generators[0].rep;
        return {-Rational(m[0]) * n[0] * inner(alg.space, g, g), 0};
    }
    Vec mm = Rational(m[0]) * z.generators[0].rep + Rational(m[1]) * z.generators[1].rep;
    Vec nn = Rational(n[0]) * z.generators[0].rep + Rational(n[1]) * z.generators[1].rep;
    long anti = long(m[0]) * n[1] - long(m[1]) * n[0];
    LinearExponent e;
    e.x = -inner(alg.space, mm, nn) + make_rational(anti, 2);
    e.s = variant.sign == -1 ? Rational(anti) : Rational(0);
    return e;
}

inline Phase bihom(const AlgebraData& alg, const CenterSubgroup& z, TheoryVariant variant, long k, int zi, int zj) {
    return bihom_linear(alg, z, variant, z.coeffs.at(zi), z.coeffs.at(zj)).at(k);
}

// ---------------------------------------------------------------------------
// configurations

inline void validate_config(const ModelConfig& cfg) {
    const AlgebraData& alg = algebra(cfg.alg);
    if (!(cfg.h.ambient == cfg.alg)) throw std::invalid_argument("subalgebra ambient does not match the algebra");
    if (int(cfg.twist.perm.size()) != alg.rank()) throw std::invalid_argument("twist has the wrong size");
    bool ok = false;
    for (auto& a : alg.diagram_automorphisms) ok = ok || a.perm == cfg.twist.perm;
    if (!ok) throw std::invalid_argument("twist is not a diagram automorphism of " + alg.id.name());
    bool zok = false;
    for (auto& s : alg.subgroups) zok = zok || s.elements == cfg.Z.elements;
    if (!zok) throw std::invalid_argument("Z is not a center subgroup");
    if (cfg.variant.sign == -1 && !alg.id.is_d_even())
        throw std::invalid_argument("the - variant exists only for D_r with r even");
}

inline LevelRule config_admissibility(const ModelConfig& cfg) {
    return admissible_levels(algebra(cfg.alg), cfg.Z, cfg.variant);
}

inline bool is_extrapolated(const ModelConfig& cfg) {
    const AlgebraData& alg = algebra(cfg.alg);
    return cfg.variant.sign == -1 && cfg.Z.order() > 1 && !is_full_center(alg, cfg.Z);
}

struct PairTerm {
    int z_tilde;  // center index of M~
    int z;        // center index of M
    LinearExponent e;
};

// One linear exponent per pair (M~, M).
inline std::vector<PairTerm> pair_terms(const ModelConfig& cfg) {
    validate_config(cfg);
    const AlgebraData& alg = algebra(cfg.alg);
    const CenterSubgroup& zom = z_omega(alg, cfg.Z, cfg.twist);
    std::vector<int> tilde = subgroup_intersection_classes(alg, cfg.h, zom);
    std::vector<PairTerm> out;
    for (int zt : tilde) {
        const Vec& mt = alg.center[zt].rep;
        Vec om = apply_outer(cfg.twist, mt);
        int w = alg.center_index(mt - om);
        if (!cfg.Z.contains(w)) throw std::logic_error("z omega(z)^-1 left Z");
        const auto& m = cfg.Z.coeffs.at(w);
        for (int z : cfg.Z.elements) {
            const Vec& mm = alg.center[z].rep;
            LinearExponent e = bihom_linear(alg, cfg.Z, cfg.variant, m, cfg.Z.coeffs.at(z));
            e.x -= 2 * inner(alg.space, mm, om);
            out.push_back({zt, z, e});
        }
    }
    return out;
}

// Per-ideal pre-check: an anomalous ideal makes the sum anomalous.
inline std::vector<SubalgebraEmbedding> single_ideal_embeddings(const SubalgebraEmbedding& h) {
    std::vector<SubalgebraEmbedding> out;
    if (h.provenance != "curated" || h.ideals.size() < 2) return out;
    for (auto& i : h.ideals) {
        SubalgebraEmbedding e;
        e.ambient = h.ambient;
        e.label = i.label;
        e.provenance = "curated";
        e.row_id = h.row_id;
        e.ideals = {i};
        e.cartan_basis = i.coroot_images;
        e.cartan_complete = !i.coroot_images.empty();
        out.push_back(e);
    }
    return out;
}

inline Verdict check_level_direct(const ModelConfig& cfg, long k) {
    const AlgebraData& alg = algebra(cfg.alg);
    Verdict v;
    v.extrapolated = is_extrapolated(cfg);
    for (auto& t : pair_terms(cfg)) {
        Phase p = t.e.at(k);
        if (!p.trivial()) {
            v.anomalous = true;
            v.witness = Witness{alg.center[t.z_tilde].rep, alg.center[t.z].rep, p};
            return v;
        }
    }
    return v;
}

inline Verdict check_level(const ModelConfig& cfg, long k) {
    validate_config(cfg);
    LevelRule adm = config_admissibility(cfg);
    if (k % adm.modulus != 0)
        throw std::domain_error("level " + std::to_string(k) + " is not admissible (need k in " +
                                std::to_string(adm.modulus) + "Z)");
    for (auto& part : single_ideal_embeddings(cfg.h)) {
        ModelConfig sub = cfg;
        sub.h = part;
        Verdict v = check_level_direct(sub, k);
        if (v.anomalous) {
            v.extrapolated = is_extrapolated(cfg);
            return v;
        }
    }
    return check_level_direct(cfg, k);
}

// k*x + s = 0 mod 2 has period 2v/gcd(u,2) in k for x = u/v.
inline long exponent_period(const Rational& x) {
    if (x == 0) return 1;
    long u = std::labs(mpz_class(x.get_num()).get_si());
    long v = mpz_class(x.get_den()).get_si();
    return 2 * v / std::gcd(u, 2L);
}

// Smallest modulus describing the same subset of Z/L.
inline LevelSet reduce_level_set(long L, const std::vector<bool>& in) {
    for (long d = 1; d <= L; ++d) {
        if (L % d) continue;
        bool periodic = true;
        for (long k = 0; k + d < L && periodic; ++k) periodic = in[k] == in[k + d];
        if (!periodic) continue;
        LevelSet out{d, {}};
        for (long k = 0; k < d; ++k)
            if (in[k]) out.residues.push_back(k);
        if (out.residues.empty()) return LevelSet::none();
        return out;
    }
    throw std::logic_error("unreachable");
}

inline LevelSet classify_levels(const ModelConfig& cfg) {
    validate_config(cfg);
    long adm = config_admissibility(cfg).modulus;
    std::vector<LinearExponent> terms;
    auto add_terms = [&](const ModelConfig& c) {
        for (auto& t : pair_terms(c)) terms.push_back(t.e);
    };
    add_terms(cfg);
    for (auto& part : single_ideal_embeddings(cfg.h)) {
        ModelConfig sub = cfg;
        sub.h = part;
        add_terms(sub);
    }
    long L = adm;
    for (auto& t : terms) L = std::lcm(L, exponent_period(t.x));
    std::vector<bool> in(L, false);
    for (long k = 0; k < L; ++k) {
        if (k % adm) continue;
        bool ok = true;
        for (auto& t : terms)
            if (!t.at(k).trivial()) {
                ok = false;
                break;
            }
        in[k] = ok;
    }
    return reduce_level_set(L, in);
}

// ---------------------------------------------------------------------------
// A_r closed form

inline LevelSet intersect(const LevelSet& a, const LevelSet& b) {
    long L = std::lcm(a.modulus, b.modulus);
    std::vector<bool> in(L);
    for (long k = 0; k < L; ++k) in[k] = a.contains(k) && b.contains(k);
    return reduce_level_set(L, in);
}

inline LevelSet ar_closed_form(int r, int p, const RegularSpec& spec) {
    if (p <= 0 || (r + 1) % p) throw std::invalid_argument("p must divide r+1");
    long adm = (p % 2 == 0 && ((r + 1) / p) % 2 == 1) ? 2 : 1;
    if (p == 1) adm = 1;
    long total = 0;
    std::vector<long long> bs;
    for (auto& i : spec.ideals) {
        if (i.series != 'A') throw std::invalid_argument("A_r regular subalgebras are sums of A-type ideals");
        total += i.rank + 1;
        bs.push_back(i.rank + 1);
    }
    if (total > r + 1) throw std::invalid_argument("ideal ranks exceed the A_r bound");
    if (total < r + 1 || p == 1) return LevelSet::multiples(adm);
    long long l = (r + 1) / lcm_fraction_identity(r + 1, bs);
    long long q = (r + 1) / p;
    long long m = l / std::gcd(q, l);
    return intersect(LevelSet::multiples(m), LevelSet::multiples(adm));
}

// ---------------------------------------------------------------------------
// outer-automorphism covariance

inline ModelConfig conjugate_config(const ModelConfig& cfg, const OuterAut& w) {
    const AlgebraData& alg = algebra(cfg.alg);
    ModelConfig out = cfg;
    out.Z = apply_outer(alg, w, cfg.Z);
    out.h = apply_outer(alg, w, cfg.h);
    out.twist = find_outer(alg, compose(compose(w, cfg.twist), inverse(w)));
    return out;
}

inline bool twisted_reduction_check(const ModelConfig& cfg, const OuterAut& w) {
    const AlgebraData& alg = algebra(cfg.alg);
    ModelConfig img = conjugate_config(cfg, w);
    LevelSet a = classify_levels(cfg);
    LevelSet b = classify_levels(img);
    bool swap = alg.id.is_d_even() && is_full_center(alg, cfg.Z) && cfg.Z.order() == 4 && aut_order(w) == 2;
    LevelSet b_swapped = b;
    if (swap) {
        ModelConfig other = img;
        other.variant.sign = -img.variant.sign;
        b_swapped = classify_levels(other);
    }
    long L = std::lcm(std::lcm(a.modulus, b.modulus), std::lcm(b_swapped.modulus, 2L));
    for (long k = 0; k < 2 * L; ++k) {
        bool lhs = a.contains(k);
        bool rhs = (k % 2 && swap) ? b_swapped.contains(k) : b.contains(k);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace wzw
