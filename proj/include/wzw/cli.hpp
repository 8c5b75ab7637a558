#pragma once

// Command-line frontend: subalgebra grammar, JSON reports, reproduction
// targets and the subcommand dispatcher.

#include "anomaly.hpp"
#include "curated.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <regex>

namespace wzw {

inline void to_json(nlohmann::json& j, const LevelSet& s) {
    j = nlohmann::json{{"modulus", s.modulus}, {"residues", s.residues}};
}
inline void from_json(const nlohmann::json& j, LevelSet& s) {
    s.modulus = j.at("modulus").get<long>();
    s.residues = j.at("residues").get<std::vector<long>>();
}

}  // namespace wzw

namespace wzw::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// subalgebra grammar

namespace detail {

inline std::string trim(const std::string& s) { return wzw::detail::trim(s); }

struct Term {
    int mult = 1;
    char series = 'A';
    int rank = 1;
};

inline std::vector<Term> parse_terms(const std::string& body) {
    static const std::regex term_re(R"(^\s*(\d*)\s*([A-Ga-g])(\d+)\s*$)");
    std::vector<Term> out;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, '+')) {
        std::smatch m;
        if (!std::regex_match(part, m, term_re)) throw std::invalid_argument("cannot parse ideal '" + part + "'");
        Term t;
        t.mult = m[1].str().empty() ? 1 : std::stoi(m[1].str());
        t.series = char(std::toupper(static_cast<unsigned char>(m[2].str()[0])));
        t.rank = std::stoi(m[3].str());
        bool ok = (t.series == 'A' && t.rank >= 1) || (t.series == 'B' && t.rank >= 2) ||
                  (t.series == 'C' && t.rank >= 2) || (t.series == 'D' && t.rank >= 2) ||
                  (t.series == 'E' && t.rank >= 6 && t.rank <= 8) || (t.series == 'F' && t.rank == 4) ||
                  (t.series == 'G' && t.rank == 2);
        if (!ok || t.mult < 1) throw std::invalid_argument("unknown ideal '" + trim(part) + "'");
        out.push_back(t);
    }
    if (out.empty()) throw std::invalid_argument("empty subalgebra expression");
    return out;
}

}  // namespace detail

inline SubalgebraEmbedding parse_subalgebra(const std::string& raw, const AlgebraId& ambient) {
    const AlgebraData& alg = algebra(ambient);
    std::string expr = detail::trim(raw);
    if (expr == "g") return full_embedding(alg);
    if (expr.find(':') != std::string::npos) {
        const CuratedRecord& rec = curated_record(expr);
        if (parse_algebra(rec.ambient) != ambient)
            throw std::invalid_argument("row " + expr + " belongs to " + rec.ambient);
        return curated_embedding(rec);
    }
    if (ambient == AlgebraId{'E', 6} || ambient == AlgebraId{'A', 4} || ambient == AlgebraId{'A', 5})
        for (auto& rec : curated_records())
            if (!rec.alias.empty() && rec.alias == expr && parse_algebra(rec.ambient) == ambient)
                return curated_embedding(rec);

    std::string body = expr;
    std::optional<int> selector;
    if (auto at = expr.rfind('@'); at != std::string::npos) {
        std::string sel = expr.substr(at + 1);
        body = expr.substr(0, at);
        if (sel.empty() || !std::all_of(sel.begin(), sel.end(), ::isdigit) || std::stoi(sel) < 1)
            throw std::invalid_argument("invalid selector '@" + sel + "'");
        selector = std::stoi(sel);
    }
    std::vector<Ideal> ideals;
    int total = 0, span = 0;
    for (auto& t : detail::parse_terms(body)) {
        for (int i = 0; i < t.mult; ++i) {
            std::vector<std::pair<char, int>> parts{{t.series, t.rank}};
            if (ambient.series != 'D') {
                if (t.series == 'D' && t.rank == 2) parts = {{'A', 1}, {'A', 1}};
                if (t.series == 'D' && t.rank == 3) parts = {{'A', 3}};
            }
            if (t.series == 'C' && t.rank == 2) parts = {{'B', 2}};
            for (auto [s, r] : parts) {
                ideals.push_back({s, r, {}});
                total += r;
                span += (s == 'A') ? r + 1 : r;
            }
        }
    }
    if (total > alg.rank()) throw std::invalid_argument("rank overflow: " + body + " has rank " + std::to_string(total));
    if (ambient.series == 'A' && span > alg.rank() + 1)
        throw std::invalid_argument("rank overflow: sum of (r_i+1) exceeds " + std::to_string(alg.rank() + 1));
    if (ambient.series == 'D' && span > alg.rank())
        throw std::invalid_argument("rank overflow: block sizes exceed " + std::to_string(alg.rank()));
    std::stable_sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) {
        return a.series != b.series ? a.series < b.series : a.rank > b.rank;
    });
    RegularSpec probe;
    probe.ideals = ideals;
    std::string target = probe.name();

    auto cat = regular_catalog(alg);
    std::vector<RegularSpec> matches;
    for (auto& s : cat->enumerate())
        if (s.name() == target) matches.push_back(s);
    if (matches.empty()) throw std::invalid_argument("no regular subalgebra " + target + " in " + ambient.name());
    const RegularSpec* chosen = &matches.front();
    bool two = cat->has_two_embeddings(matches.front().ideals);
    if (selector) {
        chosen = nullptr;
        if (two) {
            for (auto& m : matches)
                if (m.embedding_choice == *selector) chosen = &m;
        } else if (*selector <= int(matches.size())) {
            chosen = &matches[*selector - 1];
        }
        if (!chosen) throw std::invalid_argument("invalid selector '@" + std::to_string(*selector) + "' for " + target);
    }
    RegularSpec spec = *chosen;
    cat.lock.unlock();
    return embed_regular(alg, spec);
}

// ---------------------------------------------------------------------------
// reports

struct WitnessRecord {
    long k = 0;
    std::vector<std::string> M_tilde, M;
    std::string phase;
    bool operator==(const WitnessRecord&) const = default;
};

struct Report {
    std::string algebra, Z, subalgebra, twist, variant = "+";
    long admissible_modulus = 1;
    LevelSet anomaly_free;
    std::vector<WitnessRecord> witnesses;
    bool extrapolated = false;
    std::optional<long> level;
    std::optional<bool> anomalous;
    bool operator==(const Report& o) const {
        return algebra == o.algebra && Z == o.Z && subalgebra == o.subalgebra && twist == o.twist &&
               variant == o.variant && admissible_modulus == o.admissible_modulus &&
               anomaly_free == o.anomaly_free && witnesses == o.witnesses && extrapolated == o.extrapolated &&
               level == o.level && anomalous == o.anomalous;
    }
};

inline std::vector<std::string> vec_strings(const Vec& v) {
    std::vector<std::string> out;
    for (auto& x : v) out.push_back(x.get_str());
    return out;
}


inline void to_json(json& j, const WitnessRecord& w) {
    j = json{{"k", w.k}, {"M_tilde", w.M_tilde}, {"M", w.M}, {"phase", w.phase}};
}
inline void from_json(const json& j, WitnessRecord& w) {
    w.k = j.at("k").get<long>();
    w.M_tilde = j.at("M_tilde").get<std::vector<std::string>>();
    w.M = j.at("M").get<std::vector<std::string>>();
    w.phase = j.at("phase").get<std::string>();
}

inline void to_json(json& j, const Report& r) {
    j = json{{"algebra", r.algebra},
             {"Z", r.Z},
             {"subalgebra", r.subalgebra},
             {"twist", r.twist},
             {"variant", r.variant},
             {"admissible_modulus", r.admissible_modulus},
             {"anomaly_free", r.anomaly_free},
             {"witnesses", r.witnesses},
             {"extrapolated", r.extrapolated}};
    if (r.level) j["level"] = *r.level;
    if (r.anomalous) j["anomalous"] = *r.anomalous;
}
inline void from_json(const json& j, Report& r) {
    r.algebra = j.at("algebra").get<std::string>();
    r.Z = j.at("Z").get<std::string>();
    r.subalgebra = j.at("subalgebra").get<std::string>();
    r.twist = j.at("twist").get<std::string>();
    r.variant = j.at("variant").get<std::string>();
    r.admissible_modulus = j.at("admissible_modulus").get<long>();
    r.anomaly_free = j.at("anomaly_free").get<LevelSet>();
    r.witnesses = j.at("witnesses").get<std::vector<WitnessRecord>>();
    r.extrapolated = j.at("extrapolated").get<bool>();
    r.level = j.contains("level") ? std::optional<long>(j["level"].get<long>()) : std::nullopt;
    r.anomalous = j.contains("anomalous") ? std::optional<bool>(j["anomalous"].get<bool>()) : std::nullopt;
}

inline WitnessRecord witness_record(long k, const Witness& w) {
    return {k, vec_strings(w.M_tilde), vec_strings(w.M), w.phase.exponent.get_str()};
}

inline Report base_report(const ModelConfig& cfg) {
    Report r;
    r.algebra = cfg.alg.name();
    r.Z = cfg.Z.name;
    r.subalgebra = cfg.h.provenance == "curated" ? cfg.h.row_id : cfg.h.label;
    r.twist = cfg.twist.name;
    r.variant = cfg.variant.sign == -1 ? "-" : "+";
    r.admissible_modulus = config_admissibility(cfg).modulus;
    r.extrapolated = is_extrapolated(cfg);
    return r;
}

inline Report classify_report(const ModelConfig& cfg) {
    Report r = base_report(cfg);
    r.anomaly_free = classify_levels(cfg);
    long period = std::lcm(r.anomaly_free.modulus, r.admissible_modulus);
    for (long k = 0; k < period; k += r.admissible_modulus) {
        if (r.anomaly_free.contains(k)) continue;
        Verdict v = check_level(cfg, k);
        if (v.witness) r.witnesses.push_back(witness_record(k, *v.witness));
    }
    return r;
}

inline Report check_report(const ModelConfig& cfg, long k) {
    Verdict v = check_level(cfg, k);
    Report r = base_report(cfg);
    r.anomaly_free = classify_levels(cfg);
    r.level = k;
    r.anomalous = v.anomalous;
    if (v.witness) r.witnesses.push_back(witness_record(k, *v.witness));
    return r;
}

// ---------------------------------------------------------------------------
// expected values restated from the case-by-case statements

inline bool d_flag_saturated(const AlgebraData& alg, const RegularSpec& s, bool& all_odd, bool& has_d) {
    int span = 0;
    all_odd = true;
    has_d = false;
    for (auto& i : s.ideals) {
        if (i.series == 'A') {
            span += i.rank + 1;
            all_odd = all_odd && i.rank % 2 == 1;
        } else {
            span += i.rank;
            has_d = true;
        }
    }
    return span == alg.rank();
}

inline LevelSet with_admissibility(const ModelConfig& cfg, const LevelSet& s) {
    return intersect(s, LevelSet::multiples(config_admissibility(cfg).modulus));
}

// h = g, every algebra.
inline LevelSet expected_h_equals_g(const ModelConfig& cfg) {
    const AlgebraData& alg = algebra(cfg.alg);
    const std::string& z = cfg.Z.name;
    const std::string& w = cfg.twist.name;
    bool untwisted = w == "id";
    bool minus = cfg.variant.sign == -1;
    if (cfg.Z.order() == 1) return LevelSet::multiples(1);
    switch (alg.id.series) {
        case 'A':
            return with_admissibility(cfg, untwisted ? LevelSet::multiples(long(cfg.Z.order())) : LevelSet::multiples(1));
        case 'B':
        case 'C':
            return with_admissibility(cfg, LevelSet::multiples(1));
        case 'D':
            if (alg.id.is_d_odd())
                return with_admissibility(cfg, untwisted ? LevelSet::multiples(z == "Z4" ? 4 : 2) : LevelSet::multiples(1));
            if (untwisted) return LevelSet::multiples(2);
            if (alg.rank() == 4 && w != "flip") {
                // w2 and w3 are the w1 statements with Z permuted by w4^{-1} and w4
                if (w == "w4") return z == "full" && minus ? LevelSet::none() : LevelSet::multiples(1);
                if (w == "w4inv") {
                    if (z != "full") return LevelSet::multiples(1);
                    return minus ? LevelSet{2, {1}} : LevelSet::multiples(2);
                }
                std::map<std::string, std::string> back;
                if (w == "w2") back = {{"Z1", "Z2"}, {"Z2", "Zdiag"}, {"Zdiag", "Z1"}, {"full", "full"}};
                if (w == "w3") back = {{"Z1", "Zdiag"}, {"Z2", "Z1"}, {"Zdiag", "Z2"}, {"full", "full"}};
                std::string zz = w == "w1" ? z : back.at(z);
                if (zz == "Z2") return LevelSet::multiples(1);
                if (zz == "full" && minus) return LevelSet::none();
                return LevelSet::multiples(2);
            }
            if (z == "Z2") return with_admissibility(cfg, LevelSet::multiples(1));
            if (z == "full" && minus) return LevelSet::none();
            return LevelSet::multiples(2);
        case 'E':
            if (alg.rank() == 6) return untwisted ? LevelSet::multiples(3) : LevelSet::multiples(1);
            return with_admissibility(cfg, LevelSet::multiples(1));
        default:
            return LevelSet::multiples(1);
    }
}

// D_r, r odd, regular h.
inline LevelSet expected_d_odd_regular(const ModelConfig& cfg, const RegularSpec& s) {
    const AlgebraData& alg = algebra(cfg.alg);
    if (cfg.Z.order() == 1) return LevelSet::multiples(1);
    if (cfg.twist.name != "id") return with_admissibility(cfg, LevelSet::multiples(1));
    bool all_odd, has_d;
    bool sat = d_flag_saturated(alg, s, all_odd, has_d);
    bool z4 = cfg.Z.name == "Z4";
    if (sat && all_odd) return LevelSet::multiples(z4 ? 4 : 2);
    return LevelSet::multiples(z4 ? 2 : 1);
}

// D_r, r even, regular h, untwisted or twisted by the alpha_{r-1} <-> alpha_r flip (w1 for D4).
inline LevelSet expected_d_even_regular(const ModelConfig& cfg, const RegularSpec& s) {
    const AlgebraData& alg = algebra(cfg.alg);
    if (cfg.Z.order() == 1) return LevelSet::multiples(1);
    bool all_odd, has_d;
    bool sat = d_flag_saturated(alg, s, all_odd, has_d);
    bool half_even = (alg.rank() / 2) % 2 == 0;
    const std::string& z = cfg.Z.name;
    bool minus = cfg.variant.sign == -1;
    int choice = s.embedding_choice;
    LevelSet out;
    if (cfg.twist.name == "id") {
        if (sat && all_odd) {
            out = LevelSet::multiples(2);
            if (half_even && !has_d && ((z == "Z1" && choice == 1) || (z == "Zdiag" && choice == 2)))
                out = LevelSet::multiples(1);
        } else {
            out = z == "Z2" || (half_even && !has_d) ? LevelSet::multiples(1) : LevelSet::multiples(2);
        }
        return with_admissibility(cfg, out);
    }
    if (z == "Z2") return with_admissibility(cfg, LevelSet::multiples(1));
    if (sat && all_odd) {
        if (half_even && !has_d) {
            if (z != "full") out = LevelSet::multiples(1);
            else if (!minus) out = choice == 1 ? LevelSet::multiples(1) : LevelSet::multiples(2);
            else out = choice == 1 ? LevelSet::none() : LevelSet{2, {1}};
        } else {
            out = z == "full" && minus ? LevelSet::none() : LevelSet::multiples(2);
        }
    } else {
        out = half_even && !has_d ? LevelSet::multiples(1) : LevelSet::multiples(2);
    }
    return with_admissibility(cfg, out);
}

// D4 labels under w4 (embedding superscripts as @1/@2).
inline std::string d4_w4_label(const std::string& l) {
    static const std::map<std::string, std::string> m = {
        {"A1", "A1"},        {"A2", "A2"},       {"2A1@1", "2A1@2"}, {"2A1@2", "D2"},   {"A3@1", "A3@2"},
        {"A3@2", "D3"},      {"D2", "2A1@1"},    {"D3", "A3@1"},     {"2D2", "2D2"},    {"A1+D2", "A1+D2"},
        {"g", "g"}};
    return m.at(l);
}

inline std::string d4_w4_subgroup(const std::string& z) {
    static const std::map<std::string, std::string> m = {
        {"Z1", "Zdiag"}, {"Z2", "Z1"}, {"Zdiag", "Z2"}, {"full", "full"}, {"trivial", "trivial"}};
    return m.at(z);
}

inline LevelSet expected_d4_regular(const ModelConfig& cfg, const std::string& label) {
    const AlgebraData& alg = algebra(cfg.alg);
    auto cat = regular_catalog(alg);
    auto by_label = [&](const std::string& l) -> RegularSpec {
        for (auto& s : cat->enumerate())
            if (cat->label(s) == l) return s;
        throw std::logic_error("no D4 subalgebra " + l);
    };
    const std::string& w = cfg.twist.name;
    const std::string& z = cfg.Z.name;
    bool minus = cfg.variant.sign == -1;
    static const std::set<std::string> touched = {"2A1@1", "2A1@2", "A3@1", "A3@2", "D2", "D3", "2D2", "A1+D2", "g"};
    if (w == "w4") return touched.count(label) && z == "full" && minus ? LevelSet::none() : LevelSet::multiples(1);
    if (w == "w4inv") {
        if (!touched.count(label) || z != "full") return LevelSet::multiples(1);
        return minus ? LevelSet{2, {1}} : LevelSet::multiples(2);
    }
    if (w == "id" || w == "w1") {
        RegularSpec s = by_label(label);
        cat.lock.unlock();
        return expected_d_even_regular(cfg, s);
    }
    // (w2, Z, h) behaves as (w1, w4^{-1} Z, w4^{-1} h); w3 uses w4
    ModelConfig base = cfg;
    base.twist = alg.outer("w1");
    static const std::vector<std::string> subgroups = {"trivial", "Z1", "Z2", "Zdiag", "full"};
    static const std::vector<std::string> labels = {"A1", "A2", "2A1@1", "2A1@2", "A3@1", "A3@2",
                                                    "D2", "D3", "2D2", "A1+D2", "g"};
    std::string zz, hh;
    if (w == "w3") {
        zz = d4_w4_subgroup(z);
        hh = d4_w4_label(label);
    } else {
        for (auto& c : subgroups)
            if (d4_w4_subgroup(c) == z) zz = c;
        for (auto& c : labels)
            if (d4_w4_label(c) == label) hh = c;
    }
    base.Z = alg.subgroup(zz);
    RegularSpec s = by_label(hh);
    cat.lock.unlock();
    return expected_d_even_regular(base, s);
}

// ---------------------------------------------------------------------------
// reproduction targets

struct ReportRow {
    std::string target, id, cite, quantity, expected, got;
    bool ok() const { return expected == got; }
};

inline const std::vector<std::string>& reproduce_targets() {
    static const std::vector<std::string> t = {"props",  "e6-rank1", "e6-S", "e6-R", "e6-semisimple",
                                               "e6-regular", "A4",   "A5",   "D4",   "D5"};
    return t;
}

inline ModelConfig make_config(const AlgebraData& alg, const CenterSubgroup& z, const SubalgebraEmbedding& h,
                               const OuterAut& twist, int variant = 1) {
    ModelConfig c;
    c.alg = alg.id;
    c.Z = z;
    c.h = h;
    c.twist = twist;
    c.variant.sign = variant;
    return c;
}

inline std::vector<AlgebraId> catalog_up_to_rank(int max_rank) {
    std::vector<AlgebraId> out;
    for (int r = 1; r <= max_rank; ++r) out.push_back({'A', r});
    for (int r = 2; r <= max_rank; ++r) out.push_back({'B', r});
    for (int r = 3; r <= max_rank; ++r) out.push_back({'C', r});
    for (int r = 4; r <= max_rank; ++r) out.push_back({'D', r});
    for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({'E', r});
    if (max_rank >= 4) out.push_back({'F', 4});
    out.push_back({'G', 2});
    return out;
}

inline std::string variant_tag(int v) { return v == -1 ? "(-)" : ""; }

inline std::vector<ReportRow> curated_rows(const std::string& target, const std::string& prefix) {
    std::vector<ReportRow> rows;
    for (auto& rec : curated_records()) {
        if (rec.id.rfind(prefix, 0) != 0) continue;
        const AlgebraData& alg = algebra(rec.ambient);
        SubalgebraEmbedding emb = curated_embedding(rec);
        if (rec.compat) {
            std::string got = emb.ideals.at(0).center_images.empty()
                                  ? "none"
                                  : lattice_compat(alg, emb.ideals[0].center_images[0]);
            rows.push_back({target, rec.id, rec.cite, "compat", *rec.compat, got});
        }
        if (rec.atilde) {
            auto a = euclid_atilde(alg, rec.ideals.at(0));
            std::string got = a ? std::to_string(*a) : "none";
            const Vec& v = emb.ideals[0].center_images[0];
            int theta = alg.center_index(alg.fundamental_coweights[alg.designated.at(0)]);
            if (a && alg.center_index(v) != alg.center_multiple(theta, *a)) got += " (class mismatch)";
            rows.push_back({target, rec.id, rec.cite, "atilde", std::to_string(*rec.atilde), got});
        }
        for (std::size_t i = 0; i < rec.ideals.size(); ++i) {
            if (!rec.ideals[i].index) continue;
            Rational j = dynkin_index(alg, emb, i);
            rows.push_back({target, rec.id, rec.cite, "index[" + emb.ideals[i].label + "]",
                            std::to_string(*rec.ideals[i].index), j.get_str()});
        }
        for (auto& [zname, want] : rec.expect) {
            ModelConfig cfg = make_config(alg, alg.subgroup(zname), emb, alg.outer("id"));
            rows.push_back({target, rec.id, rec.cite, "levels " + zname, LevelSet::parse(want).to_string(),
                            classify_levels(cfg).to_string()});
        }
    }
    return rows;
}

inline std::vector<ReportRow> props_rows() {
    std::vector<ReportRow> rows;
    for (auto id : catalog_up_to_rank(8)) {
        const AlgebraData& alg = algebra(id);
        SubalgebraEmbedding g = full_embedding(alg);
        for (auto& z : alg.subgroups)
            for (auto& w : alg.diagram_automorphisms)
                for (int v : {1, -1}) {
                    if (v == -1 && !alg.id.is_d_even()) continue;
                    ModelConfig cfg = make_config(alg, z, g, w, v);
                    std::string cite = "h=g, " + alg.id.name() + (w.name == "id" ? " untwisted" : " twisted");
                    rows.push_back({"props", alg.id.name() + " " + z.name + variant_tag(v) + " " + w.name, cite,
                                    "levels", expected_h_equals_g(cfg).to_string(), classify_levels(cfg).to_string()});
                }
    }
    return rows;
}

inline std::vector<ReportRow> a_series_rows(int r) {
    std::vector<ReportRow> rows;
    const AlgebraData& alg = algebra(AlgebraId{'A', r});
    std::string target = "A" + std::to_string(r);
    std::vector<RegularSpec> specs = enumerate_regular(alg);
    for (auto& s : specs) {
        SubalgebraEmbedding e = embed_regular(alg, s);
        for (auto& z : alg.subgroups) {
            ModelConfig cfg = make_config(alg, z, e, alg.outer("id"));
            LevelSet want = LevelSet::multiples(config_admissibility(cfg).modulus);
            bool anomalous_h = e.label == "g" || (r == 5 && s.name() == "2A2");
            if (anomalous_h && z.order() > 1) {
                if (r == 4) want = LevelSet::multiples(5);
                if (r == 5 && z.name == "Z6") want = LevelSet::multiples(6);
                if (r == 5 && z.name == "Z3") want = LevelSet::multiples(3);
            }
            rows.push_back({target, e.label + " " + z.name, r == 4 ? "A4 regular example" : "A5 regular example",
                            "levels", want.to_string(), classify_levels(cfg).to_string()});
        }
    }
    auto s_rows = curated_rows(target, target + ":");
    rows.insert(rows.end(), s_rows.begin(), s_rows.end());
    return rows;
}

inline std::vector<ReportRow> d_series_rows(int r) {
    std::vector<ReportRow> rows;
    const AlgebraData& alg = algebra(AlgebraId{'D', r});
    std::string target = "D" + std::to_string(r);
    std::vector<RegularSpec> specs = enumerate_regular(alg);
    for (auto& s : specs) {
        SubalgebraEmbedding e = embed_regular(alg, s);
        for (auto& z : alg.subgroups)
            for (auto& w : alg.diagram_automorphisms)
                for (int v : {1, -1}) {
                    if (v == -1 && (!alg.id.is_d_even() || z.name != "full")) continue;
                    ModelConfig cfg = make_config(alg, z, e, w, v);
                    LevelSet want = r == 4 ? expected_d4_regular(cfg, e.label)
                                           : (alg.id.is_d_odd() ? expected_d_odd_regular(cfg, s)
                                                                : expected_d_even_regular(cfg, s));
                    rows.push_back({target, e.label + " " + z.name + variant_tag(v) + " " + w.name,
                                    target + " regular example", "levels", want.to_string(),
                                    classify_levels(cfg).to_string()});
                }
    }
    return rows;
}

// e6 regular subalgebras: verdicts and the orthogonal-complement column.
inline std::vector<ReportRow> e6_regular_rows() {
    std::vector<ReportRow> rows;
    const AlgebraData& alg = algebra("e6");
    static const std::set<std::string> anomalous = {"g", "A5+A1", "3A2", "A5", "2A2+A1", "2A2"};
    for (auto& s : enumerate_regular(alg)) {
        SubalgebraEmbedding e = embed_regular(alg, s);
        for (auto& w : alg.diagram_automorphisms) {
            ModelConfig cfg = make_config(alg, alg.subgroup("Z3"), e, w);
            LevelSet want = w.name == "id" && anomalous.count(e.label) ? LevelSet::multiples(3) : LevelSet::multiples(1);
            rows.push_back({"e6-regular", e.label + " Z3 " + w.name, "e6 regular subalgebras", "levels",
                            want.to_string(), classify_levels(cfg).to_string()});
        }
    }
    // simple roots by node (1..6, 0 = delta) and complement basis (x1..x6 | y)
    struct Row {
        std::string name;
        std::vector<int> roots;
        std::vector<std::pair<std::vector<std::string>, std::string>> perp;
    };
    const std::vector<Row> table = {
        {"D5", {1, 2, 3, 4, 6}, {{{"1", "1", "1", "1", "1", "-5"}, "6"}}},
        {"A3+2A1", {1, 2, 3, 0, 5}, {{{"1", "1", "1", "1", "-2", "-2"}, "0"}}},
        {"A4+A1", {1, 2, 3, 4, 0}, {{{"1", "1", "1", "1", "1", "-5"}, "0"}}},
        {"A5", {1, 2, 3, 4, 5}, {{{"0", "0", "0", "0", "0", "0"}, "1"}}},
        {"2A2+A1", {1, 2, 4, 5, 6}, {{{"1", "1", "1", "-1", "-1", "-1"}, "6"}}},
        {"2A2", {1, 2, 4, 5}, {{{"1", "1", "1", "-1", "-1", "-1"}, "0"}, {{"0", "0", "0", "0", "0", "0"}, "1"}}}};
    auto cat = regular_catalog(alg);
    for (auto& row : table) {
        std::vector<int> simple;
        for (int n : row.roots) {
            if (n == 0) {
                int idx = -1;
                for (std::size_t i = 0; i < alg.roots.size(); ++i)
                    if (alg.roots[i].coroot == alg.lowest_root_coroot) idx = int(i);
                simple.push_back(idx);
            } else {
                std::vector<int> e(alg.rank(), 0);
                e[n - 1] = 1;
                simple.push_back(cat->tables().index.at(e));
            }
        }
        std::sort(simple.begin(), simple.end());
        RegularSpec s = cat->make_spec(simple);
        rows.push_back({"e6-regular", row.name + " roots", "e6 regular complement table", "type", row.name, s.name()});
        std::vector<Vec> perp;
        for (auto& [x, y] : row.perp) {
            Vec xv;
            for (auto& t : x) xv.push_back(parse_rational(t));
            perp.push_back(e6_from_euclid(xv, parse_rational(y)));
        }
        bool orth = true;
        for (auto& p : perp)
            for (int b : simple) orth = orth && inner(alg.space, p, alg.roots[b].coroot) == 0;
        bool spans = rank(Mat(perp.begin(), perp.end())) == int(perp.size()) &&
                     int(perp.size()) == alg.rank() - int(simple.size());
        rows.push_back({"e6-regular", row.name + " perp", "e6 regular complement table", "complement",
                        "orthogonal basis", orth && spans ? "orthogonal basis" : "mismatch"});
    }
    return rows;
}

inline std::vector<ReportRow> reproduce(const std::string& target) {
    if (target == "props") return props_rows();
    if (target == "e6-rank1") return curated_rows(target, "e6:table2:");
    if (target == "e6-S") {
        auto a = curated_rows(target, "e6:table3:");
        auto b = curated_rows(target, "e6:S:");
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    if (target == "e6-R") return curated_rows(target, "e6:table4:");
    if (target == "e6-semisimple") return curated_rows(target, "e6:table5:");
    if (target == "e6-regular") return e6_regular_rows();
    if (target == "A4") return a_series_rows(4);
    if (target == "A5") return a_series_rows(5);
    if (target == "D4") return d_series_rows(4);
    if (target == "D5") return d_series_rows(5);
    throw std::invalid_argument("unknown target '" + target + "'");
}

// ---------------------------------------------------------------------------
// text output

inline void print_table(std::ostream& out, const std::vector<std::string>& head,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (auto& r : rows)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out << std::left << std::setw(int(w[i])) << r[i] << (i + 1 < r.size() ? "  " : "");
        out << "\n";
    };
    line(head);
    std::vector<std::string> rule;
    for (auto x : w) rule.push_back(std::string(x, '-'));
    line(rule);
    for (auto& r : rows) line(r);
}

inline std::string vec_text(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

inline void print_report(std::ostream& out, const Report& r) {
    out << "algebra      " << r.algebra << "\n"
        << "Z            " << r.Z << "\n"
        << "subalgebra   " << r.subalgebra << "\n"
        << "twist        " << r.twist << "\n"
        << "variant      " << r.variant << "\n"
        << "admissible   " << LevelSet::multiples(r.admissible_modulus).to_string() << "\n";
    if (r.level) out << "level        " << *r.level << "\n" << "anomalous    " << (*r.anomalous ? "true" : "false") << "\n";
    out << "anomaly-free " << r.anomaly_free.to_string() << "\n";
    if (r.extrapolated) out << "extrapolated true\n";
    for (auto& w : r.witnesses) {
        out << "witness k=" << w.k << "  M~=(";
        for (std::size_t i = 0; i < w.M_tilde.size(); ++i) out << (i ? "," : "") << w.M_tilde[i];
        out << ")  M=(";
        for (std::size_t i = 0; i < w.M.size(); ++i) out << (i ? "," : "") << w.M[i];
        out << ")  phase=exp(i pi " << w.phase << ")\n";
    }
}

inline void print_info(std::ostream& out, const AlgebraData& alg, bool as_json) {
    if (as_json) {
        json j;
        j["algebra"] = alg.id.name();
        j["rank"] = alg.rank();
        j["center_order"] = alg.center_order();
        j["torsion"] = alg.torsion_orders;
        json subs = json::array();
        for (auto& z : alg.subgroups) {
            json gens = json::array();
            for (auto& g : z.generators) gens.push_back(vec_strings(g.rep));
            subs.push_back({{"name", z.name}, {"order", z.order()}, {"generators", gens},
                            {"admissible_modulus", admissible_levels(alg, z).modulus}});
        }
        j["subgroups"] = subs;
        json auts = json::array();
        for (auto& a : alg.diagram_automorphisms) auts.push_back({{"name", a.name}, {"perm", a.perm}});
        j["outer_automorphisms"] = auts;
        j["positive_roots"] = alg.num_positive;
        out << j.dump(2) << "\n";
        return;
    }
    out << "algebra   " << alg.id.name() << "\n"
        << "rank      " << alg.rank() << "\n"
        << "roots     " << alg.roots.size() << "\n"
        << "center    order " << alg.center_order();
    if (!alg.torsion_orders.empty()) {
        out << " (";
        for (std::size_t i = 0; i < alg.torsion_orders.size(); ++i) out << (i ? " x " : "") << "Z" << alg.torsion_orders[i];
        out << ")";
    }
    out << "\n";
    std::vector<std::vector<std::string>> rows;
    for (auto& z : alg.subgroups) {
        std::string gens, norms;
        for (auto& g : z.generators) {
            gens += (gens.empty() ? "" : " ") + vec_text(g.rep);
            norms += (norms.empty() ? "" : " ") + inner(alg.space, g.rep, g.rep).get_str();
        }
        rows.push_back({z.name, std::to_string(z.order()), gens.empty() ? "-" : gens, norms.empty() ? "-" : norms,
                        LevelSet::multiples(admissible_levels(alg, z).modulus).to_string()});
    }
    out << "\n";
    print_table(out, {"Z", "order", "generators", "norms", "admissible"}, rows);
    out << "\nouter automorphisms:";
    for (auto& a : alg.diagram_automorphisms) out << " " << a.name;
    out << "\n";
}

// ---------------------------------------------------------------------------
// dispatcher

enum ExitCode : int { kOk = 0, kMismatch = 1, kParse = 2, kInadmissible = 3, kInternal = 4 };

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"WZW coset global-anomaly calculator"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string info_alg;
    auto* info = app.add_subcommand("info", "center, subgroups and admissible levels");
    info->add_option("algebra", info_alg, "algebra name, e.g. A5, D4, e6")->required();

    std::string sub_alg;
    bool only_regular = false, only_curated = false;
    auto* subs = app.add_subcommand("subalgebras", "list regular and curated subalgebras");
    subs->add_option("algebra", sub_alg, "ambient algebra")->required();
    subs->add_flag("--regular", only_regular, "regular classes only");
    subs->add_flag("--curated", only_curated, "curated embeddings only");

    std::string g = "", zname = "full", hexpr = "g", twist = "id", variant = "+";
    long level = 0;
    auto add_cfg = [&](CLI::App* a) {
        a->set_help_flag("--help", "print help");
        a->add_option("--g", g, "ambient algebra")->required();
        a->add_option("--Z", zname, "center subgroup (trivial, Z2, Z1, Zdiag, full, ...)");
        a->add_option("--h", hexpr, "subalgebra expression or curated row id");
        a->add_option("--twist", twist, "diagram automorphism");
        a->add_option("--variant", variant, "+ or - (D_r, r even)");
    };
    auto* check = app.add_subcommand("check", "verdict at a fixed level");
    add_cfg(check);
    check->add_option("--k", level, "level")->required();
    auto* classify = app.add_subcommand("classify", "all anomaly-free admissible levels");
    add_cfg(classify);

    std::string target;
    bool all = false;
    auto* repro = app.add_subcommand("reproduce", "recompute tabulated results and diff against expectations");
    repro->add_option("--target", target, "props, e6-rank1, e6-S, e6-R, e6-semisimple, e6-regular, A4, A5, D4, D5");
    repro->add_flag("--all", all, "every target");

    for (auto* s : {info, subs, check, classify, repro}) s->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kParse;
    }

    ModelConfig cfg;
    try {
        if (*check || *classify) {
            const AlgebraData& alg = algebra(g);
            if (variant != "+" && variant != "-") throw std::invalid_argument("variant must be + or -");
            cfg = make_config(alg, alg.subgroup(zname), parse_subalgebra(hexpr, alg.id), alg.outer(twist),
                              variant == "-" ? -1 : 1);
            validate_config(cfg);
            admissible_levels(alg, cfg.Z, cfg.variant);
        }
        if (*repro && !all && target.empty()) throw std::invalid_argument("reproduce needs --target or --all");
        if (*repro && !all) {
            auto& ts = reproduce_targets();
            if (std::find(ts.begin(), ts.end(), target) == ts.end())
                throw std::invalid_argument("unknown target '" + target + "'");
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }

    try {
        if (*info) {
            print_info(out, algebra(info_alg), as_json);
            return kOk;
        }
        if (*subs) {
            const AlgebraData& alg = algebra(sub_alg);
            json j = json::array();
            std::vector<std::vector<std::string>> rows;
            if (!only_curated) {
                auto cat = regular_catalog(alg);
                auto specs = cat->enumerate();
                for (auto& s : specs) {
                    std::string roots;
                    for (int b : s.root_subset) {
                        std::string c;
                        for (std::size_t i = 0; i < alg.roots[b].simple.size(); ++i)
                            c += (i ? "," : "") + std::to_string(alg.roots[b].simple[i]);
                        roots += (roots.empty() ? "" : " ") + std::string("(") + c + ")";
                    }
                    std::string label = cat->label(s);
                    rows.push_back({label, "regular", std::to_string(s.rank()), roots});
                    j.push_back({{"label", label}, {"provenance", "regular"}, {"rank", s.rank()},
                                 {"name", s.name()}, {"embedding_choice", s.embedding_choice}, {"roots", roots}});
                }
            }
            if (!only_regular && (alg.id == AlgebraId{'E', 6} || alg.id == AlgebraId{'A', 4} || alg.id == AlgebraId{'A', 5})) {
                for (auto& rec : curated_records()) {
                    if (parse_algebra(rec.ambient) != alg.id) continue;
                    std::string labels;
                    for (auto& i : rec.ideals) labels += (labels.empty() ? "" : "+") + i.label;
                    rows.push_back({rec.id, "curated", rec.h + " in " + rec.R, labels});
                    j.push_back({{"label", rec.id}, {"provenance", "curated"}, {"h", rec.h}, {"R", rec.R},
                                 {"cite", rec.cite}, {"alias", rec.alias}});
                }
            }
            if (as_json) out << j.dump(2) << "\n";
            else print_table(out, {"subalgebra", "kind", "rank / R(h)", "simple roots / ideals"}, rows);
            return kOk;
        }
        if (*check) {
            Report r = check_report(cfg, level);
            if (as_json) out << json(r).dump(2) << "\n";
            else print_report(out, r);
            return kOk;
        }
        if (*classify) {
            Report r = classify_report(cfg);
            if (as_json) out << json(r).dump(2) << "\n";
            else print_report(out, r);
            return kOk;
        }
        if (*repro) {
            std::vector<std::string> targets = all ? reproduce_targets() : std::vector<std::string>{target};
            std::vector<ReportRow> rows;
            for (auto& t : targets) {
                auto part = reproduce(t);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            std::size_t bad = 0;
            for (auto& r : rows) bad += !r.ok();
            if (as_json) {
                json j = json::array();
                for (auto& r : rows)
                    j.push_back({{"target", r.target}, {"id", r.id}, {"cite", r.cite}, {"quantity", r.quantity},
                                 {"expected", r.expected}, {"got", r.got}, {"ok", r.ok()}});
                out << json{{"rows", j}, {"mismatches", bad}}.dump(2) << "\n";
            } else {
                std::vector<std::vector<std::string>> t;
                for (auto& r : rows) t.push_back({r.target, r.id, r.quantity, r.expected, r.got, r.ok() ? "ok" : "MISMATCH"});
                print_table(out, {"target", "row", "quantity", "expected", "got", "status"}, t);
                out << "\n" << rows.size() << " rows, " << bad << " mismatches\n";
            }
            return bad ? kMismatch : kOk;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kInadmissible;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}

}  // namespace wzw::cli
