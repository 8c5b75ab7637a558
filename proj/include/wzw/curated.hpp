#pragma once

// Loader for the curated embedding records shipped in data/*.txt.
//
// Record syntax (one key per line, '#' comments):
//   [row-id]
//   cite = ...          ambient = e6        h = A2      R = 2A2
//   alias = 2A2@i2      (optional selector name)
//   ideal = A2          starts an ideal; the keys below attach to it
//     label = A2(i2)
//     euclid = x1 .. xn [| y]
//     coweight = c1 .. cr
//     coroots = c1 .. cr [cdelta] / ...
//     index = 2
//   compat = Q | PnotQ | notP
//   atilde = 2
//   expect.Z3 = 3Z

#include "subalg.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef WZWANOM_DEFAULT_DATA_DIR
#define WZWANOM_DEFAULT_DATA_DIR "data"
#endif

namespace wzw {

struct CuratedIdealRecord {
    std::string type;
    std::string label;
    std::optional<Vec> euclid;
    std::optional<Rational> euclid_y;   // e6 only: coefficient of e7/sqrt2
    std::optional<Vec> coweight;
    std::vector<Vec> coroots;           // coefficient lists
    std::optional<long> index;
};

struct CuratedRecord {
    std::string id, cite, ambient, h, R, alias;
    std::vector<CuratedIdealRecord> ideals;
    std::optional<std::string> compat;
    std::optional<long> atilde;
    std::map<std::string, std::string> expect;
    std::string source;  // file:line
};

inline std::string data_dir() {
    if (const char* env = std::getenv("WZWANOM_DATA_DIR"); env && *env) return env;
    return WZWANOM_DEFAULT_DATA_DIR;
}

namespace detail {

inline std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline Vec parse_rationals(const std::string& s) {
    std::istringstream in(s);
    Vec out;
    std::string tok;
    while (in >> tok) out.push_back(parse_rational(tok));
    return out;
}

}  // namespace detail

inline std::vector<CuratedRecord> parse_curated(std::istream& in, const std::string& name) {
    std::vector<CuratedRecord> out;
    std::string line;
    int lineno = 0;
    bool have_format = false;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated record header");
            CuratedRecord r;
            r.id = line.substr(1, line.size() - 2);
            r.source = name + ":" + std::to_string(lineno);
            out.push_back(r);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        std::string key = detail::trim(line.substr(0, eq)), val = detail::trim(line.substr(eq + 1));
        if (key == "format") {
            if (val != "wzwanom-curated 1") fail("unsupported format '" + val + "'");
            have_format = true;
            continue;
        }
        if (!have_format) fail("missing format line");
        if (out.empty()) fail("key outside a record");
        CuratedRecord& r = out.back();
        auto need_ideal = [&]() -> CuratedIdealRecord& {
            if (r.ideals.empty()) fail("'" + key + "' before any ideal");
            return r.ideals.back();
        };
        try {
            if (key == "cite") r.cite = val;
            else if (key == "ambient") r.ambient = val;
            else if (key == "h") r.h = val;
            else if (key == "R") r.R = val;
            else if (key == "alias") r.alias = val;
            else if (key == "ideal") r.ideals.push_back({val, val, {}, {}, {}, {}, {}});
            else if (key == "label") need_ideal().label = val;
            else if (key == "euclid") {
                auto bar = val.find('|');
                need_ideal().euclid = detail::parse_rationals(val.substr(0, bar));
                if (bar != std::string::npos) {
                    Vec y = detail::parse_rationals(val.substr(bar + 1));
                    if (y.size() != 1) fail("expected one value after '|'");
                    need_ideal().euclid_y = y[0];
                }
            } else if (key == "coweight") need_ideal().coweight = detail::parse_rationals(val);
            else if (key == "coroots") {
                std::istringstream parts(val);
                std::string part;
                while (std::getline(parts, part, '/')) need_ideal().coroots.push_back(detail::parse_rationals(part));
            } else if (key == "index") need_ideal().index = std::stol(val);
            else if (key == "compat") {
                if (val != "Q" && val != "PnotQ" && val != "notP") fail("bad compat '" + val + "'");
                r.compat = val;
            } else if (key == "atilde") r.atilde = std::stol(val);
            else if (key.rfind("expect.", 0) == 0) r.expect[key.substr(7)] = val;
            else fail("unknown key '" + key + "'");
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& e) {
            fail(std::string("bad value: ") + e.what());
        }
    }
    return out;
}

inline std::vector<CuratedRecord> load_curated_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::runtime_error("curated data directory not found: " + dir);
    std::vector<fs::path> files;
    for (auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".txt") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<CuratedRecord> all;
    for (auto& f : files) {
        std::ifstream in(f);
        auto recs = parse_curated(in, f.filename().string());
        all.insert(all.end(), recs.begin(), recs.end());
    }
    return all;
}

inline const std::vector<CuratedRecord>& curated_records() {
    static std::mutex mu;
    static std::map<std::string, std::vector<CuratedRecord>> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::string dir = data_dir();
    auto it = cache.find(dir);
    if (it == cache.end()) it = cache.emplace(dir, load_curated_dir(dir)).first;
    return it->second;
}

// Euclidean vector -> coweight coordinates for the ambient.
inline Vec euclid_to_coweight(const AlgebraData& alg, const CuratedIdealRecord& i) {
    if (alg.id.series == 'A') return a_series_from_euclid(*i.euclid);
    if (alg.id == AlgebraId{'E', 6}) return e6_from_euclid(*i.euclid, i.euclid_y.value_or(0));
    throw std::invalid_argument("no Euclidean model for " + alg.id.name());
}

// Coroot coefficient list -> coweight coordinates (last entry, if present, is delta^vee).
inline Vec coroot_combination(const AlgebraData& alg, const Vec& c) {
    const int r = alg.rank();
    if (int(c.size()) != r && int(c.size()) != r + 1)
        throw std::invalid_argument("coroot list needs " + std::to_string(r) + " or " + std::to_string(r + 1) + " entries");
    Vec v = zero_vec(r);
    for (int j = 0; j < r; ++j) v = v + c[j] * alg.simple_coroots[j];
    if (int(c.size()) == r + 1) v = v + c[r] * alg.lowest_root_coroot;
    return v;
}

// Record -> embedding, with the internal consistency checks on the stored forms.
inline SubalgebraEmbedding curated_embedding(const CuratedRecord& rec) {
    const AlgebraData& alg = algebra(rec.ambient);
    SubalgebraEmbedding e;
    e.ambient = alg.id;
    e.label = rec.h;
    e.provenance = "curated";
    e.row_id = rec.id;
    bool complete = true;
    auto fail = [&](const std::string& msg) { throw std::runtime_error(rec.source + " [" + rec.id + "]: " + msg); };
    for (auto& ir : rec.ideals) {
        CuratedIdeal ci;
        ci.type = ir.type;
        ci.label = ir.label;
        ci.tabulated_index = ir.index;
        std::optional<Vec> from_euclid;
        if (ir.euclid) {
            from_euclid = euclid_to_coweight(alg, ir);
            if (ir.coweight && *ir.coweight != *from_euclid) fail("coweight form disagrees with the Euclidean vector");
        } else if (ir.coweight) {
            from_euclid = ir.coweight;
        }
        for (auto& c : ir.coroots) ci.coroot_images.push_back(coroot_combination(alg, c));
        if (from_euclid) ci.center_images.push_back(*from_euclid);
        complete_curated_ideal(ci);
        if (from_euclid && !ci.coroot_images.empty()) {
            CuratedIdeal probe = ci;
            probe.center_images.clear();
            complete_curated_ideal(probe);
            if (probe.center_images.empty() || probe.center_images[0] != *from_euclid)
                fail("center image from coroots disagrees with the Euclidean vector");
        }
        if (ci.coroot_images.empty()) complete = false;
        e.cartan_basis.insert(e.cartan_basis.end(), ci.coroot_images.begin(), ci.coroot_images.end());
        e.ideals.push_back(ci);
    }
    e.cartan_complete = complete && !e.cartan_basis.empty();
    if (e.cartan_complete && rank(Mat(e.cartan_basis.begin(), e.cartan_basis.end())) != int(e.cartan_basis.size()))
        fail("coroot images are linearly dependent");
    return e;
}

inline std::vector<SubalgebraEmbedding> curated_embeddings(const AlgebraId& id) {
    if (!(id == AlgebraId{'E', 6} || id == AlgebraId{'A', 4} || id == AlgebraId{'A', 5}))
        throw std::invalid_argument("no curated embeddings for " + id.name());
    std::vector<SubalgebraEmbedding> out;
    for (auto& r : curated_records())
        if (parse_algebra(r.ambient) == id) out.push_back(curated_embedding(r));
    return out;
}

inline const CuratedRecord& curated_record(const std::string& id) {
    for (auto& r : curated_records())
        if (r.id == id) return r;
    throw std::invalid_argument("unknown curated row '" + id + "'");
}

// Lattice compatibility of a vector: "Q", "PnotQ" or "notP".
inline std::string lattice_compat(const AlgebraData& alg, const Vec& v) {
    if (!alg.in_coweight_lattice(v)) return "notP";
    return alg.in_coroot_lattice(v) ? "Q" : "PnotQ";
}

// a~ from a Euclidean vector: (r+1) x_1 mod (r+1) for A_r, 6 x_1 mod 6 for e6.
inline std::optional<long> euclid_atilde(const AlgebraData& alg, const CuratedIdealRecord& i) {
    if (!i.euclid) return std::nullopt;
    long n = alg.id.series == 'A' ? alg.rank() + 1 : 6;
    Rational a = Rational(n) * (*i.euclid)[0];
    if (a.get_den() != 1) return std::nullopt;
    long v = a.get_num().get_si() % n;
    return v < 0 ? v + n : v;
}

}  // namespace wzw
