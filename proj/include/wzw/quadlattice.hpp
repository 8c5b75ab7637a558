#pragma once

// Exact rational linear algebra over a quadratic space, integer normal forms,
// and the lattice-coset membership test used by the anomaly engine.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wzw {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row major
using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;

// A vector of coordinates in the ambient basis of some QuadSpace.
using LatticeVector = Vec;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v.at(i) = 1;
    return v;
}

inline void require_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
}

inline Vec operator+(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec operator*(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Rational dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline bool is_integral(const Vec& v) { return std::all_of(v.begin(), v.end(), is_integer); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

inline Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t += c;
    if (t.empty()) throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Rational matrices

inline Mat zero_mat(std::size_t rows, std::size_t cols) { return Mat(rows, zero_vec(cols)); }

inline Mat identity_mat(std::size_t n) {
    Mat m = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t = zero_mat(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Vec mat_vec(const Mat& a, const Vec& v) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty()) return {};
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Mat r = zero_mat(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul shape mismatch");
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    }
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Mat a) { return rref(a).size(); }

// Basis of {x : a x = 0}; `cols` is needed when a has no rows.
inline std::vector<Vec> nullspace(Mat a, std::size_t cols) {
    if (a.empty()) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < cols; ++i) basis.push_back(unit_vec(cols, i));
        return basis;
    }
    auto piv = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec x = zero_vec(cols);
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -a[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

inline Mat inverse(const Mat& a) {
    const std::size_t n = a.size();
    Mat aug = zero_mat(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("inverse of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Mat inv = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Some rational x with a x = b, if any.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
    const std::size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solve shape mismatch");
    const std::size_t cols = rows ? a[0].size() : 0;
    Mat aug = zero_mat(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    Vec x = zero_vec(cols);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
    return x;
}

// Is v in the rational span of `basis`?
inline bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return is_zero(v);
    Mat cols = transpose(Mat(basis.begin(), basis.end()));
    return solve(cols, v).has_value();
}

// ---------------------------------------------------------------------------
// Quadratic space and integer lattices

struct QuadSpace {
    std::size_t dim = 0;
    Mat gram;

    QuadSpace() = default;
    explicit QuadSpace(Mat g) : dim(g.size()), gram(std::move(g)) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (gram[i].size() != dim) throw std::invalid_argument("gram matrix not square");
            for (std::size_t j = 0; j < i; ++j)
                if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram matrix not symmetric");
        }
        if (dim && rank(gram) != dim) throw std::invalid_argument("gram matrix degenerate");
    }
};

inline Rational inner(const QuadSpace& space, const Vec& u, const Vec& v) {
    if (u.size() != space.dim || v.size() != space.dim)
        throw std::invalid_argument("dimension mismatch in inner product");
    Rational s = 0;
    for (std::size_t i = 0; i < space.dim; ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < space.dim; ++j) s += u[i] * space.gram[i][j] * v[j];
    }
    return s;
}

inline Rational norm2(const QuadSpace& space, const Vec& u) { return inner(space, u, u); }

struct IntegerLattice {
    std::vector<Vec> basis;
    std::size_t rank() const { return basis.size(); }

    Vec combination(const IVec& c) const {
        if (c.size() != basis.size()) throw std::invalid_argument("coefficient count mismatch");
        Vec r = basis.empty() ? Vec{} : zero_vec(basis[0].size());
        for (std::size_t i = 0; i < c.size(); ++i) r = r + Rational(c[i]) * basis[i];
        return r;
    }
};

// ---------------------------------------------------------------------------
// Smith normal form: P * A * Q = D with P, Q unimodular, D diagonal with
// d_1 | d_2 | ... and d_i >= 0.

struct SmithForm {
    IMat D, P, Q;
    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
        return d;
    }
    std::size_t rank() const {
        std::size_t r = 0;
        for (auto& d : diagonal())
            if (d != 0) ++r;
        return r;
    }
};

inline IMat identity_imat(std::size_t n) {
    IMat m(n, IVec(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IVec imat_vec(const IMat& a, const IVec& v) {
    IVec r(a.size(), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline SmithForm smith_normal_form(const IMat& a_in) {
    const std::size_t m = a_in.size();
    const std::size_t n = m ? a_in[0].size() : 0;
    SmithForm s{a_in, identity_imat(m), identity_imat(n)};
    IMat& a = s.D;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(s.P[i], s.P[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : s.Q) std::swap(row[i], row[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {  // row_dst += f row_src
        for (std::size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
        for (std::size_t j = 0; j < m; ++j) s.P[dst][j] += f * s.P[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {  // col_dst += f col_src
        for (std::size_t i = 0; i < m; ++i) a[i][dst] += f * a[i][src];
        for (std::size_t i = 0; i < n; ++i) s.Q[i][dst] += f * s.Q[i][src];
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
            if (pi == m) return s;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the remaining block by the pivot
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, Integer(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < n; ++j) a[t][j] = -a[t][j];
            for (std::size_t j = 0; j < m; ++j) s.P[t][j] = -s.P[t][j];
        }
    }
    return s;
}

// Integer solution of a x = b, if one exists.
inline std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("solve_integer shape mismatch");
    SmithForm s = smith_normal_form(a);
    IVec pb = imat_vec(s.P, b);
    IVec y(n, Integer(0));
    for (std::size_t i = 0; i < m; ++i) {
        Integer d = (i < n) ? s.D[i][i] : Integer(0);
        if (d == 0) {
            if (pb[i] != 0) return std::nullopt;
            continue;
        }
        if (pb[i] % d != 0) return std::nullopt;
        y[i] = pb[i] / d;
    }
    return imat_vec(s.Q, y);
}

// Scale a rational row to integers: returns the lcm of denominators.
inline Integer common_denominator(const Vec& row) {
    Integer l = 1;
    for (auto& x : row) {
        Integer d = x.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

struct CosetMeetResult {
    bool meets = false;
    IVec coefficients;     // integer combination of the lattice basis
    Vec witness;           // q = sum coefficients_i basis_i
};

// Does offset + L meet span_R(subspace_basis)?  Work in the coordinates of the
// ambient basis: pick linear functionals vanishing on the subspace and require
// them to vanish on offset + q, an integer linear system in the coefficients of q.
inline CosetMeetResult coset_meets_subspace(const IntegerLattice& lattice, const Vec& offset,
                                            const std::vector<Vec>& subspace_basis) {
    const std::size_t dim = offset.size();
    for (auto& b : lattice.basis) require_same_dim(b, offset);
    for (auto& s : subspace_basis) require_same_dim(s, offset);

    std::vector<Vec> functionals = nullspace(Mat(subspace_basis.begin(), subspace_basis.end()), dim);
    const std::size_t k = lattice.rank();
    IMat a;
    IVec rhs;
    for (auto& w : functionals) {
        Vec row(k + 1);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(w, lattice.basis[j]);
        row[k] = -dot(w, offset);
        Integer den = common_denominator(row);
        IVec irow(k);
        for (std::size_t j = 0; j < k; ++j) irow[j] = Integer(row[j] * den);
        a.push_back(std::move(irow));
        rhs.push_back(Integer(row[k] * den));
    }
    CosetMeetResult res;
    if (a.empty()) {
        res.meets = true;
        res.coefficients = IVec(k, Integer(0));
    } else {
        auto sol = solve_integer(a, rhs);
        if (!sol) return res;
        res.meets = true;
        res.coefficients = *sol;
    }
    res.witness = k ? lattice.combination(res.coefficients) : zero_vec(dim);
    return res;
}

// Is v an integer combination of the lattice basis?
inline bool lattice_contains(const IntegerLattice& lattice, const Vec& v) {
    return coset_meets_subspace(lattice, -v, {}).meets;
}

// ---------------------------------------------------------------------------
// gcd / lcm

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long lcm_of_list(const std::vector<long long>& ks) {
    if (ks.empty()) throw std::invalid_argument("lcm of empty list");
    long long l = 1;
    for (long long k : ks) {
        if (k <= 0) throw std::invalid_argument("lcm requires positive integers");
        l = std::lcm(l, k);
    }
    return l;
}

// a / gcd(a, b_1, ..., b_s)
inline long long lcm_fraction_identity(long long a, const std::vector<long long>& bs) {
    if (bs.empty()) throw std::invalid_argument("lcm_fraction_identity with empty list");
    if (a <= 0) throw std::invalid_argument("lcm_fraction_identity requires positive a");
    long long g = a;
    for (long long b : bs) {
        if (b <= 0) throw std::invalid_argument("lcm_fraction_identity requires positive b");
        g = std::gcd(g, b);
    }
    return a / g;
}

}  // namespace wzw
