#include "ktoric/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ktoric {

Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int floor_mod(const Int& a, const Int& b)
{
    return a - floor_div(a, b) * b;
}

namespace {

void swap_rows(IntMatrix& m, int i, int j)
{
    if (i == j)
        return;
    for (int c = 0; c < m.cols(); ++c)
        std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j)
{
    if (i == j)
        return;
    for (int r = 0; r < m.rows(); ++r)
        std::swap(m.at(r, i), m.at(r, j));
}

// row_i -= q * row_t
void row_axpy(IntMatrix& m, int i, int t, const Int& q)
{
    if (q == 0)
        return;
    for (int c = 0; c < m.cols(); ++c)
        m.at(i, c) -= q * m.at(t, c);
}

// col_j -= q * col_t
void col_axpy(IntMatrix& m, int j, int t, const Int& q)
{
    if (q == 0)
        return;
    for (int r = 0; r < m.rows(); ++r)
        m.at(r, j) -= q * m.at(r, t);
}

void negate_row(IntMatrix& m, int i)
{
    for (int c = 0; c < m.cols(); ++c)
        m.at(i, c) = -m.at(i, c);
}

void negate_col(IntMatrix& m, int j)
{
    for (int r = 0; r < m.rows(); ++r)
        m.at(r, j) = -m.at(r, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& a)
{
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    int pr = 0;  // next pivot row
    for (int col = 0; col < h.cols() && pr < h.rows(); ++col) {
        // gcd elimination in this column below pr; minimal-|pivot| choice
        for (;;) {
            int best = -1;
            for (int i = pr; i < h.rows(); ++i)
                if (h.at(i, col) != 0 && (best < 0 || abs(h.at(i, col)) < abs(h.at(best, col))))
                    best = i;
            if (best < 0)
                break;
            swap_rows(h, pr, best);
            swap_rows(u, pr, best);
            bool clean = true;
            for (int i = pr + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0)
                    continue;
                Int q = h.at(i, col) / h.at(pr, col);
                row_axpy(h, i, pr, q);
                row_axpy(u, i, pr, q);
                if (h.at(i, col) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (h.at(pr, col) == 0)
            continue;
        if (h.at(pr, col) < 0) {
            negate_row(h, pr);
            negate_row(u, pr);
        }
        for (int i = 0; i < pr; ++i) {
            Int q = floor_div(h.at(i, col), h.at(pr, col));
            row_axpy(h, i, pr, q);
            row_axpy(u, i, pr, q);
        }
        ++pr;
    }
    return {std::move(h), std::move(u)};
}

std::vector<Int> SnfResult::diagonal() const
{
    std::vector<Int> d;
    int n = std::min(s.rows(), s.cols());
    for (int i = 0; i < n; ++i)
        d.push_back(s.at(i, i));
    return d;
}

SnfResult snf(const IntMatrix& a)
{
    const int m = a.rows(), n = a.cols();
    SnfResult r;
    r.s = a;
    r.u = IntMatrix::identity(m);
    r.u_inv = IntMatrix::identity(m);
    r.v = IntMatrix::identity(n);
    r.v_inv = IntMatrix::identity(n);
    IntMatrix& s = r.s;

    auto do_row_axpy = [&](int i, int t, const Int& q) {
        row_axpy(s, i, t, q);
        row_axpy(r.u, i, t, q);
        col_axpy(r.u_inv, t, i, -q);
    };
    auto do_col_axpy = [&](int j, int t, const Int& q) {
        col_axpy(s, j, t, q);
        col_axpy(r.v, j, t, q);
        row_axpy(r.v_inv, t, j, -q);
    };

    for (int t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // minimal-|value| pivot in the trailing submatrix
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (s.at(i, j) != 0 &&
                        (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0)
                break;  // trailing submatrix is zero
            if (pi != t) {
                swap_rows(s, t, pi);
                swap_rows(r.u, t, pi);
                swap_cols(r.u_inv, t, pi);
            }
            if (pj != t) {
                swap_cols(s, t, pj);
                swap_cols(r.v, t, pj);
                swap_rows(r.v_inv, t, pj);
            }
            bool dirty = false;
            for (int i = t + 1; i < m; ++i)
                if (s.at(i, t) != 0) {
                    do_row_axpy(i, t, s.at(i, t) / s.at(t, t));
                    if (s.at(i, t) != 0)
                        dirty = true;
                }
            for (int j = t + 1; j < n; ++j)
                if (s.at(t, j) != 0) {
                    do_col_axpy(j, t, s.at(t, j) / s.at(t, t));
                    if (s.at(t, j) != 0)
                        dirty = true;
                }
            if (dirty)
                continue;
            // divisibility fixup: pivot must divide the whole submatrix
            bool fixed = true;
            for (int i = t + 1; i < m && fixed; ++i)
                for (int j = t + 1; j < n && fixed; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        do_row_axpy(t, i, Int(-1));  // row_t += row_i
                        fixed = false;
                    }
            if (fixed)
                break;
        }
        if (t < std::min(m, n) && s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(r.u, t);
            negate_col(r.u_inv, t);
        }
        if (s.at(t, t) == 0)
            break;  // everything from here on is zero
    }
    return r;
}

int rank(const IntMatrix& a)
{
    HnfResult h = hnf(a);
    int rk = 0;
    for (int i = 0; i < h.h.rows(); ++i) {
        bool nz = false;
        for (int j = 0; j < h.h.cols(); ++j)
            if (h.h.at(i, j) != 0) {
                nz = true;
                break;
            }
        if (nz)
            ++rk;
    }
    return rk;
}

int rank_mod_p(const IntMatrix& a, long long p)
{
    if (p < 2)
        throw std::invalid_argument("modulus must be >= 2");
    const int m = a.rows(), n = a.cols();
    std::vector<std::vector<long long>> w(m, std::vector<long long>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Int r = floor_mod(a.at(i, j), Int(p));
            w[i][j] = r.convert_to<long long>();
        }
    auto inv_mod = [&](long long x) {
        long long r = 1, b = x % p, e = p - 2;  // p prime
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rk = 0;
    for (int col = 0; col < n && rk < m; ++col) {
        int piv = -1;
        for (int i = rk; i < m; ++i)
            if (w[i][col] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(w[rk], w[piv]);
        long long iv = inv_mod(w[rk][col]);
        for (int j = col; j < n; ++j)
            w[rk][j] = w[rk][j] * iv % p;
        for (int i = 0; i < m; ++i) {
            if (i == rk || w[i][col] == 0)
                continue;
            long long f = w[i][col];
            for (int j = col; j < n; ++j)
                w[i][j] = ((w[i][j] - f * w[rk][j]) % p + p) % p;
        }
        ++rk;
    }
    return rk;
}

Int determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const int n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return 0;
            swap_rows(w, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    HnfResult h = hnf(a.transposed());
    std::vector<int> zero_rows;
    for (int i = 0; i < h.h.rows(); ++i) {
        bool nz = false;
        for (int j = 0; j < h.h.cols(); ++j)
            if (h.h.at(i, j) != 0) {
                nz = true;
                break;
            }
        if (!nz)
            zero_rows.push_back(i);
    }
    IntMatrix k(a.cols(), static_cast<int>(zero_rows.size()));
    for (int c = 0; c < static_cast<int>(zero_rows.size()); ++c)
        for (int i = 0; i < a.cols(); ++i)
            k.at(i, c) = h.u.at(zero_rows[c], i);
    return k;
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("dimension mismatch in solve");
    SnfResult f = snf(a);
    IntMatrix y = f.u * b;
    const int r = std::min(a.rows(), a.cols());
    IntMatrix x0(a.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        for (int i = 0; i < a.rows(); ++i) {
            Int d = i < r ? f.s.at(i, i) : Int(0);
            if (d == 0) {
                if (y.at(i, c) != 0)
                    return std::nullopt;
            } else {
                if (y.at(i, c) % d != 0)
                    return std::nullopt;
                x0.at(i, c) = y.at(i, c) / d;
            }
        }
    }
    return f.v * x0;
}

FgAbelianGroup FgAbelianGroup::free_group(int rank)
{
    FgAbelianGroup g;
    g.rank = rank;
    return g;
}

FgAbelianGroup FgAbelianGroup::from_invariants(int rank, std::vector<Int> invariants)
{
    FgAbelianGroup g;
    g.rank = rank;
    g.invariant_factors = std::move(invariants);
    return g;
}

Int FgAbelianGroup::torsion_order() const
{
    Int o = 1;
    for (const auto& d : invariant_factors)
        o *= d;
    return o;
}

int FgAbelianGroup::coordinate_count() const
{
    if (presentation)
        return presentation->rows();
    return rank + torsion_count();
}

std::vector<Int> FgAbelianGroup::canonical_coords(const std::vector<Int>& g) const
{
    if (static_cast<int>(g.size()) != coordinate_count())
        throw std::invalid_argument("coordinate vector length mismatch");
    std::vector<Int> free_part, tors_part;
    if (presentation) {
        std::vector<Int> h = snf_u->apply(g);
        for (size_t i = 0; i < snf_moduli.size(); ++i) {
            if (snf_moduli[i] == 0)
                free_part.push_back(h[i]);
            else if (snf_moduli[i] > 1)
                tors_part.push_back(floor_mod(h[i], snf_moduli[i]));
        }
    } else {
        for (int i = 0; i < rank; ++i)
            free_part.push_back(g[i]);
        for (int i = 0; i < torsion_count(); ++i)
            tors_part.push_back(floor_mod(g[rank + i], invariant_factors[i]));
    }
    free_part.insert(free_part.end(), tors_part.begin(), tors_part.end());
    return free_part;
}

std::optional<Int> FgAbelianGroup::order_of(const std::vector<Int>& g) const
{
    std::vector<Int> c = canonical_coords(g);
    for (int i = 0; i < rank; ++i)
        if (c[i] != 0)
            return std::nullopt;
    Int ord = 1;
    for (int i = 0; i < torsion_count(); ++i) {
        const Int& d = invariant_factors[i];
        Int part = d / gcd(d, c[rank + i]);
        ord = lcm(ord, part);
    }
    return ord;
}

FgAbelianGroup cokernel_structure(const IntMatrix& a)
{
    SnfResult f = snf(a);
    FgAbelianGroup g;
    g.presentation = a;
    g.snf_u = f.u;
    g.snf_u_inv = f.u_inv;
    g.snf_moduli.assign(a.rows(), Int(0));
    const int r = std::min(a.rows(), a.cols());
    for (int i = 0; i < r; ++i)
        g.snf_moduli[i] = f.s.at(i, i);
    for (int i = 0; i < a.rows(); ++i) {
        if (g.snf_moduli[i] == 0)
            ++g.rank;
        else if (g.snf_moduli[i] > 1)
            g.invariant_factors.push_back(g.snf_moduli[i]);
    }
    return g;
}

std::optional<Int> element_order(const FgAbelianGroup& g, const std::vector<Int>& coords)
{
    return g.order_of(coords);
}

}  // namespace ktoric
