#include "ktoric/homcomplex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ktoric {

ChainComplex::ChainComplex(int lo, std::vector<int> ranks, std::vector<IntMatrix> diffs)
    : lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs))
{
    if (ranks_.empty())
        ranks_.push_back(0);
    if (diffs_.size() + 1 != ranks_.size())
        throw std::invalid_argument("need one differential per consecutive degree pair");
    for (size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != ranks_[k + 1] || diffs_[k].cols() != ranks_[k])
            throw std::invalid_argument("differential shape mismatch");
        if (k > 0 && !(diffs_[k] * diffs_[k - 1]).is_zero())
            throw std::invalid_argument("differentials do not compose to zero");
    }
}

int ChainComplex::rank_at(int i) const
{
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(ranks_.size()))
        return 0;
    return ranks_[k];
}

IntMatrix ChainComplex::diff_at(int i) const
{
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(diffs_.size()))
        return IntMatrix(rank_at(i + 1), rank_at(i));
    return diffs_[k];
}

HomologyData homology_with_reps(const ChainComplex& c, int i)
{
    HomologyData h;
    h.kernel = kernel_basis(c.diff_at(i));
    auto x = solve(h.kernel, c.diff_at(i - 1));
    if (!x)
        throw std::logic_error("boundaries not contained in cycles");
    h.group = cokernel_structure(*x);
    for (size_t j = 0; j < h.group.snf_moduli.size(); ++j)
        if (h.group.snf_moduli[j] == 0)
            h.canon_to_snf.push_back(static_cast<int>(j));
    for (size_t j = 0; j < h.group.snf_moduli.size(); ++j)
        if (h.group.snf_moduli[j] > 1)
            h.canon_to_snf.push_back(static_cast<int>(j));
    return h;
}

FgAbelianGroup homology(const ChainComplex& c, int i)
{
    return homology_with_reps(c, i).group;
}

std::vector<Int> HomologyData::cycle_class(const std::vector<Int>& z) const
{
    IntMatrix zc(static_cast<int>(z.size()), 1);
    zc.set_column(0, z);
    auto w = solve(kernel, zc);
    if (!w)
        throw std::invalid_argument("vector is not a cycle");
    return group.canonical_coords(w->column(0));
}

std::vector<Int> HomologyData::generator_rep(int t) const
{
    std::vector<Int> e(group.coordinate_count());
    e[canon_to_snf[t]] = 1;
    std::vector<Int> w = group.snf_u_inv->apply(e);
    return kernel.apply(w);
}

ChainComplex shift(const ChainComplex& c, int k)
{
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i)
        ranks.push_back(c.rank_at(i));
    for (int i = c.lo(); i < c.hi(); ++i) {
        IntMatrix d = c.diff_at(i);
        if (k % 2 != 0)
            d = -d;
        diffs.push_back(std::move(d));
    }
    return ChainComplex(c.lo() - k, std::move(ranks), std::move(diffs));
}

IntMatrix ChainMap::map_at(const ChainComplex& c, const ChainComplex& d, int i) const
{
    int k = i - lo;
    if (k < 0 || k >= static_cast<int>(maps.size()))
        return IntMatrix(d.rank_at(i), c.rank_at(i));
    return maps[k];
}

ChainMap scalar_map(const ChainComplex& c, const Int& n)
{
    ChainMap m;
    m.lo = c.lo();
    for (int i = c.lo(); i <= c.hi(); ++i) {
        IntMatrix s(c.rank_at(i), c.rank_at(i));
        for (int j = 0; j < c.rank_at(i); ++j)
            s.at(j, j) = n;
        m.maps.push_back(std::move(s));
    }
    return m;
}

ChainComplex mapping_cone(const ChainComplex& c, const ChainComplex& d, const ChainMap& phi)
{
    for (int i = c.lo() - 1; i <= c.hi(); ++i) {
        IntMatrix lhs = phi.map_at(c, d, i + 1) * c.diff_at(i);
        IntMatrix rhs = d.diff_at(i) * phi.map_at(c, d, i);
        if (!(lhs == rhs))
            throw std::invalid_argument("not a chain map");
    }
    int lo = std::min(c.lo() - 1, d.lo());
    int hi = std::max(c.hi() - 1, d.hi());
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int i = lo; i <= hi; ++i)
        ranks.push_back(c.rank_at(i + 1) + d.rank_at(i));
    for (int i = lo; i < hi; ++i) {
        int rc = c.rank_at(i + 1), rd = d.rank_at(i);
        int rc2 = c.rank_at(i + 2), rd2 = d.rank_at(i + 1);
        IntMatrix m(rc2 + rd2, rc + rd);
        IntMatrix dc = c.diff_at(i + 1);
        IntMatrix dd = d.diff_at(i);
        IntMatrix f = phi.map_at(c, d, i + 1);
        for (int r = 0; r < rc2; ++r)
            for (int s = 0; s < rc; ++s)
                m.at(r, s) = -dc.at(r, s);
        for (int r = 0; r < rd2; ++r)
            for (int s = 0; s < rc; ++s)
                m.at(rc2 + r, s) = f.at(r, s);
        for (int r = 0; r < rd2; ++r)
            for (int s = 0; s < rd; ++s)
                m.at(rc2 + r, rc + s) = dd.at(r, s);
        diffs.push_back(std::move(m));
    }
    return ChainComplex(lo, std::move(ranks), std::move(diffs));
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int p)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int j = start; j < n; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

ChainComplex koszul_complex(const std::vector<IntMatrix>& gs, int module_rank)
{
    const int n = static_cast<int>(gs.size());
    for (const auto& g : gs)
        if (g.rows() != module_rank || g.cols() != module_rank)
            throw std::invalid_argument("endomorphism has wrong shape");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(gs[i] * gs[j] == gs[j] * gs[i]))
                throw std::invalid_argument("endomorphisms do not commute");

    std::vector<std::vector<std::vector<int>>> basis(n + 1);
    std::vector<std::map<std::vector<int>, int>> index(n + 1);
    std::vector<int> ranks(n + 1);
    for (int p = 0; p <= n; ++p) {
        basis[p] = subsets_of_size(n, p);
        for (size_t s = 0; s < basis[p].size(); ++s)
            index[p][basis[p][s]] = static_cast<int>(s);
        ranks[p] = static_cast<int>(basis[p].size()) * module_rank;
    }
    std::vector<IntMatrix> diffs;
    for (int p = 0; p < n; ++p) {
        IntMatrix d(ranks[p + 1], ranks[p]);
        for (size_t s = 0; s < basis[p].size(); ++s) {
            const auto& sub = basis[p][s];
            for (int j = 0; j < n; ++j) {
                if (std::binary_search(sub.begin(), sub.end(), j))
                    continue;
                std::vector<int> t = sub;
                t.insert(std::lower_bound(t.begin(), t.end(), j), j);
                int pos = static_cast<int>(std::lower_bound(t.begin(), t.end(), j) - t.begin());
                int sign = pos % 2 == 0 ? 1 : -1;
                int ti = index[p + 1][t];
                for (int r = 0; r < module_rank; ++r)
                    for (int q = 0; q < module_rank; ++q)
                        d.at(ti * module_rank + r, static_cast<int>(s) * module_rank + q) +=
                            sign * gs[j].at(r, q);
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(0, std::move(ranks), std::move(diffs));
}

bool is_prime(const Int& p)
{
    if (p < 2)
        return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

bool mult_injectivity(const FgAbelianGroup& g, const Int& p)
{
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime");
    for (const auto& d : g.invariant_factors)
        if (d % p == 0)
            return false;
    return true;
}

IntMatrix induced_map(const HomologyData& src, const HomologyData& dst, const IntMatrix& f)
{
    int n1 = src.group.rank + src.group.torsion_count();
    int n2 = dst.group.rank + dst.group.torsion_count();
    IntMatrix m(n2, n1);
    for (int t = 0; t < n1; ++t) {
        std::vector<Int> rep = src.generator_rep(t);
        std::vector<Int> img = dst.cycle_class(f.apply(rep));
        m.set_column(t, img);
    }
    return m;
}

IntMatrix canonical_relations(const FgAbelianGroup& g)
{
    int n = g.rank + g.torsion_count();
    IntMatrix d(n, g.torsion_count());
    for (int i = 0; i < g.torsion_count(); ++i)
        d.at(g.rank + i, i) = g.invariant_factors[i];
    return d;
}

bool subgroup_contains(const FgAbelianGroup& g, const IntMatrix& gens, const std::vector<Int>& v)
{
    IntMatrix rhs(static_cast<int>(v.size()), 1);
    rhs.set_column(0, v);
    return solve(gens.augmented(canonical_relations(g)), rhs).has_value();
}

bool subgroups_equal(const FgAbelianGroup& g, const IntMatrix& gens_a, const IntMatrix& gens_b)
{
    for (int j = 0; j < gens_b.cols(); ++j)
        if (!subgroup_contains(g, gens_a, gens_b.column(j)))
            return false;
    for (int j = 0; j < gens_a.cols(); ++j)
        if (!subgroup_contains(g, gens_b, gens_a.column(j)))
            return false;
    return true;
}

FgAbelianGroup subgroup_structure(const FgAbelianGroup& g, const IntMatrix& gens)
{
    IntMatrix rel = canonical_relations(g);
    IntMatrix span = gens.augmented(rel);
    // lattice basis of the column span
    HnfResult h = hnf(span.transposed());
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < h.h.rows(); ++i) {
        bool nz = false;
        for (int j = 0; j < h.h.cols(); ++j)
            if (h.h.at(i, j) != 0)
                nz = true;
        if (nz)
            rows.push_back(h.h.row(i));
    }
    IntMatrix basis(span.rows(), static_cast<int>(rows.size()));
    for (size_t c = 0; c < rows.size(); ++c)
        for (int i = 0; i < span.rows(); ++i)
            basis.at(i, static_cast<int>(c)) = rows[c][i];
    auto x = solve(basis, rel);
    if (!x)
        throw std::logic_error("relation lattice escapes the generated span");
    return cokernel_structure(*x);
}

IntMatrix kernel_subgroup(const FgAbelianGroup& g1, const FgAbelianGroup& g2, const IntMatrix& f)
{
    IntMatrix rel2 = canonical_relations(g2);
    IntMatrix k = kernel_basis(f.augmented(-rel2));
    int n1 = f.cols();
    IntMatrix out(n1, k.cols());
    for (int c = 0; c < k.cols(); ++c)
        for (int i = 0; i < n1; ++i)
            out.at(i, c) = k.at(i, c);
    return out;
}

FgAbelianGroup cokernel_of_map(const FgAbelianGroup& g1, const FgAbelianGroup& g2, const IntMatrix& f)
{
    (void)g1;
    return cokernel_structure(f.augmented(canonical_relations(g2)));
}

}  // namespace ktoric
