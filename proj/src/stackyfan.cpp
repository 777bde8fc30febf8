#include "ktoric/stackyfan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ktoric {

bool Lattice::well_formed(std::string* why) const
{
    if (free_rank < 0) {
        if (why)
            *why = "negative free rank";
        return false;
    }
    for (size_t j = 0; j < torsion_invariants.size(); ++j) {
        if (torsion_invariants[j] < 2) {
            if (why)
                *why = "torsion invariant below 2";
            return false;
        }
        if (j > 0 && torsion_invariants[j] % torsion_invariants[j - 1] != 0) {
            if (why)
                *why = "torsion invariants violate the divisibility chain";
            return false;
        }
    }
    return true;
}

IntMatrix StackyFan::ray_matrix() const
{
    IntMatrix m(lattice.free_rank, ray_count());
    for (int i = 0; i < ray_count(); ++i)
        for (int r = 0; r < lattice.free_rank; ++r)
            m.at(r, i) = rays[i].free_part[r];
    return m;
}

void StackyFan::canonicalize()
{
    for (auto& ray : rays)
        for (int j = 0; j < lattice.torsion_count(); ++j)
            ray.torsion_part[j] = floor_mod(ray.torsion_part[j], lattice.torsion_invariants[j]);
}

namespace {

// One linear constraint sum(coeff[j]*y[j]) (=|>=) constant.
struct RatRow {
    std::vector<Rat> coeff;
    Rat constant;
};

// Exact feasibility of {eqs hold, ineqs hold} by Gaussian substitution on the
// equalities followed by Fourier-Motzkin elimination.
bool rational_feasible(std::vector<RatRow> eqs, std::vector<RatRow> ineqs, int vars)
{
    std::vector<bool> eliminated(vars, false);
    for (size_t e = 0; e < eqs.size(); ++e) {
        int pivot = -1;
        for (int j = 0; j < vars; ++j)
            if (!eliminated[j] && eqs[e].coeff[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) {
            if (eqs[e].constant != 0)
                return false;
            continue;
        }
        Rat a = eqs[e].coeff[pivot];
        auto substitute = [&](RatRow& r) {
            if (r.coeff[pivot] == 0)
                return;
            Rat f = r.coeff[pivot] / a;
            for (int j = 0; j < vars; ++j)
                r.coeff[j] -= f * eqs[e].coeff[j];
            r.constant -= f * eqs[e].constant;
        };
        for (size_t e2 = 0; e2 < eqs.size(); ++e2)
            if (e2 != e)
                substitute(eqs[e2]);
        for (auto& r : ineqs)
            substitute(r);
        eliminated[pivot] = true;
    }
    for (int j = 0; j < vars; ++j) {
        if (eliminated[j])
            continue;
        std::vector<RatRow> pos, neg, rest;
        for (auto& r : ineqs) {
            if (r.coeff[j] > 0)
                pos.push_back(std::move(r));
            else if (r.coeff[j] < 0)
                neg.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                RatRow c;
                c.coeff.resize(vars);
                Rat wp = -n.coeff[j], wn = p.coeff[j];
                for (int t = 0; t < vars; ++t)
                    c.coeff[t] = wp * p.coeff[t] + wn * n.coeff[t];
                c.constant = wp * p.constant + wn * n.constant;
                rest.push_back(std::move(c));
            }
        ineqs = std::move(rest);
    }
    for (const auto& r : ineqs)
        if (r.constant > 0)
            return false;
    return true;
}

// Can a point of cone(A) /\ cone(B) put positive weight on generator
// `target` of A?  A, B are d x k matrices of ray columns.
bool intersection_uses_generator(const IntMatrix& a, const IntMatrix& b, int target)
{
    int d = a.rows(), k1 = a.cols(), k2 = b.cols();
    int vars = k1 + k2;
    std::vector<RatRow> eqs, ineqs;
    for (int r = 0; r < d; ++r) {
        RatRow e;
        e.coeff.resize(vars);
        for (int j = 0; j < k1; ++j)
            e.coeff[j] = Rat(a.at(r, j));
        for (int j = 0; j < k2; ++j)
            e.coeff[k1 + j] = -Rat(b.at(r, j));
        eqs.push_back(std::move(e));
    }
    for (int j = 0; j < vars; ++j) {
        RatRow r;
        r.coeff.resize(vars);
        r.coeff[j] = 1;
        if (j == target)
            r.constant = 1;  // lambda_target >= 1 (scale invariant)
        ineqs.push_back(std::move(r));
    }
    return rational_feasible(std::move(eqs), std::move(ineqs), vars);
}

IntMatrix cone_matrix(const StackyFan& fan, const std::vector<int>& cone)
{
    IntMatrix m(fan.lattice.free_rank, static_cast<int>(cone.size()));
    for (size_t j = 0; j < cone.size(); ++j)
        for (int r = 0; r < fan.lattice.free_rank; ++r)
            m.at(r, static_cast<int>(j)) = fan.rays[cone[j]].free_part[r];
    return m;
}

}  // namespace

FanDiagnostics validate(const StackyFan& fan, int fan_axiom_ray_cap)
{
    FanDiagnostics d;
    const int n = fan.ray_count();
    const int dim = fan.lattice.free_rank;

    std::string why;
    if (!fan.lattice.well_formed(&why)) {
        d.valid = false;
        d.messages.push_back("lattice: " + why);
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(fan.rays[i].free_part.size()) != dim ||
            static_cast<int>(fan.rays[i].torsion_part.size()) != fan.lattice.torsion_count()) {
            d.valid = false;
            d.messages.push_back("ray " + std::to_string(i) + ": coordinate count mismatch");
            continue;
        }
        bool zero = true;
        for (const auto& x : fan.rays[i].free_part)
            if (x != 0)
                zero = false;
        if (zero) {
            d.valid = false;
            d.messages.push_back("ray " + std::to_string(i) + ": zero free part");
        }
    }
    if (d.valid) {
        // pairwise non-parallel (no positive multiple of another)
        for (int i = 0; i < n && d.valid; ++i)
            for (int j = i + 1; j < n && d.valid; ++j) {
                IntMatrix two(dim, 2);
                for (int r = 0; r < dim; ++r) {
                    two.at(r, 0) = fan.rays[i].free_part[r];
                    two.at(r, 1) = fan.rays[j].free_part[r];
                }
                if (rank(two) == 1 && intersection_uses_generator(cone_matrix(fan, {i}),
                                                                 cone_matrix(fan, {j}), 0)) {
                    d.valid = false;
                    d.messages.push_back("rays " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are parallel");
                }
            }
    }
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        if (fan.max_cones[c].empty()) {
            d.valid = false;
            d.messages.push_back("cone " + std::to_string(c) + " is empty");
        }
        std::set<int> seen;
        for (int idx : fan.max_cones[c]) {
            if (idx < 0 || idx >= n) {
                d.valid = false;
                d.messages.push_back("cone " + std::to_string(c) + ": ray index out of range");
            } else if (!seen.insert(idx).second) {
                d.valid = false;
                d.messages.push_back("cone " + std::to_string(c) + ": repeated ray index");
            }
        }
    }
    for (size_t c1 = 0; c1 < fan.max_cones.size() && d.valid; ++c1)
        for (size_t c2 = 0; c2 < fan.max_cones.size(); ++c2) {
            if (c1 == c2)
                continue;
            std::set<int> s1(fan.max_cones[c1].begin(), fan.max_cones[c1].end());
            std::set<int> s2(fan.max_cones[c2].begin(), fan.max_cones[c2].end());
            if (std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()) && s1 != s2) {
                d.valid = false;
                d.messages.push_back("cone " + std::to_string(c1) +
                                     " is contained in cone " + std::to_string(c2));
            }
        }
    if (!d.valid)
        return d;

    d.simplicial = true;
    for (const auto& cone : fan.max_cones) {
        IntMatrix m = cone_matrix(fan, cone);
        if (rank(m) != static_cast<int>(cone.size())) {
            d.simplicial = false;
            d.messages.push_back("cone has linearly dependent rays");
            break;
        }
    }
    if (!d.simplicial)
        return d;

    if (n > fan_axiom_ray_cap) {
        d.messages.push_back("fan axiom check skipped: ray count exceeds cap");
        d.fan_axiom_checked = false;
    } else {
        d.fan_axiom_checked = true;
        d.fan_axiom = true;
        for (size_t c1 = 0; c1 < fan.max_cones.size() && d.fan_axiom; ++c1)
            for (size_t c2 = c1 + 1; c2 < fan.max_cones.size() && d.fan_axiom; ++c2) {
                const auto& a = fan.max_cones[c1];
                const auto& b = fan.max_cones[c2];
                std::set<int> common_set;
                for (int x : a)
                    if (std::find(b.begin(), b.end(), x) != b.end())
                        common_set.insert(x);
                IntMatrix ma = cone_matrix(fan, a), mb = cone_matrix(fan, b);
                for (size_t j = 0; j < a.size() && d.fan_axiom; ++j)
                    if (!common_set.contains(a[j]) &&
                        intersection_uses_generator(ma, mb, static_cast<int>(j)))
                        d.fan_axiom = false;
                for (size_t j = 0; j < b.size() && d.fan_axiom; ++j)
                    if (!common_set.contains(b[j]) &&
                        intersection_uses_generator(mb, ma, static_cast<int>(j)))
                        d.fan_axiom = false;
                if (!d.fan_axiom)
                    d.messages.push_back("cones " + std::to_string(c1) + " and " +
                                         std::to_string(c2) +
                                         " intersect outside a common face");
            }
    }

    // completeness: pure of dimension d, every ridge in exactly two maximal
    // cones, and the ridge-adjacency graph connected; claimed only on top of
    // a verified fan axiom
    d.complete = d.fan_axiom_checked && d.fan_axiom && !fan.max_cones.empty();
    if (d.complete) {
        for (const auto& cone : fan.max_cones)
            if (static_cast<int>(cone.size()) != dim)
                d.complete = false;
    }
    if (d.complete) {
        std::vector<Face> cones;
        for (const auto& c : fan.max_cones)
            cones.push_back(face_of(c));
        std::set<Face> ridges;
        for (Face c : cones)
            for (int v : face_vertices(c))
                ridges.insert(c & ~(Face(1) << v));
        for (Face r : ridges) {
            int count = 0;
            for (Face c : cones)
                if ((r & c) == r)
                    ++count;
            if (count != 2) {
                d.complete = false;
                break;
            }
        }
        if (d.complete) {
            std::vector<int> comp(cones.size(), -1);
            std::vector<size_t> stack{0};
            comp[0] = 0;
            while (!stack.empty()) {
                size_t c = stack.back();
                stack.pop_back();
                for (size_t o = 0; o < cones.size(); ++o)
                    if (comp[o] < 0 &&
                        face_size(cones[c] & cones[o]) == dim - 1) {
                        comp[o] = 0;
                        stack.push_back(o);
                    }
            }
            for (int x : comp)
                if (x < 0)
                    d.complete = false;
        }
    }
    return d;
}

Int multiplicity(const StackyFan& fan, const std::vector<int>& cone)
{
    IntMatrix m = cone_matrix(fan, cone);
    SnfResult s = snf(m);
    Int idx = 1;
    int nonzero = 0;
    for (const Int& x : s.diagonal())
        if (x != 0) {
            idx *= x;
            ++nonzero;
        }
    if (nonzero != static_cast<int>(cone.size()))
        throw std::invalid_argument("multiplicity of a non-simplicial cone");
    return idx;
}

SimplicialComplex underlying_complex(const StackyFan& fan)
{
    std::vector<Face> facets;
    for (const auto& c : fan.max_cones)
        facets.push_back(face_of(c));
    return SimplicialComplex(fan.ray_count(), std::move(facets));
}

GaleDual gale_dual(const StackyFan& fan)
{
    const int n = fan.ray_count();
    const int d = fan.lattice.free_rank;
    const int s = fan.lattice.torsion_count();
    if (rank(fan.ray_matrix()) != d)
        throw std::invalid_argument("rays do not span N over Q; Gale dual has infinite cokernel");

    // presentation N = Z^(d+s) / Q with Q = [0; diag(invariants)], lifted map
    // B = [free parts; canonical residues]
    IntMatrix big(d + s, n + s);
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < d; ++r)
            big.at(r, i) = fan.rays[i].free_part[r];
        for (int j = 0; j < s; ++j)
            big.at(d + j, i) =
                floor_mod(fan.rays[i].torsion_part[j], fan.lattice.torsion_invariants[j]);
    }
    for (int j = 0; j < s; ++j)
        big.at(d + j, n + j) = fan.lattice.torsion_invariants[j];

    GaleDual g;
    g.group = cokernel_structure(big.transposed());
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n + s);
        e[i] = 1;
        g.beta_vee.push_back(g.group.canonical_coords(e));
    }
    return g;
}

ReducedFan reduce_lattice(const StackyFan& fan)
{
    ReducedFan r;
    r.fan.lattice.free_rank = fan.lattice.free_rank;
    for (const auto& ray : fan.rays)
        r.fan.rays.push_back({ray.free_part, {}});
    r.fan.max_cones = fan.max_cones;
    r.torsion_group = FgAbelianGroup::from_invariants(0, fan.lattice.torsion_invariants);
    return r;
}

}  // namespace ktoric
