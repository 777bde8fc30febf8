#include "ktoric/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "ktoric/homcomplex.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ktoric {

int face_size(Face f)
{
    return std::popcount(f);
}

std::vector<int> face_vertices(Face f)
{
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
        if (f >> i & 1)
            v.push_back(i);
    return v;
}

Face face_of(const std::vector<int>& vertices)
{
    Face f = 0;
    for (int v : vertices)
        f |= Face(1) << v;
    return f;
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> facets) : n_(vertex_count)
{
    if (vertex_count < 0 || vertex_count > 63)
        throw std::invalid_argument("vertex count out of range");
    for (Face f : facets)
        if (f >> vertex_count)
            throw std::invalid_argument("facet uses a vertex out of range");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (Face f : facets) {
        bool maximal = true;
        for (Face g : facets)
            if (f != g && (f & g) == f) {
                maximal = false;
                break;
            }
        if (maximal)
            facets_.push_back(f);
    }
}

int SimplicialComplex::dimension() const
{
    if (facets_.empty())
        return -2;
    int d = -1;
    for (Face f : facets_)
        d = std::max(d, face_size(f) - 1);
    return d;
}

bool SimplicialComplex::pure() const
{
    for (Face f : facets_)
        if (face_size(f) - 1 != dimension())
            return false;
    return true;
}

bool SimplicialComplex::is_face(Face f) const
{
    for (Face g : facets_)
        if ((f & g) == f)
            return true;
    return false;
}

std::vector<Face> SimplicialComplex::all_faces() const
{
    std::set<Face> faces;
    for (Face f : facets_) {
        // all submasks of f
        Face s = f;
        for (;;) {
            faces.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & f;
        }
    }
    return {faces.begin(), faces.end()};
}

Int SimplicialComplex::euler_characteristic() const
{
    Int chi = 0;
    for (Face f : all_faces())
        if (f != 0)
            chi += face_size(f) % 2 == 1 ? 1 : -1;
    return chi;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& k)
{
    std::vector<Face> out;
    if (!k.is_face(0)) {
        out.push_back(0);
        return out;
    }
    int max_size = k.dimension() + 2;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            Face f = face_of(cur);
            if (k.is_face(f))
                return;
            for (int v : cur)
                if (!k.is_face(f & ~(Face(1) << v)))
                    return;
            out.push_back(f);
            return;
        }
        for (int v = start; v < k.vertex_count(); ++v) {
            cur.push_back(v);
            self(self, v + 1, remaining - 1);
            cur.pop_back();
        }
    };
    for (int size = 1; size <= max_size; ++size)
        rec(rec, 0, size);
    std::sort(out.begin(), out.end(), [](Face a, Face b) {
        auto va = face_vertices(a), vb = face_vertices(b);
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    });
    return out;
}

SimplicialComplex complex_from_nonfaces(int vertex_count, const std::vector<Face>& nonfaces)
{
    if (vertex_count > 20)
        throw std::invalid_argument("reconstruction supported up to 20 vertices");
    auto blocked = [&](Face f) {
        for (Face nf : nonfaces)
            if ((f & nf) == nf)
                return true;
        return false;
    };
    std::vector<Face> facets;
    for (Face f = 0; f < (Face(1) << vertex_count); ++f) {
        if (blocked(f))
            continue;
        bool maximal = true;
        for (int v = 0; v < vertex_count && maximal; ++v)
            if (!(f >> v & 1) && !blocked(f | Face(1) << v))
                maximal = false;
        if (maximal)
            facets.push_back(f);
    }
    return SimplicialComplex(vertex_count, std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& k, Face face)
{
    if (!k.is_face(face))
        throw std::invalid_argument("link of a non-face");
    std::vector<Face> facets;
    for (Face f : k.facets())
        if ((face & f) == face)
            facets.push_back(f & ~face);
    return SimplicialComplex(k.vertex_count(), std::move(facets));
}

CoeffField CoeffField::Fp(long long p)
{
    if (!is_prime(Int(p)))
        throw std::invalid_argument("coefficient modulus must be prime");
    return {false, p};
}

std::string CoeffField::label() const
{
    return rational ? "Q" : "F" + std::to_string(p);
}

namespace {

// Boundary matrices of the augmented chain complex; entry [k] maps k-faces
// to (k-1)-faces, k = 0 .. dim.
struct AugmentedChains {
    std::vector<std::vector<Face>> faces_by_dim;  // index k+1 holds k-faces
    std::vector<IntMatrix> boundary;              // index k holds del_k
};

AugmentedChains build_chains(const SimplicialComplex& k)
{
    AugmentedChains c;
    int dim = k.dimension();
    if (dim < -1)
        return c;
    c.faces_by_dim.resize(dim + 2);
    std::vector<std::map<Face, int>> index(dim + 2);
    for (Face f : k.all_faces()) {
        int d = face_size(f) - 1;
        index[d + 1][f] = static_cast<int>(c.faces_by_dim[d + 1].size());
        c.faces_by_dim[d + 1].push_back(f);
    }
    for (int d = 0; d <= dim; ++d) {
        IntMatrix b(static_cast<int>(c.faces_by_dim[d].size()),
                    static_cast<int>(c.faces_by_dim[d + 1].size()));
        for (size_t col = 0; col < c.faces_by_dim[d + 1].size(); ++col) {
            Face f = c.faces_by_dim[d + 1][col];
            auto verts = face_vertices(f);
            for (size_t pos = 0; pos < verts.size(); ++pos) {
                Face sub = f & ~(Face(1) << verts[pos]);
                b.at(index[d][sub], static_cast<int>(col)) = pos % 2 == 0 ? 1 : -1;
            }
        }
        c.boundary.push_back(std::move(b));
    }
    return c;
}

}  // namespace

std::vector<FgAbelianGroup> reduced_homology(const SimplicialComplex& k)
{
    int dim = k.dimension();
    if (dim < -1)
        return {};
    AugmentedChains c = build_chains(k);
    // package as a cochain complex in degrees -dim .. 1 (degree i holds the
    // (-i)-faces) so the shared homology engine applies
    std::vector<int> ranks;
    std::vector<IntMatrix> diffs;
    for (int d = dim; d >= -1; --d)
        ranks.push_back(static_cast<int>(c.faces_by_dim[d + 1].size()));
    for (int d = dim; d >= 0; --d)
        diffs.push_back(c.boundary[d]);
    ChainComplex cc(-dim, std::move(ranks), std::move(diffs));
    std::vector<FgAbelianGroup> out;
    for (int d = -1; d <= dim; ++d)
        out.push_back(homology(cc, -d));
    return out;
}

std::vector<long long> reduced_betti(const SimplicialComplex& k, const CoeffField& field)
{
    int dim = k.dimension();
    if (dim < -1)
        return {};
    AugmentedChains c = build_chains(k);
    auto rank_of = [&](int d) -> long long {  // rank of del_d over the field
        if (d < 0 || d > dim)
            return 0;
        const IntMatrix& b = c.boundary[d];
        if (b.rows() == 0 || b.cols() == 0)
            return 0;
        return field.rational ? rank(b) : rank_mod_p(b, field.p);
    };
    std::vector<long long> betti;
    for (int d = -1; d <= dim; ++d) {
        long long n_d = static_cast<long long>(c.faces_by_dim[d + 1].size());
        betti.push_back(n_d - rank_of(d) - rank_of(d + 1));
    }
    return betti;
}

ShellabilityVerdict is_shellable(const SimplicialComplex& k, int facet_cap)
{
    if (!k.pure())
        throw std::invalid_argument("shellability search requires a pure complex");
    ShellabilityVerdict v;
    const auto& facets = k.facets();
    int t = static_cast<int>(facets.size());
    if (t > facet_cap) {
        v.status = ShellabilityVerdict::Status::Undecided;
        return v;
    }
    if (t <= 1) {
        v.status = ShellabilityVerdict::Status::Shellable;
        for (int i = 0; i < t; ++i)
            v.witness.push_back(i);
        return v;
    }
    int fsize = face_size(facets[0]);
    std::unordered_set<std::uint64_t> dead;  // used-facet masks with no completion
    std::vector<int> order;
    std::uint64_t used = 0;

    // F may follow the facets in `used` iff every intersection with an earlier
    // facet extends to an intersection of size |F|-1
    auto admissible = [&](int f) {
        for (int j = 0; j < t; ++j) {
            if (!(used >> j & 1))
                continue;
            Face inter = facets[f] & facets[j];
            bool covered = false;
            for (int l = 0; l < t && !covered; ++l)
                if ((used >> l & 1) && face_size(facets[f] & facets[l]) == fsize - 1 &&
                    (inter & facets[l]) == inter)
                    covered = true;
            if (!covered)
                return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == t)
            return true;
        if (dead.contains(used))
            return false;
        // prefer facets gluing along many ridges
        std::vector<std::pair<int, int>> cands;
        for (int f = 0; f < t; ++f) {
            if (used >> f & 1)
                continue;
            if (!order.empty() && !admissible(f))
                continue;
            int ridges = 0;
            for (int j = 0; j < t; ++j)
                if ((used >> j & 1) && face_size(facets[f] & facets[j]) == fsize - 1)
                    ++ridges;
            cands.emplace_back(-ridges, f);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [neg, f] : cands) {
            order.push_back(f);
            used |= std::uint64_t(1) << f;
            if (self(self))
                return true;
            used &= ~(std::uint64_t(1) << f);
            order.pop_back();
        }
        dead.insert(used);
        return false;
    };

    if (dfs(dfs)) {
        v.status = ShellabilityVerdict::Status::Shellable;
        v.witness = order;
    } else {
        v.status = ShellabilityVerdict::Status::NotShellable;
    }
    return v;
}

namespace {

bool link_passes_reisner(const SimplicialComplex& k, Face f, const CoeffField& field)
{
    SimplicialComplex l = link(k, f);
    int dim = l.dimension();
    auto betti = reduced_betti(l, field);
    for (int d = -1; d < dim; ++d)
        if (betti[d + 1] != 0)
            return false;
    return true;
}

}  // namespace

bool is_cohen_macaulay_serial(const SimplicialComplex& k, const CoeffField& field)
{
    for (Face f : k.all_faces())
        if (!link_passes_reisner(k, f, field))
            return false;
    return true;
}

bool is_cohen_macaulay(const SimplicialComplex& k, const CoeffField& field)
{
#ifdef _OPENMP
    std::vector<Face> faces = k.all_faces();
    bool ok = true;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(faces.size()); ++i) {
        bool local;
#pragma omp atomic read
        local = ok;
        if (!local)
            continue;
        if (!link_passes_reisner(k, faces[i], field)) {
#pragma omp atomic write
            ok = false;
        }
    }
    return ok;
#else
    return is_cohen_macaulay_serial(k, field);
#endif
}

}  // namespace ktoric
