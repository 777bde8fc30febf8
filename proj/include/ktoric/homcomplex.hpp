#pragma once

#include <vector>

#include "ktoric/exactlinalg.hpp"

namespace ktoric {

/// Finite cochain complex of free Z-modules: the differential raises degree,
/// d_i : C^i -> C^(i+1). Degrees outside [lo, hi] are zero modules.
class ChainComplex {
public:
    /// ranks[k] is the rank of C^(lo+k); diffs[k] is d_(lo+k) and must be a
    /// ranks[k+1] x ranks[k] matrix. Consecutive differentials must compose
    /// to zero (checked).
    ChainComplex(int lo, std::vector<int> ranks, std::vector<IntMatrix> diffs);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    int rank_at(int i) const;
    /// d_i as a rank_at(i+1) x rank_at(i) matrix (zero outside range).
    IntMatrix diff_at(int i) const;

private:
    int lo_ = 0;
    std::vector<int> ranks_;
    std::vector<IntMatrix> diffs_;
};

/// ker(d_i) / im(d_(i-1)).
FgAbelianGroup homology(const ChainComplex& c, int i);

/// Homology together with chain-level coordinates: enough data to push a
/// chain map through to a map of homology groups.
struct HomologyData {
    FgAbelianGroup group;
    IntMatrix kernel;  // columns: basis of ker(d_i) in chain coordinates

    /// Canonical-coordinate class of a cycle z (must satisfy d_i z = 0).
    std::vector<Int> cycle_class(const std::vector<Int>& z) const;
    /// Chain-level representative of the t-th canonical generator
    /// (free generators first, then torsion generators).
    std::vector<Int> generator_rep(int t) const;

    std::vector<int> canon_to_snf;  // canonical index -> SNF coordinate
};

HomologyData homology_with_reps(const ChainComplex& c, int i);

/// Degree shift with sign: C[k]^i = C^(i+k), differentials times (-1)^k.
ChainComplex shift(const ChainComplex& c, int k);

/// Degreewise map of complexes; maps[t] : C^(lo+t) -> D^(lo+t).
struct ChainMap {
    int lo = 0;
    std::vector<IntMatrix> maps;
    IntMatrix map_at(const ChainComplex& c, const ChainComplex& d, int i) const;
};

/// Standard mapping cone: Cone^i = C^(i+1) + D^i with differential
/// [-d_C 0; phi d_D]. phi must commute with the differentials (checked).
ChainComplex mapping_cone(const ChainComplex& c, const ChainComplex& d, const ChainMap& phi);

/// Multiplication by n as a chain self-map of c.
ChainMap scalar_map(const ChainComplex& c, const Int& n);

/// Koszul complex of pairwise commuting endomorphisms of Z^module_rank,
/// degrees 0..gs.size().
ChainComplex koszul_complex(const std::vector<IntMatrix>& gs, int module_rank);

/// True iff no invariant factor of g is divisible by p (p prime).
bool mult_injectivity(const FgAbelianGroup& g, const Int& p);

/// Map on homology induced by a chain-level map f taking i-cycles of the
/// source to i-cycles of the target; returned matrix acts on canonical
/// coordinates.
IntMatrix induced_map(const HomologyData& src, const HomologyData& dst, const IntMatrix& f);

/// Relation columns of the canonical coordinates of g (d_i * e_(rank+i)).
IntMatrix canonical_relations(const FgAbelianGroup& g);

/// Membership of v in the subgroup of g generated by the columns of gens
/// (all in canonical coordinates).
bool subgroup_contains(const FgAbelianGroup& g, const IntMatrix& gens, const std::vector<Int>& v);

/// Equality of the two generated subgroups.
bool subgroups_equal(const FgAbelianGroup& g, const IntMatrix& gens_a, const IntMatrix& gens_b);

/// Abstract structure of the subgroup generated by the columns of gens.
FgAbelianGroup subgroup_structure(const FgAbelianGroup& g, const IntMatrix& gens);

/// Generators of the kernel of f : g1 -> g2 (f on canonical coordinates).
IntMatrix kernel_subgroup(const FgAbelianGroup& g1, const FgAbelianGroup& g2, const IntMatrix& f);

/// Structure of g2 / f(g1).
FgAbelianGroup cokernel_of_map(const FgAbelianGroup& g1, const FgAbelianGroup& g2, const IntMatrix& f);

bool is_prime(const Int& p);

}  // namespace ktoric
