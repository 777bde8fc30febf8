#pragma once

#include <string>
#include <vector>

#include "ktoric/exactlinalg.hpp"
#include "ktoric/simplicial.hpp"

namespace ktoric {

/// Finitely generated abelian lattice N = Z^free_rank + sum Z/d_j with
/// d_1 | d_2 | ... (each >= 2).
struct Lattice {
    int free_rank = 0;
    std::vector<Int> torsion_invariants;

    int torsion_count() const { return static_cast<int>(torsion_invariants.size()); }
    bool well_formed(std::string* why = nullptr) const;
    bool operator==(const Lattice&) const = default;
};

/// Element of N: integer free part plus one residue per torsion invariant.
struct LatticeElement {
    std::vector<Int> free_part;
    std::vector<Int> torsion_part;

    bool operator==(const LatticeElement&) const = default;
};

/// Simplicial stacky fan: marked lattice points on rays plus the maximal
/// cones, as 0-based ray index sets.
struct StackyFan {
    Lattice lattice;
    std::vector<LatticeElement> rays;
    std::vector<std::vector<int>> max_cones;

    int ray_count() const { return static_cast<int>(rays.size()); }
    /// d x n matrix whose columns are the free parts of the rays.
    IntMatrix ray_matrix() const;
    /// Reduce every torsion residue into its canonical range.
    void canonicalize();
    bool operator==(const StackyFan&) const = default;
};

struct FanDiagnostics {
    bool valid = true;       // input well-formed
    bool simplicial = false;
    bool fan_axiom = false;
    bool fan_axiom_checked = false;  // false when skipped (cap or invalid input)
    bool complete = false;
    std::vector<std::string> messages;
};

/// Structural validation. The fan-axiom check (pairwise cone intersections
/// are common faces) runs by exact rational Fourier-Motzkin elimination and
/// is skipped with a diagnostic when ray_count exceeds fan_axiom_ray_cap.
/// Completeness uses ridge pairing plus connectivity and is only claimed
/// when the fan axiom was verified.
FanDiagnostics validate(const StackyFan& fan, int fan_axiom_ray_cap = 32);

/// Index of the subgroup generated by the cone's marked ray vectors inside
/// the saturation of their span (free parts; apply to the reduced fan when
/// the lattice has torsion). Throws on dependent rays.
Int multiplicity(const StackyFan& fan, const std::vector<int>& cone);

/// Vertices are ray indices; faces are the subsets spanning cones.
SimplicialComplex underlying_complex(const StackyFan& fan);

/// Derived Gale dual DG(beta) of beta : Z^n -> N, e_i -> v_i, together with
/// the images beta_vee(i) in canonical coordinates of the group.
struct GaleDual {
    FgAbelianGroup group;
    std::vector<std::vector<Int>> beta_vee;  // one canonical-coords vector per ray
};

/// Requires the rays to span N over Q; throws otherwise.
GaleDual gale_dual(const StackyFan& fan);

struct ReducedFan {
    StackyFan fan;              // over N/torsion, same cone combinatorics
    FgAbelianGroup torsion_group;
};

ReducedFan reduce_lattice(const StackyFan& fan);

}  // namespace ktoric
