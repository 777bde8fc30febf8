#pragma once

#include <optional>
#include <vector>

#include "ktoric/intmatrix.hpp"

namespace ktoric {

struct HnfResult {
    IntMatrix h;  // row Hermite normal form
    IntMatrix u;  // unimodular, h = u * a
};

struct SnfResult {
    IntMatrix s;  // diagonal, nonnegative, divisibility chain
    IntMatrix u, v;
    IntMatrix u_inv, v_inv;  // exact integer inverses
    std::vector<Int> diagonal() const;
};

/// Row Hermite normal form: H = U*A, U unimodular, pivots positive,
/// entries above each pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& a);

/// Smith normal form: S = U*A*V with d1 | d2 | ..., zero entries last.
SnfResult snf(const IntMatrix& a);

/// Rank over the rationals.
int rank(const IntMatrix& a);

/// Rank of A mod p (p a small prime).
int rank_mod_p(const IntMatrix& a, long long p);

/// Determinant of a square matrix (Bareiss, exact).
Int determinant(const IntMatrix& a);

/// Columns form a basis of the integer kernel lattice {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Solve A X = B over the integers; nullopt when no integral solution exists.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

/// Finitely generated abelian group: rank, invariant-factor chain
/// d1 | d2 | ... (each >= 2), and optionally the relation presentation it
/// was computed from. Relations are columns on `presentation.rows()` free
/// generators throughout this codebase.
class FgAbelianGroup {
public:
    int rank = 0;
    std::vector<Int> invariant_factors;
    std::optional<IntMatrix> presentation;

    static FgAbelianGroup free_group(int rank);
    static FgAbelianGroup from_invariants(int rank, std::vector<Int> invariants);

    bool is_free() const { return invariant_factors.empty(); }
    Int torsion_order() const;
    int torsion_count() const { return static_cast<int>(invariant_factors.size()); }

    /// Number of coordinates an element vector must have: generator count of
    /// the presentation when present, rank + torsion_count otherwise.
    int coordinate_count() const;

    /// Canonical coordinates (free block, then one residue per invariant
    /// factor, reduced). Input is in the same generators as coordinate_count.
    std::vector<Int> canonical_coords(const std::vector<Int>& g) const;

    /// Smallest n >= 1 with n*g = 0; nullopt means infinite order.
    std::optional<Int> order_of(const std::vector<Int>& g) const;

    /// Same rank and invariant factors.
    bool same_type(const FgAbelianGroup& o) const
    {
        return rank == o.rank && invariant_factors == o.invariant_factors;
    }

    // Set when built from a presentation: per-SNF-coordinate modulus
    // (d_i >= 1, or 0 for a free coordinate) and the change of basis.
    std::vector<Int> snf_moduli;
    std::optional<IntMatrix> snf_u, snf_u_inv;
};

/// Structure of Z^rows / column-span(A).
FgAbelianGroup cokernel_structure(const IntMatrix& a);

/// Free-function form of FgAbelianGroup::order_of.
std::optional<Int> element_order(const FgAbelianGroup& g, const std::vector<Int>& coords);

/// Floor division/modulo for cpp_int (cpp_int's operator/ truncates).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

}  // namespace ktoric
