#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktoric/ringpres.hpp"
#include "ktoric/stackyfan.hpp"

namespace ktoric {

enum class K0Mode { laurent, group_ring };

/// Presentation of K0 of the toric stack. In laurent mode the ring has one
/// Laurent variable per ray and carries the lattice relations explicitly; in
/// group_ring mode the ring is the group ring of DG(beta) and each ray class
/// is the monomial of beta_vee(i), with the lattice relations absorbed.
struct KZeroPresentation {
    K0Mode mode = K0Mode::group_ring;
    RingSignature sig;
    std::vector<Monomial> ray_classes;  // image of ray i in sig
    std::vector<IntPolynomial> sr_relations;
    std::vector<IntPolynomial> lattice_rels;  // empty in group_ring mode

    std::vector<IntPolynomial> all_relations() const;
};

struct KZeroStructure {
    KZeroPresentation presentation;
    GroebnerBasis gb;
    bool finite = false;
    QuotientStructure structure;  // populated when finite
    bool free_module = false;
    std::optional<Int> rank;  // nullopt: infinite rank
    std::vector<Int> invariant_factors;
    bool complete = false;  // the freeness theorem's hypothesis
};

/// One generator prod_{i in S}(1 - x_i) per minimal non-face S, over one
/// Laurent variable per ray.
std::vector<IntPolynomial> sr_ideal(const StackyFan& fan);

/// Binomials g_j = prod_{<m_j,v_i> > 0} x_i^<m_j,v_i> -
/// prod_{<m_j,v_i> < 0} x_i^(-<m_j,v_i>) for the standard dual basis m_j;
/// requires a torsion-free lattice.
std::vector<IntPolynomial> lattice_relations(const StackyFan& fan);

KZeroPresentation k0_presentation(const StackyFan& fan, K0Mode mode);

KZeroStructure k0_structure(const StackyFan& fan, K0Mode mode = K0Mode::group_ring);

/// Parse expr over the ray-class alphabet x1..xn and return the order of its
/// class (nullopt = infinite order). Throws std::runtime_error when the
/// structure has infinite rank, ParseError on bad input.
std::optional<Int> element_order_in_k0(const KZeroStructure& k, const std::string& expr);
std::optional<Int> element_order_in_k0(const StackyFan& fan, const std::string& expr);

}  // namespace ktoric
