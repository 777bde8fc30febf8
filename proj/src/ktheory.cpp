#include "ktoric/ktheory.hpp"

#include <stdexcept>

namespace ktoric {

std::vector<IntPolynomial> KZeroPresentation::all_relations() const
{
    std::vector<IntPolynomial> rels = sr_relations;
    rels.insert(rels.end(), lattice_rels.begin(), lattice_rels.end());
    return rels;
}

std::vector<IntPolynomial> sr_ideal(const StackyFan& fan)
{
    RingSignature sig{fan.ray_count(), {}};
    std::vector<IntPolynomial> gens;
    for (Face s : minimal_nonfaces(underlying_complex(fan))) {
        IntPolynomial f = IntPolynomial::constant(1);
        for (int v : face_vertices(s))
            f = f * (IntPolynomial::constant(1) -
                     IntPolynomial::term(Monomial::var(v), 1));
        gens.push_back(std::move(f));
    }
    return gens;
}

std::vector<IntPolynomial> lattice_relations(const StackyFan& fan)
{
    if (fan.lattice.torsion_count() != 0)
        throw std::invalid_argument("lattice relations require a torsion-free lattice");
    const int n = fan.ray_count();
    std::vector<IntPolynomial> rels;
    for (int j = 0; j < fan.lattice.free_rank; ++j) {
        Monomial pos, neg;
        for (int i = 0; i < n; ++i) {
            const Int& a = fan.rays[i].free_part[j];
            if (a > 0)
                pos = pos * Monomial::var(i, a.convert_to<long long>());
            else if (a < 0)
                neg = neg * Monomial::var(i, (-a).convert_to<long long>());
        }
        rels.push_back(IntPolynomial::term(pos, 1) - IntPolynomial::term(neg, 1));
    }
    return rels;
}

namespace {

Monomial monomial_of_coords(const std::vector<Int>& coords, const RingSignature& sig)
{
    Monomial m;
    for (int k = 0; k < sig.laurent_vars; ++k) {
        const Int& c = coords[k];
        if (c > 0)
            m = m * Monomial::var(k, c.convert_to<long long>());
        else if (c < 0)
            m = m * Monomial::var(sig.laurent_vars + k, (-c).convert_to<long long>());
    }
    for (int j = 0; j < sig.unit_count(); ++j) {
        const Int& c = coords[sig.laurent_vars + j];
        if (c != 0)
            m = m * Monomial::var(2 * sig.laurent_vars + j, c.convert_to<long long>());
    }
    return reduce_units(m, sig);
}

}  // namespace

KZeroPresentation k0_presentation(const StackyFan& fan, K0Mode mode)
{
    KZeroPresentation pres;
    pres.mode = mode;
    const int n = fan.ray_count();
    if (mode == K0Mode::laurent) {
        if (fan.lattice.torsion_count() != 0)
            throw std::invalid_argument("laurent mode requires a torsion-free lattice");
        pres.sig = RingSignature{n, {}};
        for (int i = 0; i < n; ++i)
            pres.ray_classes.push_back(Monomial::var(i));
        pres.sr_relations = sr_ideal(fan);
        pres.lattice_rels = lattice_relations(fan);
        return pres;
    }
    GaleDual gd = gale_dual(fan);
    pres.sig = RingSignature{gd.group.rank, gd.group.invariant_factors};
    for (int i = 0; i < n; ++i)
        pres.ray_classes.push_back(monomial_of_coords(gd.beta_vee[i], pres.sig));
    RingSignature ray_sig{n, {}};
    for (const auto& f : sr_ideal(fan))
        pres.sr_relations.push_back(
            substitute_monomials(f, ray_sig, pres.sig, pres.ray_classes));
    return pres;
}

KZeroStructure k0_structure(const StackyFan& fan, K0Mode mode)
{
    KZeroStructure k;
    k.presentation.mode = mode;
    if (rank(fan.ray_matrix()) < fan.lattice.free_rank) {
        // the stack has a torus factor; K0 picks up its Laurent ring and is
        // not finitely generated over Z
        k.finite = false;
        return k;
    }
    k.presentation = k0_presentation(fan, mode);
    FanDiagnostics diag = validate(fan);
    k.complete = diag.complete;
    k.gb = strong_groebner(k.presentation.sig, k.presentation.all_relations());
    GeneratorMonomials gm = finite_generator_monomials(k.gb);
    k.finite = gm.finite;
    if (!k.finite)
        return k;
    k.structure = abelian_structure(k.gb);
    k.rank = Int(k.structure.group.rank);
    k.invariant_factors = k.structure.group.invariant_factors;
    k.free_module = k.invariant_factors.empty();
    return k;
}

std::optional<Int> element_order_in_k0(const KZeroStructure& k, const std::string& expr)
{
    if (!k.finite)
        throw std::runtime_error("structure has infinite rank");
    RingSignature ray_sig{static_cast<int>(k.presentation.ray_classes.size()), {}};
    IntPolynomial f = parse_element(expr, ray_sig);
    IntPolynomial image =
        substitute_monomials(f, ray_sig, k.presentation.sig, k.presentation.ray_classes);
    return k.structure.class_order(k.gb, image);
}

std::optional<Int> element_order_in_k0(const StackyFan& fan, const std::string& expr)
{
    return element_order_in_k0(k0_structure(fan), expr);
}

}  // namespace ktoric
