// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Fans are loaded from the bundled corpus.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "ktoric/fanio.hpp"
#include "ktoric/homcomplex.hpp"
#include "ktoric/ktheory.hpp"

using namespace ktoric;

namespace {

StackyFan load(const std::string& name)
{
    std::ifstream in(std::string(KTORIC_DATA_DIR) + "/" + name + ".json");
    if (!in)
        throw std::runtime_error("missing corpus file " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fan_json(buf.str()).fan;
}

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (!ok)
                why << "; ";
            ok = false;
            why << what;
        }
    }
};

const std::vector<std::pair<std::string, long long>> complete_corpus = {
    {"p2", 3},      {"p1xp1", 4},    {"hirzebruch_f2", 4},
    {"p112", 4},    {"p111122", 8},  {"gerbe_p1_z2", 4}};

IntPolynomial one_minus_term(const Monomial& m)
{
    return IntPolynomial::constant(1) - IntPolynomial::term(m, 1);
}

// criterion 1: the section-4 open substack of P(1,1,1,1,2,2)
void criterion1(Check& c)
{
    StackyFan fan = load("borisov_open");
    auto pres = k0_presentation(fan, K0Mode::group_ring);
    c.require(pres.sig.laurent_vars == 1 && pres.sig.unit_orders.empty(),
              "presentation ring is not Z[t,1/t]");
    const Monomial& t = pres.ray_classes[0];
    c.require(t.degree() == 1, "weight-1 ray class is not t (up to inversion)");
    for (int i = 1; i < 4; ++i)
        c.require(pres.ray_classes[i] == t, "weight-1 ray classes differ");
    c.require(pres.ray_classes[4] == t * t && pres.ray_classes[5] == t * t,
              "weight-2 ray classes are not t^2");
    c.require(pres.sr_relations.size() == 2, "expected two relations");
    IntPolynomial a = one_minus_term(t), b = one_minus_term(t * t);
    c.require(pres.sr_relations[0] == a * a * a * a, "(1-t)^4 relation missing");
    c.require(pres.sr_relations[1] == b * b, "(1-t^2)^2 relation missing");

    auto k = k0_structure(fan);
    c.require(k.finite, "structure not finite");
    c.require(k.rank == Int(2), "rank is not 2");
    c.require(k.invariant_factors == std::vector<Int>({4, 4}),
              "invariant factors are not [4,4]");
    c.require(element_order_in_k0(k, "x1*(1-x1)^2") == Int(4),
              "order of t(1-t)^2 is not 4");
}

// criterion 2: freeness across the complete corpus
void criterion2(Check& c)
{
    for (const auto& [name, rank] : complete_corpus) {
        auto k = k0_structure(load(name));
        c.require(k.finite && k.free_module && k.rank == Int(rank) &&
                      k.invariant_factors.empty(),
                  name + ": expected free of rank " + std::to_string(rank));
    }
}

// criterion 3: rank = |torsion(N)| * sum of cone multiplicities
void criterion3(Check& c)
{
    for (const auto& [name, rank] : complete_corpus) {
        StackyFan fan = load(name);
        auto k = k0_structure(fan);
        ReducedFan red = reduce_lattice(fan);
        Int mult_sum = 0;
        for (const auto& cone : red.fan.max_cones)
            mult_sum += multiplicity(red.fan, cone);
        Int torsion = 1;
        for (const auto& d : fan.lattice.torsion_invariants)
            torsion *= d;
        c.require(k.finite && *k.rank == torsion * mult_sum,
                  name + ": rank formula mismatch");
        (void)rank;
    }
}

bool witness_is_shelling(const SimplicialComplex& k, const std::vector<int>& witness)
{
    const auto& fs = k.facets();
    if (witness.size() != fs.size())
        return false;
    int size = face_size(fs[0]);
    for (size_t step = 1; step < witness.size(); ++step) {
        Face f = fs[witness[step]];
        for (size_t j = 0; j < step; ++j) {
            Face inter = f & fs[witness[j]];
            bool covered = false;
            for (size_t l = 0; l < step; ++l) {
                Face big = f & fs[witness[l]];
                if (face_size(big) == size - 1 && (inter & big) == inter)
                    covered = true;
            }
            if (!covered)
                return false;
        }
    }
    return true;
}

// criterion 4: shellability verdicts
void criterion4(Check& c)
{
    auto bad = is_shellable(underlying_complex(load("p1xp1_minus_2pts")));
    c.require(bad.status == ShellabilityVerdict::Status::NotShellable,
              "two-disjoint-edges complex not reported unshellable");

    SimplicialComplex four_cycle(4, {face_of({0, 1}), face_of({1, 2}),
                                     face_of({2, 3}), face_of({3, 0})});
    auto fc = is_shellable(four_cycle);
    c.require(fc.shellable() && witness_is_shelling(four_cycle, fc.witness),
              "four-cycle witness invalid");

    for (const auto& [name, rank] : complete_corpus) {
        SimplicialComplex k = underlying_complex(load(name));
        auto v = is_shellable(k);
        c.require(v.shellable() && witness_is_shelling(k, v.witness),
                  name + ": no valid shelling witness");
        (void)rank;
    }
}

// criterion 5: Reisner criterion over Q, F2, F3, F5
void criterion5(Check& c)
{
    std::vector<CoeffField> fields = {CoeffField::Q(), CoeffField::Fp(2),
                                      CoeffField::Fp(3), CoeffField::Fp(5)};
    for (const auto& [name, rank] : complete_corpus) {
        SimplicialComplex k = underlying_complex(load(name));
        for (const auto& f : fields)
            c.require(is_cohen_macaulay(k, f),
                      name + ": not Cohen-Macaulay over " + f.label());
        (void)rank;
    }
    SimplicialComplex edges = underlying_complex(load("p1xp1_minus_2pts"));
    for (const auto& f : fields)
        c.require(!is_cohen_macaulay(edges, f),
                  "two-disjoint-edges complex Cohen-Macaulay over " + f.label());
}

std::vector<IntMatrix> random_commuting(std::mt19937_64& rng, int n, int count)
{
    std::uniform_int_distribution<int> d(-3, 3);
    IntMatrix t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t.at(i, j) = d(rng);
    std::vector<IntMatrix> gs;
    for (int g = 0; g < count; ++g) {
        IntMatrix m(n, n);
        Int c0 = d(rng), c1 = d(rng);
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = c0;
            for (int j = 0; j < n; ++j)
                m.at(i, j) += c1 * t.at(i, j);
        }
        gs.push_back(std::move(m));
    }
    return gs;
}

// criterion 6: Koszul mechanics on randomized instances
void criterion6(Check& c)
{
    std::mt19937_64 rng(60509);
    long long primes[3] = {2, 3, 5};
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 3;  // module rank <= 4
        if (trial % 7 == 0)
            n = 4;
        int count = 1 + trial % 3;
        Int p = primes[trial % 3];
        auto gs = random_commuting(rng, n, count);
        ChainComplex k = koszul_complex(gs, n);

        // top cohomology is M/(gs)M
        IntMatrix stacked(n, 0);
        for (const auto& g : gs)
            stacked = stacked.augmented(g);
        c.require(homology(k, count).same_type(cokernel_structure(stacked)),
                  "top Koszul cohomology mismatch");

        // K(gs, p) matches Cone(xp)[-1] degreewise
        auto gsp = gs;
        IntMatrix pid(n, n);
        for (int i = 0; i < n; ++i)
            pid.at(i, i) = p;
        gsp.push_back(pid);
        ChainComplex kp = koszul_complex(gsp, n);
        ChainComplex cone = mapping_cone(k, k, scalar_map(k, p));
        ChainComplex shifted = shift(cone, -1);
        for (int i = -1; i <= count + 2; ++i)
            c.require(homology(kp, i).same_type(homology(shifted, i)),
                      "K(gs,p) differs from Cone(xp)[-1]");

        // long exact sequence of the cone, checked segment by segment
        for (int i = k.lo(); i <= k.hi(); ++i) {
            auto h_i = homology_with_reps(k, i);
            auto h_next = homology_with_reps(k, i + 1);
            auto hc_i = homology_with_reps(cone, i);
            int r_i = k.rank_at(i), r_next = k.rank_at(i + 1);

            IntMatrix pmat_i(r_i, r_i), pmat_next(r_next, r_next);
            for (int t = 0; t < r_i; ++t)
                pmat_i.at(t, t) = p;
            for (int t = 0; t < r_next; ++t)
                pmat_next.at(t, t) = p;
            IntMatrix inc(r_next + r_i, r_i);  // K^i -> Cone^i second block
            for (int t = 0; t < r_i; ++t)
                inc.at(r_next + t, t) = 1;
            IntMatrix proj(r_next, r_next + r_i);  // Cone^i -> K^(i+1) first block
            for (int t = 0; t < r_next; ++t)
                proj.at(t, t) = 1;

            IntMatrix a_i = induced_map(h_i, h_i, pmat_i);
            IntMatrix a_next = induced_map(h_next, h_next, pmat_next);
            IntMatrix inc_h = induced_map(h_i, hc_i, inc);
            IntMatrix proj_h = induced_map(hc_i, h_next, proj);

            c.require(subgroups_equal(h_i.group, a_i,
                                      kernel_subgroup(h_i.group, hc_i.group, inc_h)),
                      "LES not exact at H^i(K)");
            c.require(subgroups_equal(hc_i.group, inc_h,
                                      kernel_subgroup(hc_i.group, h_next.group, proj_h)),
                      "LES not exact at H^i(Cone)");
            c.require(subgroups_equal(h_next.group, proj_h,
                                      kernel_subgroup(h_next.group, h_next.group, a_next)),
                      "LES not exact at H^(i+1)(K)");
        }
    }
}

// criterion 7: Groebner engine soundness on the corpus ideals
void criterion7(Check& c)
{
    std::mt19937_64 rng(7401);
    std::vector<std::string> names;
    for (const auto& [name, rank] : complete_corpus) {
        names.push_back(name);
        (void)rank;
    }
    names.push_back("borisov_open");
    names.push_back("p1xp1_minus_2pts");
    for (const auto& name : names) {
        StackyFan fan = load(name);
        auto pres = k0_presentation(fan, K0Mode::group_ring);
        auto gens = pres.all_relations();
        auto gb = strong_groebner(pres.sig, gens);

        const auto& b = gb.generators;
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j) {
                const Int &ai = b[i].leading_coefficient(),
                          &aj = b[j].leading_coefficient();
                Monomial l =
                    Monomial::lcm(b[i].leading_monomial(), b[j].leading_monomial());
                Int m = lcm(ai, aj);
                auto s = b[i].times(l.quotient_by(b[i].leading_monomial())).times(m / ai) -
                         b[j].times(l.quotient_by(b[j].leading_monomial())).times(m / aj);
                c.require(normal_form(gb, s).is_zero(), name + ": s-polynomial survives");
                Int g = gcd(ai, aj);
                auto comb =
                    b[i].times(l.quotient_by(b[i].leading_monomial())).times(aj / g) +
                    b[j].times(l.quotient_by(b[j].leading_monomial())).times(ai / g);
                c.require(normal_form(gb, comb).is_zero(),
                          name + ": gcd combination survives");
            }
        for (const auto& f : gens)
            c.require(normal_form(gb, f).is_zero(), name + ": generator survives");

        std::uniform_int_distribution<int> cd(-3, 3), vd(0, pres.sig.var_count() - 1);
        for (int trial = 0; trial < 5; ++trial) {
            IntPolynomial f;
            for (int t = 0; t < 3; ++t)
                f.add_term(Monomial::var(vd(rng)) * Monomial::var(vd(rng)), cd(rng));
            auto nf = normal_form(gb, f);
            c.require(normal_form(gb, nf) == nf, name + ": normal form not idempotent");
        }

        auto qs = abelian_structure(gb);
        c.require(field_quotient_dimension(pres.sig, gens, CoeffField::Q()) ==
                      qs.group.rank,
                  name + ": rational dimension mismatch");
        for (long long p : {2, 3, 5}) {
            long long expect = qs.group.rank;
            for (const auto& d : qs.group.invariant_factors)
                if (d % p == 0)
                    ++expect;
            c.require(field_quotient_dimension(pres.sig, gens, CoeffField::Fp(p)) ==
                          expect,
                      name + ": F" + std::to_string(p) + " dimension mismatch");
        }
    }
}

// criterion 8: mode agreement, M-basis invariance, g/h ideal equality
void criterion8(Check& c)
{
    std::vector<std::string> torsion_free = {"p2",     "p1xp1",       "hirzebruch_f2",
                                             "p112",   "p111122",     "borisov_open",
                                             "p1xp1_minus_2pts"};
    for (const auto& name : torsion_free) {
        StackyFan fan = load(name);
        auto a = k0_structure(fan, K0Mode::laurent);
        auto b = k0_structure(fan, K0Mode::group_ring);
        c.require(a.finite && b.finite && a.rank == b.rank &&
                      a.invariant_factors == b.invariant_factors,
                  name + ": laurent and group_ring modes disagree");
    }

    std::mt19937_64 rng(881);
    StackyFan fan = load("p112");
    auto base = k0_structure(fan, K0Mode::laurent);
    for (int trial = 0; trial < 3; ++trial) {
        const int d = fan.lattice.free_rank;
        IntMatrix u = IntMatrix::identity(d);
        std::uniform_int_distribution<int> idx(0, d - 1), cf(-2, 2);
        for (int step = 0; step < 3 * d; ++step) {
            int i = idx(rng), j = idx(rng);
            if (i == j)
                continue;
            Int coef = cf(rng);
            for (int k = 0; k < d; ++k)
                u.at(i, k) += coef * u.at(j, k);
        }
        StackyFan changed = fan;
        for (auto& ray : changed.rays)
            ray.free_part = u.apply(ray.free_part);
        auto k = k0_structure(changed, K0Mode::laurent);
        c.require(k.rank == base.rank && k.invariant_factors == base.invariant_factors,
                  "M-basis change altered the structure");
    }

    for (const auto& name : {"p2", "p1xp1", "hirzebruch_f2", "p112"}) {
        StackyFan f = load(name);
        const int n = f.ray_count();
        RingSignature sig{n, {}};
        auto laurent_only = strong_groebner(sig, {});
        auto gs = lattice_relations(f);
        for (int j = 0; j < f.lattice.free_rank; ++j) {
            Monomial hpos, clear;
            for (int i = 0; i < n; ++i) {
                const Int& a = f.rays[i].free_part[j];
                if (a > 0)
                    hpos = hpos * Monomial::var(i, a.convert_to<long long>());
                else if (a < 0) {
                    hpos = hpos * Monomial::var(n + i, (-a).convert_to<long long>());
                    clear = clear * Monomial::var(i, (-a).convert_to<long long>());
                }
            }
            IntPolynomial h = IntPolynomial::term(hpos, 1) - IntPolynomial::constant(1);
            c.require(normal_form(laurent_only, h.times(clear) - gs[j]).is_zero(),
                      std::string(name) + ": g and h relation families differ");
        }
    }
}

}  // namespace

int main()
{
    struct Criterion {
        const char* label;
        void (*fn)(Check&);
    };
    const Criterion criteria[] = {
        {"1: open substack of P(1,1,1,1,2,2): presentation, Z^2+(Z/4)^2, order 4",
         criterion1},
        {"2: freeness and ranks 3,4,4,4,8,4 across the complete corpus", criterion2},
        {"3: rank equals |torsion(N)| times the multiplicity sum", criterion3},
        {"4: shellability verdicts and witnesses", criterion4},
        {"5: Reisner Cohen-Macaulay checks over Q, F2, F3, F5", criterion5},
        {"6: Koszul cone comparison, top cohomology, long exact sequence", criterion6},
        {"7: strong Groebner soundness and field cross-checks", criterion7},
        {"8: mode agreement, M-basis invariance, g/h ideal equality", criterion8},
    };
    bool all_ok = true;
    for (const auto& cr : criteria) {
        Check c;
        try {
            cr.fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.label;
        if (!c.ok)
            std::cout << " [" << c.why.str() << "]";
        std::cout << "\n";
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
