#include "ktoric/ringpres.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ktoric {

std::string RingSignature::var_name(int v) const
{
    const int n = laurent_vars;
    if (v < n)
        return "x" + std::to_string(v + 1);
    if (v < 2 * n)
        return "y" + std::to_string(v - n + 1);
    return "u" + std::to_string(v - 2 * n + 1);
}

Monomial Monomial::var(int v, long long e)
{
    Monomial m;
    if (e != 0)
        m.exponents[v] = e;
    return m;
}

long long Monomial::degree() const
{
    long long d = 0;
    for (const auto& [v, e] : exponents)
        d += e;
    return d;
}

long long Monomial::exponent(int v) const
{
    auto it = exponents.find(v);
    return it == exponents.end() ? 0 : it->second;
}

bool Monomial::divides(const Monomial& m) const
{
    for (const auto& [v, e] : exponents)
        if (m.exponent(v) < e)
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const
{
    Monomial r = *this;
    for (const auto& [v, e] : m.exponents) {
        long long& x = r.exponents[v];
        x += e;
        if (x == 0)
            r.exponents.erase(v);
    }
    return r;
}

Monomial Monomial::quotient_by(const Monomial& m) const
{
    Monomial r = *this;
    for (const auto& [v, e] : m.exponents) {
        long long& x = r.exponents[v];
        x -= e;
        if (x == 0)
            r.exponents.erase(v);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (const auto& [v, e] : b.exponents)
        r.exponents[v] = std::max(r.exponent(v), e);
    return r;
}

int compare_monomials(const Monomial& a, const Monomial& b)
{
    long long da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    // reverse lex: at the largest variable index where the exponents differ,
    // the monomial with the smaller exponent is larger
    auto ia = a.exponents.rbegin(), ib = b.exponents.rbegin();
    while (ia != a.exponents.rend() || ib != b.exponents.rend()) {
        int va = ia == a.exponents.rend() ? -1 : ia->first;
        int vb = ib == b.exponents.rend() ? -1 : ib->first;
        if (va > vb) {
            return -1;  // a has positive exponent at the larger index
        } else if (vb > va) {
            return 1;
        } else {
            if (ia->second != ib->second)
                return ia->second > ib->second ? -1 : 1;
            ++ia;
            ++ib;
        }
    }
    return 0;
}

IntPolynomial IntPolynomial::constant(Int c)
{
    IntPolynomial p;
    if (c != 0)
        p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

IntPolynomial IntPolynomial::term(Monomial m, Int c)
{
    IntPolynomial p;
    if (c != 0)
        p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

const Monomial& IntPolynomial::leading_monomial() const
{
    if (terms_.empty())
        throw std::logic_error("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Int& IntPolynomial::leading_coefficient() const
{
    if (terms_.empty())
        throw std::logic_error("leading term of the zero polynomial");
    return terms_.begin()->second;
}

void IntPolynomial::add_term(const Monomial& m, const Int& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const
{
    IntPolynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const
{
    IntPolynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const
{
    IntPolynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

IntPolynomial IntPolynomial::times(const Int& c) const
{
    IntPolynomial r;
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

IntPolynomial IntPolynomial::times(const Monomial& m) const
{
    IntPolynomial r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k * m, c);
    return r;
}

std::string IntPolynomial::to_string(const RingSignature& sig) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            a = abs(a);
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.exponents.empty()) {
            out << a.str();
            printed = true;
        }
        for (const auto& [v, e] : m.exponents) {
            if (printed)
                out << "*";
            out << sig.var_name(v);
            if (e != 1)
                out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

namespace {

// g = p*a + q*b with g = gcd(a,b) >= 0
Int ext_gcd(Int a, Int b, Int& p, Int& q)
{
    Int old_r = a, r = b;
    Int old_p = 1, pp = 0, old_q = 0, qq = 1;
    while (r != 0) {
        Int quot = old_r / r;  // truncated is fine here
        Int t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_p - quot * pp;
        old_p = pp;
        pp = t;
        t = old_q - quot * qq;
        old_q = qq;
        qq = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_p = -old_p;
        old_q = -old_q;
    }
    p = old_p;
    q = old_q;
    return old_r;
}

void normalize_sign(IntPolynomial& f)
{
    if (!f.is_zero() && f.leading_coefficient() < 0)
        f = -f;
}

void charge(long long& budget, long long amount)
{
    budget -= amount;
    if (budget < 0)
        throw std::runtime_error("groebner step budget exceeded");
}

// Remainder against the given basis: leading-first, with nonnegative
// coefficient remainders in [0, lc).
IntPolynomial reduce_against(IntPolynomial f, const std::vector<const IntPolynomial*>& basis,
                             long long& budget)
{
    IntPolynomial out;
    while (!f.is_zero()) {
        const Monomial m = f.leading_monomial();
        const Int c = f.leading_coefficient();
        const IntPolynomial* red = nullptr;
        for (const IntPolynomial* g : basis) {
            if (!g->leading_monomial().divides(m))
                continue;
            if (floor_div(c, g->leading_coefficient()) != 0) {
                if (!red || g->leading_coefficient() < red->leading_coefficient())
                    red = g;
            }
        }
        if (!red) {
            out.add_term(m, c);
            IntPolynomial lead = IntPolynomial::term(m, c);
            f = f - lead;
            continue;
        }
        charge(budget, 1);
        Int q = floor_div(c, red->leading_coefficient());
        f = f - red->times(m.quotient_by(red->leading_monomial())).times(q);
    }
    return out;
}

int compare_polys(const IntPolynomial& a, const IntPolynomial& b)
{
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        int c = compare_monomials(ia->first, ib->first);
        if (c != 0)
            return c;
        if (ia->second != ib->second)
            return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.terms().end())
        return 1;
    if (ib != b.terms().end())
        return -1;
    return 0;
}

std::vector<const IntPolynomial*> pointers(const std::vector<IntPolynomial>& v)
{
    std::vector<const IntPolynomial*> p;
    for (const auto& f : v)
        p.push_back(&f);
    return p;
}

std::vector<IntPolynomial> builtin_relations(const RingSignature& sig)
{
    std::vector<IntPolynomial> rels;
    for (int i = 0; i < sig.laurent_vars; ++i) {
        IntPolynomial f = IntPolynomial::term(
            Monomial::var(i) * Monomial::var(sig.laurent_vars + i), 1);
        rels.push_back(f - IntPolynomial::constant(1));
    }
    for (int j = 0; j < sig.unit_count(); ++j) {
        long long o = sig.unit_orders[j].convert_to<long long>();
        IntPolynomial f =
            IntPolynomial::term(Monomial::var(2 * sig.laurent_vars + j, o), 1);
        rels.push_back(f - IntPolynomial::constant(1));
    }
    return rels;
}

}  // namespace

GroebnerBasis strong_groebner(const RingSignature& sig, std::vector<IntPolynomial> gens,
                              long long step_budget)
{
    long long budget = step_budget;
    std::vector<IntPolynomial> basis;
    auto add_poly = [&](IntPolynomial f) -> bool {
        if (f.is_zero())
            return false;
        normalize_sign(f);
        for (const auto& g : basis)
            if (g == f)
                return false;
        basis.push_back(std::move(f));
        return true;
    };
    for (auto& f : builtin_relations(sig))
        add_poly(std::move(f));
    for (auto& f : gens)
        add_poly(reduce_against(std::move(f), pointers(basis), budget));

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> queue;
    auto push_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i)
            queue.push_back({i, k,
                             Monomial::lcm(basis[i].leading_monomial(),
                                           basis[k].leading_monomial())});
    };
    for (size_t k = 1; k < basis.size(); ++k)
        push_pairs(k);

    while (!queue.empty()) {
        charge(budget, 1);
        size_t best = 0;
        for (size_t t = 1; t < queue.size(); ++t)
            if (compare_monomials(queue[t].lcm, queue[best].lcm) < 0)
                best = t;
        Pair pr = queue[best];
        queue.erase(queue.begin() + static_cast<long>(best));

        const IntPolynomial& f = basis[pr.i];
        const IntPolynomial& g = basis[pr.j];
        const Int a = f.leading_coefficient();
        const Int b = g.leading_coefficient();
        const Monomial mf = pr.lcm.quotient_by(f.leading_monomial());
        const Monomial mg = pr.lcm.quotient_by(g.leading_monomial());

        Int c = lcm(a, b);
        IntPolynomial s = f.times(mf).times(c / a) - g.times(mg).times(c / b);
        std::vector<IntPolynomial> remainders;
        remainders.push_back(reduce_against(std::move(s), pointers(basis), budget));
        if (a % b != 0 && b % a != 0) {
            Int p, q;
            ext_gcd(a, b, p, q);
            IntPolynomial gp = f.times(mf).times(p) + g.times(mg).times(q);
            remainders.push_back(reduce_against(std::move(gp), pointers(basis), budget));
        }
        for (auto& r : remainders)
            if (add_poly(std::move(r)))
                push_pairs(basis.size() - 1);
    }

    // auto-reduce
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<const IntPolynomial*> rest;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i)
                    rest.push_back(&basis[j]);
            IntPolynomial r = reduce_against(basis[i], rest, budget);
            normalize_sign(r);
            if (!(r == basis[i])) {
                changed = true;
                if (r.is_zero()) {
                    basis.erase(basis.begin() + static_cast<long>(i));
                    --i;
                } else {
                    basis[i] = std::move(r);
                }
            }
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const IntPolynomial& x, const IntPolynomial& y) {
                  return compare_polys(x, y) < 0;
              });
    return {sig, std::move(basis)};
}

IntPolynomial normal_form(const GroebnerBasis& gb, IntPolynomial f)
{
    long long budget = 1LL << 40;
    return reduce_against(std::move(f), pointers(gb.generators), budget);
}

GeneratorMonomials finite_generator_monomials(const GroebnerBasis& gb)
{
    std::vector<Monomial> unit_lms;
    for (const auto& g : gb.generators)
        if (g.leading_coefficient() == 1)
            unit_lms.push_back(g.leading_monomial());

    GeneratorMonomials out;
    for (const auto& m : unit_lms)
        if (m.exponents.empty()) {
            out.finite = true;  // ideal contains a unit; quotient is trivial
            return out;
        }
    const int nv = gb.sig.var_count();
    std::vector<long long> bound(nv, -1);
    for (const auto& m : unit_lms)
        if (m.exponents.size() == 1) {
            int v = m.exponents.begin()->first;
            long long e = m.exponents.begin()->second;
            if (bound[v] < 0 || e < bound[v])
                bound[v] = e;
        }
    for (int v = 0; v < nv; ++v)
        if (bound[v] < 0) {
            out.finite = false;
            out.witness_variable = v;
            return out;
        }

    std::vector<long long> exps(nv, 0);
    std::vector<Monomial> found;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            Monomial m;
            for (int i = 0; i < nv; ++i)
                if (exps[i] != 0)
                    m.exponents[i] = exps[i];
            for (const auto& lm : unit_lms)
                if (lm.divides(m))
                    return;
            found.push_back(std::move(m));
            return;
        }
        for (exps[v] = 0; exps[v] < bound[v]; ++exps[v])
            self(self, v + 1);
        exps[v] = 0;
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end(), [](const Monomial& a, const Monomial& b) {
        return compare_monomials(a, b) < 0;
    });
    out.finite = true;
    out.monomials = std::move(found);
    return out;
}

QuotientStructure abelian_structure(const GroebnerBasis& gb)
{
    GeneratorMonomials gm = finite_generator_monomials(gb);
    if (!gm.finite)
        throw std::runtime_error("quotient has an infinite generator set (direction " +
                                 gb.sig.var_name(gm.witness_variable) + ")");
    const auto& gens = gm.monomials;
    std::map<Monomial, int, MonomialDesc> index;
    for (size_t i = 0; i < gens.size(); ++i)
        index.emplace(gens[i], static_cast<int>(i));

    std::vector<const IntPolynomial*> unit_part;
    for (const auto& g : gb.generators)
        if (g.leading_coefficient() == 1)
            unit_part.push_back(&g);

    long long budget = 1LL << 40;
    std::vector<std::vector<Int>> cols;
    for (const auto& g : gb.generators) {
        if (g.leading_coefficient() == 1)
            continue;
        for (const auto& w : gens) {
            if (!g.leading_monomial().divides(w))
                continue;
            Monomial m = w.quotient_by(g.leading_monomial());
            IntPolynomial rel = reduce_against(g.times(m), unit_part, budget);
            std::vector<Int> col(gens.size());
            for (const auto& [mon, c] : rel.terms())
                col[index.at(mon)] = c;
            cols.push_back(std::move(col));
        }
    }
    IntMatrix rel(static_cast<int>(gens.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        rel.set_column(static_cast<int>(j), cols[j]);

    QuotientStructure qs;
    qs.generator_monomials = gens;
    qs.relations = rel;
    qs.group = cokernel_structure(rel);
    return qs;
}

namespace {

std::vector<Int> staircase_vector(const QuotientStructure& qs, const GroebnerBasis& gb,
                                  const IntPolynomial& f)
{
    IntPolynomial nf = normal_form(gb, f);
    std::vector<Int> v(qs.generator_monomials.size());
    for (const auto& [m, c] : nf.terms()) {
        auto it = std::find(qs.generator_monomials.begin(), qs.generator_monomials.end(),
                            m);
        if (it == qs.generator_monomials.end())
            throw std::logic_error("normal form left the generator staircase");
        v[it - qs.generator_monomials.begin()] = c;
    }
    return v;
}

}  // namespace

std::vector<Int> QuotientStructure::coordinates(const GroebnerBasis& gb,
                                                const IntPolynomial& f) const
{
    return group.canonical_coords(staircase_vector(*this, gb, f));
}

std::optional<Int> QuotientStructure::class_order(const GroebnerBasis& gb,
                                                  const IntPolynomial& f) const
{
    return group.order_of(staircase_vector(*this, gb, f));
}

Monomial reduce_units(Monomial m, const RingSignature& sig)
{
    for (int j = 0; j < sig.unit_count(); ++j) {
        int v = 2 * sig.laurent_vars + j;
        auto it = m.exponents.find(v);
        if (it == m.exponents.end())
            continue;
        long long o = sig.unit_orders[j].convert_to<long long>();
        long long e = ((it->second % o) + o) % o;
        if (e == 0)
            m.exponents.erase(it);
        else
            it->second = e;
    }
    return m;
}

Monomial inverse_monomial(const Monomial& m, const RingSignature& sig)
{
    Monomial r;
    const int n = sig.laurent_vars;
    for (const auto& [v, e] : m.exponents) {
        if (v < n)
            r.exponents[v + n] = e;
        else if (v < 2 * n)
            r.exponents[v - n] = e;
        else
            r.exponents[v] = -e;  // fixed up by reduce_units
    }
    return reduce_units(r, sig);
}

IntPolynomial substitute_monomials(const IntPolynomial& f, const RingSignature& from,
                                   const RingSignature& to,
                                   const std::vector<Monomial>& images)
{
    if (static_cast<int>(images.size()) != from.laurent_vars)
        throw std::invalid_argument("one image per x variable required");
    IntPolynomial out;
    for (const auto& [m, c] : f.terms()) {
        Monomial img;
        for (const auto& [v, e] : m.exponents) {
            Monomial base;
            if (v < from.laurent_vars)
                base = images[v];
            else if (v < 2 * from.laurent_vars)
                base = inverse_monomial(images[v - from.laurent_vars], to);
            else
                throw std::invalid_argument("unit variables have no substitution image");
            for (long long k = 0; k < e; ++k)
                img = img * base;
        }
        out.add_term(reduce_units(img, to), c);
    }
    return out;
}

namespace {

struct Parser {
    const std::string& src;
    const RingSignature& sig;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }
    bool eat(char c)
    {
        if (!peek(c))
            return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw ParseError(what + " at offset " + std::to_string(pos), pos);
    }

    long long integer()
    {
        skip_ws();
        bool neg = false;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) {
            neg = src[pos] == '-';
            ++pos;
        }
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            fail("expected integer");
        long long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            if (v > (1LL << 40))
                fail("exponent too large");
            ++pos;
        }
        return neg ? -v : v;
    }

    IntPolynomial power(IntPolynomial base)
    {
        if (!eat('^'))
            return base;
        long long e = integer();
        if (e >= 0) {
            IntPolynomial r = IntPolynomial::constant(1);
            for (long long k = 0; k < e; ++k)
                r = r * base;
            return r;
        }
        if (base.terms().size() != 1 || abs(base.leading_coefficient()) != 1)
            fail("negative exponent of a non-monomial");
        Monomial inv = inverse_monomial(base.leading_monomial(), sig);
        IntPolynomial r = IntPolynomial::constant(1);
        IntPolynomial ib = IntPolynomial::term(inv, base.leading_coefficient());
        for (long long k = 0; k < -e; ++k)
            r = r * ib;
        return r;
    }

    IntPolynomial atom()
    {
        skip_ws();
        if (pos >= src.size())
            fail("unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            IntPolynomial e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v = 0;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                v = v * 10 + (src[pos] - '0');
                ++pos;
            }
            return IntPolynomial::constant(v);
        }
        if (c == 'x') {
            size_t start = pos;
            ++pos;
            if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos]))) {
                pos = start;
                fail("expected variable index");
            }
            long long idx = 0;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                idx = idx * 10 + (src[pos] - '0');
                ++pos;
            }
            if (idx < 1 || idx > sig.laurent_vars) {
                pos = start;
                fail("unknown variable x" + std::to_string(idx));
            }
            return IntPolynomial::term(Monomial::var(static_cast<int>(idx - 1)), 1);
        }
        fail("unexpected character");
    }

    IntPolynomial factor()
    {
        skip_ws();
        if (eat('-'))
            return -factor();
        if (eat('+'))
            return factor();
        return power(atom());
    }

    IntPolynomial term()
    {
        IntPolynomial r = factor();
        while (eat('*'))
            r = r * factor();
        return r;
    }

    IntPolynomial expr()
    {
        IntPolynomial r = term();
        while (true) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }
};

}  // namespace

IntPolynomial parse_element(const std::string& src, const RingSignature& sig)
{
    Parser p{src, sig};
    IntPolynomial r = p.expr();
    p.skip_ws();
    if (p.pos != src.size())
        p.fail("trailing input");
    return r;
}

namespace {

// Field-coefficient Buchberger for the rational and mod-p cross-checks.
struct FieldPoly {
    std::map<Monomial, Rat, MonomialDesc> terms;
};

struct FieldOps {
    bool modp;
    long long p;

    Rat norm(const Rat& c) const
    {
        if (!modp)
            return c;
        Int n = numerator(c) % p;  // denominator is 1 throughout mod p
        if (n < 0)
            n += p;
        return Rat(n);
    }
    Rat inv(const Rat& c) const
    {
        if (!modp)
            return 1 / c;
        Int s, t;
        Int g = ext_gcd(numerator(c), Int(p), s, t);
        if (g != 1)
            throw std::logic_error("non-invertible leading coefficient mod p");
        return norm(Rat(s));
    }
};

void fp_add_term(FieldPoly& f, const Monomial& m, const Rat& c, const FieldOps& ops)
{
    Rat v = ops.norm(c);
    if (v == 0)
        return;
    auto [it, inserted] = f.terms.emplace(m, v);
    if (!inserted) {
        it->second = ops.norm(it->second + v);
        if (it->second == 0)
            f.terms.erase(it);
    }
}

// f -= c * m * g
void fp_axpy(FieldPoly& f, const Rat& c, const Monomial& m, const FieldPoly& g,
             const FieldOps& ops)
{
    for (const auto& [mg, cg] : g.terms)
        fp_add_term(f, mg * m, ops.norm(-c * cg), ops);
}

FieldPoly fp_reduce(FieldPoly f, const std::vector<FieldPoly>& basis, const FieldOps& ops)
{
    FieldPoly out;
    while (!f.terms.empty()) {
        auto [m, c] = *f.terms.begin();
        const FieldPoly* red = nullptr;
        for (const auto& g : basis)
            if (g.terms.begin()->first.divides(m)) {
                red = &g;
                break;
            }
        if (!red) {
            out.terms.emplace(m, c);
            f.terms.erase(f.terms.begin());
            continue;
        }
        Rat factor = ops.norm(c * ops.inv(red->terms.begin()->second));
        fp_axpy(f, factor, m.quotient_by(red->terms.begin()->first), *red, ops);
    }
    return out;
}

}  // namespace

long long field_quotient_dimension(const RingSignature& sig,
                                   const std::vector<IntPolynomial>& gens,
                                   const CoeffField& field)
{
    FieldOps ops{!field.rational, field.p};
    std::vector<FieldPoly> basis;
    auto add = [&](const IntPolynomial& f) {
        FieldPoly g;
        for (const auto& [m, c] : f.terms())
            fp_add_term(g, m, Rat(c), ops);
        g = fp_reduce(std::move(g), basis, ops);
        if (!g.terms.empty())
            basis.push_back(std::move(g));
    };
    for (const auto& f : builtin_relations(sig))
        add(f);
    for (const auto& f : gens)
        add(f);

    std::vector<std::pair<size_t, size_t>> queue;
    auto push_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i)
            queue.emplace_back(i, k);
    };
    for (size_t k = 1; k < basis.size(); ++k)
        push_pairs(k);
    while (!queue.empty()) {
        auto [i, j] = queue.back();
        queue.pop_back();
        const Monomial &mi = basis[i].terms.begin()->first,
                       &mj = basis[j].terms.begin()->first;
        Monomial l = Monomial::lcm(mi, mj);
        FieldPoly s;
        fp_axpy(s, ops.norm(-ops.inv(basis[i].terms.begin()->second)), l.quotient_by(mi),
                basis[i], ops);
        fp_axpy(s, ops.inv(basis[j].terms.begin()->second), l.quotient_by(mj), basis[j],
                ops);
        s = fp_reduce(std::move(s), basis, ops);
        if (!s.terms.empty()) {
            basis.push_back(std::move(s));
            push_pairs(basis.size() - 1);
        }
    }

    const int nv = sig.var_count();
    std::vector<long long> bound(nv, -1);
    std::vector<Monomial> lms;
    for (const auto& g : basis)
        lms.push_back(g.terms.begin()->first);
    for (const auto& m : lms)
        if (m.exponents.size() == 1) {
            int v = m.exponents.begin()->first;
            if (bound[v] < 0 || m.exponents.begin()->second < bound[v])
                bound[v] = m.exponents.begin()->second;
        }
    for (const auto& m : lms)
        if (m.exponents.empty())
            return 0;  // ideal contains a unit
    for (int v = 0; v < nv; ++v)
        if (bound[v] < 0)
            return -1;
    long long count = 0;
    std::vector<long long> exps(nv, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            Monomial m;
            for (int i = 0; i < nv; ++i)
                if (exps[i] != 0)
                    m.exponents[i] = exps[i];
            for (const auto& lm : lms)
                if (lm.divides(m))
                    return;
            ++count;
            return;
        }
        for (exps[v] = 0; exps[v] < bound[v]; ++exps[v])
            self(self, v + 1);
        exps[v] = 0;
    };
    rec(rec, 0);
    return count;
}

}  // namespace ktoric
