#include "qv/blowup.hpp"

#include "qv/groebner.hpp"

namespace qv {

Poly proper_transform(const Poly& pullback, const Poly& excess, const Poly& segre,
                      const std::string& tvar, int codim) {
    VarTablePtr tab = pullback.table();
    Poly t = Poly::var(tab, tvar);
    Poly tser(tab);
    for (int k = 1; k <= codim; ++k) tser += t.pow(k);
    Poly corr = (tser * excess.substitute({}, tab) * segre.substitute({}, tab));
    return pullback + corr.select_degree(codim);
}

namespace {

// x reduced modulo a relation of degree 2 in evar with constant top coefficient
Poly quad_reduce(const Poly& x, const Poly& quadrel, const std::string& evar) {
    VarTablePtr tab = x.table();
    std::vector<Poly> q = quadrel.substitute({}, tab).collect(evar);
    if (q.size() != 3 || !q[2].is_constant() || q[2].is_zero())
        throw error("quad_reduce: relation is not monic of degree 2 in " + evar);
    Rat top = q[2].constant_term();
    // evar^2 = -(q1 * evar + q0) / q2
    Poly e = Poly::var(tab, evar);
    Poly tail = -(q[1] * e + q[0]) / top;
    Poly p = x;
    for (;;) {
        std::vector<Poly> c = p.collect(evar);
        if (c.size() <= 2) return p;
        std::size_t d = c.size() - 1;
        p -= c[d] * e.pow(static_cast<int>(d));
        p += c[d] * e.pow(static_cast<int>(d) - 2) * tail;
    }
}

} // namespace

Poly contract_push(const Poly& x, const Poly& quadrel, const std::string& evar) {
    Poly r = quad_reduce(x, quadrel, evar);
    std::vector<Poly> c = r.collect(evar);
    return c.empty() ? Poly(x.table()) : c[0];
}

Poly contract_push_times_e(const Poly& x, const Poly& quadrel, const std::string& evar) {
    return contract_push(x * Poly::var(x.table(), evar), quadrel, evar);
}

Poly exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("exact_divide: division by zero");
    VarTablePtr tab = a.table() ? a.table() : b.table();
    MonomialOrder ord;
    LeadTerm lb = leading_term(b, ord);
    Poly rem = a;
    Poly quot(tab);
    while (!rem.is_zero()) {
        LeadTerm la = leading_term(rem, ord);
        if (!divides(lb.expo, la.expo)) throw error("exact_divide: not divisible");
        Expo q = la.expo;
        for (std::size_t k = 0; k < q.size(); ++k) q[k] -= lb.expo[k];
        Poly mono(tab);
        mono.add_term(q, la.coeff / lb.coeff);
        quot += mono;
        rem -= mono * b;
    }
    return quot;
}

} // namespace qv
