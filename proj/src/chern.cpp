#include "qv/chern.hpp"

#include <algorithm>

namespace qv {

namespace {

std::vector<std::size_t> symbol_positions(const RootContext& ctx) {
    std::vector<std::size_t> pos;
    for (const std::string& s : ctx.symbols) pos.push_back(ctx.ring->index(s));
    return pos;
}

} // namespace

RootContext make_root_context(VarTablePtr base, const std::vector<std::string>& symbols,
                              const std::vector<Poly>& elem) {
    if (symbols.size() != elem.size())
        throw error("make_root_context: one elementary class per symbol required");
    RootContext ctx;
    ctx.base = base;
    ctx.ring = extend_vars(base, symbols, std::vector<int>(symbols.size(), 1));
    ctx.symbols = symbols;
    for (const Poly& e : elem) ctx.elem.push_back(e.substitute({}, base));
    return ctx;
}

Poly embed(const RootContext& ctx, const Poly& p) { return p.substitute({}, ctx.ring); }

Poly project(const RootContext& ctx, const Poly& p) {
    std::vector<std::size_t> pos = symbol_positions(ctx);
    Poly out(ctx.base);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t k : pos)
            if (e[k] != 0) throw error("project: residual root symbol in " + p.str());
        Expo cut(ctx.base->size());
        for (std::size_t k = 0; k < cut.size(); ++k) cut[k] = e[k];
        out.add_term(cut, c);
    }
    return out;
}

Poly reduce_symmetric(const RootContext& ctx, const Poly& p) {
    std::vector<std::size_t> pos = symbol_positions(ctx);
    std::size_t n = pos.size();

    // elementary symmetric polynomials of the root symbols, in the root ring
    std::vector<Poly> esym(n + 1, Poly(ctx.ring, Rat(1)));
    {
        // product of (1 + u*sym) tracked degree by degree in the symbols
        std::vector<Poly> acc = {Poly(ctx.ring, Rat(1))};
        for (std::size_t k = 0; k < n; ++k) {
            Poly s = Poly::var(ctx.ring, ctx.symbols[k]);
            acc.push_back(Poly(ctx.ring));
            for (std::size_t d = acc.size() - 1; d >= 1; --d) acc[d] += acc[d - 1] * s;
        }
        for (std::size_t k = 1; k <= n; ++k) esym[k] = acc[k];
    }
    std::vector<Poly> evals;
    for (const Poly& e : ctx.elem) evals.push_back(embed(ctx, e));

    auto root_part = [&](const Expo& e) {
        std::vector<int> r(n);
        for (std::size_t k = 0; k < n; ++k) r[k] = e[pos[k]];
        return r;
    };

    Poly work = p;
    Poly out(ctx.base);
    for (;;) {
        // lex-greatest root exponent among the remaining mixed terms
        bool found = false;
        std::vector<int> best;
        for (const auto& [e, c] : work.terms()) {
            std::vector<int> r = root_part(e);
            bool pure = std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
            if (pure) continue;
            if (!found || std::lexicographical_compare(best.begin(), best.end(), r.begin(), r.end())) {
                best = r;
                found = true;
            }
        }
        if (!found) break;
        for (std::size_t k = 0; k + 1 < n; ++k)
            if (best[k] < best[k + 1])
                throw error("reduce_symmetric: expression is not symmetric in the roots");

        // coefficient of the leading root monomial, a root-free polynomial
        Poly coeff(ctx.ring);
        for (const auto& [e, c] : work.terms()) {
            if (root_part(e) != best) continue;
            Expo stripped = e;
            for (std::size_t k : pos) stripped[k] = 0;
            coeff.add_term(stripped, c);
        }

        Poly eprod(ctx.ring, Rat(1));
        Poly vprod(ctx.ring, Rat(1));
        for (std::size_t k = 0; k < n; ++k) {
            int delta = best[k] - (k + 1 < n ? best[k + 1] : 0);
            for (int i = 0; i < delta; ++i) {
                eprod *= esym[k + 1];
                vprod *= evals[k];
            }
        }
        work -= coeff * eprod;
        out += project(ctx, coeff * vprod);
    }
    return out + project(ctx, work);
}

Roots tautological_roots(const RootContext& ctx) {
    Roots r;
    for (const std::string& s : ctx.symbols) r.push_back(Poly::var(ctx.ring, s));
    return r;
}

Roots dual(const Roots& roots) {
    Roots r;
    for (const Poly& x : roots) r.push_back(-x);
    return r;
}

Roots twist(const Roots& roots, const Poly& line) {
    Roots r;
    for (const Poly& x : roots) r.push_back(x + line);
    return r;
}

Roots sym_power(const Roots& roots, int d) {
    if (d < 0) throw error("sym_power: negative power");
    Roots out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    // multisets of size d, indices non-decreasing
    auto rec = [&](auto&& self, std::size_t slot, std::size_t lo) -> void {
        if (slot == idx.size()) {
            if (idx.empty()) return;
            Poly sum = roots[idx[0]];
            for (std::size_t k = 1; k < idx.size(); ++k) sum += roots[idx[k]];
            out.push_back(sum);
            return;
        }
        for (std::size_t i = lo; i < roots.size(); ++i) {
            idx[slot] = i;
            self(self, slot + 1, i);
        }
    };
    if (d == 0) return out;
    rec(rec, 0, 0);
    return out;
}

Roots direct_sum(const Roots& a, const Roots& b) {
    Roots r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Poly total_chern(const RootContext& ctx, const Roots& roots, int trunc) {
    Poly prod(ctx.ring, Rat(1));
    for (const Poly& r : roots) {
        prod *= Poly(ctx.ring, Rat(1)) + r;
        if (trunc >= 0) prod = prod.truncate_above(trunc);
    }
    Poly red = reduce_symmetric(ctx, prod);
    return trunc >= 0 ? red.truncate_above(trunc) : red;
}

std::vector<Poly> chern_classes(const RootContext& ctx, const Roots& roots) {
    Poly total = total_chern(ctx, roots);
    std::vector<Poly> out;
    for (int d = 0; d <= static_cast<int>(roots.size()); ++d) {
        // graded pieces of the total class; valid because the base is graded
        out.push_back(total.select_degree(d));
    }
    return out;
}

Poly segre_class(const RootContext& ctx, const Roots& roots, int trunc) {
    return series_inverse(total_chern(ctx, roots, trunc), trunc);
}

Poly weighted_chern_poly(const RootContext& ctx, const Roots& roots,
                         const std::vector<int>& weights, const std::string& tvar) {
    if (roots.size() != weights.size())
        throw error("weighted_chern_poly: one weight per root required");
    Poly t = Poly::var(ctx.ring, tvar);
    Poly prod(ctx.ring, Rat(1));
    for (std::size_t k = 0; k < roots.size(); ++k)
        prod *= Rat(weights[k]) * t + roots[k];
    return reduce_symmetric(ctx, prod);
}

} // namespace qv
