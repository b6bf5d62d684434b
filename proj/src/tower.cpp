#include "qv/tower.hpp"

#include "qv/hilbert.hpp"
#include "qv/linalg.hpp"

#include <algorithm>
#include <map>

namespace qv {

namespace {

std::vector<std::size_t> layer_positions(const Tower& tw) {
    std::vector<std::size_t> pos;
    for (const TowerLayer& l : tw.layers) pos.push_back(tw.ring->index(l.var));
    return pos;
}

// variables of the ring that are not layer variables
VarTablePtr base_table(const Tower& tw) {
    std::vector<std::size_t> pos = layer_positions(tw);
    std::vector<std::string> names;
    std::vector<int> degs;
    for (std::size_t k = 0; k < tw.ring->size(); ++k) {
        if (std::find(pos.begin(), pos.end(), k) != pos.end()) continue;
        names.push_back(tw.ring->name(k));
        degs.push_back(tw.ring->degree(k));
    }
    return make_vars(names, degs);
}

} // namespace

Poly layer_segre(const Tower& tw, std::size_t layer, int k) {
    if (layer >= tw.layers.size()) throw error("layer_segre: no such layer");
    const TowerLayer& l = tw.layers[layer];
    if (k < 0) return Poly(tw.ring);
    std::vector<Poly> s = {Poly(tw.ring, Rat(1))};
    for (int m = 1; m <= k; ++m) {
        Poly acc(tw.ring);
        for (int i = 1; i <= std::min<int>(m, static_cast<int>(l.chern.size())); ++i)
            acc -= l.chern[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(m - i)];
        s.push_back(acc);
    }
    return s[static_cast<std::size_t>(k)];
}

Poly tower_reduce(const Tower& tw, Poly p) {
    for (std::size_t li = tw.layers.size(); li-- > 0;) {
        const TowerLayer& l = tw.layers[li];
        std::size_t vi = tw.ring->index(l.var);
        int r = l.rank;
        Poly v = Poly::var(tw.ring, l.var);
        // tail of the relation: v^r = -(c_1 v^(r-1) + ... + c_r)
        Poly tail(tw.ring);
        for (int i = 1; i <= r; ++i)
            tail -= l.chern[static_cast<std::size_t>(i - 1)] * v.pow(r - i);
        for (;;) {
            Poly high(tw.ring);
            for (const auto& [e, c] : p.terms()) {
                if (e[vi] < r) continue;
                Expo cut = e;
                cut[vi] -= r;
                high.add_term(cut, c);
            }
            if (high.is_zero()) break;
            p = (p - high * v.pow(r)) + high * tail;
        }
    }
    return p;
}

Poly tower_pushforward_partial(const Tower& tw, Poly p, std::size_t count) {
    if (count > tw.layers.size()) throw error("tower_pushforward_partial: too many layers");
    for (std::size_t done = 0; done < count; ++done) {
        std::size_t li = tw.layers.size() - 1 - done;
        const TowerLayer& l = tw.layers[li];
        std::vector<Poly> coeff = p.collect(l.var);
        Poly acc(tw.ring);
        for (std::size_t d = 0; d < coeff.size(); ++d) {
            int k = static_cast<int>(d) - (l.rank - 1);
            if (k < 0) continue;
            acc += coeff[d] * layer_segre(tw, li, k);
        }
        p = acc;
    }
    return p;
}

Poly tower_pushforward(const Tower& tw, Poly p) {
    return tower_pushforward_partial(tw, std::move(p), tw.layers.size());
}

PushforwardSolution solve_pushforward(VarTablePtr tab, const std::string& hvar, int codim,
                                      const std::function<Poly(int)>& rhs,
                                      const std::function<Poly(int)>& ambient_segre,
                                      int verify_extra) {
    std::vector<Poly> alpha;
    for (int k = 0; k <= codim; ++k) {
        Poly a = rhs(k);
        for (int j = 0; j < k; ++j) a -= alpha[static_cast<std::size_t>(j)] * ambient_segre(k - j);
        alpha.push_back(a);
    }
    for (int k = codim + 1; k <= codim + verify_extra; ++k) {
        Poly a = rhs(k);
        for (int j = 0; j <= codim; ++j) a -= alpha[static_cast<std::size_t>(j)] * ambient_segre(k - j);
        if (!a.is_zero())
            throw error("solve_pushforward: consistency check failed at k=" + std::to_string(k));
    }
    Poly h = Poly::var(tab, hvar);
    Poly cls(tab);
    for (int j = 0; j <= codim; ++j) cls += alpha[static_cast<std::size_t>(j)] * h.pow(codim - j);
    return {cls, alpha};
}

std::vector<Poly> tower_basis(const Tower& tw) {
    std::vector<Poly> basis = {Poly(tw.ring, Rat(1))};
    for (const TowerLayer& l : tw.layers) {
        Poly v = Poly::var(tw.ring, l.var);
        std::vector<Poly> next;
        for (const Poly& b : basis)
            for (int e = 0; e < l.rank; ++e) next.push_back(b * v.pow(e));
        basis = std::move(next);
    }
    return basis;
}

std::vector<std::pair<Poly, Poly>> relative_diagonal(const Tower& tw) {
    std::vector<Poly> basis = tower_basis(tw);
    VarTablePtr base = base_table(tw);
    int reldim = 0;
    for (const TowerLayer& l : tw.layers) reldim += l.rank - 1;

    // unknown coefficients: for each right-factor monomial m, the left factor
    // is a combination of basis * base-monomial of complementary degree
    struct Slot {
        std::size_t m;   // right basis index
        std::size_t b;   // left basis index
        Expo mu;         // base-ring monomial
    };
    std::vector<Slot> slots;
    for (std::size_t mi = 0; mi < basis.size(); ++mi) {
        int dm = basis[mi].is_zero() ? 0 : basis[mi].degree();
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            int db = basis[bi].is_zero() ? 0 : basis[bi].degree();
            int rest = reldim - dm - db;
            if (rest < 0) continue;
            for (const Expo& mu : monomials_of_degree(*base, rest)) slots.push_back({mi, bi, mu});
        }
    }

    // equations: sum_m L_m * push(m * g) = g for each basis monomial g
    std::map<std::pair<std::size_t, Expo>, std::size_t> row_of;
    Mat mat;
    Vec rhs;
    auto row = [&](std::size_t gi, const Expo& e) {
        auto key = std::make_pair(gi, e);
        auto it = row_of.find(key);
        if (it != row_of.end()) return it->second;
        std::size_t r = mat.size();
        row_of[key] = r;
        mat.push_back(Vec(slots.size(), Rat(0)));
        rhs.push_back(Rat(0));
        return r;
    };
    for (std::size_t gi = 0; gi < basis.size(); ++gi) {
        std::vector<Poly> pushed(basis.size(), Poly(tw.ring));
        for (std::size_t mi = 0; mi < basis.size(); ++mi)
            pushed[mi] = tower_pushforward(tw, basis[mi] * basis[gi]);
        for (std::size_t si = 0; si < slots.size(); ++si) {
            const Slot& s = slots[si];
            Poly mu(tw.ring);
            {
                Expo lift(tw.ring->size(), 0);
                for (std::size_t k = 0; k < base->size(); ++k) {
                    std::size_t pos = tw.ring->index(base->name(k));
                    lift[pos] = s.mu[k];
                }
                mu.add_term(lift, Rat(1));
            }
            Poly contrib = tower_reduce(tw, basis[s.b] * mu * pushed[s.m]);
            for (const auto& [e, c] : contrib.terms()) mat[row(gi, e)][si] += c;
        }
        for (const auto& [e, c] : basis[gi].terms()) rhs[row(gi, e)] += c;
    }
    for (Vec& r : mat) r.resize(slots.size(), Rat(0));

    if (rank(mat) != slots.size()) throw error("relative_diagonal: system is degenerate");
    std::optional<Vec> sol = solve(mat, rhs);
    if (!sol) throw error("relative_diagonal: inconsistent system");

    std::vector<std::pair<Poly, Poly>> out;
    for (std::size_t mi = 0; mi < basis.size(); ++mi) {
        Poly left(tw.ring);
        for (std::size_t si = 0; si < slots.size(); ++si) {
            if (slots[si].m != mi || (*sol)[si] == 0) continue;
            Poly mu(tw.ring);
            Expo lift(tw.ring->size(), 0);
            for (std::size_t k = 0; k < base->size(); ++k)
                lift[tw.ring->index(base->name(k))] = slots[si].mu[k];
            mu.add_term(lift, (*sol)[si]);
            left += basis[slots[si].b] * mu;
        }
        out.emplace_back(left, basis[mi]);
    }

    // verify the defining identities exactly
    for (std::size_t gi = 0; gi < basis.size(); ++gi) {
        Poly acc(tw.ring);
        for (const auto& [left, m] : out)
            acc += left * tower_pushforward(tw, m * basis[gi]);
        if (tower_reduce(tw, acc) != basis[gi])
            throw error("relative_diagonal: verification failed");
    }
    return out;
}

Poly involution_trace(const Tower& tw, const Poly& x, const std::map<std::string, Poly>& sigma) {
    return tower_reduce(tw, x + x.substitute(sigma, tw.ring));
}

Poly express_in(const Tower& tw, const Poly& value, const std::vector<Poly>& gens,
                const std::vector<std::string>& names, const std::vector<int>& degrees,
                int max_deg) {
    if (gens.size() != names.size() || names.size() != degrees.size())
        throw error("express_in: generators, names and degrees must align");
    VarTablePtr ttab = make_vars(names, degrees);
    std::vector<Expo> monos;
    for (int d = 0; d <= max_deg; ++d)
        for (const Expo& e : monomials_of_degree(*ttab, d)) monos.push_back(e);

    Poly target = tower_reduce(tw, value);
    std::vector<Poly> images;
    for (const Expo& m : monos) {
        Poly prod(tw.ring, Rat(1));
        for (std::size_t k = 0; k < gens.size(); ++k) prod *= gens[k].pow(m[k]);
        images.push_back(tower_reduce(tw, prod));
    }

    std::map<Expo, std::size_t> row_of;
    auto row = [&](const Expo& e) {
        auto it = row_of.find(e);
        if (it != row_of.end()) return it->second;
        std::size_t r = row_of.size();
        row_of[e] = r;
        return r;
    };
    for (const Poly& img : images)
        for (const auto& [e, c] : img.terms()) row(e);
    for (const auto& [e, c] : target.terms()) row(e);

    Mat mat(row_of.size(), Vec(monos.size(), Rat(0)));
    Vec rhs(row_of.size(), Rat(0));
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [e, c] : images[j].terms()) mat[row(e)][j] = c;
    for (const auto& [e, c] : target.terms()) rhs[row(e)] = c;

    if (rank(mat) != monos.size()) throw error("express_in: representation is not unique");
    std::optional<Vec> sol = solve(mat, rhs);
    if (!sol) throw error("express_in: no representation exists");
    Poly out(ttab);
    for (std::size_t j = 0; j < monos.size(); ++j)
        if ((*sol)[j] != 0) out.add_term(monos[j], (*sol)[j]);
    return out;
}

} // namespace qv
