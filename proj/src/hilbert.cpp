#include "qv/hilbert.hpp"

#include "qv/linalg.hpp"

#include <algorithm>
#include <map>

namespace qv {

namespace {

int expo_weight(const VarTable& tab, const Expo& e) {
    int d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) d += tab.degree(k) * e[k];
    return d;
}

void minimalize(std::vector<Expo>& gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Expo> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    gens = std::move(out);
}

// numerator of the Hilbert series of R/(monomial ideal), via the pivot
// recursion N(I) = N(I + (x_k)) + t^(w_k) N(I : x_k)
UPoly monomial_numerator(const VarTable& tab, std::vector<Expo> gens) {
    minimalize(gens);
    if (gens.empty()) return UPoly(Rat(1));
    for (const Expo& g : gens) {
        bool constant = true;
        for (int e : g)
            if (e != 0) constant = false;
        if (constant) return UPoly();
    }
    // pivot: a variable occurring in a generator with at least two distinct
    // variables; if none, the generators are pairwise-coprime pure powers
    std::size_t pivot = tab.size();
    for (const Expo& g : gens) {
        std::size_t support = 0, var = 0;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g[k] > 0) {
                ++support;
                var = k;
            }
        if (support >= 2) {
            pivot = var;
            break;
        }
    }
    if (pivot == tab.size()) {
        UPoly acc(Rat(1));
        for (const Expo& g : gens)
            acc = acc * (UPoly(Rat(1)) - UPoly::monomial(expo_weight(tab, g)));
        return acc;
    }
    std::vector<Expo> plus = gens, colon = gens;
    Expo unit(tab.size(), 0);
    unit[pivot] = 1;
    plus.push_back(unit);
    for (Expo& g : colon)
        if (g[pivot] > 0) --g[pivot];
    return monomial_numerator(tab, std::move(plus)) +
           UPoly::monomial(tab.degree(pivot)) * monomial_numerator(tab, std::move(colon));
}

} // namespace

RatSeries hilbert_series(VarTablePtr tab, const std::vector<Poly>& gens,
                         const GroebnerOptions& opt) {
    MonomialOrder ord; // weighted grevlex is degree-compatible with the grading
    std::vector<Expo> lead;
    for (const Poly& g : groebner_basis(gens, ord, opt))
        lead.push_back(leading_term(g, ord).expo);
    UPoly num = monomial_numerator(*tab, std::move(lead));
    UPoly den(Rat(1));
    for (std::size_t k = 0; k < tab->size(); ++k)
        den = den * (UPoly(Rat(1)) - UPoly::monomial(tab->degree(k)));
    return RatSeries(num, den);
}

std::vector<Expo> monomials_of_degree(const VarTable& tab, int d) {
    std::vector<Expo> out;
    Expo cur(tab.size(), 0);
    // positions filled right to left so output is deterministic
    auto rec = [&](auto&& self, std::size_t k, int rem) -> void {
        if (k == tab.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int w = tab.degree(k);
        for (int e = 0; e * w <= rem; ++e) {
            cur[k] = e;
            self(self, k + 1, rem - e * w);
        }
        cur[k] = 0;
    };
    rec(rec, 0, d);
    return out;
}

long graded_piece_dim(VarTablePtr tab, const std::vector<Poly>& gens, int d) {
    std::vector<Expo> basis = monomials_of_degree(*tab, d);
    std::map<Expo, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
    Mat rows;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw error("graded_piece_dim: inhomogeneous generator");
        int dg = g.degree();
        if (dg > d) continue;
        for (const Expo& m : monomials_of_degree(*tab, d - dg)) {
            Vec row(basis.size(), Rat(0));
            for (const auto& [e, c] : g.terms()) {
                Expo prod = e;
                for (std::size_t k = 0; k < prod.size(); ++k) prod[k] += m[k];
                row[col.at(prod)] = c;
            }
            rows.push_back(std::move(row));
        }
    }
    return static_cast<long>(basis.size()) - static_cast<long>(rank(std::move(rows)));
}

} // namespace qv
