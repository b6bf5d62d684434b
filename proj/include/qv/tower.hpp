#pragma once

#include "qv/poly.hpp"

#include <functional>
#include <vector>

namespace qv {

// One projective-bundle layer P(W): `var` is the hyperplane class, `rank` the
// rank of W, `chern` its Chern classes c_1..c_rank as polynomials in the
// variables below this layer.
struct TowerLayer {
    std::string var;
    int rank = 0;
    std::vector<Poly> chern;
};

// A tower of projective bundles over a base ring, bottom layer first.
struct Tower {
    VarTablePtr ring;
    std::vector<TowerLayer> layers;
};

// Segre class s_k of a layer's bundle via s_k = -sum_i c_i s_(k-i).
Poly layer_segre(const Tower& tw, std::size_t layer, int k);

// rewrites var^rank via the layer relation, top layer first, producing the
// canonical module form (exponent of each layer var below its rank)
Poly tower_reduce(const Tower& tw, Poly p);

// pushforward to the base ring: var^(rank-1+k) integrates to s_k
Poly tower_pushforward(const Tower& tw, Poly p);

// pushforward through the top `count` layers only
Poly tower_pushforward_partial(const Tower& tw, Poly p, std::size_t count);

struct PushforwardSolution {
    Poly cls;                // sum_j alpha_j * H^(codim - j)
    std::vector<Poly> alpha; // alpha_0..alpha_codim
};

// Solves the triangular system alpha_k = rhs(k) - sum_(j<k) alpha_j *
// ambient_segre(k-j) for k = 0..codim, then checks that the next
// `verify_extra` equations force alpha to vanish.
PushforwardSolution solve_pushforward(VarTablePtr tab, const std::string& hvar, int codim,
                                      const std::function<Poly(int)>& rhs,
                                      const std::function<Poly(int)>& ambient_segre,
                                      int verify_extra = 5);

// class of the relative diagonal of tw x_base tw as sum_k left_k (x) right_k,
// where right_k runs over the module-basis monomials of the tower; determined
// by pr1_*([D] * (1 (x) g)) = g for every basis monomial g
std::vector<std::pair<Poly, Poly>> relative_diagonal(const Tower& tw);

// the module basis monomials of the tower (products var^e, e < rank)
std::vector<Poly> tower_basis(const Tower& tw);

// x + x^sigma, reduced; sigma given by images of the layer variables
Poly involution_trace(const Tower& tw, const Poly& x,
                      const std::map<std::string, Poly>& sigma);

// rewrites `value` as a polynomial in the given ring elements: solves
// value = Q(gens) with Q over the coefficient field, by exact linear algebra
// on monomials of `gens` up to total degree `max_deg`; throws if impossible
Poly express_in(const Tower& tw, const Poly& value, const std::vector<Poly>& gens,
                const std::vector<std::string>& names, const std::vector<int>& degrees,
                int max_deg);

} // namespace qv
