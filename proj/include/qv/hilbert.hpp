#pragma once

#include "qv/groebner.hpp"
#include "qv/series.hpp"

namespace qv {

// Hilbert series of R/I for the weighted polynomial ring described by `tab`,
// as numerator over prod_k (1 - t^(weight_k)).
RatSeries hilbert_series(VarTablePtr tab, const std::vector<Poly>& gens,
                         const GroebnerOptions& opt = {});

// Dimension of the degree-d piece of R/I by exact rank computation on the
// monomial basis; requires homogeneous generators. Independent cross-check of
// hilbert_series.
long graded_piece_dim(VarTablePtr tab, const std::vector<Poly>& gens, int d);

// All exponent vectors of weighted degree exactly d.
std::vector<Expo> monomials_of_degree(const VarTable& tab, int d);

} // namespace qv
