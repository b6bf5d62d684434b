#pragma once

#include "qv/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qv {

// One unstable stratum of a space of degree-d forms, indexed by the closest
// point beta of a weight subset.
struct Stratum {
    std::vector<std::pair<int, int>> support; // monomial labels (i, j) on the critical line
    std::string stabilizer;                   // "GL2" or "T"
    RatSeries contribution;                   // equivariant series of Z^ss_beta
    int dim_yss = 0;
    int codim = 0;
    std::pair<Rat, Rat> beta{Rat(0), Rat(0)};
};

// Strata of ternary degree-d forms under the rank-2 torus normalization used
// here: the weight of x^i y^j z^k is (i - d/3, j - d/3).
std::vector<Stratum> ternary_strata(int degree);

// Strata of binary degree-d forms: one stratum per m > d/2.
std::vector<Stratum> binary_strata(int degree);

// equivariant series of the semistable locus of binary degree-d forms:
// (1 - t^(2(d+1))) / ((1-t^2)(1-t^4)) minus the strata
RatSeries binary_semistable_series(int degree);
RatSeries binary_equivariant_series(int degree); // the full-space series

// equivariant series of the full space of ternary degree-d forms
RatSeries ternary_equivariant_series(int degree);

// sum of t^(2 codim) * contribution over strata
RatSeries strata_sum(const std::vector<Stratum>& strata);

std::string stratum_table_row(const Stratum& s);

} // namespace qv
