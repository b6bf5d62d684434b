#pragma once

#include "qv/poly.hpp"

#include <vector>

namespace qv {

// Computations with Chern roots: a handful of abstract root symbols adjoined
// to a base ring, with their elementary symmetric polynomials pinned to base
// classes. Symmetric expressions in the roots reduce back to the base ring.
struct RootContext {
    VarTablePtr base;
    VarTablePtr ring; // base extended by the root symbols, each of degree 1
    std::vector<std::string> symbols;
    std::vector<Poly> elem; // e_1..e_n of the symbols, as base-ring classes
};

RootContext make_root_context(VarTablePtr base, const std::vector<std::string>& symbols,
                              const std::vector<Poly>& elem);

// base ring -> root ring and back (the inverse requires root-free input)
Poly embed(const RootContext& ctx, const Poly& p);
Poly project(const RootContext& ctx, const Poly& p);

// rewrites a symmetric-in-the-roots expression as a base-ring class
Poly reduce_symmetric(const RootContext& ctx, const Poly& p);

using Roots = std::vector<Poly>; // Chern roots: linear classes in ctx.ring

Roots tautological_roots(const RootContext& ctx);
Roots dual(const Roots& roots);
Roots twist(const Roots& roots, const Poly& line);
Roots sym_power(const Roots& roots, int d);
Roots direct_sum(const Roots& a, const Roots& b);

// prod (1 + r_i), reduced to the base ring; trunc < 0 keeps all degrees
Poly total_chern(const RootContext& ctx, const Roots& roots, int trunc = -1);
std::vector<Poly> chern_classes(const RootContext& ctx, const Roots& roots);
// inverse of the total Chern class, truncated
Poly segre_class(const RootContext& ctx, const Roots& roots, int trunc);
// prod (w_i * t + r_i) for a 1-parameter weight action; tvar lives in ctx.base
Poly weighted_chern_poly(const RootContext& ctx, const Roots& roots,
                         const std::vector<int>& weights, const std::string& tvar);

} // namespace qv
