#pragma once

#include "qv/poly.hpp"

#include <vector>

namespace qv {

// Weighted graded reverse-lex order, optionally with a leading elimination
// block: monomials are compared first on the block variables, so a Groebner
// basis eliminates the block.
struct MonomialOrder {
    std::vector<std::size_t> block; // empty -> plain weighted grevlex

    // true if a > b
    bool greater(const VarTable& t, const Expo& a, const Expo& b) const;
};

struct LeadTerm {
    Expo expo;
    Rat coeff;
};

LeadTerm leading_term(const Poly& p, const MonomialOrder& ord);

bool divides(const Expo& a, const Expo& b); // a | b componentwise

// Remainder of p under multivariate division by gens (full tail reduction).
Poly normal_form(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& ord);

struct GroebnerOptions {
    std::size_t pair_budget = 200000;
    bool use_cache = true;
};

// Reduced Groebner basis (monic, auto-reduced, deterministic order).
std::vector<Poly> groebner_basis(std::vector<Poly> gens, const MonomialOrder& ord,
                                 const GroebnerOptions& opt = {});

bool ideal_member(const Poly& p, const std::vector<Poly>& gb, const MonomialOrder& ord);
bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const MonomialOrder& ord,
                 const GroebnerOptions& opt = {});

// Generators of the ideal's intersection with the subring excluding `vars`.
std::vector<Poly> eliminate(const std::vector<Poly>& gens, const std::vector<std::string>& vars,
                            const GroebnerOptions& opt = {});

// Groebner cache management (disk-backed, keyed by content hash).
void set_cache_dir(const std::string& dir); // "" disables
std::string cache_dir();
std::size_t cache_clear();
std::size_t cache_count();

} // namespace qv
