#pragma once

#include "qv/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace qv {

// Ordered list of graded variables. Shared by all polynomials of one ring.
class VarTable {
  public:
    VarTable(std::vector<std::string> names, std::vector<int> degrees);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int degree(std::size_t i) const { return degrees_[i]; }
    std::optional<std::size_t> find(const std::string& n) const;
    std::size_t index(const std::string& n) const; // throws if absent
    std::string signature() const;                 // "H:1,c2:2,..."

  private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names, std::vector<int> degrees);
// Parses "H:1 c2:2 c3:3".
VarTablePtr make_vars(const std::string& spec);
// New table = base + extra trailing variables.
VarTablePtr extend_vars(const VarTablePtr& base, std::vector<std::string> names, std::vector<int> degrees);

using Expo = std::vector<int>; // exponent vector, size == table size

int weighted_degree(const VarTable& t, const Expo& e);

// true if a > b in weighted graded reverse-lex order
bool grevlex_greater(const VarTable& t, const Expo& a, const Expo& b);

// Sparse polynomial with exact rational coefficients over a graded VarTable.
class Poly {
  public:
    Poly() = default;
    explicit Poly(VarTablePtr tab) : tab_(std::move(tab)) {}
    Poly(VarTablePtr tab, const Rat& c); // constant

    static Poly var(const VarTablePtr& tab, const std::string& name, int exp = 1);

    const VarTablePtr& table() const { return tab_; }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    std::size_t term_count() const { return terms_.size(); }

    // highest/lowest weighted degree among terms; zero poly -> -1
    int degree() const;
    int low_degree() const;
    bool is_homogeneous() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator/(const Rat& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(int n) const;

    // sum of terms of weighted degree == d (resp. <= d)
    Poly select_degree(int d) const;
    Poly truncate_above(int d) const;

    void add_term(const Expo& e, const Rat& c); // merges, drops zeros

    // Simultaneous substitution into `target`; unmapped variables must exist in
    // `target` under the same name. Images may live in any ring over `target`.
    Poly substitute(const std::map<std::string, Poly>& images, const VarTablePtr& target) const;
    // Convenience: same table, single variable.
    Poly substitute(const std::string& var, const Poly& image) const;

    // Collects coefficients of powers of one variable: result[k] = coeff of x^k
    // (a polynomial in the remaining variables, same table, exponent zeroed).
    std::vector<Poly> collect(const std::string& var) const;

    Rat coeff(const Expo& e) const;
    Rat coeff_str(const std::string& monomial) const; // e.g. "c2*H^2"

    std::string str() const; // canonical: grevlex-descending terms

  private:
    VarTablePtr tab_;
    std::map<Expo, Rat> terms_;
};

Poly operator*(const Rat& c, const Poly& p);

// Parses +,-,*,/,^,(),integers,rationals,identifiers. '/' needs constant rhs.
Poly parse_poly(const VarTablePtr& tab, const std::string& text);

// geometric series helpers used by blowup/Chern code ------------------------

// multiplicative inverse of p (unit constant term) as a series, degrees <= trunc
Poly series_inverse(const Poly& p, int trunc);
// p * q with degrees above trunc discarded
Poly truncated_mul(const Poly& p, const Poly& q, int trunc);

} // namespace qv
