#pragma once

#include "qv/rational.hpp"

#include <string>
#include <vector>

namespace qv {

// Dense univariate polynomial in t with rational coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rat c) : c_{std::move(c)} { trim(); }
    static UPoly monomial(int deg, Rat c = Rat(1));

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rat coeff(int d) const;
    void set_coeff(int d, Rat c);

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly truncate(int deg) const; // keep coefficients of t^0..t^deg
    Rat eval(const Rat& x) const;
    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_; // c_[d] is the coefficient of t^d
};

UPoly operator*(const Rat& c, const UPoly& p);

// Rational function in t, kept unreduced; equality by cross-multiplication.
class RatSeries {
public:
    RatSeries() : num_(), den_(Rat(1)) {}
    RatSeries(UPoly num, UPoly den);
    explicit RatSeries(UPoly num) : num_(std::move(num)), den_(Rat(1)) {}
    explicit RatSeries(Rat c) : num_(UPoly(std::move(c))), den_(Rat(1)) {}

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    RatSeries operator-() const;
    RatSeries operator+(const RatSeries& o) const;
    RatSeries operator-(const RatSeries& o) const;
    RatSeries operator*(const RatSeries& o) const;
    RatSeries operator/(const RatSeries& o) const;
    bool operator==(const RatSeries& o) const;
    bool operator!=(const RatSeries& o) const { return !(*this == o); }

    // power-series expansion to degree `deg`; requires den(0) != 0
    UPoly expand(int deg) const;
    // true if the function is a polynomial; `out` receives the exact quotient
    bool as_polynomial(UPoly& out) const;
    std::string str() const;

private:
    UPoly num_, den_;
};

// Parses a rational-function expression in the single variable t,
// e.g. "(1-t^30)/((1-t^2)*(1-t^4))".
RatSeries parse_series(const std::string& text);

// t^2 |-> t on every exponent; rejects series with odd-degree terms.
UPoly halve_exponents(const UPoly& p);
RatSeries halve_exponents(const RatSeries& s);

// symmetric square of a generating series: (P(t)^2 + P(t^2)) / 2
UPoly sym2_series(const UPoly& p);

UPoly substitute_power(const UPoly& p, int k); // P(t) -> P(t^k)

// Intersection pairing adjustment: coefficients at or below the middle shift
// down by t^2, coefficients above stay. `dim` is the complex dimension, so the
// middle sits at t-exponent `dim`.
UPoly ip_prime(const UPoly& p, int dim);

// base + (t^2 - t^(2*codim))/(1 - t^2) * center - sum(new_strata)
RatSeries blowup_series(const RatSeries& base, const RatSeries& center, int codim,
                        const std::vector<RatSeries>& new_strata);

} // namespace qv
