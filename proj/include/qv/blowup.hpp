#pragma once

#include "qv/poly.hpp"

namespace qv {

// strict pullback plus the excess correction supported on the exceptional
// divisor: f*[S] + { (t + t^2 + ...) * excess * segre }^codim, where t is the
// negative of the exceptional class
Poly proper_transform(const Poly& pullback, const Poly& excess, const Poly& segre,
                      const std::string& tvar, int codim);

// pushforward along the contraction of a degree-2 exceptional variable evar:
// reduce modulo `quadrel` (monic of degree 2 in evar after scaling) to
// a + b*evar, then keep a; the companion picks out the evar-component's image
Poly contract_push(const Poly& x, const Poly& quadrel, const std::string& evar);
Poly contract_push_times_e(const Poly& x, const Poly& quadrel, const std::string& evar);

// exact quotient a / b in a polynomial ring; throws if b does not divide a
Poly exact_divide(const Poly& a, const Poly& b);

} // namespace qv
