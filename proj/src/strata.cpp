#include "qv/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qv {

namespace {

using Pt = std::pair<Rat, Rat>;

// invariant inner product on the weight plane of the diagonal torus
Rat ip(const Pt& p, const Pt& q) {
    return p.first * q.first + p.second * q.second +
           (p.first + p.second) * (q.first + q.second);
}

Rat norm2(const Pt& p) { return ip(p, p); }

Pt weight_of(int i, int j, int degree) {
    Rat shift = rat(degree, 3);
    return {Rat(i) - shift, Rat(j) - shift};
}

bool in_positive_chamber(const Pt& p) {
    // a <= b <= -a/2, excluding the origin
    if (!(p.first <= p.second)) return false;
    if (!(p.second <= -p.first / 2)) return false;
    return !(p.first == 0 && p.second == 0);
}

bool on_wall(const Pt& p) { return p.first == p.second || p.second == -p.first / 2; }

RatSeries one_over(const std::vector<int>& exps) {
    RatSeries r = parse_series("1");
    for (int e : exps) r = r / parse_series("1 - t^" + std::to_string(e));
    return r;
}

} // namespace

RatSeries binary_equivariant_series(int degree) {
    return parse_series("1 - t^" + std::to_string(2 * (degree + 1))) /
           parse_series("(1-t^2)*(1-t^4)");
}

std::vector<Stratum> binary_strata(int degree) {
    std::vector<Stratum> out;
    for (int m = degree / 2 + 1; m <= degree; ++m) {
        Stratum s;
        s.support = {{m, 0}};
        s.stabilizer = "T";
        s.contribution = one_over({2});
        s.dim_yss = degree - m;
        s.codim = m - 1;
        s.beta = {Rat(m) - rat(degree, 2), Rat(0)};
        out.push_back(s);
    }
    return out;
}

RatSeries binary_semistable_series(int degree) {
    RatSeries r = binary_equivariant_series(degree);
    for (const Stratum& s : binary_strata(degree))
        r = r - RatSeries(UPoly::monomial(2 * s.codim)) * s.contribution;
    return r;
}

RatSeries ternary_equivariant_series(int degree) {
    int n = (degree + 1) * (degree + 2) / 2;
    return parse_series("1 - t^" + std::to_string(2 * n)) /
           parse_series("(1-t^2)*(1-t^4)*(1-t^6)");
}

std::vector<Stratum> ternary_strata(int degree) {
    // monomial weights, keyed by the (i, j) exponents of x and y
    std::vector<std::pair<std::pair<int, int>, Pt>> weights;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j)
            weights.push_back({{i, j}, weight_of(i, j, degree)});

    // candidate beta: closest point of every single weight and of every
    // segment between two weights (clamped), restricted to the chamber
    std::vector<Pt> candidates;
    auto consider = [&](const Pt& p) {
        if (!in_positive_chamber(p)) return;
        if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
            candidates.push_back(p);
    };
    for (const auto& [lab, w] : weights) consider(w);
    for (std::size_t x = 0; x < weights.size(); ++x) {
        for (std::size_t y = x + 1; y < weights.size(); ++y) {
            Pt w1 = weights[x].second, w2 = weights[y].second;
            Pt dir = {w2.first - w1.first, w2.second - w1.second};
            Rat dd = ip(dir, dir);
            if (dd == 0) continue;
            Rat s = -ip(w1, dir) / dd;
            if (s < 0) s = 0;
            if (s > 1) s = 1;
            consider({w1.first + s * dir.first, w1.second + s * dir.second});
        }
    }

    std::vector<Stratum> out;
    for (const Pt& beta : candidates) {
        Rat nb = norm2(beta);
        std::vector<std::pair<int, int>> support;
        std::vector<Pt> support_pts;
        int above = 0;
        for (const auto& [lab, w] : weights) {
            Rat v = ip(w, beta);
            if (v == nb) {
                support.push_back(lab);
                support_pts.push_back(w);
            } else if (v > nb) {
                ++above;
            }
        }
        if (support.empty()) throw error("ternary_strata: candidate without support");

        // order support along the critical line by ascending y-exponent
        {
            std::vector<std::size_t> idx(support.size());
            for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
            std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) {
                if (support[p].second != support[q].second)
                    return support[p].second < support[q].second;
                return support[p].first < support[q].first;
            });
            std::vector<std::pair<int, int>> s2;
            std::vector<Pt> p2;
            for (std::size_t k : idx) {
                s2.push_back(support[k]);
                p2.push_back(support_pts[k]);
            }
            support = std::move(s2);
            support_pts = std::move(p2);
        }

        Stratum st;
        st.support = support;
        st.beta = beta;
        bool wall = on_wall(beta);
        st.stabilizer = wall ? "GL2" : "T";
        st.dim_yss = static_cast<int>(support.size()) - 1 + above;
        int dim_parabolic = wall ? 6 : 5;
        int dim_x = (degree + 1) * (degree + 2) / 2 - 1;
        st.codim = dim_x - 8 + dim_parabolic - st.dim_yss;

        if (support.size() == 1) {
            if (support_pts[0] != beta)
                throw error("ternary_strata: singleton support away from beta");
            st.contribution = wall ? one_over({2, 4}) : one_over({2, 2});
        } else {
            // affine positions along the critical line
            bool use_b = support_pts.front().first == support_pts.back().first;
            bool flip = !use_b && support_pts.front().first > support_pts.back().first;
            auto pos = [&](const Pt& p) {
                Rat v = use_b ? p.second : p.first;
                return flip ? -v : v;
            };
            std::vector<Rat> ps;
            for (const Pt& p : support_pts) ps.push_back(pos(p));
            for (std::size_t k = 0; k + 1 < ps.size(); ++k)
                if (!(ps[k] < ps[k + 1]))
                    throw error("ternary_strata: support positions not distinct");
            Rat pb = pos(beta);
            if (!(ps.front() < pb && pb < ps.back()))
                throw error("ternary_strata: beta not interior to its support");
            if (wall) {
                Rat step = ps[1] - ps[0];
                for (std::size_t k = 0; k + 1 < ps.size(); ++k)
                    if (ps[k + 1] - ps[k] != step)
                        throw error("ternary_strata: unequal spacing on a wall stratum");
                st.contribution =
                    one_over({2}) * binary_semistable_series(static_cast<int>(support.size()) - 1);
            } else {
                st.contribution = one_over({2});
            }
        }
        // a vanishing contribution means the stratum is empty
        if (st.contribution.num().is_zero()) continue;
        out.push_back(st);
    }

    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        Rat na = norm2(a.beta), nbv = norm2(b.beta);
        if (na != nbv) return na > nbv;
        return a.support < b.support;
    });
    return out;
}

RatSeries strata_sum(const std::vector<Stratum>& strata) {
    RatSeries acc = parse_series("0");
    for (const Stratum& s : strata)
        acc = acc + RatSeries(UPoly::monomial(2 * s.codim)) * s.contribution;
    return acc;
}

std::string stratum_table_row(const Stratum& s) {
    std::ostringstream os;
    for (std::size_t k = 0; k < s.support.size(); ++k) {
        if (k) os << ",";
        os << "(" << s.support[k].first << "," << s.support[k].second << ")";
    }
    os << " | " << s.stabilizer << " | " << s.contribution.str() << " | " << s.dim_yss << " | "
       << s.codim;
    return os.str();
}

} // namespace qv
