#include "qv/series.hpp"

#include <cctype>
#include <sstream>

namespace qv {

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(int deg, Rat c) {
    UPoly p;
    if (deg < 0) throw error("UPoly::monomial: negative degree");
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

Rat UPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(d)];
}

void UPoly::set_coeff(int d, Rat c) {
    if (d < 0) throw error("UPoly::set_coeff: negative degree");
    if (d >= static_cast<int>(c_.size())) {
        if (c == 0) return;
        c_.resize(static_cast<std::size_t>(d) + 1, Rat(0));
    }
    c_[static_cast<std::size_t>(d)] = std::move(c);
    trim();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::truncate(int deg) const {
    UPoly r = *this;
    if (deg < 0) return UPoly();
    if (static_cast<int>(r.c_.size()) > deg + 1) r.c_.resize(static_cast<std::size_t>(deg) + 1);
    r.trim();
    return r;
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        const Rat& c = c_[d];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1);
        if (d == 0) {
            out << rat_str(a);
        } else {
            if (!unit) out << rat_str(a) << "*";
            out << "t";
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

UPoly operator*(const Rat& c, const UPoly& p) { return UPoly(c) * p; }

RatSeries::RatSeries(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("RatSeries: zero denominator");
}

RatSeries RatSeries::operator-() const { return RatSeries(-num_, den_); }

RatSeries RatSeries::operator+(const RatSeries& o) const {
    if (den_ == o.den_) return RatSeries(num_ + o.num_, den_);
    return RatSeries(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatSeries RatSeries::operator-(const RatSeries& o) const { return *this + (-o); }

RatSeries RatSeries::operator*(const RatSeries& o) const {
    return RatSeries(num_ * o.num_, den_ * o.den_);
}

RatSeries RatSeries::operator/(const RatSeries& o) const {
    if (o.num_.is_zero()) throw error("RatSeries: division by zero");
    return RatSeries(num_ * o.den_, den_ * o.num_);
}

bool RatSeries::operator==(const RatSeries& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

UPoly RatSeries::expand(int deg) const {
    if (deg < 0) return UPoly();
    if (den_.coeff(0) == 0) throw error("RatSeries::expand: denominator vanishes at 0");
    // power-series division: r[k] = (num[k] - sum_{j>0} den[j] * r[k-j]) / den[0]
    UPoly r;
    Rat d0 = den_.coeff(0);
    for (int k = 0; k <= deg; ++k) {
        Rat acc = num_.coeff(k);
        for (int j = 1; j <= std::min(k, den_.degree()); ++j) acc -= den_.coeff(j) * r.coeff(k - j);
        r.set_coeff(k, acc / d0);
    }
    return r;
}

bool RatSeries::as_polynomial(UPoly& out) const {
    if (num_.is_zero()) {
        out = UPoly();
        return true;
    }
    int deg = num_.degree() - den_.degree();
    if (deg < 0) return false;
    if (den_.coeff(0) != 0) {
        UPoly q = expand(deg);
        if (q * den_ == num_) {
            out = q;
            return true;
        }
        return false;
    }
    // denominator divisible by t: factor the power of t out of both parts
    int k = 0;
    while (den_.coeff(k) == 0) ++k;
    int m = 0;
    while (num_.coeff(m) == 0) ++m;
    if (m < k) return false;
    UPoly n2, d2;
    for (int i = 0; i + k <= num_.degree(); ++i) n2.set_coeff(i, num_.coeff(i + k));
    for (int i = 0; i + k <= den_.degree(); ++i) d2.set_coeff(i, den_.coeff(i + k));
    return RatSeries(n2, d2).as_polynomial(out);
}

std::string RatSeries::str() const {
    UPoly p;
    if (as_polynomial(p)) return p.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

namespace {

class SeriesParser {
public:
    explicit SeriesParser(const std::string& s) : s_(s) {}

    RatSeries parse() {
        RatSeries r = expr();
        skip();
        if (pos_ != s_.size()) throw error("parse_series: trailing input in '" + s_ + "'");
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    RatSeries expr() {
        RatSeries acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    RatSeries term() {
        RatSeries acc = factor();
        for (;;) {
            if (eat('*'))
                acc = acc * factor();
            else if (eat('/'))
                acc = acc / factor();
            else
                return acc;
        }
    }
    RatSeries factor() {
        RatSeries base = atom();
        if (eat('^')) {
            skip();
            int e = integer();
            RatSeries acc{Rat(1)};
            for (int i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }
    RatSeries atom() {
        skip();
        if (pos_ >= s_.size()) throw error("parse_series: unexpected end in '" + s_ + "'");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatSeries r = expr();
            if (!eat(')')) throw error("parse_series: missing ')' in '" + s_ + "'");
            return r;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatSeries(Rat(integer()));
        if (c == 't') {
            ++pos_;
            return RatSeries(UPoly::monomial(1));
        }
        throw error(std::string("parse_series: unexpected character '") + c + "' in '" + s_ + "'");
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw error("parse_series: expected integer in '" + s_ + "'");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

RatSeries parse_series(const std::string& text) { return SeriesParser(text).parse(); }

UPoly halve_exponents(const UPoly& p) {
    UPoly r;
    for (int d = 0; d <= p.degree(); ++d) {
        if (p.coeff(d) == 0) continue;
        if (d % 2 != 0) throw error("halve_exponents: odd-degree term t^" + std::to_string(d));
        r.set_coeff(d / 2, p.coeff(d));
    }
    return r;
}

RatSeries halve_exponents(const RatSeries& s) {
    return RatSeries(halve_exponents(s.num()), halve_exponents(s.den()));
}

UPoly substitute_power(const UPoly& p, int k) {
    if (k <= 0) throw error("substitute_power: exponent must be positive");
    UPoly r;
    for (int d = 0; d <= p.degree(); ++d)
        if (p.coeff(d) != 0) r.set_coeff(d * k, p.coeff(d));
    return r;
}

UPoly sym2_series(const UPoly& p) {
    UPoly sq = p * p;
    UPoly sub = substitute_power(p, 2);
    UPoly sum = sq + sub;
    UPoly r;
    for (int d = 0; d <= sum.degree(); ++d) r.set_coeff(d, sum.coeff(d) / 2);
    return r;
}

UPoly ip_prime(const UPoly& p, int dim) {
    UPoly r;
    for (int d = 0; d <= std::max(p.degree() + 2, dim); ++d) {
        Rat c = (d <= dim) ? p.coeff(d - 2) : p.coeff(d);
        if (c != 0) r.set_coeff(d, c);
    }
    return r;
}

RatSeries blowup_series(const RatSeries& base, const RatSeries& center, int codim,
                        const std::vector<RatSeries>& new_strata) {
    UPoly num = UPoly::monomial(2) - UPoly::monomial(2 * codim);
    UPoly den = UPoly(Rat(1)) - UPoly::monomial(2);
    RatSeries r = base + RatSeries(num, den) * center;
    for (const RatSeries& s : new_strata) r = r - s;
    return r;
}

} // namespace qv
