#include "qv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qv {

VarTable::VarTable(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size()) throw error("VarTable: size mismatch");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (degrees_[i] <= 0) throw error("VarTable: degree must be positive");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw error("VarTable: duplicate " + names_[i]);
    }
}

std::optional<std::size_t> VarTable::find(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return i;
    return std::nullopt;
}

std::size_t VarTable::index(const std::string& n) const {
    auto i = find(n);
    if (!i) throw error("unknown variable: " + n);
    return *i;
}

std::string VarTable::signature() const {
    std::string s;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) s += ',';
        s += names_[i] + ":" + std::to_string(degrees_[i]);
    }
    return s;
}

VarTablePtr make_vars(std::vector<std::string> names, std::vector<int> degrees) {
    return std::make_shared<VarTable>(std::move(names), std::move(degrees));
}

VarTablePtr make_vars(const std::string& spec) {
    std::vector<std::string> names;
    std::vector<int> degs;
    std::istringstream in(spec);
    std::string tok;
    while (in >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) {
            names.push_back(tok);
            degs.push_back(1);
        } else {
            names.push_back(tok.substr(0, colon));
            degs.push_back(std::stoi(tok.substr(colon + 1)));
        }
    }
    return make_vars(std::move(names), std::move(degs));
}

VarTablePtr extend_vars(const VarTablePtr& base, std::vector<std::string> names, std::vector<int> degrees) {
    std::vector<std::string> n;
    std::vector<int> d;
    for (std::size_t i = 0; i < base->size(); ++i) {
        n.push_back(base->name(i));
        d.push_back(base->degree(i));
    }
    n.insert(n.end(), names.begin(), names.end());
    d.insert(d.end(), degrees.begin(), degrees.end());
    return make_vars(std::move(n), std::move(d));
}

int weighted_degree(const VarTable& t, const Expo& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * t.degree(i);
    return d;
}

bool grevlex_greater(const VarTable& t, const Expo& a, const Expo& b) {
    int da = weighted_degree(t, a), db = weighted_degree(t, b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Poly::Poly(VarTablePtr tab, const Rat& c) : tab_(std::move(tab)) {
    if (c != 0) terms_[Expo(tab_->size(), 0)] = c;
}

Poly Poly::var(const VarTablePtr& tab, const std::string& name, int exp) {
    Poly p(tab);
    Expo e(tab->size(), 0);
    e[tab->index(name)] = exp;
    p.terms_[e] = 1;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat Poly::constant_term() const {
    auto it = terms_.find(Expo(tab_ ? tab_->size() : 0, 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, weighted_degree(*tab_, e));
    return d;
}

int Poly::low_degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) {
        int w = weighted_degree(*tab_, e);
        if (d < 0 || w < d) d = w;
    }
    return d;
}

bool Poly::is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_same(const Poly& a, const Poly& b) {
    if (a.table() && b.table() && a.table() != b.table())
        throw error("polynomial ring mismatch");
}

Poly Poly::operator-() const {
    Poly r(tab_);
    for (auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same(*this, o);
    Poly r = terms_.empty() ? Poly(o.tab_ ? o.tab_ : tab_) : *this;
    if (terms_.empty()) r.tab_ = o.tab_ ? o.tab_ : tab_;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same(*this, o);
    Poly r(tab_ ? tab_ : o.tab_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Expo e(e1);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(tab_);
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Poly Poly::operator/(const Rat& c) const {
    if (c == 0) throw error("division by zero");
    return *this * (Rat(1) / c);
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

Poly operator*(const Rat& c, const Poly& p) { return p * c; }

Poly Poly::pow(int n) const {
    if (n < 0) throw error("negative power");
    Poly r(tab_, Rat(1));
    Poly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Poly Poly::select_degree(int d) const {
    Poly r(tab_);
    for (auto& [e, c] : terms_)
        if (weighted_degree(*tab_, e) == d) r.terms_[e] = c;
    return r;
}

Poly Poly::truncate_above(int d) const {
    Poly r(tab_);
    for (auto& [e, c] : terms_)
        if (weighted_degree(*tab_, e) <= d) r.terms_[e] = c;
    return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images, const VarTablePtr& target) const {
    Poly result(target);
    for (auto& [e, c] : terms_) {
        Poly term(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = images.find(tab_->name(i));
            Poly img = it != images.end() ? it->second : Poly::var(target, tab_->name(i));
            if (img.table() != target) throw error("substitute: image ring mismatch");
            term = term * img.pow(e[i]);
        }
        result += term;
    }
    return result;
}

Poly Poly::substitute(const std::string& var, const Poly& image) const {
    return substitute({{var, image}}, tab_);
}

std::vector<Poly> Poly::collect(const std::string& var) const {
    std::size_t vi = tab_->index(var);
    std::vector<Poly> out;
    for (auto& [e, c] : terms_) {
        int k = e[vi];
        if ((int)out.size() <= k) out.resize(k + 1, Poly(tab_));
        Expo rest(e);
        rest[vi] = 0;
        out[k].add_term(rest, c);
    }
    if (out.empty()) out.push_back(Poly(tab_));
    return out;
}

Rat Poly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::coeff_str(const std::string& monomial) const {
    Poly m = parse_poly(tab_, monomial);
    if (m.term_count() != 1) throw error("coeff_str: not a monomial: " + monomial);
    auto& [e, c] = *m.terms().begin();
    if (c != 1) throw error("coeff_str: coefficient must be 1: " + monomial);
    return coeff(e);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Expo, Rat>*> ts;
    for (auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        return grevlex_greater(*tab_, a->first, b->first);
    });
    std::string out;
    bool first = true;
    for (auto* t : ts) {
        Rat c = t->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rat a = abs(c);
        // factors print heaviest class first, ties in declaration order
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < t->first.size(); ++i)
            if (t->first[i] != 0) order.push_back(i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return tab_->degree(x) > tab_->degree(y);
        });
        std::string mono;
        for (std::size_t i : order) {
            if (!mono.empty()) mono += "*";
            mono += tab_->name(i);
            if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
        }
        if (mono.empty()) {
            out += rat_str(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += rat_str(a) + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------- parsing --

namespace {

struct Parser {
    const VarTablePtr& tab;
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    Poly expr() {
        Poly r = term();
        while (true) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else break;
        }
        return r;
    }

    Poly term() {
        Poly r = factor();
        while (true) {
            if (eat('*')) r *= factor();
            else if (eat('/')) {
                Poly d = factor();
                if (!d.is_constant() || d.is_zero()) throw error("parse: '/' needs nonzero constant");
                r = r / d.constant_term();
            } else break;
        }
        return r;
    }

    Poly factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Poly base = atom();
        if (eat('^')) {
            Poly e = atom(); // exponent literal (or parenthesized literal)
            if (!e.is_constant()) throw error("parse: exponent must be constant");
            Rat r = e.constant_term();
            if (r.get_den() != 1 || r < 0) throw error("parse: exponent must be a nonnegative integer");
            base = base.pow((int)r.get_num().get_si());
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos >= s.size()) throw error("parse: unexpected end in: " + s);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly r = expr();
            if (!eat(')')) throw error("parse: missing ')' in: " + s);
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            return Poly(tab, rat_from_string(s.substr(start, pos - start)));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            return Poly::var(tab, s.substr(start, pos - start));
        }
        throw error(std::string("parse: unexpected '") + c + "' in: " + s);
    }
};

} // namespace

Poly parse_poly(const VarTablePtr& tab, const std::string& text) {
    Parser p{tab, text};
    Poly r = p.expr();
    p.skip();
    if (p.pos != text.size()) throw error("parse: trailing input in: " + text);
    return r;
}

Poly series_inverse(const Poly& p, int trunc) {
    Rat c0 = p.constant_term();
    if (c0 == 0) throw error("series_inverse: constant term vanishes");
    // Newton-free iteration: inv = (1 - (p/c0 - 1) + (p/c0 - 1)^2 - ...) / c0
    Poly u = p / c0 - Poly(p.table(), Rat(1)); // low_degree >= 1
    Poly acc(p.table(), Rat(1));
    Poly powu(p.table(), Rat(1));
    int step = std::max(1, u.is_zero() ? 1 : u.low_degree());
    for (int k = step; k <= trunc && !u.is_zero(); k += step) {
        powu = truncated_mul(powu, u, trunc);
        if (powu.is_zero()) break;
        acc += (k / step) % 2 ? -powu : powu;
    }
    return acc.truncate_above(trunc) / c0;
}

Poly truncated_mul(const Poly& p, const Poly& q, int trunc) {
    return (p * q).truncate_above(trunc);
}

} // namespace qv
