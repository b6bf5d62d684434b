#include "qv/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

namespace qv {

namespace {

// grevlex on a subset of positions: higher weighted degree wins, ties broken by
// the last differing position in `idx` having the smaller exponent.
bool grevlex_greater_on(const VarTable& t, const Expo& a, const Expo& b,
                        const std::vector<std::size_t>& idx) {
    long da = 0, db = 0;
    for (std::size_t k : idx) {
        da += static_cast<long>(t.degree(k)) * a[k];
        db += static_cast<long>(t.degree(k)) * b[k];
    }
    if (da != db) return da > db;
    for (std::size_t n = idx.size(); n-- > 0;) {
        std::size_t k = idx[n];
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
}

} // namespace

bool MonomialOrder::greater(const VarTable& t, const Expo& a, const Expo& b) const {
    if (!block.empty()) {
        if (grevlex_greater_on(t, a, b, block)) return true;
        if (grevlex_greater_on(t, b, a, block)) return false;
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < t.size(); ++k)
            if (std::find(block.begin(), block.end(), k) == block.end()) rest.push_back(k);
        return grevlex_greater_on(t, a, b, rest);
    }
    std::vector<std::size_t> all(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) all[k] = k;
    return grevlex_greater_on(t, a, b, all);
}

LeadTerm leading_term(const Poly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw error("leading_term: zero polynomial");
    const VarTable& t = *p.table();
    const Expo* best = nullptr;
    const Rat* c = nullptr;
    for (const auto& [e, v] : p.terms()) {
        if (!best || ord.greater(t, e, *best)) {
            best = &e;
            c = &v;
        }
    }
    return {*best, *c};
}

bool divides(const Expo& a, const Expo& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& ord) {
    std::vector<LeadTerm> lts;
    std::vector<const Poly*> gs;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        lts.push_back(leading_term(g, ord));
        gs.push_back(&g);
    }
    Poly work = p;
    Poly rem(p.table());
    while (!work.is_zero()) {
        LeadTerm lt = leading_term(work, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            if (!divides(lts[i].expo, lt.expo)) continue;
            Expo q = lt.expo;
            for (std::size_t k = 0; k < q.size(); ++k) q[k] -= lts[i].expo[k];
            Poly mono(p.table());
            mono.add_term(q, lt.coeff / lts[i].coeff);
            work -= mono * (*gs[i]);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt.expo, lt.coeff);
            Poly mono(p.table());
            mono.add_term(lt.expo, -lt.coeff);
            work += mono;
        }
    }
    return rem;
}

namespace {

Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

Poly make_monic(const Poly& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    return p / leading_term(p, ord).coeff;
}

// Canonical generator strings, used both for the cache key and serialization.
std::vector<std::string> canonical_strings(const std::vector<Poly>& gens, const MonomialOrder& ord) {
    std::vector<std::string> out;
    for (const Poly& g : gens)
        if (!g.is_zero()) out.push_back(make_monic(g, ord).str());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string g_cache_dir = [] {
    const char* env = std::getenv("QV_CACHE_DIR");
    return std::string(env ? env : ".qv-cache");
}();

std::string cache_key(const VarTable& tab, const MonomialOrder& ord,
                      const std::vector<std::string>& gens) {
    std::string blob = tab.signature();
    blob += "|order:";
    for (std::size_t k : ord.block) blob += tab.name(k) + ",";
    for (const std::string& s : gens) {
        blob += "|";
        blob += s;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(blob)));
    return buf;
}

bool cache_load(const std::string& key, VarTablePtr tab, std::vector<Poly>& out) {
    if (g_cache_dir.empty()) return false;
    std::ifstream in(std::filesystem::path(g_cache_dir) / ("qv-" + key + ".gb"));
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != "qvgb1") return false;
    if (!std::getline(in, line) || line != tab->signature()) return false;
    std::vector<Poly> basis;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        basis.push_back(parse_poly(tab, line));
    }
    out = std::move(basis);
    return true;
}

void cache_store(const std::string& key, const VarTable& tab, const std::vector<Poly>& basis) {
    if (g_cache_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(g_cache_dir, ec);
    if (ec) return;
    static std::atomic<unsigned> seq{0};
    std::filesystem::path dir(g_cache_dir);
    std::filesystem::path tmp = dir / ("tmp-" + key + "-" + std::to_string(::getpid()) + "-" +
                                       std::to_string(seq.fetch_add(1)));
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "qvgb1\n" << tab.signature() << "\n";
        for (const Poly& g : basis) out << g.str() << "\n";
    }
    std::filesystem::rename(tmp, dir / ("qv-" + key + ".gb"), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace

void set_cache_dir(const std::string& dir) { g_cache_dir = dir; }
std::string cache_dir() { return g_cache_dir; }

std::size_t cache_clear() {
    if (g_cache_dir.empty()) return 0;
    std::error_code ec;
    std::size_t n = 0;
    for (auto& entry : std::filesystem::directory_iterator(g_cache_dir, ec)) {
        if (entry.path().extension() == ".gb" && std::filesystem::remove(entry.path(), ec)) ++n;
    }
    return n;
}

std::size_t cache_count() {
    if (g_cache_dir.empty()) return 0;
    std::error_code ec;
    std::size_t n = 0;
    for (auto& entry : std::filesystem::directory_iterator(g_cache_dir, ec))
        if (entry.path().extension() == ".gb") ++n;
    return n;
}

std::vector<Poly> groebner_basis(std::vector<Poly> gens, const MonomialOrder& ord,
                                 const GroebnerOptions& opt) {
    VarTablePtr tab;
    for (const Poly& g : gens)
        if (!g.is_zero()) {
            tab = g.table();
            break;
        }
    if (!tab) return {};

    std::vector<std::string> key_gens = canonical_strings(gens, ord);
    std::string key = cache_key(*tab, ord, key_gens);
    if (opt.use_cache) {
        std::vector<Poly> cached;
        if (cache_load(key, tab, cached)) return cached;
    }

    std::vector<Poly> G;
    for (const std::string& s : key_gens) G.push_back(parse_poly(tab, s));
    std::vector<LeadTerm> lt;
    for (const Poly& g : G) lt.push_back(leading_term(g, ord));

    struct Pair {
        std::size_t i, j;
        Expo lcm;
    };
    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) queue.push_back({i, j, expo_lcm(lt[i].expo, lt[j].expo)});
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    std::size_t budget = opt.pair_budget;
    while (!queue.empty()) {
        if (budget-- == 0) throw error("groebner_basis: pair budget exceeded");
        // normal selection: smallest lcm first
        std::size_t best = 0;
        for (std::size_t k = 1; k < queue.size(); ++k)
            if (ord.greater(*tab, queue[best].lcm, queue[k].lcm)) best = k;
        Pair pr = queue[best];
        queue.erase(queue.begin() + static_cast<long>(best));
        treated.insert({pr.i, pr.j});

        // product criterion: coprime leading monomials
        Expo sum = lt[pr.i].expo;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += lt[pr.j].expo[k];
        if (sum == pr.lcm) continue;

        // chain criterion: some treated k whose leading monomial divides the lcm
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(lt[k].expo, pr.lcm)) continue;
            auto mk = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (treated.count(mk(pr.i, k)) && treated.count(mk(pr.j, k))) skip = true;
        }
        if (skip) continue;

        Poly mi(tab), mj(tab);
        Expo qi = pr.lcm, qj = pr.lcm;
        for (std::size_t k = 0; k < qi.size(); ++k) {
            qi[k] -= lt[pr.i].expo[k];
            qj[k] -= lt[pr.j].expo[k];
        }
        mi.add_term(qi, Rat(1) / lt[pr.i].coeff);
        mj.add_term(qj, Rat(1) / lt[pr.j].coeff);
        Poly s = mi * G[pr.i] - mj * G[pr.j];
        Poly r = normal_form(s, G, ord);
        if (r.is_zero()) continue;
        r = make_monic(r, ord);
        G.push_back(r);
        lt.push_back(leading_term(r, ord));
        push_pairs(G.size() - 1);
    }

    // minimalize: drop generators whose leading monomial is divisible by another's
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (divides(lt[j].expo, lt[i].expo) && !(i < j && lt[i].expo == lt[j].expo)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(G[i]);

    // auto-reduce tails
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(make_monic(normal_form(minimal[i], others, ord), ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ord.greater(*tab, leading_term(b, ord).expo, leading_term(a, ord).expo);
    });

    if (opt.use_cache) cache_store(key, *tab, reduced);
    return reduced;
}

bool ideal_member(const Poly& p, const std::vector<Poly>& gb, const MonomialOrder& ord) {
    return normal_form(p, gb, ord).is_zero();
}

bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const MonomialOrder& ord,
                 const GroebnerOptions& opt) {
    std::vector<Poly> ga = groebner_basis(a, ord, opt);
    std::vector<Poly> gb = groebner_basis(b, ord, opt);
    for (const Poly& p : a)
        if (!ideal_member(p, gb, ord)) return false;
    for (const Poly& p : b)
        if (!ideal_member(p, ga, ord)) return false;
    return true;
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens, const std::vector<std::string>& vars,
                            const GroebnerOptions& opt) {
    VarTablePtr tab;
    for (const Poly& g : gens)
        if (!g.is_zero()) {
            tab = g.table();
            break;
        }
    if (!tab) return {};
    MonomialOrder ord;
    for (const std::string& v : vars) ord.block.push_back(tab->index(v));
    std::sort(ord.block.begin(), ord.block.end());
    std::vector<Poly> gb = groebner_basis(gens, ord, opt);
    std::vector<Poly> out;
    for (const Poly& g : gb) {
        bool free_of_block = true;
        for (const auto& [e, c] : g.terms()) {
            for (std::size_t k : ord.block)
                if (e[k] != 0) {
                    free_of_block = false;
                    break;
                }
            if (!free_of_block) break;
        }
        if (free_of_block) out.push_back(g);
    }
    return out;
}

} // namespace qv
