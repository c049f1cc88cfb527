#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oracle {

std::string str(const Word& w) {
    std::string s;
    for (auto c : w) s += static_cast<char>('0' + c);
    return s;
}

Word word(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(static_cast<subshift::Symbol>(c - '0'));
    return w;
}

std::set<std::string> factors(const std::string& text, std::size_t n) {
    std::set<std::string> out;
    for (std::size_t i = 0; i + n <= text.size(); ++i) out.insert(text.substr(i, n));
    return out;
}

std::set<std::string> words_of(const subshift::TruncatedLanguage& L) {
    std::set<std::string> out;
    for (const Word& w : L.words()) out.insert(str(w));
    return out;
}

std::set<std::string> sft_words(const subshift::TruncatedLanguage& L, std::size_t m) {
    const std::set<std::string> allowed = words_of(L);
    const std::size_t n = L.depth(), k = L.alphabet().size();
    std::set<std::string> out;
    std::string cur(m, '0');
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos >= n && !allowed.count(cur.substr(pos - n, n))) return;
        if (pos == m) {
            out.insert(cur);
            return;
        }
        for (std::size_t a = 0; a < k; ++a) {
            cur[pos] = static_cast<char>('0' + a);
            fill(pos + 1);
        }
    };
    fill(0);
    // keep the words that extend |L| + 1 letters on both sides, which by
    // pigeonhole means they extend forever
    std::set<std::string> ext;
    for (const std::string& w : out) {
        const std::size_t reach = allowed.size() + 1;
        std::function<bool(std::string, std::size_t, bool)> grow = [&](std::string s, std::size_t left, bool right_side) {
            if (left == 0) return true;
            for (std::size_t a = 0; a < k; ++a) {
                std::string t = right_side ? s + static_cast<char>('0' + a) : static_cast<char>('0' + a) + s;
                const std::string window = right_side ? t.substr(t.size() - n) : t.substr(0, n);
                if (allowed.count(window) && grow(right_side ? window.substr(1) : window.substr(0, n - 1), left - 1, right_side))
                    return true;
            }
            return false;
        };
        if (m < n - 1) {
            ext.insert(w);
            continue;
        }
        if (grow(w.substr(w.size() - (n - 1)), reach, true) && grow(w.substr(0, n - 1), reach, false)) ext.insert(w);
    }
    return ext;
}

std::vector<std::vector<std::size_t>> simple_cycles(const Digraph& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path;
    std::vector<bool> on(g.vertex_count, false);
    for (std::size_t s = 0; s < g.vertex_count; ++s) {
        std::function<void(std::size_t)> dfs = [&](std::size_t v) {
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                if (g.source[e] != v) continue;
                const std::size_t t = g.target[e];
                if (t == s) {
                    path.push_back(e);
                    out.push_back(path);
                    path.pop_back();
                } else if (t > s && !on[t]) {
                    on[t] = true;
                    path.push_back(e);
                    dfs(t);
                    path.pop_back();
                    on[t] = false;
                }
            }
        };
        on[s] = true;
        dfs(s);
        on[s] = false;
    }
    return out;
}

std::size_t middle_cycles(const Digraph& g) {
    std::size_t count = 0;
    for (const auto& c : simple_cycles(g)) {
        std::vector<bool> in(g.vertex_count, false);
        for (std::size_t e : c) in[g.source[e]] = true;
        bool incoming = false, outgoing = false;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (!in[g.source[e]] && in[g.target[e]]) incoming = true;
            if (in[g.source[e]] && !in[g.target[e]]) outgoing = true;
        }
        if (incoming && outgoing) ++count;
    }
    return count;
}

namespace {

struct Point {
    std::string left, middle, right;  // left^inf middle right^inf
    char at(long i) const {
        const long m = static_cast<long>(middle.size());
        if (i < 0) {
            const long L = static_cast<long>(left.size());
            return left[static_cast<std::size_t>(((i % L) + L) % L)];
        }
        if (i < m) return middle[static_cast<std::size_t>(i)];
        return right[static_cast<std::size_t>((i - m) % static_cast<long>(right.size()))];
    }
};

}  // namespace

std::size_t orbit_count(const subshift::NmcNormalForm& x) {
    std::vector<Point> pts;
    for (const Word& p : x.initial) pts.push_back({str(p), "", str(p)});
    for (const Word& s : x.terminal) pts.push_back({str(s), "", str(s)});
    for (const auto& l : x.links) pts.push_back({str(x.initial[l.from]), str(l.middle), str(x.terminal[l.to])});
    long span = 2;
    for (const Point& p : pts) span += static_cast<long>(p.left.size() * p.right.size() + p.middle.size() + p.left.size() + p.right.size());
    const long T = 2 * span, W = 3 * T;
    auto same_orbit = [&](const Point& a, const Point& b) {
        for (long t = -T; t <= T; ++t) {
            bool eq = true;
            for (long i = -W; i <= W && eq; ++i) eq = a.at(i) == b.at(i + t);
            if (eq) return true;
        }
        return false;
    };
    std::vector<Point> reps;
    for (const Point& p : pts) {
        bool fresh = true;
        for (const Point& r : reps)
            if (same_orbit(p, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(p);
    }
    return reps.size();
}

std::size_t barbell_walks(const BarbellShape& s, const subshift::IndexSet& R, std::size_t m) {
    // vertices: B cycle 0..b-1 (0 = where I leaves), I interior, K cycle
    // (K0 = source of g), J interior, E cycle (E0 = where J arrives)
    enum Phase { before, inside, after };
    std::size_t next_id = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> adj;  // (target, tag) tag 1 = f, 2 = g, 3 = leaving K0 along K
    std::vector<Phase> phase;
    auto vertex = [&](Phase ph) {
        adj.emplace_back();
        phase.push_back(ph);
        return next_id++;
    };
    std::vector<std::size_t> B, K, E;
    for (std::size_t t = 0; t < s.b; ++t) B.push_back(vertex(before));
    for (std::size_t t = 0; t < s.k; ++t) K.push_back(vertex(inside));
    for (std::size_t t = 0; t < s.e; ++t) E.push_back(vertex(after));
    for (std::size_t t = 0; t < s.b; ++t) adj[B[t]].push_back({B[(t + 1) % s.b], 0});
    for (std::size_t t = 0; t < s.k; ++t) adj[K[t]].push_back({K[(t + 1) % s.k], t == 0 ? 3 : 0});
    for (std::size_t t = 0; t < s.e; ++t) adj[E[t]].push_back({E[(t + 1) % s.e], 0});
    const std::size_t k_in = K[(s.k - s.p % s.k) % s.k];
    std::size_t at = B[0];
    for (std::size_t t = 1; t < s.i; ++t) {
        const std::size_t v = vertex(before);
        adj[at].push_back({v, 0});
        at = v;
    }
    adj[at].push_back({k_in, 1});
    at = K[0];
    int tag = 2;
    for (std::size_t t = 1; t < s.j; ++t) {
        const std::size_t v = vertex(after);
        adj[at].push_back({v, tag});
        tag = 0;
        at = v;
    }
    adj[at].push_back({E[0], tag});

    // ways[v][r]: walks so far ending at v with r laps (r only tracked inside K)
    const std::size_t n = next_id, rmax = m + 1;
    std::vector<std::vector<std::size_t>> ways(n, std::vector<std::size_t>(rmax + 1, 0));
    for (std::size_t v = 0; v < n; ++v)
        if (phase[v] == before) ways[v][0] = 1;
    for (std::size_t step = 0; step < m; ++step) {
        std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(rmax + 1, 0));
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t r = 0; r <= rmax; ++r) {
                if (!ways[v][r]) continue;
                for (auto [t, tg] : adj[v]) {
                    std::size_t r2 = r;
                    if (tg == 3) {
                        if (r + 1 > rmax) continue;
                        r2 = r + 1;
                    }
                    if (tg == 2 && !R.contains(r)) continue;
                    if (phase[v] == after) r2 = 0;
                    next[t][r2] += ways[v][r];
                }
            }
        ways = std::move(next);
    }
    std::size_t total = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (phase[v] == after)
            for (std::size_t r = 0; r <= rmax; ++r) total += ways[v][r];
    return total;
}

Digraph random_essential(std::mt19937& rng, std::size_t max_vertices) {
    for (;;) {
        std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
        const std::size_t n = nv(rng);
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        if (rng() % 2) {
            std::uniform_real_distribution<double> pd(0.08, 0.4), u(0, 1);
            const double p = pd(rng);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) adj[a][b] = u(rng) < p;
        } else {
            // disjoint cycles in a random order, then a few forward edges
            std::vector<std::size_t> perm(n);
            for (std::size_t v = 0; v < n; ++v) perm[v] = v;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::vector<std::size_t>> cycles;
            for (std::size_t at = 0; at < n;) {
                const std::size_t len = std::min<std::size_t>(n - at, 1 + rng() % 3);
                cycles.emplace_back(perm.begin() + static_cast<long>(at), perm.begin() + static_cast<long>(at + len));
                at += len;
            }
            for (const auto& c : cycles)
                for (std::size_t t = 0; t < c.size(); ++t) adj[c[t]][c[(t + 1) % c.size()]] = true;
            const std::size_t extra = rng() % (n + 1);
            for (std::size_t x = 0; x < extra && cycles.size() > 1; ++x) {
                std::size_t i = rng() % cycles.size(), j = rng() % cycles.size();
                if (i == j) continue;
                if (i > j) std::swap(i, j);
                adj[cycles[i][rng() % cycles[i].size()]][cycles[j][rng() % cycles[j].size()]] = true;
            }
        }
        // prune to the essential part
        std::vector<bool> alive(n, true);
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                bool has_in = false, has_out = false;
                for (std::size_t u = 0; u < n; ++u) {
                    if (alive[u] && adj[u][v]) has_in = true;
                    if (alive[u] && adj[v][u]) has_out = true;
                }
                if (!has_in || !has_out) {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
        std::vector<std::size_t> index(n, 0);
        std::size_t count = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v]) index[v] = count++;
        if (count == 0) continue;
        Digraph g(count);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (alive[a] && alive[b] && adj[a][b]) g.add_edge(index[a], index[b]);
        return g;
    }
}

subshift::TruncatedLanguage language_of_word(const Word& w, std::size_t n, const subshift::Alphabet& a) {
    std::vector<Word> words;
    for (const std::string& f : factors(str(w), n)) words.push_back(word(f));
    return subshift::validate_language(std::move(words), a);
}

}  // namespace oracle
