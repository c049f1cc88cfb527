#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "subshift/error.hpp"
#include "subshift/rauzy.hpp"

namespace subshift {
namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan over the vertices with allowed[v] (all when empty).
// Returns component ids, `none` for excluded vertices.
std::vector<std::size_t> scc_ids(const Digraph& g, const std::vector<bool>& allowed) {
    const std::size_t n = g.vertex_count;
    auto ok = [&](std::size_t v) { return allowed.empty() || allowed[v]; };
    std::vector<std::size_t> index(n, none), low(n, 0), comp(n, none);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next out-edge slot)
    std::size_t counter = 0, comps = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (!ok(root) || index[root] != none) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, slot] = call.back();
            if (slot < g.out[v].size()) {
                std::size_t w = g.target[g.out[v][slot++]];
                if (!ok(w)) continue;
                if (index[w] == none) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                for (;;) {
                    std::size_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                    if (w == v) break;
                }
                ++comps;
            }
            std::size_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

struct Johnson {
    const Digraph& g;
    const std::function<bool(const Path&)>& visit;
    std::size_t cap;
    std::vector<bool> in_scope, blocked;
    std::vector<std::vector<std::size_t>> B;
    Path stack;
    std::size_t start = 0, found = 0;
    bool stop = false;

    void unblock(std::size_t u) {
        std::vector<std::size_t> work{u};
        while (!work.empty()) {
            std::size_t x = work.back();
            work.pop_back();
            if (!blocked[x]) continue;
            blocked[x] = false;
            for (std::size_t y : B[x]) work.push_back(y);
            B[x].clear();
        }
    }

    bool circuit(std::size_t v) {
        bool closed = false;
        blocked[v] = true;
        for (std::size_t e : g.out[v]) {
            if (stop) return true;
            std::size_t w = g.target[e];
            if (!in_scope[w]) continue;
            if (w == start) {
                stack.push_back(e);
                if (++found > cap) fail("CycleCapExceeded", std::to_string(cap));
                if (!visit(stack)) stop = true;
                stack.pop_back();
                closed = true;
            } else if (!blocked[w]) {
                stack.push_back(e);
                if (circuit(w)) closed = true;
                stack.pop_back();
            }
        }
        if (closed) {
            unblock(v);
        } else {
            for (std::size_t e : g.out[v]) {
                std::size_t w = g.target[e];
                if (in_scope[w] && std::find(B[w].begin(), B[w].end(), v) == B[w].end()) B[w].push_back(v);
            }
        }
        return closed;
    }
};

}  // namespace

std::size_t Digraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count || v >= vertex_count) fail("BadGraph", "edge endpoint out of range");
    source.push_back(u);
    target.push_back(v);
    out[u].push_back(source.size() - 1);
    in[v].push_back(source.size() - 1);
    return source.size() - 1;
}

bool Digraph::essential() const {
    for (std::size_t v = 0; v < vertex_count; ++v)
        if (out[v].empty() || in[v].empty()) return false;
    return true;
}

Condensation condensation(const Digraph& g) {
    Condensation c;
    auto raw = scc_ids(g, {});
    // renumber components by least vertex
    std::vector<std::size_t> rename(g.vertex_count, none);
    c.component_of.assign(g.vertex_count, none);
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (rename[raw[v]] == none) {
            rename[raw[v]] = c.components.size();
            c.components.emplace_back();
        }
        c.component_of[v] = rename[raw[v]];
        c.components[c.component_of[v]].push_back(v);
    }
    const std::size_t k = c.components.size();
    c.trivial.assign(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        if (c.components[i].size() != 1) continue;
        std::size_t v = c.components[i][0];
        bool loop = std::any_of(g.out[v].begin(), g.out[v].end(), [&](std::size_t e) { return g.target[e] == v; });
        c.trivial[i] = !loop;
    }
    std::set<std::pair<std::size_t, std::size_t>> dag;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t a = c.component_of[g.source[e]], b = c.component_of[g.target[e]];
        if (a != b) dag.insert({a, b});
    }
    c.dag_edges.assign(dag.begin(), dag.end());
    std::vector<bool> has_in(k, false), has_out(k, false);
    for (auto [a, b] : c.dag_edges) {
        has_out[a] = true;
        has_in[b] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!has_in[i]) c.sources.push_back(i);
        if (!has_out[i]) c.sinks.push_back(i);
    }
    std::vector<std::vector<std::size_t>> succ(k);
    for (auto [a, b] : c.dag_edges) succ[a].push_back(b);
    std::set<std::pair<std::size_t, std::size_t>> transit;
    for (std::size_t i = 0; i < k; ++i) {
        if (c.trivial[i]) continue;
        std::vector<bool> seen(k, false);
        std::vector<std::size_t> work = succ[i];
        while (!work.empty()) {
            std::size_t j = work.back();
            work.pop_back();
            if (seen[j]) continue;
            seen[j] = true;
            if (c.trivial[j]) {
                for (std::size_t x : succ[j]) work.push_back(x);
            } else {
                transit.insert({i, j});
            }
        }
    }
    c.transit.assign(transit.begin(), transit.end());
    return c;
}

std::size_t for_each_simple_cycle(const Digraph& g, const std::vector<bool>& allowed,
                                  const std::function<bool(const Path&)>& visit, std::size_t cap) {
    Johnson J{g, visit, cap, {}, {}, {}, {}, 0, 0, false};
    J.blocked.assign(g.vertex_count, false);
    J.B.assign(g.vertex_count, {});
    for (std::size_t s = 0; s < g.vertex_count && !J.stop; ++s) {
        if (!allowed.empty() && !allowed[s]) continue;
        // strongly connected piece of s inside {v >= s, allowed}
        std::vector<bool> sub(g.vertex_count, false);
        for (std::size_t v = s; v < g.vertex_count; ++v) sub[v] = allowed.empty() || allowed[v];
        auto ids = scc_ids(g, sub);
        J.in_scope.assign(g.vertex_count, false);
        for (std::size_t v = s; v < g.vertex_count; ++v)
            if (sub[v] && ids[v] == ids[s]) J.in_scope[v] = true;
        for (std::size_t v = 0; v < g.vertex_count; ++v) {
            J.blocked[v] = false;
            J.B[v].clear();
        }
        J.start = s;
        J.circuit(s);
    }
    return J.found;
}

Path canonical_cycle(const Path& cycle) {
    if (cycle.empty()) return cycle;
    auto it = std::min_element(cycle.begin(), cycle.end());
    Path r(it, cycle.end());
    r.insert(r.end(), cycle.begin(), it);
    return r;
}

Path rotate_to_vertex(const Digraph& g, const Path& cycle, std::size_t vertex) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (g.source[cycle[i]] == vertex) {
            Path r(cycle.begin() + static_cast<std::ptrdiff_t>(i), cycle.end());
            r.insert(r.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i));
            return r;
        }
    }
    fail("InvariantViolated", "vertex not on cycle");
}

std::vector<std::size_t> cycle_vertices(const Digraph& g, const Path& cycle) {
    std::vector<std::size_t> vs;
    vs.reserve(cycle.size());
    for (std::size_t e : cycle) vs.push_back(g.source[e]);
    return vs;
}

std::optional<Path> shortest_path(const Digraph& g, std::size_t from, const std::vector<bool>& target_mask,
                                  const std::vector<bool>& pass_mask) {
    const std::size_t n = g.vertex_count;
    std::vector<std::size_t> dist(n, none);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (target_mask[v]) {
            dist[v] = 0;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t e : g.in[v]) {
            std::size_t u = g.source[e];
            if (dist[u] != none || !pass_mask[u] || target_mask[u]) continue;
            dist[u] = dist[v] + 1;
            queue.push_back(u);
        }
    }
    // first step from `from` is unconstrained by the pass mask
    std::size_t best = none, best_edge = none;
    for (std::size_t e : g.out[from]) {
        std::size_t w = g.target[e];
        if (dist[w] == none) continue;
        if (dist[w] < best) {
            best = dist[w];
            best_edge = e;
        }
    }
    if (best_edge == none) return std::nullopt;
    Path p{best_edge};
    std::size_t cur = g.target[best_edge];
    while (dist[cur] != 0) {
        std::size_t next = none;
        for (std::size_t e : g.out[cur])
            if (dist[g.target[e]] != none && dist[g.target[e]] + 1 == dist[cur] &&
                (target_mask[g.target[e]] || pass_mask[g.target[e]])) {
                next = e;
                break;
            }
        p.push_back(next);
        cur = g.target[next];
    }
    return p;
}

PrimitivityReport is_primitive(const Digraph& g) {
    PrimitivityReport r;
    Condensation c = condensation(g);
    r.irreducible = c.components.size() == 1 && !c.trivial[0];
    std::size_t period = 0;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        if (c.trivial[i]) continue;
        const auto& comp = c.components[i];
        std::vector<long long> level(g.vertex_count, -1);
        std::deque<std::size_t> queue{comp[0]};
        level[comp[0]] = 0;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t e : g.out[v]) {
                std::size_t w = g.target[e];
                if (c.component_of[w] != i || level[w] >= 0) continue;
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
        for (std::size_t v : comp)
            for (std::size_t e : g.out[v]) {
                std::size_t w = g.target[e];
                if (c.component_of[w] != i) continue;
                long long d = level[v] + 1 - level[w];
                period = std::gcd(period, static_cast<std::size_t>(d < 0 ? -d : d));
            }
    }
    r.period = period;
    r.primitive = r.irreducible && period == 1;
    return r;
}

}  // namespace subshift
