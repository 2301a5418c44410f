#include "stcover/steiner.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace stcover {

void PointConfig::validate() const {
    if (m() < 2) throw SteinerError("config: need at least 2 points");
    for (const Point2& p : points)
        if (!p.finite()) throw SteinerError("config: non-finite coordinate");
    for (int i = 0; i < m(); ++i)
        for (int j = i + 1; j < m(); ++j)
            if (approx_eq(points[i], points[j])) throw SteinerError("config: duplicate points");
}

Point2 PointConfig::centroid() const {
    Point2 c{0, 0};
    for (const Point2& p : points) c += p;
    return c / (double)m();
}

double PointConfig::diameter() const {
    double d = 0;
    for (int i = 0; i < m(); ++i)
        for (int j = i + 1; j < m(); ++j) d = std::max(d, dist(points[i], points[j]));
    return d;
}

std::vector<Point2> Network::vertex_positions() const {
    std::vector<Point2> v = terminals;
    v.insert(v.end(), steiner_points.begin(), steiner_points.end());
    return v;
}

double Network::length() const {
    double L = 0;
    for (auto [a, b] : edges) L += dist(vertex(a), vertex(b));
    return L;
}

int Network::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

bool Network::connected() const {
    int n = vertex_count();
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

bool Network::acyclic() const {
    return (int)edges.size() == vertex_count() - 1 && connected();
}

void Network::require_class_T() const {
    if (!connected()) throw SteinerError("network: not connected");
    if ((int)edges.size() != vertex_count() - 1) throw SteinerError("network: has a loop");
    for (int t = 0; t < terminal_count(); ++t)
        if (degree(t) < 1) throw SteinerError("network: terminal not attached");
}

void Network::require_noncrossing(double tol) const {
    auto pos = vertex_positions();
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            Segment s1{pos[edges[i].first], pos[edges[i].second]};
            Segment s2{pos[edges[j].first], pos[edges[j].second]};
            SegX x = segment_intersect(s1, s2, tol);
            if (x.kind == SegXKind::None || x.kind == SegXKind::Endpoint) continue;
            throw SteinerError("network: crossing edges");
        }
}

Network Network::contracted(double tol) const {
    // Union-find over vertices within tol of each other along zero-length edges.
    int n = vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto pos = vertex_positions();
    for (auto [a, b] : edges)
        if (dist(pos[a], pos[b]) <= tol) {
            int ra = find(a), rb = find(b);
            // Prefer terminal representatives so terminals keep their identity.
            if (ra > rb) std::swap(ra, rb);
            parent[rb] = ra;
        }
    Network out;
    out.terminals = terminals;
    std::vector<int> remap(n, -1);
    for (int t = 0; t < terminal_count(); ++t) {
        if (find(t) != t) throw SteinerError("network: terminals collapsed together");
        remap[t] = t;
    }
    for (int v = terminal_count(); v < n; ++v) {
        if (find(v) != v) continue;
        remap[v] = terminal_count() + (int)out.steiner_points.size();
        out.steiner_points.push_back(pos[v]);
    }
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        int ra = remap[find(a)], rb = remap[find(b)];
        if (ra == rb) continue;
        auto key = std::minmax(ra, rb);
        if (seen.insert(key).second) out.edges.push_back(key);
    }
    return out;
}

std::string Network::geometry_key(double tol) const {
    auto pos = vertex_positions();
    auto q = [&](double v) { return (long long)std::llround(v / tol); };
    std::vector<std::string> parts;
    char buf[80];
    for (auto [a, b] : edges) {
        Point2 p = pos[a], r = pos[b];
        if (q(p.x) > q(r.x) || (q(p.x) == q(r.x) && q(p.y) > q(r.y))) std::swap(p, r);
        std::snprintf(buf, sizeof buf, "%lld,%lld,%lld,%lld", q(p.x), q(p.y), q(r.x), q(r.y));
        parts.push_back(buf);
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (auto& s : parts) {
        key += s;
        key += ';';
    }
    return key;
}

bool SteinerTopology::planar_compatible() const {
    int n = vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto [a, b] : edges) {
        // Terminals on the a-side of the split edge.
        std::vector<char> seen(n, 0);
        seen[b] = 1;
        std::vector<int> stack{a};
        seen[a] = 1;
        std::vector<char> side(m, 0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v < m) side[v] = 1;
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        int changes = 0;
        for (int i = 0; i < m; ++i) changes += side[i] != side[(i + 1) % m];
        if (changes > 2) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> SteinerTopology::interface_pattern() const {
    // Each edge splits the terminal cycle into two arcs; the induced interface
    // separates the sector just before the split on one side from the sector
    // just after it on the other. Sector at boundary arc g (p_g -> p_{g+1})
    // carries label m+1-g.
    int n = vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : edges) {
        std::vector<char> seen(n, 0);
        seen[b] = 1;
        std::vector<int> stack{a};
        seen[a] = 1;
        std::vector<char> side(m, 0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v < m) side[v] = 1;
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        // Gap g (0-based arc p_{g+1}->p_{g+2} in 1-based labels) where the side flips.
        std::vector<int> gaps;
        for (int i = 0; i < m; ++i)
            if (side[i] != side[(i + 1) % m]) gaps.push_back(i);
        if (gaps.size() != 2) throw SteinerError("interface_pattern: non-planar topology");
        auto sector_label = [&](int gap0) { return m - gap0; };  // m+1-(gap0+1)
        int u = sector_label(gaps[0]), v = sector_label(gaps[1]);
        out.push_back(std::minmax(u, v));
    }
    return out;
}

namespace {

// Decode a Prüfer sequence over n labeled vertices into a tree edge list.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> deg(n, 1);
    for (int v : seq) deg[v]++;
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(std::minmax(leaf, v));
        if (--deg[v] == 1) leaves.insert(v);
    }
    auto it = leaves.begin();
    int u = *it++;
    edges.push_back(std::minmax(u, *it));
    return edges;
}

std::string canonical_key(const SteinerTopology& t) {
    // Minimum over Steiner-label permutations of the sorted edge list.
    std::vector<int> perm(t.k);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<std::pair<int, int>> es;
        for (auto [a, b] : t.edges) {
            int aa = a < t.m ? a : t.m + perm[a - t.m];
            int bb = b < t.m ? b : t.m + perm[b - t.m];
            es.push_back(std::minmax(aa, bb));
        }
        std::sort(es.begin(), es.end());
        std::string key;
        for (auto [a, b] : es) key += std::to_string(a) + "-" + std::to_string(b) + ";";
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<SteinerTopology> enumerate_topologies(int m) {
    if (m < 2 || m > 8) throw SteinerError("enumerate_topologies: m out of range [2,8]");
    std::vector<SteinerTopology> out;
    std::set<std::string> seen;
    for (int k = 0; k <= m - 2; ++k) {
        int n = m + k;
        if (n == 2) {
            SteinerTopology t;
            t.m = m;
            t.k = 0;
            t.edges = {{0, 1}};
            out.push_back(t);
            continue;
        }
        int len = n - 2;
        // Enumerate Prüfer sequences where each Steiner label appears exactly
        // twice (degree 3); terminal labels fill the remaining slots freely.
        std::vector<int> seq(len, -1);
        std::function<void(int, int)> rec = [&](int i, int next_label) {
            if (i == len) {
                if (next_label != n) return;  // not all Steiner labels placed
                SteinerTopology t;
                t.m = m;
                t.k = k;
                t.edges = prufer_decode(seq, n);
                if (seen.insert(canonical_key(t)).second) out.push_back(t);
                return;
            }
            if (seq[i] >= 0) {
                rec(i + 1, next_label);
                return;
            }
            for (int v = 0; v < m; ++v) {
                seq[i] = v;
                rec(i + 1, next_label);
            }
            seq[i] = -1;
            if (next_label < n) {
                // First occurrence of a fresh Steiner label here; partner later.
                for (int j = i + 1; j < len; ++j) {
                    if (seq[j] >= 0) continue;
                    seq[i] = seq[j] = next_label;
                    rec(i + 1, next_label + 1);
                    seq[i] = seq[j] = -1;
                }
            }
        };
        rec(0, m);
    }
    return out;
}

Point2 fermat_point(Point2 a, Point2 b, Point2 c) {
    auto angle_at = [](Point2 v, Point2 p, Point2 q) {
        Vec2 u1 = p - v, u2 = q - v;
        double n1 = u1.norm(), n2 = u2.norm();
        if (n1 == 0 || n2 == 0) return 0.0;
        return std::acos(std::clamp(u1.dot(u2) / (n1 * n2), -1.0, 1.0));
    };
    const double third = 2 * M_PI / 3;
    if (angle_at(a, b, c) >= third - 1e-14) return a;
    if (angle_at(b, a, c) >= third - 1e-14) return b;
    if (angle_at(c, a, b) >= third - 1e-14) return c;

    // Torricelli construction: apex of the outward equilateral triangle on a
    // side, joined to the opposite vertex; two such lines meet at the point.
    auto apex = [](Point2 p, Point2 q, Point2 opp) {
        Vec2 d = q - p;
        Vec2 mid = (p + q) / 2;
        Vec2 n = d.perp() * (std::sqrt(3.0) / 2);
        Point2 a1 = mid + n, a2 = mid - n;
        return dist(a1, opp) > dist(a2, opp) ? a1 : a2;
    };
    Point2 ap_bc = apex(b, c, a);
    Point2 ap_ac = apex(a, c, b);
    // Intersection of segments a..ap_bc and b..ap_ac.
    Vec2 r = ap_bc - a, s = ap_ac - b;
    double denom = r.cross(s);
    if (std::abs(denom) < 1e-30) return (a + b + c) / 3;
    double t = (b - a).cross(s) / denom;
    return a + r * t;
}

OptimizedTopology optimize_topology(const SteinerTopology& top, const PointConfig& config) {
    config.validate();
    if (top.m != config.m()) throw SteinerError("optimize_topology: size mismatch");
    int n = top.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : top.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int s = top.m; s < n; ++s)
        if ((int)adj[s].size() != 3) throw SteinerError("optimize_topology: Steiner degree != 3");

    std::vector<Point2> pos(n);
    for (int i = 0; i < top.m; ++i) pos[i] = config.points[i];
    Point2 c = config.centroid();
    for (int s = top.m; s < n; ++s) pos[s] = c;

    double scale = std::max(config.diameter(), 1.0);
    const double move_tol = 1e-13 * scale;
    const int max_sweeps = 100000;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double max_move = 0;
        for (int s = top.m; s < n; ++s) {
            Point2 f = fermat_point(pos[adj[s][0]], pos[adj[s][1]], pos[adj[s][2]]);
            max_move = std::max(max_move, dist(f, pos[s]));
            pos[s] = f;
        }
        if (max_move < move_tol) break;
    }
    if (sweep >= max_sweeps) {
        // Residual reported via exception message.
        double res = 0;
        for (int s = top.m; s < n; ++s)
            res = std::max(res, dist(pos[s], fermat_point(pos[adj[s][0]], pos[adj[s][1]],
                                                          pos[adj[s][2]])));
        throw SteinerError("optimize_topology: no convergence, residual " + std::to_string(res));
    }

    Network raw;
    raw.terminals = config.points;
    for (int s = top.m; s < n; ++s) raw.steiner_points.push_back(pos[s]);
    raw.edges = top.edges;

    OptimizedTopology out;
    out.network = raw.contracted(1e-9 * scale);
    out.length = raw.length();
    out.degenerate = out.network.steiner_points.size() < raw.steiner_points.size();
    out.sweeps = sweep;
    return out;
}

TopologyAtlas build_topology_atlas(const PointConfig& config) {
    TopologyAtlas atlas;
    atlas.config = config;
    for (auto& t : enumerate_topologies(config.m())) {
        if (!t.planar_compatible()) {
            atlas.skipped_nonplanar++;
            continue;
        }
        atlas.topologies.push_back(t);
    }
    atlas.patterns.reserve(atlas.topologies.size());
    atlas.optimized.reserve(atlas.topologies.size());
    for (auto& t : atlas.topologies) {
        atlas.patterns.push_back(t.interface_pattern());
        atlas.optimized.push_back(optimize_topology(t, config));
    }
    return atlas;
}

SteinerSolution steiner_tree(const PointConfig& config, double tie_tol) {
    config.validate();
    if (config.m() > 8) throw SteinerError("steiner_tree: m > 8 cap");
    SteinerSolution sol;
    if (config.m() == 2) {
        Network n;
        n.terminals = config.points;
        n.edges = {{0, 1}};
        sol.length = n.length();
        sol.minimizers = {n};
        sol.topologies_tried = 1;
        return sol;
    }
    TopologyAtlas atlas = build_topology_atlas(config);
    double best = std::numeric_limits<double>::infinity();
    for (auto& o : atlas.optimized) best = std::min(best, o.length);
    std::map<std::string, Network> winners;
    for (auto& o : atlas.optimized)
        if (o.length <= best + tie_tol) winners.emplace(o.network.geometry_key(), o.network);
    sol.length = best;
    for (auto& [k, n] : winners) sol.minimizers.push_back(n);
    sol.topologies_tried = (int)atlas.optimized.size() + atlas.skipped_nonplanar;
    return sol;
}

double minimum_spanning_tree_length(const PointConfig& config) {
    int m = config.m();
    std::vector<char> in(m, 0);
    std::vector<double> d(m, std::numeric_limits<double>::infinity());
    d[0] = 0;
    double total = 0;
    for (int it = 0; it < m; ++it) {
        int v = -1;
        for (int i = 0; i < m; ++i)
            if (!in[i] && (v < 0 || d[i] < d[v])) v = i;
        in[v] = 1;
        total += d[v];
        for (int i = 0; i < m; ++i)
            if (!in[i]) d[i] = std::min(d[i], dist(config.points[v], config.points[i]));
    }
    return total;
}

}  // namespace stcover
