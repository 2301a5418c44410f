#include "stcover/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "stcover/steiner.hpp"

namespace stcover {

namespace {

struct PointPool {
    std::vector<Point2> pts;
    double tol;
    explicit PointPool(double t) : tol(t) {}
    int insert(Point2 p) {
        for (size_t i = 0; i < pts.size(); ++i)
            if (approx_eq(pts[i], p, tol)) return (int)i;
        pts.push_back(p);
        return (int)pts.size() - 1;
    }
};

struct Cycle {
    std::vector<int> verts;       // vertex sequence (closed implicitly)
    std::vector<int> halfedges;   // half-edge ids in traversal order
    double area = 0;
    int face = -1;                // assigned face id
};

}  // namespace

int Arrangement::find_vertex(Point2 p, double tol) const {
    for (int i = 0; i < (int)vertices.size(); ++i)
        if (approx_eq(vertices[i], p, tol)) return i;
    return -1;
}

int Arrangement::component_count() const {
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : edges) parent[find(e.a)] = find(e.b);
    int c = 0;
    for (int i = 0; i < (int)vertices.size(); ++i)
        if (find(i) == i) ++c;
    return c;
}

int Arrangement::locate(Point2 p) const {
    // On-edge points resolve to the left face of the nearest edge.
    int best_e = -1;
    double best_d = kGeoTol;
    for (int e = 0; e < (int)edges.size(); ++e) {
        double d = point_segment_distance(p, {vertices[edges[e].a], vertices[edges[e].b]});
        if (d < best_d) {
            best_d = d;
            best_e = e;
        }
    }
    if (best_e >= 0) return edges[best_e].face_left;

    auto winding_of = [&](const std::vector<int>& cyc) {
        std::vector<Point2> poly;
        poly.reserve(cyc.size() + 1);
        for (int v : cyc) poly.push_back(vertices[v]);
        poly.push_back(vertices[cyc.front()]);
        return winding_number(Polyline(poly), p);
    };
    for (int f = 0; f < (int)faces.size(); ++f) {
        if (!faces[f].bounded) continue;
        if (winding_of(faces[f].outer) == 0) continue;
        bool in_hole = false;
        for (const auto& h : faces[f].holes)
            if (winding_of(h) != 0) {
                in_hole = true;
                break;
            }
        if (!in_hole) return f;
    }
    return unbounded_face;
}

Arrangement build_arrangement_from_segments(const std::vector<SegInput>& segs, double tol) {
    for (const SegInput& s : segs)
        if (!s.seg.a.finite() || !s.seg.b.finite() || s.seg.length() <= tol)
            throw GeomError("arrangement: degenerate input segment");

    // 1. Vertex pool: endpoints and all pairwise intersections.
    PointPool pool(tol);
    for (const SegInput& s : segs) {
        pool.insert(s.seg.a);
        pool.insert(s.seg.b);
    }
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j) {
            SegX x = segment_intersect(segs[i].seg, segs[j].seg, tol);
            if (x.kind == SegXKind::Proper || x.kind == SegXKind::Endpoint) pool.insert(x.p);
            if (x.kind == SegXKind::Overlap) {
                pool.insert(x.p);
                pool.insert(x.q);
            }
        }

    // 2. Split segments at pool points; dedupe sub-edges, merging tags.
    Arrangement arr;
    arr.vertices = pool.pts;
    std::map<std::pair<int, int>, int> edge_of;
    for (const SegInput& s : segs) {
        Vec2 u = (s.seg.b - s.seg.a).normalized();
        double L = s.seg.length();
        std::vector<std::pair<double, int>> on;  // (parameter, vertex id)
        for (int v = 0; v < (int)arr.vertices.size(); ++v) {
            double d = point_segment_distance(arr.vertices[v], s.seg);
            if (d <= tol) on.push_back({std::clamp((arr.vertices[v] - s.seg.a).dot(u), 0.0, L), v});
        }
        std::sort(on.begin(), on.end());
        for (size_t k = 0; k + 1 < on.size(); ++k) {
            int a = on[k].second, b = on[k + 1].second;
            if (a == b) continue;
            auto key = std::minmax(a, b);
            auto it = edge_of.find({key.first, key.second});
            if (it == edge_of.end()) {
                Arrangement::Edge e;
                e.a = a;
                e.b = b;
                e.len = dist(arr.vertices[a], arr.vertices[b]);
                e.tag = s.tag;
                edge_of[{key.first, key.second}] = (int)arr.edges.size();
                arr.edges.push_back(e);
            } else {
                arr.edges[it->second].tag.merge(s.tag);
            }
        }
    }
    if (arr.edges.empty()) throw GeomError("arrangement: no edges");

    // 3. Half-edge structure. Half-edge 2e is a->b, 2e+1 is b->a.
    int ne = (int)arr.edges.size();
    auto origin = [&](int h) { return h % 2 == 0 ? arr.edges[h / 2].a : arr.edges[h / 2].b; };
    auto head = [&](int h) { return h % 2 == 0 ? arr.edges[h / 2].b : arr.edges[h / 2].a; };
    auto hdir = [&](int h) {
        return (arr.vertices[head(h)] - arr.vertices[origin(h)]).normalized();
    };

    std::vector<std::vector<int>> out(arr.vertices.size());
    for (int h = 0; h < 2 * ne; ++h) out[origin(h)].push_back(h);
    std::vector<int> pos_in_out(2 * ne);
    for (auto& lst : out) {
        std::sort(lst.begin(), lst.end(), [&](int h1, int h2) {
            Vec2 d1 = hdir(h1), d2 = hdir(h2);
            return std::atan2(d1.y, d1.x) < std::atan2(d2.y, d2.x);
        });
        for (size_t k = 0; k + 1 < lst.size(); ++k) {
            Vec2 d1 = hdir(lst[k]), d2 = hdir(lst[k + 1]);
            if (std::abs(d1.cross(d2)) < 1e-12 && d1.dot(d2) > 0)
                throw GeomError("arrangement: coincident edge directions at a vertex");
        }
        for (size_t k = 0; k < lst.size(); ++k) pos_in_out[lst[k]] = (int)k;
    }
    // next(h): clockwise predecessor of twin(h) around head(h); traces faces
    // with the interior on the left.
    auto next_he = [&](int h) {
        int tw = h ^ 1;
        const auto& lst = out[origin(tw)];
        int k = pos_in_out[tw];
        return lst[(k + lst.size() - 1) % lst.size()];
    };

    // 4. Trace cycles.
    std::vector<int> cycle_of(2 * ne, -1);
    std::vector<Cycle> cycles;
    for (int h0 = 0; h0 < 2 * ne; ++h0) {
        if (cycle_of[h0] >= 0) continue;
        Cycle c;
        int h = h0;
        do {
            cycle_of[h] = (int)cycles.size();
            c.halfedges.push_back(h);
            c.verts.push_back(origin(h));
            h = next_he(h);
        } while (h != h0);
        std::vector<Point2> poly;
        for (int v : c.verts) poly.push_back(arr.vertices[v]);
        c.area = polygon_area(poly);
        cycles.push_back(std::move(c));
    }

    // 5. Faces from positive cycles.
    double atol = tol * 10;
    for (auto& c : cycles) {
        if (c.area > atol) {
            Arrangement::Face f;
            f.outer = c.verts;
            f.area = c.area;
            f.bounded = true;
            c.face = (int)arr.faces.size();
            arr.faces.push_back(std::move(f));
        }
    }
    Arrangement::Face unb;
    unb.bounded = false;
    arr.unbounded_face = (int)arr.faces.size();
    arr.faces.push_back(std::move(unb));

    // 6. Assign non-positive cycles to containing faces by leftward ray casting
    //    from the cycle's leftmost vertex.
    auto leftward_parent_cycle = [&](int ci) -> int {
        int v = cycles[ci].verts[0];
        for (int w : cycles[ci].verts)
            if (arr.vertices[w].x < arr.vertices[v].x ||
                (arr.vertices[w].x == arr.vertices[v].x && arr.vertices[w].y < arr.vertices[v].y))
                v = w;
        Point2 p = arr.vertices[v];
        double best_x = -std::numeric_limits<double>::infinity();
        int best_h = -1;
        for (int e = 0; e < ne; ++e) {
            Point2 a = arr.vertices[arr.edges[e].a], b = arr.vertices[arr.edges[e].b];
            if (arr.edges[e].a == v || arr.edges[e].b == v) continue;
            bool up = (a.y <= p.y && b.y > p.y);
            bool dn = (b.y <= p.y && a.y > p.y);
            if (!up && !dn) continue;
            double t = (p.y - a.y) / (b.y - a.y);
            double x = a.x + t * (b.x - a.x);
            if (x >= p.x - tol) continue;
            if (x > best_x) {
                best_x = x;
                // Half-edge whose left side faces +x (toward v).
                // For a->b: left normal x-component = -(b-a).y.
                best_h = (b.y - a.y) < 0 ? 2 * e : 2 * e + 1;
            }
        }
        return best_h < 0 ? -1 : cycle_of[best_h];
    };

    std::vector<int> parent(cycles.size(), -2);
    std::function<int(int)> face_of_cycle = [&](int ci) -> int {
        if (cycles[ci].face >= 0) return cycles[ci].face;
        if (parent[ci] == -2) parent[ci] = leftward_parent_cycle(ci);
        int f = (parent[ci] < 0) ? arr.unbounded_face : face_of_cycle(parent[ci]);
        cycles[ci].face = f;
        if (f != arr.unbounded_face && cycles[ci].area < -atol)
            arr.faces[f].holes.push_back(cycles[ci].verts);
        if (f != arr.unbounded_face) arr.faces[f].area += std::min(cycles[ci].area, 0.0);
        return f;
    };
    for (int ci = 0; ci < (int)cycles.size(); ++ci) face_of_cycle(ci);

    // 7. Edge->face incidence and adjacency.
    for (int e = 0; e < ne; ++e) {
        arr.edges[e].face_left = cycles[cycle_of[2 * e]].face;
        arr.edges[e].face_right = cycles[cycle_of[2 * e + 1]].face;
        arr.faces[arr.edges[e].face_left].edges.push_back(e);
        if (arr.edges[e].face_right != arr.edges[e].face_left)
            arr.faces[arr.edges[e].face_right].edges.push_back(e);
    }
    for (int f = 0; f < (int)arr.faces.size(); ++f) {
        auto& nb = arr.faces[f].neighbors;
        for (int e : arr.faces[f].edges) {
            int o = arr.edges[e].face_left == f ? arr.edges[e].face_right : arr.edges[e].face_left;
            if (o != f && std::find(nb.begin(), nb.end(), o) == nb.end()) nb.push_back(o);
        }
    }

    // 8. Representative interior points for bounded faces.
    auto contains = [&](int f, Point2 p) {
        auto winding_of = [&](const std::vector<int>& cyc) {
            std::vector<Point2> poly;
            for (int v : cyc) poly.push_back(arr.vertices[v]);
            poly.push_back(arr.vertices[cyc.front()]);
            return winding_number(Polyline(poly), p);
        };
        if (winding_of(arr.faces[f].outer) == 0) return false;
        for (const auto& h : arr.faces[f].holes)
            if (winding_of(h) != 0) return false;
        return true;
    };
    for (int f = 0; f < (int)arr.faces.size(); ++f) {
        if (!arr.faces[f].bounded) continue;
        bool found = false;
        for (int e : arr.faces[f].edges) {
            Vec2 n = arr.edge_normal_into_left(e);
            if (arr.edges[e].face_left != f) n = -n;
            for (double s : {0.25, 1e-2, 1e-3, 1e-5, 1e-7}) {
                Point2 cand = arr.edge_midpoint(e) + n * (s * arr.edges[e].len);
                bool clear = true;
                for (int e2 = 0; e2 < ne && clear; ++e2)
                    if (point_segment_distance(cand, {arr.vertices[arr.edges[e2].a],
                                                      arr.vertices[arr.edges[e2].b]}) <= tol * 4)
                        clear = false;
                if (clear && contains(f, cand)) {
                    arr.faces[f].rep = cand;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw GeomError("arrangement: could not place face representative");
    }
    return arr;
}

Arrangement build_arrangement(const std::vector<Point2>& domain, const Network& net, double tol) {
    if (domain.size() < 3 || polygon_area(domain) <= tol)
        throw GeomError("build_arrangement: domain must be a nondegenerate polygon");
    for (const Point2& p : net.vertex_positions())
        if (!point_in_polygon(p, domain, tol))
            throw GeomError("build_arrangement: network vertex outside domain");
    net.require_noncrossing(tol);

    std::vector<SegInput> segs;
    size_t n = domain.size();
    for (size_t i = 0; i < n; ++i) {
        EdgeTag t;
        t.hull = true;
        segs.push_back({{domain[i], domain[(i + 1) % n]}, t});
    }
    for (const auto& [u, v] : net.edges) {
        EdgeTag t;
        t.network = true;
        segs.push_back({{net.vertex(u), net.vertex(v)}, t});
    }
    return build_arrangement_from_segments(segs, tol);
}

}  // namespace stcover
