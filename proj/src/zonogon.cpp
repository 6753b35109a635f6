#include "ineqlab/zonogon.hpp"

#include <algorithm>
#include <cmath>

#include "ineqlab/error.hpp"

namespace ineqlab {

namespace {

constexpr double kNoiseLength = 1e-14;
constexpr double kEndpointSnap = 1e-9;

double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

bool parallel(const Vec2& a, const Vec2& b) {
    return std::abs(cross(a, b)) <= kSlopeTolerance * norm(a) * norm(b);
}

// Merged, sorted abscissae of both chains; near-duplicates collapse.
std::vector<double> breakpoints(const Zonogon& a, const Zonogon& b) {
    std::vector<double> xs{0.0, 1.0};
    for (const auto& v : a.vertices()) xs.push_back(v.x);
    for (const auto& v : b.vertices()) xs.push_back(v.x);
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    for (double x : xs) {
        x = std::clamp(x, 0.0, 1.0);
        if (out.empty() || x - out.back() > kNoiseLength) out.push_back(x);
    }
    if (out.back() != 1.0) out.back() = 1.0;
    return out;
}

Zonogon from_vertex_walk(const std::vector<Point>& pts) {
    std::vector<Vec2> edges;
    edges.reserve(pts.size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        edges.push_back({pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y});
    return canonical_chain_from_edges(edges, true);
}

} // namespace

std::string_view to_string(OrderRelation r) {
    switch (r) {
    case OrderRelation::Equal: return "Equal";
    case OrderRelation::StrictlyBelow: return "StrictlyBelow";
    case OrderRelation::StrictlyAbove: return "StrictlyAbove";
    case OrderRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

Zonogon::Zonogon() : vertices_{{0.0, 0.0}, {1.0, 1.0}} {}

std::vector<Vec2> Zonogon::edges() const {
    std::vector<Vec2> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        out.push_back({vertices_[i].x - vertices_[i - 1].x, vertices_[i].y - vertices_[i - 1].y});
    return out;
}

double Zonogon::upper(double x) const {
    if (x <= 0.0) return vertices_[1].x == 0.0 ? vertices_[1].y : 0.0;
    if (x >= 1.0) return 1.0;
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                               [](const Point& p, double v) { return p.x < v; });
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    if (hi.x == x) return hi.y;
    return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

Zonogon Zonogon::from_vertices(std::vector<Point> vertices) {
    if (vertices.size() < 2) throw InputError("zonogon chain needs at least two vertices");
    const Point& first = vertices.front();
    const Point& last = vertices.back();
    if (first.x != 0.0 || first.y != 0.0) throw InputError("zonogon chain must start at (0,0)");
    if (std::abs(last.x - 1.0) > kEndpointSnap || std::abs(last.y - 1.0) > kEndpointSnap)
        throw InputError("zonogon chain must end at (1,1)");
    std::vector<Vec2> edges;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        Vec2 e{vertices[i].x - vertices[i - 1].x, vertices[i].y - vertices[i - 1].y};
        if (e.x < 0.0 || e.y < 0.0) throw InputError("zonogon chain must be non-decreasing");
        if (!edges.empty() && cross(edges.back(), e) > kSlopeTolerance * norm(edges.back()) * norm(e))
            throw InputError("zonogon chain must be concave");
        edges.push_back(e);
    }
    return canonical_chain_from_edges(edges);
}

Zonogon canonical_chain_from_edges(std::span<const Vec2> edges, bool drop_noise) {
    std::vector<Vec2> es;
    es.reserve(edges.size());
    for (Vec2 e : edges) {
        if (drop_noise) {
            e.x = std::max(e.x, 0.0);
            e.y = std::max(e.y, 0.0);
            if (std::max(e.x, e.y) <= kNoiseLength) continue;
        } else if (e.x == 0.0 && e.y == 0.0) {
            continue;
        }
        es.push_back(e);
    }
    // Descending slope: a before b iff a.y / a.x > b.y / b.x.
    std::stable_sort(es.begin(), es.end(),
                     [](const Vec2& a, const Vec2& b) { return a.y * b.x > b.y * a.x; });

    std::vector<Vec2> merged;
    merged.reserve(es.size());
    for (const auto& e : es) {
        if (!merged.empty() && parallel(merged.back(), e)) {
            merged.back().x += e.x;
            merged.back().y += e.y;
        } else {
            merged.push_back(e);
        }
    }

    std::vector<Point> vs;
    vs.reserve(merged.size() + 1);
    vs.push_back({0.0, 0.0});
    for (const auto& e : merged) vs.push_back({vs.back().x + e.x, vs.back().y + e.y});
    if (vs.size() == 1) vs.push_back({1.0, 1.0});
    Point& end = vs.back();
    if (std::abs(end.x - 1.0) <= kEndpointSnap && std::abs(end.y - 1.0) <= kEndpointSnap) end = {1.0, 1.0};
    return Zonogon(std::move(vs));
}

Zonogon canonical_chain(const WeightedColumns& cols) {
    std::vector<Vec2> edges;
    edges.reserve(cols.size());
    for (const auto& c : cols) edges.push_back({c.weight, c.share});
    return canonical_chain_from_edges(edges);
}

bool below_or_equal(const Zonogon& a, const Zonogon& b) {
    // a's chain is linear between its vertices and b's is concave, so
    // checking a's vertices suffices.
    for (const auto& v : a.vertices()) {
        if (v.y > b.upper(v.x) + kContainmentTolerance) return false;
    }
    return true;
}

OrderRelation order(const Zonogon& a, const Zonogon& b) {
    const bool le = below_or_equal(a, b);
    const bool ge = below_or_equal(b, a);
    if (le && ge) return OrderRelation::Equal;
    if (le) return OrderRelation::StrictlyBelow;
    if (ge) return OrderRelation::StrictlyAbove;
    return OrderRelation::Incomparable;
}

Zonogon meet(const Zonogon& a, const Zonogon& b) {
    const auto xs = breakpoints(a, b);
    std::vector<double> grid;
    grid.reserve(2 * xs.size());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double lo = xs[i];
        const double hi = xs[i + 1];
        grid.push_back(lo);
        // Both chains are linear on [lo, hi]; add the crossing if any.
        const double dlo = a.upper(lo) - b.upper(lo);
        const double dhi = a.upper(hi) - b.upper(hi);
        if ((dlo > 0.0 && dhi < 0.0) || (dlo < 0.0 && dhi > 0.0)) {
            const double x = lo + (hi - lo) * (dlo / (dlo - dhi));
            if (x - lo > kNoiseLength && hi - x > kNoiseLength) grid.push_back(x);
        }
    }
    grid.push_back(1.0);

    std::vector<Point> pts;
    pts.reserve(grid.size() + 1);
    pts.push_back({0.0, 0.0});
    for (double x : grid) pts.push_back({x, std::min(a.upper(x), b.upper(x))});
    pts.back() = {1.0, 1.0};
    return from_vertex_walk(pts);
}

Zonogon meet(std::span<const Zonogon> zs) {
    if (zs.empty()) throw InputError("meet of an empty set");
    Zonogon acc = zs.front();
    for (std::size_t i = 1; i < zs.size(); ++i) acc = meet(acc, zs[i]);
    return acc;
}

Zonogon join(const Zonogon& a, const Zonogon& b) {
    std::vector<Point> pts = a.vertices();
    pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
    std::sort(pts.begin(), pts.end(),
              [](const Point& p, const Point& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
    // Andrew's monotone chain, upper half only.
    std::vector<Point> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const Point& o = hull[hull.size() - 2];
            const Point& m = hull.back();
            if (cross({m.x - o.x, m.y - o.y}, {p.x - o.x, p.y - o.y}) >= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return from_vertex_walk(hull);
}

Zonogon join(std::span<const Zonogon> zs) {
    if (zs.empty()) throw InputError("join of an empty set");
    Zonogon acc = zs.front();
    for (std::size_t i = 1; i < zs.size(); ++i) acc = join(acc, zs[i]);
    return acc;
}

Zonogon minkowski_sum(std::span<const Zonogon> zs) {
    if (zs.empty()) throw InputError("Minkowski sum of an empty set");
    const double scale = 1.0 / static_cast<double>(zs.size());
    std::vector<Vec2> edges;
    for (const auto& z : zs) {
        for (const auto& e : z.edges()) edges.push_back({e.x * scale, e.y * scale});
    }
    return canonical_chain_from_edges(edges);
}

} // namespace ineqlab
