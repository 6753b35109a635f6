#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ineqlab/population.hpp"

namespace ineqlab {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Edge vector (dx = population weight, dy = share).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

/// Two edges are parallel when |a x b| <= kSlopeTolerance * |a| * |b|.
inline constexpr double kSlopeTolerance = 1e-12;
/// A vertex lies on a chain when its vertical distance is <= this.
inline constexpr double kContainmentTolerance = 1e-9;

/// Canonical upper chain of a zonogon.
///
/// The chain runs from (0,0) to (1,1) with edge slopes strictly decreasing
/// (an initial vertical edge is allowed). The lower half of the zonogon is
/// the point reflection of the chain through (0.5, 0.5) and is not stored.
class Zonogon {
public:
    /// The bottom element: the single edge (1,1).
    Zonogon();

    const std::vector<Point>& vertices() const { return vertices_; }
    std::vector<Vec2> edges() const;

    /// Height of the upper chain at x in [0, 1]; at x = 0 this is the top of
    /// an initial vertical edge.
    double upper(double x) const;

    bool is_bottom() const { return vertices_.size() == 2; }

    /// Validates and canonicalizes an explicit vertex list (must start at
    /// (0,0), end at (1,1) and be concave). Throws InputError.
    static Zonogon from_vertices(std::vector<Point> vertices);

private:
    friend Zonogon canonical_chain_from_edges(std::span<const Vec2> edges, bool drop_noise);
    explicit Zonogon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}

    std::vector<Point> vertices_;
};

enum class OrderRelation { Equal, StrictlyBelow, StrictlyAbove, Incomparable };

std::string_view to_string(OrderRelation r);

/// Sorts edges by descending slope, merges parallel ones and accumulates
/// them into a chain. With `drop_noise`, edges shorter than 1e-14 (geometric
/// round-off from meet/join) are discarded first.
Zonogon canonical_chain_from_edges(std::span<const Vec2> edges, bool drop_noise = false);

Zonogon canonical_chain(const WeightedColumns& cols);

/// Containment order of the zonogons (upper-chain dominance).
OrderRelation order(const Zonogon& a, const Zonogon& b);

/// True when a is contained in b (a is below or equal to b).
bool below_or_equal(const Zonogon& a, const Zonogon& b);

/// Greatest zonogon contained in both: the pointwise minimum of the chains.
Zonogon meet(const Zonogon& a, const Zonogon& b);
Zonogon meet(std::span<const Zonogon> zs);

/// Smallest zonogon containing both: the upper convex hull of the chains.
Zonogon join(const Zonogon& a, const Zonogon& b);
Zonogon join(std::span<const Zonogon> zs);

/// Concatenates all generators, scales by 1/m and canonicalizes.
Zonogon minkowski_sum(std::span<const Zonogon> zs);

} // namespace ineqlab
