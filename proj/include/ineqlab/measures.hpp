#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ineqlab/population.hpp"
#include "ineqlab/zonogon.hpp"

namespace ineqlab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Measure values live in (-inf, +inf]; +inf is the Infinite result.
inline bool is_infinite(double v) { return v == kInfinity; }

/// User-supplied convex generator with f(1) = 0.
struct CustomGenerator {
    std::string name = "custom";
    std::function<double(double)> f;
    bool strictly_convex = false;
    /// lim_{t->0+} f(t); approximated by f(1e-300) when absent.
    std::optional<double> at_zero;
    /// lim_{t->inf} f(t)/t; approximated by f(1e300)/1e300 when absent.
    std::optional<double> slope_at_infinity;
};

/// Convex generator f of an f-divergence, f(1) = 0.
class Generator {
public:
    enum class Kind { Pietra, GE, Theil, MLD, Custom };

    static Generator pietra();
    /// GE(c); |c| < 1e-9 dispatches to MLD and |c-1| < 1e-9 to Theil.
    static Generator ge(double c);
    static Generator theil();
    static Generator mld();
    /// Runs the convexity spot-check; throws ConfigError on failure.
    static Generator custom(CustomGenerator g);

    Kind kind() const { return kind_; }
    /// GE parameter (1 for Theil, 0 for MLD).
    double c() const { return c_; }
    bool strictly_convex() const;
    std::string name() const;

    /// f(t) for t > 0.
    double operator()(double t) const;
    /// lim_{t->0+} f(t), possibly +inf.
    double at_zero() const;
    /// lim_{t->inf} f(t)/t, possibly +inf.
    double slope_at_infinity() const;

private:
    Generator(Kind k, double c) : kind_(k), c_(c) {}

    Kind kind_;
    double c_ = 0.0;
    std::shared_ptr<const CustomGenerator> custom_;
};

/// Generator plus mixing parameter p in [0, 1].
struct MeasureSpec {
    Generator f = Generator::theil();
    double p = 0.0;

    MeasureSpec() = default;
    /// Throws ConfigError when p is outside [0, 1].
    MeasureSpec(Generator g, double mix = 0.0);
};

/// r_{f,p}(v) = a * f(x / a) with a = p x + (1-p) y and 0 f(0/0) = 0.
///
/// Limits: when a vanishes with x > 0 the value is x * lim f(t)/t; when
/// x = 0 < a it is a * f(0+). Either may be +inf. Values of single vectors
/// can be negative; only sums over a normalized matrix are >= 0.
/// Throws NegativeComponent for x < 0 or y < 0.
double r_fp(Vec2 v, const MeasureSpec& spec);

/// Sum of r_fp over the columns (fixed left-to-right order).
double inequality(const WeightedColumns& cols, const MeasureSpec& spec);
/// Sum of r_fp over the canonical chain edges.
double inequality(const Zonogon& z, const MeasureSpec& spec);

struct ClassicIndex {
    enum class Kind { Pietra, GE, Theil, MLD } kind = Kind::Theil;
    double c = 1.0;

    static ClassicIndex pietra() { return {Kind::Pietra, 0.0}; }
    static ClassicIndex ge(double c) { return {Kind::GE, c}; }
    static ClassicIndex theil() { return {Kind::Theil, 1.0}; }
    static ClassicIndex mld() { return {Kind::MLD, 0.0}; }
};

/// Textbook closed forms, evaluated directly on the indicator values.
double classic_index(const Dataset& pop, ClassicIndex which);

/// Atkinson index A_eps for eps > 0. Returns 1 when the generalized mean is 0.
double atkinson(const Dataset& pop, double eps);

/// Maps a GE(1-eps) value (MLD at eps = 1) to the Atkinson index.
/// Throws DomainError for x < 0 or 1 + c(c-1)x < 0.
double atkinson_transform(double x, double eps);

/// The generator whose p = 0 f-inequality feeds atkinson_transform.
Generator atkinson_generator(double eps);

struct AtkinsonSpec {
    double eps = 1.0;
};

/// Parsed measure selection string:
///   pietra | theil | mld | ge:<c> | atkinson:<eps>, with optional @p=<p>.
struct MeasureChoice {
    std::string text;
    std::variant<MeasureSpec, AtkinsonSpec> measure;

    bool is_atkinson() const { return std::holds_alternative<AtkinsonSpec>(measure); }
};

/// Throws ConfigError on malformed input.
MeasureChoice parse_measure(std::string_view text);

} // namespace ineqlab
