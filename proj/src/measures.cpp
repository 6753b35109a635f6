#include "ineqlab/measures.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "ineqlab/error.hpp"

namespace ineqlab {

namespace {

constexpr double kGeSnap = 1e-9;

void check_convex(const CustomGenerator& g) {
    if (!g.f) throw ConfigError("custom generator '" + g.name + "' has no function");
    const double f1 = g.f(1.0);
    if (!std::isfinite(f1) || std::abs(f1) > 1e-12)
        throw ConfigError("custom generator '" + g.name + "' must satisfy f(1) = 0");
    // 2001 log-spaced points on [1e-6, 1e6], second-difference scan.
    constexpr int kPoints = 2001;
    std::vector<double> t(kPoints);
    std::vector<double> v(kPoints);
    for (int i = 0; i < kPoints; ++i) {
        t[i] = std::pow(10.0, -6.0 + 12.0 * i / (kPoints - 1));
        v[i] = g.f(t[i]);
        if (!std::isfinite(v[i]))
            throw ConfigError("custom generator '" + g.name + "' is not finite at t = " + std::to_string(t[i]));
    }
    for (int i = 1; i + 1 < kPoints; ++i) {
        const double chord = v[i - 1] + (v[i + 1] - v[i - 1]) * (t[i] - t[i - 1]) / (t[i + 1] - t[i - 1]);
        const double tol = 1e-9 * (1.0 + std::abs(v[i - 1]) + std::abs(v[i]) + std::abs(v[i + 1]));
        if (v[i] > chord + tol)
            throw ConfigError("custom generator '" + g.name + "' is not convex near t = " + std::to_string(t[i]));
    }
}

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

} // namespace

Generator Generator::pietra() { return Generator(Kind::Pietra, 0.0); }
Generator Generator::theil() { return Generator(Kind::Theil, 1.0); }
Generator Generator::mld() { return Generator(Kind::MLD, 0.0); }

Generator Generator::ge(double c) {
    if (!std::isfinite(c)) throw ConfigError("GE parameter must be finite");
    if (std::abs(c) < kGeSnap) return mld();
    if (std::abs(c - 1.0) < kGeSnap) return theil();
    return Generator(Kind::GE, c);
}

Generator Generator::custom(CustomGenerator g) {
    check_convex(g);
    Generator out(Kind::Custom, 0.0);
    out.custom_ = std::make_shared<const CustomGenerator>(std::move(g));
    return out;
}

bool Generator::strictly_convex() const {
    switch (kind_) {
    case Kind::Pietra: return false;
    case Kind::Custom: return custom_->strictly_convex;
    default: return true;
    }
}

std::string Generator::name() const {
    switch (kind_) {
    case Kind::Pietra: return "pietra";
    case Kind::Theil: return "theil";
    case Kind::MLD: return "mld";
    case Kind::GE: {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c_);
        return "ge:" + std::string(buf, ptr);
    }
    case Kind::Custom: return custom_->name;
    }
    return "?";
}

double Generator::operator()(double t) const {
    switch (kind_) {
    case Kind::Pietra: return std::abs(t - 1.0) / 2.0;
    case Kind::GE: return (std::pow(t, 1.0 - c_) - t) / (c_ * (c_ - 1.0));
    case Kind::Theil: return -std::log(t);
    case Kind::MLD: return t * std::log(t);
    case Kind::Custom: return custom_->f(t);
    }
    return 0.0;
}

double Generator::at_zero() const {
    switch (kind_) {
    case Kind::Pietra: return 0.5;
    case Kind::GE: return c_ < 1.0 ? 0.0 : kInfinity;
    case Kind::Theil: return kInfinity;
    case Kind::MLD: return 0.0;
    case Kind::Custom: return custom_->at_zero.value_or(custom_->f(1e-300));
    }
    return 0.0;
}

double Generator::slope_at_infinity() const {
    switch (kind_) {
    case Kind::Pietra: return 0.5;
    case Kind::GE: return c_ > 0.0 ? -1.0 / (c_ * (c_ - 1.0)) : kInfinity;
    case Kind::Theil: return 0.0;
    case Kind::MLD: return kInfinity;
    case Kind::Custom: return custom_->slope_at_infinity.value_or(custom_->f(1e300) / 1e300);
    }
    return 0.0;
}

MeasureSpec::MeasureSpec(Generator g, double mix) : f(std::move(g)), p(mix) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("mixing parameter p must lie in [0, 1]");
}

double r_fp(Vec2 v, const MeasureSpec& spec) {
    if (!(v.x >= 0.0) || !(v.y >= 0.0))
        throw NegativeComponent("r_fp: vector components must be >= 0");
    const double a = spec.p * v.x + (1.0 - spec.p) * v.y;
    if (a == 0.0) {
        if (v.x == 0.0) return 0.0;
        // Only reachable for p = 0, y = 0: x * lim f(t)/t.
        const double s = spec.f.slope_at_infinity();
        return is_infinite(s) ? kInfinity : v.x * s;
    }
    if (v.x == 0.0) {
        const double z = spec.f.at_zero();
        return is_infinite(z) ? kInfinity : a * z;
    }
    return a * spec.f(v.x / a);
}

double inequality(const WeightedColumns& cols, const MeasureSpec& spec) {
    double sum = 0.0;
    for (const auto& c : cols) {
        sum += r_fp({c.weight, c.share}, spec);
        if (is_infinite(sum)) return kInfinity;
    }
    return sum;
}

double inequality(const Zonogon& z, const MeasureSpec& spec) {
    double sum = 0.0;
    for (const auto& e : z.edges()) {
        sum += r_fp(e, spec);
        if (is_infinite(sum)) return kInfinity;
    }
    return sum;
}

double classic_index(const Dataset& pop, ClassicIndex which) {
    const double n = static_cast<double>(pop.size());
    const double m = pop.mean();
    if (!(m > 0.0)) throw DegeneratePopulation();
    if (which.kind == ClassicIndex::Kind::GE) {
        if (std::abs(which.c) < kGeSnap) which = ClassicIndex::mld();
        else if (std::abs(which.c - 1.0) < kGeSnap) which = ClassicIndex::theil();
    }
    double acc = 0.0;
    switch (which.kind) {
    case ClassicIndex::Kind::Pietra:
        for (const auto& r : pop.records()) acc += std::abs(r.indicator - m);
        return acc / (2.0 * n * m);
    case ClassicIndex::Kind::GE: {
        const double c = which.c;
        for (const auto& r : pop.records()) acc += std::pow(r.indicator / m, c) - 1.0;
        if (is_infinite(acc)) return kInfinity;
        return acc / n / (c * (c - 1.0));
    }
    case ClassicIndex::Kind::Theil:
        for (const auto& r : pop.records()) {
            const double q = r.indicator / m;
            if (q > 0.0) acc += q * std::log(q);
        }
        return acc / n;
    case ClassicIndex::Kind::MLD:
        for (const auto& r : pop.records()) {
            if (r.indicator == 0.0) return kInfinity;
            acc -= std::log(r.indicator / m);
        }
        return acc / n;
    }
    return 0.0;
}

double atkinson(const Dataset& pop, double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("Atkinson parameter must be > 0");
    const double n = static_cast<double>(pop.size());
    const double m = pop.mean();
    if (std::abs(eps - 1.0) < kGeSnap) {
        double logs = 0.0;
        for (const auto& r : pop.records()) {
            if (r.indicator == 0.0) return 1.0;
            logs += std::log(r.indicator / m);
        }
        return 1.0 - std::exp(logs / n);
    }
    const double e = 1.0 - eps;
    double acc = 0.0;
    for (const auto& r : pop.records()) acc += std::pow(r.indicator / m, e);
    // acc = inf (zeros with eps > 1) sends the generalized mean to 0.
    return 1.0 - std::pow(acc / n, 1.0 / e);
}

Generator atkinson_generator(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("Atkinson parameter must be > 0");
    return Generator::ge(1.0 - eps);
}

double atkinson_transform(double x, double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("Atkinson parameter must be > 0");
    if (std::isnan(x) || x < -1e-12) throw DomainError("Atkinson transform needs x >= 0");
    if (std::abs(eps - 1.0) < kGeSnap) return 1.0 - std::exp(-x);
    const double c = 1.0 - eps;
    const double base = 1.0 + c * (c - 1.0) * x;
    if (std::isnan(base) || base < 0.0)
        throw DomainError("Atkinson transform: 1 + c(c-1)x < 0 for eps = " + std::to_string(eps));
    return 1.0 - std::pow(base, 1.0 / c);
}

MeasureChoice parse_measure(std::string_view text) {
    const auto bad = [&](const std::string& why) {
        return ConfigError("invalid measure '" + std::string(text) + "': " + why);
    };
    std::string_view head = text;
    std::optional<double> p;
    if (auto at = text.find('@'); at != std::string_view::npos) {
        head = text.substr(0, at);
        std::string_view tail = text.substr(at + 1);
        if (tail.substr(0, 2) != "p=") throw bad("suffix must be @p=<p>");
        double v = 0.0;
        if (!parse_double(tail.substr(2), v)) throw bad("p is not a number");
        if (!(v >= 0.0 && v <= 1.0)) throw bad("p must lie in [0, 1]");
        p = v;
    }
    std::string_view name = head;
    std::string_view arg;
    bool has_arg = false;
    if (auto colon = head.find(':'); colon != std::string_view::npos) {
        name = head.substr(0, colon);
        arg = head.substr(colon + 1);
        has_arg = true;
    }
    const auto number = [&]() {
        double v = 0.0;
        if (!has_arg || !parse_double(arg, v)) throw bad("expected a numeric parameter");
        return v;
    };

    MeasureChoice out;
    out.text = std::string(text);
    if (name == "pietra" || name == "theil" || name == "mld") {
        if (has_arg) throw bad("'" + std::string(name) + "' takes no parameter");
        Generator g = name == "pietra" ? Generator::pietra() : name == "theil" ? Generator::theil() : Generator::mld();
        out.measure = MeasureSpec(std::move(g), p.value_or(0.0));
    } else if (name == "ge") {
        out.measure = MeasureSpec(Generator::ge(number()), p.value_or(0.0));
    } else if (name == "atkinson") {
        const double eps = number();
        if (!(eps > 0.0)) throw bad("Atkinson parameter must be > 0");
        if (p) throw bad("atkinson does not take @p");
        out.measure = AtkinsonSpec{eps};
    } else {
        throw bad("unknown measure name");
    }
    return out;
}

} // namespace ineqlab
