#include "app.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "ineqlab/decomposition.hpp"
#include "ineqlab/error.hpp"
#include "ineqlab/measures.hpp"
#include "ineqlab/population.hpp"
#include "ineqlab/shapley.hpp"
#include "ineqlab/zonogon.hpp"
#include "ingest.hpp"

namespace ineqlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string input;
    std::string value_col;
    std::string measure = "theil";
    std::vector<std::string> attrs;
    std::vector<std::string> group_by;
    std::string format;
    int precision = 6;
};

double rounded(double v, int precision) {
    const double scale = std::pow(10.0, precision);
    double r = std::round(v * scale) / scale;
    if (!std::isfinite(r)) r = v;
    return r == 0.0 ? 0.0 : r;
}

Json number(double v, int precision) {
    if (std::isnan(v)) throw NumericError("result is not a number");
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    const double r = rounded(v, precision);
    // Integral values print without a trailing ".0".
    if (std::abs(r) < 1e15 && r == std::trunc(r)) return static_cast<std::int64_t>(r);
    return r;
}

std::string text_number(double v, int precision) {
    const Json j = number(v, precision);
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Dataset load(const RunConfig& cfg, const std::vector<std::string>& keep) {
    Dataset pop = ingest(cfg.input, cfg.value_col);
    spdlog::info("loaded {} records with {} attributes from {}", pop.size(), pop.attribute_names().size(), cfg.input);
    if (!keep.empty()) pop = pop.select_attributes(keep);
    return pop;
}

std::vector<std::string> chosen_attributes(const RunConfig& cfg, const Dataset& pop) {
    return cfg.attrs.empty() ? pop.attribute_names() : cfg.attrs;
}

void require_finite(double v, const std::string& what) {
    if (is_infinite(v)) throw InfiniteMeasure(what + " is infinite");
}

int cmd_measure(const RunConfig& cfg, std::ostream& out) {
    const auto choice = parse_measure(cfg.measure);
    const Dataset pop = load(cfg, cfg.attrs);
    double value = 0.0;
    if (choice.is_atkinson()) {
        if (!cfg.group_by.empty()) throw ConfigError("atkinson does not support --group-by");
        value = atkinson(pop, std::get<AtkinsonSpec>(choice.measure).eps);
    } else {
        const auto& spec = std::get<MeasureSpec>(choice.measure);
        value = cfg.group_by.empty() ? inequality(population_matrix(pop), spec)
                                     : inequality(group_columns(pop, cfg.group_by), spec);
    }
    if (cfg.format == "csv") {
        out << "measure,value\n" << cfg.measure << ',' << text_number(value, cfg.precision) << '\n';
    } else {
        emit(out, Json{{"measure", cfg.measure}, {"value", number(value, cfg.precision)}});
    }
    return kExitOk;
}

int cmd_lorenz(const RunConfig& cfg, std::ostream& out) {
    const Dataset pop = load(cfg, cfg.attrs);
    const Zonogon z =
        canonical_chain(cfg.group_by.empty() ? population_matrix(pop) : group_columns(pop, cfg.group_by));
    if (cfg.format == "json") {
        Json verts = Json::array();
        for (const auto& v : z.vertices()) verts.push_back({number(v.x, cfg.precision), number(v.y, cfg.precision)});
        emit(out, Json{{"vertices", verts}});
    } else {
        out << "x,y\n";
        for (const auto& v : z.vertices())
            out << text_number(v.x, cfg.precision) << ',' << text_number(v.y, cfg.precision) << '\n';
    }
    return kExitOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    const auto choice = parse_measure(cfg.measure);
    const Dataset pop = load(cfg, cfg.attrs);
    const auto attrs = chosen_attributes(cfg, pop);
    const DecompositionResult res = choice.is_atkinson()
                                        ? atkinson_decompose(pop, attrs, std::get<AtkinsonSpec>(choice.measure).eps)
                                        : decompose(pop, attrs, std::get<MeasureSpec>(choice.measure));
    const int p = cfg.precision;
    if (cfg.format == "csv") {
        out << "node,cumulative,partial\n";
        for (const auto& n : res.nodes)
            out << '"' << n.label << "\"," << text_number(n.cumulative, p) << ',' << text_number(n.partial, p) << '\n';
        return kExitOk;
    }
    Json j{{"measure", cfg.measure}, {"attributes", res.attributes}, {"total", number(res.total, p)}};
    if (res.named) {
        j["components"] = Json{{"redundant", number(res.named->redundant, p)},
                               {"unique",
                                Json{{res.attributes[0], number(res.named->unique_first, p)},
                                     {res.attributes[1], number(res.named->unique_second, p)}}},
                               {"synergy", number(res.named->synergetic, p)}};
    }
    Json lattice = Json::array();
    for (const auto& n : res.nodes)
        lattice.push_back(
            Json{{"node", n.label}, {"cumulative", number(n.cumulative, p)}, {"partial", number(n.partial, p)}});
    j["lattice"] = lattice;
    emit(out, j);
    return kExitOk;
}

int cmd_shapley(const RunConfig& cfg, std::ostream& out) {
    const auto choice = parse_measure(cfg.measure);
    const Dataset pop = load(cfg, cfg.attrs);
    const auto attrs = chosen_attributes(cfg, pop);
    if (attrs.empty()) throw ConfigError("shapley needs at least one attribute");
    AttributeGame game = [&] {
        if (!choice.is_atkinson()) return AttributeGame(pop, attrs, std::get<MeasureSpec>(choice.measure));
        const double eps = std::get<AtkinsonSpec>(choice.measure).eps;
        return AttributeGame(pop, attrs, MeasureSpec(atkinson_generator(eps), 0.0),
                             [eps](double v) { return atkinson_transform(v, eps); });
    }();
    require_finite(game.grand_value(), "game value of the full attribute set");
    const auto phi = game.shapley();
    const int p = cfg.precision;
    double sum = 0.0;
    for (double v : phi) sum += v;

    if (cfg.format == "csv") {
        out << "attribute,value\n";
        for (std::size_t i = 0; i < attrs.size(); ++i) out << attrs[i] << ',' << text_number(phi[i], p) << '\n';
        return kExitOk;
    }
    Json values = Json::object();
    for (std::size_t i = 0; i < attrs.size(); ++i) values[attrs[i]] = number(phi[i], p);
    Json inter = Json::object();
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        for (std::size_t k = i + 1; k < attrs.size(); ++k)
            inter[attrs[i] + "|" + attrs[k]] = number(game.synergy(attrs[i], attrs[k]), p);
    }
    emit(out, Json{{"values", values},
                   {"efficiency_check", number(sum - game.grand_value(), p)},
                   {"interactions", inter}});
    return kExitOk;
}

int cmd_subgroup(const RunConfig& cfg, std::ostream& out) {
    const auto choice = parse_measure(cfg.measure);
    if (choice.is_atkinson()) throw ConfigError("subgroup decomposition supports theil, mld and ge:<c> only");
    const auto& spec = std::get<MeasureSpec>(choice.measure);
    const auto kind = spec.f.kind();
    if (kind == Generator::Kind::Pietra || kind == Generator::Kind::Custom || spec.p != 0.0)
        throw ConfigError("subgroup decomposition supports theil, mld and ge:<c> with p = 0 only");
    if (cfg.group_by.empty()) throw ConfigError("subgroup needs --group-by");
    const Dataset pop = load(cfg, cfg.attrs);
    const auto res = subgroup_decompose(pop, cfg.group_by, spec.f.c());
    const int p = cfg.precision;
    if (cfg.format == "csv") {
        out << "group,weight,value\n";
        for (const auto& w : res.within)
            out << '"' << w.group << "\"," << text_number(w.weight, p) << ',' << text_number(w.value, p) << '\n';
        return kExitOk;
    }
    Json within = Json::array();
    for (const auto& w : res.within)
        within.push_back(Json{{"group", w.group}, {"weight", number(w.weight, p)}, {"value", number(w.value, p)}});
    emit(out, Json{{"between", number(res.between, p)},
                   {"within", within},
                   {"reconstruction", number(res.reconstruction, p)},
                   {"total", number(res.total, p)}});
    return kExitOk;
}

void configure_logging(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("ineqlab", sink);
    logger->set_pattern("[%l] %v");
    const char* env = std::getenv("INEQLAB_LOG");
    const std::string level = env ? env : "off";
    logger->set_level(level == "debug" ? spdlog::level::debug
                      : level == "info" ? spdlog::level::info
                                        : spdlog::level::off);
    spdlog::set_default_logger(logger);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    configure_logging(err);
    RunConfig cfg;
    CLI::App app{"Inequality measures and attribute decompositions", "ineqlab"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub, bool lorenz) {
        sub->add_option("-i,--input", cfg.input, "CSV file with a header row")->required();
        sub->add_option("--value-col", cfg.value_col, "indicator column (default: last column)");
        sub->add_option("--measure", cfg.measure, "pietra | theil | mld | ge:<c> | atkinson:<eps> [@p=<p>]");
        sub->add_option("--attrs", cfg.attrs, "attribute whitelist")->delimiter(',');
        sub->add_option("--group-by", cfg.group_by, "grouping attributes")->delimiter(',');
        sub->add_option("--format", cfg.format, "json | csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->default_str(lorenz ? "csv" : "json");
        sub->add_option("--precision", cfg.precision, "decimal digits")->check(CLI::Range(0, 17));
    };
    auto* measure = app.add_subcommand("measure", "inequality of the population (or its grouping)");
    auto* lorenz = app.add_subcommand("lorenz", "canonical chain vertices");
    auto* decomp = app.add_subcommand("decompose", "redundant / unique / synergetic decomposition");
    auto* shap = app.add_subcommand("shapley", "Shapley values of the attribute game");
    auto* sub = app.add_subcommand("subgroup", "between / within subgroup decomposition");
    for (auto* s : {measure, decomp, shap, sub}) add_common(s, false);
    add_common(lorenz, true);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }
    if (cfg.format.empty()) cfg.format = lorenz->parsed() ? "csv" : "json";

    try {
        if (measure->parsed()) return cmd_measure(cfg, out);
        if (lorenz->parsed()) return cmd_lorenz(cfg, out);
        if (decomp->parsed()) return cmd_decompose(cfg, out);
        if (shap->parsed()) return cmd_shapley(cfg, out);
        return cmd_subgroup(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

} // namespace ineqlab::cli
