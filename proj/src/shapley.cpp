#include "ineqlab/shapley.hpp"

#include <bit>

#include "ineqlab/error.hpp"

namespace ineqlab {

namespace {

std::vector<std::string> members(std::uint32_t mask, const std::vector<std::string>& players) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < players.size(); ++i) {
        if (mask & (1u << i)) out.push_back(players[i]);
    }
    return out;
}

} // namespace

AttributeGame::AttributeGame(const Dataset& pop, std::vector<std::string> players, const MeasureSpec& spec)
    : AttributeGame(pop, std::move(players), spec, [](double v) { return v; }) {}

AttributeGame::AttributeGame(const Dataset& pop, std::vector<std::string> players, const MeasureSpec& spec,
                             const std::function<double(double)>& transform)
    : players_(std::move(players)) {
    if (players_.size() > kMaxShapleyPlayers)
        throw TooManyAttributes("exact Shapley enumeration supports at most " + std::to_string(kMaxShapleyPlayers) +
                                " attributes");
    for (std::size_t i = 0; i < players_.size(); ++i) {
        pop.attribute_index(players_[i]);
        for (std::size_t j = i + 1; j < players_.size(); ++j) {
            if (players_[i] == players_[j]) throw InputError("duplicate attribute '" + players_[i] + "'");
        }
    }
    const std::uint32_t count = 1u << players_.size();
    values_.assign(count, 0.0);
    for (std::uint32_t t = 1; t < count; ++t)
        values_[t] = transform(inequality(group_columns(pop, members(t, players_)), spec));
}

std::uint32_t AttributeGame::mask_of(const std::string& name) const {
    for (std::size_t i = 0; i < players_.size(); ++i) {
        if (players_[i] == name) return 1u << i;
    }
    throw UnknownAttribute(name);
}

double AttributeGame::value(const std::vector<std::string>& coalition) const {
    std::uint32_t m = 0;
    for (const auto& a : coalition) m |= mask_of(a);
    return values_[m];
}

std::vector<double> AttributeGame::shapley() const {
    const std::size_t n = players_.size();
    // weight[k] = k! (n-k-1)! / n!
    std::vector<double> fact(n + 1, 1.0);
    for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * static_cast<double>(k);
    std::vector<double> weight(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) weight[k] = fact[k] * fact[n - k - 1] / fact[n];
    std::vector<double> phi(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t bit = 1u << i;
        for (std::uint32_t t = 0; t < values_.size(); ++t) {
            if (t & bit) continue;
            const double gain = values_[t | bit] - values_[t];
            phi[i] += weight[std::popcount(t)] * gain;
        }
    }
    return phi;
}

double AttributeGame::synergy(const std::string& a, const std::string& b) const {
    const std::uint32_t ma = mask_of(a);
    const std::uint32_t mb = mask_of(b);
    if (ma == mb) throw InputError("game synergy needs two distinct attributes");
    return values_[ma | mb] - values_[ma] - values_[mb] + values_[0];
}

double game_value(const Dataset& pop, const std::vector<std::string>& coalition, const MeasureSpec& spec) {
    if (coalition.empty()) return 0.0;
    return inequality(group_columns(pop, coalition), spec);
}

std::vector<std::pair<std::string, double>> shapley_values(const Dataset& pop, const std::vector<std::string>& attrs,
                                                           const MeasureSpec& spec) {
    const AttributeGame game(pop, attrs, spec);
    const auto phi = game.shapley();
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < attrs.size(); ++i) out.emplace_back(attrs[i], phi[i]);
    return out;
}

double game_synergy(const Dataset& pop, const std::string& a, const std::string& b, const MeasureSpec& spec) {
    if (a == b) throw InputError("game synergy needs two distinct attributes");
    return game_value(pop, {a, b}, spec) - game_value(pop, {a}, spec) - game_value(pop, {b}, spec);
}

} // namespace ineqlab
