#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ineqlab/measures.hpp"
#include "ineqlab/population.hpp"

namespace ineqlab {

/// Cooperative game over attributes: v(T) is the between-group inequality
/// of the grouping by T, so v(empty) = 0. All 2^n coalition values are
/// computed up front.
class AttributeGame {
public:
    /// Throws TooManyAttributes for more than 10 players.
    AttributeGame(const Dataset& pop, std::vector<std::string> players, const MeasureSpec& spec);
    /// Game whose values are further mapped through `transform` (which must
    /// send 0 to 0), e.g. the Atkinson transform.
    AttributeGame(const Dataset& pop, std::vector<std::string> players, const MeasureSpec& spec,
                  const std::function<double(double)>& transform);

    const std::vector<std::string>& players() const { return players_; }
    /// Coalition as a bit mask over players().
    double value(std::uint32_t coalition) const { return values_.at(coalition); }
    double value(const std::vector<std::string>& coalition) const;
    double grand_value() const { return values_.back(); }

    std::vector<double> shapley() const;
    double synergy(const std::string& a, const std::string& b) const;

private:
    std::uint32_t mask_of(const std::string& name) const;

    std::vector<std::string> players_;
    std::vector<double> values_;
};

inline constexpr std::size_t kMaxShapleyPlayers = 10;

double game_value(const Dataset& pop, const std::vector<std::string>& coalition, const MeasureSpec& spec);

/// Exact Shapley values, in the order of `attrs`.
std::vector<std::pair<std::string, double>> shapley_values(const Dataset& pop, const std::vector<std::string>& attrs,
                                                           const MeasureSpec& spec);

/// v({a,b}) - v({a}) - v({b}) + v(empty).
double game_synergy(const Dataset& pop, const std::string& a, const std::string& b, const MeasureSpec& spec);

} // namespace ineqlab
