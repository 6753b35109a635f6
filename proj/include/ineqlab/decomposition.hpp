#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ineqlab/measures.hpp"
#include "ineqlab/population.hpp"

namespace ineqlab {

/// Bit i set means attribute i of the lattice's attribute list.
using SourceMask = std::uint32_t;

/// Antichain of non-empty attribute subsets (no source contains another).
/// Sources are kept sorted by (size, mask) for a stable identity.
struct LatticeNode {
    std::vector<SourceMask> sources;

    bool operator==(const LatticeNode&) const = default;
};

/// alpha precedes-or-equals beta iff every source of beta contains some
/// source of alpha.
bool precedes_or_equal(const LatticeNode& alpha, const LatticeNode& beta);

/// Redundancy lattice over 2 or 3 attributes, nodes in topological order
/// (bottom first, top last).
class RedundancyLattice {
public:
    const std::vector<std::string>& attributes() const { return attributes_; }
    const std::vector<LatticeNode>& nodes() const { return nodes_; }
    /// Covering relation as (lower index, upper index).
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * nodes_.size() + b]; }
    std::size_t top() const { return nodes_.size() - 1; }
    std::size_t bottom() const { return 0; }

    /// Index of a node, e.g. find({{0b01, 0b10}}); throws InputError if absent.
    std::size_t find(const LatticeNode& node) const;
    /// "[[a],[b]]" style label.
    std::string label(const LatticeNode& node) const;
    std::vector<std::string> source_attributes(SourceMask s) const;

private:
    friend RedundancyLattice redundancy_lattice(const std::vector<std::string>& attrs);

    std::vector<std::string> attributes_;
    std::vector<LatticeNode> nodes_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<bool> leq_;
};

/// Throws TooManyAttributes for more than 3 (or fewer than 2) attributes.
RedundancyLattice redundancy_lattice(const std::vector<std::string>& attrs);

/// How the cumulative (redundant) measure of a node is obtained from the
/// zonogons Z_S of the grouping by each source S.
enum class Construction {
    /// Inclusion-exclusion over joins: sum over non-empty J of
    /// (-1)^{|J|-1} I(join_{S in J} Z_S). Partial terms are non-negative.
    Join,
    /// I(meet_{S} Z_S). Partial terms can be negative.
    Meet,
};

struct NodeValue {
    LatticeNode node;
    std::string label;
    double cumulative = 0.0;
    double partial = 0.0;
};

struct NamedComponents {
    double redundant = 0.0;
    double unique_first = 0.0;
    double unique_second = 0.0;
    double synergetic = 0.0;
};

struct DecompositionResult {
    std::vector<std::string> attributes;
    std::vector<NodeValue> nodes; ///< lattice order, bottom first
    double total = 0.0;
    /// Present for two-attribute decompositions only.
    std::optional<NamedComponents> named;
};

/// Cumulative measure of one node given as attribute-name sources.
/// Returns +inf when any required inequality is infinite.
double cumulative(const std::vector<std::vector<std::string>>& node, const Dataset& pop,
                  const MeasureSpec& spec, Construction construction = Construction::Join);

/// partial(b) = cumulative(b) - sum of partial(a) over a strictly below b.
std::vector<double> mobius_inversion(const RedundancyLattice& lattice, const std::vector<double>& cumulative);

/// Attribute decomposition of f-inequality. Throws TooManyAttributes and
/// InfiniteMeasure.
DecompositionResult decompose(const Dataset& pop, const std::vector<std::string>& attrs,
                              const MeasureSpec& spec, Construction construction = Construction::Join);

/// Decomposition of the Atkinson index: cumulatives of the GE(1-eps)
/// decomposition are mapped through atkinson_transform, then inverted.
DecompositionResult atkinson_decompose(const Dataset& pop, const std::vector<std::string>& attrs, double eps,
                                       Construction construction = Construction::Join);

struct WithinGroup {
    std::string group;
    double weight = 0.0;
    double value = 0.0;
};

struct SubgroupResult {
    double between = 0.0;
    std::vector<WithinGroup> within;
    double reconstruction = 0.0;
    double total = 0.0;
};

/// GE_c subgroup decomposition over the joint grouping by `attrs`; within
/// weights are pop_share^(1-c) * income_share^c.
SubgroupResult subgroup_decompose(const Dataset& pop, const std::vector<std::string>& attrs, double c);

} // namespace ineqlab
