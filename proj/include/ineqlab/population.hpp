#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ineqlab {

/// One individual: a non-negative indicator plus one category label per
/// attribute, aligned with the owning Dataset's attribute_names().
struct Record {
    double indicator = 0.0;
    std::vector<std::string> categories;
};

/// Validated, immutable population of records sharing one attribute set.
///
/// Invariants: non-empty, every indicator finite and >= 0, at least one
/// indicator > 0, every record has one non-empty category per attribute.
class Dataset {
public:
    /// Throws EmptyPopulation, DegeneratePopulation or InputError.
    Dataset(std::vector<std::string> attribute_names, std::vector<Record> records);

    /// Attribute-free population.
    static Dataset from_values(std::span<const double> values);

    const std::vector<std::string>& attribute_names() const { return attribute_names_; }
    const std::vector<Record>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    double total() const { return total_; }
    double mean() const { return total_ / static_cast<double>(records_.size()); }

    /// Index of `name` in attribute_names(); throws UnknownAttribute.
    std::size_t attribute_index(const std::string& name) const;
    const std::string& category(std::size_t record, const std::string& name) const;

    /// Keeps only the named attributes, in the given order.
    Dataset select_attributes(const std::vector<std::string>& names) const;
    /// Multiplies every indicator by k > 0.
    Dataset scaled(double k) const;

private:
    std::vector<std::string> attribute_names_;
    std::vector<Record> records_;
    double total_ = 0.0;
};

/// A normalized column of a population matrix: (population weight, share).
struct Column {
    double weight = 0.0;
    double share = 0.0;
};

/// Normalized 2 x m population matrix. Weights and shares each sum to one.
class WeightedColumns {
public:
    /// Throws InputError on negative entries or sums off by more than 1e-12.
    explicit WeightedColumns(std::vector<Column> columns);

    const std::vector<Column>& columns() const { return columns_; }
    std::size_t size() const { return columns_.size(); }
    auto begin() const { return columns_.begin(); }
    auto end() const { return columns_.end(); }

private:
    std::vector<Column> columns_;
};

inline constexpr double kColumnSumTolerance = 1e-12;

/// One column per record with weight 1/n and share s / sum(s).
WeightedColumns population_matrix(const Dataset& pop);

/// Population matrix of raw values; throws EmptyPopulation / DegeneratePopulation.
WeightedColumns population_matrix(std::span<const double> values);

/// The single column (1, 1).
WeightedColumns bottom();

struct Group {
    std::vector<std::string> key; ///< categories in dataset attribute order
    std::size_t count = 0;
    double total = 0.0;
    /// Empty when every member has indicator 0 (no valid Dataset exists).
    std::optional<Dataset> members;
};

struct Grouping {
    WeightedColumns columns; ///< one column per group, same order as `groups`
    std::vector<Group> groups;
};

/// Groups records by the joint categories of `attrs`. Groups are ordered
/// lexicographically by key; an empty `attrs` yields the single group.
Grouping group_by(const Dataset& pop, const std::vector<std::string>& attrs);

/// Same columns as group_by(pop, attrs).columns without materializing
/// the member datasets.
WeightedColumns group_columns(const Dataset& pop, const std::vector<std::string>& attrs);

/// "k1|k2|..." rendering of a group key.
std::string join_key(const std::vector<std::string>& key, char sep = '|');

} // namespace ineqlab
