#include "ineqlab/population.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string_view>

#include "ineqlab/error.hpp"

namespace ineqlab {

Dataset::Dataset(std::vector<std::string> attribute_names, std::vector<Record> records)
    : attribute_names_(std::move(attribute_names)), records_(std::move(records)) {
    if (records_.empty()) throw EmptyPopulation();
    for (std::size_t i = 0; i < attribute_names_.size(); ++i) {
        for (std::size_t j = i + 1; j < attribute_names_.size(); ++j) {
            if (attribute_names_[i] == attribute_names_[j])
                throw InputError("duplicate attribute '" + attribute_names_[i] + "'");
        }
    }
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const Record& r = records_[i];
        if (!std::isfinite(r.indicator) || r.indicator < 0.0)
            throw InputError("record " + std::to_string(i) + ": indicator must be finite and >= 0");
        if (r.categories.size() != attribute_names_.size())
            throw InputError("record " + std::to_string(i) + ": expected " +
                             std::to_string(attribute_names_.size()) + " categories");
        for (std::size_t a = 0; a < r.categories.size(); ++a) {
            if (r.categories[a].empty())
                throw InputError("record " + std::to_string(i) + ": missing value for '" +
                                 attribute_names_[a] + "'");
        }
        total_ += r.indicator;
    }
    if (!(total_ > 0.0)) throw DegeneratePopulation("all indicator values are zero");
    if (!std::isfinite(total_)) throw InputError("indicator total overflows");
}

Dataset Dataset::from_values(std::span<const double> values) {
    std::vector<Record> records;
    records.reserve(values.size());
    for (double v : values) records.push_back(Record{v, {}});
    return Dataset({}, std::move(records));
}

std::size_t Dataset::attribute_index(const std::string& name) const {
    auto it = std::find(attribute_names_.begin(), attribute_names_.end(), name);
    if (it == attribute_names_.end()) throw UnknownAttribute(name);
    return static_cast<std::size_t>(it - attribute_names_.begin());
}

const std::string& Dataset::category(std::size_t record, const std::string& name) const {
    return records_.at(record).categories[attribute_index(name)];
}

Dataset Dataset::select_attributes(const std::vector<std::string>& names) const {
    std::vector<std::size_t> idx;
    idx.reserve(names.size());
    for (const auto& n : names) idx.push_back(attribute_index(n));
    std::vector<Record> out;
    out.reserve(records_.size());
    for (const auto& r : records_) {
        Record s{r.indicator, {}};
        s.categories.reserve(idx.size());
        for (auto i : idx) s.categories.push_back(r.categories[i]);
        out.push_back(std::move(s));
    }
    return Dataset(names, std::move(out));
}

Dataset Dataset::scaled(double k) const {
    if (!(k > 0.0) || !std::isfinite(k)) throw InputError("scale factor must be finite and > 0");
    std::vector<Record> out = records_;
    for (auto& r : out) r.indicator *= k;
    return Dataset(attribute_names_, std::move(out));
}

WeightedColumns::WeightedColumns(std::vector<Column> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw InputError("population matrix has no columns");
    double ws = 0.0;
    double ss = 0.0;
    for (const auto& c : columns_) {
        if (!(c.weight >= 0.0) || !(c.share >= 0.0))
            throw InputError("population matrix entries must be >= 0");
        ws += c.weight;
        ss += c.share;
    }
    if (std::abs(ws - 1.0) > kColumnSumTolerance || std::abs(ss - 1.0) > kColumnSumTolerance)
        throw InputError("population matrix columns must sum to (1, 1)");
}

WeightedColumns population_matrix(std::span<const double> values) {
    return population_matrix(Dataset::from_values(values));
}

WeightedColumns population_matrix(const Dataset& pop) {
    const double n = static_cast<double>(pop.size());
    const double total = pop.total();
    std::vector<Column> cols;
    cols.reserve(pop.size());
    for (const auto& r : pop.records()) cols.push_back({1.0 / n, r.indicator / total});
    return WeightedColumns(std::move(cols));
}

WeightedColumns bottom() { return WeightedColumns({Column{1.0, 1.0}}); }

namespace {

// Record index lists per joint key, keyed by category tuple in dataset
// attribute order so the map iterates lexicographically.
std::map<std::vector<std::string_view>, std::vector<std::size_t>>
partition(const Dataset& pop, const std::vector<std::string>& attrs) {
    std::vector<std::size_t> idx;
    for (const auto& a : attrs) idx.push_back(pop.attribute_index(a));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    std::map<std::vector<std::string_view>, std::vector<std::size_t>> parts;
    std::vector<std::string_view> key(idx.size());
    const auto& recs = pop.records();
    for (std::size_t i = 0; i < recs.size(); ++i) {
        for (std::size_t k = 0; k < idx.size(); ++k) key[k] = recs[i].categories[idx[k]];
        parts[key].push_back(i);
    }
    return parts;
}

} // namespace

WeightedColumns group_columns(const Dataset& pop, const std::vector<std::string>& attrs) {
    const auto parts = partition(pop, attrs);
    const double n = static_cast<double>(pop.size());
    const double total = pop.total();
    const auto& recs = pop.records();
    std::vector<Column> cols;
    cols.reserve(parts.size());
    for (const auto& [key, members] : parts) {
        double s = 0.0;
        for (auto i : members) s += recs[i].indicator;
        cols.push_back({static_cast<double>(members.size()) / n, s / total});
    }
    return WeightedColumns(std::move(cols));
}

Grouping group_by(const Dataset& pop, const std::vector<std::string>& attrs) {
    const auto parts = partition(pop, attrs);
    const double n = static_cast<double>(pop.size());
    const double total = pop.total();
    const auto& recs = pop.records();
    std::vector<Column> cols;
    std::vector<Group> groups;
    for (const auto& [key, members] : parts) {
        double s = 0.0;
        std::vector<Record> sub;
        sub.reserve(members.size());
        for (auto i : members) {
            s += recs[i].indicator;
            sub.push_back(recs[i]);
        }
        cols.push_back({static_cast<double>(members.size()) / n, s / total});
        Group g{std::vector<std::string>(key.begin(), key.end()), members.size(), s, std::nullopt};
        if (s > 0.0) g.members.emplace(pop.attribute_names(), std::move(sub));
        groups.push_back(std::move(g));
    }
    return Grouping{WeightedColumns(std::move(cols)), std::move(groups)};
}

std::string join_key(const std::vector<std::string>& key, char sep) {
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) out += sep;
        out += key[i];
    }
    return out;
}

} // namespace ineqlab
