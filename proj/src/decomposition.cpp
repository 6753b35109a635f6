#include "ineqlab/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "ineqlab/error.hpp"
#include "ineqlab/zonogon.hpp"

namespace ineqlab {

namespace {

bool source_less(SourceMask a, SourceMask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

void check_attributes(const Dataset& pop, const std::vector<std::string>& attrs) {
    if (attrs.size() < 2 || attrs.size() > 3)
        throw TooManyAttributes("attribute decomposition needs 2 or 3 attributes, got " +
                                std::to_string(attrs.size()));
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        pop.attribute_index(attrs[i]);
        for (std::size_t j = i + 1; j < attrs.size(); ++j) {
            if (attrs[i] == attrs[j]) throw InputError("duplicate attribute '" + attrs[i] + "'");
        }
    }
}

std::vector<std::string> attributes_of(SourceMask s, const std::vector<std::string>& attrs) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (s & (SourceMask{1} << i)) out.push_back(attrs[i]);
    }
    return out;
}

// Zonogon per source and cached inequality per set of sources.
class CumulativeEvaluator {
public:
    CumulativeEvaluator(const Dataset& pop, const std::vector<std::string>& attrs, const MeasureSpec& spec,
                        Construction construction)
        : pop_(pop), attrs_(attrs), spec_(spec), construction_(construction) {}

    double operator()(const LatticeNode& node) {
        const auto& srcs = node.sources;
        if (construction_ == Construction::Meet) return measure_of(srcs, false);
        // Inclusion-exclusion over the non-empty subsets of the sources.
        double acc = 0.0;
        const std::uint32_t n = static_cast<std::uint32_t>(srcs.size());
        for (std::uint32_t pick = 1; pick < (1u << n); ++pick) {
            std::vector<SourceMask> sub;
            for (std::uint32_t i = 0; i < n; ++i) {
                if (pick & (1u << i)) sub.push_back(srcs[i]);
            }
            const double v = measure_of(sub, true);
            if (is_infinite(v)) return kInfinity;
            acc += (std::popcount(pick) % 2 == 1) ? v : -v;
        }
        return acc;
    }

private:
    const Zonogon& zonogon(SourceMask s) {
        auto it = zonogons_.find(s);
        if (it == zonogons_.end())
            it = zonogons_.emplace(s, canonical_chain(group_columns(pop_, attributes_of(s, attrs_)))).first;
        return it->second;
    }

    double measure_of(const std::vector<SourceMask>& srcs, bool use_join) {
        const auto key = std::make_pair(use_join, srcs);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        double v = 0.0;
        if (srcs.size() == 1) {
            // Single sources are measured on the grouped columns directly.
            v = inequality(group_columns(pop_, attributes_of(srcs.front(), attrs_)), spec_);
        } else {
            std::vector<Zonogon> zs;
            zs.reserve(srcs.size());
            for (auto s : srcs) zs.push_back(zonogon(s));
            v = inequality(use_join ? join(zs) : meet(zs), spec_);
        }
        cache_.emplace(key, v);
        return v;
    }

    const Dataset& pop_;
    const std::vector<std::string>& attrs_;
    const MeasureSpec& spec_;
    Construction construction_;
    std::map<SourceMask, Zonogon> zonogons_;
    std::map<std::pair<bool, std::vector<SourceMask>>, double> cache_;
};

std::vector<double> node_cumulatives(const RedundancyLattice& lattice, const Dataset& pop, const MeasureSpec& spec,
                                     Construction construction) {
    CumulativeEvaluator eval(pop, lattice.attributes(), spec, construction);
    std::vector<double> cums;
    cums.reserve(lattice.nodes().size());
    for (const auto& node : lattice.nodes()) {
        const double v = eval(node);
        if (is_infinite(v))
            throw InfiniteMeasure("measure is infinite at lattice node " + lattice.label(node) +
                                  "; decomposition undefined");
        cums.push_back(v);
    }
    return cums;
}

DecompositionResult assemble(const RedundancyLattice& lattice, std::vector<double> cums) {
    const auto partials = mobius_inversion(lattice, cums);
    DecompositionResult out;
    out.attributes = lattice.attributes();
    for (std::size_t i = 0; i < lattice.nodes().size(); ++i) {
        const auto& node = lattice.nodes()[i];
        out.nodes.push_back({node, lattice.label(node), cums[i], partials[i]});
    }
    out.total = cums[lattice.top()];
    if (lattice.attributes().size() == 2) {
        const double red = cums[lattice.find({{0b01, 0b10}})];
        const double ua = cums[lattice.find({{0b01}})] - red;
        const double ub = cums[lattice.find({{0b10}})] - red;
        out.named = NamedComponents{red, ua, ub, out.total - red - ua - ub};
    }
    return out;
}

} // namespace

bool precedes_or_equal(const LatticeNode& alpha, const LatticeNode& beta) {
    for (auto b : beta.sources) {
        bool covered = false;
        for (auto a : alpha.sources) {
            if ((a & b) == a) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

std::size_t RedundancyLattice::find(const LatticeNode& node) const {
    LatticeNode key = node;
    std::sort(key.sources.begin(), key.sources.end(), source_less);
    auto it = std::find(nodes_.begin(), nodes_.end(), key);
    if (it == nodes_.end()) throw InputError("node is not in the lattice");
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<std::string> RedundancyLattice::source_attributes(SourceMask s) const {
    return attributes_of(s, attributes_);
}

std::string RedundancyLattice::label(const LatticeNode& node) const {
    std::string out = "[";
    for (std::size_t i = 0; i < node.sources.size(); ++i) {
        if (i) out += ',';
        out += '[';
        const auto names = source_attributes(node.sources[i]);
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (k) out += ',';
            out += names[k];
        }
        out += ']';
    }
    return out + "]";
}

RedundancyLattice redundancy_lattice(const std::vector<std::string>& attrs) {
    if (attrs.size() < 2 || attrs.size() > 3)
        throw TooManyAttributes("redundancy lattice supports 2 or 3 attributes, got " + std::to_string(attrs.size()));

    const SourceMask full = (SourceMask{1} << attrs.size()) - 1;
    std::vector<SourceMask> subsets;
    for (SourceMask s = 1; s <= full; ++s) subsets.push_back(s);

    // Every non-empty family of subsets that is an antichain.
    std::vector<LatticeNode> nodes;
    const std::uint32_t families = 1u << subsets.size();
    for (std::uint32_t fam = 1; fam < families; ++fam) {
        LatticeNode node;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            if (fam & (1u << i)) node.sources.push_back(subsets[i]);
        }
        bool antichain = true;
        for (std::size_t i = 0; i < node.sources.size() && antichain; ++i) {
            for (std::size_t j = 0; j < node.sources.size(); ++j) {
                if (i != j && (node.sources[i] & node.sources[j]) == node.sources[i]) {
                    antichain = false;
                    break;
                }
            }
        }
        if (!antichain) continue;
        std::sort(node.sources.begin(), node.sources.end(), source_less);
        nodes.push_back(std::move(node));
    }

    // Topological order: by size of the down-set, then by sources.
    std::vector<std::size_t> below(nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < nodes.size(); ++j) below[i] += precedes_or_equal(nodes[j], nodes[i]);
    }
    std::vector<std::size_t> perm(nodes.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (below[a] != below[b]) return below[a] < below[b];
        return std::lexicographical_compare(nodes[a].sources.begin(), nodes[a].sources.end(),
                                            nodes[b].sources.begin(), nodes[b].sources.end(), source_less);
    });

    RedundancyLattice lat;
    lat.attributes_ = attrs;
    for (auto i : perm) lat.nodes_.push_back(nodes[i]);
    const std::size_t n = lat.nodes_.size();
    lat.leq_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) lat.leq_[a * n + b] = precedes_or_equal(lat.nodes_[a], lat.nodes_[b]);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !lat.leq(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c) {
                if (c != a && c != b && lat.leq(a, c) && lat.leq(c, b)) cover = false;
            }
            if (cover) lat.covers_.emplace_back(a, b);
        }
    }
    return lat;
}

std::vector<double> mobius_inversion(const RedundancyLattice& lattice, const std::vector<double>& cumulative) {
    const std::size_t n = lattice.nodes().size();
    if (cumulative.size() != n) throw InputError("cumulative values do not match the lattice");
    std::vector<double> partial(n, 0.0);
    for (std::size_t b = 0; b < n; ++b) {
        double below = 0.0;
        for (std::size_t a = 0; a < b; ++a) {
            if (lattice.leq(a, b)) below += partial[a];
        }
        partial[b] = cumulative[b] - below;
    }
    return partial;
}

double cumulative(const std::vector<std::vector<std::string>>& node, const Dataset& pop, const MeasureSpec& spec,
                  Construction construction) {
    if (node.empty()) throw InputError("lattice node needs at least one source");
    std::vector<std::string> attrs;
    LatticeNode ln;
    for (const auto& src : node) {
        if (src.empty()) throw InputError("lattice node sources must be non-empty");
        SourceMask m = 0;
        for (const auto& a : src) {
            pop.attribute_index(a);
            auto it = std::find(attrs.begin(), attrs.end(), a);
            if (it == attrs.end()) {
                attrs.push_back(a);
                it = attrs.end() - 1;
            }
            m |= SourceMask{1} << (it - attrs.begin());
        }
        ln.sources.push_back(m);
    }
    for (auto a : ln.sources) {
        for (auto b : ln.sources) {
            if (a != b && (a & b) == a) throw InputError("lattice node sources must form an antichain");
        }
    }
    std::sort(ln.sources.begin(), ln.sources.end(), source_less);
    ln.sources.erase(std::unique(ln.sources.begin(), ln.sources.end()), ln.sources.end());
    CumulativeEvaluator eval(pop, attrs, spec, construction);
    return eval(ln);
}

DecompositionResult decompose(const Dataset& pop, const std::vector<std::string>& attrs, const MeasureSpec& spec,
                              Construction construction) {
    check_attributes(pop, attrs);
    const auto lattice = redundancy_lattice(attrs);
    return assemble(lattice, node_cumulatives(lattice, pop, spec, construction));
}

DecompositionResult atkinson_decompose(const Dataset& pop, const std::vector<std::string>& attrs, double eps,
                                       Construction construction) {
    check_attributes(pop, attrs);
    const MeasureSpec spec(atkinson_generator(eps), 0.0);
    const auto lattice = redundancy_lattice(attrs);
    auto cums = node_cumulatives(lattice, pop, spec, construction);
    for (auto& v : cums) v = atkinson_transform(v, eps);
    return assemble(lattice, std::move(cums));
}

SubgroupResult subgroup_decompose(const Dataset& pop, const std::vector<std::string>& attrs, double c) {
    const Generator gen = Generator::ge(c);
    const double ce = gen.c();
    const auto grouping = group_by(pop, attrs);
    const double n = static_cast<double>(pop.size());

    SubgroupResult out;
    out.between = inequality(grouping.columns, MeasureSpec(gen, 0.0));
    out.total = classic_index(pop, ClassicIndex::ge(ce));
    double within_sum = 0.0;
    for (const auto& g : grouping.groups) {
        const double pshare = static_cast<double>(g.count) / n;
        const double ishare = g.total / pop.total();
        WithinGroup w{join_key(g.key), std::pow(pshare, 1.0 - ce) * std::pow(ishare, ce), 0.0};
        if (g.members) {
            w.value = classic_index(*g.members, ClassicIndex::ge(ce));
        } else {
            // All-zero group: weight 0 for c > 0, otherwise the index diverges.
            w.value = ce > 0.0 ? 0.0 : kInfinity;
        }
        const double contrib = w.weight == 0.0 ? 0.0 : w.weight * w.value;
        within_sum += contrib;
        out.within.push_back(std::move(w));
    }
    out.reconstruction = (is_infinite(out.between) || is_infinite(within_sum)) ? kInfinity : out.between + within_sum;
    return out;
}

} // namespace ineqlab
