#include "qdf/ring.hpp"

namespace qdf {

VariableSet VariableSet::make(std::vector<std::string> names, std::vector<int> weights,
                              std::vector<std::pair<int, int>> bigrade) {
    VariableSet v;
    v.names = std::move(names);
    if (weights.empty()) weights.assign(v.names.size(), 1);
    if (weights.size() != v.names.size())
        throw Error("weights must match variable count");
    for (int w : weights)
        if (w < 1) throw Error("variable weights must be >= 1");
    if (!bigrade.empty() && bigrade.size() != v.names.size())
        throw Error("bigrade must match variable count");
    for (std::size_t i = 0; i < v.names.size(); ++i)
        for (std::size_t j = i + 1; j < v.names.size(); ++j)
            if (v.names[i] == v.names[j])
                throw Error("duplicate variable name: " + v.names[i]);
    v.weights = std::move(weights);
    v.bigrade = std::move(bigrade);
    return v;
}

int VariableSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

bool VariableSet::same(const VariableSet& o) const {
    return names == o.names && weights == o.weights && bigrade == o.bigrade;
}

}  // namespace qdf
