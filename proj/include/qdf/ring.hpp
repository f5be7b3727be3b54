#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdf/field.hpp"
#include "qdf/util.hpp"

namespace qdf {

// Ordered variables with integer weights and an optional bigrading
// (base degree, fiber degree) per variable.
struct VariableSet {
    std::vector<std::string> names;
    std::vector<int> weights;                      // one per name, >= 1
    std::vector<std::pair<int, int>> bigrade;      // empty, or one per name

    static VariableSet make(std::vector<std::string> names,
                            std::vector<int> weights = {},
                            std::vector<std::pair<int, int>> bigrade = {});

    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;  // -1 when absent
    bool same(const VariableSet& o) const;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

struct Ring {
    FieldPtr field;
    VarsPtr vars;

    std::size_t nvars() const { return vars->size(); }
    bool same(const Ring& o) const {
        return field->same(*o.field) && vars->same(*o.vars);
    }
};

inline Ring make_ring(FieldPtr field, VariableSet vars) {
    return Ring{std::move(field), std::make_shared<const VariableSet>(std::move(vars))};
}

}  // namespace qdf
