#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qdf/quadric.hpp"

namespace qdf {

struct RunConfig {
    enum class FieldSel { Auto, QQ, Fp, QQi };
    FieldSel field_sel = FieldSel::Auto;
    std::uint64_t prime = 10007;
    bool use_lex = false;
    GBConfig budgets;
    std::uint64_t seed = 0;
    std::size_t workers = 0;  // 0 = hardware concurrency
};

struct ClaimOutcome {
    bool pass = false;
    std::string witness;     // populated on failure
    std::string field_used;  // e.g. "QQ", "F_10007", "QQ(i)"
};

struct ClaimContext {
    const RunConfig* cfg = nullptr;
    std::mt19937_64 rng;

    // Field policy: identity claims default to exact rationals, enumeration
    // claims to F_p, i-requiring claims to a field containing a square root
    // of -1; --field overrides all three.
    FieldPtr identity_field() const;
    FieldPtr enum_field() const;
    std::pair<FieldPtr, Value> i_field() const;
    const GBConfig& budgets() const { return cfg->budgets; }
    TermOrder order() const {
        return cfg->use_lex ? TermOrder::lex() : TermOrder::grevlex();
    }
};

struct Claim {
    std::string id;
    std::string paper_location;
    std::string description;
    std::function<ClaimOutcome(ClaimContext&)> body;
};

const std::vector<Claim>& claim_registry();

// Deterministic per-claim RNG stream derived from (seed, claim id).
std::uint64_t claim_stream_seed(std::uint64_t seed, const std::string& id);

// '*'-wildcard pattern match used for --claim selection.
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace qdf
