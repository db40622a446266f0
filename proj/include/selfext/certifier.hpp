#pragma once

#include "selfext/partitions.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace selfext {

enum class Rule {
    THeight,    // h(λ) <= p+2
    TWeight,    // block weight <= 7
    TRock,      // block with a d-Rouquier core
    TSpecht,    // e_i^(ε_i) D^λ is an irreducible Specht module
    TSmall,     // |λ| < p, semisimple group algebra
    RReflect,   // i-reflection, Ext^1 isomorphism
    RTrick1,    // ε_i > 0, not i-difficult: embed into ẽ_i^{ε_i} λ
    RSocle,     // restriction/induction embedding with the regularity side condition
    RFixedTop,  // ((a+1)^c, a^{p-2}, a-1, ...) shape: embed into λ_A
    RTrick2,    // reflections along i+1, ..., then a Trick 1 step
    RMullineux, // tensoring with the sign representation
};

using RuleSet = std::set<Rule>;

std::string rule_tag(Rule r);
Rule parse_rule(const std::string& tag); // accepts T-WEIGHT or t-weight
bool is_terminal(Rule r);
const std::vector<Rule>& all_rules();
RuleSet parse_rule_set(const std::string& csv);

struct Step {
    Rule rule;
    nlohmann::json params;
    Partition from;
    Partition to;
};

struct Terminal {
    Rule rule;
    nlohmann::json params;
};

struct Certificate {
    int p = 0;
    Partition start;
    std::vector<Step> steps;
    std::optional<Terminal> terminal;
    bool certified() const { return terminal.has_value(); }
};

struct CertifyOptions {
    RuleSet rules = RuleSet(all_rules().begin(), all_rules().end());
    int max_steps = 64;
    int max_chain = 0;             // Trick 2 chain bound; 0 means p
    std::size_t node_budget = 20000; // partitions expanded before giving up
};

Certificate certify(const Partition& l, int p, const CertifyOptions& opts = {});
bool validate(const Certificate& cert);

// Terminal rule that fires on λ, if any, in priority order.
std::optional<Terminal> terminal_rule(const Partition& l, int p, const RuleSet& rules);

struct Trick1Target {
    int residue;
    Partition target;
};
std::vector<Trick1Target> trick1_targets(const Partition& l, int p);

struct SocleTarget {
    int residue;
    bool restrict; // true: ẽ_i^{ε_i} λ, false: f̃_i^{φ_i} λ
    Partition target;
};
std::vector<SocleTarget> socle_targets(const Partition& l, int p);

struct Trick2Chain {
    int residue = 0;                // i; reflections use i+1, ..., i+m-1
    int m = 0;
    std::vector<Partition> chain;   // λ^1 = λ, ..., λ^m
    Partition target;               // ẽ_{i+m}^{ε} λ^m
};
std::vector<Trick2Chain> trick2_targets(const Partition& l, int p, int max_chain);

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

} // namespace selfext
