#include "selfext/certifier.hpp"

#include "selfext/abacus.hpp"
#include "selfext/bijections.hpp"
#include "selfext/blocks.hpp"
#include "selfext/signatures.hpp"
#include "selfext/specht.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace selfext {

using nlohmann::json;

namespace {

struct RuleName {
    Rule rule;
    const char* tag;
};

constexpr RuleName kRuleNames[] = {
    {Rule::THeight, "T-HEIGHT"},   {Rule::TWeight, "T-WEIGHT"}, {Rule::TRock, "T-ROCK"},
    {Rule::TSpecht, "T-SPECHT"},   {Rule::TSmall, "T-SMALL"},   {Rule::RReflect, "R-REFLECT"},
    {Rule::RTrick1, "R-TRICK1"},   {Rule::RSocle, "R-SOCLE"},   {Rule::RFixedTop, "R-FIXEDTOP"},
    {Rule::RTrick2, "R-TRICK2"},   {Rule::RMullineux, "R-MULLINEUX"},
};

int mod(int a, int p)
{
    int r = a % p;
    return r < 0 ? r + p : r;
}

} // namespace

std::string rule_tag(Rule r)
{
    for (const auto& n : kRuleNames)
        if (n.rule == r)
            return n.tag;
    throw ContractError("unknown rule");
}

Rule parse_rule(const std::string& tag)
{
    std::string up;
    for (char c : tag)
        up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& n : kRuleNames)
        if (up == n.tag)
            return n.rule;
    throw ContractError("unknown rule tag '" + tag + "'");
}

bool is_terminal(Rule r)
{
    return r == Rule::THeight || r == Rule::TWeight || r == Rule::TRock || r == Rule::TSpecht ||
           r == Rule::TSmall;
}

const std::vector<Rule>& all_rules()
{
    static const std::vector<Rule> rules = [] {
        std::vector<Rule> v;
        for (const auto& n : kRuleNames)
            v.push_back(n.rule);
        return v;
    }();
    return rules;
}

RuleSet parse_rule_set(const std::string& csv)
{
    RuleSet out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto comma = csv.find(',', start);
        auto item = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) {
            if (item == "all" || item == "ALL")
                out.insert(all_rules().begin(), all_rules().end());
            else
                out.insert(parse_rule(item));
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------- terminals

std::optional<Terminal> terminal_rule(const Partition& l, int p, const RuleSet& rules)
{
    auto on = [&](Rule r) { return rules.count(r) > 0; };
    std::optional<BlockId> block;
    auto blk = [&]() -> const BlockId& {
        if (!block)
            block = block_of(l, p);
        return *block;
    };
    if (on(Rule::TWeight) && blk().weight <= 7)
        return Terminal{Rule::TWeight, {{"weight", blk().weight}}};
    if (on(Rule::THeight) && height(l) <= p + 2)
        return Terminal{Rule::THeight, {{"height", height(l)}}};
    if (on(Rule::TSmall) && size(l) < p)
        return Terminal{Rule::TSmall, {{"size", size(l)}}};
    if (on(Rule::TRock))
        if (auto n = rouquier_display(blk().core, p, blk().weight))
            return Terminal{Rule::TRock, {{"core", blk().core}, {"weight", blk().weight}, {"beads", *n}}};
    if (on(Rule::TSpecht))
        if (auto w = theorem_b_applicable(l, p))
            return Terminal{Rule::TSpecht,
                            {{"residue", w->residue}, {"epsilon", w->epsilon}, {"mu", w->mu}, {"nu", w->nu}}};
    return std::nullopt;
}

// ---------------------------------------------------------------- reductions

std::vector<Trick1Target> trick1_targets(const Partition& l, int p)
{
    std::vector<Trick1Target> out;
    for (int i = 0; i < p; ++i)
        if (epsilon(l, p, i) > 0 && !is_difficult(l, p, i))
            out.push_back({i, e_top(l, p, i)});
    return out;
}

std::vector<SocleTarget> socle_targets(const Partition& l, int p)
{
    std::vector<SocleTarget> out;
    for (int i = 0; i < p; ++i) {
        auto s = signature(l, p, i);
        int r = s.epsilon, t = s.phi;
        if (r > 0) {
            auto mu = e_top(l, p, i);
            auto ms = signature(mu, p, i);
            bool blocked = t > 0 && (static_cast<int>(ms.conormal.size()) <= r ||
                                     !is_p_regular(add_nodes(mu, {ms.conormal[r]}), p));
            if (!blocked)
                out.push_back({i, true, mu});
        }
        if (t > 0) {
            auto nu = f_top(l, p, i);
            auto ns = signature(nu, p, i);
            bool blocked = r > 0 && (static_cast<int>(ns.normal.size()) <= t ||
                                     !is_p_regular(remove_nodes(nu, {ns.normal[t]}), p));
            if (!blocked)
                out.push_back({i, false, nu});
        }
    }
    return out;
}

std::vector<Trick2Chain> trick2_targets(const Partition& l, int p, int max_chain)
{
    std::vector<Trick2Chain> out;
    for (int i = 0; i < p; ++i) {
        std::vector<Partition> chain{l};
        for (int m = 2; m <= max_chain; ++m) {
            // extend λ^{m-1} -> λ^m along residue i+m-1
            const auto& prev = chain.back();
            int res = mod(i + m - 1, p);
            if (epsilon(prev, p, res) != 0)
                break;
            chain.push_back(f_top(prev, p, res));
            const auto& last = chain.back();
            int fin = mod(i + m, p);
            auto s = signature(last, p, fin);
            if (s.epsilon > 0 && s.phi > 0 && !is_difficult(last, p, fin))
                out.push_back({i, m, chain, e_top(last, p, fin)});
        }
    }
    return out;
}

// ---------------------------------------------------------------- search

namespace {

struct Edge {
    Rule rule;
    json params;
    Partition to;
};

std::vector<Edge> successors(const Partition& l, int p, const RuleSet& rules, int max_chain)
{
    std::vector<Edge> out;
    auto on = [&](Rule r) { return rules.count(r) > 0; };
    if (on(Rule::RReflect))
        for (const auto& r : reflections(l, p))
            out.push_back({Rule::RReflect, {{"residue", r.residue}, {"direction", r.raising ? "f" : "e"}}, r.target});
    if (on(Rule::RTrick1))
        for (const auto& t : trick1_targets(l, p))
            out.push_back({Rule::RTrick1, {{"residue", t.residue}}, t.target});
    if (on(Rule::RSocle))
        for (const auto& t : socle_targets(l, p))
            out.push_back({Rule::RSocle, {{"residue", t.residue}, {"direction", t.restrict ? "e" : "f"}}, t.target});
    if (on(Rule::RFixedTop))
        if (auto i = fixed_top_shape(l, p)) {
            int c = 0;
            while (c < height(l) && l[c] == l[0])
                ++c;
            Node a{c, l[0]};
            out.push_back({Rule::RFixedTop, {{"residue", *i}, {"node", {a.row, a.col}}}, remove_nodes(l, {a})});
        }
    if (on(Rule::RTrick2))
        for (const auto& t : trick2_targets(l, p, max_chain)) {
            json chain = json::array();
            for (std::size_t k = 1; k < t.chain.size(); ++k)
                chain.push_back(t.chain[k]);
            out.push_back({Rule::RTrick2, {{"residue", t.residue}, {"m", t.m}, {"chain", chain}}, t.target});
        }
    return out;
}

struct SearchNode {
    Partition part;
    int parent = -1;
    bool via_mullineux = false; // the edge left from the parent's Mullineux image
    Edge edge{Rule::RReflect, {}, {}};
    int depth = 0;
};

} // namespace

Certificate certify(const Partition& l, int p, const CertifyOptions& opts)
{
    if (p == 2)
        throw ContractError("certification is only available for p > 2");
    if (!is_prime(p))
        throw ContractError(std::to_string(p) + " is not prime");
    if (!is_p_regular(l, p))
        throw ContractError("certification needs a p-regular partition");
    const bool mull = opts.rules.count(Rule::RMullineux) > 0;
    const int max_chain = opts.max_chain > 0 ? opts.max_chain : p;

    std::vector<SearchNode> nodes;
    std::unordered_set<Partition, PartitionHash> seen;
    auto canonical = [&](const Partition& x) {
        if (!mull)
            return x;
        return std::min(x, mullineux(x, p));
    };
    nodes.push_back({l});
    seen.insert(canonical(l));
    std::deque<int> queue{0};

    auto build = [&](int idx, bool terminal_on_image, const Terminal& t) {
        std::vector<int> path;
        for (int k = idx; k >= 0; k = nodes[k].parent)
            path.push_back(k);
        std::reverse(path.begin(), path.end());
        Certificate cert{p, l, {}, t};
        for (std::size_t k = 1; k < path.size(); ++k) {
            const auto& from = nodes[path[k - 1]].part;
            const auto& n = nodes[path[k]];
            Partition src = from;
            if (n.via_mullineux) {
                src = mullineux(from, p);
                cert.steps.push_back({Rule::RMullineux, json::object(), from, src});
            }
            cert.steps.push_back({n.edge.rule, n.edge.params, src, n.part});
        }
        if (terminal_on_image) {
            const auto& last = nodes[idx].part;
            cert.steps.push_back({Rule::RMullineux, json::object(), last, mullineux(last, p)});
        }
        return cert;
    };

    std::size_t expanded = 0;
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        const Partition cur = nodes[idx].part;
        const int depth = nodes[idx].depth;

        std::vector<std::pair<Partition, bool>> views{{cur, false}};
        if (mull) {
            auto img = mullineux(cur, p);
            if (img != cur)
                views.emplace_back(img, true);
        }
        for (const auto& [v, image] : views)
            if (auto t = terminal_rule(v, p, opts.rules))
                return build(idx, image, *t);

        if (depth >= opts.max_steps || expanded >= opts.node_budget)
            continue;
        ++expanded;
        for (const auto& [v, image] : views) {
            int cost = image ? 2 : 1;
            if (depth + cost > opts.max_steps)
                continue;
            for (auto& e : successors(v, p, opts.rules, max_chain)) {
                if (!seen.insert(canonical(e.to)).second)
                    continue;
                SearchNode n;
                n.part = e.to;
                n.parent = idx;
                n.via_mullineux = image;
                n.edge = std::move(e);
                n.depth = depth + cost;
                nodes.push_back(std::move(n));
                queue.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
    }
    return Certificate{p, l, {}, std::nullopt};
}

// ---------------------------------------------------------------- validation

namespace {

bool check_terminal(const Partition& l, int p, const Terminal& t)
{
    switch (t.rule) {
    case Rule::TWeight: {
        auto [core, w] = core_and_weight(l, p);
        return w <= 7 && t.params.value("weight", -1) == w;
    }
    case Rule::THeight:
        return height(l) <= p + 2;
    case Rule::TSmall:
        return size(l) < p;
    case Rule::TRock: {
        auto [core, w] = core_and_weight(l, p);
        if (t.params.value("weight", -1) != w || t.params.at("core").get<Partition>() != core)
            return false;
        int n = t.params.at("beads").get<int>();
        if (n < height(core))
            return false;
        auto s = quotient(display_exact(core, p, n));
        for (int i = 0; i + 1 < p; ++i)
            if (s.beads[i + 1] - s.beads[i] < w - 1)
                return false;
        return true;
    }
    case Rule::TSpecht: {
        int i = t.params.at("residue").get<int>();
        auto mu = t.params.at("mu").get<Partition>();
        auto nu = t.params.at("nu").get<Partition>();
        if (i < 0 || i >= p)
            return false;
        auto sig = signature(l, p, i);
        auto expect = e_tilde(l, p, i, sig.epsilon);
        if (!expect || *expect != mu || t.params.at("epsilon").get<int>() != sig.epsilon)
            return false;
        return size(nu) == size(mu) && regularize(nu, p) == mu && specht_irreducible(nu, p);
    }
    default:
        return false;
    }
}

bool check_step(const Step& s, int p)
{
    const auto& from = s.from;
    const auto& to = s.to;
    if (!is_p_regular(from, p) || !is_p_regular(to, p))
        return false;
    auto residue = [&]() {
        int i = s.params.at("residue").get<int>();
        if (i < 0 || i >= p)
            throw ContractError("residue out of range");
        return i;
    };
    switch (s.rule) {
    case Rule::RMullineux:
        return to == mullineux(from, p) && to != from;
    case Rule::RReflect: {
        int i = residue();
        auto sig = signature(from, p, i);
        if (s.params.at("direction") == "f")
            return sig.epsilon == 0 && sig.phi > 0 && f_tilde(from, p, i, sig.phi) == to;
        return sig.phi == 0 && sig.epsilon > 0 && e_tilde(from, p, i, sig.epsilon) == to;
    }
    case Rule::RTrick1: {
        int i = residue();
        auto sig = signature(from, p, i);
        if (sig.epsilon == 0 || e_tilde(from, p, i, sig.epsilon) != to)
            return false;
        if (sig.phi == 0)
            return true;
        auto ab = add_nodes(remove_nodes(from, {*sig.good()}), {*sig.cogood()});
        return is_p_regular(ab, p);
    }
    case Rule::RSocle: {
        int i = residue();
        auto sig = signature(from, p, i);
        int r = sig.epsilon, t = sig.phi;
        if (s.params.at("direction") == "e") {
            auto mu = e_tilde(from, p, i, r);
            if (r == 0 || mu != to)
                return false;
            if (t == 0)
                return true;
            auto ms = signature(to, p, i);
            return static_cast<int>(ms.conormal.size()) > r && is_p_regular(add_nodes(to, {ms.conormal[r]}), p);
        }
        auto nu = f_tilde(from, p, i, t);
        if (t == 0 || nu != to)
            return false;
        if (r == 0)
            return true;
        auto ns = signature(to, p, i);
        return static_cast<int>(ns.normal.size()) > t && is_p_regular(remove_nodes(to, {ns.normal[t]}), p);
    }
    case Rule::RFixedTop: {
        if (p <= 2 || from.empty())
            return false;
        int a = from[0] - 1;
        int c = 0;
        while (c < height(from) && from[c] == a + 1)
            ++c;
        if (a < 1)
            return false;
        for (int k = c + 1; k <= c + p - 2; ++k)
            if (part(from, k) != a)
                return false;
        if (part(from, c + p - 1) != a - 1)
            return false;
        Node A{c, a + 1}, B{c + p - 1, a};
        auto sig = signature(from, p, node_residue(A, p));
        if (sig.good() != A || sig.cogood() != B)
            return false;
        return remove_nodes(from, {A}) == to;
    }
    case Rule::RTrick2: {
        int i = residue();
        int m = s.params.at("m").get<int>();
        auto chain = s.params.at("chain").get<std::vector<Partition>>();
        if (m < 2 || static_cast<int>(chain.size()) != m - 1)
            return false;
        Partition cur = from;
        for (int k = 1; k <= m - 1; ++k) {
            int res = mod(i + k, p);
            auto sig = signature(cur, p, res);
            if (sig.epsilon != 0)
                return false;
            auto next = f_tilde(cur, p, res, sig.phi);
            if (!next || *next != chain[k - 1])
                return false;
            cur = *next;
        }
        int fin = mod(i + m, p);
        auto sig = signature(cur, p, fin);
        if (sig.epsilon == 0 || sig.phi == 0)
            return false;
        auto ab = add_nodes(remove_nodes(cur, {*sig.good()}), {*sig.cogood()});
        return is_p_regular(ab, p) && e_tilde(cur, p, fin, sig.epsilon) == to;
    }
    default:
        return false;
    }
}

} // namespace

bool validate(const Certificate& cert)
{
    try {
        int p = cert.p;
        if (p <= 2 || !is_prime(p) || !cert.terminal || !is_partition(cert.start) || !is_p_regular(cert.start, p))
            return false;
        std::unordered_set<Partition, PartitionHash> seen{cert.start};
        Partition cur = cert.start;
        for (const auto& s : cert.steps) {
            if (is_terminal(s.rule) || s.from != cur || !is_partition(s.to))
                return false;
            if (!check_step(s, p))
                return false;
            if (!seen.insert(s.to).second)
                return false;
            cur = s.to;
        }
        return check_terminal(cur, p, *cert.terminal);
    } catch (const std::exception&) {
        return false;
    }
}

// ---------------------------------------------------------------- JSON

json to_json(const Certificate& cert)
{
    json steps = json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"rule", rule_tag(s.rule)}, {"params", s.params}, {"from", s.from}, {"to", s.to}});
    json terminal = nullptr;
    if (cert.terminal)
        terminal = {{"rule", rule_tag(cert.terminal->rule)}, {"params", cert.terminal->params}};
    return {{"p", cert.p},
            {"start", cert.start},
            {"steps", steps},
            {"terminal", terminal},
            {"status", cert.certified() ? "CERTIFIED" : "UNKNOWN"}};
}

Certificate certificate_from_json(const json& j)
{
    Certificate c;
    c.p = j.at("p").get<int>();
    c.start = j.at("start").get<Partition>();
    for (const auto& s : j.at("steps"))
        c.steps.push_back({parse_rule(s.at("rule").get<std::string>()), s.at("params"),
                           s.at("from").get<Partition>(), s.at("to").get<Partition>()});
    if (!j.at("terminal").is_null())
        c.terminal = Terminal{parse_rule(j.at("terminal").at("rule").get<std::string>()), j.at("terminal").at("params")};
    return c;
}

} // namespace selfext
