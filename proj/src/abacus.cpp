#include "selfext/abacus.hpp"

#include <algorithm>
#include <functional>

namespace selfext {

bool AbacusDisplay::occupied(int pos) const
{
    return std::binary_search(positions.begin(), positions.end(), pos, std::greater<>());
}

std::vector<int> beta_numbers(const Partition& l, int beads)
{
    if (beads < height(l))
        throw ContractError("bead count below the number of parts");
    std::vector<int> b(beads);
    for (int i = 1; i <= beads; ++i)
        b[i - 1] = part(l, i) + beads - i;
    return b;
}

Partition from_beta(std::vector<int> positions)
{
    std::sort(positions.begin(), positions.end(), std::greater<>());
    int n = static_cast<int>(positions.size());
    Partition l;
    for (int i = 1; i <= n; ++i) {
        int x = positions[i - 1] - (n - i);
        if (x < 0)
            throw ContractError("repeated bead position");
        if (x > 0)
            l.push_back(x);
    }
    return l;
}

AbacusDisplay display_exact(const Partition& l, int p, int beads)
{
    return {p, beads, beta_numbers(l, beads)};
}

AbacusDisplay display(const Partition& l, int p, int beads)
{
    auto g = display_exact(l, p, beads);
    if (g.positions.empty() || g.positions.back() != 0)
        g = add_full_row(g);
    return g;
}

AbacusDisplay display(const Partition& l, int p)
{
    return display(l, p, height(l));
}

Partition decode(const AbacusDisplay& g)
{
    return from_beta(g.positions);
}

AbacusDisplay add_full_row(const AbacusDisplay& g)
{
    AbacusDisplay h{g.p, g.beads + g.p, {}};
    for (int x : g.positions)
        h.positions.push_back(x + g.p);
    for (int x = g.p - 1; x >= 0; --x)
        h.positions.push_back(x);
    return h;
}

std::pair<Partition, int> core_and_weight(const Partition& l, int p)
{
    int n = height(l);
    auto b = beta_numbers(l, n);
    std::vector<int> count(p, 0);
    int weight = 0;
    // Positions in increasing order: each bead slides up to the first free row.
    std::vector<int> pushed;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        int j = *it % p;
        weight += *it / p - count[j];
        pushed.push_back(j + p * count[j]);
        ++count[j];
    }
    return {from_beta(pushed), weight};
}

std::vector<int> runner_rows(const AbacusDisplay& g, int j)
{
    std::vector<int> rows;
    for (auto it = g.positions.rbegin(); it != g.positions.rend(); ++it)
        if (*it % g.p == j)
            rows.push_back(*it / g.p);
    return rows;
}

Partition runner_partition(const std::vector<int>& rows)
{
    // rows increasing; the k-th bead from the bottom gives part rows[r-k] - (r-k).
    std::vector<int> parts;
    int r = static_cast<int>(rows.size());
    for (int k = r - 1; k >= 0; --k) {
        int x = rows[k] - k;
        if (x > 0)
            parts.push_back(x);
    }
    return parts;
}

std::vector<int> rows_for(const Partition& q, int beads)
{
    if (beads < height(q))
        throw ContractError("runner cannot carry its quotient component");
    std::vector<int> rows(beads);
    for (int k = 1; k <= beads; ++k)
        rows[beads - k] = part(q, k) + beads - k;
    return rows;
}

int runner_residue(const AbacusDisplay& g, int j)
{
    int r = (j - g.beads) % g.p;
    return r < 0 ? r + g.p : r;
}

RunnerStats quotient(const AbacusDisplay& g)
{
    RunnerStats s;
    for (int j = 0; j < g.p; ++j) {
        auto rows = runner_rows(g, j);
        s.beads.push_back(static_cast<int>(rows.size()));
        s.quotient.push_back(runner_partition(rows));
        s.weights.push_back(size(s.quotient.back()));
        s.residues.push_back(runner_residue(g, j));
    }
    return s;
}

int node_position(const AbacusDisplay& g, Node a)
{
    return a.col - a.row + g.beads;
}

Node position_node(const AbacusDisplay& g, int pos)
{
    if (g.occupied(pos)) {
        // removable: the bead of row i sits at pos
        auto it = std::find(g.positions.begin(), g.positions.end(), pos);
        int row = static_cast<int>(it - g.positions.begin()) + 1;
        return {row, pos - g.beads + row};
    }
    // addable: the bead at pos - 1 moves right
    auto it = std::find(g.positions.begin(), g.positions.end(), pos - 1);
    if (it == g.positions.end())
        throw ContractError("position is neither removable nor addable");
    int row = static_cast<int>(it - g.positions.begin()) + 1;
    return {row, pos - g.beads + row};
}

AbacusDisplay transpose_display(const AbacusDisplay& g, int window)
{
    int w = window;
    if (w == 0) {
        w = std::max(g.max_position() + 1, g.beads);
        w = (w + g.p - 1) / g.p * g.p;
    }
    if (w % g.p != 0 || w <= g.max_position() || w < g.beads)
        throw ContractError("transpose window must be a multiple of p containing every bead");
    AbacusDisplay t{g.p, 0, {}};
    for (int x = 0; x < w; ++x)
        if (!g.occupied(w - 1 - x))
            t.positions.push_back(x);
    std::reverse(t.positions.begin(), t.positions.end());
    t.beads = static_cast<int>(t.positions.size());
    if (t.positions.empty() || t.positions.back() != 0)
        t = add_full_row(t);
    return t;
}

std::vector<int> removable_positions(const AbacusDisplay& g)
{
    std::vector<int> out;
    for (auto it = g.positions.rbegin(); it != g.positions.rend(); ++it)
        if (*it > 0 && !g.occupied(*it - 1))
            out.push_back(*it);
    return out;
}

std::vector<int> addable_positions(const AbacusDisplay& g)
{
    std::vector<int> out;
    for (auto it = g.positions.rbegin(); it != g.positions.rend(); ++it)
        if (!g.occupied(*it + 1))
            out.push_back(*it + 1);
    return out;
}

Partition decode_config(const RunnerConfig& cfg, int p)
{
    if (static_cast<int>(cfg.runners.size()) != p)
        throw ContractError("configuration needs exactly p runners");
    int lift = 0;
    for (const auto& [q, off] : cfg.runners)
        lift = std::max(lift, height(q) - off);
    std::vector<int> positions;
    for (int j = 0; j < p; ++j) {
        const auto& [q, off] = cfg.runners[j];
        for (int row : rows_for(q, off + lift))
            positions.push_back(j + p * row);
    }
    return from_beta(positions);
}

RunnerConfig config_of(const AbacusDisplay& g)
{
    auto s = quotient(g);
    int base = *std::min_element(s.beads.begin(), s.beads.end());
    RunnerConfig cfg;
    for (int j = 0; j < g.p; ++j)
        cfg.runners.emplace_back(s.quotient[j], s.beads[j] - base);
    return cfg;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

// Split on commas at nesting depth zero.
std::vector<std::string_view> split_top(std::string_view s)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(')
            ++depth;
        else if (s[k] == ')')
            --depth;
        else if (s[k] == ',' && depth == 0) {
            out.push_back(trim(s.substr(start, k - start)));
            start = k + 1;
        }
        if (depth < 0)
            throw ContractError("unbalanced parentheses in configuration");
    }
    if (depth != 0)
        throw ContractError("unbalanced parentheses in configuration");
    out.push_back(trim(s.substr(start)));
    return out;
}

std::string_view strip_parens(std::string_view s)
{
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ContractError("expected a parenthesized group: '" + std::string(s) + "'");
    return s.substr(1, s.size() - 2);
}

} // namespace

RunnerConfig parse_config(std::string_view text)
{
    RunnerConfig cfg;
    for (auto item : split_top(strip_parens(text))) {
        int mult = 1;
        auto close = item.rfind(')');
        if (close != std::string_view::npos && close + 1 < item.size()) {
            auto tail = trim(item.substr(close + 1));
            if (tail.empty() || tail.front() != '^')
                throw ContractError("bad runner repetition");
            mult = std::stoi(std::string(tail.substr(1)));
            item = item.substr(0, close + 1);
        }
        auto fields = split_top(strip_parens(item));
        if (fields.size() != 2)
            throw ContractError("runner must be (partition,offset)");
        auto qtext = fields[0];
        Partition q;
        if (qtext != "-" && qtext != "∅" && qtext != "\\varnothing")
            q = parse_partition(strip_parens(qtext));
        int off = std::stoi(std::string(fields[1]));
        for (int k = 0; k < mult; ++k)
            cfg.runners.emplace_back(q, off);
    }
    return cfg;
}

std::string format_config(const RunnerConfig& cfg)
{
    std::string s = "(";
    for (std::size_t k = 0; k < cfg.runners.size(); ++k) {
        const auto& [q, off] = cfg.runners[k];
        if (k)
            s += ',';
        s += '(';
        s += q.empty() ? "-" : "(" + format_partition(q) + ")";
        s += ',' + std::to_string(off) + ')';
    }
    return s + ")";
}

} // namespace selfext
