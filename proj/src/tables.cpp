#include "selfext/tables.hpp"

#include "selfext/abacus.hpp"
#include "selfext/parallel.hpp"
#include "selfext/signatures.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace selfext {

namespace {

std::set<int> row_set(const Partition& q, int beads)
{
    auto rows = rows_for(q, beads);
    return {rows.begin(), rows.end()};
}

// Signs for the pair scanned top row first (increasing position): a bead on
// the right runner over a gap on the left is removable (-), a bead on the
// left over a gap on the right is addable (+).
LocalSignature scan(const std::set<int>& left, const std::set<int>& right)
{
    LocalSignature s;
    int top = 0;
    if (!left.empty())
        top = std::max(top, *left.rbegin());
    if (!right.empty())
        top = std::max(top, *right.rbegin());
    std::vector<std::pair<char, int>> stack;
    for (int row = 0; row <= top + 1; ++row) {
        bool l = left.count(row) > 0, r = right.count(row) > 0;
        if (r && !l)
            stack.emplace_back('-', row);
        else if (l && !r) {
            if (!stack.empty() && stack.back().first == '-')
                stack.pop_back();
            else
                stack.emplace_back('+', row);
        }
    }
    for (auto [c, row] : stack) {
        s.reduced += c;
        (c == '-' ? s.normal_rows : s.conormal_rows).push_back(row);
    }
    std::reverse(s.conormal_rows.begin(), s.conormal_rows.end());
    s.epsilon = static_cast<int>(s.normal_rows.size());
    s.phi = static_cast<int>(s.conormal_rows.size());
    return s;
}

std::optional<int> difficult_row(const std::set<int>& left, const std::set<int>& right)
{
    auto s = scan(left, right);
    if (s.epsilon == 0 || s.phi == 0)
        return std::nullopt;
    int good = s.normal_rows.front();
    int cogood = s.conormal_rows.front();
    if (cogood != good - 1)
        return std::nullopt;
    return good;
}

int left_beads(const RunnerPair& pair)
{
    return std::max({height(pair.left), height(pair.right) - pair.gap, 0}) + 1;
}

} // namespace

LocalSignature local_signature(const RunnerPair& pair)
{
    int rl = left_beads(pair);
    int rr = rl + pair.gap;
    auto s = scan(row_set(pair.left, rl), row_set(pair.right, rr));
    s.left_beads = rl;
    s.right_beads = rr;
    return s;
}

bool locally_difficult(const RunnerPair& pair)
{
    if (pair.gap < 1)
        throw ContractError("runner pair needs a positive bead-count gap");
    int rl = left_beads(pair);
    return difficult_row(row_set(pair.left, rl), row_set(pair.right, rl + pair.gap)).has_value();
}

std::vector<RunnerPair> derive_table1(int max_weight)
{
    std::vector<int> weights;
    for (int w = 2; w <= max_weight; ++w)
        weights.push_back(w);
    auto per_weight = parallel_map(weights, [](int w) {
        std::vector<RunnerPair> rows;
        for (int wl = 0; wl <= w; ++wl)
            for (const auto& l : partitions_of(wl))
                for (const auto& r : partitions_of(w - wl))
                    for (int g = 1; g < w; ++g) {
                        RunnerPair pr{l, r, g};
                        if (locally_difficult(pr))
                            rows.push_back(pr);
                    }
        std::sort(rows.begin(), rows.end(), [](const RunnerPair& a, const RunnerPair& b) {
            if (a.gap != b.gap)
                return a.gap > b.gap;
            if (a.right != b.right)
                return a.right < b.right;
            return a.left < b.left;
        });
        return rows;
    });
    std::vector<RunnerPair> out;
    for (auto& v : per_weight)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<std::pair<RunnerPair, RunnerPair>> table2_candidates(const std::vector<RunnerPair>& table1, int max_weight)
{
    std::vector<std::pair<RunnerPair, RunnerPair>> out;
    for (const auto& x : table1)
        for (const auto& y : table1)
            if (x.right == y.left && size(x.left) + size(x.right) + size(y.right) <= max_weight)
                out.emplace_back(x, y);
    return out;
}

std::vector<RunnerTriple> derive_table2(int max_weight)
{
    std::vector<RunnerTriple> out;
    for (const auto& [x, y] : table2_candidates(derive_table1(max_weight), max_weight)) {
        RunnerTriple t{x.left, x.right, y.right, x.gap, x.gap + y.gap};
        int r0 = std::max({height(t.first), height(t.middle) - t.gap1, height(t.last) - t.gap2, 0}) + 1;
        auto a = row_set(t.first, r0);
        auto b = row_set(t.middle, r0 + t.gap1);
        auto c = row_set(t.last, r0 + t.gap2);
        // Both pairs difficult, and the positions strictly between each
        // cogood/good window that fall on the third runner are occupied.
        auto upper = difficult_row(b, c);
        auto lower = difficult_row(a, b);
        if (upper && lower && a.count(*upper) && c.count(*lower - 1))
            out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------- witnesses

namespace {

// Runners [s, s+k) carry the given components and bead counts; the runners
// before get `before` beads, the ones after get `after`, all empty.
Partition embed(const std::vector<std::pair<Partition, int>>& seg, int s, int before, int after, int p)
{
    std::vector<int> positions;
    int k = static_cast<int>(seg.size());
    for (int j = 0; j < p; ++j) {
        Partition q;
        int beads = j < s ? before : after;
        if (j >= s && j < s + k) {
            q = seg[j - s].first;
            beads = seg[j - s].second;
        }
        for (int row : rows_for(q, beads))
            positions.push_back(j + p * row);
    }
    return from_beta(positions);
}

template <typename Accept>
std::optional<Partition> search_embedding(const std::vector<std::pair<Partition, int>>& seg, int p, Accept accept)
{
    int k = static_cast<int>(seg.size());
    int span = 0;
    for (const auto& [q, beads] : seg)
        span = std::max(span, beads + size(q) + 2);
    for (int s = 0; s + k <= p; ++s)
        for (int before = 0; before <= span; ++before)
            for (int after = 0; after <= span; ++after) {
                if ((s == 0 && before > 0) || (s + k == p && after > 0))
                    continue;
                auto l = embed(seg, s, before, after, p);
                if (!is_p_regular(l, p))
                    continue;
                int beads = 0;
                for (int j = 0; j < p; ++j)
                    beads += j < s ? before : (j >= s + k ? after : seg[j - s].second);
                if (accept(l, s, beads))
                    return l;
            }
    // Some configurations need gaps on the other runners: give every other
    // runner the same arbitrary set of occupied rows.
    int rows = std::min(span + 2, 14);
    for (int s = 0; s + k <= p; ++s)
        for (int mask = 0; mask < (1 << rows); ++mask) {
            std::vector<int> positions;
            for (int j = 0; j < p; ++j) {
                if (j >= s && j < s + k) {
                    for (int row : rows_for(seg[j - s].first, seg[j - s].second))
                        positions.push_back(j + p * row);
                    continue;
                }
                for (int row = 0; row < rows; ++row)
                    if (mask >> row & 1)
                        positions.push_back(j + p * row);
            }
            auto l = from_beta(positions);
            if (is_p_regular(l, p) && accept(l, s, static_cast<int>(positions.size())))
                return l;
        }
    return std::nullopt;
}

int residue_of_runner(int j, int beads, int p)
{
    int r = (j - beads) % p;
    return r < 0 ? r + p : r;
}

} // namespace

Partition realize_config(const RunnerPair& pair, int p)
{
    if (p < 3)
        throw ContractError("realization needs p >= 3");
    int rl = left_beads(pair);
    std::vector<std::pair<Partition, int>> seg{{pair.left, rl}, {pair.right, rl + pair.gap}};
    auto l = search_embedding(seg, p, [&](const Partition& cand, int s, int beads) {
        return is_difficult(cand, p, residue_of_runner(s + 1, beads, p));
    });
    if (!l)
        throw ContractError("no difficult embedding of " + format_pair(pair) + " at p=" + std::to_string(p));
    return *l;
}

Partition realize_config(const RunnerTriple& t, int p)
{
    if (p < 3)
        throw ContractError("realization needs p >= 3");
    int r0 = std::max({height(t.first), height(t.middle) - t.gap1, height(t.last) - t.gap2, 0}) + 1;
    std::vector<std::pair<Partition, int>> seg{{t.first, r0}, {t.middle, r0 + t.gap1}, {t.last, r0 + t.gap2}};
    auto l = search_embedding(seg, p, [&](const Partition& cand, int s, int beads) {
        int i = residue_of_runner(s + 2, beads, p);
        int im1 = residue_of_runner(s + 1, beads, p);
        return is_difficult(cand, p, i) && is_difficult(cand, p, im1);
    });
    if (!l)
        throw ContractError("no difficult embedding of " + format_triple(t) + " at p=" + std::to_string(p));
    return *l;
}

// ---------------------------------------------------------------- golden files

std::vector<LabeledPair> load_table1(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ContractError("cannot open " + path);
    auto j = nlohmann::json::parse(in);
    std::vector<LabeledPair> out;
    for (const auto& row : j.at("rows"))
        out.push_back({row.at("label").get<std::string>(),
                       {row.at("left").get<Partition>(), row.at("right").get<Partition>(), row.at("gap").get<int>()}});
    return out;
}

std::vector<LabeledTriple> load_table2(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ContractError("cannot open " + path);
    auto j = nlohmann::json::parse(in);
    std::vector<LabeledTriple> out;
    for (const auto& row : j.at("rows")) {
        auto runners = row.at("runners").get<std::vector<Partition>>();
        auto gaps = row.at("gaps").get<std::vector<int>>();
        if (runners.size() != 3 || gaps.size() != 2)
            throw ContractError("malformed Table II row");
        out.push_back({row.at("label").get<std::string>(), {runners[0], runners[1], runners[2], gaps[0], gaps[1]}});
    }
    return out;
}

namespace {

template <typename T, typename Fmt>
TableDiff diff_multisets(const std::vector<T>& expected, const std::vector<T>& derived, Fmt fmt)
{
    TableDiff d;
    d.expected = expected.size();
    d.derived = derived.size();
    std::map<T, int> count;
    for (const auto& x : expected)
        ++count[x];
    for (const auto& x : derived) {
        auto it = count.find(x);
        if (it != count.end() && it->second > 0) {
            --it->second;
            ++d.matched;
        } else {
            d.extra.push_back(fmt(x));
        }
    }
    for (const auto& [x, c] : count)
        for (int k = 0; k < c; ++k)
            d.missing.push_back(fmt(x));
    return d;
}

} // namespace

TableReport verify_tables(const std::string& data_dir, int max_weight)
{
    TableReport rep;
    std::vector<RunnerPair> gold1;
    for (const auto& row : load_table1(data_dir + "/table1.json"))
        if (row.pair.weight() <= max_weight)
            gold1.push_back(row.pair);
    auto t1 = derive_table1(max_weight);
    rep.table1 = diff_multisets(gold1, t1, format_pair);
    rep.table1_counts.assign(max_weight + 1, 0);
    for (const auto& r : t1)
        ++rep.table1_counts[r.weight()];
    if (max_weight >= 7) {
        std::vector<RunnerTriple> gold2;
        for (const auto& row : load_table2(data_dir + "/table2.json"))
            gold2.push_back(row.triple);
        rep.table2 = diff_multisets(gold2, derive_table2(7), format_triple);
    }
    return rep;
}

std::string format_pair(const RunnerPair& pair)
{
    return "(" + pretty_partition(pair.left) + ", " + pretty_partition(pair.right) + ", " + std::to_string(pair.gap) +
           ")";
}

std::string format_triple(const RunnerTriple& t)
{
    return "(" + pretty_partition(t.first) + ", " + pretty_partition(t.middle) + ", " + pretty_partition(t.last) +
           ", " + std::to_string(t.gap1) + ", " + std::to_string(t.gap2) + ")";
}

} // namespace selfext
