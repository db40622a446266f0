#include "selfext/bijections.hpp"

#include <algorithm>
#include <map>

namespace selfext {

std::pair<Partition, int> remove_p_rim(const Partition& l, int p)
{
    int rows = height(l);
    std::vector<int> removed(rows, 0);
    int total = 0;
    int start = 0;
    while (start < rows) {
        // A segment takes up to p rim nodes, starting at the end of row `start`
        // and moving down; rim nodes of row k are columns λ_{k+1}..λ_k, and the
        // last row contributes all its nodes.
        int left = p;
        int k = start;
        while (true) {
            int next = k + 1 < rows ? l[k + 1] : 1;
            int rim = l[k] - next + 1;
            if (rim < left && k + 1 < rows) {
                removed[k] = rim;
                left -= rim;
                total += rim;
                ++k;
            } else {
                removed[k] = std::min(rim, left);
                total += removed[k];
                ++k;
                break;
            }
        }
        start = k;
    }
    Partition m;
    for (int k = 0; k < rows; ++k)
        if (l[k] - removed[k] > 0)
            m.push_back(l[k] - removed[k]);
    return {m, total};
}

std::vector<SymbolColumn> mullineux_symbol(const Partition& l, int p)
{
    std::vector<SymbolColumn> cols;
    Partition cur = l;
    while (!cur.empty()) {
        auto [rest, rim] = remove_p_rim(cur, p);
        cols.push_back({rim, height(cur)});
        cur = std::move(rest);
    }
    return cols;
}

namespace {

// All partitions λ with `rows` rows whose p-rim has `rim` nodes and leaves mu.
// Rows are decided top to bottom; within a segment the rim leaves row k at
// column mu_k + 1, so the next row is forced until the segment is used up.
class RimInverse {
public:
    RimInverse(const Partition& mu, int rim, int rows, int p) : mu_(mu), rim_(rim), rows_(rows), p_(p) {}

    std::vector<Partition> solve()
    {
        for (int first = m(0) + 1; first <= m(0) + p_; ++first) {
            cur_ = {first};
            walk(0, first, p_, 0);
        }
        return out_;
    }

private:
    int m(int k) const { return k < height(mu_) ? mu_[k] : 0; }

    void walk(int k, int len, int left, int used)
    {
        bool last = k == rows_ - 1;
        int d = len - m(k);
        if (d < left) {
            if (last) {
                if (m(k) == 0 && used + d == rim_)
                    out_.push_back(cur_);
                return;
            }
            int next = m(k) + 1;
            if (next > len)
                return;
            cur_.push_back(next);
            walk(k + 1, next, left - d, used + d);
            cur_.pop_back();
        } else if (d == left) {
            if (last) {
                if (used + d == rim_)
                    out_.push_back(cur_);
                return;
            }
            int hi = std::min({m(k + 1) + p_, m(k) + 1, len});
            for (int next = m(k + 1) + 1; next <= hi; ++next) {
                cur_.push_back(next);
                walk(k + 1, next, p_, used + d);
                cur_.pop_back();
            }
        }
    }

    Partition mu_;
    int rim_, rows_, p_;
    Partition cur_;
    std::vector<Partition> out_;
};

} // namespace

Partition from_mullineux_symbol(const std::vector<SymbolColumn>& symbol, int p)
{
    Partition cur;
    for (auto it = symbol.rbegin(); it != symbol.rend(); ++it) {
        auto cands = RimInverse(cur, it->rim, it->rows, p).solve();
        std::vector<Partition> regular;
        for (auto& c : cands)
            if (is_p_regular(c, p))
                regular.push_back(std::move(c));
        if (regular.size() != 1)
            throw ContractError("not a Mullineux symbol of a p-regular partition");
        cur = std::move(regular.front());
    }
    return cur;
}

Partition mullineux(const Partition& l, int p)
{
    if (!is_p_regular(l, p))
        throw ContractError("Mullineux map needs a p-regular partition");
    auto sym = mullineux_symbol(l, p);
    for (auto& c : sym)
        c.rows = c.rim - c.rows + (c.rim % p != 0 ? 1 : 0);
    return from_mullineux_symbol(sym, p);
}

Partition regularize(const Partition& l, int p)
{
    std::map<int, int> ladder;
    for (int i = 1; i <= height(l); ++i)
        for (int j = 1; j <= l[i - 1]; ++j)
            ++ladder[i + (p - 1) * (j - 1)];
    std::vector<std::vector<int>> cols; // columns filled in each row
    for (auto [L, count] : ladder) {
        int j = (L - 1) / (p - 1) + 1; // rightmost column the ladder reaches
        for (; count > 0; --j) {
            int i = L - (p - 1) * (j - 1);
            if (static_cast<int>(cols.size()) < i)
                cols.resize(i);
            cols[i - 1].push_back(j);
            --count;
        }
    }
    Partition r;
    for (auto& c : cols) {
        std::sort(c.begin(), c.end());
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != static_cast<int>(k) + 1)
                throw ContractError("ladder filling did not give a diagram");
        if (!c.empty())
            r.push_back(static_cast<int>(c.size()));
    }
    if (!is_partition(r) || r.size() != cols.size())
        throw ContractError("ladder filling did not give a partition");
    return r;
}

AbacusDisplay regularize_display(const AbacusDisplay& g)
{
    return display_exact(regularize(decode(g), g.p), g.p, g.beads);
}

} // namespace selfext
