#include "selfext/blocks.hpp"

#include "selfext/abacus.hpp"

#include <functional>

namespace selfext {

BlockId block_of(const Partition& l, int p)
{
    auto [core, weight] = core_and_weight(l, p);
    return {core, weight, p};
}

namespace {

void for_each_multipartition(int p, int d, const std::function<void(const std::vector<Partition>&)>& f)
{
    std::vector<Partition> cur(p);
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == p - 1) {
            for (const auto& q : partitions_of(left)) {
                cur[j] = q;
                f(cur);
            }
            return;
        }
        for (int w = 0; w <= left; ++w)
            for (const auto& q : partitions_of(w)) {
                cur[j] = q;
                rec(j + 1, left - w);
            }
    };
    rec(0, d);
}

} // namespace

std::vector<Partition> enumerate_block(const BlockId& b, bool regular_only)
{
    if (!is_core(b.core, b.p))
        throw ContractError("block label needs a p-core");
    // d extra full rows leave room for any component of size <= d.
    auto g = display(b.core, b.p, height(b.core) + b.p * b.weight);
    auto base = quotient(g);
    std::vector<Partition> out;
    for_each_multipartition(b.p, b.weight, [&](const std::vector<Partition>& quot) {
        std::vector<int> positions;
        for (int j = 0; j < b.p; ++j)
            for (int row : rows_for(quot[j], base.beads[j]))
                positions.push_back(j + b.p * row);
        auto l = from_beta(positions);
        if (!regular_only || is_p_regular(l, b.p))
            out.push_back(std::move(l));
    });
    return out;
}

long long multipartition_count(int p, int d)
{
    // coefficients of prod_k (1 - x^k)^{-p}
    std::vector<long long> c(d + 1, 0);
    c[0] = 1;
    for (int rep = 0; rep < p; ++rep)
        for (int k = 1; k <= d; ++k)
            for (int n = k; n <= d; ++n)
                c[n] += c[n - k];
    return c[d];
}

std::optional<int> rouquier_display(const Partition& core, int p, int d)
{
    if (!is_core(core, p))
        throw ContractError("Rouquier test needs a p-core");
    for (int n = height(core); n < height(core) + p; ++n) {
        auto s = quotient(display_exact(core, p, n));
        bool ok = true;
        for (int i = 0; i + 1 < p && ok; ++i)
            ok = s.beads[i + 1] - s.beads[i] >= d - 1;
        if (ok)
            return n;
    }
    return std::nullopt;
}

bool is_rouquier(const Partition& core, int p, int d)
{
    return rouquier_display(core, p, d).has_value();
}

bool is_rock_block(const Partition& l, int p)
{
    auto b = block_of(l, p);
    return is_rouquier(b.core, p, b.weight);
}

} // namespace selfext
