#include "selfext/specht.hpp"

#include "selfext/bijections.hpp"
#include "selfext/blocks.hpp"
#include "selfext/signatures.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace selfext {

namespace {

// Memo shared by every thread: readers take a shared lock, a miss computes
// outside the lock and inserts under an exclusive one. Racing writers compute
// the same value, so a lost insert is harmless.
class SpechtMemo {
public:
    std::optional<std::optional<SpechtWitness>> find(int p, const Partition& l)
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find({p, l});
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    void insert(int p, const Partition& l, const std::optional<SpechtWitness>& w)
    {
        std::unique_lock lock(mutex_);
        table_.emplace(std::make_pair(p, l), w);
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<int, Partition>, std::optional<SpechtWitness>> table_;
};

SpechtMemo& memo()
{
    static SpechtMemo m;
    return m;
}

bool runner_pair_ok(const AbacusDisplay& g, const RunnerStats& s, int j, int k)
{
    int p = g.p;
    for (int l = 0; l < p; ++l)
        if (l != j && l != k && !s.quotient[l].empty())
            return false;
    // first gap on runner j; nothing off runner j may sit beyond it
    int gap = j;
    while (g.occupied(gap))
        gap += p;
    for (int x : g.positions) {
        if (x <= gap)
            break;
        if (x % p != j)
            return false;
    }
    // last bead on runner k; everything off runner k before it is occupied
    int last = -1;
    for (int x : g.positions)
        if (x % p == k) {
            last = x;
            break;
        }
    for (int x = 0; x < last; ++x)
        if (x % p != k && !g.occupied(x))
            return false;
    return true;
}

std::optional<SpechtWitness> compute_witness(const Partition& l, int p);

std::optional<SpechtWitness> cached_witness(const Partition& l, int p)
{
    if (auto hit = memo().find(p, l))
        return *hit;
    auto w = compute_witness(l, p);
    memo().insert(p, l, w);
    return w;
}

std::optional<SpechtWitness> compute_witness(const Partition& l, int p)
{
    if (l.empty())
        return SpechtWitness{};
    int h = height(l);
    for (int n = h; n < h + p; ++n) {
        auto g = display_exact(l, p, n);
        auto s = quotient(g);
        for (int j = 0; j < p; ++j)
            for (int k = 0; k < p; ++k) {
                if (!runner_pair_ok(g, s, j, k))
                    continue;
                const auto& qj = s.quotient[j];
                const auto& qk = s.quotient[k];
                if (!is_p_regular(qj, p) || !is_p_restricted(qk, p))
                    continue;
                SpechtWitness w{n, j, k, qj, qk, {}};
                bool ok = true;
                for (const auto* q : {&qj, &qk}) {
                    if (q->empty())
                        continue;
                    auto inner = cached_witness(*q, p);
                    if (!inner) {
                        ok = false;
                        break;
                    }
                    w.inner.push_back(*inner);
                }
                if (ok)
                    return w;
            }
    }
    return std::nullopt;
}

} // namespace

std::optional<SpechtWitness> specht_witness(const Partition& l, int p)
{
    if (p < 3)
        throw ContractError("the irreducibility criterion is used for p > 2 only");
    return cached_witness(l, p);
}

bool specht_irreducible(const Partition& l, int p)
{
    return specht_witness(l, p).has_value();
}

SpecialRunners special_runners(const Partition& l, int p)
{
    auto w = specht_witness(l, p);
    if (!w)
        throw ContractError("special runners need an irreducible Specht module");
    SpecialRunners out;
    out.beads = w->beads;
    if (!is_p_restricted(l, p))
        out.non_restricted = w->j;
    if (!is_p_regular(l, p))
        out.non_regular = w->k;
    return out;
}

std::optional<Partition> irreducible_specht_preimage(const Partition& mu, int p)
{
    if (!is_p_regular(mu, p))
        throw ContractError("preimage search needs a p-regular partition");
    if (specht_irreducible(mu, p))
        return mu;
    for (const auto& nu : enumerate_block(block_of(mu, p))) {
        if (nu == mu || is_p_regular(nu, p) || !dominates(mu, nu))
            continue;
        if (regularize(nu, p) == mu && specht_irreducible(nu, p))
            return nu;
    }
    return std::nullopt;
}

std::optional<SpechtReduction> theorem_b_applicable(const Partition& l, int p)
{
    if (!is_p_regular(l, p))
        throw ContractError("irreducible Specht reduction needs a p-regular partition");
    for (int i = 0; i < p; ++i) {
        int eps = epsilon(l, p, i);
        auto mu = e_top(l, p, i);
        if (auto nu = irreducible_specht_preimage(mu, p))
            return SpechtReduction{i, eps, mu, *nu};
    }
    return std::nullopt;
}

} // namespace selfext
