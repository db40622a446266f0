#include "selfext/signatures.hpp"

#include "selfext/abacus.hpp"

#include <algorithm>

namespace selfext {

std::optional<Node> SignatureReport::good() const
{
    if (normal.empty())
        return std::nullopt;
    return normal.front();
}

std::optional<Node> SignatureReport::cogood() const
{
    if (conormal.empty())
        return std::nullopt;
    return conormal.front();
}

namespace {

std::vector<Node> residue_nodes(const std::vector<Node>& nodes, int p, int i)
{
    std::vector<Node> out;
    for (Node a : nodes)
        if (node_residue(a, p) == i)
            out.push_back(a);
    return out;
}

void require_regular(const Partition& l, int p)
{
    if (!is_p_regular(l, p))
        throw ContractError("partition " + format_partition(l) + " is not " + std::to_string(p) + "-regular");
}

} // namespace

SignatureReport signature(const Partition& l, int p, int i)
{
    SignatureReport rep;
    rep.residue = i;
    auto rem = residue_nodes(removable_nodes(l), p, i);
    auto add = residue_nodes(addable_nodes(l), p, i);
    rep.epsilon_prime = static_cast<int>(rem.size());
    rep.phi_prime = static_cast<int>(add.size());
    for (Node a : rem)
        rep.signature.push_back({a, '-'});
    for (Node b : add)
        rep.signature.push_back({b, '+'});
    std::sort(rep.signature.begin(), rep.signature.end(),
              [](const SignedNode& x, const SignedNode& y) { return x.node.row > y.node.row; });

    std::vector<SignedNode> stack;
    for (const auto& s : rep.signature) {
        if (s.sign == '+' && !stack.empty() && stack.back().sign == '-')
            stack.pop_back();
        else
            stack.push_back(s);
    }
    for (const auto& s : stack) {
        rep.reduced += s.sign;
        if (s.sign == '-')
            rep.normal.push_back(s.node);
        else
            rep.conormal.push_back(s.node);
    }
    std::reverse(rep.conormal.begin(), rep.conormal.end());
    rep.epsilon = static_cast<int>(rep.normal.size());
    rep.phi = static_cast<int>(rep.conormal.size());
    return rep;
}

int epsilon(const Partition& l, int p, int i)
{
    return signature(l, p, i).epsilon;
}

int phi(const Partition& l, int p, int i)
{
    return signature(l, p, i).phi;
}

std::optional<Partition> e_tilde(const Partition& l, int p, int i, int r)
{
    require_regular(l, p);
    auto s = signature(l, p, i);
    if (r < 0 || r > s.epsilon)
        return std::nullopt;
    return remove_nodes(l, {s.normal.begin(), s.normal.begin() + r});
}

std::optional<Partition> f_tilde(const Partition& l, int p, int i, int r)
{
    require_regular(l, p);
    auto s = signature(l, p, i);
    if (r < 0 || r > s.phi)
        return std::nullopt;
    return add_nodes(l, {s.conormal.begin(), s.conormal.begin() + r});
}

std::optional<Partition> e_hat(const Partition& l, int p, int i, int r)
{
    auto rem = residue_nodes(removable_nodes(l), p, i);
    if (r < 0 || r > static_cast<int>(rem.size()))
        return std::nullopt;
    // bottom r of them
    return remove_nodes(l, {rem.end() - r, rem.end()});
}

std::optional<Partition> f_hat(const Partition& l, int p, int i, int r)
{
    auto add = residue_nodes(addable_nodes(l), p, i);
    if (r < 0 || r > static_cast<int>(add.size()))
        return std::nullopt;
    return add_nodes(l, {add.begin(), add.begin() + r});
}

Partition e_top(const Partition& l, int p, int i)
{
    return *e_tilde(l, p, i, epsilon(l, p, i));
}

Partition f_top(const Partition& l, int p, int i)
{
    return *f_tilde(l, p, i, phi(l, p, i));
}

int weight_delta(const Partition& l, int p, int i, int r)
{
    auto s = signature(l, p, i);
    if (r < 0 || r > s.phi)
        throw ContractError("weight_delta needs 0 <= r <= phi");
    return r * (s.phi - s.epsilon - r);
}

bool is_difficult(const Partition& l, int p, int i)
{
    require_regular(l, p);
    auto s = signature(l, p, i);
    if (s.epsilon == 0 || s.phi == 0)
        return false;
    auto m = add_nodes(remove_nodes(l, {*s.good()}), {*s.cogood()});
    return !is_p_regular(m, p);
}

bool difficult_abacus_check(const Partition& l, int p, int i)
{
    auto s = signature(l, p, i);
    if (s.epsilon == 0 || s.phi == 0)
        throw ContractError("difficulty pattern needs epsilon, phi > 0");
    auto g = display(l, p);
    int a = node_position(g, *s.good());
    int b = node_position(g, *s.cogood());
    if (a != b + p)
        return false;
    for (int c = b + 1; c < a - 1; ++c)
        if (!g.occupied(c))
            return false;
    return true;
}

bool AdjacencyReport::consistent() const
{
    auto ok = [](const std::vector<AdjacencyEntry>& v) {
        return std::all_of(v.begin(), v.end(), [](const AdjacencyEntry& e) {
            return e.singular == e.prefix_singular && e.singular == e.shifted;
        });
    };
    return ok(removal) && ok(addition);
}

AdjacencyReport node_adjacency_checks(const Partition& l, int p, int i)
{
    require_regular(l, p);
    auto s = signature(l, p, i);
    AdjacencyReport rep;
    for (int r = 1; r <= s.epsilon; ++r) {
        AdjacencyEntry e{r};
        const auto& A = s.normal;
        e.singular = !is_p_regular(remove_nodes(l, {A[r - 1]}), p);
        for (int j = 0; r >= 2 && j <= r - 2 && !e.prefix_singular; ++j) {
            std::vector<Node> nodes(A.begin(), A.begin() + j);
            nodes.push_back(A[r - 1]);
            e.prefix_singular = !is_p_regular(remove_nodes(l, nodes), p);
        }
        e.shifted = r >= 2 && A[r - 1] == Node{A[r - 2].row + 1 - p, A[r - 2].col + 1};
        rep.removal.push_back(e);
    }
    for (int r = 1; r <= s.phi; ++r) {
        AdjacencyEntry e{r};
        const auto& B = s.conormal;
        e.singular = !is_p_regular(add_nodes(l, {B[r - 1]}), p);
        for (int j = 0; r >= 2 && j <= r - 2 && !e.prefix_singular; ++j) {
            std::vector<Node> nodes(B.begin(), B.begin() + j);
            nodes.push_back(B[r - 1]);
            e.prefix_singular = !is_p_regular(add_nodes(l, nodes), p);
        }
        e.shifted = r >= 2 && B[r - 1] == Node{B[r - 2].row + p - 1, B[r - 2].col - 1};
        rep.addition.push_back(e);
    }
    return rep;
}

std::vector<Reflection> reflections(const Partition& l, int p)
{
    require_regular(l, p);
    std::vector<Reflection> out;
    for (int i = 0; i < p; ++i) {
        auto s = signature(l, p, i);
        if (s.epsilon == 0 && s.phi > 0)
            out.push_back({i, *f_tilde(l, p, i, s.phi), true});
        else if (s.phi == 0 && s.epsilon > 0)
            out.push_back({i, *e_tilde(l, p, i, s.epsilon), false});
    }
    return out;
}

std::optional<int> fixed_top_shape(const Partition& l, int p)
{
    if (p <= 2 || l.empty() || !is_p_regular(l, p))
        return std::nullopt;
    int a = l[0] - 1;
    if (a < 1)
        return std::nullopt;
    int c = 0;
    while (c < height(l) && l[c] == a + 1)
        ++c;
    for (int k = c + 1; k <= c + p - 2; ++k)
        if (part(l, k) != a)
            return std::nullopt;
    if (part(l, c + p - 1) != a - 1)
        return std::nullopt;
    Node A{c, a + 1};
    Node B{c + p - 1, a};
    int i = node_residue(A, p);
    auto s = signature(l, p, i);
    if (s.good() == A && s.cogood() == B)
        return i;
    return std::nullopt;
}

namespace {

std::vector<std::vector<Node>> subsets(const std::vector<Node>& pool, int r)
{
    std::vector<std::vector<Node>> out;
    int n = static_cast<int>(pool.size());
    if (r < 0 || r > n)
        return out;
    std::vector<int> idx(r);
    for (int k = 0; k < r; ++k)
        idx[k] = k;
    while (true) {
        std::vector<Node> s;
        for (int k : idx)
            s.push_back(pool[k]);
        out.push_back(std::move(s));
        int k = r - 1;
        while (k >= 0 && idx[k] == n - r + k)
            --k;
        if (k < 0)
            break;
        ++idx[k];
        for (int m = k + 1; m < r; ++m)
            idx[m] = idx[m - 1] + 1;
    }
    return out;
}

} // namespace

std::vector<std::vector<Node>> removable_subsets(const Partition& l, int p, int i, int r)
{
    return subsets(residue_nodes(removable_nodes(l), p, i), r);
}

std::vector<std::vector<Node>> addable_subsets(const Partition& l, int p, int i, int r)
{
    return subsets(residue_nodes(addable_nodes(l), p, i), r);
}

} // namespace selfext
