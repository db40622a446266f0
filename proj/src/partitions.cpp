#include "selfext/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace selfext {

std::size_t PartitionHash::operator()(const Partition& l) const noexcept
{
    std::size_t h = l.size();
    for (int x : l)
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool is_partition(const Partition& l)
{
    for (std::size_t k = 0; k < l.size(); ++k) {
        if (l[k] <= 0)
            return false;
        if (k > 0 && l[k] > l[k - 1])
            return false;
    }
    return true;
}

Partition normalize(std::vector<int> parts)
{
    for (int x : parts)
        if (x < 0)
            throw ContractError("negative part");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return parts;
}

int size(const Partition& l)
{
    return std::accumulate(l.begin(), l.end(), 0);
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

bool is_p_regular(const Partition& l, int p)
{
    int run = 0;
    for (std::size_t k = 0; k < l.size(); ++k) {
        run = (k > 0 && l[k] == l[k - 1]) ? run + 1 : 1;
        if (run >= p)
            return false;
    }
    return true;
}

bool is_p_restricted(const Partition& l, int p)
{
    for (int k = 1; k <= height(l); ++k)
        if (part(l, k) - part(l, k + 1) >= p)
            return false;
    return true;
}

Partition transpose(const Partition& l)
{
    if (l.empty())
        return {};
    Partition t(l[0], 0);
    for (int x : l)
        for (int c = 0; c < x; ++c)
            ++t[c];
    return t;
}

bool dominates(const Partition& l, const Partition& m)
{
    if (size(l) != size(m))
        throw ContractError("dominance compares partitions of different sizes");
    int a = 0, b = 0;
    int len = std::max(height(l), height(m));
    for (int k = 1; k <= len; ++k) {
        a += part(l, k);
        b += part(m, k);
        if (a < b)
            return false;
    }
    return true;
}

int node_residue(Node a, int p)
{
    int r = (a.col - a.row) % p;
    return r < 0 ? r + p : r;
}

std::vector<int> content(const Partition& l, int p)
{
    std::vector<int> c(p, 0);
    for (int r = 1; r <= height(l); ++r)
        for (int col = 1; col <= l[r - 1]; ++col)
            ++c[node_residue({r, col}, p)];
    return c;
}

std::vector<Node> removable_nodes(const Partition& l)
{
    std::vector<Node> out;
    for (int r = 1; r <= height(l); ++r)
        if (part(l, r) > part(l, r + 1))
            out.push_back({r, l[r - 1]});
    return out;
}

std::vector<Node> addable_nodes(const Partition& l)
{
    std::vector<Node> out;
    for (int r = 1; r <= height(l) + 1; ++r)
        if (r == 1 || part(l, r - 1) > part(l, r))
            out.push_back({r, part(l, r) + 1});
    return out;
}

bool contains(const Partition& l, Node a)
{
    return a.row >= 1 && a.col >= 1 && part(l, a.row) >= a.col;
}

Partition remove_nodes(const Partition& l, const std::vector<Node>& nodes)
{
    Partition m = l;
    auto sorted = nodes;
    std::sort(sorted.begin(), sorted.end(), [](Node x, Node y) { return x.col > y.col; });
    for (Node a : sorted) {
        if (a.row < 1 || a.row > height(m) || m[a.row - 1] != a.col)
            throw ContractError("node is not at the end of its row");
        --m[a.row - 1];
    }
    while (!m.empty() && m.back() == 0)
        m.pop_back();
    if (!is_partition(m))
        throw ContractError("removing nodes does not give a partition");
    return m;
}

Partition add_nodes(const Partition& l, const std::vector<Node>& nodes)
{
    Partition m = l;
    auto sorted = nodes;
    std::sort(sorted.begin(), sorted.end(), [](Node x, Node y) { return x.col < y.col; });
    for (Node a : sorted) {
        if (a.row < 1)
            throw ContractError("bad node");
        if (static_cast<int>(m.size()) < a.row)
            m.resize(a.row, 0);
        if (m[a.row - 1] != a.col - 1)
            throw ContractError("node is not just past the end of its row");
        ++m[a.row - 1];
    }
    if (!is_partition(m))
        throw ContractError("adding nodes does not give a partition");
    return m;
}

namespace {

void gen_partitions(int n, int maxpart, Partition& cur, const std::function<void(const Partition&)>& f)
{
    if (n == 0) {
        f(cur);
        return;
    }
    for (int x = std::min(n, maxpart); x >= 1; --x) {
        cur.push_back(x);
        gen_partitions(n - x, x, cur, f);
        cur.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& f)
{
    Partition cur;
    gen_partitions(n, n, cur, f);
}

std::vector<Partition> partitions_bounded(int n, int maxpart)
{
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, maxpart, cur, [&](const Partition& l) { out.push_back(l); });
    return out;
}

std::vector<Partition> partitions_of(int n)
{
    return partitions_bounded(n, n);
}

namespace {

int parse_int(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ContractError("malformed partition: '" + std::string(s) + "'");
    return v;
}

} // namespace

Partition parse_partition(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '(' || text.front() == '['))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == ')' || text.back() == ']'))
        text.remove_suffix(1);
    if (text.empty() || text == "-" || text == "0")
        return {};
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        auto caret = item.find('^');
        int value = parse_int(item.substr(0, caret));
        int mult = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1));
        if (value <= 0 || mult < 0)
            throw ContractError("malformed partition: parts must be positive");
        parts.insert(parts.end(), mult, value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (!is_partition(parts))
        throw ContractError("malformed partition: parts must be weakly decreasing");
    return parts;
}

std::string format_partition(const Partition& l)
{
    if (l.empty())
        return "-";
    std::string s;
    for (std::size_t k = 0; k < l.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(l[k]);
    }
    return s;
}

std::string pretty_partition(const Partition& l)
{
    if (l.empty())
        return "()";
    std::string s = "(";
    for (std::size_t k = 0; k < l.size();) {
        std::size_t e = k;
        while (e < l.size() && l[e] == l[k])
            ++e;
        if (k)
            s += ',';
        s += std::to_string(l[k]);
        if (e - k > 1)
            s += '^' + std::to_string(e - k);
        k = e;
    }
    return s + ")";
}

} // namespace selfext
