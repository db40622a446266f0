#include "selfext/zigzag.hpp"

#include "selfext/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace selfext {

std::string ZigzagLetter::name() const
{
    switch (kind) {
    case E:
        return "e" + std::to_string(i);
    case C:
        return "c" + std::to_string(i);
    default:
        return "a" + std::to_string(i) + "," + std::to_string(j);
    }
}

std::vector<ZigzagLetter> zigzag_letters(int p)
{
    std::vector<ZigzagLetter> out;
    for (int j = 1; j <= p - 1; ++j) {
        out.push_back({ZigzagLetter::E, j, j});
        out.push_back({ZigzagLetter::C, j, j});
    }
    for (int i = 1; i <= p - 1; ++i)
        for (int j = 1; j <= p - 1; ++j)
            if (i - j == 1 || j - i == 1)
                out.push_back({ZigzagLetter::A, i, j});
    return out;
}

namespace {

long long checked_mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ContractError("dimension exceeds 64-bit range");
    return r;
}

long long checked_add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw ContractError("dimension exceeds 64-bit range");
    return r;
}

void check_args(int p, int m, int d)
{
    if (p < 3 || !is_prime(p))
        throw ContractError("zigzag counts need a prime p >= 3");
    if (m < 1 || d < 0)
        throw ContractError("zigzag counts need m >= 1 and d >= 0");
}

} // namespace

long long binomial(long long n, long long k)
{
    if (k == 0)
        return 1;
    if (k < 0 || n < k)
        return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (long long t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;
        if (r > static_cast<__int128>(INT64_MAX))
            throw ContractError("binomial exceeds 64-bit range");
    }
    return static_cast<long long>(r);
}

DimensionReport basis_dimension(int p, int m, int d)
{
    check_args(p, m, d);
    long long mm = static_cast<long long>(m) * m;
    long long e0 = (p - 1) * mm; // e_j triples
    long long e2 = (p - 1) * mm; // c_j triples
    long long odd = odd_letter_count(p) * mm;
    DimensionReport rep;
    rep.by_degree.assign(2 * d + 1, 0);
    for (int k = 0; k <= d; ++k)
        for (int b = 0; k + b <= d; ++b) {
            int a = d - k - b;
            long long c = checked_mul(checked_mul(binomial(e0 + a - 1, a), binomial(e2 + b - 1, b)), binomial(odd, k));
            rep.by_degree[2 * b + k] = checked_add(rep.by_degree[2 * b + k], c);
        }
    for (long long c : rep.by_degree)
        rep.total = checked_add(rep.total, c);
    return rep;
}

long long degree_zero_dimension(int p, int m, int d)
{
    check_args(p, m, d);
    long long mm = static_cast<long long>(m) * m;
    // ways[t] after processing some vertices: total over compositions of t
    std::vector<long long> ways(d + 1, 0);
    ways[0] = 1;
    for (int j = 1; j <= p - 1; ++j) {
        std::vector<long long> next(d + 1, 0);
        for (int t = 0; t <= d; ++t)
            for (int dj = 0; t + dj <= d; ++dj)
                next[t + dj] = checked_add(next[t + dj], checked_mul(ways[t], binomial(mm + dj - 1, dj)));
        ways = std::move(next);
    }
    return ways[d];
}

long long generator_count_formula(int p, int m, int d)
{
    check_args(p, m, d);
    if (d == 0)
        return 0;
    return checked_mul(odd_letter_count(p), binomial(static_cast<long long>(p - 1) * (m - 1) + d - 2, d - 1));
}

GeneratorReport generator_count(int p, int m, int d, long long list_limit)
{
    check_args(p, m, d);
    if (m < d)
        throw ContractError("generator description needs m >= d");
    GeneratorReport rep;
    if (d == 0)
        return rep;
    // Count tuples of multisets over {2..m}: one multiset per vertex, total d-1.
    int verts = p - 1;
    std::vector<std::vector<int>> rows(verts);
    std::vector<std::vector<std::vector<int>>> tails;
    long long tail_count = 0;
    std::function<void(int, int, int)> rec = [&](int v, int left, int from) {
        // fill vertex v with values >= from, then move on
        if (v == verts) {
            if (left == 0) {
                ++tail_count;
                if (tail_count <= list_limit)
                    tails.push_back(rows);
            }
            return;
        }
        rec(v + 1, left, 2);
        if (left == 0)
            return;
        for (int x = from; x <= m; ++x) {
            rows[v].push_back(x);
            rec(v, left - 1, x);
            rows[v].pop_back();
        }
    };
    rec(0, d - 1, 2);
    int arrows = 0;
    for (const auto& z : zigzag_letters(p))
        if (z.odd()) {
            ++arrows;
            if (static_cast<long long>(rep.labels.size()) + static_cast<long long>(tails.size()) <= list_limit)
                for (const auto& t : tails)
                    rep.labels.push_back({z, t});
        }
    rep.degree1 = checked_mul(arrows, tail_count);
    if (rep.degree1 > list_limit)
        rep.labels.clear();
    return rep;
}

} // namespace selfext
