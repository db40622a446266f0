#include <doctest.h>

#include "support.hpp"

#include "selfext/zigzag.hpp"

#include <functional>
#include <set>

using namespace selfext;

namespace {

struct Triple {
    ZigzagLetter z;
    int r, s;
};

std::vector<Triple> triples(int p, int m)
{
    std::vector<Triple> out;
    for (const auto& z : zigzag_letters(p))
        for (int r = 1; r <= m; ++r)
            for (int s = 1; s <= m; ++s)
                out.push_back({z, r, s});
    return out;
}

// Counts sorted words of d triples, odd triples used at most once, by degree.
std::vector<long long> orbit_count(int p, int m, int d, bool degree_zero_letters_only = false)
{
    auto items = triples(p, m);
    if (degree_zero_letters_only)
        std::erase_if(items, [](const Triple& t) { return t.z.kind != ZigzagLetter::E; });
    std::vector<long long> by(2 * d + 1, 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int left, int deg) {
        if (left == 0) {
            ++by[deg];
            return;
        }
        if (k == items.size())
            return;
        int most = items[k].z.odd() ? 1 : left;
        for (int c = 0; c <= most; ++c)
            rec(k + 1, left - c, deg + c * items[k].z.degree());
    };
    rec(0, d, 0);
    return by;
}

} // namespace

TEST_CASE("letters")
{
    for (int p : {3, 5, 7}) {
        auto letters = zigzag_letters(p);
        int even = 0, odd = 0;
        for (const auto& z : letters)
            (z.odd() ? odd : even) += 1;
        CHECK(even == even_letter_count(p));
        CHECK(odd == odd_letter_count(p));
    }
    CHECK(zigzag_letters(3).size() == 6);
}

TEST_CASE("dimension examples")
{
    CHECK(basis_dimension(3, 1, 1).total == 6);
    CHECK(basis_dimension(3, 1, 2).total == 19);
    CHECK(basis_dimension(3, 4, 0).total == 1);
    CHECK(basis_dimension(5, 2, 0).by_degree == std::vector<long long>{1});
    CHECK(degree_zero_dimension(3, 1, 1) == 2);
    CHECK(degree_zero_dimension(3, 2, 2) == 36);
    CHECK(degree_zero_dimension(7, 3, 0) == 1);
    CHECK_THROWS_AS(basis_dimension(2, 1, 1), ContractError);
    CHECK_THROWS_AS(degree_zero_dimension(4, 1, 1), ContractError);
}

TEST_CASE("generator examples")
{
    CHECK(generator_count(3, 1, 1).degree1 == 2);
    CHECK(generator_count(3, 2, 2).degree1 == 4);
    CHECK(generator_count(3, 2, 0).degree1 == 0);
    CHECK_THROWS_AS(generator_count(3, 1, 2), ContractError);
    auto rep = generator_count(3, 2, 2, 100);
    REQUIRE(rep.labels.size() == 4);
    for (const auto& g : rep.labels) {
        CHECK(g.arrow.odd());
        int total = 0;
        for (const auto& row : g.rows)
            total += static_cast<int>(row.size());
        CHECK(total == 1);
    }
}

TEST_CASE("closed forms against orbit enumeration")
{
    struct Case {
        int p, m, dmax;
    };
    for (auto [p, m, dmax] : std::vector<Case>{{3, 1, 4}, {3, 2, 4}, {3, 3, 3}, {5, 1, 4}, {5, 2, 3}, {7, 1, 3}})
        for (int d = 0; d <= dmax; ++d) {
            auto rep = basis_dimension(p, m, d);
            auto brute = orbit_count(p, m, d);
            CHECK(rep.by_degree == brute);
            long long total = 0;
            for (long long x : brute)
                total += x;
            CHECK(rep.total == total);
            // degree reversal from swapping e_j and c_j
            for (int k = 0; k <= 2 * d; ++k)
                CHECK(rep.by_degree[k] == rep.by_degree[2 * d - k]);
            CHECK(rep.by_degree[2 * d] == rep.by_degree[0]);
        }
}

TEST_CASE("degree zero part")
{
    for (int p : {3, 5})
        for (int m = 1; m <= 4; ++m)
            for (int d = 0; d <= 4; ++d) {
                long long dz = degree_zero_dimension(p, m, d);
                CHECK(dz == basis_dimension(p, m, d).by_degree[0]);
                CHECK(dz == binomial((p - 1) * m * m + d - 1, d));
                if (p == 3 || m <= 3)
                    CHECK(dz == orbit_count(p, m, d, true)[0]);
            }
}

TEST_CASE("degree one labels are one odd letter and an even word")
{
    for (int p : {3, 5})
        for (int m = 1; m <= 2; ++m)
            for (int d = 1; d <= 3; ++d) {
                auto items = triples(p, m);
                long long degree_one = 0;
                std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t k, int left, int deg, int odd) {
                    if (deg > 1)
                        return;
                    if (left == 0) {
                        if (deg == 1) {
                            ++degree_one;
                            CHECK(odd == 1);
                        }
                        return;
                    }
                    if (k == items.size())
                        return;
                    int most = items[k].z.odd() ? 1 : left;
                    for (int c = 0; c <= most; ++c)
                        rec(k + 1, left - c, deg + c * items[k].z.degree(), odd + (items[k].z.odd() ? c : 0));
                };
                rec(0, d, 0, 0);
                CHECK(degree_one == basis_dimension(p, m, d).by_degree[1]);
            }
}

TEST_CASE("generator labels")
{
    for (int p : {3, 5, 7})
        for (int m = 1; m <= 4; ++m)
            for (int d = 0; d <= m; ++d) {
                auto rep = generator_count(p, m, d, 1000000);
                CHECK(rep.degree1 == generator_count_formula(p, m, d));
                CHECK(static_cast<long long>(rep.labels.size()) == rep.degree1);
                std::set<std::pair<ZigzagLetter, std::vector<std::vector<int>>>> uniq;
                for (const auto& g : rep.labels) {
                    CHECK(g.arrow.odd());
                    CHECK(g.rows.size() == static_cast<std::size_t>(p - 1));
                    int total = 0;
                    for (const auto& row : g.rows) {
                        CHECK(std::is_sorted(row.begin(), row.end()));
                        for (int x : row)
                            CHECK((x >= 2 && x <= m));
                        total += static_cast<int>(row.size());
                    }
                    CHECK(total == d - 1);
                    uniq.insert({g.arrow, g.rows});
                }
                CHECK(uniq.size() == rep.labels.size());
            }
}

TEST_CASE("one box: the algebra itself")
{
    for (int p = 3; p <= 11; ++p) {
        if (p == 4 || p == 6 || p == 8 || p == 9 || p == 10)
            continue;
        CHECK(basis_dimension(p, 1, 1).total == 2 * (p - 1) + 2 * (p - 2));
    }
}

TEST_CASE("overflow is reported")
{
    CHECK_THROWS_AS(basis_dimension(7, 40, 40), ContractError);
    CHECK(binomial(60, 30) == 118264581564861424LL);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}
