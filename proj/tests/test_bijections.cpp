#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include "selfext/abacus.hpp"
#include "selfext/bijections.hpp"
#include "selfext/signatures.hpp"
#include "selfext/specht.hpp"

using namespace selfext;

TEST_CASE("Mullineux examples")
{
    CHECK(mullineux({3}, 3) == Partition{2, 1});
    CHECK(mullineux({5}, 5) == Partition{2, 1, 1, 1});
    CHECK(mullineux({}, 5).empty());
    auto m = mullineux({4, 2, 1}, 3);
    CHECK(m == oracle::mullineux_crystal({4, 2, 1}, 3));
    CHECK(mullineux(m, 3) == Partition{4, 2, 1});
    CHECK_THROWS_AS(mullineux({1, 1, 1}, 3), ContractError);
}

TEST_CASE("symbol columns")
{
    auto [rest, rim] = remove_p_rim({4, 2, 1}, 3);
    CHECK(rim + size(rest) == 7);
    for (int p : {3, 5})
        for (const auto& l : testing::partitions_up_to(12)) {
            if (!is_p_regular(l, p))
                continue;
            auto sym = mullineux_symbol(l, p);
            int total = 0;
            for (const auto& c : sym)
                total += c.rim;
            CHECK(total == size(l));
            CHECK(from_mullineux_symbol(sym, p) == l);
        }
}

TEST_CASE("Mullineux map against the crystal recursion")
{
    for (int p : {3, 5, 7}) {
        std::map<Partition, Partition> memo;
        for (const auto& l : testing::partitions_up_to(12)) {
            if (!is_p_regular(l, p))
                continue;
            auto m = mullineux(l, p);
            CHECK(m == oracle::mullineux_crystal(l, p, memo));
            CHECK(is_p_regular(m, p));
            CHECK(size(m) == size(l));
            CHECK(mullineux(m, p) == l);
            CHECK(p_weight(m, p) == p_weight(l, p));
            for (int i = 0; i < p; ++i) {
                CHECK(epsilon(l, p, i) == epsilon(m, p, (p - i) % p));
                CHECK(phi(l, p, i) == phi(m, p, (p - i) % p));
            }
        }
    }
}

TEST_CASE("first row of the image for rows starting with a one-row image")
{
    for (int p : {3, 5, 7})
        for (const auto& l : testing::partitions_up_to(16)) {
            if (!is_p_regular(l, p))
                continue;
            for (int m = 1; m <= size(l); ++m) {
                auto mu = mullineux({m}, p);
                if (mu.size() > l.size() || !std::equal(mu.begin(), mu.end(), l.begin()))
                    continue;
                if (l.size() > mu.size() && l[mu.size()] >= mu.back())
                    continue;
                CHECK(mullineux(l, p)[0] == m);
            }
        }
}

TEST_CASE("regularization examples")
{
    CHECK(regularize({1, 1, 1}, 3) == Partition{2, 1});
    CHECK(regularize({6, 1, 1, 1, 1, 1}, 5) == Partition{6, 2, 1, 1, 1});
    CHECK(regularize({4, 2, 1}, 3) == Partition{4, 2, 1});
    CHECK(regularize({}, 3).empty());
    auto g = regularize_display(display({1, 1, 1}, 3));
    CHECK(decode(g) == Partition{2, 1});
    CHECK(g.beads == display({1, 1, 1}, 3).beads);
}

TEST_CASE("regularization properties")
{
    for (int p : {3, 5})
        for (const auto& l : testing::partitions_up_to(14)) {
            auto r = regularize(l, p);
            CHECK(r == oracle::regularize_by_ladders(l, p));
            CHECK(is_p_regular(r, p));
            CHECK(regularize(r, p) == r);
            CHECK(dominates(r, l));
            CHECK((r == l) == is_p_regular(l, p));
            CHECK(p_core(r, p) == p_core(l, p));
            int h = height(l);
            for (int n = std::max(h, 1); n < h + p; ++n) {
                auto g = display_exact(l, p, n);
                auto gr = regularize_display(g);
                CHECK(gr.beads == n);
                CHECK(decode(gr) == r);
            }
        }
}

TEST_CASE("regularized display empties the non-regular runner")
{
    int checked = 0;
    for (int p : {3, 5})
        for (const auto& l : testing::partitions_up_to(p == 3 ? 14 : 12)) {
            if (is_p_regular(l, p) || !specht_irreducible(l, p))
                continue;
            auto sr = special_runners(l, p);
            REQUIRE(sr.non_regular.has_value());
            int k = *sr.non_regular;
            auto gr = regularize_display(display_exact(l, p, sr.beads));
            CHECK(quotient(gr).quotient[k].empty());
            // below every bead of runner k the positions are occupied
            for (int row : runner_rows(gr, k))
                for (int pos = 0; pos < k + p * row; ++pos)
                    CHECK(gr.occupied(pos));
            ++checked;
        }
    CHECK(checked > 0);
}
