#include <doctest.h>

#include "support.hpp"

#include "selfext/abacus.hpp"
#include "selfext/signatures.hpp"
#include "selfext/tables.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace selfext;

namespace {

const std::string data_dir = SELFEXT_DATA_DIR;

bool regular3(const Partition& l, int)
{
    return is_p_regular(l, 3);
}

} // namespace

TEST_CASE("local difficulty examples")
{
    CHECK(locally_difficult({{}, {1, 1}, 1}));
    CHECK(locally_difficult({{1}, {1, 1, 1}, 1}));
    CHECK_FALSE(locally_difficult({{}, {2}, 1}));
    CHECK_THROWS_AS(locally_difficult({{}, {1, 1}, 0}), ContractError);

    auto s = local_signature({{}, {1, 1}, 1});
    CHECK(s.epsilon > 0);
    CHECK(s.phi > 0);
    CHECK(s.conormal_rows.front() == s.normal_rows.front() - 1);

    for (int g = 1; g <= 4; ++g) {
        auto e = local_signature({{}, {}, g});
        CHECK(e.epsilon == g);
        CHECK(e.phi == 0);
    }
}

TEST_CASE("Table I by weight")
{
    CHECK(derive_table1(2) == std::vector<RunnerPair>{{{}, {1, 1}, 1}});
    CHECK(derive_table1(4).size() == 7);
    auto t = derive_table1(7);
    CHECK(t.size() == 66);
    std::map<int, int> per;
    for (const auto& r : t)
        ++per[r.weight()];
    CHECK(per == std::map<int, int>{{2, 1}, {3, 2}, {4, 4}, {5, 9}, {6, 17}, {7, 33}});
    std::set<RunnerPair> uniq(t.begin(), t.end());
    CHECK(uniq.size() == t.size());
}

TEST_CASE("Table I against the shipped transcription")
{
    auto gold = load_table1(data_dir + "/table1.json");
    CHECK(gold.size() == 66);
    std::multiset<RunnerPair> want, got;
    for (const auto& r : gold) {
        want.insert(r.pair);
        // labels carry the weight class
        CHECK(r.label.substr(0, 2) == "B" + std::to_string(r.pair.weight()));
    }
    for (const auto& r : derive_table1(7))
        got.insert(r);
    CHECK(got == want);
}

TEST_CASE("Table II")
{
    auto t1 = derive_table1(7);
    auto cands = table2_candidates(t1, 7);
    auto find = [&](const std::string& a, const std::string& b) {
        auto gold = load_table1(data_dir + "/table1.json");
        RunnerPair x, y;
        for (const auto& r : gold) {
            if (r.label == a)
                x = r.pair;
            if (r.label == b)
                y = r.pair;
        }
        return std::find(cands.begin(), cands.end(), std::pair<RunnerPair, RunnerPair>{x, y}) != cands.end();
    };
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{{"B2^1", "B6^12"},
                                                                        {"B2^1", "B6^13"},
                                                                        {"B2^1", "B7^13"},
                                                                        {"B2^1", "B7^26"},
                                                                        {"B2^1", "B7^27"},
                                                                        {"B2^1", "B7^28"},
                                                                        {"B3^1", "B7^23"},
                                                                        {"B3^2", "B7^22"}})
        CHECK_MESSAGE(find(a, b), a << " with " << b);

    auto t2 = derive_table2(7);
    std::vector<RunnerTriple> want{{{}, {1, 1}, {1, 1, 1, 1}, 1, 2},
                                   {{}, {1, 1}, {1, 1, 1, 1, 1}, 1, 3},
                                   {{}, {1, 1}, {2, 1, 1, 1}, 1, 2},
                                   {{}, {2, 1}, {1, 1, 1, 1}, 1, 2}};
    std::sort(want.begin(), want.end());
    CHECK(t2 == want);
    std::vector<RunnerTriple> gold;
    for (const auto& r : load_table2(data_dir + "/table2.json"))
        gold.push_back(r.triple);
    std::sort(gold.begin(), gold.end());
    CHECK(gold == want);
    // a lower cap keeps only triples that fit under it
    CHECK(derive_table2(4).empty());
    for (const auto& t : derive_table2(6))
        CHECK(t.weight() <= 6);
}

TEST_CASE("verify_tables report")
{
    auto rep = verify_tables(data_dir, 7);
    CHECK(rep.ok());
    CHECK(rep.table1.matched == 66);
    CHECK(rep.table2.matched == 4);
    auto part = verify_tables(data_dir, 5);
    CHECK(part.table1.ok());
    CHECK(part.table1.matched == 16);
}

TEST_CASE("local signature matches the global one")
{
    auto g = testing::rng(8);
    int compared = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int p = trial % 2 ? 3 : 5;
        auto l = testing::random_partition(g, 0, 24);
        auto disp = display(l, p, height(l) + testing::uniform(g, 0, p - 1));
        auto q = quotient(disp);
        int j = testing::uniform(g, 1, p - 1);
        int gap = q.beads[j] - q.beads[j - 1];
        if (gap < 1)
            continue;
        auto loc = local_signature({q.quotient[j - 1], q.quotient[j], gap});
        auto glob = signature(l, p, runner_residue(disp, j));
        CHECK(loc.reduced == glob.reduced);
        CHECK(loc.epsilon == glob.epsilon);
        CHECK(loc.phi == glob.phi);
        ++compared;
    }
    CHECK(compared > 100);
}

TEST_CASE("every difficult pair of a small 3-regular partition is in Table I")
{
    auto table = derive_table1(7);
    std::set<RunnerPair> rows(table.begin(), table.end());
    int hits = 0;
    for (const auto& l : testing::partitions_up_to(16, regular3, 3))
        for (int i = 0; i < 3; ++i) {
            if (!is_difficult(l, 3, i))
                continue;
            // choose a display where residue i sits on a runner j >= 1
            for (int n = height(l); n < height(l) + 3; ++n) {
                auto disp = display_exact(l, 3, n);
                int j = (i + n) % 3;
                if (j == 0)
                    continue;
                auto q = quotient(disp);
                int gap = q.beads[j] - q.beads[j - 1];
                if (gap >= 1 && q.weights[j - 1] + q.weights[j] <= 7) {
                    CHECK(rows.count({q.quotient[j - 1], q.quotient[j], gap}));
                    ++hits;
                }
                break;
            }
        }
    CHECK(hits > 0);
}

TEST_CASE("every table row is realizable")
{
    for (const auto& r : load_table1(data_dir + "/table1.json")) {
        bool done = false;
        for (int p : {3, 5, 7}) {
            try {
                auto l = realize_config(r.pair, p);
                CHECK(is_p_regular(l, p));
                done = true;
                break;
            } catch (const ContractError&) {
            }
        }
        CHECK_MESSAGE(done, r.label);
    }
    auto b21 = realize_config(RunnerPair{{}, {1, 1}, 1}, 3);
    bool any = false;
    for (int i = 0; i < 3; ++i)
        any = any || is_difficult(b21, 3, i);
    CHECK(any);
    CHECK_NOTHROW(realize_config(RunnerPair{{1}, {1, 1, 1}, 1}, 5));
    for (const auto& r : load_table2(data_dir + "/table2.json"))
        CHECK_NOTHROW(realize_config(r.triple, 3));
}
