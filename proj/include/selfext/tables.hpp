#pragma once

#include "selfext/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace selfext {

// Adjacent runners j-1, j with r_j - r_{j-1} = gap.
struct RunnerPair {
    Partition left;
    Partition right;
    int gap = 1;
    int weight() const { return size(left) + size(right); }
    auto operator<=>(const RunnerPair&) const = default;
};

// Runners j-2, j-1, j; gaps are r_{j-1} - r_{j-2} and r_j - r_{j-2}.
struct RunnerTriple {
    Partition first, middle, last;
    int gap1 = 1, gap2 = 2;
    int weight() const { return size(first) + size(middle) + size(last); }
    auto operator<=>(const RunnerTriple&) const = default;
};

// i_j-signature read off a runner pair. Rows count from the top of the
// abacus; the left runner carries max(h(left), h(right) - gap, 0) + 1 beads.
struct LocalSignature {
    std::string reduced;
    std::vector<int> normal_rows;   // A_1, A_2, ... (bottom of the diagram first)
    std::vector<int> conormal_rows; // B_1, B_2, ... (top of the diagram first)
    int epsilon = 0, phi = 0;
    int left_beads = 0, right_beads = 0;
};

LocalSignature local_signature(const RunnerPair& pair);
// Good node at row t on the right runner and cogood node at row t-1.
bool locally_difficult(const RunnerPair& pair);

std::vector<RunnerPair> derive_table1(int max_weight = 7);
// Pairs of Table I rows sharing the middle runner, total weight <= max_weight.
std::vector<std::pair<RunnerPair, RunnerPair>> table2_candidates(const std::vector<RunnerPair>& table1,
                                                                 int max_weight = 7);
std::vector<RunnerTriple> derive_table2(int max_weight = 7);

// A p-regular partition whose display carries the configuration on adjacent
// runners and is difficult at the configuration's residue(s).
Partition realize_config(const RunnerPair& pair, int p);
Partition realize_config(const RunnerTriple& triple, int p);

struct LabeledPair {
    std::string label;
    RunnerPair pair;
};
struct LabeledTriple {
    std::string label;
    RunnerTriple triple;
};

std::vector<LabeledPair> load_table1(const std::string& path);
std::vector<LabeledTriple> load_table2(const std::string& path);

struct TableDiff {
    std::size_t expected = 0;
    std::size_t derived = 0;
    std::size_t matched = 0;
    std::vector<std::string> missing; // in the golden file, not derived
    std::vector<std::string> extra;   // derived, not in the golden file
    bool ok() const { return missing.empty() && extra.empty() && expected == derived; }
};

struct TableReport {
    TableDiff table1;
    TableDiff table2;
    std::vector<int> table1_counts; // rows per weight, index = weight
    bool ok() const { return table1.ok() && table2.ok(); }
};

// Golden rows above max_weight are ignored; Table II is compared only when
// max_weight is 7.
TableReport verify_tables(const std::string& data_dir, int max_weight = 7);

std::string format_pair(const RunnerPair& pair);
std::string format_triple(const RunnerTriple& triple);

} // namespace selfext
