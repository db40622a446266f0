#pragma once

#include "selfext/partitions.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace selfext {

// Beads at the β-numbers λ_i + N - i, 1 <= i <= N. Positions are kept in
// decreasing order, so positions[i-1] is the bead of row i.
struct AbacusDisplay {
    int p = 0;
    int beads = 0;
    std::vector<int> positions;

    bool occupied(int pos) const;
    int max_position() const { return positions.empty() ? -1 : positions.front(); }
    bool operator==(const AbacusDisplay&) const = default;
};

struct RunnerStats {
    std::vector<int> beads;            // r_j
    std::vector<Partition> quotient;   // λ^(j)
    std::vector<int> weights;          // wt_j = |λ^(j)|
    std::vector<int> residues;         // i_j
};

// One (quotient component, bead offset) pair per runner.
struct RunnerConfig {
    std::vector<std::pair<Partition, int>> runners;
    bool operator==(const RunnerConfig&) const = default;
};

std::vector<int> beta_numbers(const Partition& l, int beads);
Partition from_beta(std::vector<int> positions);

// Display with the given bead count; if position 0 would be empty, p more
// beads are added so that it is occupied.
AbacusDisplay display(const Partition& l, int p, int beads);
// Canonical display: N = h(λ), extended as above.
AbacusDisplay display(const Partition& l, int p);
// Exactly the given bead count, position 0 possibly empty.
AbacusDisplay display_exact(const Partition& l, int p, int beads);
Partition decode(const AbacusDisplay& g);
// Adds p beads (one full row); shifts every position by p.
AbacusDisplay add_full_row(const AbacusDisplay& g);

std::pair<Partition, int> core_and_weight(const Partition& l, int p);
inline Partition p_core(const Partition& l, int p) { return core_and_weight(l, p).first; }
inline int p_weight(const Partition& l, int p) { return core_and_weight(l, p).second; }
inline bool is_core(const Partition& l, int p) { return p_weight(l, p) == 0; }

// Bead rows of runner j (row a holds position j + p*a), increasing.
std::vector<int> runner_rows(const AbacusDisplay& g, int j);
// The partition encoded by a runner holding beads in the given rows.
Partition runner_partition(const std::vector<int>& rows);
// Bead rows of a runner holding `beads` beads with quotient component q.
std::vector<int> rows_for(const Partition& q, int beads);

RunnerStats quotient(const AbacusDisplay& g);
// Residue of nodes added or removed by moving a bead to or from runner j.
int runner_residue(const AbacusDisplay& g, int j);
// Abacus position of a removable or addable node of decode(g).
int node_position(const AbacusDisplay& g, Node a);
Node position_node(const AbacusDisplay& g, int pos);

// Complement and reverse inside the window [0, W). W = 0 picks the smallest
// multiple of p strictly above every bead and at least N.
AbacusDisplay transpose_display(const AbacusDisplay& g, int window = 0);

std::vector<int> removable_positions(const AbacusDisplay& g);
std::vector<int> addable_positions(const AbacusDisplay& g);

// Runner j holds r + offset_j beads; all runners are lifted by full rows until
// each can carry its component, so only offset differences matter.
Partition decode_config(const RunnerConfig& cfg, int p);
RunnerConfig config_of(const AbacusDisplay& g);
RunnerConfig parse_config(std::string_view text);
std::string format_config(const RunnerConfig& cfg);

} // namespace selfext
