#pragma once

#include "selfext/partitions.hpp"

#include <optional>
#include <vector>

namespace selfext {

struct BlockId {
    Partition core;
    int weight = 0;
    int p = 0;
    bool operator==(const BlockId&) const = default;
};

BlockId block_of(const Partition& l, int p);

// All partitions with the given core and weight, one per p-multipartition of
// the weight, in lexicographic order of (|λ^(0)|, ..., λ^(0), λ^(1), ...).
std::vector<Partition> enumerate_block(const BlockId& b, bool regular_only = false);

// Number of p-multipartitions of d.
long long multipartition_count(int p, int d);

// Smallest bead count N in [h(ρ), h(ρ)+p) whose display has
// r_{i+1} - r_i >= d - 1 for every i; adding full rows does not change these
// differences, so no other N needs checking.
std::optional<int> rouquier_display(const Partition& core, int p, int d);
bool is_rouquier(const Partition& core, int p, int d);
bool is_rock_block(const Partition& l, int p);

} // namespace selfext
