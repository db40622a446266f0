#pragma once

#include "selfext/abacus.hpp"
#include "selfext/partitions.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace selfext {

// A display and runner pair (j, k) meeting the irreducibility conditions:
// all other quotient components empty; beads off runner j end before the first
// gap of runner j; positions off runner k are full up to the last bead of
// runner k; λ^(j) p-regular and λ^(k) p-restricted, both irreducible in turn.
struct SpechtWitness {
    int beads = 0;
    int j = 0;
    int k = 0;
    Partition regular_part;    // λ^(j)
    Partition restricted_part; // λ^(k)
    std::vector<SpechtWitness> inner; // witnesses for λ^(j) and λ^(k) when non-empty
};

bool specht_irreducible(const Partition& l, int p);
std::optional<SpechtWitness> specht_witness(const Partition& l, int p);

struct SpecialRunners {
    std::optional<int> non_restricted; // j, present iff λ is not p-restricted
    std::optional<int> non_regular;    // k, present iff λ is not p-regular
    int beads = 0;                     // display the runners refer to
};

// Requires S^λ irreducible; runners refer to display(λ, p, beads) for the
// witness bead count.
SpecialRunners special_runners(const Partition& l, int p);

// ν in the block of μ with ν^R = μ and S^ν irreducible; μ itself is tried
// first, then the block in enumeration order.
std::optional<Partition> irreducible_specht_preimage(const Partition& mu, int p);

struct SpechtReduction {
    int residue = 0;
    int epsilon = 0;
    Partition mu; // ẽ_i^{ε_i} λ
    Partition nu; // irreducible Specht label with ν^R = μ
};

std::optional<SpechtReduction> theorem_b_applicable(const Partition& l, int p);

} // namespace selfext
