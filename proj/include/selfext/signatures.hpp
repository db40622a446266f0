#pragma once

#include "selfext/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace selfext {

struct SignedNode {
    Node node;
    char sign; // '+' addable, '-' removable
};

struct SignatureReport {
    int residue = 0;
    std::vector<SignedNode> signature; // reading order, bottom-left to top-right
    std::string reduced;               // "+...+-...-"
    std::vector<Node> normal;          // A_1..A_ε, bottom to top
    std::vector<Node> conormal;        // B_1..B_φ, top to bottom
    int epsilon = 0, phi = 0;
    int epsilon_prime = 0, phi_prime = 0;

    std::optional<Node> good() const;
    std::optional<Node> cogood() const;
};

// Signs are read from the bottom row up, i.e. in increasing abacus position.
// Reduction erases adjacent "-+" pairs. A stack does this in one pass: every
// '+' that meets a '-' on top of the stack cancels it, and since the erased
// pairs are nested brackets the surviving word does not depend on the order of
// erasure.
SignatureReport signature(const Partition& l, int p, int i);
int epsilon(const Partition& l, int p, int i);
int phi(const Partition& l, int p, int i);

std::optional<Partition> e_tilde(const Partition& l, int p, int i, int r = 1);
std::optional<Partition> f_tilde(const Partition& l, int p, int i, int r = 1);
std::optional<Partition> e_hat(const Partition& l, int p, int i, int r = 1);
std::optional<Partition> f_hat(const Partition& l, int p, int i, int r = 1);
// ẽ_i^{ε_i} and f̃_i^{φ_i}.
Partition e_top(const Partition& l, int p, int i);
Partition f_top(const Partition& l, int p, int i);

int weight_delta(const Partition& l, int p, int i, int r);

bool is_difficult(const Partition& l, int p, int i);
bool difficult_abacus_check(const Partition& l, int p, int i);

struct AdjacencyEntry {
    int r = 0;
    bool singular = false;      // (i): λ_{A_r} (resp. λ^{B_r}) p-singular
    bool prefix_singular = false; // (ii): some λ_{A_1..A_j,A_r}, j <= r-2, p-singular
    bool shifted = false;       // (iii): A_r = A_{r-1} + (1-p,1) (resp. B_r = B_{r-1} + (p-1,-1))
};

struct AdjacencyReport {
    std::vector<AdjacencyEntry> removal;  // r = 1..ε_i
    std::vector<AdjacencyEntry> addition; // r = 1..φ_i
    bool consistent() const; // (i) <=> (ii) <=> (iii) on every entry
};

AdjacencyReport node_adjacency_checks(const Partition& l, int p, int i);

struct Reflection {
    int residue = 0;
    Partition target;
    bool raising = false; // true: f̃^φ (ε = 0); false: ẽ^ε (φ = 0)
};

std::vector<Reflection> reflections(const Partition& l, int p);

// Residue i such that λ = ((a+1)^c, a^{p-2}, a-1, ...) with (c,a+1) i-good and
// (c+p-1,a) i-cogood.
std::optional<int> fixed_top_shape(const Partition& l, int p);

// All r-element subsets of the i-removable (resp. i-addable) nodes, each
// listed in row order.
std::vector<std::vector<Node>> removable_subsets(const Partition& l, int p, int i, int r);
std::vector<std::vector<Node>> addable_subsets(const Partition& l, int p, int i, int r);

} // namespace selfext
