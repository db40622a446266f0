#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace selfext {

// Weakly decreasing positive parts, no trailing zeros. The empty vector is the
// empty partition.
using Partition = std::vector<int>;

struct Node {
    int row = 1;
    int col = 1;
    auto operator<=>(const Node&) const = default;
};

// Thrown when an operation is called outside its domain (p-singular input to a
// crystal operator, size mismatch in dominance, malformed text, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PartitionHash {
    std::size_t operator()(const Partition& l) const noexcept;
};

bool is_partition(const Partition& l);
// Sorts, drops zeros and validates; throws on negative parts.
Partition normalize(std::vector<int> parts);

int size(const Partition& l);
inline int height(const Partition& l) { return static_cast<int>(l.size()); }
// λ_k with 1-based k, zero past the end.
inline int part(const Partition& l, int k)
{
    return k >= 1 && k <= height(l) ? l[k - 1] : 0;
}

bool is_prime(int p);
bool is_p_regular(const Partition& l, int p);
bool is_p_restricted(const Partition& l, int p);
Partition transpose(const Partition& l);
bool dominates(const Partition& l, const Partition& m);

int node_residue(Node a, int p);
std::vector<int> content(const Partition& l, int p);

std::vector<Node> removable_nodes(const Partition& l);
std::vector<Node> addable_nodes(const Partition& l);
bool contains(const Partition& l, Node a);
// Remove or add a set of nodes; throws ContractError if the result is not a
// partition or a node is not where it should be.
Partition remove_nodes(const Partition& l, const std::vector<Node>& nodes);
Partition add_nodes(const Partition& l, const std::vector<Node>& nodes);

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& f);
// Partitions of n into parts of size at most maxpart.
std::vector<Partition> partitions_bounded(int n, int maxpart);

// Text form: `4,2^3,1`, `-` or empty for the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& l);
// Compact display with exponents, e.g. (4,2^3,1); used in human output.
std::string pretty_partition(const Partition& l);

} // namespace selfext
