#pragma once

#include "selfext/abacus.hpp"
#include "selfext/partitions.hpp"

#include <utility>
#include <vector>

namespace selfext {

// One column of the Mullineux symbol: size of the p-rim and number of rows of
// the partition it was peeled from.
struct SymbolColumn {
    int rim = 0;
    int rows = 0;
    bool operator==(const SymbolColumn&) const = default;
};

// Removes the p-rim; returns what is left and the number of nodes removed.
std::pair<Partition, int> remove_p_rim(const Partition& l, int p);
std::vector<SymbolColumn> mullineux_symbol(const Partition& l, int p);
// The p-regular partition with the given symbol; throws if there is none.
Partition from_mullineux_symbol(const std::vector<SymbolColumn>& symbol, int p);
Partition mullineux(const Partition& l, int p);

// James regularization: nodes slide to the top of their ladders
// {(i,j) : i + (p-1)(j-1) = const}.
Partition regularize(const Partition& l, int p);
AbacusDisplay regularize_display(const AbacusDisplay& g);

} // namespace selfext
