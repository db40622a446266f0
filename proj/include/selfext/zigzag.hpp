#pragma once

#include <string>
#include <vector>

namespace selfext {

// Basis letters of the zigzag algebra on vertices J = {1, ..., p-1}:
// idempotents e_j (degree 0), loops c_j (degree 2), arrows a_{i,j} with
// |i-j| = 1 (degree 1, odd).
struct ZigzagLetter {
    enum Kind { E, C, A } kind;
    int i = 0; // source vertex for arrows, the vertex otherwise
    int j = 0; // target vertex for arrows, the vertex otherwise
    int degree() const { return kind == E ? 0 : (kind == C ? 2 : 1); }
    bool odd() const { return kind == A; }
    std::string name() const;
    auto operator<=>(const ZigzagLetter&) const = default;
};

std::vector<ZigzagLetter> zigzag_letters(int p);
inline int even_letter_count(int p) { return 2 * (p - 1); }
inline int odd_letter_count(int p) { return 2 * (p - 2); }

// Binomial coefficient with C(n, 0) = 1 for every n; throws on overflow.
long long binomial(long long n, long long k);

struct DimensionReport {
    long long total = 0;
    std::vector<long long> by_degree; // index = degree, 0..2d
};

// S_d-orbits of words of d triples (z, r, s), r, s in [m], odd letters never
// repeated: sum_k C(|B_1|m^2, k) C(|B_0|m^2 + d-k-1, d-k).
DimensionReport basis_dimension(int p, int m, int d);
// sum over compositions d_1 + ... + d_{p-1} = d of prod_j C(m^2 + d_j - 1, d_j).
long long degree_zero_dimension(int p, int m, int d);

// Degree one generators: an arrow at (1,1) followed, for every vertex j, by a
// multiset over {2, ..., m} of size d_j with sum d_j = d - 1.
struct Degree1Generator {
    ZigzagLetter arrow;
    std::vector<std::vector<int>> rows; // rows[j-1] = sorted multiset for vertex j
};

struct GeneratorReport {
    long long degree1 = 0;
    std::vector<Degree1Generator> labels; // filled when count <= list_limit
};

GeneratorReport generator_count(int p, int m, int d, long long list_limit = 0);
// Closed form 2(p-2) C((p-1)(m-1) + d - 2, d - 1), zero for d = 0.
long long generator_count_formula(int p, int m, int d);

} // namespace selfext
