#pragma once

// The injection psi from partitions of n-1 into partitions of n other than
// (1^n), and the square matrix N_n of edge labels mu -> psi(lambda).

#include <galilei/young/lattice.hpp>

#include <map>
#include <vector>

namespace galilei::young {

// psi adds a part 1 except at (1^{n-1}), which goes to (2^{n/2}) for even n
// and to (3, 2^{(n-3)/2}) for odd n. Requires n >= 2.
std::map<Partition, Partition> build_psi(int n);

// The image of (1^{n-1}).
Partition special_partition(int n);

// Ascending linear extension of dominance: repeatedly take a partition all
// of whose strict dominance-predecessors are placed, preferring `special`
// and then the lexicographically smallest part list.
std::vector<Partition> dominance_extension(std::vector<Partition> items, const Partition* special = nullptr);

struct NMatrix {
    int n = 0;
    Partition special;
    std::vector<Partition> rows;     // psi images
    std::vector<Partition> columns;  // partitions of n-1
    Matrix<Polynomial> entries;
};

NMatrix build_Nn(int n);

// Leading block whose rows are dominated by the special partition.
Matrix<Polynomial> special_block(const NMatrix& m);

struct DetFactorization {
    Polynomial determinant;
    // det = integer_factor * prod (x - root); valid when splits is true.
    Rational integer_factor;
    std::vector<int> roots;  // ascending, with multiplicity
    bool integer_factor_nonzero = false;
    bool splits = false;
    bool roots_below_n = false;
    bool nonzero_at_n = false;
};

// Splits p into leading coefficient times integer linear factors, if it can.
DetFactorization factor_integer_roots(const Polynomial& p, int n);

DetFactorization verify_det_factorization(int n);

}  // namespace galilei::young
