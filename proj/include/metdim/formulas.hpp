#ifndef METDIM_FORMULAS_HPP
#define METDIM_FORMULAS_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "distance.hpp"
#include "graph.hpp"
#include "regularity.hpp"

// Closed-form metric dimensions for families where the value is known
// exactly.  These serve as cross-checks for the search.

namespace metdim {

// Complete multipartite K_{a_1,...,a_r}: with n = sum a_i and s parts of
// size one, the dimension is n - r, plus s - 1 when singleton parts exist.
inline int formula_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("formula_multipartite: no parts");
    int n = 0, singles = 0;
    for (int a : parts) {
        if (a < 1) throw std::invalid_argument("formula_multipartite: part size < 1");
        n += a;
        if (a == 1) ++singles;
    }
    if (parts.size() == 1 && n > 1)
        throw std::invalid_argument("formula_multipartite: one part means no edges");
    int r = int(parts.size());
    return n - r + (singles ? singles - 1 : 0);
}

// Johnson J(n,2) and Kneser K(n,2) share one dimension: floor(2(n - i)/3) + i
// with i = n mod 3 for n >= 6, and 2, 3, 3 for n = 3, 4, 5.
inline int formula_johnson_kneser2(int n) {
    if (n < 3) throw std::invalid_argument("formula_johnson_kneser2: n < 3");
    if (n == 3) return 2;
    if (n == 4 || n == 5) return 3;
    int i = n % 3;
    return 2 * (n - i) / 3 + i;
}

// Square rook's graph H(2,q) (the q x q lattice): floor(2(2q - 1)/3).
inline int formula_lattice(int q) {
    if (q < 1) throw std::invalid_argument("formula_lattice: q < 1");
    return 2 * (2 * q - 1) / 3;
}

// A distance-regular graph transfers its dimension to its bipartite double
// when its odd girth equals 2*diameter + 1.
inline bool double_transfer_applicable(const Graph& g) {
    auto dm = distance_matrix(g);
    if (!dm.all_finite())
        throw std::invalid_argument("double_transfer_applicable: graph is disconnected");
    auto ia = intersection_array(g, dm);
    if (!ia)
        throw std::invalid_argument("double_transfer_applicable: graph is not distance-regular");
    auto og = odd_girth(g);
    return og && *og == 2 * diameter(dm) + 1;
}

}  // namespace metdim

#endif  // METDIM_FORMULAS_HPP
