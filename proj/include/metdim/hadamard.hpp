#ifndef METDIM_HADAMARD_HPP
#define METDIM_HADAMARD_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

// +1/-1 square matrix with H * H^T = k * I.
class HadamardMatrix {
public:
    explicit HadamardMatrix(std::vector<std::vector<int>> rows) : h_(std::move(rows)) {
        validate();
    }

    int order() const { return int(h_.size()); }
    int at(int i, int j) const { return h_[i][j]; }

private:
    void validate() const {
        int k = order();
        if (k == 0) throw std::invalid_argument("hadamard: empty matrix");
        for (const auto& row : h_) {
            if (int(row.size()) != k)
                throw std::invalid_argument("hadamard: not square");
            for (int x : row)
                if (x != 1 && x != -1)
                    throw std::invalid_argument("hadamard: entries must be +-1");
        }
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                int dot = 0;
                for (int t = 0; t < k; ++t) dot += h_[i][t] * h_[j][t];
                if (dot != (i == j ? k : 0))
                    throw std::invalid_argument("hadamard: rows not orthogonal");
            }
    }

    std::vector<std::vector<int>> h_;
};

// Sylvester doubling: valid for every power of two.
inline HadamardMatrix hadamard_sylvester(int k) {
    if (k < 1 || (k & (k - 1)) != 0)
        throw std::invalid_argument("hadamard_sylvester: order must be a power of two");
    std::vector<std::vector<int>> h{{1}};
    for (int m = 1; m < k; m *= 2) {
        std::vector<std::vector<int>> next(2 * m, std::vector<int>(2 * m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                next[i][j] = h[i][j];
                next[i][j + m] = h[i][j];
                next[i + m][j] = h[i][j];
                next[i + m][j + m] = -h[i][j];
            }
        h = std::move(next);
    }
    return HadamardMatrix(std::move(h));
}

// Quadratic-residue construction of order q + 1 for a prime q = 3 (mod 4).
inline HadamardMatrix hadamard_paley1(int k) {
    int q = k - 1;
    if (q < 3 || q % 4 != 3)
        throw std::invalid_argument("hadamard_paley1: order must be q+1, q = 3 mod 4");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            throw std::invalid_argument("hadamard_paley1: q must be prime");
    std::vector<int> chi(q, -1);  // quadratic character, chi[0] patched below
    for (int z = 1; z < q; ++z) chi[z * z % q] = 1;
    // H = I + A with A = [[0, 1..1], [-1..-1, S]], S_ij = chi(j - i).
    std::vector<std::vector<int>> h(k, std::vector<int>(k, 0));
    h[0][0] = 1;
    for (int j = 1; j < k; ++j) h[0][j] = 1;
    for (int i = 1; i < k; ++i) h[i][0] = -1;
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            h[i][j] = (i == j) ? 1 : chi[((j - i) % q + q) % q];
    return HadamardMatrix(std::move(h));
}

// Text form: k lines of k characters drawn from {+, -}.
inline HadamardMatrix parse_hadamard(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        for (char c : line) {
            if (c == '+') row.push_back(1);
            else if (c == '-') row.push_back(-1);
            else throw std::invalid_argument("hadamard: bad character in matrix text");
        }
        rows.push_back(std::move(row));
    }
    return HadamardMatrix(std::move(rows));
}

// Hadamard graph on 4k vertices: row vertices r+_i, r-_i and column vertices
// c+_j, c-_j; H_ij = 1 joins like signs, H_ij = -1 joins opposite signs.
// Layout: r+ = 0..k-1, r- = k..2k-1, c+ = 2k..3k-1, c- = 3k..4k-1.
inline Graph hadamard_graph(const HadamardMatrix& h) {
    int k = h.order();
    Graph g(4 * k);
    auto rp = [&](int i) { return i; };
    auto rm = [&](int i) { return k + i; };
    auto cp = [&](int j) { return 2 * k + j; };
    auto cm = [&](int j) { return 3 * k + j; };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (h.at(i, j) == 1) {
                g.add_edge(rp(i), cp(j));
                g.add_edge(rm(i), cm(j));
            } else {
                g.add_edge(rp(i), cm(j));
                g.add_edge(rm(i), cp(j));
            }
        }
    return g;
}

}  // namespace metdim

#endif  // METDIM_HADAMARD_HPP
