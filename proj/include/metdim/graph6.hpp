#ifndef METDIM_GRAPH6_HPP
#define METDIM_GRAPH6_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "metdim/graph.hpp"

namespace metdim {

// graph6 codec (undirected simple graphs, the usual 6-bits-per-byte format).

namespace g6detail {

inline int decode_byte(char c, size_t pos) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw std::invalid_argument("graph6: byte out of range at position " +
                                    std::to_string(pos));
    return b - 63;
}

}  // namespace g6detail

inline Graph parse_graph6(const std::string& s) {
    using g6detail::decode_byte;
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = decode_byte(s[0], 0);
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated header");
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(s[i], i);
        if (n < 63) throw std::invalid_argument("graph6: non-canonical long header");
        pos = 4;
    } else {
        if (s.size() < 8) throw std::invalid_argument("graph6: truncated header");
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | decode_byte(s[i], i);
        if (n < 258048) throw std::invalid_argument("graph6: non-canonical long header");
        pos = 8;
    }

    long long nbits = n * (n - 1) / 2;
    size_t nbytes = size_t((nbits + 5) / 6);
    if (s.size() - pos != nbytes)
        throw std::invalid_argument("graph6: body length mismatch");

    Graph g{int(n)};
    // Bits run down the upper triangle column by column: (0,1), (0,2), (1,2), ...
    long long bit = 0, row = 0, col = 1;
    for (size_t i = 0; i < nbytes; ++i) {
        int val = decode_byte(s[pos + i], pos + i);
        for (int k = 5; k >= 0; --k, ++bit) {
            bool on = (val >> k) & 1;
            if (bit >= nbits) {
                if (on) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (on) g.add_edge(int(row), int(col));
            if (++row == col) { row = 0; ++col; }
        }
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    long long n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(char(63 + ((n >> sh) & 63)));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int sh = 30; sh >= 0; sh -= 6) out.push_back(char(63 + ((n >> sh) & 63)));
    }
    int acc = 0, nb = 0;
    for (long long col = 1; col < n; ++col)
        for (long long row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(int(row), int(col)) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(char(63 + (acc << (6 - nb))));
    return out;
}

}  // namespace metdim

#endif  // METDIM_GRAPH6_HPP
