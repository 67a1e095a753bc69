#ifndef METDIM_PERM_HPP
#define METDIM_PERM_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace metdim {

// Permutation of {0..n-1} stored as its image array.
// Products compose left to right: (a * b)(x) = b(a(x)).
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}

    int degree() const { return int(img.size()); }
    int operator()(int x) const { return img[x]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        Perm r;
        r.img.resize(img.size());
        for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
        return r;
    }

    // First point moved, or -1 for the identity.
    int first_moved() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return i;
        return -1;
    }

    bool operator==(const Perm& o) const { return img == o.img; }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < degree(); ++i) {
            if (i) s += ' ';
            s += std::to_string(img[i]);
        }
        return s;
    }
};

inline Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("perm: degree mismatch");
    Perm r;
    r.img.resize(a.img.size());
    for (int i = 0; i < a.degree(); ++i) r.img[i] = b.img[a.img[i]];
    return r;
}

// Checks that the image array is a bijection.
inline void validate_perm(const Perm& p) {
    int n = p.degree();
    std::vector<bool> seen(n, false);
    for (int x : p.img) {
        if (x < 0 || x >= n || seen[x])
            throw std::invalid_argument("perm: image array is not a permutation");
        seen[x] = true;
    }
}

}  // namespace metdim

#endif  // METDIM_PERM_HPP
