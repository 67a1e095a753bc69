#ifndef METDIM_GF_HPP
#define METDIM_GF_HPP

#include <stdexcept>
#include <vector>

namespace metdim {

// Arithmetic for GF(q), q = p^e with e <= 4, elements numbered 0..q-1.
// Element u encodes the polynomial sum_i d_i x^i over GF(p) with digits
// d_i = (u / p^i) % p. The modulus is x^2 - t with t the least quadratic
// non-residue mod p for q = p^2 (x^2 + x + 1 when p = 2); for e >= 3 it is
// the first monic irreducible of degree e in digit-encoding order.
class GF {
public:
    explicit GF(int q) : q_(q) {
        p_ = smallest_prime_factor(q);
        e_ = 0;
        int m = q;
        while (m % p_ == 0) { m /= p_; ++e_; }
        if (m != 1 || e_ > 4)
            throw std::invalid_argument("GF: order must be p^e with e <= 4");
        if (e_ >= 2) {
            pw_.assign(e_, 1);
            for (int i = 1; i < e_; ++i) pw_[i] = pw_[i - 1] * p_;
            red_.assign(e_, 0);
            if (e_ == 2) {
                if (p_ == 2) { red_[0] = 1; red_[1] = 1; }  // x^2 = x + 1
                else red_[0] = least_non_residue(p_);       // x^2 = t
            } else {
                find_modulus();
            }
        }
    }

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }

    int add(int u, int v) const {
        if (e_ == 1) return (u + v) % p_;
        int r = 0;
        for (int i = e_ - 1; i >= 0; --i)
            r = r * p_ + (digit(u, i) + digit(v, i)) % p_;
        return r;
    }
    int neg(int u) const {
        if (e_ == 1) return (p_ - u) % p_;
        int r = 0;
        for (int i = e_ - 1; i >= 0; --i)
            r = r * p_ + (p_ - digit(u, i)) % p_;
        return r;
    }
    int sub(int u, int v) const { return add(u, neg(v)); }

    int mul(int u, int v) const {
        if (e_ == 1) return (u * v) % p_;
        int t[7] = {0, 0, 0, 0, 0, 0, 0};
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j)
                t[i + j] = (t[i + j] + digit(u, i) * digit(v, j)) % p_;
        for (int i = 2 * e_ - 2; i >= e_; --i) {
            int c = t[i];
            if (c == 0) continue;
            t[i] = 0;
            for (int j = 0; j < e_; ++j)
                t[i - e_ + j] = (t[i - e_ + j] + c * red_[j]) % p_;
        }
        int r = 0;
        for (int i = e_ - 1; i >= 0; --i) r = r * p_ + t[i];
        return r;
    }

    int pow(int u, long long e) const {
        int r = one();
        int base = u;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    int zero() const { return 0; }
    int one() const { return 1; }

    // Nonzero squares of the field.
    std::vector<bool> square_table() const {
        std::vector<bool> sq(q_, false);
        for (int z = 0; z < q_; ++z)
            if (z != zero()) sq[mul(z, z)] = true;
        return sq;
    }

private:
    static int smallest_prime_factor(int q) {
        if (q < 2) throw std::invalid_argument("GF: order too small");
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) return d;
        return q;
    }

    static int least_non_residue(int p) {
        std::vector<bool> res(p, false);
        for (int z = 1; z < p; ++z) res[z * z % p] = true;
        for (int t = 2; t < p; ++t)
            if (!res[t]) return t;
        throw std::logic_error("GF: no non-residue found");
    }

    int digit(int u, int i) const { return (u / pw_[i]) % p_; }

    // Picks the first monic irreducible x^e + c_{e-1} x^{e-1} + ... + c_0 whose
    // digit encoding sum_i c_i p^i is least, and stores x^e = sum red_[j] x^j.
    void find_modulus() {
        for (int m = 0; m < q_; ++m) {
            std::vector<int> f(e_ + 1);
            int mm = m;
            for (int i = 0; i < e_; ++i) { f[i] = mm % p_; mm /= p_; }
            f[e_] = 1;
            if (irreducible(f)) {
                for (int j = 0; j < e_; ++j) red_[j] = (p_ - f[j]) % p_;
                return;
            }
        }
        throw std::logic_error("GF: no irreducible polynomial found");
    }

    // Degree <= 4, so irreducible iff no monic divisor of degree <= e/2.
    bool irreducible(const std::vector<int>& f) const {
        for (int d = 1; 2 * d <= e_; ++d) {
            int nd = 1;
            for (int i = 0; i < d; ++i) nd *= p_;
            for (int m = 0; m < nd; ++m) {
                std::vector<int> g(d + 1);
                int mm = m;
                for (int i = 0; i < d; ++i) { g[i] = mm % p_; mm /= p_; }
                g[d] = 1;
                if (divides(g, f)) return false;
            }
        }
        return true;
    }

    bool divides(const std::vector<int>& g, std::vector<int> f) const {
        int dg = int(g.size()) - 1;
        for (int i = int(f.size()) - 1; i >= dg; --i) {
            int c = f[i];
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j)
                f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p_ + p_) % p_;
        }
        for (int i = 0; i < dg; ++i)
            if (f[i] != 0) return false;
        return true;
    }

    int q_, p_, e_;
    std::vector<int> red_;  // x^e = sum_j red_[j] x^j
    std::vector<int> pw_;   // p^0 .. p^{e-1}
};

}  // namespace metdim

#endif  // METDIM_GF_HPP
