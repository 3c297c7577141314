// Kazhdan-Lusztig polynomials for the symmetric group, computed by the
// classical recursion with Bruhat-interval caching. One context per rank m;
// contexts are not synchronized, use one per thread (see global_kl).

#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "lck/permutation.hpp"

namespace lck {

// Integer polynomial in q, coefficient of q^d at index d.
struct IntPolynomial {
    std::vector<long long> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> c) : coeffs(std::move(c)) { trim(); }
    static IntPolynomial one() { return IntPolynomial({1}); }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(coeffs.size())) ? coeffs[d] : 0;
    }
    long long eval_one() const;

    void trim();
    IntPolynomial& operator+=(const IntPolynomial& o);
    // this -= c * q^shift * o
    void sub_shifted(long long c, int shift, const IntPolynomial& o);
    IntPolynomial shifted(int d) const;  // q^d * this

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

std::string to_string(const IntPolynomial& p);

class KLContext {
public:
    explicit KLContext(int m);

    int rank() const { return m_; }

    // P_{x,w}. Zero polynomial when x is not <= w.
    const IntPolynomial& kl(const Permutation& x, const Permutation& w);
    const IntPolynomial& kl_encoded(uint64_t x, uint64_t w) { return kl_enc(x, w); }

    // All z <= w, enumerated once and cached (shared across queries).
    const std::vector<uint64_t>& interval_below(const Permutation& w);

    Permutation decode(uint64_t enc) const;
    uint64_t encode(const Permutation& p) const;

    int length_of(uint64_t enc) const;  // inversion count, no caching
    bool leq(uint64_t x, uint64_t w) const;

private:
    struct PairHash {
        std::size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
            return std::hash<uint64_t>()(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
        }
    };

    const IntPolynomial& kl_enc(uint64_t x, uint64_t w);
    const std::vector<std::pair<uint64_t, int>>& mu_list(uint64_t w, int s);
    const std::vector<uint64_t>& interval_enc(uint64_t w);
    bool smooth(uint64_t w);
    std::vector<uint64_t> covers_below(uint64_t w) const;

    int at(uint64_t enc, int pos) const {  // 0-based position, 1-based value
        return static_cast<int>((enc >> (4 * pos)) & 0xF) + 1;
    }
    uint64_t swap_pos(uint64_t enc, int s) const;  // 0-based s: swap s, s+1
    int first_right_descent(uint64_t w) const;     // -1 if none

    int m_;
    std::unordered_map<std::pair<uint64_t, uint64_t>, IntPolynomial, PairHash> memo_;
    std::unordered_map<uint64_t, std::vector<uint64_t>> intervals_;
    std::vector<uint64_t> interval_order_;  // cache keys, insertion order
    std::unordered_map<uint64_t, std::vector<std::pair<uint64_t, int>>> mu_;  // key: w*16+s
    std::unordered_map<uint64_t, bool> smooth_;
    IntPolynomial zero_, one_;
};

// Thread-local context registry.
KLContext& global_kl(int m);

// P_{x,w} through the thread-local context.
IntPolynomial kl_poly(const Permutation& x, const Permutation& w);

}  // namespace lck
