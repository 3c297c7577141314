// Permutations in one-line notation, Bruhat order, pattern avoidance, and
// the (lambda,mu) double-coset representatives used by the ladder product.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lck {

// Bijection on [1,m], stored as images in one-line notation.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);
    static Permutation identity(int m);

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }  // 1-based

    Permutation inverse() const;
    // Right multiplication by the simple transposition s_i (swap positions i, i+1).
    Permutation swap_positions(int i) const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

std::string to_string(const Permutation& p);

// Number of inversions.
int length(const Permutation& x);

// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& y);

// No i < j < l with x(i) > x(j) > x(l).
bool is_321_avoiding(const Permutation& x);

// Longest-decreasing-subsequence bound: avoids both 3412 and 4231 iff the
// Schubert variety is smooth; then every KL polynomial below it is 1.
bool is_smooth(const Permutation& x);

// Enumerate all of S_m (lexicographic order of one-line notation).
std::vector<Permutation> all_permutations(int m);

// The maximal-length x' with m_{x'}(lambda,mu) = m_x(lambda,mu), where
// m_x = sum_i [lambda_i, mu_{x(i)}]. lambda and mu weakly increasing.
Permutation longest_coset_representative(const Permutation& x, const std::vector<int>& lambda,
                                         const std::vector<int>& mu);

}  // namespace lck
