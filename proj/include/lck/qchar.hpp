// q-characters of fundamental representations of U_q(sl_k-hat) via the
// closed tableau-subset formula, single-negative monomial enumeration, and
// the reducibility classification of a tensor product of two fundamentals.

#pragma once

#include <map>
#include <set>
#include <vector>

#include "lck/correspond.hpp"

namespace lck {

// Laurent monomial in the Y variables; exponents of either sign, boundary
// nodes 0 and k dropped at construction.
struct LaurentYMonomial {
    std::map<std::pair<int, int>, int> exponents;  // (node, shift) -> exponent

    void mul(int node, int shift, int exp, int k);  // applies Y_{0,s}=Y_{k,s}=1
    bool is_dominant() const;
    DominantMonomial dominant_part() const;  // valid only when dominant

    friend auto operator<=>(const LaurentYMonomial&, const LaurentYMonomial&) = default;
};

std::string to_string(const LaurentYMonomial& m);

// Formal sum of Laurent monomials with positive multiplicities.
struct QCharacter {
    int k = 0;
    std::map<LaurentYMonomial, long long> terms;

    long long term_count() const;  // with multiplicity
};

// chi_q(L(Y_{i,p})): one monomial per i-subset of [k]; C(k,i) terms.
QCharacter fundamental_qchar(int i, int p, int k);

// The monomials of chi_q(L(Y_{i,p})) with exactly one negative exponent,
// directly from the two-interval description; cardinality i*(k-i).
std::set<LaurentYMonomial> single_negative_monomials(int i, int p, int k);

struct PairStatus {
    bool reducible = false;
    int q = 0, r = 0;  // filled when reducible
    DominantMonomial sub_weight;       // highest weight of the submodule
    DominantMonomial quotient_weight;  // product of the two highest weights
};

// Inequality classification of L(Y_{j,s}) (x) L(Y_{i,p}); arguments are
// swapped internally so that p <= s.
PairStatus fundamental_pair_status(int i, int p, int j, int s, int k);

// S = {2m-i-j+2 | 1 <= i,j <= k-1, max(i,j) <= m <= k, m <= i+j-1}; the
// tensor product of two fundamentals with p-s outside S is cyclic.
std::set<int> cyclicity_gap_set(int k);
bool is_cyclic_pair(int i, int p, int j, int s, int k);

// All dominant monomials (with multiplicity) of the product of the two
// fundamental characters; 1 when irreducible, 2 when reducible.
std::vector<DominantMonomial> dominant_terms_of_product(int i, int p, int j, int s, int k);

}  // namespace lck
