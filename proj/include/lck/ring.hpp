// Grothendieck-ring arithmetic: the simple <-> standard basis change through
// Kazhdan-Lusztig values, products, reduction to the quotient ring R_k, the
// independent irreducibility oracle, and the tiling decomposition of a
// product of two ladders.

#pragma once

#include <map>
#include <optional>

#include "lck/errors.hpp"
#include "lck/segment.hpp"

namespace lck {

enum class Basis { simple, standard };

// Integer combination of multisegment classes. Keys are canonicalized to the
// descending left-aligned order; zero coefficients are never stored.
class RingElement {
public:
    explicit RingElement(Basis b) : basis_(b) {}
    static RingElement unit(Basis b);  // class of the empty multisegment

    Basis basis() const { return basis_; }
    const std::map<Multisegment, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Multisegment& m, long long c);
    long long coefficient(const Multisegment& m) const;

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    Basis basis_;
    std::map<Multisegment, long long> terms_;
};

std::string to_string(const RingElement& e);

Multisegment canonical_key(const Multisegment& m);

// The permutation data of the basis-change sum: begins ascending, ends
// descending, and
// the canonical sigma with ties resolved inside equal-begin / equal-end
// blocks (the minimal double-coset representative).
struct SigmaData {
    std::vector<int> a;  // ascending
    std::vector<int> b;  // descending
    std::vector<int> sigma;  // one-line
};
SigmaData sigma_of(const Multisegment& m);

// Z(m) as a signed combination of standard classes.
RingElement simple_to_standard(const Multisegment& m);
RingElement simple_to_standard(const RingElement& e);

// Exact inverse, by recursive unitriangular substitution.
RingElement standard_to_simple(const RingElement& e);

// Standard classes multiply by concatenation; simple inputs are converted.
RingElement multiply(const RingElement& e1, const RingElement& e2);

// Image of one class in R_k: nothing survives past length k, length-k
// segments trivialize. nullopt = the zero class.
std::optional<Multisegment> reduce_multisegment_mod_k(const Multisegment& m, int k);

// Term-wise reduction, colliding keys summed.
RingElement reduce_mod_k(const RingElement& e, int k);

struct OracleResult {
    bool irreducible = false;
    RingElement decomposition{Basis::simple};
};

// reduce_mod_k(standard_to_simple(multiply(...)), k), with the quotient
// pushed through the recursion so dead keys prune whole subtrees.
OracleResult tensor_oracle(const Multisegment& m, const Multisegment& n, int k);

struct TilingStep {
    Segment sub;           // the tile cut out of the source
    int source_index = 0;  // 1-based into the <=_b-ascending sorted m+n
    bool from_m = false;
};

struct TilingSequence {
    std::vector<TilingStep> steps;
    bool tiled = false;
};

// The alternating-side covering of delta by suffixes of segments of m and n.
TilingSequence seq(const Multisegment& m, const Multisegment& n, const Segment& delta);
bool is_tiled(const Multisegment& m, const Multisegment& n, const Segment& delta);

// Whether every segment of mx tiles the residual pair in turn.
bool tiles(const Multisegment& mx, const Multisegment& m, const Multisegment& n);

// [Z(m) x Z(n)] = sum of [Z(m_x)] over exchange classes that tile and whose
// longest representative is 321-avoiding. Both inputs must be ladders; the
// enumeration refuses more than `budget` total segments.
std::vector<Multisegment> ladder_decomposition(const Multisegment& m, const Multisegment& n,
                                               int budget = 9);

// Image in R_k: terms reduced, zeros dropped (multiset semantics kept).
std::vector<Multisegment> ladder_decomposition_k(const Multisegment& m, const Multisegment& n,
                                                 int k, int budget = 9);

}  // namespace lck
