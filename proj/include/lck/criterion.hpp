// The X/Y index sets, the ⇝ relations and matching machinery, the LC_k
// conditions, the NC_k normal form for ladders, socles of cuspidal products,
// and the top-level irreducibility decisions.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lck/segment.hpp"
#include "lck/tableau.hpp"

namespace lck {

// (i,j), 1-based into the stored orders of the two multisegments.
using IndexPair = std::pair<int, int>;
using PairSet = std::set<IndexPair>;

struct XYSets {
    PairSet x;
    PairSet y;
};

// X = {(i,j): Delta_i < Delta'_j}, Y with the left-shifted first argument.
XYSets xy_sets(const Multisegment& m, const Multisegment& n);
XYSets xy_sets_k(const Multisegment& m, const Multisegment& n, int k);

// Tableau-indexed sets over the lex-ordered small-gap columns, via weak
// separation and promotion. Equals xy_sets_k of the corresponding
// multisegments.
XYSets xy_sets_tableaux(const Tableau& t, const Tableau& tp);

// y ⇝ x for x in X, y in Y.
using MatchRelation = std::function<bool(const IndexPair& y, const IndexPair& x)>;

MatchRelation match_relation(const Multisegment& m, const Multisegment& n);
MatchRelation match_relation_k(const Multisegment& m, const Multisegment& n, int k);

// A matching function witnessing an LC condition: x -> f(x).
using MatchWitness = std::vector<std::pair<IndexPair, IndexPair>>;

// True iff an injective f: X -> Y with f(x) ⇝ x exists (maximum bipartite
// matching on the admissibility graph); fills the witness when asked.
bool lc(const Multisegment& m, const Multisegment& n, MatchWitness* witness = nullptr);
bool lc_k(const Multisegment& m, const Multisegment& n, int k, MatchWitness* witness = nullptr);
bool lc_tableaux(const Tableau& t, const Tableau& tp, MatchWitness* witness = nullptr);

// The greedy best matching: processes X in decreasing supplied
// order, assigning the minimal available related y.
struct Matching {
    std::map<IndexPair, IndexPair> assignment;  // domain -> image
    std::vector<IndexPair> unmatched;           // X \ domain, in supplied order
};
Matching best_matching(const std::vector<IndexPair>& x_ordered,
                       const std::vector<IndexPair>& y_ordered, const MatchRelation& rel);

// Witness (i, j, m) for the NC_k normal form.
struct NCWitness {
    int i = 0, j = 0, m = 0;
};

// Negation of LC_k for ladder pairs, by direct witness search. Inputs are
// re-sorted to left-aligned ascending begins internally.
bool nc_k(const Multisegment& m, const Multisegment& n, int k, NCWitness* witness = nullptr);

// soc(Z([a,a]) x Z(n)) in C_k: n + [a,a] when the best matching is total,
// otherwise Delta_i replaced by [a, e(Delta_i)] at the minimal unmatched i;
// length-k segments are then removed. n is sorted descending by begins.
Multisegment socle_with_cuspidal(int a, const Multisegment& n, int k);

// Irreducible iff LC_k holds both ways. Proven for snake pairs; applied, as
// in the worked examples, whenever at least one factor is a ladder.
bool irreducible_snake_pair(const Multisegment& m, const Multisegment& n, int k);

// Fundamental factor at an extremal node: seg of length 1 or k-1, any m.
bool irreducible_extremal(const Segment& seg, const Multisegment& m, int k);

}  // namespace lck
