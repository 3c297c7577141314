// Rectangular semistandard Young tableaux with k rows and entries in [1,n],
// fundamental (small-gap) columns, the union/factor/quotient monoid structure,
// trivial reduction, column promotion and weak separation.

#pragma once

#include <optional>
#include <vector>

#include "lck/segment.hpp"

namespace lck {

// One column: k strictly increasing entries in [1,n].
struct Column {
    int k = 0;
    int n = 0;
    std::vector<int> entries;  // strictly increasing

    Column() = default;
    Column(int k_, int n_, std::vector<int> e);

    int min() const { return entries.front(); }
    int max() const { return entries.back(); }

    friend auto operator<=>(const Column&, const Column&) = default;
};

std::string to_string(const Column& c);

// Content is [i, i+k] minus one interior value.
bool is_fundamental(const Column& c);

// T_{a,b}: entries {1-a, ..., k-a+1} \ {k-b}. Defined for a <= b <= a+k-2.
Column fundamental_column(int a, int b, int k, int n);

// The segment [a,b] with T_{a,b} = c. Rejects non-fundamental columns.
Segment column_to_segment(const Column& c);

// Missing numbers of a one-column tableau, [min,max] \ entries, increasing.
std::vector<int> missing_numbers(const Column& c);

// Schützenberger promotion of a single column: all entries +1 when max < n,
// otherwise {1} followed by the shifted entries below n.
Column promotion(const Column& c);

// Weak separation of two k-subsets of [1,n] (Leclerc-Zelevinsky).
bool weakly_separated(const std::vector<int>& i_set, const std::vector<int>& j_set);

// When weakly separated, one witnessing split: which difference set was split
// and its low/high parts.
struct SeparationWitness {
    bool split_j_minus_i = false;  // true: J-I = J' < I-J < J''; false: symmetric
    std::vector<int> low, high;
};
std::optional<SeparationWitness> separation_witness(const std::vector<int>& i_set,
                                                    const std::vector<int>& j_set);

// Fast non-weak-separation test for two fundamental columns:
// k-b in I_{T'}, k-d in I_T and (a-c)(b-d) > 0.
bool not_ws_small_gap(const Column& c1, const Column& c2);

// Rectangular tableau stored as k sorted rows of equal length.
class Tableau {
public:
    Tableau() = default;
    Tableau(int k, int n);  // empty tableau (0 columns)
    Tableau(int k, int n, std::vector<std::vector<int>> rows);

    int k() const { return k_; }
    int n() const { return n_; }
    std::size_t columns() const { return rows_.empty() ? 0 : rows_[0].size(); }
    bool empty() const { return columns() == 0; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    Column column(std::size_t c) const;
    bool is_semistandard() const;

    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    int k_ = 0;
    int n_ = 0;
    std::vector<std::vector<int>> rows_;
};

std::string to_string(const Tableau& t);

Tableau tableau_from_columns(int k, int n, const std::vector<Column>& cols);

// Row-wise multiset union / containment / difference.
Tableau tableau_union(const Tableau& s, const Tableau& t);
bool is_factor(const Tableau& s, const Tableau& t);
Tableau tableau_quotient(const Tableau& t, const Tableau& s);

// Each entry one less than the entry below it, in every column.
bool is_trivial(const Tableau& t);

// Remove a maximal trivial factor.
Tableau reduce(const Tableau& t);

inline bool equivalent(const Tableau& s, const Tableau& t) {
    return reduce(s) == reduce(t);
}

// The fundamental columns whose union is ~-equivalent to T, in ascending
// lexicographic order. Built column by column from the missing numbers.
std::vector<Column> small_gap_columns(const Tableau& t);

struct IJSequences {
    std::vector<int> i_seq;
    std::vector<int> j_seq;
};

// Concatenation of the per-column sequences: j lists the missing numbers
// increasingly, i runs from the column's first entry.
IJSequences ij_sequences(const Tableau& t);

// m_T is a ladder iff each column's missing numbers all lie below the next
// column's; regular iff the i and j sequences have no repeats.
bool is_ladder_tableau(const Tableau& t);
bool is_regular_tableau(const Tableau& t);

}  // namespace lck
