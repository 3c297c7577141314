#include "lck/tableau.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace lck {

Column::Column(int k_, int n_, std::vector<int> e) : k(k_), n(n_), entries(std::move(e)) {
    if (static_cast<int>(entries.size()) != k) {
        throw std::invalid_argument("column: expected " + std::to_string(k) + " entries");
    }
    for (int i = 0; i < k; ++i) {
        if (entries[i] < 1 || entries[i] > n) {
            throw std::invalid_argument("column: entry out of [1,n]");
        }
        if (i > 0 && entries[i - 1] >= entries[i]) {
            throw std::invalid_argument("column: entries not strictly increasing");
        }
    }
}

std::string to_string(const Column& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c.entries[i]);
    }
    return out + ")";
}

bool is_fundamental(const Column& c) {
    if (c.entries.empty()) return false;
    if (c.max() - c.min() != c.k) return false;  // span k+1 values, one missing
    return true;  // with k entries and span k+1, exactly one interior value is missing
}

Column fundamental_column(int a, int b, int k, int n) {
    if (k < 2) throw std::invalid_argument("fundamental_column: k must be >= 2");
    if (a > b || b > a + k - 2) {
        throw std::invalid_argument("fundamental_column: need a <= b <= a+k-2");
    }
    std::vector<int> entries;
    entries.reserve(k);
    for (int v = 1 - a; v <= k - a + 1; ++v) {
        if (v != k - b) entries.push_back(v);
    }
    if (entries.front() < 1 || entries.back() > n) {
        throw std::invalid_argument("fundamental_column: entries out of [1,n]");
    }
    return Column(k, n, std::move(entries));
}

Segment column_to_segment(const Column& c) {
    if (!is_fundamental(c)) {
        throw std::invalid_argument("column_to_segment: column is not fundamental");
    }
    int i = c.min();           // content [i, i+k] \ {r}
    int r = 0;
    for (int v = i, idx = 0; v <= i + c.k; ++v) {
        if (idx < c.k && c.entries[idx] == v) {
            ++idx;
        } else {
            r = v;
        }
    }
    return Segment(1 - i, c.k - r);
}

std::vector<int> missing_numbers(const Column& c) {
    std::vector<int> out;
    for (int v = c.min(), idx = 0; v <= c.max(); ++v) {
        if (idx < static_cast<int>(c.entries.size()) && c.entries[idx] == v) {
            ++idx;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

Column promotion(const Column& c) {
    std::vector<int> out;
    out.reserve(c.entries.size());
    if (c.max() < c.n) {
        for (int v : c.entries) out.push_back(v + 1);
    } else {
        out.push_back(1);
        for (int v : c.entries) {
            if (v < c.n) out.push_back(v + 1);
        }
    }
    return Column(c.k, c.n, std::move(out));
}

namespace {

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// All elements of d2 avoid the closed span of d1.
bool splits_around(const std::vector<int>& d2, const std::vector<int>& d1) {
    if (d1.empty()) return true;
    int lo = d1.front(), hi = d1.back();
    return std::all_of(d2.begin(), d2.end(), [&](int v) { return v < lo || v > hi; });
}

}  // namespace

bool weakly_separated(const std::vector<int>& i_set, const std::vector<int>& j_set) {
    std::vector<int> imj = sorted_difference(i_set, j_set);
    std::vector<int> jmi = sorted_difference(j_set, i_set);
    return splits_around(jmi, imj) || splits_around(imj, jmi);
}

std::optional<SeparationWitness> separation_witness(const std::vector<int>& i_set,
                                                    const std::vector<int>& j_set) {
    std::vector<int> imj = sorted_difference(i_set, j_set);
    std::vector<int> jmi = sorted_difference(j_set, i_set);
    auto make = [](bool split_j, const std::vector<int>& outer, const std::vector<int>& inner) {
        SeparationWitness w;
        w.split_j_minus_i = split_j;
        int lo = inner.empty() ? 0 : inner.front();
        for (int v : outer) {
            (inner.empty() || v < lo ? w.low : w.high).push_back(v);
        }
        return w;
    };
    if (splits_around(jmi, imj)) return make(true, jmi, imj);
    if (splits_around(imj, jmi)) return make(false, imj, jmi);
    return std::nullopt;
}

bool not_ws_small_gap(const Column& c1, const Column& c2) {
    Segment s1 = column_to_segment(c1);  // [a,b]
    Segment s2 = column_to_segment(c2);  // [c,d]
    int k = c1.k;
    bool kb_in_c2 = std::binary_search(c2.entries.begin(), c2.entries.end(), k - s1.end);
    bool kd_in_c1 = std::binary_search(c1.entries.begin(), c1.entries.end(), k - s2.end);
    long cross = static_cast<long>(s1.begin - s2.begin) * (s1.end - s2.end);
    return kb_in_c2 && kd_in_c1 && cross > 0;
}

Tableau::Tableau(int k, int n) : k_(k), n_(n), rows_(k) {}

Tableau::Tableau(int k, int n, std::vector<std::vector<int>> rows)
    : k_(k), n_(n), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != k_) {
        throw std::invalid_argument("tableau: expected k rows");
    }
    std::size_t m = rows_.empty() ? 0 : rows_[0].size();
    for (auto& row : rows_) {
        if (row.size() != m) throw std::invalid_argument("tableau: ragged rows");
        std::sort(row.begin(), row.end());
        for (int v : row) {
            if (v < 1 || v > n_) throw std::invalid_argument("tableau: entry out of [1,n]");
        }
    }
}

Column Tableau::column(std::size_t c) const {
    std::vector<int> e;
    e.reserve(k_);
    for (const auto& row : rows_) e.push_back(row[c]);
    return Column(k_, n_, std::move(e));
}

bool Tableau::is_semistandard() const {
    for (std::size_t c = 0; c < columns(); ++c) {
        for (int r = 0; r + 1 < k_; ++r) {
            if (rows_[r][c] >= rows_[r + 1][c]) return false;
        }
    }
    return true;
}

std::string to_string(const Tableau& t) {
    if (t.empty()) return "1";
    std::string out;
    for (const auto& row : t.rows()) {
        out += "[";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(row[i]);
        }
        out += "]";
    }
    return out;
}

Tableau tableau_from_columns(int k, int n, const std::vector<Column>& cols) {
    std::vector<std::vector<int>> rows(k);
    for (const Column& c : cols) {
        if (c.k != k) throw std::invalid_argument("tableau_from_columns: column height mismatch");
        for (int r = 0; r < k; ++r) rows[r].push_back(c.entries[r]);
    }
    return Tableau(k, n, std::move(rows));
}

Tableau tableau_union(const Tableau& s, const Tableau& t) {
    if (s.k() != t.k() || s.n() != t.n()) {
        throw std::invalid_argument("tableau_union: context mismatch");
    }
    std::vector<std::vector<int>> rows(s.k());
    for (int r = 0; r < s.k(); ++r) {
        std::merge(s.rows()[r].begin(), s.rows()[r].end(), t.rows()[r].begin(),
                   t.rows()[r].end(), std::back_inserter(rows[r]));
    }
    return Tableau(s.k(), s.n(), std::move(rows));
}

bool is_factor(const Tableau& s, const Tableau& t) {
    if (s.k() != t.k() || s.n() != t.n()) return false;
    for (int r = 0; r < s.k(); ++r) {
        if (!std::includes(t.rows()[r].begin(), t.rows()[r].end(), s.rows()[r].begin(),
                           s.rows()[r].end())) {
            return false;
        }
    }
    return true;
}

Tableau tableau_quotient(const Tableau& t, const Tableau& s) {
    if (!is_factor(s, t)) throw std::invalid_argument("tableau_quotient: not a factor");
    std::vector<std::vector<int>> rows(t.k());
    for (int r = 0; r < t.k(); ++r) {
        std::set_difference(t.rows()[r].begin(), t.rows()[r].end(), s.rows()[r].begin(),
                            s.rows()[r].end(), std::back_inserter(rows[r]));
    }
    return Tableau(t.k(), t.n(), std::move(rows));
}

bool is_trivial(const Tableau& t) {
    for (std::size_t c = 0; c < t.columns(); ++c) {
        for (int r = 0; r + 1 < t.k(); ++r) {
            if (t.rows()[r + 1][c] != t.rows()[r][c] + 1) return false;
        }
    }
    return true;
}

Tableau reduce(const Tableau& t) {
    if (t.empty()) return t;
    // Trivial columns starting at i consume value i+r in row r; the counts for
    // different i are independent, so one pass removes the maximal factor.
    std::vector<std::map<int, int>> counts(t.k());
    for (int r = 0; r < t.k(); ++r) {
        for (int v : t.rows()[r]) ++counts[r][v];
    }
    for (int i = 1; i + t.k() - 1 <= t.n(); ++i) {
        int c = std::numeric_limits<int>::max();
        for (int r = 0; r < t.k(); ++r) {
            auto it = counts[r].find(i + r);
            c = std::min(c, it == counts[r].end() ? 0 : it->second);
        }
        if (c > 0) {
            for (int r = 0; r < t.k(); ++r) counts[r][i + r] -= c;
        }
    }
    std::vector<std::vector<int>> rows(t.k());
    for (int r = 0; r < t.k(); ++r) {
        for (const auto& [v, c] : counts[r]) rows[r].insert(rows[r].end(), c, v);
    }
    return Tableau(t.k(), t.n(), std::move(rows));
}

std::vector<Column> small_gap_columns(const Tableau& t) {
    std::vector<Column> out;
    for (std::size_t c = 0; c < t.columns(); ++c) {
        Column col = t.column(c);
        std::vector<int> missing = missing_numbers(col);
        int i1 = col.min();
        for (std::size_t s = 0; s < missing.size(); ++s) {
            int a = 1 - (i1 + static_cast<int>(s));
            int b = t.k() - missing[s];
            out.push_back(fundamental_column(a, b, t.k(), t.n()));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Column& x, const Column& y) { return x.entries < y.entries; });
    return out;
}

IJSequences ij_sequences(const Tableau& t) {
    IJSequences out;
    for (std::size_t c = 0; c < t.columns(); ++c) {
        Column col = t.column(c);
        std::vector<int> missing = missing_numbers(col);
        for (std::size_t s = 0; s < missing.size(); ++s) {
            out.i_seq.push_back(col.min() + static_cast<int>(s));
            out.j_seq.push_back(missing[s]);
        }
    }
    return out;
}

bool is_ladder_tableau(const Tableau& t) {
    int prev_max = std::numeric_limits<int>::min();
    for (std::size_t c = 0; c < t.columns(); ++c) {
        std::vector<int> missing = missing_numbers(t.column(c));
        if (missing.empty()) continue;  // trivial column, no segment
        if (missing.front() <= prev_max) return false;
        prev_max = missing.back();
    }
    return true;
}

bool is_regular_tableau(const Tableau& t) {
    IJSequences ij = ij_sequences(t);
    auto distinct = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    return distinct(ij.i_seq) && distinct(ij.j_seq);
}

}  // namespace lck
