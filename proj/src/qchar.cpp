#include "lck/qchar.hpp"

#include <algorithm>

namespace lck {

void LaurentYMonomial::mul(int node, int shift, int exp, int k) {
    if (node == 0 || node == k || exp == 0) return;
    if (node < 0 || node > k) throw std::invalid_argument("laurent monomial: node out of range");
    auto key = std::make_pair(node, shift);
    auto it = exponents.find(key);
    if (it == exponents.end()) {
        exponents.emplace(key, exp);
    } else if ((it->second += exp) == 0) {
        exponents.erase(it);
    }
}

bool LaurentYMonomial::is_dominant() const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [](const auto& kv) { return kv.second > 0; });
}

DominantMonomial LaurentYMonomial::dominant_part() const {
    if (!is_dominant()) throw std::invalid_argument("dominant_part: monomial is not dominant");
    DominantMonomial out;
    for (const auto& [key, e] : exponents) out.mul(YVariable(key.first, key.second), e);
    return out;
}

std::string to_string(const LaurentYMonomial& m) {
    if (m.exponents.empty()) return "1";
    std::string out;
    for (const auto& [key, e] : m.exponents) {
        out += "Y_{" + std::to_string(key.first) + "," + std::to_string(key.second) + "}";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

long long QCharacter::term_count() const {
    long long c = 0;
    for (const auto& [m, mult] : terms) c += mult;
    return c;
}

QCharacter fundamental_qchar(int i, int p, int k) {
    if (i < 1 || i > k - 1) throw std::invalid_argument("fundamental_qchar: node out of [1,k-1]");
    if (((i + p) % 2 + 2) % 2 != 1) {
        throw std::invalid_argument("fundamental_qchar: (i,p) not in I-hat");
    }
    QCharacter chi;
    chi.k = k;
    // One monomial per increasing tuple 1 <= j_1 < ... < j_i <= k.
    std::vector<int> subset(i);
    for (int t = 0; t < i; ++t) subset[t] = t + 1;
    while (true) {
        LaurentYMonomial mono;
        for (int t = 0; t < i; ++t) {
            int j = subset[t];
            int mth = t + 1;
            mono.mul(j, p + i + j - 2 * mth, 1, k);
            mono.mul(j - 1, p + i + j - 2 * mth + 1, -1, k);
        }
        chi.terms[mono] += 1;
        int pos = i - 1;
        while (pos >= 0 && subset[pos] == k - (i - 1 - pos)) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int t = pos + 1; t < i; ++t) subset[t] = subset[t - 1] + 1;
    }
    return chi;
}

std::set<LaurentYMonomial> single_negative_monomials(int i, int p, int k) {
    std::set<LaurentYMonomial> out;
    for (int q = 0; q <= i - 1; ++q) {
        for (int r = 1; r <= k - i; ++r) {
            LaurentYMonomial mono;
            mono.mul(q, p + i - q, 1, k);
            mono.mul(q + r, p + i + r - q, -1, k);
            mono.mul(i + r, p + r, 1, k);
            out.insert(mono);
        }
    }
    return out;
}

PairStatus fundamental_pair_status(int i, int p, int j, int s, int k) {
    if (p > s) return fundamental_pair_status(j, s, i, p, k);
    if (i < 1 || i > k - 1 || j < 1 || j > k - 1) {
        throw std::invalid_argument("fundamental_pair_status: node out of [1,k-1]");
    }
    if (((i + p) % 2 + 2) % 2 != 1 || ((j + s) % 2 + 2) % 2 != 1) {
        throw std::invalid_argument("fundamental_pair_status: parameters not in I-hat");
    }
    PairStatus out;
    out.reducible = p + i + 2 <= j + s && j + s <= 2 * k + p - i && -p - i <= j - s &&
                    j - s <= i - p - 2;
    if (out.reducible) {
        out.q = (i + j + p - s) / 2;
        out.r = (-i + j - p + s) / 2;
        LaurentYMonomial sub;
        sub.mul(out.q, p + i - out.q, 1, k);
        sub.mul(i + out.r, p + out.r, 1, k);
        out.sub_weight = sub.dominant_part();
        LaurentYMonomial quot;
        quot.mul(j, s, 1, k);
        quot.mul(i, p, 1, k);
        out.quotient_weight = quot.dominant_part();
    }
    return out;
}

std::set<int> cyclicity_gap_set(int k) {
    if (k < 2) throw std::invalid_argument("cyclicity_gap_set: k must be >= 2");
    std::set<int> out;
    for (int i = 1; i <= k - 1; ++i) {
        for (int j = 1; j <= k - 1; ++j) {
            for (int m = std::max(i, j); m <= k && m <= i + j - 1; ++m) {
                out.insert(2 * m - i - j + 2);
            }
        }
    }
    return out;
}

bool is_cyclic_pair(int i, int p, int j, int s, int k) {
    (void)i;
    (void)j;
    return cyclicity_gap_set(k).count(p - s) == 0;
}

std::vector<DominantMonomial> dominant_terms_of_product(int i, int p, int j, int s, int k) {
    QCharacter a = fundamental_qchar(j, s, k);
    QCharacter b = fundamental_qchar(i, p, k);
    std::map<DominantMonomial, long long> dominant;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            LaurentYMonomial prod = ma;
            for (const auto& [key, e] : mb.exponents) prod.mul(key.first, key.second, e, k);
            if (prod.is_dominant()) dominant[prod.dominant_part()] += ca * cb;
        }
    }
    std::vector<DominantMonomial> out;
    for (const auto& [m, c] : dominant) {
        for (long long t = 0; t < c; ++t) out.push_back(m);
    }
    return out;
}

}  // namespace lck
