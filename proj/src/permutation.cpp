#include "lck/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace lck {

Permutation::Permutation(std::vector<int> img) : images(std::move(img)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1]) {
            throw std::invalid_argument("permutation: not a bijection on [1,m]");
        }
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images.size());
    for (int i = 0; i < size(); ++i) img[images[i] - 1] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::swap_positions(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("swap_positions: index out of range");
    std::vector<int> img = images;
    std::swap(img[i - 1], img[i]);
    return Permutation(std::move(img));
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (int v : p.images) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return "[" + out + "]";
}

int length(const Permutation& x) {
    int inv = 0;
    for (int i = 0; i < x.size(); ++i) {
        for (int j = i + 1; j < x.size(); ++j) {
            if (x.images[i] > x.images[j]) ++inv;
        }
    }
    return inv;
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    int m = x.size();
    // d[j] = #{t <= i : x(t) >= j} - #{t <= i : y(t) >= j}; need d <= 0 throughout.
    std::vector<int> d(m + 2, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 1; j <= x.images[i]; ++j) ++d[j];
        for (int j = 1; j <= y.images[i]; ++j) --d[j];
        for (int j = 1; j <= m; ++j) {
            if (d[j] > 0) return false;
        }
    }
    return true;
}

bool is_321_avoiding(const Permutation& x) {
    // Longest strictly decreasing subsequence <= 2.
    std::vector<int> tails;  // tails[l] = max possible tail of a decreasing run of length l+1
    for (int v : x.images) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v, std::greater<int>());
        if (it == tails.end()) {
            tails.push_back(v);
            if (tails.size() > 2) return false;
        } else {
            *it = v;
        }
    }
    return true;
}

bool is_smooth(const Permutation& x) {
    int m = x.size();
    const auto& a = x.images;
    // contains 4231?
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (a[j] >= a[i]) continue;
            for (int l = j + 1; l < m; ++l) {
                if (!(a[j] < a[l] && a[l] < a[i])) continue;
                for (int t = l + 1; t < m; ++t) {
                    if (a[t] < a[j]) return false;
                }
            }
        }
    // contains 3412?
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (a[j] <= a[i]) continue;
            for (int l = j + 1; l < m; ++l) {
                if (a[l] >= a[i]) continue;
                for (int t = l + 1; t < m; ++t) {
                    if (a[t] > a[l] && a[t] < a[i]) return false;
                }
            }
        }
    return true;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Permutation longest_coset_representative(const Permutation& x, const std::vector<int>& lambda,
                                         const std::vector<int>& mu) {
    int m = x.size();
    if (static_cast<int>(lambda.size()) != m || static_cast<int>(mu.size()) != m) {
        throw std::invalid_argument("longest_coset_representative: tuple size mismatch");
    }
    auto key = [&](const Permutation& w) {
        std::vector<std::pair<int, int>> pairs(m);
        for (int i = 0; i < m; ++i) pairs[i] = {lambda[i], mu[w.images[i] - 1]};
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    };
    auto target = key(x);
    Permutation best = x;
    int best_len = length(x);
    for (const Permutation& w : all_permutations(m)) {
        if (key(w) == target) {
            int l = length(w);
            if (l > best_len) {
                best = w;
                best_len = l;
            }
        }
    }
    return best;
}

}  // namespace lck
