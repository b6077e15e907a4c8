#include "partcat/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace partcat {

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

Perm perm_identity(int n) {
    Perm r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

PermGroup::PermGroup(int degree, std::vector<Perm> elements) : degree_(degree), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (const auto& p : elements_)
        if (static_cast<int>(p.size()) != degree_) throw std::invalid_argument("permutation of the wrong degree");
}

PermGroup PermGroup::symmetric(int degree) {
    std::vector<Perm> all;
    Perm p = perm_identity(degree);
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return PermGroup(degree, std::move(all));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {perm_identity(degree)}); }

PermGroup PermGroup::direct_product(const PermGroup& a, const PermGroup& b) {
    std::vector<Perm> out;
    for (const auto& x : a.elements_)
        for (const auto& y : b.elements_) {
            Perm p = x;
            for (int v : y) p.push_back(v + a.degree_);
            out.push_back(std::move(p));
        }
    return PermGroup(a.degree_ + b.degree_, std::move(out));
}

bool PermGroup::contains(const Perm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

bool PermGroup::is_subgroup() const {
    if (!contains(perm_identity(degree_))) return false;
    for (const auto& a : elements_)
        for (const auto& b : elements_)
            if (!contains(perm_compose(a, b))) return false;
    return true;
}

std::size_t PermGroup::class_count() const {
    std::vector<char> seen(elements_.size(), 0);
    std::vector<Perm> inv;
    inv.reserve(elements_.size());
    for (const auto& h : elements_) inv.push_back(perm_inverse(h));
    std::size_t classes = 0;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (seen[i]) continue;
        ++classes;
        for (std::size_t j = 0; j < elements_.size(); ++j) {
            Perm c = perm_compose(elements_[j], perm_compose(elements_[i], inv[j]));
            auto it = std::lower_bound(elements_.begin(), elements_.end(), c);
            seen[it - elements_.begin()] = 1;
        }
    }
    return classes;
}

std::size_t partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long s = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            long long sign = (j % 2) ? 1 : -1;
            s += sign * p[m - g1];
            if (g2 <= m) s += sign * p[m - g2];
        }
        p[m] = s;
    }
    return static_cast<std::size_t>(p[n]);
}

}  // namespace partcat
