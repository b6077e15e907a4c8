#include "partcat/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partcat {

namespace {

struct Dsu {
    std::array<std::uint8_t, 2 * kMaxPoints> parent;
    explicit Dsu(int n) {
        for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }
};

void check_size(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("negative point count");
    if (k + l > kMaxPoints) throw std::length_error("partition exceeds " + std::to_string(kMaxPoints) + " points");
}

// Relabels raw block ids by first occurrence.
template <class Get>
void canonical_fill(int n, Get get, std::array<std::uint8_t, kMaxPoints>& out, std::uint8_t& nb) {
    std::array<int, 2 * kMaxPoints> seen;
    std::array<int, 2 * kMaxPoints> ids;
    int used = 0;
    nb = 0;
    for (int i = 0; i < n; ++i) {
        int raw = get(i);
        int found = -1;
        for (int j = 0; j < used; ++j)
            if (seen[j] == raw) {
                found = ids[j];
                break;
            }
        if (found < 0) {
            seen[used] = raw;
            ids[used] = nb;
            ++used;
            found = nb++;
        }
        out[i] = static_cast<std::uint8_t>(found);
    }
}

}  // namespace

Partition Partition::from_labels(int upper, int lower, std::span<const int> labels) {
    check_size(upper, lower);
    if (static_cast<int>(labels.size()) != upper + lower) throw std::invalid_argument("label count does not match shape");
    Partition p;
    p.k_ = static_cast<std::uint8_t>(upper);
    p.l_ = static_cast<std::uint8_t>(lower);
    canonical_fill(upper + lower, [&](int i) { return labels[i]; }, p.lab_, p.nb_);
    return p;
}

Partition Partition::from_blocks(int upper, int lower, const std::vector<std::vector<int>>& blocks) {
    check_size(upper, lower);
    std::vector<int> labels(upper + lower, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("empty block");
        for (int pt : blocks[b]) {
            int pos;
            if (pt > 0 && pt <= upper)
                pos = pt - 1;
            else if (pt < 0 && -pt <= lower)
                pos = upper - pt - 1;
            else
                throw std::invalid_argument("point " + std::to_string(pt) + " out of range");
            if (labels[pos] >= 0) throw std::invalid_argument("point " + std::to_string(pt) + " repeated");
            labels[pos] = static_cast<int>(b);
        }
    }
    for (int v : labels)
        if (v < 0) throw std::invalid_argument("point missing from blocks");
    return from_labels(upper, lower, labels);
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(nb_);
    for (int i = 0; i < k_; ++i) out[lab_[i]].push_back(i + 1);
    for (int j = 0; j < l_; ++j) out[lab_[k_ + j]].push_back(-(j + 1));
    return out;
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> out(nb_, 0);
    for (int i = 0; i < points(); ++i) ++out[lab_[i]];
    return out;
}

std::size_t Partition::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint8_t b) {
        h ^= b;
        h *= 1099511628211ull;
    };
    mix(k_);
    mix(l_);
    for (int i = 0; i < points(); ++i) mix(lab_[i]);
    return static_cast<std::size_t>(h);
}

Partition identity(int k) {
    std::vector<int> lab(2 * k);
    for (int i = 0; i < k; ++i) lab[i] = lab[k + i] = i;
    return Partition::from_labels(k, k, lab);
}

Partition upper_pair() { return Partition::from_blocks(2, 0, {{1, 2}}); }
Partition lower_pair() { return Partition::from_blocks(0, 2, {{-1, -2}}); }
Partition singleton_lower() { return Partition::from_blocks(0, 1, {{-1}}); }

Partition one_block(int k, int l) {
    std::vector<int> lab(k + l, 0);
    return Partition::from_labels(k, l, lab);
}

Partition all_singletons(int k, int l) {
    std::vector<int> lab(k + l);
    std::iota(lab.begin(), lab.end(), 0);
    return Partition::from_labels(k, l, lab);
}

Partition permutation_partition(std::span<const int> sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<int> lab(2 * n);
    for (int i = 0; i < n; ++i) {
        lab[i] = i;
        lab[n + sigma[i]] = i;
    }
    return Partition::from_labels(n, n, lab);
}

Partition Pab() { return Partition::from_blocks(1, 1, {{1}, {-1}}); }
Partition Paaaa() { return Partition::from_blocks(2, 2, {{1, 2, -1, -2}}); }
Partition Pabab() { return Partition::from_blocks(2, 2, {{1, -2}, {2, -1}}); }
Partition Paabb() { return Partition::from_blocks(2, 2, {{1, 2}, {-1, -2}}); }
Partition Paaab() { return Partition::from_blocks(2, 2, {{1, 2, -2}, {-1}}); }
Partition Pabcb() { return Partition::from_blocks(2, 2, {{1}, {2, -1}, {-2}}); }
Partition fattened_crossing() { return Partition::from_blocks(3, 3, {{1, 2, -2, -3}, {3, -1}}); }

Partition tensor(const Partition& p, const Partition& q) {
    int k = p.upper() + q.upper(), l = p.lower() + q.lower();
    check_size(k, l);
    int off = p.block_count();
    std::vector<int> lab;
    lab.reserve(k + l);
    for (int i = 0; i < p.upper(); ++i) lab.push_back(p.upper_label(i));
    for (int i = 0; i < q.upper(); ++i) lab.push_back(q.upper_label(i) + off);
    for (int j = 0; j < p.lower(); ++j) lab.push_back(p.lower_label(j));
    for (int j = 0; j < q.lower(); ++j) lab.push_back(q.lower_label(j) + off);
    return Partition::from_labels(k, l, lab);
}

Partition tensor_power(const Partition& p, int n) {
    Partition r;
    for (int i = 0; i < n; ++i) r = tensor(r, p);
    return r;
}

Partition involution(const Partition& p) {
    std::vector<int> lab;
    lab.reserve(p.points());
    for (int j = 0; j < p.lower(); ++j) lab.push_back(p.lower_label(j));
    for (int i = 0; i < p.upper(); ++i) lab.push_back(p.upper_label(i));
    return Partition::from_labels(p.lower(), p.upper(), lab);
}

CompositionResult compose(const Partition& q, const Partition& p) {
    if (q.upper() != p.lower())
        throw std::invalid_argument("compose: interface mismatch (" + std::to_string(q.upper()) + " vs " +
                                    std::to_string(p.lower()) + ")");
    const int k = p.upper(), m = p.lower(), l = q.lower();
    check_size(k, l);
    const int n = k + m + l;
    // p's reading position i is node i; q's reading position i is node k + i.
    Dsu d(n);
    std::array<int, kMaxPoints> first;
    first.fill(-1);
    for (int i = 0; i < k + m; ++i) {
        int b = p.label(i);
        if (first[b] < 0)
            first[b] = i;
        else
            d.unite(first[b], i);
    }
    first.fill(-1);
    for (int i = 0; i < m + l; ++i) {
        int b = q.label(i);
        if (first[b] < 0)
            first[b] = k + i;
        else
            d.unite(first[b], k + i);
    }
    std::array<std::uint8_t, 2 * kMaxPoints> outer{};
    std::vector<int> lab(k + l);
    for (int i = 0; i < k; ++i) {
        lab[i] = d.find(i);
        outer[lab[i]] = 1;
    }
    for (int j = 0; j < l; ++j) {
        lab[k + j] = d.find(k + m + j);
        outer[lab[k + j]] = 1;
    }
    int loops = 0;
    for (int i = k; i < k + m; ++i) {
        int r = d.find(i);
        if (!outer[r]) {
            outer[r] = 1;
            ++loops;
        }
    }
    return {Partition::from_labels(k, l, lab), loops};
}

int through_blocks(const Partition& p) {
    std::array<std::uint8_t, kMaxPoints> up{}, down{};
    for (int i = 0; i < p.upper(); ++i) up[p.upper_label(i)] = 1;
    for (int j = 0; j < p.lower(); ++j) down[p.lower_label(j)] = 1;
    int c = 0;
    for (int b = 0; b < p.block_count(); ++b) c += up[b] && down[b];
    return c;
}

bool refinement_leq(const Partition& p, const Partition& q) {
    if (p.upper() != q.upper() || p.lower() != q.lower()) throw std::invalid_argument("refinement_leq: shape mismatch");
    std::array<int, kMaxPoints> img;
    img.fill(-1);
    for (int i = 0; i < p.points(); ++i) {
        int b = q.label(i);
        if (img[b] < 0)
            img[b] = p.label(i);
        else if (img[b] != p.label(i))
            return false;
    }
    return true;
}

Partition meet(const Partition& p, const Partition& q) {
    if (p.upper() != q.upper() || p.lower() != q.lower()) throw std::invalid_argument("meet: shape mismatch");
    const int n = p.points();
    Dsu d(n);
    std::array<int, kMaxPoints> fp, fq;
    fp.fill(-1);
    fq.fill(-1);
    for (int i = 0; i < n; ++i) {
        int a = p.label(i), b = q.label(i);
        if (fp[a] < 0) fp[a] = i; else d.unite(fp[a], i);
        if (fq[b] < 0) fq[b] = i; else d.unite(fq[b], i);
    }
    std::vector<int> lab(n);
    for (int i = 0; i < n; ++i) lab[i] = d.find(i);
    return Partition::from_labels(p.upper(), p.lower(), lab);
}

std::vector<int> circular_labels(const Partition& p) {
    std::vector<int> c;
    c.reserve(p.points());
    for (int i = 0; i < p.upper(); ++i) c.push_back(p.upper_label(i));
    for (int j = p.lower() - 1; j >= 0; --j) c.push_back(p.lower_label(j));
    return c;
}

int circular_position(const Partition& p, int signed_point) {
    if (signed_point > 0) return signed_point - 1;
    return p.upper() + p.lower() + signed_point;
}

bool is_noncrossing(const Partition& p) {
    std::vector<int> c = circular_labels(p);
    std::array<int, kMaxPoints> remaining{};
    for (int b : c) ++remaining[b];
    std::array<std::uint8_t, kMaxPoints> seen{};
    std::vector<int> stack;
    for (int b : c) {
        if (!seen[b]) {
            seen[b] = 1;
            if (--remaining[b] > 0) stack.push_back(b);
        } else {
            if (stack.empty() || stack.back() != b) return false;
            if (--remaining[b] == 0) stack.pop_back();
        }
    }
    return true;
}

Partition rotate_to_flat(const Partition& p) {
    const int k = p.upper(), l = p.lower();
    std::vector<int> lab;
    lab.reserve(k + l);
    for (int i = k - 1; i >= 0; --i) lab.push_back(p.upper_label(i));
    for (int j = 0; j < l; ++j) lab.push_back(p.lower_label(j));
    return Partition::from_labels(0, k + l, lab);
}

Partition unflatten(const Partition& q, int k) {
    if (q.upper() != 0 || k > q.lower()) throw std::invalid_argument("unflatten: expected P(0,n) with n >= k");
    const int l = q.lower() - k;
    std::vector<int> lab(k + l);
    for (int i = 0; i < k; ++i) lab[i] = q.lower_label(k - 1 - i);
    for (int j = 0; j < l; ++j) lab[k + j] = q.lower_label(k + j);
    return Partition::from_labels(k, l, lab);
}

Partition rotate_upper_left(const Partition& p) {
    if (p.upper() == 0) throw std::invalid_argument("rotate: no upper point");
    std::vector<int> lab;
    for (int i = 1; i < p.upper(); ++i) lab.push_back(p.upper_label(i));
    lab.push_back(p.upper_label(0));
    for (int j = 0; j < p.lower(); ++j) lab.push_back(p.lower_label(j));
    return Partition::from_labels(p.upper() - 1, p.lower() + 1, lab);
}

Partition rotate_lower_left(const Partition& p) {
    if (p.lower() == 0) throw std::invalid_argument("rotate: no lower point");
    std::vector<int> lab;
    lab.push_back(p.lower_label(0));
    for (int i = 0; i < p.upper(); ++i) lab.push_back(p.upper_label(i));
    for (int j = 1; j < p.lower(); ++j) lab.push_back(p.lower_label(j));
    return Partition::from_labels(p.upper() + 1, p.lower() - 1, lab);
}

Partition rotate_upper_right(const Partition& p) {
    if (p.upper() == 0) throw std::invalid_argument("rotate: no upper point");
    std::vector<int> lab;
    for (int i = 0; i + 1 < p.upper(); ++i) lab.push_back(p.upper_label(i));
    for (int j = 0; j < p.lower(); ++j) lab.push_back(p.lower_label(j));
    lab.push_back(p.upper_label(p.upper() - 1));
    return Partition::from_labels(p.upper() - 1, p.lower() + 1, lab);
}

Partition rotate_lower_right(const Partition& p) {
    if (p.lower() == 0) throw std::invalid_argument("rotate: no lower point");
    std::vector<int> lab;
    for (int i = 0; i < p.upper(); ++i) lab.push_back(p.upper_label(i));
    lab.push_back(p.lower_label(p.lower() - 1));
    for (int j = 0; j + 1 < p.lower(); ++j) lab.push_back(p.lower_label(j));
    return Partition::from_labels(p.upper() + 1, p.lower() - 1, lab);
}

int close_trace(const Partition& p) {
    if (p.upper() != p.lower()) throw std::invalid_argument("close_trace: non-square shape");
    const int k = p.upper();
    Dsu d(2 * k);
    std::array<int, kMaxPoints> first;
    first.fill(-1);
    for (int i = 0; i < 2 * k; ++i) {
        int b = p.label(i);
        if (first[b] < 0) first[b] = i; else d.unite(first[b], i);
    }
    for (int i = 0; i < k; ++i) d.unite(i, k + i);
    int c = 0;
    for (int i = 0; i < 2 * k; ++i) c += d.find(i) == i;
    return c;
}

int close_trace_nested(const Partition& p) {
    if (p.upper() != p.lower()) throw std::invalid_argument("close_trace_nested: non-square shape");
    const int k = p.upper();
    std::vector<int> lab(2 * k);
    for (int i = 0; i < k; ++i) lab[i] = lab[2 * k - 1 - i] = i;
    Partition coev = Partition::from_labels(0, 2 * k, lab);
    Partition ev = involution(coev);
    CompositionResult a = compose(tensor(p, identity(k)), coev);
    CompositionResult b = compose(ev, a.partition);
    return a.loops + b.loops;
}

void for_each_set_partition(int n, int max_block, const std::function<void(std::span<const int>)>& f) {
    std::vector<int> lab(n, 0), size(n + 1, 0);
    if (n == 0) {
        f(std::span<const int>(lab.data(), 0));
        return;
    }
    int cap = max_block > 0 ? max_block : n;
    // Iterative restricted-growth generation with block-size pruning.
    std::function<void(int, int)> rec = [&](int i, int nb) {
        if (i == n) {
            f(lab);
            return;
        }
        for (int b = 0; b <= nb && b < n; ++b) {
            if (size[b] >= cap) continue;
            lab[i] = b;
            ++size[b];
            rec(i + 1, b == nb ? nb + 1 : nb);
            --size[b];
        }
    };
    rec(0, 0);
}

std::vector<Partition> all_partitions(int k, int l, int max_block) {
    check_size(k, l);
    std::vector<Partition> out;
    for_each_set_partition(k + l, max_block, [&](std::span<const int> lab) { out.push_back(Partition::from_labels(k, l, lab)); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> coarsenings(const Partition& p) {
    std::vector<Partition> out;
    const int nb = p.block_count();
    for_each_set_partition(nb, 0, [&](std::span<const int> merge) {
        std::vector<int> lab(p.points());
        for (int i = 0; i < p.points(); ++i) lab[i] = merge[p.label(i)];
        out.push_back(Partition::from_labels(p.upper(), p.lower(), lab));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_text(const Partition& p) {
    if (p.points() == 0) return "{}";
    std::ostringstream os;
    auto bl = p.blocks();
    for (std::size_t b = 0; b < bl.size(); ++b) {
        if (b) os << " | ";
        for (std::size_t i = 0; i < bl[b].size(); ++i) {
            if (i) os << ' ';
            int v = bl[b][i];
            if (v > 0) os << v; else os << -v << '\'';
        }
    }
    return os.str();
}

Partition parse_text(const std::string& s) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "{}") return Partition();
    std::vector<std::vector<int>> blocks(1);
    int k = 0, l = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '|') {
            blocks.emplace_back();
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            int v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
            if (v == 0) throw std::invalid_argument("point indices start at 1");
            if (i < s.size() && s[i] == '\'') {
                ++i;
                blocks.back().push_back(-v);
                l = std::max(l, v);
            } else {
                blocks.back().push_back(v);
                k = std::max(k, v);
            }
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in partition text");
        }
    }
    return Partition::from_blocks(k, l, blocks);
}

}  // namespace partcat
