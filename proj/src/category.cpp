#include "partcat/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace partcat {

namespace {

struct FamilyInfo {
    Family f;
    const char* name;
    std::vector<const char*> aliases;
};

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> t = {
        {Family::P, "P", {}},
        {Family::P_even, "P_even", {}},
        {Family::P2, "P2", {"P_2"}},
        {Family::P_prime, "P'", {"P_prime"}},
        {Family::P_b, "P_b", {}},
        {Family::P_b_prime, "P'_b", {"P_b_prime", "P_b'"}},
        {Family::NC, "NC", {}},
        {Family::NC_even, "NC_even", {}},
        {Family::NC2, "NC2", {"NC_2"}},
        {Family::NC_prime, "NC'", {"NC_prime"}},
        {Family::NC_b, "NC_b", {}},
        {Family::NC_b_sharp, "NC_b#", {"NC_b_sharp", "NC_b^#"}},
        {Family::NC_b_prime, "NC'_b", {"NC_b_prime", "NC_b'"}},
    };
    return t;
}

bool pairs_enclose_even(const Partition& p) {
    std::vector<int> c = circular_labels(p);
    std::vector<int> first(p.block_count(), -1);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        int b = c[i];
        if (first[b] < 0)
            first[b] = i;
        else if ((i - first[b] - 1) % 2 != 0)
            return false;
    }
    return true;
}

}  // namespace

const std::vector<Family>& all_families() {
    static const std::vector<Family> v = [] {
        std::vector<Family> r;
        for (const auto& fi : family_table()) r.push_back(fi.f);
        return r;
    }();
    return v;
}

std::string family_name(Family f) {
    for (const auto& fi : family_table())
        if (fi.f == f) return fi.name;
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& fi : family_table()) {
        if (name == fi.name) return fi.f;
        for (const char* a : fi.aliases)
            if (name == a) return fi.f;
    }
    return std::nullopt;
}

bool family_has_singleton(Family f) {
    return f == Family::P || f == Family::P_b || f == Family::NC || f == Family::NC_b;
}

bool family_is_noncrossing(Family f) {
    switch (f) {
        case Family::NC:
        case Family::NC_even:
        case Family::NC2:
        case Family::NC_prime:
        case Family::NC_b:
        case Family::NC_b_sharp:
        case Family::NC_b_prime:
            return true;
        default:
            return false;
    }
}

int family_max_block(Family f) {
    switch (f) {
        case Family::P2:
        case Family::P_b:
        case Family::P_b_prime:
        case Family::NC2:
        case Family::NC_b:
        case Family::NC_b_sharp:
        case Family::NC_b_prime:
            return 2;
        default:
            return 0;
    }
}

bool family_contains(Family f, const Partition& p) {
    if (family_is_noncrossing(f) && !is_noncrossing(p)) return false;
    std::vector<int> sizes = p.block_sizes();
    int odd = 0, singles = 0, big = 0;
    for (int s : sizes) {
        odd += s % 2;
        singles += s == 1;
        big += s > 2;
    }
    switch (f) {
        case Family::P:
        case Family::NC:
            return true;
        case Family::P_even:
        case Family::NC_even:
            return odd == 0;
        case Family::P2:
        case Family::NC2:
            return big == 0 && singles == 0;
        case Family::P_prime:
        case Family::NC_prime:
            return odd % 2 == 0;
        case Family::P_b:
        case Family::NC_b:
            return big == 0;
        case Family::P_b_prime:
        case Family::NC_b_prime:
            return big == 0 && singles % 2 == 0;
        case Family::NC_b_sharp:
            return big == 0 && p.points() % 2 == 0 && pairs_enclose_even(p);
    }
    return false;
}

std::vector<Partition> family_generators(Family f) {
    const Partition up = singleton_lower();
    const Partition upup = tensor(up, up);
    switch (f) {
        case Family::P: return {Pabab(), up, Paaaa()};
        case Family::P_even: return {Pabab(), Paaaa()};
        case Family::P2: return {Pabab()};
        case Family::P_prime: return {Pabab(), upup, Paaaa()};
        case Family::P_b: return {Pabab(), up};
        case Family::P_b_prime: return {Pabab(), upup};
        case Family::NC: return {up, Paaaa()};
        case Family::NC_even: return {Paaaa()};
        case Family::NC2: return {};
        case Family::NC_prime: return {upup, Paaaa()};
        case Family::NC_b: return {up};
        case Family::NC_b_sharp: return {upup};
        case Family::NC_b_prime: return {Pabcb()};
    }
    return {};
}

EnumerationTable generate_closure(const std::vector<Partition>& generators, int bound) {
    EnumerationTable t;
    t.bound = bound;
    std::vector<Partition> frontier;
    auto offer = [&](const Partition& p, std::vector<Partition>& out) {
        if (p.points() > bound) return;
        if (t.members.insert(p).second) {
            t.by_shape[{p.upper(), p.lower()}].push_back(p);
            out.push_back(p);
        }
    };
    std::vector<Partition> seeds = generators;
    seeds.push_back(upper_pair());
    seeds.push_back(identity(1));
    seeds.push_back(Partition());
    for (const auto& g : seeds) offer(g, frontier);

    while (!frontier.empty()) {
        std::vector<Partition> fresh;
        for (const auto& x : frontier) {
            offer(involution(x), fresh);
            if (x.upper() > 0) {
                offer(rotate_upper_left(x), fresh);
                offer(rotate_upper_right(x), fresh);
            }
            if (x.lower() > 0) {
                offer(rotate_lower_left(x), fresh);
                offer(rotate_lower_right(x), fresh);
            }
        }
        // Snapshot so that pairs are drawn from members known at pass start.
        std::vector<Partition> known(t.members.begin(), t.members.end());
        std::sort(known.begin(), known.end());
        std::map<std::pair<int, int>, std::vector<Partition>> shapes = t.by_shape;
        for (const auto& x : frontier) {
            for (const auto& y : known) {
                if (x.points() + y.points() <= bound) {
                    offer(tensor(x, y), fresh);
                    offer(tensor(y, x), fresh);
                }
            }
            // x after y: y has lower count x.upper().
            for (auto& [shape, ys] : shapes) {
                if (shape.second == x.upper() && shape.first + x.lower() <= bound)
                    for (const auto& y : ys) offer(compose(x, y).partition, fresh);
                if (shape.first == x.lower() && x.upper() + shape.second <= bound)
                    for (const auto& y : ys) offer(compose(y, x).partition, fresh);
            }
        }
        frontier = std::move(fresh);
    }
    for (auto& [shape, v] : t.by_shape) std::sort(v.begin(), v.end());
    return t;
}

// ---- Category

Category Category::named(Family f) {
    Category c;
    c.st_ = std::make_shared<State>();
    c.st_->family = f;
    c.st_->generators = family_generators(f);
    return c;
}

Category Category::generated(std::vector<Partition> generators, int bound) {
    Category c;
    c.st_ = std::make_shared<State>();
    c.st_->generators = std::move(generators);
    c.st_->bound = bound;
    c.st_->closure = generate_closure(c.st_->generators, bound);
    return c;
}

Family Category::family() const {
    if (!st_->family) throw std::logic_error("generated category has no family");
    return *st_->family;
}

std::string Category::name() const {
    if (st_->family) return family_name(*st_->family);
    std::string s = "<";
    for (std::size_t i = 0; i < st_->generators.size(); ++i) s += (i ? ", " : "") + to_text(st_->generators[i]);
    return s + ">_" + std::to_string(st_->bound);
}

bool Category::contains(const Partition& p) const {
    if (st_->family) return family_contains(*st_->family, p);
    if (p.points() > st_->bound)
        throw std::out_of_range("point bound " + std::to_string(st_->bound) + " exceeded for generated category");
    return st_->closure->contains(p);
}

bool Category::has_singleton() const {
    if (st_->family) return family_has_singleton(*st_->family);
    return st_->bound >= 1 && st_->closure->contains(singleton_lower());
}

const std::vector<Partition>& Category::enumerate(int k, int l) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto key = std::make_pair(k, l);
    auto it = st_->cache.find(key);
    if (it != st_->cache.end()) return *it->second;
    auto v = std::make_unique<std::vector<Partition>>();
    if (st_->family) {
        Family f = *st_->family;
        // Families without the singleton only live on even point counts.
        if (family_has_singleton(f) || (k + l) % 2 == 0)
            for_each_set_partition(k + l, family_max_block(f), [&](std::span<const int> lab) {
                Partition p = Partition::from_labels(k, l, lab);
                if (family_contains(f, p)) v->push_back(p);
            });
        std::sort(v->begin(), v->end());
    } else {
        if (k + l > st_->bound)
            throw std::out_of_range("point bound " + std::to_string(st_->bound) + " exceeded for generated category");
        auto jt = st_->closure->by_shape.find(key);
        if (jt != st_->closure->by_shape.end()) *v = jt->second;
    }
    auto& ref = *v;
    st_->cache.emplace(key, std::move(v));
    return ref;
}

GroupTheoreticalReport group_theoretical_report(const Category& c, int bound) {
    GroupTheoreticalReport r;
    int b = c.is_named() ? bound : std::min(bound, c.bound());
    r.fattened_crossing = b >= 6 && c.contains(fattened_crossing());
    r.coarsening_closed = true;
    for (int n = 0; n <= b && r.coarsening_closed; ++n)
        for (int k = 0; k <= n && r.coarsening_closed; ++k)
            for (const auto& p : c.enumerate(k, n - k)) {
                for (const auto& q : coarsenings(p))
                    if (!c.contains(q)) {
                        r.coarsening_closed = false;
                        break;
                    }
                if (!r.coarsening_closed) break;
            }
    r.meet_closed = true;
    for (int n = 0; n <= std::min(b, 6) && r.meet_closed; ++n) {
        const auto& el = c.enumerate(0, n);
        for (std::size_t i = 0; i < el.size() && r.meet_closed; ++i)
            for (std::size_t j = i + 1; j < el.size(); ++j)
                if (!c.contains(meet(el[i], el[j]))) {
                    r.meet_closed = false;
                    break;
                }
    }
    return r;
}

bool is_group_theoretical(const Category& c, int bound) {
    GroupTheoreticalReport r = group_theoretical_report(c, bound);
    if (r.fattened_crossing != r.coarsening_closed)
        throw std::logic_error("group-theoretical tests disagree for " + c.name() + ": fattened crossing " +
                               (r.fattened_crossing ? "present" : "absent") + ", coarsening closure " +
                               (r.coarsening_closed ? "holds" : "fails"));
    return r.fattened_crossing;
}

}  // namespace partcat
