#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "partcat/partition.hpp"

namespace partcat {

enum class Family {
    P,
    P_even,
    P2,
    P_prime,
    P_b,
    P_b_prime,
    NC,
    NC_even,
    NC2,
    NC_prime,
    NC_b,
    NC_b_sharp,
    NC_b_prime,
};

const std::vector<Family>& all_families();
std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
bool family_contains(Family f, const Partition& p);
bool family_has_singleton(Family f);
bool family_is_noncrossing(Family f);
std::vector<Partition> family_generators(Family f);
// Largest block size any member can have, 0 when unbounded.
int family_max_block(Family f);

// Members up to a point bound, grouped by shape.
struct EnumerationTable {
    int bound = 0;
    std::map<std::pair<int, int>, std::vector<Partition>> by_shape;
    std::unordered_set<Partition, PartitionHash> members;

    bool contains(const Partition& p) const { return members.count(p) > 0; }
    std::size_t size() const { return members.size(); }
};

// Fixpoint of generators, the cap and id_1 under tensor, involution,
// composition and single-point rotation, keeping diagrams with at most
// `bound` points.
EnumerationTable generate_closure(const std::vector<Partition>& generators, int bound);

class Category {
public:
    static Category named(Family f);
    static Category generated(std::vector<Partition> generators, int bound);

    bool is_named() const { return st_->family.has_value(); }
    Family family() const;
    int bound() const { return st_->bound; }
    const std::vector<Partition>& generators() const { return st_->generators; }
    std::string name() const;

    bool contains(const Partition& p) const;
    // Sorted members of C(k,l); memoized, safe for concurrent readers.
    const std::vector<Partition>& enumerate(int k, int l) const;
    bool has_singleton() const;

private:
    struct State {
        std::optional<Family> family;
        std::vector<Partition> generators;
        int bound = 0;
        std::optional<EnumerationTable> closure;
        mutable std::mutex mu;
        mutable std::map<std::pair<int, int>, std::unique_ptr<std::vector<Partition>>> cache;
    };
    std::shared_ptr<State> st_;
};

// (a) fattened crossing membership and (b) closure under coarsening of all
// members with at most `bound` points. Throws std::logic_error if they differ.
bool is_group_theoretical(const Category& c, int bound = 8);

struct GroupTheoreticalReport {
    bool fattened_crossing = false;
    bool coarsening_closed = false;
    bool meet_closed = false;
};
GroupTheoreticalReport group_theoretical_report(const Category& c, int bound = 8);

}  // namespace partcat
