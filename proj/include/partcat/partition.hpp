#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace partcat {

// Hard cap on points per partition (upper + lower).
inline constexpr int kMaxPoints = 32;

// Set partition of k upper points 1..k and l lower points 1'..l'.
// Stored as a restricted-growth labelling over the reading order
// (upper left to right, then lower left to right), so equal partitions
// have identical bytes.
class Partition {
public:
    Partition() = default;

    // labels[i] is the block id of reading position i; any ids are accepted.
    static Partition from_labels(int upper, int lower, std::span<const int> labels);
    // Blocks in signed notation: i > 0 is upper point i, -j is lower point j'.
    static Partition from_blocks(int upper, int lower, const std::vector<std::vector<int>>& blocks);

    int upper() const { return k_; }
    int lower() const { return l_; }
    int points() const { return k_ + l_; }
    int block_count() const { return nb_; }
    int label(int pos) const { return lab_[pos]; }
    int upper_label(int i) const { return lab_[i]; }       // 0-based upper index
    int lower_label(int j) const { return lab_[k_ + j]; }  // 0-based lower index

    std::vector<std::vector<int>> blocks() const;
    std::vector<int> block_sizes() const;

    std::size_t hash() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::uint8_t k_ = 0;
    std::uint8_t l_ = 0;
    std::array<std::uint8_t, kMaxPoints> lab_{};
    std::uint8_t nb_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const { return p.hash(); }
};

struct CompositionResult {
    Partition partition;
    int loops = 0;
};

Partition identity(int k);
Partition upper_pair();          // {{1,2}} in P(2,0)
Partition lower_pair();          // {{1',2'}} in P(0,2)
Partition singleton_lower();     // the up-arrow, {{1'}} in P(0,1)
Partition one_block(int k, int l);
Partition all_singletons(int k, int l);
Partition permutation_partition(std::span<const int> sigma);  // blocks {i, sigma(i)'}, 0-based

// Letter shorthands, read upper left to right then lower right to left.
Partition Pab();    // {{1},{1'}}
Partition Paaaa();  // {{1,2,1',2'}}
Partition Pabab();  // {{1,2'},{2,1'}}
Partition Paabb();  // {{1,2},{1',2'}}
Partition Paaab();  // {{1,2,2'},{1'}}
Partition Pabcb();  // {{1},{2,1'},{2'}}
Partition fattened_crossing();  // {{1,2,2',3'},{3,1'}}

Partition tensor(const Partition& p, const Partition& q);
Partition tensor_power(const Partition& p, int n);
Partition involution(const Partition& p);
CompositionResult compose(const Partition& q, const Partition& p);

int through_blocks(const Partition& p);
bool refinement_leq(const Partition& p, const Partition& q);
Partition meet(const Partition& p, const Partition& q);
bool is_noncrossing(const Partition& p);

// Labels in circular order: upper left to right, then lower right to left.
std::vector<int> circular_labels(const Partition& p);
int circular_position(const Partition& p, int signed_point);

Partition rotate_to_flat(const Partition& p);
Partition unflatten(const Partition& q, int k);
// Single-point rotations; each preserves the circular order.
Partition rotate_upper_left(const Partition& p);   // upper 1 -> lower 1'
Partition rotate_lower_left(const Partition& p);   // lower 1' -> upper 1
Partition rotate_upper_right(const Partition& p);  // upper k -> lower (l+1)'
Partition rotate_lower_right(const Partition& p);  // lower l' -> upper k+1

int close_trace(const Partition& p);
// Loop count of ev_k (p ⊗ id_k) coev_k with nested (co)evaluation.
int close_trace_nested(const Partition& p);

// Calls f(labels) for every restricted-growth string of length n whose
// blocks have at most max_block points (max_block <= 0 means unbounded).
void for_each_set_partition(int n, int max_block, const std::function<void(std::span<const int>)>& f);
std::vector<Partition> all_partitions(int k, int l, int max_block = 0);

// Every coarsening of p (including p itself), via set partitions of its blocks.
std::vector<Partition> coarsenings(const Partition& p);

std::string to_text(const Partition& p);
Partition parse_text(const std::string& s);

}  // namespace partcat

template <>
struct std::hash<partcat::Partition> {
    std::size_t operator()(const partcat::Partition& p) const { return p.hash(); }
};
