#pragma once

#include <cstddef>
#include <vector>

namespace partcat {

using Perm = std::vector<int>;  // 0-based images

Perm perm_compose(const Perm& a, const Perm& b);  // a after b
Perm perm_inverse(const Perm& a);
Perm perm_identity(int n);

// Subgroup of S_T given by its full element list (sorted).
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Perm> elements);
    static PermGroup symmetric(int degree);
    static PermGroup trivial(int degree);
    static PermGroup direct_product(const PermGroup& a, const PermGroup& b);

    int degree() const { return degree_; }
    const std::vector<Perm>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const Perm& p) const;
    // Closed under composition, contains the identity (finite, so inverses follow).
    bool is_subgroup() const;
    std::size_t class_count() const;

private:
    int degree_ = 0;
    std::vector<Perm> elements_;
};

// Number of integer partitions of n, by the pentagonal recurrence.
std::size_t partition_count(int n);

}  // namespace partcat
