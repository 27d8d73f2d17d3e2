#pragma once

#include <optional>

#include "sumfree/group.hpp"
#include "sumfree/intset.hpp"

namespace sumfree {

// Where a set lives: a finite abelian group, or the integer line. Elements
// are carried as long long: group element indices, or signed integers.
struct Ambient {
    std::optional<GroupSpec> group;  // nullopt = integer line

    static Ambient finite(GroupSpec g) { return Ambient{std::move(g)}; }
    static Ambient integers() { return Ambient{std::nullopt}; }

    bool is_group() const { return group.has_value(); }

    long long add(long long a, long long b) const {
        if (group) return (long long)group->add(std::uint64_t(a), std::uint64_t(b));
        return checked_add(a, b);
    }
};

}  // namespace sumfree
