#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace virc1 {

// Integer partition: parts strictly positive, sorted non-increasing.
// The constructor sorts, so the invariant always holds.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const;
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    unsigned multiplicity(unsigned part) const;

    Partition with_part(unsigned part) const;
    // Removes one copy of `part`; the part must be present.
    Partition without_part(unsigned part) const;

    bool operator==(const Partition& other) const = default;
    // Canonical order: larger parts first, lexicographically. This is the
    // order enumerate_partitions lists a level in.
    bool operator<(const Partition& other) const;

private:
    std::vector<unsigned> parts_;
};

// All partitions of n in canonical order, e.g. n=4:
// [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<Partition> enumerate_partitions(unsigned n);

// Cached view of enumerate_partitions(n). Pure cache: idempotent fill,
// stable addresses, safe for concurrent readers.
const std::vector<Partition>& partitions_of(unsigned n);

std::size_t partition_count(unsigned n);

// "3+1+1", or "0" for the empty partition.
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

} // namespace virc1
