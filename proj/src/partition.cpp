#include "virc1/partition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace virc1 {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_) {
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

unsigned Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned Partition::multiplicity(unsigned part) const {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::with_part(unsigned part) const {
    if (part == 0) throw std::invalid_argument("partition parts must be positive");
    Partition out;
    out.parts_ = parts_;
    auto pos = std::lower_bound(out.parts_.begin(), out.parts_.end(), part,
                                std::greater<unsigned>());
    out.parts_.insert(pos, part);
    return out;
}

Partition Partition::without_part(unsigned part) const {
    auto pos = std::find(parts_.begin(), parts_.end(), part);
    if (pos == parts_.end()) throw std::invalid_argument("part not present");
    Partition out;
    out.parts_ = parts_;
    out.parts_.erase(out.parts_.begin() + (pos - parts_.begin()));
    return out;
}

bool Partition::operator<(const Partition& other) const {
    return std::lexicographical_compare(parts_.begin(), parts_.end(),
                                        other.parts_.begin(), other.parts_.end(),
                                        std::greater<unsigned>());
}

namespace {

void enumerate_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& stack,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        enumerate_rec(remaining - part, part, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> stack;
    enumerate_rec(n, n == 0 ? 1 : n, stack, out);
    return out;
}

const std::vector<Partition>& partitions_of(unsigned n) {
    static std::mutex mutex;
    static std::deque<std::unique_ptr<std::vector<Partition>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.size() <= n) cache.resize(n + 1);
    if (!cache[n]) {
        cache[n] = std::make_unique<std::vector<Partition>>(enumerate_partitions(n));
    }
    return *cache[n];
}

std::size_t partition_count(unsigned n) {
    return partitions_of(n).size();
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) s += '+';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << to_string(p);
}

} // namespace virc1
