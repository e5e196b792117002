#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdist {

/// Integer partition: weakly decreasing non-negative parts, trailing zeros
/// stripped. The empty partition () is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<long> p) : parts_(p) { validate(); }
    explicit Partition(std::vector<long> p) : parts_(std::move(p)) { validate(); }

    const std::vector<long>& parts() const { return parts_; }
    size_t length() const { return parts_.size(); }
    long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
    long part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    void validate() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts not weakly decreasing");
        }
    }

    std::vector<long> parts_;
};

/// Staircase delta_k = (k-1, k-2, ..., 1, 0).
Partition staircase(long k);

/// Dominance order on partitions of equal weight: lhs >= rhs iff every
/// partial sum of lhs weakly exceeds the corresponding partial sum of rhs.
/// Unequal weights are a domain error.
bool dominates(const Partition& lhs, const Partition& rhs);

/// All partitions of `weight` with at most `max_parts` parts, in decreasing
/// lexicographic order.
std::vector<Partition> enumerate_partitions(long weight, long max_parts);

/// The partitions of floor.weight() with <= max_parts parts that dominate
/// `floor`, in decreasing lexicographic order. `weight` must equal
/// floor.weight().
std::vector<Partition> enumerate_dominating(long weight, long max_parts, const Partition& floor);

/// The partitions of ceil.weight() with <= max_parts parts dominated by
/// `ceil`, in decreasing lexicographic order.
std::vector<Partition> enumerate_dominated_by(long max_parts, const Partition& ceil);

}  // namespace sdist
