#include "sdistance/partition.hpp"

#include <algorithm>

namespace sdist {

Partition staircase(long k) {
    if (k < 1) throw std::domain_error("staircase: k must be >= 1");
    std::vector<long> p;
    for (long i = k - 1; i >= 1; --i) p.push_back(i);
    return Partition(std::move(p));
}

bool dominates(const Partition& lhs, const Partition& rhs) {
    if (lhs.weight() != rhs.weight())
        throw std::domain_error("dominates: partitions must have equal weight");
    long a = 0, b = 0;
    size_t n = std::max(lhs.length(), rhs.length());
    for (size_t i = 0; i < n; ++i) {
        a += lhs.part(i);
        b += rhs.part(i);
        if (a < b) return false;
    }
    return true;
}

namespace {

void gen(long remaining, long max_part, long slots, std::vector<long>& cur,
         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) return;
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long weight, long max_parts) {
    if (weight < 0 || max_parts < 0) throw std::domain_error("enumerate_partitions: negative input");
    std::vector<Partition> out;
    std::vector<long> cur;
    gen(weight, weight, max_parts, cur, out);
    if (weight == 0) out.push_back(Partition{});
    // recursion yields decreasing lex already, but keep the contract explicit
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

std::vector<Partition> enumerate_dominating(long weight, long max_parts, const Partition& floor) {
    if (weight != floor.weight())
        throw std::domain_error("enumerate_dominating: weight must equal floor.weight()");
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(weight, max_parts))
        if (dominates(p, floor)) out.push_back(p);
    return out;
}

std::vector<Partition> enumerate_dominated_by(long max_parts, const Partition& ceil) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(ceil.weight(), max_parts))
        if (dominates(ceil, p)) out.push_back(p);
    return out;
}

}  // namespace sdist
