#include "jacksep/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacksep {

partition::partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

partition partition::conjugate() const {
    std::vector<long> conj;
    if (parts_.empty()) return partition();
    conj.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (long p : parts_)
        for (long i = 0; i < p; ++i) ++conj[static_cast<std::size_t>(i)];
    return partition(std::move(conj));
}

partition partition::shifted(long s, std::size_t nvars) const {
    if (s < 0) throw std::invalid_argument("partition: negative shift");
    if (length() > nvars) throw std::invalid_argument("partition: more parts than variables");
    std::vector<long> parts = padded(nvars);
    for (long& p : parts) p += s;
    return partition(std::move(parts));
}

std::vector<long> partition::padded(std::size_t nvars) const {
    if (length() > nvars) throw std::invalid_argument("partition: more parts than variables");
    std::vector<long> p = parts_;
    p.resize(nvars, 0);
    return p;
}

std::string partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool operator<(const partition& a, const partition& b) {
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
    }
    return false;
}

bool dominance_leq(const partition& mu, const partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw std::invalid_argument("dominance_leq: partitions must have equal weight");
    const std::size_t n = std::max(mu.length(), lambda.length());
    long sum_mu = 0, sum_lambda = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sum_mu += mu.part(i);
        sum_lambda += lambda.part(i);
        if (sum_mu > sum_lambda) return false;
    }
    return true;
}

namespace {

void enumerate(long remaining, std::size_t slots, long cap, std::vector<long>& stack,
               std::vector<partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (slots == 0) return;
    const long hi = std::min(cap, remaining);
    for (long p = hi; p >= 1; --p) {
        stack.push_back(p);
        enumerate(remaining - p, slots - 1, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<partition> partitions_of_weight(long w, std::size_t max_parts, long max_part) {
    if (w < 0) throw std::invalid_argument("partitions_of_weight: negative weight");
    std::vector<partition> out;
    std::vector<long> stack;
    const long cap = max_part < 0 ? w : max_part;
    enumerate(w, max_parts, cap, stack, out);
    // The recursion emits partitions in lexicographically descending order
    // already (largest first part first); keep it explicit regardless.
    std::sort(out.begin(), out.end(), [](const partition& a, const partition& b) { return b < a; });
    return out;
}

std::vector<partition> partitions_in_box(long max_part, std::size_t max_parts) {
    if (max_part < 0) throw std::invalid_argument("partitions_in_box: negative part bound");
    std::vector<partition> out;
    for (long w = 0; w <= max_part * static_cast<long>(max_parts); ++w) {
        auto batch = partitions_of_weight(w, max_parts, max_part);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    std::sort(out.begin(), out.end(), [](const partition& a, const partition& b) { return b < a; });
    return out;
}

}  // namespace jacksep
