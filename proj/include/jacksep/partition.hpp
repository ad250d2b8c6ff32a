#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jacksep {

// Integer partition: a weakly decreasing tuple of nonnegative integers.
// Trailing zeros are trimmed, so (2,1,0) and (2,1) denote the same value and
// compare equal.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<long> parts);

    long weight() const;
    // Number of nonzero parts.
    std::size_t length() const { return parts_.size(); }
    // i-th part, 0-based; 0 beyond the length, so callers may treat the
    // partition as padded with zeros.
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    // part(i) - part(j); the usual difference lambda_{i+1,j+1} in 1-based
    // notation.
    long diff(std::size_t i, std::size_t j) const { return part(i) - part(j); }
    const std::vector<long>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    partition conjugate() const;
    // Adds s to the first nvars parts (embedding the partition in nvars
    // variables). Requires length() <= nvars and s >= 0.
    partition shifted(long s, std::size_t nvars) const;
    std::vector<long> padded(std::size_t nvars) const;

    // "(2,1)"; "()" for the empty partition.
    std::string str() const;

    friend bool operator==(const partition& a, const partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const partition& a, const partition& b) { return !(a == b); }
    // Lexicographic comparison with zero padding; on equal-weight partitions
    // this is a linear extension of the dominance order.
    friend bool operator<(const partition& a, const partition& b);

private:
    std::vector<long> parts_;
};

// Dominance (natural) partial order: mu <= lambda iff all prefix sums of mu
// are bounded by those of lambda. Defined only between partitions of equal
// weight; throws std::invalid_argument otherwise.
bool dominance_leq(const partition& mu, const partition& lambda);

// All partitions of weight w with at most max_parts parts, each part at most
// max_part (max_part < 0 means no bound). Sorted lexicographically
// descending.
std::vector<partition> partitions_of_weight(long w, std::size_t max_parts, long max_part = -1);

// All partitions (any weight) fitting in a box: at most max_parts parts,
// each at most max_part. Sorted lexicographically descending.
std::vector<partition> partitions_in_box(long max_part, std::size_t max_parts);

}  // namespace jacksep
