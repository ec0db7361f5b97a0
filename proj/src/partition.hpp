#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ydc {

// Integer partition, weakly decreasing positive parts. Also used as the cycle
// type of a permutation (face type of a map, class of a character).
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "4,3,1"; "" and "0" denote the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row index; rows past the end have length 0.
    int row(int i) const;

    Partition conjugate() const;

    // (alpha*p_1, ..., alpha*p_k): stretches every row, keeps the row count.
    Partition anisotropic_scale(int alpha) const;

    // Each part multiplied by t and repeated t times: the diagram of t*lambda.
    Partition dilate(int t) const;

    bool contains_box(int col, int row_index) const;  // 1-based column/row

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// All partitions of exactly n, largest-part-first lexicographic order.
std::vector<Partition> partitions_of(int n);

// All partitions of 0..n inclusive.
std::vector<Partition> partitions_up_to(int n);

}  // namespace ydc
