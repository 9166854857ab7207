#pragma once

#include "qmix/errors.hpp"

#include <cstddef>
#include <vector>

namespace qmix {

// Bits of a basis index, one entry per qubit, qubit 1 first.
//
// Convention used throughout the project: qubit 1 is the leftmost tensor
// factor AND the most significant bit of a basis index, so index 6 on three
// qubits is |110>.
using BitVector = std::vector<int>;

/// Ordered set of 1-based qubit labels selecting a subsystem of an
/// n-qubit register. Labels are kept sorted ascending and must be distinct
/// and within [1, n].
class QubitSet {
public:
    QubitSet(std::vector<int> labels, int total_qubits);

    static QubitSet none(int total_qubits) { return QubitSet({}, total_qubits); }
    static QubitSet all(int total_qubits);

    int total_qubits() const { return total_; }
    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    bool contains(int label) const;
    const std::vector<int>& labels() const { return labels_; }

    /// The qubits of the same register that are not in this set.
    QubitSet complement() const;

private:
    std::vector<int> labels_;
    int total_;
};

/// MSB-first binary expansion of index over n_bits qubits.
/// Throws OutOfRangeError if index >= 2^n_bits.
BitVector index_to_bits(std::size_t index, int n_bits);

/// Inverse of index_to_bits.
std::size_t bits_to_index(const BitVector& bits);

/// Builds a full-register basis index by placing inserted[j] at the j-th
/// label of `at` and filling the remaining positions with the bits of
/// `base` in order. This is the index-construction kernel behind the
/// partial-trace and partial-transpose loops, so it returns the integer
/// index directly.
std::size_t build_index(const BitVector& base, const BitVector& inserted, const QubitSet& at);

}  // namespace qmix
