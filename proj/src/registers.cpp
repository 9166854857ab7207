#include "qmix/registers.hpp"

#include <algorithm>
#include <string>

namespace qmix {

QubitSet::QubitSet(std::vector<int> labels, int total_qubits)
    : labels_(std::move(labels)), total_(total_qubits) {
    if (total_ < 0)
        throw LabelError("QubitSet: negative register size");
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 1 || labels_[i] > total_)
            throw LabelError("QubitSet: label " + std::to_string(labels_[i]) +
                             " outside [1, " + std::to_string(total_) + "]");
        if (i > 0 && labels_[i] == labels_[i - 1])
            throw LabelError("QubitSet: duplicate label " + std::to_string(labels_[i]));
    }
}

QubitSet QubitSet::all(int total_qubits) {
    std::vector<int> labels(static_cast<std::size_t>(std::max(total_qubits, 0)));
    for (int i = 0; i < total_qubits; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    return QubitSet(std::move(labels), total_qubits);
}

bool QubitSet::contains(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

QubitSet QubitSet::complement() const {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(total_ - size()));
    for (int i = 1; i <= total_; ++i)
        if (!contains(i)) rest.push_back(i);
    return QubitSet(std::move(rest), total_);
}

BitVector index_to_bits(std::size_t index, int n_bits) {
    if (n_bits < 0 || n_bits > 62)
        throw OutOfRangeError("index_to_bits: bit count " + std::to_string(n_bits) + " unsupported");
    if (index >= (std::size_t{1} << n_bits))
        throw OutOfRangeError("index_to_bits: index " + std::to_string(index) +
                              " does not fit in " + std::to_string(n_bits) + " bits");
    BitVector bits(static_cast<std::size_t>(n_bits));
    for (int i = 0; i < n_bits; ++i)
        bits[static_cast<std::size_t>(i)] = static_cast<int>((index >> (n_bits - 1 - i)) & 1u);
    return bits;
}

std::size_t bits_to_index(const BitVector& bits) {
    std::size_t index = 0;
    for (int bit : bits) index = (index << 1) | static_cast<std::size_t>(bit & 1);
    return index;
}

std::size_t build_index(const BitVector& base, const BitVector& inserted, const QubitSet& at) {
    const int n = at.total_qubits();
    if (static_cast<int>(inserted.size()) != at.size() ||
        static_cast<int>(base.size() + inserted.size()) != n)
        throw LengthMismatchError("build_index: base(" + std::to_string(base.size()) +
                                  ") + inserted(" + std::to_string(inserted.size()) +
                                  ") must cover " + std::to_string(n) + " qubits");
    const std::vector<int>& labels = at.labels();
    std::size_t index = 0;
    std::size_t next_base = 0;
    std::size_t next_ins = 0;
    for (int i = 1; i <= n; ++i) {
        const int bit = (next_ins < labels.size() && labels[next_ins] == i)
                            ? inserted[next_ins++]
                            : base[next_base++];
        index = (index << 1) | static_cast<std::size_t>(bit & 1);
    }
    return index;
}

}  // namespace qmix
