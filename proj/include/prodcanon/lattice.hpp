#ifndef PRODCANON_LATTICE_HPP
#define PRODCANON_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "prodcanon/rational.hpp"

namespace prodcanon {

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}

    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Integer> mul(const std::vector<Integer>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Integer> a_;
};

/// Z-module basis of {v in Z^cols | M v = 0}, via column elimination to
/// Hermite form with a unimodular transform. Empty result iff the kernel is
/// trivial.
std::vector<std::vector<Integer>> lattice_kernel(const IntMatrix& M);

/// Integer solution x of sum_i x_i * basis[i] = v, if one exists. The basis
/// vectors must be Z-linearly independent.
std::optional<std::vector<Integer>> in_span(const std::vector<std::vector<Integer>>& basis,
                                            const std::vector<Integer>& v);

}  // namespace prodcanon

#endif
