#pragma once

// Exact linear algebra over F_p.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chainring/kernels.hpp"

namespace chainring {

using Fp = kernels::Fp;
using FpVector = std::vector<Fp>;

/// Modular inverse of a nonzero residue modulo the prime p.
Fp fp_inverse(Fp a, Fp p);

/// A subspace of F_p^dim kept in fully reduced row-echelon form.
///
/// Rows are sorted by pivot column, every pivot is 1, and every pivot column
/// is zero outside its own row, so two spaces are equal exactly when their row
/// lists are equal. Pivots are chosen at the lowest available coordinate.
class RowSpace {
public:
    RowSpace(Fp p, std::size_t dim);

    Fp modulus() const { return p_; }
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<FpVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Adds v to the spanning set. Returns true when the rank grew.
    bool insert(std::span<const Fp> v);

    /// v minus its projection onto the space along the pivot coordinates;
    /// zero exactly when v is in the space.
    FpVector reduce(std::span<const Fp> v) const;

    /// Like reduce, but only eliminates rows whose pivot is below `limit`.
    FpVector reduce_below(std::span<const Fp> v, std::size_t limit) const;

    bool contains(std::span<const Fp> v) const;
    bool contains(const RowSpace& other) const;

    friend bool operator==(const RowSpace& a, const RowSpace& b) {
        return a.p_ == b.p_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    Fp p_;
    std::size_t dim_;
    std::vector<FpVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Basis (in reduced echelon form) of {y in F_p^ncols : M y = 0}, where M has
/// the given rows.
std::vector<FpVector> nullspace(const std::vector<FpVector>& rows, std::size_t ncols, Fp p);

}  // namespace chainring
