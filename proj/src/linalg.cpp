#include "chainring/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainring {

Fp fp_inverse(Fp a, Fp p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse mod p");
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<Fp>(result);
}

RowSpace::RowSpace(Fp p, std::size_t dim) : p_(p), dim_(dim) {}

FpVector RowSpace::reduce_below(std::span<const Fp> v, std::size_t limit) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match row space dimension");
    FpVector w(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size() && pivots_[r] < limit; ++r) {
        const Fp c = w[pivots_[r]];
        if (c != 0) kernels::axpy_mod(w, rows_[r], p_ - c, p_);
    }
    return w;
}

FpVector RowSpace::reduce(std::span<const Fp> v) const { return reduce_below(v, dim_); }

bool RowSpace::contains(std::span<const Fp> v) const {
    const FpVector w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](Fp x) { return x == 0; });
}

bool RowSpace::contains(const RowSpace& other) const {
    if (other.p_ != p_ || other.dim_ != dim_) return false;
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const FpVector& r) { return contains(r); });
}

bool RowSpace::insert(std::span<const Fp> v) {
    FpVector w = reduce(v);
    const auto it = std::find_if(w.begin(), w.end(), [](Fp x) { return x != 0; });
    if (it == w.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - w.begin());
    kernels::scale_mod(w, fp_inverse(*it, p_), p_);
    for (auto& row : rows_) {
        const Fp c = row[pivot];
        if (c != 0) kernels::axpy_mod(row, w, p_ - c, p_);
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

std::vector<FpVector> nullspace(const std::vector<FpVector>& rows, std::size_t ncols, Fp p) {
    RowSpace m(p, ncols);
    for (const auto& r : rows) m.insert(r);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : m.pivots()) is_pivot[c] = true;

    RowSpace kernel(p, ncols);
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        FpVector y(ncols, 0);
        y[free] = 1;
        for (std::size_t r = 0; r < m.rank(); ++r) {
            const Fp c = m.rows()[r][free];
            if (c != 0) y[m.pivots()[r]] = p - c;
        }
        kernel.insert(y);
    }
    return kernel.rows();
}

}  // namespace chainring
