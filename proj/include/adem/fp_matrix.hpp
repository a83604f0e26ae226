#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "adem/fp.hpp"

namespace adem::linalg {

/// Kernel selection: Serial is the reference implementation, Parallel runs
/// the row-update loops under OpenMP. Both must produce identical results.
enum class Exec { Serial, Parallel };

/// Dense row-major matrix over F_p with byte entries (odd small p).
class FpMat {
public:
    FpMat(int p, size_t rows, size_t cols);

    int p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint8_t get(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint8_t v) { a_[r * cols_ + c] = v; }
    uint8_t* row(size_t r) { return a_.data() + r * cols_; }
    const uint8_t* row(size_t r) const { return a_.data() + r * cols_; }

    void append_row(const std::vector<uint8_t>& row);

private:
    int p_;
    size_t rows_, cols_;
    std::vector<uint8_t> a_;
};

/// Dense GF(2) matrix with 64-bit packed rows.
class GF2Mat {
public:
    GF2Mat(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return wpr_; }

    bool get(size_t r, size_t c) const
    {
        return (bits_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(size_t r, size_t c, bool v)
    {
        uint64_t& w = bits_[r * wpr_ + c / 64];
        uint64_t m = 1ull << (c % 64);
        w = v ? (w | m) : (w & ~m);
    }
    uint64_t* row(size_t r) { return bits_.data() + r * wpr_; }
    const uint64_t* row(size_t r) const { return bits_.data() + r * wpr_; }

    void append_row(const std::vector<uint64_t>& packed);

private:
    size_t rows_, cols_, wpr_;
    std::vector<uint64_t> bits_;
};

/// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<size_t> rref(FpMat& m, Exec exec = Exec::Serial);
std::vector<size_t> rref(GF2Mat& m, Exec exec = Exec::Serial);

size_t rank(FpMat m, Exec exec = Exec::Serial);
size_t rank(GF2Mat m, Exec exec = Exec::Serial);

}  // namespace adem::linalg
