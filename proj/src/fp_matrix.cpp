#include "adem/fp_matrix.hpp"

#include <stdexcept>

namespace adem::linalg {

FpMat::FpMat(int p, size_t rows, size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0)
{
    if (!is_prime(p))
        throw std::invalid_argument("FpMat: p must be prime");
}

void FpMat::append_row(const std::vector<uint8_t>& row)
{
    if (row.size() != cols_)
        throw std::invalid_argument("FpMat::append_row: width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

GF2Mat::GF2Mat(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), wpr_(cols == 0 ? 1 : (cols + 63) / 64), bits_(rows * wpr_, 0)
{
}

void GF2Mat::append_row(const std::vector<uint64_t>& packed)
{
    if (packed.size() != wpr_)
        throw std::invalid_argument("GF2Mat::append_row: width mismatch");
    bits_.insert(bits_.end(), packed.begin(), packed.end());
    ++rows_;
}

std::vector<size_t> rref(FpMat& m, Exec exec)
{
    const int p = m.p();
    Fp fp(p);
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = rows;
        for (size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) {
                pr = i;
                break;
            }
        }
        if (pr == rows)
            continue;
        if (pr != r) {
            uint8_t* a = m.row(r);
            uint8_t* b = m.row(pr);
            for (size_t j = 0; j < cols; ++j)
                std::swap(a[j], b[j]);
        }
        int inv = fp.inv(m.get(r, c));
        if (inv != 1) {
            uint8_t* a = m.row(r);
            for (size_t j = c; j < cols; ++j)
                a[j] = static_cast<uint8_t>(fp.mul(a[j], inv));
        }
        const uint8_t* piv = m.row(r);
        const long long rr = static_cast<long long>(rows);
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (long long i = 0; i < rr; ++i) {
                if (static_cast<size_t>(i) == r)
                    continue;
                uint8_t f = m.get(i, c);
                if (!f)
                    continue;
                uint8_t* a = m.row(i);
                for (size_t j = c; j < cols; ++j)
                    a[j] = static_cast<uint8_t>((a[j] + (p - f) * piv[j]) % p);
            }
        } else {
            for (long long i = 0; i < rr; ++i) {
                if (static_cast<size_t>(i) == r)
                    continue;
                uint8_t f = m.get(i, c);
                if (!f)
                    continue;
                uint8_t* a = m.row(i);
                for (size_t j = c; j < cols; ++j)
                    a[j] = static_cast<uint8_t>((a[j] + (p - f) * piv[j]) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<size_t> rref(GF2Mat& m, Exec exec)
{
    const size_t rows = m.rows(), cols = m.cols(), wpr = m.words_per_row();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = rows;
        for (size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) {
                pr = i;
                break;
            }
        }
        if (pr == rows)
            continue;
        if (pr != r) {
            uint64_t* a = m.row(r);
            uint64_t* b = m.row(pr);
            for (size_t j = 0; j < wpr; ++j)
                std::swap(a[j], b[j]);
        }
        const uint64_t* piv = m.row(r);
        const size_t cw = c / 64;
        const long long rr = static_cast<long long>(rows);
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (long long i = 0; i < rr; ++i) {
                if (static_cast<size_t>(i) == r || !m.get(i, c))
                    continue;
                uint64_t* a = m.row(i);
                for (size_t j = cw; j < wpr; ++j)
                    a[j] ^= piv[j];
            }
        } else {
            for (long long i = 0; i < rr; ++i) {
                if (static_cast<size_t>(i) == r || !m.get(i, c))
                    continue;
                uint64_t* a = m.row(i);
                for (size_t j = cw; j < wpr; ++j)
                    a[j] ^= piv[j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(FpMat m, Exec exec)
{
    return rref(m, exec).size();
}

size_t rank(GF2Mat m, Exec exec)
{
    return rref(m, exec).size();
}

}  // namespace adem::linalg
