#pragma once

#include "epslab/cyclotomic.hpp"

#include <vector>

namespace epslab {

/// Dense matrix over the cyclotomic field closure (entries promote orders as
/// needed). Exact arithmetic throughout.
class CycloMatrix {
public:
    CycloMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _a(rows * cols) {}
    static CycloMatrix identity(std::size_t n);

    std::size_t rows() const { return _rows; }
    std::size_t cols() const { return _cols; }
    CyclotomicNumber& at(std::size_t i, std::size_t j) { return _a[i * _cols + j]; }
    const CyclotomicNumber& at(std::size_t i, std::size_t j) const { return _a[i * _cols + j]; }

    CycloMatrix operator*(const CycloMatrix&) const;
    CycloMatrix operator+(const CycloMatrix&) const;
    CycloMatrix operator-(const CycloMatrix&) const;
    bool operator==(const CycloMatrix&) const;

    CyclotomicNumber trace() const;
    /// Exact determinant by Gaussian elimination.
    CyclotomicNumber det() const;

private:
    std::size_t _rows, _cols;
    std::vector<CyclotomicNumber> _a;
};

CycloMatrix scale(const CyclotomicNumber& c, const CycloMatrix& m);

/// Basis of the right kernel {v : A v = 0}, via reduced row echelon form.
std::vector<std::vector<CyclotomicNumber>> nullspace(const CycloMatrix& a);

}  // namespace epslab
