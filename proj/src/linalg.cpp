#include "epslab/linalg.hpp"

#include <stdexcept>

namespace epslab {

CycloMatrix CycloMatrix::identity(std::size_t n) {
    CycloMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CyclotomicNumber(1);
    return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
    if (_cols != o._rows) throw std::invalid_argument("cyclo matrix: shape mismatch");
    CycloMatrix r(_rows, o._cols);
    for (std::size_t i = 0; i < _rows; ++i)
        for (std::size_t k = 0; k < _cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o._cols; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
    if (_rows != o._rows || _cols != o._cols)
        throw std::invalid_argument("cyclo matrix: shape mismatch");
    CycloMatrix r(_rows, _cols);
    for (std::size_t i = 0; i < _a.size(); ++i) r._a[i] = _a[i] + o._a[i];
    return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
    if (_rows != o._rows || _cols != o._cols)
        throw std::invalid_argument("cyclo matrix: shape mismatch");
    CycloMatrix r(_rows, _cols);
    for (std::size_t i = 0; i < _a.size(); ++i) r._a[i] = _a[i] - o._a[i];
    return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
    if (_rows != o._rows || _cols != o._cols) return false;
    for (std::size_t i = 0; i < _a.size(); ++i)
        if (_a[i] != o._a[i]) return false;
    return true;
}

CyclotomicNumber CycloMatrix::trace() const {
    if (_rows != _cols) throw std::invalid_argument("cyclo matrix: trace of non-square");
    CyclotomicNumber t;
    for (std::size_t i = 0; i < _rows; ++i) t += at(i, i);
    return t;
}

CyclotomicNumber CycloMatrix::det() const {
    if (_rows != _cols) throw std::invalid_argument("cyclo matrix: determinant of non-square");
    CycloMatrix a = *this;
    CyclotomicNumber d(1);
    for (std::size_t k = 0; k < _rows; ++k) {
        std::size_t piv = k;
        while (piv < _rows && a.at(piv, k).is_zero()) ++piv;
        if (piv == _rows) return CyclotomicNumber(0);
        if (piv != k) {
            for (std::size_t j = k; j < _cols; ++j) std::swap(a.at(piv, j), a.at(k, j));
            d = -d;
        }
        const CyclotomicNumber pivot = a.at(k, k);
        d *= pivot;
        CyclotomicNumber pinv = pivot.inverse();
        for (std::size_t i = k + 1; i < _rows; ++i) {
            if (a.at(i, k).is_zero()) continue;
            CyclotomicNumber f = a.at(i, k) * pinv;
            for (std::size_t j = k; j < _cols; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return d;
}

CycloMatrix scale(const CyclotomicNumber& c, const CycloMatrix& m) {
    CycloMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
    return r;
}

std::vector<std::vector<CyclotomicNumber>> nullspace(const CycloMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    CycloMatrix r = a;
    std::vector<long> pivot_col_of_row(m, -1);
    std::vector<bool> is_pivot_col(n, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && r.at(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(row, j));
        CyclotomicNumber pinv = r.at(row, col).inverse();
        for (std::size_t j = 0; j < n; ++j) r.at(row, j) *= pinv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            CyclotomicNumber f = r.at(i, col);
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) -= f * r.at(row, j);
        }
        pivot_col_of_row[row] = static_cast<long>(col);
        is_pivot_col[col] = true;
        ++row;
    }
    std::vector<std::vector<CyclotomicNumber>> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (is_pivot_col[col]) continue;
        std::vector<CyclotomicNumber> v(n);
        v[col] = CyclotomicNumber(1);
        for (std::size_t i = 0; i < row; ++i)
            v[static_cast<std::size_t>(pivot_col_of_row[i])] = -r.at(i, col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace epslab
