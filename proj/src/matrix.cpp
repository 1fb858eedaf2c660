#include "corings/matrix.hpp"

namespace corings {

Vector zero_vector(Field f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(Field f, std::size_t n, std::size_t i) {
    Vector v(n, f.zero());
    v.at(i) = f.one();
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector add: length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector sub: length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Scalar& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("axpy: length mismatch");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += s * b[i];
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols,
               std::initializer_list<std::int64_t> entries)
    : Matrix(f, rows, cols) {
    if (entries.size() != rows * cols) throw DimensionError("matrix literal: wrong entry count");
    std::size_t i = 0;
    for (auto e : entries) data_[i++] = f.from_int(e);
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, std::span<const Vector> cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_ || c >= cols_) throw DimensionError("set_column: shape mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r].in(field_);
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    if (v.size() != cols_ || r >= rows_) throw DimensionError("set_row: shape mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c].in(field_);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& s = (*this)(r, c);
            if (r == c ? !s.is_one() : !s.is_zero()) return false;
        }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product: " + std::to_string(a.rows_) + "x" +
                             std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                             std::to_string(b.cols_));
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            const Scalar* brow = &b.data_[k * b.cols_];
            Scalar* rrow = &r.data_[i * r.cols_];
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!brow[j].is_zero()) rrow[j] += aik * brow[j];
        }
    return r;
}

Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: shape mismatch");
    Vector r(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const Scalar* arow = &a.data_[i * a.cols_];
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!arow[j].is_zero() && !v[j].is_zero()) r[i] += arow[j] * v[j];
    }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out += " ";
            out += (*this)(r, c).to_string();
        }
    }
    return out + "]";
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

Matrix vstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = blocks[0].cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionError("vstack: column mismatch");
        rows += b.rows();
    }
    Matrix r(blocks[0].field(), rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) r(off + i, j) = b(i, j);
        off += b.rows();
    }
    return r;
}

Matrix hstack(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = blocks[0].rows(), cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw DimensionError("hstack: row mismatch");
        cols += b.cols();
    }
    Matrix r(blocks[0].field(), rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, off + j) = b(i, j);
        off += b.cols();
    }
    return r;
}

}  // namespace corings
