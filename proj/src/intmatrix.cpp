#include "ktoric/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ktoric {

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows)
{
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("ragged row list");
        int j = 0;
        for (long long x : row)
            m.at(i, j++) = x;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                p.at(i, j) += x * rhs.at(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix m = *this;
    for (auto& x : m.a_)
        x = -x;
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

std::vector<Int> IntMatrix::column(int j) const
{
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::row(int i) const
{
    std::vector<Int> v(cols_);
    for (int j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

void IntMatrix::set_column(int j, const std::vector<Int>& v)
{
    if (static_cast<int>(v.size()) != rows_)
        throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < rows_; ++i)
        at(i, j) = v[i];
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("vector length mismatch");
    std::vector<Int> w(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            w[i] += at(i, j) * v[j];
    return w;
}

IntMatrix IntMatrix::augmented(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_)
        throw std::invalid_argument("row count mismatch in augmentation");
    IntMatrix m(rows_, cols_ + rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j);
        for (int j = 0; j < rhs.cols_; ++j)
            m.at(i, cols_ + j) = rhs.at(i, j);
    }
    return m;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols_; ++j)
            os << (j ? "," : "") << at(i, j);
        os << "]";
        if (i + 1 < rows_)
            os << "\n";
    }
    os << "]";
    return os.str();
}

}  // namespace ktoric
