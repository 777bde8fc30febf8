#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace ktoric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    std::vector<Int> column(int j) const;
    std::vector<Int> row(int i) const;
    void set_column(int j, const std::vector<Int>& v);

    /// Matrix-vector product (vector as column).
    std::vector<Int> apply(const std::vector<Int>& v) const;

    /// [this | rhs] side by side; row counts must agree.
    IntMatrix augmented(const IntMatrix& rhs) const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

}  // namespace ktoric
