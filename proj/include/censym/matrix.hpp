#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "censym/errors.hpp"
#include "censym/numeric.hpp"

namespace censym {

/// Dense matrix of exact integers, row major. Rows and columns are 0-indexed
/// in code; file formats and reports use the 1-indexed conventions of the
/// CLI contract.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {
        if (rows == 0 || cols == 0) throw PreconditionError("matrix must have rows >= 1, cols >= 1");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Int> column(std::size_t c) const;
    std::vector<Int> row(std::size_t r) const;

    IntMatrix transposed() const;

    void swap_columns(std::size_t a, std::size_t b);
    void negate_column(std::size_t c);
    /// column[dst] -= q * column[src]
    void submul_column(std::size_t dst, std::size_t src, const Int& q);

    IntMatrix with_row_deleted(std::size_t r) const;

    bool operator==(const IntMatrix& other) const = default;

    std::string to_text() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x);

/// Text format: first line `d n`, then d lines of n space-separated integers.
/// Ragged or malformed input raises ParseError.
IntMatrix parse_matrix_text(std::istream& in);
IntMatrix parse_matrix_text(const std::string& text);

/// JSON format: {"rows":d,"cols":n,"data":[[...],...]}. Ragged rows rejected.
IntMatrix parse_matrix_json(const std::string& text);

/// Reads either format, sniffing JSON by a leading '{'.
IntMatrix read_matrix_file(const std::string& path);

}  // namespace censym
