#include "censym/matrix.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace censym {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw PreconditionError("matrix must have rows >= 1, cols >= 1");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw ParseError("ragged rows in matrix literal");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
    if (cols.empty() || cols.front().empty())
        throw PreconditionError("matrix must have rows >= 1, cols >= 1");
    IntMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw ParseError("ragged columns in matrix literal");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_column(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

void IntMatrix::submul_column(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) -= q * at(i, src);
}

IntMatrix IntMatrix::with_row_deleted(std::size_t r) const {
    if (rows_ < 2) throw PreconditionError("cannot delete the only row");
    IntMatrix m(rows_ - 1, cols_);
    for (std::size_t i = 0, o = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < cols_; ++j) m.at(o, j) = at(i, j);
        ++o;
    }
    return m;
}

std::string IntMatrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x) {
    if (a.cols() != x.size()) throw PreconditionError("matrix-vector shape mismatch");
    std::vector<Int> y(a.rows(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) y[i] += a.at(i, j) * x[j];
    return y;
}

IntMatrix parse_matrix_text(std::istream& in) {
    std::size_t d = 0, n = 0;
    std::string line;
    // header line `d n`
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (ls >> d >> n) {
            std::string rest;
            if (ls >> rest) throw ParseError("matrix header must be exactly `d n`");
            break;
        }
        std::string tok;
        std::istringstream probe(line);
        if (probe >> tok && tok[0] != '#') throw ParseError("matrix header must be `d n`");
    }
    if (d == 0 || n == 0) throw ParseError("matrix must have rows >= 1, cols >= 1");
    IntMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i) {
        if (!std::getline(in, line)) throw ParseError("matrix has fewer rows than declared");
        std::istringstream ls(line);
        std::string tok;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(ls >> tok)) throw ParseError("ragged row in matrix file");
            try {
                m.at(i, j) = Int(tok);
            } catch (const std::exception&) {
                throw ParseError("invalid integer in matrix file: " + tok);
            }
        }
        if (ls >> tok) throw ParseError("ragged row in matrix file (extra entries)");
    }
    return m;
}

IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_text(in);
}

IntMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON matrix: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("JSON matrix needs rows, cols, data");
    std::size_t d = j["rows"].get<std::size_t>();
    std::size_t n = j["cols"].get<std::size_t>();
    if (d == 0 || n == 0) throw ParseError("matrix must have rows >= 1, cols >= 1");
    const auto& data = j["data"];
    if (!data.is_array() || data.size() != d) throw ParseError("JSON matrix data has wrong row count");
    IntMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i) {
        if (!data[i].is_array() || data[i].size() != n)
            throw ParseError("ragged row in JSON matrix");
        for (std::size_t jj = 0; jj < n; ++jj) {
            const auto& cell = data[i][jj];
            if (cell.is_number_integer())
                m.at(i, jj) = Int(cell.get<long long>());
            else if (cell.is_string())
                m.at(i, jj) = Int(cell.get<std::string>());
            else
                throw ParseError("JSON matrix entries must be integers or integer strings");
        }
    }
    return m;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_matrix_json(text);
    return parse_matrix_text(text);
}

}  // namespace censym
