#include <bergekit/matrix_io.hpp>
#include <bergekit/named.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bergekit {

BitMatrix read_matrix(std::istream& in) {
    long rows = -1;
    long cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
        throw Error("matrix text: expected header \"<rows> <cols>\"");
    }
    if (rows > kMaxRows) {
        throw Error("matrix text: " + std::to_string(rows) + " rows exceeds " + std::to_string(kMaxRows));
    }
    std::vector<Column> columns(static_cast<std::size_t>(cols), 0);
    if (cols > 0) {
        for (long r = 0; r < rows; ++r) {
            std::string line;
            if (!(in >> line)) {
                throw Error("matrix text: missing row " + std::to_string(r));
            }
            if (static_cast<long>(line.size()) != cols) {
                throw Error("matrix text: row " + std::to_string(r) + " has " + std::to_string(line.size()) +
                            " entries, expected " + std::to_string(cols));
            }
            for (long j = 0; j < cols; ++j) {
                if (line[j] == '1') {
                    columns[static_cast<std::size_t>(j)] |= row_bit(static_cast<int>(r));
                } else if (line[j] != '0') {
                    throw Error("matrix text: bad entry in row " + std::to_string(r));
                }
            }
        }
    }
    return BitMatrix(static_cast<int>(rows), std::move(columns));
}

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const BitMatrix& a) {
    out << a.rows() << ' ' << a.cols() << '\n';
    for (int r = 0; r < a.rows(); ++r) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out << (a.at(r, j) ? '1' : '0');
        }
        out << '\n';
    }
}

std::string to_text(const BitMatrix& a) {
    std::ostringstream os;
    write_matrix(os, a);
    return os.str();
}

BitMatrix parse_literal(std::string_view literal) {
    std::vector<Column> cols;
    int rows = -1;
    std::size_t start = 0;
    while (start <= literal.size()) {
        std::size_t end = literal.find(',', start);
        if (end == std::string_view::npos) {
            end = literal.size();
        }
        std::string_view piece = literal.substr(start, end - start);
        if (piece.empty()) {
            throw Error("matrix literal: empty column");
        }
        if (rows < 0) {
            rows = static_cast<int>(piece.size());
            if (rows > kMaxRows) {
                throw Error("matrix literal: too many rows");
            }
        } else if (static_cast<int>(piece.size()) != rows) {
            throw Error("matrix literal: columns of unequal length");
        }
        Column c = 0;
        for (int r = 0; r < rows; ++r) {
            if (piece[static_cast<std::size_t>(r)] == '1') {
                c |= row_bit(r);
            } else if (piece[static_cast<std::size_t>(r)] != '0') {
                throw Error("matrix literal: bad character");
            }
        }
        cols.push_back(c);
        start = end + 1;
    }
    return BitMatrix(rows, std::move(cols));
}

std::string to_literal(const BitMatrix& a) {
    std::string out;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j) {
            out += ',';
        }
        for (int r = 0; r < a.rows(); ++r) {
            out += a.at(r, j) ? '1' : '0';
        }
    }
    return out;
}

BitMatrix resolve_matrix_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        if (auto m = lookup_named(arg.substr(1))) {
            return *m;
        }
        throw Error("unknown catalog matrix " + arg);
    }
    if (std::filesystem::is_regular_file(arg)) {
        return read_matrix_file(arg);
    }
    return parse_literal(arg);
}

}  // namespace bergekit
