#include "coorbit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace coorbit {

IOError::IOError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ")"
                                  : message),
      line_(line),
      column_(column) {}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

// Parses "re;im" starting at `pos` (0-based); `line`/`pos` feed diagnostics.
cplx parse_entry(const std::string& token, int line, int pos) {
    const std::size_t sep = token.find(';');
    if (sep == std::string::npos)
        throw IOError("matrix entry is missing the ';' separator", line, pos + 1);
    std::size_t used = 0;
    double re = 0.0, im = 0.0;
    try {
        re = std::stod(token.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument("trailing characters");
        const std::string imag_part = token.substr(sep + 1);
        im = std::stod(imag_part, &used);
        if (used != imag_part.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw IOError("matrix entry is not a number pair", line, pos + 1);
    }
    if (!std::isfinite(re) || !std::isfinite(im))
        throw IOError("matrix entry is not finite", line, pos + 1);
    return {re, im};
}

}  // namespace

OperatorMatrix read_matrix_file(const std::string& path) {
    std::ifstream input(path);
    if (!input) throw IOError("cannot open matrix file: " + path);

    std::string header;
    if (!std::getline(input, header)) throw IOError("matrix file is empty", 1, 1);

    std::size_t rows = 0, cols = 0;
    {
        std::istringstream hs(header);
        std::string hash, tag, rows_kv, cols_kv;
        hs >> hash >> tag >> rows_kv >> cols_kv;
        if (hash != "#" || tag != "complex-matrix" || rows_kv.rfind("rows=", 0) != 0 ||
            cols_kv.rfind("cols=", 0) != 0)
            throw IOError("expected header '# complex-matrix rows=<R> cols=<C>'", 1, 1);
        try {
            rows = std::stoul(rows_kv.substr(5));
            cols = std::stoul(cols_kv.substr(5));
        } catch (const std::exception&) {
            throw IOError("malformed rows/cols in header", 1, 1);
        }
    }
    if (rows == 0 || cols == 0) throw IOError("matrix dimensions must be positive", 1, 1);

    OperatorMatrix matrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        if (!std::getline(input, line))
            throw IOError("unexpected end of file: expected " + std::to_string(rows) + " rows",
                          static_cast<int>(r + 2), 1);
        const int line_no = static_cast<int>(r + 2);
        std::size_t pos = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t next = line.find(',', pos);
            const bool last = c + 1 == cols;
            if (!last && next == std::string::npos)
                throw IOError("row has too few entries", line_no, static_cast<int>(pos) + 1);
            if (last && next != std::string::npos)
                throw IOError("row has too many entries", line_no, static_cast<int>(next) + 1);
            const std::string token =
                last ? line.substr(pos) : line.substr(pos, next - pos);
            matrix(r, c) = parse_entry(token, line_no, static_cast<int>(pos));
            pos = last ? line.size() : next + 1;
        }
    }
    return matrix;
}

void write_matrix_file(const std::string& path, const OperatorMatrix& matrix) {
    std::ofstream output(path);
    if (!output) throw IOError("cannot open file for writing: " + path);
    output << "# complex-matrix rows=" << matrix.rows() << " cols=" << matrix.cols() << "\n";
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            if (c > 0) output << ',';
            output << format_double(matrix(r, c).real()) << ';'
                   << format_double(matrix(r, c).imag());
        }
        output << "\n";
    }
    if (!output) throw IOError("write failed: " + path);
}

Signal read_signal_file(const std::string& path) {
    const OperatorMatrix matrix = read_matrix_file(path);
    if (matrix.cols() != 1) throw IOError("signal file must have cols=1: " + path);
    Signal f(matrix.rows());
    for (std::size_t r = 0; r < matrix.rows(); ++r) f[r] = matrix(r, 0);
    return f;
}

void write_signal_file(const std::string& path, const Signal& signal) {
    OperatorMatrix matrix(signal.length(), 1);
    for (std::size_t r = 0; r < signal.length(); ++r) matrix(r, 0) = signal[r];
    write_matrix_file(path, matrix);
}

}  // namespace coorbit
