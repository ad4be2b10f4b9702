#pragma once

#include <string>

#include "coorbit/types.hpp"

namespace coorbit {

/// File could not be read, written, or parsed; carries a 1-based line and
/// column for parse failures (0 when not applicable).
class IOError : public std::runtime_error {
public:
    IOError(const std::string& message, int line = 0, int column = 0);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

// Text format: first line "# complex-matrix rows=<R> cols=<C>", then R lines
// of C comma-separated "re;im" entries. Written with 17 significant digits so
// doubles round-trip exactly. A signal is a single-column matrix.

OperatorMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const OperatorMatrix& matrix);

Signal read_signal_file(const std::string& path);
void write_signal_file(const std::string& path, const Signal& signal);

std::string format_double(double value);   // %.17g, shared by io and reports

}  // namespace coorbit
