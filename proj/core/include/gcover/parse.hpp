#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gcover/polynomial.hpp"

namespace gcover {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    int line_, column_;
    std::string detail_;
};

// Grammar: integers, a/b, + - * ^, parentheses, identifiers from the ring.
// Columns in errors are 1-based offsets into `text` shifted by col0.
QPoly parse_poly(std::string_view text, const RingPtr& ring, int line = 0, int col0 = 1);

}  // namespace gcover
