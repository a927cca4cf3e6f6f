#pragma once

#include "quandle/core.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace quandle {

// Text format for operation matrices: each record is a line "quandle <n>"
// followed by n lines of n whitespace-separated integers in 1..n. Records
// are separated by blank lines; lines starting with '#' are comments.
// Entries are range-checked here; the axioms are checked by validate().

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

std::vector<Table> parse_matrix_file(std::istream& in);
std::vector<Table> parse_matrix_text(const std::string& text);

void write_matrix_record(std::ostream& out, const Table& t);
void write_matrix_file(std::ostream& out, const std::vector<Table>& tables);
std::string to_matrix_text(const Table& t);

} // namespace quandle
