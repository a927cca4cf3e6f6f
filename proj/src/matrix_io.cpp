#include "quandle/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace quandle {

namespace {

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos != std::string::npos && line[pos] == '#';
}

std::vector<long long> numbers_on_line(const std::string& line, int lineno) {
    std::vector<long long> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        try {
            size_t consumed = 0;
            const long long v = std::stoll(token, &consumed);
            if (consumed != token.size())
                throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected an integer, got '" + token + "'");
        }
    }
    return out;
}

} // namespace

std::vector<Table> parse_matrix_file(std::istream& in) {
    std::vector<Table> tables;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line) || is_comment(line))
            continue;

        // header: "quandle <n>"
        std::istringstream header(line);
        std::string keyword;
        long long n = 0;
        header >> keyword;
        if (keyword != "quandle")
            throw ParseError(lineno, "expected record header 'quandle <n>'");
        if (!(header >> n) || n < 1)
            throw ParseError(lineno, "record order must be a positive integer");
        std::string trailing;
        if (header >> trailing)
            throw ParseError(lineno, "unexpected token after record order: '" + trailing + "'");

        std::vector<int> entries;
        entries.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
        int rows_read = 0;
        while (rows_read < n) {
            if (!std::getline(in, line))
                throw ParseError(lineno, "unexpected end of file: expected " + std::to_string(n) +
                                             " rows, got " + std::to_string(rows_read));
            ++lineno;
            if (is_comment(line))
                continue;
            if (is_blank(line))
                throw ParseError(lineno, "unexpected blank line inside a record");
            const auto values = numbers_on_line(line, lineno);
            if (static_cast<long long>(values.size()) != n)
                throw ParseError(lineno, "expected " + std::to_string(n) + " entries, got " +
                                             std::to_string(values.size()));
            for (long long v : values) {
                if (v < 1 || v > n)
                    throw ParseError(lineno, "entry " + std::to_string(v) + " out of range 1.." +
                                                 std::to_string(n));
                entries.push_back(static_cast<int>(v));
            }
            ++rows_read;
        }
        tables.emplace_back(static_cast<int>(n), std::move(entries));
    }
    return tables;
}

std::vector<Table> parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_file(in);
}

void write_matrix_record(std::ostream& out, const Table& t) {
    out << "quandle " << t.order() << "\n";
    for (int i = 1; i <= t.order(); ++i) {
        for (int j = 1; j <= t.order(); ++j)
            out << (j > 1 ? " " : "") << t.op(i, j);
        out << "\n";
    }
}

void write_matrix_file(std::ostream& out, const std::vector<Table>& tables) {
    for (size_t i = 0; i < tables.size(); ++i) {
        if (i > 0)
            out << "\n";
        write_matrix_record(out, tables[i]);
    }
}

std::string to_matrix_text(const Table& t) {
    std::ostringstream out;
    write_matrix_record(out, t);
    return out.str();
}

} // namespace quandle
