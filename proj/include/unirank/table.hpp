#pragma once

#include <iomanip>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unirank::io {

// Rectangular table of string cells (counts as decimal strings, floats in
// scientific notation).  The CSV form round-trips exactly.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) {
        if (row.size() != header.size())
            throw std::invalid_argument("Table: row width does not match header");
        rows.push_back(std::move(row));
    }

    std::string to_csv() const {
        std::ostringstream os;
        emit_line(os, header);
        for (const auto& r : rows) emit_line(os, r);
        return os.str();
    }

    static Table from_csv(std::istream& in) {
        Table t;
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty() && in.eof()) break;
            auto cells = split(line);
            if (first) {
                t.header = std::move(cells);
                first = false;
            } else {
                if (cells.size() != t.header.size())
                    throw std::invalid_argument("Table: ragged CSV row");
                t.rows.push_back(std::move(cells));
            }
        }
        if (first) throw std::invalid_argument("Table: empty CSV input");
        return t;
    }

    std::string to_json() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            os << (r ? ",\n " : "\n ") << "{";
            for (std::size_t c = 0; c < header.size(); ++c) {
                os << (c ? ", " : "") << '"' << header[c] << "\": \"" << rows[r][c] << '"';
            }
            os << "}";
        }
        os << "\n]\n";
        return os.str();
    }

    std::string to_text() const {
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
        std::ostringstream os;
        auto emit = [&](const std::vector<std::string>& r) {
            for (std::size_t c = 0; c < r.size(); ++c)
                os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << r[c];
            os << "\n";
        };
        emit(header);
        for (const auto& r : rows) emit(r);
        return os.str();
    }

private:
    static void emit_line(std::ostringstream& os, const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].find_first_of(",\"\n") != std::string::npos)
                throw std::invalid_argument("Table: cell contains a CSV delimiter");
            os << (i ? "," : "") << cells[i];
        }
        os << "\n";
    }

    static std::vector<std::string> split(const std::string& line) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            } else if (ch != '\r') {
                cur.push_back(ch);
            }
        }
        out.push_back(cur);
        return out;
    }
};

} // namespace unirank::io
