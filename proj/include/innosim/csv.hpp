#ifndef INNOSIM_CSV_HPP
#define INNOSIM_CSV_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace innosim {

// Numbers are written with up to 12 significant digits ("%.12g"); identical
// data always serializes to identical bytes.
std::string format_number(double v);

void write_csv_header(std::ostream& out, std::span<const std::string> names);
void write_csv_row(std::ostream& out, std::span<const std::string> fields);
void write_csv_numeric_row(std::ostream& out, std::span<const double> values);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;  // -1 when absent
    double number(std::size_t row, int col) const;
};

CsvTable read_csv(const std::string& path);
CsvTable read_csv_stream(std::istream& in);

}  // namespace innosim

#endif
