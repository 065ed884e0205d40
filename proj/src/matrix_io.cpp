#include "nnirank2/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace nnirank2 {

IntMatrix parse_matrix(std::string_view text) {
    std::vector<IntVector> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::string tok;
        IntVector row;
        while (ls >> tok) {
            Int v;
            const std::size_t start = tok[0] == '+' || tok[0] == '-' ? 1 : 0;
            if (start == tok.size() || tok.find_first_not_of("0123456789", start) != std::string::npos ||
                v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
                throw InputError("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
            row.push_back(std::move(v));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(rows.front().size()) +
                             " entries, found " + std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw InputError("matrix is empty");
    return IntMatrix::from_rows(rows);
}

IntMatrix read_matrix(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return read_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

void write_matrix_file(const std::string& path, const IntMatrix& m) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << m;
}

} // namespace nnirank2
