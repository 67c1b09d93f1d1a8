#include "probetrace/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace probetrace {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

SparseSymMatrix load_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");

    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix")
        throw std::runtime_error(path + ": not a Matrix Market file");
    if (lower(format) != "coordinate")
        throw std::runtime_error(path + ": only coordinate format is supported");
    field = lower(field);
    if (field != "real" && field != "integer")
        throw std::runtime_error(path + ": unsupported field type '" + field + "'");
    symmetry = lower(symmetry);
    const bool symmetric_header = symmetry == "symmetric";
    if (!symmetric_header && symmetry != "general")
        throw std::runtime_error(path + ": unsupported symmetry '" + symmetry + "'");

    // Skip comments, read the size line.
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '%') break;
    }
    long nrows = -1, ncols = -1, nentries = -1;
    {
        std::istringstream sz(line);
        if (!(sz >> nrows >> ncols >> nentries))
            throw std::runtime_error(path + ": malformed size line");
    }
    if (nrows != ncols)
        throw std::invalid_argument(path + ": matrix must be square, got " +
                                    std::to_string(nrows) + "x" + std::to_string(ncols));
    if (nrows < 0 || nentries < 0) throw std::runtime_error(path + ": malformed size line");

    std::vector<int> rows, cols;
    std::vector<double> vals;
    rows.reserve(2 * nentries);
    cols.reserve(2 * nentries);
    vals.reserve(2 * nentries);

    long seen = 0;
    while (seen < nentries && std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream es(line);
        long i1, j1;
        double v;
        if (!(es >> i1 >> j1 >> v))
            throw std::runtime_error(path + ": malformed entry '" + line + "'");
        ++seen;
        if (i1 < 1 || i1 > nrows || j1 < 1 || j1 > nrows)
            throw std::invalid_argument(path + ": entry index out of range (" +
                                        std::to_string(i1) + "," + std::to_string(j1) + ")");
        int i = static_cast<int>(i1 - 1), j = static_cast<int>(j1 - 1);
        rows.push_back(i);
        cols.push_back(j);
        vals.push_back(v);
        if (symmetric_header && i != j) {
            rows.push_back(j);
            cols.push_back(i);
            vals.push_back(v);
        }
    }
    if (seen < nentries)
        throw std::runtime_error(path + ": expected " + std::to_string(nentries) +
                                 " entries, found " + std::to_string(seen));

    try {
        return SparseSymMatrix::from_triplets(static_cast<int>(nrows), rows, cols, vals);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace probetrace
