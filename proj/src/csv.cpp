#include "hidtreat/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "hidtreat/errors.hpp"

namespace hidtreat {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, int row, int col) {
    const std::string s = strip(raw);
    double v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e)
        throw ParseError("non-numeric cell at row " + std::to_string(row) + ", column " +
                         std::to_string(col) + ": '" + s + "'");
    return v;
}

} // namespace

ObservedDataset load_csv(const std::string& path, OutcomeKind outcome, int k) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty file: " + path);
    auto header = split_line(line);
    if (header.size() < 3 || strip(header[0]) != "y" || strip(header[1]) != "a" ||
        strip(header[2]) != "z")
        throw ParseError("header must be y,a,z,x1,...,xd");
    const int d = static_cast<int>(header.size()) - 3;
    for (int j = 0; j < d; ++j) {
        if (strip(header[3 + j]) != "x" + std::to_string(j + 1))
            throw ParseError("covariate columns must be named x1..xd in order");
    }

    std::vector<double> ys, as, zs;
    std::vector<double> xs;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (strip(line).empty()) continue;
        auto cells = split_line(line);
        if (static_cast<int>(cells.size()) != d + 3)
            throw ParseError("row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(d + 3));
        ys.push_back(parse_cell(cells[0], row, 0));
        as.push_back(parse_cell(cells[1], row, 1));
        zs.push_back(parse_cell(cells[2], row, 2));
        for (int j = 0; j < d; ++j) xs.push_back(parse_cell(cells[3 + j], row, 3 + j));
    }
    const auto n = static_cast<Eigen::Index>(ys.size());
    if (n == 0) throw ValidationError("no data rows in " + path);

    ObservedDataset ds;
    ds.y = Eigen::Map<Eigen::VectorXd>(ys.data(), n);
    ds.a = Eigen::Map<Eigen::VectorXd>(as.data(), n);
    ds.z = Eigen::Map<Eigen::VectorXd>(zs.data(), n);
    ds.x.resize(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) ds.x(i, j) = xs[static_cast<size_t>(i) * d + j];
    ds.outcome = outcome;
    ds.k = (outcome == OutcomeKind::Categorical) ? k : 2;
    ds.validate();
    return ds;
}

void save_csv(const std::string& path, const ObservedDataset& ds) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << "y,a,z";
    for (int j = 0; j < ds.dim(); ++j) out << ",x" << (j + 1);
    out << "\n";
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf;
    };
    for (Eigen::Index i = 0; i < ds.n(); ++i) {
        put(ds.y[i]);
        out << ',';
        put(ds.a[i]);
        out << ',';
        put(ds.z[i]);
        for (int j = 0; j < ds.dim(); ++j) {
            out << ',';
            put(ds.x(i, j));
        }
        out << "\n";
    }
}

} // namespace hidtreat
