#include "juntalab/fn_handle.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace juntalab {

namespace {

double wrap01(double x) {
    double w = x - std::floor(x);
    return w < 1.0 ? w : 0.0;
}

int cell_index(double x, int m, Domain domain) {
    if (domain == Domain::Torus) x = wrap01(x);
    int c = static_cast<int>(std::floor(x * m));
    if (c < 0) c = 0;
    if (c >= m) c = m - 1;
    return c;
}

}  // namespace

FnHandle::FnHandle(int dim, Domain domain, Eval eval, Grad grad)
    : dim_(dim), domain_(domain), eval_(std::move(eval)), grad_(std::move(grad)) {
    require(dim >= 1, "FnHandle: dimension must be >= 1");
    require(static_cast<bool>(eval_), "FnHandle: evaluator must be callable");
}

void FnHandle::gradient(std::span<const double> x, std::span<double> out) const {
    require(has_gradient(), "FnHandle: no gradient evaluator attached");
    grad_(x, out);
}

FnHandle FnHandle::from_poly(TrigPoly f) {
    const int dim = f.dim();
    auto ev = std::make_shared<TrigPolyEvaluator>(f);
    return FnHandle(
        dim, Domain::Torus,
        [ev](std::span<const double> x) { return ev->eval(x); },
        [ev](std::span<const double> x, std::span<double> g) { ev->eval_gradient(x, g); });
}

double tent_map(double theta) {
    const double w = wrap01(theta);
    return w < 0.5 ? 2.0 * w : 2.0 - 2.0 * w;
}

FnHandle tent_transfer(const FnHandle& h) {
    require(h.domain() == Domain::Cube, "tent_transfer: input must live on the cube");
    const int dim = h.dim();
    auto inner = std::make_shared<FnHandle>(h);
    FnHandle::Eval eval = [inner, dim](std::span<const double> x) {
        std::vector<double> u(dim);
        for (int j = 0; j < dim; ++j) u[j] = tent_map(x[j]);
        return (*inner)(u);
    };
    FnHandle::Grad grad;
    if (h.has_gradient()) {
        grad = [inner, dim](std::span<const double> x, std::span<double> out) {
            std::vector<double> u(dim), slope(dim);
            for (int j = 0; j < dim; ++j) {
                const double w = wrap01(x[j]);
                u[j] = tent_map(w);
                slope[j] = w < 0.5 ? 2.0 : -2.0;
            }
            inner->gradient(u, out);
            for (int j = 0; j < dim; ++j) out[j] *= slope[j];
        };
    }
    return FnHandle(dim, Domain::Torus, std::move(eval), std::move(grad));
}

FnHandle make_grid_junta(int dim, Domain domain, const CoordSet& S, int points_per_axis,
                         std::shared_ptr<const std::vector<double>> table) {
    require(S.dim() == dim, "make_grid_junta: coordinate set dimension mismatch");
    require(points_per_axis >= 1, "make_grid_junta: grid must have >= 1 point per axis");
    std::size_t expect = 1;
    for (int i = 0; i < S.size(); ++i) expect *= static_cast<std::size_t>(points_per_axis);
    require(table && table->size() == expect, "make_grid_junta: table size mismatch");
    std::vector<int> sc = S.coords();
    const int m = points_per_axis;
    return FnHandle(dim, domain, [table, sc, m, domain](std::span<const double> x) {
        std::size_t idx = 0;
        for (int c : sc) idx = idx * m + cell_index(x[c], m, domain);
        return (*table)[idx];
    });
}

void write_grid_csv(const std::string& path, const FnHandle& h, int points_per_axis) {
    require(points_per_axis >= 1, "write_grid_csv: grid must have >= 1 point per axis");
    std::ofstream out(path);
    require(out.good(), "write_grid_csv: cannot open " + path);
    const int dim = h.dim();
    const int m = points_per_axis;
    for (int j = 0; j < dim; ++j) out << 'x' << (j + 1) << ',';
    out << "value\n";
    std::vector<int> digit(dim, 0);
    std::vector<double> x(dim);
    char buf[64];
    while (true) {
        for (int j = 0; j < dim; ++j) x[j] = (digit[j] + 0.5) / m;
        for (int j = 0; j < dim; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", x[j]);
            out << buf << ',';
        }
        std::snprintf(buf, sizeof(buf), "%.17g", h(x));
        out << buf << '\n';
        int j = dim - 1;
        while (j >= 0 && ++digit[j] == m) digit[j--] = 0;
        if (j < 0) break;
    }
    require(out.good(), "write_grid_csv: write failed for " + path);
}

FnHandle read_grid_csv(const std::string& path, Domain domain) {
    std::ifstream in(path);
    require(in.good(), "read_grid_csv: cannot open " + path);
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "read_grid_csv: empty file");
    int dim = 0;
    for (char c : line)
        if (c == ',') ++dim;
    require(dim >= 1, "read_grid_csv: header must list coordinates and a value column");

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        require(static_cast<int>(row.size()) == dim + 1, "read_grid_csv: malformed row");
        rows.push_back(std::move(row));
    }
    require(!rows.empty(), "read_grid_csv: no data rows");
    const double mf = std::pow(static_cast<double>(rows.size()), 1.0 / dim);
    const int m = static_cast<int>(std::llround(mf));
    std::size_t expect = 1;
    for (int j = 0; j < dim; ++j) expect *= static_cast<std::size_t>(m);
    require(expect == rows.size(), "read_grid_csv: row count is not a full grid");

    auto table = std::make_shared<std::vector<double>>(rows.size());
    for (const auto& row : rows) {
        std::size_t idx = 0;
        for (int j = 0; j < dim; ++j) {
            const int d = static_cast<int>(std::llround(row[j] * m - 0.5));
            require(d >= 0 && d < m, "read_grid_csv: node coordinate off the grid");
            idx = idx * m + d;
        }
        (*table)[idx] = row[dim];
    }
    return make_grid_junta(dim, domain, CoordSet::full(dim), m, table);
}

}  // namespace juntalab
