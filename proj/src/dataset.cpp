#include "goalclust/dataset.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "goalclust/error.hpp"

namespace goalclust {

Dataset::Dataset(Eigen::MatrixXd values, std::vector<std::string> attribute_names)
    : values_(std::move(values)), names_(std::move(attribute_names)) {
    if (values_.rows() < 2) {
        throw DataError("dataset needs at least 2 elements, got " + std::to_string(values_.rows()));
    }
    if (values_.cols() < 1) {
        throw DataError("dataset needs at least 1 attribute");
    }
    if (!values_.allFinite()) {
        throw DataError("dataset contains non-finite entries");
    }
    if (!names_.empty() && static_cast<Index>(names_.size()) != values_.cols()) {
        throw DataError("attribute name count does not match column count");
    }
    mean_ = values_.colwise().mean().transpose();
    sst_j_ = (values_.rowwise() - mean_.transpose()).colwise().squaredNorm().transpose();
    sst_ = sst_j_.sum();
}

std::string instance_name(const InstanceSpec& spec) {
    const char prefix = spec.distribution == Distribution::Normal01 ? 'N' : 'U';
    return std::string(1, prefix) + "-" + std::to_string(spec.n) + "-" + std::to_string(spec.m);
}

Dataset generate(const InstanceSpec& spec) {
    if (spec.n < 2 || spec.m < 1) {
        throw UsageError("instance needs n >= 2 and m >= 1");
    }
    std::mt19937_64 rng(spec.seed);
    Eigen::MatrixXd values(spec.n, spec.m);
    if (spec.distribution == Distribution::Normal01) {
        std::normal_distribution<double> dist(0.0, 1.0);
        for (Index i = 0; i < spec.n; ++i)
            for (Index j = 0; j < spec.m; ++j) values(i, j) = dist(rng);
    } else {
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (Index i = 0; i < spec.n; ++i)
            for (Index j = 0; j < spec.m; ++j) values(i, j) = dist(rng);
    }
    return Dataset(std::move(values));
}

Dataset standardize(const Dataset& ds) {
    if (ds.standardized()) {
        throw UsageError("dataset is already standardized");
    }
    const Index n = ds.n();
    const Index m = ds.m();
    Eigen::MatrixXd z(n, m);
    Eigen::VectorXd means(m);
    Eigen::VectorXd sds(m);
    std::vector<Index> degenerate;
    for (Index j = 0; j < m; ++j) {
        const auto col = ds.values().col(j);
        means(j) = col.mean();
        if ((col.array() == col(0)).all()) {
            sds(j) = 0.0;
            z.col(j).setZero();
            degenerate.push_back(j);
            continue;
        }
        sds(j) = std::sqrt((col.array() - means(j)).square().sum() / static_cast<double>(n - 1));
        z.col(j) = (col.array() - means(j)) / sds(j);
    }
    if (static_cast<Index>(degenerate.size()) == m) {
        throw DataError("every column is constant; the dataset has no variability");
    }
    Dataset out(std::move(z), ds.attribute_names());
    out.standardized_ = true;
    out.column_means_ = std::move(means);
    out.column_sds_ = std::move(sds);
    for (Index j : degenerate) {
        const std::string label = ds.attribute_names().empty() ? "column " + std::to_string(j + 1)
                                                               : "column '" + ds.attribute_names()[static_cast<std::size_t>(j)] + "'";
        out.warnings_.push_back(label + " is constant and was set to zero");
    }
    out.degenerate_ = std::move(degenerate);
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::optional<double> parse_number(std::string_view cell) {
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) return std::nullopt;
    return value;
}

} // namespace

Dataset read_csv(std::istream& in, std::optional<bool> has_header) {
    std::vector<std::string> names;
    std::vector<double> flat;
    Index cols = -1;
    Index rows = 0;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_cells(line);
        if (first) {
            first = false;
            bool header = has_header.value_or(false);
            if (!has_header) {
                for (auto c : cells) header = header || !parse_number(c);
            }
            if (header) {
                for (auto c : cells) names.emplace_back(c);
                cols = static_cast<Index>(cells.size());
                continue;
            }
        }
        if (cols < 0) cols = static_cast<Index>(cells.size());
        if (static_cast<Index>(cells.size()) != cols) {
            throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                            " columns, found " + std::to_string(cells.size()));
        }
        for (auto c : cells) {
            const auto v = parse_number(c);
            if (!v) throw DataError("line " + std::to_string(line_no) + ": non-numeric cell '" + std::string(c) + "'");
            if (!std::isfinite(*v)) throw DataError("line " + std::to_string(line_no) + ": non-finite cell");
            flat.push_back(*v);
        }
        ++rows;
    }
    if (in.bad()) throw DataError("read failure");
    if (rows < 2) throw DataError("dataset needs at least 2 data rows, found " + std::to_string(rows));
    Eigen::MatrixXd values = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(flat.data(), rows, cols);
    return Dataset(std::move(values), std::move(names));
}

Dataset load_csv(const std::filesystem::path& path, std::optional<bool> has_header) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    return read_csv(in, has_header);
}

void write_csv(std::ostream& out, const Dataset& ds) {
    const auto& names = ds.attribute_names();
    if (!names.empty()) {
        for (std::size_t j = 0; j < names.size(); ++j) out << (j ? "," : "") << names[j];
        out << '\n';
    }
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (Index i = 0; i < ds.n(); ++i) {
        for (Index j = 0; j < ds.m(); ++j) out << (j ? "," : "") << ds(i, j);
        out << '\n';
    }
}

void write_csv(const std::filesystem::path& path, const Dataset& ds) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    write_csv(out, ds);
    if (!out) throw DataError("write failure on " + path.string());
}

} // namespace goalclust
