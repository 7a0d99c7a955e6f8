#ifndef GOALCLUST_DATASET_HPP
#define GOALCLUST_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace goalclust {

using Index = Eigen::Index;

/**
 * Immutable n x m data matrix (rows are elements, columns are attributes).
 *
 * Per-attribute total sums of squares are computed once at construction, so a
 * Dataset can be shared read-only between concurrent solver runs.
 */
class Dataset {
public:
    /// Throws DataError unless n >= 2, m >= 1 and every entry is finite.
    explicit Dataset(Eigen::MatrixXd values, std::vector<std::string> attribute_names = {});

    Index n() const { return values_.rows(); }
    Index m() const { return values_.cols(); }

    const Eigen::MatrixXd& values() const { return values_; }
    auto row(Index i) const { return values_.row(i); }
    double operator()(Index i, Index j) const { return values_(i, j); }

    const std::vector<std::string>& attribute_names() const { return names_; }

    /// Column means of the stored values.
    const Eigen::VectorXd& mean() const { return mean_; }

    /// SST_j = sum_i (x_ij - mean_j)^2.
    const Eigen::VectorXd& sst_per_attribute() const { return sst_j_; }
    double sst_total() const { return sst_; }

    bool standardized() const { return standardized_; }
    /// Means and sample standard deviations of the raw columns; empty unless standardized.
    const Eigen::VectorXd& column_means() const { return column_means_; }
    const Eigen::VectorXd& column_sds() const { return column_sds_; }
    /// Columns that were constant at standardization time and were zeroed.
    const std::vector<Index>& degenerate_columns() const { return degenerate_; }
    /// Human-readable notes produced while building the dataset.
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    friend Dataset standardize(const Dataset& ds);

    Eigen::MatrixXd values_;
    std::vector<std::string> names_;
    Eigen::VectorXd mean_;
    Eigen::VectorXd sst_j_;
    double sst_ = 0.0;
    bool standardized_ = false;
    Eigen::VectorXd column_means_;
    Eigen::VectorXd column_sds_;
    std::vector<Index> degenerate_;
    std::vector<std::string> warnings_;
};

enum class Distribution { Normal01, UniformNeg1Pos1 };

struct InstanceSpec {
    Distribution distribution = Distribution::Normal01;
    Index n = 100;
    Index m = 3;
    std::uint64_t seed = 1;
};

/// Canonical instance name, N-<n>-<m> or U-<n>-<m>.
std::string instance_name(const InstanceSpec& spec);

/// Draws an i.i.d. matrix from the spec's distribution using mt19937_64 seeded by spec.seed.
Dataset generate(const InstanceSpec& spec);

/**
 * Z-scores every column with the sample standard deviation (n - 1 denominator).
 * Constant columns become all-zero and are listed in degenerate_columns().
 * Throws UsageError if already standardized, DataError if every column is constant.
 */
Dataset standardize(const Dataset& ds);

/// Reads comma-separated values. With has_header unset, a first row containing any
/// non-numeric cell is taken as a header.
Dataset read_csv(std::istream& in, std::optional<bool> has_header = std::nullopt);
Dataset load_csv(const std::filesystem::path& path, std::optional<bool> has_header = std::nullopt);

/// Writes with 17 significant digits so that load_csv recovers every entry.
void write_csv(std::ostream& out, const Dataset& ds);
void write_csv(const std::filesystem::path& path, const Dataset& ds);

} // namespace goalclust

#endif // GOALCLUST_DATASET_HPP
