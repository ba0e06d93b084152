#ifndef CORRIDORCAST_STATS_HPP
#define CORRIDORCAST_STATS_HPP

#include <span>
#include <string>
#include <vector>

namespace corridorcast::stats {

double mean(std::span<const double> values);
double variance_pop(std::span<const double> values);
double sd_pop(std::span<const double> values);

/// Linear-interpolation empirical quantile (the numpy default), q in [0,1].
double quantile(std::span<const double> values, double q);

/// Two-sided p-value of Student's t statistic with df degrees of freedom.
double students_t_p_two_sided(double t, double df);

struct CorrelationEntry {
    std::string feature_a;
    std::string feature_b;
    double rho = 0.0;
    double p_value = 1.0;
    bool significant = false;     // at alpha = 0.05
    bool zero_variance = false;   // rho undefined; never silently zero
};

inline constexpr double kSignificanceAlpha = 0.05;

/// Pearson correlation with the exact t-test p-value (df = n - 2).
/// Throws ZeroVariance when either input is constant, InvalidArgument when
/// lengths differ or n < 3.
CorrelationEntry pearson(std::span<const double> x, std::span<const double> y,
                         const std::string& name_a = "x", const std::string& name_b = "y");

/// Like pearson() but reports constant inputs via the zero_variance flag
/// instead of throwing.
CorrelationEntry pearson_or_flag(std::span<const double> x, std::span<const double> y,
                                 const std::string& name_a, const std::string& name_b);

}  // namespace corridorcast::stats

#endif
