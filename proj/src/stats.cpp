#include "corridorcast/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

#include "corridorcast/errors.hpp"

namespace corridorcast::stats {

double mean(std::span<const double> values) {
    if (values.empty()) throw Error(ErrorCode::InvalidArgument, "mean of empty range");
    double total = 0.0;
    for (double v : values) total += v;
    return total / static_cast<double>(values.size());
}

double variance_pop(std::span<const double> values) {
    const double mu = mean(values);
    double total = 0.0;
    for (double v : values) total += (v - mu) * (v - mu);
    return total / static_cast<double>(values.size());
}

double sd_pop(std::span<const double> values) { return std::sqrt(variance_pop(values)); }

double quantile(std::span<const double> values, double q) {
    if (values.empty()) throw Error(ErrorCode::InvalidArgument, "quantile of empty range");
    if (q < 0.0 || q > 1.0) throw Error(ErrorCode::InvalidArgument, "quantile q outside [0,1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = q * static_cast<double>(sorted.size() - 1);
    const size_t lo = static_cast<size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double students_t_p_two_sided(double t, double df) {
    if (df <= 0.0) throw Error(ErrorCode::InvalidArgument, "t-test needs df > 0");
    if (!std::isfinite(t)) return 0.0;
    boost::math::students_t dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

CorrelationEntry pearson(std::span<const double> x, std::span<const double> y,
                         const std::string& name_a, const std::string& name_b) {
    if (x.size() != y.size())
        throw Error(ErrorCode::InvalidArgument, "pearson inputs differ in length");
    const size_t n = x.size();
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "pearson needs n >= 3");

    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw Error(ErrorCode::ZeroVariance,
                    "correlation undefined for constant input (" + name_a + ", " + name_b + ")");

    CorrelationEntry entry;
    entry.feature_a = name_a;
    entry.feature_b = name_b;
    entry.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    const double df = static_cast<double>(n - 2);
    const double denom = 1.0 - entry.rho * entry.rho;
    const double t = denom <= 0.0 ? std::numeric_limits<double>::infinity()
                                  : entry.rho * std::sqrt(df / denom);
    entry.p_value = students_t_p_two_sided(t, df);
    entry.significant = entry.p_value < kSignificanceAlpha;
    return entry;
}

CorrelationEntry pearson_or_flag(std::span<const double> x, std::span<const double> y,
                                 const std::string& name_a, const std::string& name_b) {
    try {
        return pearson(x, y, name_a, name_b);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroVariance) throw;
        CorrelationEntry entry;
        entry.feature_a = name_a;
        entry.feature_b = name_b;
        entry.zero_variance = true;
        return entry;
    }
}

}  // namespace corridorcast::stats
