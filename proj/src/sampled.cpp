#include "helix4/sampled.hpp"

#include <cmath>
#include <stdexcept>

namespace helix4 {

SampledFunction SampledFunction::trimmed(std::size_t trim) const {
    if (values.size() < 2 * trim + 1) throw std::invalid_argument("trim exceeds sample count");
    SampledFunction out;
    out.grid = grid.trimmed(trim);
    out.values.assign(values.begin() + static_cast<std::ptrdiff_t>(trim),
                      values.end() - static_cast<std::ptrdiff_t>(trim));
    return out;
}

SampledFunction zip(const SampledFunction& a, const SampledFunction& b,
                    const std::function<double(double, double)>& op) {
    if (!a.grid.same_as(b.grid)) throw std::invalid_argument("zip: grid mismatch");
    SampledFunction out;
    out.grid = a.grid;
    out.values.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = op(a[i], b[i]);
    return out;
}

SampledFunction map(const SampledFunction& a, const std::function<double(double)>& op) {
    SampledFunction out;
    out.grid = a.grid;
    out.values.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = op(a[i]);
    return out;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    long double acc = 0.0L;
    for (double x : v) acc += x;
    return static_cast<double>(acc / static_cast<long double>(v.size()));
}

double stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const long double mu = mean(v);
    long double acc = 0.0L;
    for (double x : v) {
        const long double d = static_cast<long double>(x) - mu;
        acc += d * d;
    }
    return static_cast<double>(std::sqrt(acc / static_cast<long double>(v.size())));
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

ConstancyStats constancy(const std::vector<double>& v) {
    ConstancyStats st;
    st.mean = mean(v);
    st.stddev = stddev(v);
    for (double x : v) st.max_dev = std::max(st.max_dev, std::fabs(x - st.mean));
    return st;
}

}  // namespace helix4
