#include "errfloat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace errfloat::exp {

namespace {

double map_scale(double v, HistScale scale) {
    return scale == HistScale::cubic ? std::cbrt(v) : v;
}
double unmap_scale(double v, HistScale scale) {
    return scale == HistScale::cubic ? v * v * v : v;
}

struct Moments {
    std::size_t n = 0;
    double mean = 0.0, stdev = 0.0, min = 0.0, max = 0.0;
};

Moments moments(const std::vector<double>& v) {
    Moments m;
    m.n = v.size();
    if (v.empty()) return m;
    double sum = 0.0;
    m.min = m.max = v[0];
    for (double x : v) {
        sum += x;
        m.min = std::min(m.min, x);
        m.max = std::max(m.max, x);
    }
    m.mean = sum / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - m.mean) * (x - m.mean);
    if (v.size() > 1) m.stdev = std::sqrt(ss / static_cast<double>(v.size() - 1));
    return m;
}

}  // namespace

Histogram histogram(const std::vector<double>& values, HistScale scale, int bins) {
    if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
    Histogram h;
    h.scale = scale;
    if (values.empty()) return h;

    double lo = map_scale(values[0], scale), hi = lo;
    for (double v : values) {
        double m = map_scale(v, scale);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    if (lo == hi) {  // degenerate range: one bin holding everything
        h.edges = {unmap_scale(lo, scale), unmap_scale(hi, scale)};
        h.counts = {values.size()};
        return h;
    }

    h.edges.resize(bins + 1);
    h.counts.assign(bins, 0);
    double width = (hi - lo) / bins;
    for (int i = 0; i <= bins; ++i) h.edges[i] = unmap_scale(lo + width * i, scale);
    for (double v : values) {
        int idx = static_cast<int>((map_scale(v, scale) - lo) / width);
        idx = std::clamp(idx, 0, bins - 1);
        ++h.counts[idx];
    }
    return h;
}

Proportion wilson_interval(std::size_t hits, std::size_t total, double z) {
    Proportion p;
    if (total == 0) return p;
    double n = static_cast<double>(total);
    double phat = static_cast<double>(hits) / n;
    p.estimate = phat;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = phat + z2 / (2.0 * n);
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    p.wilson_lo = std::max(0.0, (center - half) / denom);
    p.wilson_hi = std::min(1.0, (center + half) / denom);
    return p;
}

StatsSummary summarize(const std::vector<ProblemResult>& results,
                       const std::vector<double>& thresholds, const EEConfig& cfg) {
    if (results.empty()) throw std::invalid_argument("summarize: no results");
    constexpr int kHistBins = 41;

    StatsSummary s;
    s.cfg = cfg;
    s.total_problems = results.size();
    for (const auto& r : results) {
        if (r.failed) ++s.failed_problems;
        s.total_samples += r.samples.size();
    }

    for (double th : thresholds) {
        for (bool constrained : {true, false}) {
            BucketStats b;
            b.threshold = th;
            b.constrained = constrained;
            std::vector<double> ks, cs;
            for (const auto& r : results) {
                if (r.failed) continue;
                bool is_constrained = r.max_re_m < th;
                if (is_constrained != constrained) continue;
                ++b.n_problems;
                for (const auto& sample : r.samples) {
                    if (sample.k_infinite) {
                        ++b.k_infinite;
                        continue;
                    }
                    ks.push_back(sample.k);
                    cs.push_back(sample.c);
                    if (sample.k < cfg.k_min || sample.k > cfg.k_max) ++b.k_outside;
                    if (sample.c < cfg.c_min || sample.c > cfg.c_max) ++b.c_outside;
                }
            }
            b.n_samples = ks.size();
            Moments mk = moments(ks), mc = moments(cs);
            b.k_mean = mk.mean; b.k_stdev = mk.stdev; b.k_min = mk.min; b.k_max = mk.max;
            b.delta_k = mk.max - mk.min;
            b.c_mean = mc.mean; b.c_stdev = mc.stdev; b.c_min = mc.min; b.c_max = mc.max;
            b.delta_c = mc.max - mc.min;
            b.alpha = wilson_interval(b.k_outside, b.n_samples);
            b.beta = wilson_interval(b.c_outside, b.n_samples);
            b.k_hist = histogram(ks, HistScale::cubic, kHistBins);
            b.c_hist = histogram(cs, HistScale::cubic, kHistBins);
            s.buckets.push_back(std::move(b));
        }
    }

    // e = 0 subset and interval_k coverage at the run's own RTHD.
    double sum_abs_ee = 0.0;
    for (const auto& r : results) {
        if (r.failed) continue;
        bool constrained_here = r.max_re_m < cfg.rthd;
        for (const auto& sample : r.samples) {
            if (constrained_here && sample.e_exact.is_zero()) {
                ++s.zero_e_samples;
                double aee = std::abs(sample.ee.to_double());
                if (sample.ee.is_zero()) ++s.zero_e_zero_ee;
                sum_abs_ee += aee;
                s.zero_e_max_abs_ee = std::max(s.zero_e_max_abs_ee, aee);
            }
            if (constrained_here) {
                ++s.coverage_total;
                Fpe f{sample.x, sample.ee, sample.re_m};
                Interval iv = interval_k(f, cfg);
                if (iv.lo <= sample.true_value && sample.true_value <= iv.hi)
                    ++s.coverage_hits;
            }
        }
    }
    if (s.zero_e_samples > 0)
        s.zero_e_mean_abs_ee = sum_abs_ee / static_cast<double>(s.zero_e_samples);
    return s;
}

}  // namespace errfloat::exp
