// Acceptance gate: each numbered criterion prints one PASS/FAIL line with the
// measured quantities; the process exits nonzero if any criterion fails.

#include "errfloat/report.hpp"
#include "kernel_oracle.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace errfloat;
using namespace errfloat::softfp;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-28s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double v) { return exp::format_double(v); }

// ---------------------------------------------------------------- 1

bool kernel_case(const oracle::Num& a, const oracle::Num& b, Op op, long& bad) {
    oracle::Wide w;
    switch (op) {
        case Op::add: w = oracle::op_addsub(a, b, false); break;
        case Op::sub: w = oracle::op_addsub(a, b, true); break;
        case Op::mul: w = oracle::op_mul(a, b); break;
        case Op::div: w = oracle::op_div(a, b); break;
    }
    Accumulator acc = exact_op(oracle::to_pfloat(a), oracle::to_pfloat(b), op);
    oracle::Split want = oracle::round_split(w);
    RoundSplit got = round_split(acc);
    bool ok = oracle::matches(w, acc) && oracle::matches(want.z, got.z) &&
              oracle::matches(want.le, got.le);
    if (!ok) ++bad;
    return ok;
}

void criterion_1() {
    auto t0 = Clock::now();
    long cases = 0, bad = 0;
    for (Op op : {Op::add, Op::sub, Op::mul})
        for (std::uint64_t sa = 32; sa < 64; ++sa)
            for (std::uint64_t sb = 32; sb < 64; ++sb)
                for (long eb = -14; eb <= 14; ++eb)
                    for (int signs = 0; signs < 4; ++signs) {
                        oracle::Num a{signs & 1 ? -1 : 1, 0, sa, 6};
                        oracle::Num b{signs & 2 ? -1 : 1, eb, sb, 6};
                        kernel_case(a, b, op, bad);
                        ++cases;
                    }

    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::uint64_t> sig(128, 255);
    std::uniform_int_distribution<long> exp8(-30, 30);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 100000; ++i) {
        oracle::Num a{coin(rng) ? -1 : 1, exp8(rng), sig(rng), 8};
        oracle::Num b{coin(rng) ? -1 : 1, exp8(rng), sig(rng), 8};
        kernel_case(a, b, Op::div, bad);
        ++cases;

        oracle::Num c{1, exp8(rng), sig(rng), 8};
        oracle::Wide w = oracle::op_sqrt(c);
        Accumulator acc = sqrt_exact(oracle::to_pfloat(c));
        oracle::Split want = oracle::round_split(w);
        RoundSplit got = round_split(acc);
        if (!(oracle::matches(w, acc) && oracle::matches(want.z, got.z) &&
              oracle::matches(want.le, got.le)))
            ++bad;
        ++cases;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(1, "kernel oracle equivalence", bad == 0 && secs < 60.0,
           std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches, " +
               fmt(secs) + "s");
}

// ---------------------------------------------------------------- 2

void criterion_2() {
    EEConfig cfg;
    cfg.t_bits = 8;
    cfg.te_bits = 8;
    FpeContext ctx(cfg);
    std::mt19937_64 rng(888);
    std::uniform_int_distribution<std::uint64_t> sig(128, 255);
    std::uniform_int_distribution<long> xexp(-4, 4);
    std::uniform_int_distribution<long> eexp(-20, -12);
    std::uniform_int_distribution<int> coin(0, 1);
    long checked = 0, bad = 0;
    for (int i = 0; i < 100000; ++i) {
        auto num = [&](long e) {
            return PFloat::from_parts(coin(rng) ? -1 : 1, e, BigInt(sig(rng)), 8);
        };
        Fpe a{num(xexp(rng)), num(eexp(rng)), 0.0};
        Fpe b{num(xexp(rng)), num(eexp(rng)), 0.0};
        bool subtract = coin(rng);
        Fpe c = subtract ? ctx.sub(a, b) : ctx.add(a, b);

        auto w = exact_op(a.x, b.x, subtract ? Op::sub : Op::add);
        Dyadic le = round_split(w).le.to_dyadic();
        Dyadic pe = subtract ? a.ee.to_dyadic() - b.ee.to_dyadic()
                             : a.ee.to_dyadic() + b.ee.to_dyadic();
        Dyadic want = pe + le;
        long bits = want.is_zero()
                        ? 0
                        : static_cast<long>(boost::multiprecision::msb(
                              boost::multiprecision::abs(want.mantissa()))) + 1;
        if (bits > cfg.te_bits) continue;
        ++checked;
        if (!(c.ee.to_dyadic() == want)) ++bad;
    }
    report(2, "add/sub error-path exactness", bad == 0 && checked > 1000,
           std::to_string(checked) + " representable cases, " + std::to_string(bad) +
               " mismatches");
}

// ---------------------------------------------------------------- 3

void criterion_3() {
    std::mt19937_64 rng(999);
    geom::PlainBackend g(124);
    const double tol = std::ldexp(1.0, -93) * 8;
    double worst = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
        auto lits = testutil::random_convex_pentagon(rng);
        geom::PlainPentagon p;
        for (int i = 0; i < 5; ++i)
            p[i] = {g.literal(lits[2 * i]), g.literal(lits[2 * i + 1])};
        geom::PlainPentagon rt = geom::pent_out(g, geom::pent_in(g, p));
        for (int i = 0; i < 5; ++i) {
            worst = std::max(worst,
                             std::abs((rt[i].x.to_dyadic() - p[i].x.to_dyadic()).to_double()));
            worst = std::max(worst,
                             std::abs((rt[i].y.to_dyadic() - p[i].y.to_dyadic()).to_double()));
        }
    }
    report(3, "pentagon round trip (exact)", worst < tol,
           "100 pentagons, worst |out(in(P)) - P| = " + fmt(worst) + " < " + fmt(tol));
}

// ---------------------------------------------------------------- 4-9

struct RunData {
    EEConfig cfg;
    std::vector<exp::ProblemResult> results;
};

std::vector<double> constrained_values(const RunData& run, double threshold, bool take_c,
                                       bool constrained, std::size_t* infinite = nullptr) {
    std::vector<double> out;
    for (const auto& r : run.results) {
        if (r.failed) continue;
        if ((r.max_re_m < threshold) != constrained) continue;
        for (const auto& s : r.samples) {
            if (s.k_infinite) {
                if (infinite) ++*infinite;
                continue;
            }
            out.push_back(take_c ? s.c : s.k);
        }
    }
    return out;
}

double fraction_in(const std::vector<double>& v, double lo, double hi) {
    if (v.empty()) return 1.0;
    std::size_t in = 0;
    for (double x : v)
        if (x >= lo && x <= hi) ++in;
    return static_cast<double>(in) / static_cast<double>(v.size());
}

double stdev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

void criteria_4_to_9(const RunData& run) {
    const EEConfig& cfg = run.cfg;

    {  // 4: typical case at RTHD = 1e-3
        std::size_t inf = 0;
        auto ks = constrained_values(run, 1e-3, false, true, &inf);
        std::size_t outside = inf;
        for (double k : ks)
            if (k < cfg.k_min || k > cfg.k_max) ++outside;
        double alpha = ks.empty() ? 0.0
                                  : static_cast<double>(outside) /
                                        static_cast<double>(ks.size() + inf);
        double frac = fraction_in(ks, -0.2, 2.4);
        report(4, "typical-case statistics",
               !ks.empty() && alpha <= 0.02 && frac >= 0.99,
               "n=" + std::to_string(ks.size()) + " alpha=" + fmt(alpha) +
                   " frac(k in [-0.2,2.4])=" + fmt(frac));
    }
    {  // 5: strong-constraint regime at RTHD = 1e-4
        auto ks = constrained_values(run, 1e-4, false, true);
        double frac = fraction_in(ks, -0.1, 2.1);
        report(5, "strong-constraint regime", !ks.empty() && frac >= 0.999,
               "n=" + std::to_string(ks.size()) + " frac(k in [-0.1,2.1])=" + fmt(frac));
    }
    {  // 6: ill-conditioned contrast at RTHD = 1e-3
        auto ill = constrained_values(run, 1e-3, false, false);
        auto good = constrained_values(run, 1e-3, false, true);
        double big = 0.0;
        for (double k : ill) big = std::max(big, std::abs(k));
        double s_ill = stdev(ill), s_good = stdev(good);
        report(6, "ill-conditioned contrast",
               big > 10.0 && s_good > 0.0 && s_ill >= 10.0 * s_good,
               "max|k|=" + fmt(big) + " stdev ill/good=" + fmt(s_ill) + "/" + fmt(s_good));
    }
    {  // 7: exact-result bound over the constrained bucket
        std::size_t n = 0, over = 0;
        double sum = 0.0, maxabs = 0.0;
        for (const auto& r : run.results) {
            if (r.failed || r.max_re_m >= cfg.rthd) continue;
            for (const auto& s : r.samples) {
                if (!s.e_exact.is_zero()) continue;
                ++n;
                double aee = std::abs(s.ee.to_double());
                sum += aee;
                maxabs = std::max(maxabs, aee);
                if (aee >= cfg.eps()) ++over;
            }
        }
        double mean = n ? sum / static_cast<double>(n) : 0.0;
        report(7, "exact-result bound",
               n > 0 && over == 0 && mean < 0.2 * cfg.eps(),
               "n=" + std::to_string(n) + " max|ee|/EPS=" + fmt(maxabs / cfg.eps()) +
                   " mean|ee|/EPS=" + fmt(mean / cfg.eps()));
    }
    {  // 8: interval coverage for constrained samples
        std::size_t total = 0, hits = 0;
        for (const auto& r : run.results) {
            if (r.failed || r.max_re_m >= cfg.rthd) continue;
            for (const auto& s : r.samples) {
                ++total;
                Interval iv = interval_k(Fpe{s.x, s.ee, s.re_m}, cfg);
                if (iv.lo <= s.true_value && s.true_value <= iv.hi) ++hits;
            }
        }
        double cov = total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0;
        report(8, "interval coverage", total > 0 && cov >= 0.98,
               std::to_string(hits) + "/" + std::to_string(total) +
                   " coverage=" + fmt(cov));
    }
    {  // 9: c-compactness on the constrained bucket
        auto ks = constrained_values(run, 1e-3, false, true);
        auto cs = constrained_values(run, 1e-3, true, true);
        auto delta = [](const std::vector<double>& v) {
            double lo = v[0], hi = v[0];
            for (double x : v) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
            return hi - lo;
        };
        double dk = ks.empty() ? 0.0 : delta(ks);
        double dc = cs.empty() ? 0.0 : delta(cs);
        double frac = fraction_in(cs, -0.2, 1.8);
        report(9, "c-compactness", !cs.empty() && dc <= dk && frac >= 0.99,
               "delta_c=" + fmt(dc) + " delta_k=" + fmt(dk) +
                   " frac(c in [-0.2,1.8])=" + fmt(frac));
    }
}

// ---------------------------------------------------------------- 10

void criterion_10() {
    EEConfig cfg;
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::uniform_int_distribution<int> coin(0, 1);
    auto pfv = [&](double v, int bits) {
        return PFloat::from_dyadic(Dyadic::from_double(v), bits);
    };
    long bad = 0, n = 0;
    auto check = [&](const PFloat& x, const PFloat& ee, double expect) {
        ++n;
        double got = rel_err(x, ee, cfg);
        double tol = 1e-12 * std::max(1.0, std::abs(expect));
        if (std::abs(got - expect) > tol) ++bad;
    };
    for (int i = 0; i < 2000; ++i) {
        int sx = coin(rng) ? 1 : -1, se = coin(rng) ? 1 : -1;
        // case 1: |x| >> 0 -> |ee/x|
        {
            PFloat x = pfv(sx * u(rng), cfg.t_bits);
            PFloat ee = pfv(se * u(rng) * 1e-7, cfg.te_bits);
            check(x, ee, std::abs(ee.to_double() / x.to_double()));
        }
        // case 2: x = 0, true value 0 -> 0 or |ee|/EEZ
        {
            check(PFloat::zero(cfg.t_bits), PFloat::zero(cfg.te_bits), 0.0);
            PFloat ee = pfv(se * u(rng) * 1e-10, cfg.te_bits);
            check(PFloat::zero(cfg.t_bits), ee, std::abs(ee.to_double()) / cfg.eez);
        }
        // case 3: symmetric near-cancellation -> |x+ee|/EEZ
        {
            PFloat x = pfv(sx * u(rng) * 1e-8, cfg.t_bits);
            PFloat ee = pfv(-x.to_double() * (1.0 + std::ldexp(u(rng), -15)), cfg.te_bits);
            check(x, ee,
                  std::abs((x.to_dyadic() + ee.to_dyadic()).to_double()) / cfg.eez);
        }
        // case 4: x near 0 but the true value is nonzero -> |ee/x|
        {
            PFloat x = pfv(sx * u(rng) * 1e-7, cfg.t_bits);
            PFloat ee = pfv(se * u(rng) * 1e-13, cfg.te_bits);
            check(x, ee, std::abs(ee.to_double() / x.to_double()));
        }
        // case 5: x = 0, true value nonzero -> |ee|/EEZ
        {
            PFloat ee = pfv(se * u(rng) * 1e-8, cfg.te_bits);
            check(PFloat::zero(cfg.t_bits), ee, std::abs(ee.to_double()) / cfg.eez);
        }
    }
    report(10, "rel_err case equivalence", bad == 0,
           std::to_string(n) + " instances, " + std::to_string(bad) + " mismatches");
}

// ---------------------------------------------------------------- 11

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion_11() {
    EEConfig cfg;
    auto specs = exp::gen_test_set(7, 5);
    std::string csv[2], json[2];
    for (int pass = 0; pass < 2; ++pass) {
        auto results = exp::run_experiment(specs, cfg, 4);
        auto summary = exp::summarize(results, exp::default_thresholds(), cfg);
        std::string cp = "acceptance_det_" + std::to_string(pass) + ".csv";
        std::string jp = "acceptance_det_" + std::to_string(pass) + ".json";
        exp::write_samples_csv(cp, results);
        exp::write_json(jp, exp::summary_to_json(summary));
        csv[pass] = slurp(cp);
        json[pass] = slurp(jp);
        std::remove(cp.c_str());
        std::remove(jp.c_str());
    }
    report(11, "determinism", !csv[0].empty() && csv[0] == csv[1] && json[0] == json[1],
           std::to_string(csv[0].size()) + " CSV bytes, " + std::to_string(json[0].size()) +
               " JSON bytes compared");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();

    auto t0 = Clock::now();
    RunData run;
    run.results = exp::run_experiment(exp::gen_test_set(20260823u, 100), run.cfg);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("       (default 900-problem run: %.1fs)\n", secs);
    if (secs >= 300.0) {
        report(4, "typical-case statistics", false, "run exceeded the 5 min budget");
        return 1;
    }
    criteria_4_to_9(run);

    criterion_10();
    criterion_11();

    std::printf("%d of 11 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
