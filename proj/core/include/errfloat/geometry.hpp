#pragma once

#include "errfloat/fpe.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace errfloat::geom {

class DegeneratePentagon : public std::runtime_error {
public:
    explicit DegeneratePentagon(const std::string& what) : std::runtime_error(what) {}
};

template <class V>
struct Point2 {
    V x, y;
};

/// Coefficients of a*x + b*y + c = 0.
template <class V>
struct Line2 {
    V a, b, c;
};

/// Ordered counterclockwise.
template <class V>
using Pentagon = std::array<Point2<V>, 5>;

/// How an fpe determinant is declared parallel: `interval` treats an
/// uncertain sign (0 inside the confidence interval) as parallel; `exact`
/// only fails on a determinant that is exactly zero, letting uncertain
/// intersections proceed with their (possibly large) tracked error.
enum class ParallelTest { interval, exact };

/// Backend running over fpe arithmetic; by default parallelism is decided
/// by testing whether 0 lies in the confidence interval of the determinant.
class FpeBackend {
public:
    using Value = Fpe;

    explicit FpeBackend(FpeContext& ctx, IntervalMode mode = IntervalMode::k,
                        ParallelTest test = ParallelTest::interval)
        : ctx_(&ctx), mode_(mode), test_(test) {}

    Value add(const Value& a, const Value& b) { return ctx_->add(a, b); }
    Value sub(const Value& a, const Value& b) { return ctx_->sub(a, b); }
    Value mul(const Value& a, const Value& b) { return ctx_->mul(a, b); }
    Value div(const Value& a, const Value& b) { return ctx_->div(a, b); }
    Value neg(const Value& a) { return ctx_->negate(a); }
    bool is_parallel_determinant(const Value& d) const {
        if (test_ == ParallelTest::exact) return d.x.is_zero();
        return contains_zero(d, ctx_->config(), mode_);
    }

private:
    FpeContext* ctx_;
    IntervalMode mode_;
    ParallelTest test_;
};

/// Plain parametric-precision backend, used as the high-precision truth
/// path. Parallelism requires an exactly zero determinant.
class PlainBackend {
public:
    using Value = softfp::PFloat;

    explicit PlainBackend(int precision) : prec_(precision) {}

    int precision() const { return prec_; }
    Value literal(const std::string& text) const {
        return softfp::from_decimal(text, prec_, prec_).x;
    }
    Value add(const Value& a, const Value& b) { return rounded(a, b, softfp::Op::add); }
    Value sub(const Value& a, const Value& b) { return rounded(a, b, softfp::Op::sub); }
    Value mul(const Value& a, const Value& b) { return rounded(a, b, softfp::Op::mul); }
    Value div(const Value& a, const Value& b) { return rounded(a, b, softfp::Op::div); }
    Value neg(const Value& a) { return a.negated(); }
    bool is_parallel_determinant(const Value& d) const { return d.is_zero(); }

private:
    Value rounded(const Value& a, const Value& b, softfp::Op op) {
        return softfp::round_split(softfp::exact_op(a, b, op)).z;
    }
    int prec_;
};

template <class G>
Line2<typename G::Value> line_through(G& g, const Point2<typename G::Value>& p,
                                      const Point2<typename G::Value>& q) {
    auto a = g.sub(q.y, p.y);
    auto b = g.sub(p.x, q.x);
    auto c = g.neg(g.add(g.mul(a, p.x), g.mul(b, p.y)));
    return {a, b, c};
}

/// Cramer solve; nullopt means the determinant's confidence interval
/// contains 0 (parallel or coincident lines).
template <class G>
std::optional<Point2<typename G::Value>> intersect(G& g, const Line2<typename G::Value>& l1,
                                                   const Line2<typename G::Value>& l2) {
    auto det = g.sub(g.mul(l1.a, l2.b), g.mul(l2.a, l1.b));
    if (g.is_parallel_determinant(det)) return std::nullopt;
    auto x = g.div(g.sub(g.mul(l1.b, l2.c), g.mul(l2.b, l1.c)), det);
    auto y = g.div(g.sub(g.mul(l1.c, l2.a), g.mul(l2.c, l1.a)), det);
    return Point2<typename G::Value>{x, y};
}

/// Inner pentagon: vertex i is the intersection of diagonals
/// (v_{i+4}, v_{i+1}) and (v_i, v_{i+2}), indices mod 5.
template <class G>
Pentagon<typename G::Value> pent_in(G& g, const Pentagon<typename G::Value>& p) {
    Pentagon<typename G::Value> r;
    for (int i = 0; i < 5; ++i) {
        auto d1 = line_through(g, p[(i + 4) % 5], p[(i + 1) % 5]);
        auto d2 = line_through(g, p[i], p[(i + 2) % 5]);
        auto v = intersect(g, d1, d2);
        if (!v) throw DegeneratePentagon("parallel diagonals in pent_in");
        r[i] = *v;
    }
    return r;
}

/// Outer pentagon: vertex i is the intersection of the extended sides
/// (v_{i+3}, v_{i+4}) and (v_i, v_{i+1}). This pairing makes
/// pent_out(pent_in(P)) = P vertex-for-vertex in exact arithmetic.
template <class G>
Pentagon<typename G::Value> pent_out(G& g, const Pentagon<typename G::Value>& p) {
    Pentagon<typename G::Value> r;
    for (int i = 0; i < 5; ++i) {
        auto s1 = line_through(g, p[(i + 3) % 5], p[(i + 4) % 5]);
        auto s2 = line_through(g, p[i], p[(i + 1) % 5]);
        auto v = intersect(g, s1, s2);
        if (!v) throw DegeneratePentagon("parallel sides in pent_out");
        r[i] = *v;
    }
    return r;
}

/// in^n followed by out^n.
template <class G>
Pentagon<typename G::Value> iterate(G& g, Pentagon<typename G::Value> p, int depth) {
    if (depth < 1) throw std::invalid_argument("iterate: depth must be >= 1");
    for (int i = 0; i < depth; ++i) p = pent_in(g, p);
    for (int i = 0; i < depth; ++i) p = pent_out(g, p);
    return p;
}

using FpePoint = Point2<Fpe>;
using FpePentagon = Pentagon<Fpe>;
using PlainPoint = Point2<softfp::PFloat>;
using PlainPentagon = Pentagon<softfp::PFloat>;

}  // namespace errfloat::geom
