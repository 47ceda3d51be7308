#include "jumpform/detector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "jumpform/errors.hpp"

namespace jumpform {

namespace {

constexpr double kFdStep = 1e-5;        // central-difference fallback for chart partials
constexpr double kZeroSample = 1e-8;    // |defect| below this counts as a zero sample
constexpr double kCircleFloor = 1e-13;  // defect this small on a winding circle is unusable
constexpr double kR4DedupEps = 1e-6;    // chart-overlap duplicates, R^4 distance
constexpr int kNewtonCap = 50;

const Chart& chart_at(const ParamSurface& surface, int chart_id) {
    if (chart_id < 0 || static_cast<std::size_t>(chart_id) >= surface.charts.size())
        throw MalformedInputError("chart id " + std::to_string(chart_id) + " out of range");
    return surface.charts[static_cast<std::size_t>(chart_id)];
}

struct TangentData {
    Vec4 p, x, y;
};

TangentData tangents_at(const Chart& ch, double u, double v) {
    TangentData t;
    t.p = ch.map(u, v);
    t.x = ch.d_du ? ch.d_du(u, v)
                  : Vec4((ch.map(u + kFdStep, v) - ch.map(u - kFdStep, v)) / (2 * kFdStep));
    t.y = ch.d_dv ? ch.d_dv(u, v)
                  : Vec4((ch.map(u, v + kFdStep) - ch.map(u, v - kFdStep)) / (2 * kFdStep));
    const double xx = t.x.squaredNorm();
    const double yy = t.y.squaredNorm();
    const double xy = t.x.dot(t.y);
    const double area2 = xx * yy - xy * xy;
    if (!(xx > 0) || !(yy > 0) || !(area2 > 1e-20 * xx * yy) || !std::isfinite(area2))
        throw DegenerateSurfaceError("chart '" + ch.name + "' is not an immersion at (u,v) = (" +
                                     std::to_string(u) + ", " + std::to_string(v) + ")");
    return t;
}

// J(p)-complex frame {e1, J e1, e2, J e2}: the first vector is the first
// standard basis vector; e2 is the first standard basis vector with a
// substantial component orthogonal to span{e1, J e1}.
Eigen::PartialPivLU<Mat4> complex_frame(const Mat4& j) {
    const Vec4 f1 = Vec4::Unit(0);
    const Vec4 w1 = j * f1;
    Vec4 q2 = w1 - w1.dot(f1) * f1;
    const double q2n = q2.norm();
    if (!(q2n > 1e-8))
        throw MalformedInputError("frame construction failed: J e1 is parallel to e1, so J^2 != -I");
    q2 /= q2n;

    Vec4 f2 = Vec4::Zero();
    bool found = false;
    for (int k = 0; k < 4; ++k) {
        Vec4 r = Vec4::Unit(k);
        r -= r.dot(f1) * f1;
        r -= r.dot(q2) * q2;
        if (r.squaredNorm() > 0.25) {
            f2 = r.normalized();
            found = true;
            break;
        }
    }
    if (!found) throw MalformedInputError("frame construction failed: no vector outside span{e1, J e1}");

    Mat4 basis;
    basis.col(0) = f1;
    basis.col(1) = w1;
    basis.col(2) = f2;
    basis.col(3) = j * f2;
    Eigen::PartialPivLU<Mat4> lu(basis);
    if (!(std::abs(lu.determinant()) > 1e-12))
        throw MalformedInputError("frame construction failed: frame is not a basis of R^4");
    return lu;
}

Complex defect_impl(const AlmostComplexStructure& j, const Chart& ch, double u, double v) {
    const TangentData t = tangents_at(ch, u, v);
    const auto lu = complex_frame(j.at(t.p));
    const Vec4 a = lu.solve(t.x);
    const Vec4 b = lu.solve(t.y);
    const Complex x1(a[0], a[1]), x2(a[2], a[3]);
    const Complex y1(b[0], b[1]), y2(b[2], b[3]);
    return x1 * y2 - x2 * y1;
}

double wrap_into(double x, double lo, double hi) {
    const double len = hi - lo;
    double y = std::fmod(x - lo, len);
    if (y < 0) y += len;
    return lo + y;
}

// parameter distance with periodic wrap
double param_dist(const Chart& ch, double u1, double v1, double u2, double v2) {
    double du = std::abs(u1 - u2);
    if (ch.periodic_u) {
        const double len = ch.u_max - ch.u_min;
        du = std::min(du, len - du);
    }
    double dv = std::abs(v1 - v2);
    if (ch.periodic_v) {
        const double len = ch.v_max - ch.v_min;
        dv = std::min(dv, len - dv);
    }
    return std::hypot(du, dv);
}

struct GridAxis {
    std::vector<double> pts;
    double step = 0;
};

GridAxis make_axis(double lo, double hi, bool periodic, int n) {
    GridAxis ax;
    ax.pts.resize(static_cast<std::size_t>(n));
    ax.step = periodic ? (hi - lo) / n : (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) ax.pts[static_cast<std::size_t>(i)] = lo + i * ax.step;
    return ax;
}

struct Candidate {
    int chart;
    double u, v;
    double residual;
};

}  // namespace

AlmostComplexStructure AlmostComplexStructure::standard() {
    Mat4 j;
    // z1 = x1 + i y1, z2 = x2 + i y2
    j << 0, -1, 0, 0,
         1,  0, 0, 0,
         0,  0, 0, -1,
         0,  0, 1,  0;
    return AlmostComplexStructure([j](const Vec4&) { return j; }, 1e-12);
}

AlmostComplexStructure AlmostComplexStructure::from_field(std::function<Mat4(const Vec4&)> field,
                                                          double tol) {
    return AlmostComplexStructure(std::move(field), tol);
}

Mat4 AlmostComplexStructure::at(const Vec4& p) const {
    const Mat4 j = field_(p);
    const double err = (j * j + Mat4::Identity()).cwiseAbs().maxCoeff();
    if (!(err <= tol_))
        throw MalformedInputError("almost complex structure violates J^2 = -I (max error " +
                                  std::to_string(err) + ") at the evaluated point");
    return j;
}

Complex defect(const ParamSurface& surface, const AlmostComplexStructure& j, int chart_id,
               double u, double v) {
    return defect_impl(j, chart_at(surface, chart_id), u, v);
}

DetectionReport find_jump_points(const ParamSurface& surface, const AlmostComplexStructure& j,
                                 int grid_n, double tol, int threads) {
    if (grid_n < 16) throw MalformedInputError("find_jump_points: grid_n must be at least 16");
    if (surface.charts.empty()) throw MalformedInputError("surface has no charts");
    if (threads < 1) threads = 1;

    DetectionReport report;
    report.grid_n = grid_n;
    report.tol = tol;

    struct ChartGrid {
        GridAxis us, vs;
        std::vector<Complex> vals;  // row-major [iu * nv + iv]
    };
    std::vector<ChartGrid> grids(surface.charts.size());

    std::size_t zero_samples = 0, total_samples = 0;
    for (std::size_t c = 0; c < surface.charts.size(); ++c) {
        const Chart& ch = surface.charts[c];
        ChartGrid& g = grids[c];
        g.us = make_axis(ch.u_min, ch.u_max, ch.periodic_u, grid_n);
        g.vs = make_axis(ch.v_min, ch.v_max, ch.periodic_v, grid_n);
        g.vals.resize(g.us.pts.size() * g.vs.pts.size());

        auto eval_rows = [&](std::size_t row_begin, std::size_t row_end) {
            for (std::size_t iu = row_begin; iu < row_end; ++iu)
                for (std::size_t iv = 0; iv < g.vs.pts.size(); ++iv)
                    g.vals[iu * g.vs.pts.size() + iv] =
                        defect_impl(j, ch, g.us.pts[iu], g.vs.pts[iv]);
        };
        if (threads == 1) {
            eval_rows(0, g.us.pts.size());
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
            const std::size_t nrows = g.us.pts.size();
            const std::size_t chunk = (nrows + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const std::size_t b = std::min(nrows, static_cast<std::size_t>(t) * chunk);
                const std::size_t e = std::min(nrows, b + chunk);
                if (b < e)
                    pool.emplace_back([&, b, e, t] {
                        try {
                            eval_rows(b, e);
                        } catch (...) {
                            errors[static_cast<std::size_t>(t)] = std::current_exception();
                        }
                    });
            }
            for (auto& th : pool) th.join();
            for (const auto& err : errors)
                if (err) std::rethrow_exception(err);
        }

        total_samples += g.vals.size();
        for (const Complex& z : g.vals)
            if (std::abs(z) < kZeroSample) ++zero_samples;
    }

    report.zero_fraction =
        total_samples == 0 ? 0.0 : static_cast<double>(zero_samples) / static_cast<double>(total_samples);
    if (report.zero_fraction > 0.5)
        throw IdenticallyComplexError("surface '" + surface.name + "' is identically complex: |defect| < " +
                                      std::to_string(kZeroSample) + " on " +
                                      std::to_string(100.0 * report.zero_fraction) + "% of samples");

    // Newton refinement from grid nodes whose |defect| is small against the
    // cell-local linear change of the field.
    std::vector<Candidate> converged;
    for (std::size_t c = 0; c < surface.charts.size(); ++c) {
        const Chart& ch = surface.charts[c];
        const ChartGrid& g = grids[c];
        const std::size_t nu = g.us.pts.size(), nv = g.vs.pts.size();
        auto val = [&](std::size_t iu, std::size_t iv) { return g.vals[iu * nv + iv]; };

        for (std::size_t iu = 0; iu < nu; ++iu) {
            for (std::size_t iv = 0; iv < nv; ++iv) {
                const Complex d0 = val(iu, iv);
                double est = 0;
                auto wrap_idx = [](std::ptrdiff_t i, std::ptrdiff_t n) {
                    i %= n;
                    return i < 0 ? i + n : i;
                };
                auto consider = [&](std::ptrdiff_t du, std::ptrdiff_t dv) {
                    std::ptrdiff_t ju = static_cast<std::ptrdiff_t>(iu) + du;
                    std::ptrdiff_t jv = static_cast<std::ptrdiff_t>(iv) + dv;
                    if (ch.periodic_u) ju = wrap_idx(ju, static_cast<std::ptrdiff_t>(nu));
                    if (ch.periodic_v) jv = wrap_idx(jv, static_cast<std::ptrdiff_t>(nv));
                    if (ju < 0 || jv < 0 || ju >= static_cast<std::ptrdiff_t>(nu) ||
                        jv >= static_cast<std::ptrdiff_t>(nv))
                        return;
                    est = std::max(est, std::abs(val(static_cast<std::size_t>(ju),
                                                     static_cast<std::size_t>(jv)) -
                                                 d0));
                };
                consider(1, 0);
                consider(-1, 0);
                consider(0, 1);
                consider(0, -1);
                if (!(std::abs(d0) < 10 * est)) continue;

                // Newton on (Re defect, Im defect)
                double u = g.us.pts[iu], v = g.vs.pts[iv];
                bool ok = false;
                double res = 0;
                for (int it = 0; it < kNewtonCap; ++it) {
                    const Complex d = defect_impl(j, ch, u, v);
                    res = std::abs(d);
                    if (res < tol) {
                        ok = true;
                        break;
                    }
                    auto probe = [&](double uu, double vv) {
                        if (!ch.periodic_u) uu = std::clamp(uu, ch.u_min, ch.u_max);
                        if (!ch.periodic_v) vv = std::clamp(vv, ch.v_min, ch.v_max);
                        return std::pair<std::pair<double, double>, Complex>(
                            {uu, vv}, defect_impl(j, ch, uu, vv));
                    };
                    const auto [pu, du_val] = probe(u + kFdStep, v);
                    const auto [mu, du_m] = probe(u - kFdStep, v);
                    const auto [pv, dv_val] = probe(u, v + kFdStep);
                    const auto [mv, dv_m] = probe(u, v - kFdStep);
                    const double denom_u = pu.first - mu.first;
                    const double denom_v = pv.second - mv.second;
                    const Complex dd_du = (du_val - du_m) / denom_u;
                    const Complex dd_dv = (dv_val - dv_m) / denom_v;
                    // solve [Re dd_du  Re dd_dv; Im dd_du  Im dd_dv] * step = -(Re d, Im d)
                    const double a11 = dd_du.real(), a12 = dd_dv.real();
                    const double a21 = dd_du.imag(), a22 = dd_dv.imag();
                    const double det = a11 * a22 - a12 * a21;
                    if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
                    const double su = (-d.real() * a22 + d.imag() * a12) / det;
                    const double sv = (-a11 * d.imag() + a21 * d.real()) / det;
                    const double diam = std::hypot(ch.u_max - ch.u_min, ch.v_max - ch.v_min);
                    if (!std::isfinite(su) || !std::isfinite(sv) || std::hypot(su, sv) > diam)
                        break;
                    u += su;
                    v += sv;
                    if (ch.periodic_u) u = wrap_into(u, ch.u_min, ch.u_max);
                    if (ch.periodic_v) v = wrap_into(v, ch.v_min, ch.v_max);
                    if (u < ch.u_min || u > ch.u_max || v < ch.v_min || v > ch.v_max) break;
                }
                if (ok)
                    converged.push_back({static_cast<int>(c), u, v, res});
                else
                    ++report.dropped_seeds;
            }
        }
    }

    std::sort(converged.begin(), converged.end(), [](const Candidate& a, const Candidate& b) {
        if (a.chart != b.chart) return a.chart < b.chart;
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.residual < b.residual;
    });

    // dedup: same chart by parameter distance, across charts by R^4 distance
    const double param_eps = 2 * std::numbers::pi / grid_n;
    std::vector<Candidate> unique_pts;
    std::vector<Vec4> locations;
    for (const Candidate& cand : converged) {
        const Chart& ch = surface.charts[static_cast<std::size_t>(cand.chart)];
        const Vec4 loc = ch.map(cand.u, cand.v);
        bool dup = false;
        for (std::size_t k = 0; k < unique_pts.size() && !dup; ++k) {
            if (unique_pts[k].chart == cand.chart &&
                param_dist(ch, unique_pts[k].u, unique_pts[k].v, cand.u, cand.v) < param_eps)
                dup = true;
            if (unique_pts[k].chart != cand.chart && (locations[k] - loc).norm() < kR4DedupEps)
                dup = true;
        }
        if (!dup) {
            unique_pts.push_back(cand);
            locations.push_back(loc);
        }
    }

    for (std::size_t k = 0; k < unique_pts.size(); ++k) {
        const Candidate& cand = unique_pts[k];
        const Chart& ch = surface.charts[static_cast<std::size_t>(cand.chart)];
        JumpPoint pt;
        pt.chart = cand.chart;
        pt.u = cand.u;
        pt.v = cand.v;
        for (int d = 0; d < 4; ++d) pt.location[static_cast<std::size_t>(d)] = locations[k][d];
        pt.residual = cand.residual;

        double radius = 4.0 * std::max((ch.u_max - ch.u_min) / grid_n, (ch.v_max - ch.v_min) / grid_n);
        if (!ch.periodic_u)
            radius = std::min(radius, 0.9 * std::min(cand.u - ch.u_min, ch.u_max - cand.u));
        if (!ch.periodic_v)
            radius = std::min(radius, 0.9 * std::min(cand.v - ch.v_min, ch.v_max - cand.v));

        int index = 0;
        bool indexed = false;
        for (int attempt = 0; attempt < 6 && !indexed && radius > 0; ++attempt) {
            try {
                index = index_at(surface, j, pt, radius);
                indexed = true;
            } catch (const RadiusUnusableError&) {
                radius *= 0.5;
            }
        }
        if (!indexed || index == 0) {
            ++report.dropped_points;  // not a transversal zero under this grid/tolerance
            continue;
        }
        pt.index = index;
        report.total_index += index;
        report.points.push_back(pt);
    }

    return report;
}

int index_at(const ParamSurface& surface, const AlmostComplexStructure& j, const JumpPoint& point,
             double radius) {
    const Chart& ch = chart_at(surface, point.chart);
    if (!(radius > 0)) throw MalformedInputError("index_at: radius must be positive");
    if (!ch.periodic_u && (point.u - radius < ch.u_min || point.u + radius > ch.u_max))
        throw RadiusUnusableError("parameter circle leaves the chart domain");
    if (!ch.periodic_v && (point.v - radius < ch.v_min || point.v + radius > ch.v_max))
        throw RadiusUnusableError("parameter circle leaves the chart domain");

    for (int m = 256; m <= 65536; m *= 2) {
        std::vector<Complex> vals(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            const double theta = 2 * std::numbers::pi * k / m;
            double u = point.u + radius * std::cos(theta);
            double v = point.v + radius * std::sin(theta);
            if (ch.periodic_u) u = wrap_into(u, ch.u_min, ch.u_max);
            if (ch.periodic_v) v = wrap_into(v, ch.v_min, ch.v_max);
            vals[static_cast<std::size_t>(k)] = defect_impl(j, ch, u, v);
            if (std::abs(vals[static_cast<std::size_t>(k)]) < kCircleFloor)
                throw RadiusUnusableError("defect vanishes on the parameter circle");
        }
        double total = 0;
        double max_step = 0;
        for (int k = 0; k < m; ++k) {
            const Complex ratio = vals[static_cast<std::size_t>((k + 1) % m)] / vals[static_cast<std::size_t>(k)];
            const double step = std::arg(ratio);
            max_step = std::max(max_step, std::abs(step));
            total += step;
        }
        if (max_step > 0.9 * std::numbers::pi) continue;  // resample finer
        const double turns = total / (2 * std::numbers::pi);
        const long long w = std::llround(turns);
        if (std::abs(turns - static_cast<double>(w)) > 0.01) continue;
        return static_cast<int>(w);
    }
    throw RadiusUnusableError("winding could not be resolved at this radius");
}

int total_algebraic_count(const ParamSurface& surface, const AlmostComplexStructure& j, int grid_n,
                          double tol) {
    return find_jump_points(surface, j, grid_n, tol).total_index;
}

ParamSurface clifford_torus() {
    constexpr double tau = 2 * std::numbers::pi;
    Chart ch;
    ch.name = "torus";
    ch.u_min = 0;
    ch.u_max = tau;
    ch.v_min = 0;
    ch.v_max = tau;
    ch.periodic_u = ch.periodic_v = true;
    ch.map = [](double u, double v) { return Vec4(std::cos(u), std::sin(u), std::cos(v), std::sin(v)); };
    ch.d_du = [](double u, double) { return Vec4(-std::sin(u), std::cos(u), 0, 0); };
    ch.d_dv = [](double, double v) { return Vec4(0, 0, -std::sin(v), std::cos(v)); };
    return ParamSurface{"clifford_torus", {ch}};
}

ParamSurface round_sphere() {
    // Unit sphere in R^3 x {0}.  Graph charts over the hemispheres x2 > 0 and
    // x2 < 0; the south chart swaps (u,v) so both charts induce the outward
    // orientation.
    constexpr double r = 0.7;
    Chart north;
    north.name = "north";
    north.u_min = north.v_min = -r;
    north.u_max = north.v_max = r;
    north.map = [](double u, double v) {
        return Vec4(u, v, std::sqrt(1 - u * u - v * v), 0);
    };
    north.d_du = [](double u, double v) {
        const double h = std::sqrt(1 - u * u - v * v);
        return Vec4(1, 0, -u / h, 0);
    };
    north.d_dv = [](double u, double v) {
        const double h = std::sqrt(1 - u * u - v * v);
        return Vec4(0, 1, -v / h, 0);
    };

    Chart south;
    south.name = "south";
    south.u_min = south.v_min = -r;
    south.u_max = south.v_max = r;
    south.map = [](double u, double v) {
        return Vec4(v, u, -std::sqrt(1 - u * u - v * v), 0);
    };
    south.d_du = [](double u, double v) {
        const double h = std::sqrt(1 - u * u - v * v);
        return Vec4(0, 1, u / h, 0);
    };
    south.d_dv = [](double u, double v) {
        const double h = std::sqrt(1 - u * u - v * v);
        return Vec4(1, 0, v / h, 0);
    };
    return ParamSurface{"round_sphere", {north, south}};
}

ParamSurface holomorphic_graph(int degree) {
    if (degree < 1) throw MalformedInputError("holomorphic_graph: degree must be >= 1");
    Chart ch;
    ch.name = "disk";
    ch.u_min = ch.v_min = -1;
    ch.u_max = ch.v_max = 1;
    ch.map = [degree](double u, double v) {
        const Complex z(u, v);
        const Complex w = std::pow(z, degree);
        return Vec4(u, v, w.real(), w.imag());
    };
    ch.d_du = [degree](double u, double v) {
        const Complex z(u, v);
        const Complex w = static_cast<double>(degree) * std::pow(z, degree - 1);
        return Vec4(1, 0, w.real(), w.imag());
    };
    ch.d_dv = [degree](double u, double v) {
        const Complex z(u, v);
        const Complex w = Complex(0, 1) * static_cast<double>(degree) * std::pow(z, degree - 1);
        return Vec4(0, 1, w.real(), w.imag());
    };
    return ParamSurface{"holomorphic_graph", {ch}};
}

ParamSurface graph_of_zbar() {
    Chart ch;
    ch.name = "disk";
    ch.u_min = ch.v_min = -1;
    ch.u_max = ch.v_max = 1;
    ch.map = [](double u, double v) { return Vec4(u, v, u, -v); };
    ch.d_du = [](double, double) { return Vec4(1, 0, 1, 0); };
    ch.d_dv = [](double, double) { return Vec4(0, 1, 0, -1); };
    return ParamSurface{"graph_of_zbar", {ch}};
}

}  // namespace jumpform
