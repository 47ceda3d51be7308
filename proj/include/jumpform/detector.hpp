#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace jumpform {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Complex = std::complex<double>;

/// One parameter chart of a surface in R^4 ~ C^2.  Analytic partials are
/// optional; central differences with step 1e-5 are the fallback.
struct Chart {
    std::string name;
    double u_min = 0, u_max = 1;
    double v_min = 0, v_max = 1;
    bool periodic_u = false;
    bool periodic_v = false;
    std::function<Vec4(double, double)> map;
    std::function<Vec4(double, double)> d_du;  // may be empty
    std::function<Vec4(double, double)> d_dv;  // may be empty
};

/// Chart-based parametrized surface.  Charts are expected to carry mutually
/// consistent orientations (each chart is oriented by its (u,v) parameters);
/// the shipped presets are built that way and winding indices are computed in
/// those oriented charts.
struct ParamSurface {
    std::string name;
    std::vector<Chart> charts;
};

/// Pointwise almost complex structure J on R^4.  Every evaluation checks
/// J(p)^2 = -I within the stored tolerance (1e-12 for the standard constant
/// structure, 1e-8 default for user-supplied fields).
class AlmostComplexStructure {
public:
    static AlmostComplexStructure standard();
    static AlmostComplexStructure from_field(std::function<Mat4(const Vec4&)> field,
                                             double tol = 1e-8);
    Mat4 at(const Vec4& p) const;

private:
    AlmostComplexStructure(std::function<Mat4(const Vec4&)> field, double tol)
        : field_(std::move(field)), tol_(tol) {}
    std::function<Mat4(const Vec4&)> field_;
    double tol_ = 1e-8;
};

struct JumpPoint {
    int chart = 0;
    double u = 0, v = 0;
    std::array<double, 4> location{};
    int index = 0;
    double residual = 0;

    bool operator==(const JumpPoint&) const = default;
};

struct DetectionReport {
    std::vector<JumpPoint> points;
    int total_index = 0;
    int dropped_seeds = 0;   // Newton seeds that failed to converge
    int dropped_points = 0;  // converged zeros dropped for unusable/zero index
    double zero_fraction = 0;
    int grid_n = 0;
    double tol = 0;
};

/// Complex scalar whose vanishing is exactly J-invariance of the tangent
/// plane at (u,v): the complex 2x2 determinant of the chart tangent vectors
/// expressed in a J(p)-complex frame {e1, J e1, e2, J e2} of R^4.
Complex defect(const ParamSurface& surface, const AlmostComplexStructure& j, int chart_id,
               double u, double v);

/// Grid scan of |defect| followed by Newton refinement of candidate cells,
/// deduplication, and winding-number indexing.  Deterministic for fixed
/// inputs; `threads` parallelizes grid evaluation without changing output.
DetectionReport find_jump_points(const ParamSurface& surface, const AlmostComplexStructure& j,
                                 int grid_n, double tol = 1e-10, int threads = 1);

/// Winding number of the defect along the positively oriented parameter
/// circle of the given radius (>= 256 samples, refined until every argument
/// step is resolved).
int index_at(const ParamSurface& surface, const AlmostComplexStructure& j, const JumpPoint& point,
             double radius);

/// Sum of winding indices over all detected jump points.
int total_algebraic_count(const ParamSurface& surface, const AlmostComplexStructure& j, int grid_n,
                          double tol = 1e-10);

// Surface presets.  Each exercises a distinct regime: empty jump set,
// isolated zeros, identically complex, everywhere-nondegenerate totally real.
ParamSurface clifford_torus();
ParamSurface round_sphere();
ParamSurface holomorphic_graph(int degree);
ParamSurface graph_of_zbar();

}  // namespace jumpform
