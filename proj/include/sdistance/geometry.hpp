#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdistance/config.hpp"

namespace sdist {

/// A point of Gr(k,n): an n x k matrix with orthonormal columns. Frames
/// whose orthonormality defect exceeds tol_orth but stays below the re-fit
/// limit are re-orthonormalized on ingestion (user JSON carries rounded
/// decimals); beyond that they are rejected.
class SubspaceFrame {
public:
    static SubspaceFrame from_matrix(Eigen::MatrixXd columns, const Tolerances& tol = {});

    long n() const { return columns_.rows(); }
    long k() const { return columns_.cols(); }
    const Eigen::MatrixXd& columns() const { return columns_; }

    /// max-abs entry of U^T U - I.
    double orthonormality_defect() const;

private:
    explicit SubspaceFrame(Eigen::MatrixXd m) : columns_(std::move(m)) {}
    Eigen::MatrixXd columns_;
};

struct ProjectionMatrix {
    Eigen::MatrixXd P;  // n x n, symmetric, idempotent, trace k

    double idempotency_defect() const { return (P * P - P).cwiseAbs().maxCoeff(); }
    double trace() const { return P.trace(); }
};

struct Metric {
    enum class Kind { chordal, fubini_study, angle };
    Kind kind = Kind::chordal;
    int angle_index = 1;  // 1-based principal-angle selector, used when kind == angle

    std::string str() const;
    static Metric parse(const std::string& s);  // "chordal" | "fs" | "angle:<i>"
};

/// Principal angles between equal-shape frames, ascending (descending
/// cosines); singular values are clamped into [0,1] before arccos.
std::vector<double> principal_angles(const SubspaceFrame& u, const SubspaceFrame& v);

/// sqrt(k - tr(U U^T V V^T)); cross-checked against (sum sin^2 theta_i)^{1/2}.
double chordal_distance(const SubspaceFrame& u, const SubspaceFrame& v);

/// arccos |det(U^T V)|; cross-checked against arccos prod cos(theta_i).
double fubini_study_distance(const SubspaceFrame& u, const SubspaceFrame& v);

/// The index-th principal angle (1-based).
double angle_distance(const SubspaceFrame& u, const SubspaceFrame& v, int index);

double distance(const SubspaceFrame& u, const SubspaceFrame& v, const Metric& m);

/// All k x k minors det(U_I), I running over k-subsets of rows in
/// lexicographic order; unit norm for orthonormal frames (Cauchy-Binet).
Eigen::VectorXd plucker_coordinates(const SubspaceFrame& u);

ProjectionMatrix projection_matrix(const SubspaceFrame& u);

struct DistanceSpectrum {
    Metric metric;
    std::vector<double> values;          // sorted cluster representatives
    std::vector<long> multiplicities;    // pair counts per cluster
    long s = 0;                          // number of clusters
    double tol_cluster = 0;
};

/// Pairwise distances clustered by single-linkage with threshold
/// tol_cluster; needs >= 2 frames of equal shape.
DistanceSpectrum distance_spectrum(const std::vector<SubspaceFrame>& frames, const Metric& metric,
                                   double tol_cluster);

// ---- classical configurations (fixtures for the bounds) ----

/// n coordinate-axis lines in R^n.
std::vector<SubspaceFrame> coordinate_axes(long n);

/// n+1 lines through the vertices of a centered regular simplex in R^n;
/// pairwise |cos| = 1/n.
std::vector<SubspaceFrame> simplex_lines(long n);

/// The 6 diagonals of the icosahedron in R^3; pairwise |cos| = 1/sqrt(5).
std::vector<SubspaceFrame> icosahedron_lines();

/// Haar-ish random frames: column-orthonormalized seeded Gaussian matrices.
std::vector<SubspaceFrame> random_frames(long n, long k, long count, unsigned long seed);

// ---- JSON configuration files ----
// {"n": int, "k": int, "frames": [[row-major n*k reals], ...], "tol_orth": optional}

std::vector<SubspaceFrame> load_frames_json(std::istream& in, const Tolerances& tol);
std::vector<SubspaceFrame> load_frames_file(const std::string& path, const Tolerances& tol);
std::string frames_to_json(const std::vector<SubspaceFrame>& frames);

}  // namespace sdist
