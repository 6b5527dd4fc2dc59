#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace zwire {

// Unit vector with components along the orthonormal axes n1, n2, n3.
// Planar profiles live in the (n1, n3) plane.
struct Direction {
    double n1 = 0.0;
    double n2 = 0.0;
    double n3 = 1.0;
};

// Direction at polar angle theta in the (n1, n3) plane, theta = 0 along n3.
Direction planar_direction(double theta);

struct FieldSample {
    double b1 = 0.0;
    double b3 = 0.0;
};

// Instantaneous Zeeman eigenvalues, e0 = -|B|, e1 = +|B|.
struct OmegaDiag {
    double e0 = -1.0;
    double e1 = 1.0;
};

enum class FieldKind { Scheme1, Scheme2, MagneticWall, Uniform, Tabulated };

const char* field_kind_name(FieldKind k);

struct TabulatedSample {
    double y = 0.0;
    double b1 = 0.0;
    double b3 = 0.0;
};

struct TabulatedProfile;

// Planar Zeeman profile on [0, L] plus its uniform leads, in units of the
// lead field magnitude. Immutable once built.
class PlanarField {
public:
    FieldKind kind() const { return kind_; }
    double length() const { return L_; }
    double y_left() const { return 0.0; }
    double y_right() const { return L_; }
    double theta_left() const { return theta_L_; }
    // Unwrapped: carries the winding accumulated across the region.
    double theta_right() const { return theta_R_; }
    int q1() const { return q1_; }
    int q2() const { return q2_; }

    // Field components; lead values outside [0, L].
    FieldSample b(double y) const;
    FieldSample db(double y) const;
    double magnitude(double y) const;
    // True only inside the zero-field interior of a magnetic wall.
    bool zero_field(double y) const;

    // Continuous unwrapped polar angle; throws DirectionError where |B| = 0.
    double theta(double y) const;
    double theta_prime(double y) const;
    OmegaDiag omega(double y) const;

    const std::vector<TabulatedSample>& samples() const;

    friend PlanarField scheme1_field(int q1, int q2, double L);
    friend PlanarField scheme2_field(int q1, int q2, double L);
    friend PlanarField magnetic_wall_field(double theta_L, double theta_R, double L);
    friend PlanarField uniform_field(double theta, double L);
    friend PlanarField tabulated_field(std::vector<TabulatedSample> samples);

private:
    PlanarField() = default;

    double phase(double y) const;
    double phase_rate() const;

    FieldKind kind_ = FieldKind::Uniform;
    double L_ = 0.0;
    double theta_L_ = 0.0;
    double theta_R_ = 0.0;
    int q1_ = 0;
    int q2_ = 0;
    std::shared_ptr<const TabulatedProfile> table_;
};

// b1 = sin(p)|sin(p)|^(1+2 q1), b3 = cos(p)^(1+2 q1), p = (1+2 q2) pi y / L.
PlanarField scheme1_field(int q1, int q2, double L);
// b1 = sgn(sin p)|sin p|^(2+2 q1), b3 = sgn(cos p)|cos p|^(2+2 q1), p = (1+4 q2) pi y / (2L).
PlanarField scheme2_field(int q1, int q2, double L);
// Zero field on (0, L) between leads at theta_L and theta_R.
PlanarField magnetic_wall_field(double theta_L, double theta_R, double L);
PlanarField uniform_field(double theta, double L);
// Piecewise-cubic Hermite interpolation of the samples. Rows are shifted so
// the first one sits at y = 0. Throws ProfileError on malformed data.
PlanarField tabulated_field(std::vector<TabulatedSample> samples);

// Text format: header "# y b1 b3", then whitespace-separated rows.
PlanarField load_tabulated(const std::string& path);
std::vector<TabulatedSample> read_tabulated(std::istream& in);
void write_tabulated(std::ostream& out, const std::vector<TabulatedSample>& samples);

double theta_of(const PlanarField& field, double y);
OmegaDiag omega_of(const PlanarField& field, double y);

}  // namespace zwire
