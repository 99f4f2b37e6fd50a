#ifndef UNRUH_COORDS_HPP
#define UNRUH_COORDS_HPP

#include <stdexcept>

namespace unruh {

// Minkowski chart point (t, x) in natural units, c = 1.
struct SpacetimeEvent {
    double t{};
    double x{};
};

// Spacelike wedges of the Rindler chart: I is x > |t|, II is x < -|t|.
enum class Wedge { I, II };

// Propagation direction label, epsilon = +-1.
enum class Direction : int { right = +1, left = -1 };

constexpr int sign_of(Direction d) { return static_cast<int>(d); }

// Rindler chart point (eta, xi) together with its wedge.
struct RindlerEvent {
    double eta{};
    double xi{};
    Wedge wedge{Wedge::I};
};

// Acceleration constant of the chart, a > 0 (units 1/length).
class AccelerationParam {
public:
    explicit AccelerationParam(double a) : a_(a) {
        if (!(a > 0.0)) throw std::invalid_argument("AccelerationParam: a must be positive");
    }
    double value() const { return a_; }

private:
    double a_;
};

// Thrown when an event sits on or outside both wedges (|t| >= |x|),
// where the Rindler chart is undefined. No clamping is performed.
struct HorizonError : std::domain_error {
    using std::domain_error::domain_error;
};

// Wedge I: t = a^-1 e^{a xi} sinh(a eta), x = a^-1 e^{a xi} cosh(a eta).
// Wedge II: both components negated.
SpacetimeEvent to_minkowski(const RindlerEvent& ev, AccelerationParam a);

// Inverse chart map; throws HorizonError unless |t| < |x| strictly.
RindlerEvent to_rindler(const SpacetimeEvent& ev, AccelerationParam a);

// Returns a(xi - eps*eta) for the event's Rindler image; by the null
// coordinate identity this equals ln(a|x - eps*t|) in either wedge.
double null_coordinate_identity(const SpacetimeEvent& ev, Direction eps, AccelerationParam a);

// Proper acceleration alpha = a e^{-a xi} of the worldline at fixed xi.
double proper_acceleration(AccelerationParam a, double xi);

// Common velocity beta = tanh(a eta) of the eta = const hypersurface.
double slice_velocity(AccelerationParam a, double eta);

// Translated spatial coordinate X = x - 1/a.
double shifted_coordinate(double x, AccelerationParam a);

}  // namespace unruh

#endif
