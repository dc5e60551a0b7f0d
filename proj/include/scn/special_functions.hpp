#ifndef SCN_SPECIAL_FUNCTIONS_HPP
#define SCN_SPECIAL_FUNCTIONS_HPP

namespace scn {

struct Hyp2f1Params {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double z = 0.0;  // restricted to z <= 0
};

/// Gauss hypergeometric function 2F1(a, b; c; z) on the non-positive real
/// axis, relative error <= 1e-10.
///
/// z = 0 returns exactly 1. For z < 0 the argument is mapped to
/// w = z/(z-1) in (0,1) (Pfaff transformation) and the power series is summed
/// there; once w exceeds 0.95 the series is too slow and the Euler integral
/// representation is integrated adaptively instead.
///
/// Throws DomainError when c is a non-positive integer or z > 0, and
/// NumericalError (carrying the partial sum) when the series fails to
/// converge within the iteration cap.
double hyp2f1_nonpos(double a, double b, double c, double z);
double hyp2f1_nonpos(const Hyp2f1Params& p);

/// Integral of u^beta / (1 + t*u^alpha) over [0, d], the head piece of the
/// interference Laplace exponent for a power-law path loss with Rayleigh
/// fading. Closed form: [d^(beta+1)/(beta+1)] * 2F1(1, (beta+1)/alpha;
/// 1+(beta+1)/alpha; -t*d^alpha).
///
/// t = 0 and d = 0 return the exact prefactor and 0 respectively.
/// Requires alpha > 0, beta >= 0, t >= 0, d >= 0.
double interference_integral_near(double alpha, double beta, double t, double d);

/// Integral of u^beta / (1 + t*u^alpha) over [d, inf), the tail piece of the
/// interference Laplace exponent. Closed form: [d^-(alpha-beta-1) /
/// (t*(alpha-beta-1))] * 2F1(1, 1-(beta+1)/alpha; 2-(beta+1)/alpha;
/// -1/(t*d^alpha)).
///
/// Requires alpha - beta - 1 > 0 (otherwise the tail diverges), t > 0, d > 0.
/// A margin |alpha - beta - 1| < 1e-6 is rejected outright: the 1/(alpha-beta-1)
/// prefactor amplifies rounding faster than the hypergeometric factor can
/// compensate.
double interference_integral_far(double alpha, double beta, double t, double d);

}  // namespace scn

#endif  // SCN_SPECIAL_FUNCTIONS_HPP
