#include "specenv/windows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specenv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double check_a(double a) {
  if (!(a > 0.0)) throw config_error("window parameter a must be positive");
  return a;
}
}  // namespace

PiecewiseSymbol::PiecewiseSymbol(SymbolFamily fam, double a, double n,
                                 int parity, std::vector<SymbolSegment> segs)
    : family_(fam), a_(a), n_(n), parity_(parity), segments_(std::move(segs)) {}

PiecewiseSymbol PiecewiseSymbol::trapezoid(double a) {
  return generalized_trapezoid(a, 2.0);
}

PiecewiseSymbol PiecewiseSymbol::generalized_trapezoid(double a, double n) {
  check_a(a);
  if (!(n > 1.0)) {
    throw config_error("generalized trapezoid needs shoulder ratio n > 1");
  }
  const double slope = 1.0 / ((n - 1.0) * a);
  const double plateau = n / (n - 1.0);
  std::vector<SymbolSegment> segs = {
      {-kInf, -n * a, 0.0, 0.0, 0.0},
      {-n * a, -a, plateau, slope, 0.0},
      {-a, a, 1.0, 0.0, 0.0},
      {a, n * a, plateau, -slope, 0.0},
      {n * a, kInf, 0.0, 0.0, 0.0},
  };
  const SymbolFamily fam = (n == 2.0) ? SymbolFamily::trapezoid
                                      : SymbolFamily::generalized_trapezoid;
  return PiecewiseSymbol(fam, a, n, +1, std::move(segs));
}

PiecewiseSymbol PiecewiseSymbol::omega(double a) {
  check_a(a);
  std::vector<SymbolSegment> segs = {
      {-kInf, -2.0 * a, 0.0, 0.0, 1.0},
      {-2.0 * a, -a, -1.0 / a, 0.0, -1.0},
      {-a, a, 0.0, 0.0, 0.0},
      {a, 2.0 * a, 1.0 / a, 0.0, -1.0},
      {2.0 * a, kInf, 0.0, 0.0, 1.0},
  };
  return PiecewiseSymbol(SymbolFamily::omega, a, 0.0, -1, std::move(segs));
}

PiecewiseSymbol PiecewiseSymbol::triangle(double a) {
  check_a(a);
  std::vector<SymbolSegment> segs = {
      {-kInf, -a, 0.0, 0.0, 0.0},
      {-a, 0.0, 1.0, 1.0 / a, 0.0},
      {0.0, a, 1.0, -1.0 / a, 0.0},
      {a, kInf, 0.0, 0.0, 0.0},
  };
  return PiecewiseSymbol(SymbolFamily::triangle, a, 0.0, +1, std::move(segs));
}

double PiecewiseSymbol::operator()(double xi) const {
  for (const auto& s : segments_) {
    if (xi < s.hi) return s.value(xi);
  }
  return segments_.back().value(xi);
}

double PiecewiseSymbol::derivative(double xi) const {
  for (const auto& s : segments_) {
    if (xi < s.hi) return s.derivative(xi);
  }
  return segments_.back().derivative(xi);
}

ExactNorms PiecewiseSymbol::exact_norms() const {
  switch (family_) {
    case SymbolFamily::trapezoid:
      return {2.0 * std::sqrt(2.0 * a_ / 3.0), std::sqrt(2.0 / a_)};
    case SymbolFamily::omega:
      return {std::sqrt((4.0 - 4.0 * std::log(2.0)) / a_),
              std::sqrt(2.0 / (3.0 * a_ * a_ * a_))};
    case SymbolFamily::triangle:
      return {std::sqrt(2.0 * a_ / 3.0), std::sqrt(2.0 / a_)};
    case SymbolFamily::generalized_trapezoid:
      return {std::sqrt(2.0 * a_ * (n_ + 2.0) / 3.0),
              std::sqrt(2.0 / ((n_ - 1.0) * a_))};
  }
  throw config_error("unsupported symbol family");
}

double PiecewiseSymbol::support_radius() const {
  if (family_ == SymbolFamily::omega) return kInf;
  return -segments_.front().hi;
}

namespace {

// Composite trapezoid of g^2 over [lo, hi] with ~points subintervals.
double segment_l2sq(const SymbolSegment& seg, double lo, double hi, int points,
                    bool deriv) {
  const double h = (hi - lo) / points;
  double sum = 0.0;
  for (int i = 0; i <= points; ++i) {
    const double xi = lo + i * h;
    const double v = deriv ? seg.derivative(xi) : seg.value(xi);
    const double w = (i == 0 || i == points) ? 0.5 : 1.0;
    sum += w * v * v;
  }
  return h * sum;
}

double symbol_quad_norm_impl(const PiecewiseSymbol& s, bool deriv) {
  // reciprocal tails fall off like xi^-2 (xi^-4 after differentiation);
  // 2e4 cuts the tail of |omega|^2 below 1e-4 absolute
  const double tail_cutoff = 2.0e4;
  double total = 0.0;
  for (const auto& seg : s.segments()) {
    double lo = seg.lo;
    double hi = seg.hi;
    const bool unbounded = std::isinf(lo) || std::isinf(hi);
    if (unbounded) {
      if (seg.c0 == 0.0 && seg.c1 == 0.0 && seg.c_recip == 0.0) continue;
      // split the tail: fine spacing near the kink where the integrand
      // still has curvature, coarse spacing on the flat remainder
      if (std::isinf(hi)) {
        total += segment_l2sq(seg, lo, lo + 50.0, 1 << 17, deriv);
        total += segment_l2sq(seg, lo + 50.0, tail_cutoff, 400000, deriv);
      } else {
        total += segment_l2sq(seg, hi - 50.0, hi, 1 << 17, deriv);
        total += segment_l2sq(seg, -tail_cutoff, hi - 50.0, 400000, deriv);
      }
    } else {
      total += segment_l2sq(seg, lo, hi, 8192, deriv);
    }
  }
  return std::sqrt(total);
}

}  // namespace

double symbol_quad_norm_l2(const PiecewiseSymbol& s) {
  return symbol_quad_norm_impl(s, false);
}

double symbol_quad_norm_l2_deriv(const PiecewiseSymbol& s) {
  return symbol_quad_norm_impl(s, true);
}

namespace {

// (cos(u) - cos(2u)) by series for small u, where the direct difference
// cancels: sum_{k>=1} (-1)^{k+1} (4^k - 1) u^{2k} / (2k)!.
double cos_diff(double u) {
  if (std::abs(u) > 0.5) return std::cos(u) - std::cos(2.0 * u);
  double term = 1.5 * u * u;  // k = 1
  double sum = term;
  double pow4 = 4.0;
  double fact = 2.0;
  for (int k = 2; k <= 12; ++k) {
    pow4 *= 4.0;
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    const double t =
        ((k % 2 == 0) ? -1.0 : 1.0) * (pow4 - 1.0) * std::pow(u, 2 * k) / fact;
    sum += t;
    if (std::abs(t) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// sin(x)/x with the removable singularity handled by series.
double sinc(double x) {
  if (std::abs(x) > 1e-4) return std::sin(x) / x;
  const double x2 = x * x;
  return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
}

}  // namespace

double phi_time(double a, double t) {
  check_a(a);
  // 2 sin(3at/2) sin(at/2) = cos(at) - cos(2at)
  const double u = a * t;
  if (std::abs(u) <= 0.5) {
    // cos_diff(u)/(pi*a*t^2) = (a/pi) * (cos_diff(u)/u^2)
    const double ratio =
        (u == 0.0) ? 1.5 : cos_diff(u) / (u * u);
    return a / M_PI * ratio;
  }
  return cos_diff(u) / (M_PI * a * t * t);
}

double gen_phi_time(double a, double n, double t) {
  check_a(a);
  if (!(n > 1.0)) {
    throw config_error("generalized trapezoid needs shoulder ratio n > 1");
  }
  const double c1 = (n + 1.0) * a / 2.0;
  const double c2 = (n - 1.0) * a / 2.0;
  if (std::abs(t) < 1e-7) {
    // small-t limit of 2 sin(c1 t) sin(c2 t) / (pi (n-1) a t^2)
    return 2.0 * c1 * c2 / (M_PI * (n - 1.0) * a) *
           sinc(c1 * t) * sinc(c2 * t);
  }
  return 2.0 * std::sin(c1 * t) * std::sin(c2 * t) /
         (M_PI * (n - 1.0) * a * t * t);
}

Complex psi_time(double a, double t) {
  check_a(a);
  if (t == 0.0) return Complex(0.0, 0.0);
  if (t < 0.0) return -psi_time(a, -t);
  const double u = a * t;
  // int_a^{2a} (1/a) sin(t xi) dxi = (cos(at) - cos(2at)) / (at)
  const double finite_part = cos_diff(u) / u;
  const double bracket = finite_part + sine_integral(u) -
                         2.0 * sine_integral(2.0 * u) + M_PI / 2.0;
  return Complex(0.0, bracket / M_PI);
}

Complex psi_kernel_value(double a, double t) {
  if (t == 0.0) {
    check_a(a);
    return Complex(0.0, 0.5);
  }
  return psi_time(a, t);
}

double gamma_time(double a, double t) {
  check_a(a);
  const double s = sinc(a * t / 2.0);
  return a / (2.0 * M_PI) * s * s;
}

double sine_integral(double x) {
  if (x < 0.0) return -sine_integral(-x);
  if (x == 0.0) return 0.0;
  if (x <= 4.0) {
    // power series: sum (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
    double power = x;  // x^{2k+1}/(2k+1)!
    double sum = x;
    for (int k = 1; k <= 60; ++k) {
      power *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
      const double term = power / (2.0 * k + 1.0);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
  }
  // Si(x) = pi/2 + Im E1(ix); E1 evaluated by the modified Lentz
  // continued fraction, which is the auxiliary-function form in disguise.
  const Complex z(0.0, x);
  Complex b = z + 1.0;
  Complex c(1e308, 0.0);
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= 300; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const Complex del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  const Complex e1 = h * std::exp(-z);
  return M_PI / 2.0 + e1.imag();
}

namespace {

// Minimal exact rational arithmetic on int64 with __int128 intermediates.
struct Rat {
  long long n = 0;
  long long d = 1;

  static Rat reduce(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 r = a % b;
      a = b;
      b = r;
    }
    if (a != 0) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim) {
      throw numerical_error("rational overflow in symbol identity check");
    }
    return Rat{static_cast<long long>(n), static_cast<long long>(d)};
  }

  friend Rat operator+(Rat a, Rat b) {
    return reduce(__int128(a.n) * b.d + __int128(b.n) * a.d,
                  __int128(a.d) * b.d);
  }
  friend Rat operator-(Rat a, Rat b) {
    return reduce(__int128(a.n) * b.d - __int128(b.n) * a.d,
                  __int128(a.d) * b.d);
  }
  friend Rat operator*(Rat a, Rat b) {
    return reduce(__int128(a.n) * b.n, __int128(a.d) * b.d);
  }
  friend Rat operator/(Rat a, Rat b) {
    if (b.n == 0) throw numerical_error("rational division by zero");
    return reduce(__int128(a.n) * b.d, __int128(a.d) * b.n);
  }
  bool is_zero() const { return n == 0; }
  double to_double() const { return double(n) / double(d); }
};

// Exact conversion double -> rational; the double must be a dyadic
// rational with modest exponent (true for the coefficients of the window
// families at dyadic a).
Rat rat_from_double(double x) {
  if (x == 0.0) return Rat{0, 1};
  int exp = 0;
  const double m = std::frexp(x, &exp);
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  int e = exp - 53;
  while (mant % 2 == 0 && e < 0) {
    mant /= 2;
    ++e;
  }
  if (e > 62 || e < -62) {
    throw numerical_error("coefficient is not a small dyadic rational");
  }
  if (e >= 0) return Rat{mant << e, 1};
  return Rat::reduce(mant, __int128(1) << (-e));
}

Rat eval_segment_exact(const SymbolSegment& seg, Rat xi) {
  Rat v = rat_from_double(seg.c0) + rat_from_double(seg.c1) * xi;
  if (seg.c_recip != 0.0) {
    v = v + rat_from_double(seg.c_recip) / xi;
  }
  return v;
}

Rat eval_symbol_exact(const PiecewiseSymbol& s, Rat xi) {
  const double x = xi.to_double();
  for (const auto& seg : s.segments()) {
    if (x < seg.hi) {
      if (xi.is_zero() && seg.c_recip != 0.0) {
        throw numerical_error("symbol pole at zero");
      }
      return eval_segment_exact(seg, xi);
    }
  }
  return eval_segment_exact(s.segments().back(), xi);
}

}  // namespace

double symbol_identity_max_defect(double a, long long num_points) {
  const PiecewiseSymbol tau = PiecewiseSymbol::trapezoid(a);
  const PiecewiseSymbol omg = PiecewiseSymbol::omega(a);
  const Rat ra = rat_from_double(a);
  const Rat one{1, 1};
  // xi = k * a / 2^17 spans about [-3.8a, 3.8a], covering every region
  const long long half = num_points / 2;
  const Rat step = ra / Rat{131072, 1};
  double worst = 0.0;
  for (long long k = -half; k <= half; ++k) {
    const Rat xi = step * Rat{k, 1};
    const Rat lhs = xi.is_zero() ? Rat{0, 1} : xi * eval_symbol_exact(omg, xi);
    const Rat rhs = one - eval_symbol_exact(tau, xi);
    const Rat defect = lhs - rhs;
    worst = std::max(worst, std::abs(defect.to_double()));
  }
  return worst;
}

Complex symbol_time_value(const PiecewiseSymbol& s, double t) {
  switch (s.family()) {
    case SymbolFamily::trapezoid:
      return Complex(phi_time(s.a(), t), 0.0);
    case SymbolFamily::omega:
      return psi_time(s.a(), t);
    case SymbolFamily::triangle:
      return Complex(gamma_time(s.a(), t), 0.0);
    case SymbolFamily::generalized_trapezoid:
      return Complex(gen_phi_time(s.a(), s.n(), t), 0.0);
  }
  throw config_error("unsupported symbol family");
}

}  // namespace specenv
