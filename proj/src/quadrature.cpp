#include "fockcp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace fockcp {

namespace {

using cplx = std::complex<double>;
constexpr cplx kImag{0.0, 1.0};

// Gauss-Kronrod 15(7) abscissae/weights on [-1,1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEval {
  cplx integral;
  double error;
};

struct Panel {
  double a, b;
  cplx integral;
  double error;
  long id;
};

struct WorsePanel {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.id > rhs.id;  // deterministic tie-break: older panel first
  }
};

template <typename F>
PanelEval gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  cplx fv[15];
  auto sample = [&](double x) -> cplx {
    const cplx v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NonFiniteIntegrandError("integrand not finite at x = " +
                                    std::to_string(x));
    return v;
  };

  const cplx fc = sample(center);
  cplx resk = kWgk[7] * fc;
  cplx resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx f1 = sample(center - dx);
    const cplx f2 = sample(center + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  fv[7] = fc;

  const cplx reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));

  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs(resk - resg) * std::abs(half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);

  return {resk * half, err};
}

struct EngineResult {
  cplx total;
  double error;
  int panels;
};

// Adaptive bisection over an initial partition: repeatedly split the panel
// with the largest error estimate until sum(err) <= max(absTol, relTol|I|).
// Fully deterministic; refinement under a tighter tolerance extends the same
// split sequence, so reported errors are monotone in relTol.
template <typename F>
EngineResult adapt(const F& f, const std::vector<double>& nodes,
                   const QuadratureSettings& st, double extraError) {
  std::priority_queue<Panel, std::vector<Panel>, WorsePanel> heap;
  std::vector<Panel> frozen;
  cplx total = 0.0;
  double totalErr = extraError;
  long nextId = 0;
  int panelCount = 0;

  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    const PanelEval pe = gk15(f, nodes[i], nodes[i + 1]);
    heap.push(Panel{nodes[i], nodes[i + 1], pe.integral, pe.error, nextId++});
    total += pe.integral;
    totalErr += pe.error;
    ++panelCount;
  }

  const double widthFloor =
      64.0 * std::numeric_limits<double>::epsilon() *
      std::max(std::abs(nodes.front()), std::abs(nodes.back()));

  while (panelCount < st.maxPanels) {
    const double target = std::max(st.absTol, st.relTol * std::abs(total));
    if (totalErr <= target) break;
    if (heap.empty()) break;

    const Panel worst = heap.top();
    heap.pop();
    if (worst.b - worst.a <= std::max(widthFloor, 1e-300) ||
        worst.error == 0.0) {
      frozen.push_back(worst);  // cannot usefully split further
      continue;
    }

    const double mid = 0.5 * (worst.a + worst.b);
    const PanelEval left = gk15(f, worst.a, mid);
    const PanelEval right = gk15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    totalErr += left.error + right.error - worst.error;
    heap.push(Panel{worst.a, mid, left.integral, left.error, nextId++});
    heap.push(Panel{mid, worst.b, right.integral, right.error, nextId++});
    ++panelCount;
  }

  const double target = std::max(st.absTol, st.relTol * std::abs(total));
  if (totalErr > target)
    throw ToleranceNotMetError("quadrature error estimate " +
                                   std::to_string(totalErr) + " above target " +
                                   std::to_string(target) + " at " +
                                   std::to_string(panelCount) + " panels",
                               totalErr, target);

  return {total, totalErr, panelCount};
}

}  // namespace

QuadratureResult integrate_traveling(const TravelingIntegrand& f, double zeta,
                                     const QuadratureSettings& st) {
  if (zeta < 0.0) throw Error("integrate_traveling requires zeta >= 0");
  if (st.relTol <= 0.0 || st.maxPanels < 1)
    throw Error("invalid quadrature settings");

  // One panel per oscillationsPerPanel half-periods of e^{i zeta tau}.
  const double width =
      zeta > 0.0 ? std::numbers::pi / zeta * st.oscillationsPerPanel
                 : 1.0;
  const int count = static_cast<int>(std::clamp(
      std::ceil(1.0 / std::max(width, 1e-12)), 1.0,
      static_cast<double>(std::min(st.maxPanels, 2048))));
  std::vector<double> nodes(count + 1);
  for (int i = 0; i <= count; ++i)
    nodes[i] = static_cast<double>(i) / count;
  nodes.front() = 0.0;
  nodes.back() = 1.0;

  const EngineResult er =
      adapt([&](double t) { return f(t); }, nodes, st, 0.0);

  QuadratureResult out;
  out.value = er.total.real();
  out.errorEstimate = er.error;
  out.panelsUsed = er.panels;
  out.imagAbs = std::abs(er.total.imag());
  return out;
}

QuadratureResult integrate_evanescent(const EvanescentIntegrand& f, double zeta,
                                      const QuadratureSettings& st,
                                      std::span<const double> breakpoints) {
  if (zeta <= 0.0) throw Error("integrate_evanescent requires zeta > 0");
  if (st.relTol <= 0.0 || st.maxPanels < 1)
    throw Error("invalid quadrature settings");

  const double kmax = st.kappaMaxOverride > 0.0
                          ? st.kappaMaxOverride
                          : std::max(20.0, 40.0 / zeta);

  auto g = [&](double kappa) { return -kImag * f(cplx(0.0, kappa)); };

  // Geometric ladder on the e^{-zeta kappa} decay scale, plus caller kinks.
  std::vector<double> nodes{0.0, kmax};
  for (double s = std::min(1.0 / zeta, 0.5 * kmax); s < kmax; s *= 2.0)
    nodes.push_back(s);
  for (double bp : breakpoints)
    if (bp > 0.0 && bp < kmax) nodes.push_back(bp);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  // Truncation remainder: |g(kmax)| x the damped-tail measure. With
  // zeta*kmax >= 20 this covers kappa^2 growth with margin.
  const double gEnd = std::abs(g(kmax));
  const double tail = gEnd * 2.0 / zeta;

  // Growth past the truncation point means the decay precondition is broken.
  double probeMax = 0.0;
  for (double fac : {1.1, 1.35, 1.7})
    probeMax = std::max(probeMax, std::abs(g(kmax * fac)));
  if (probeMax > gEnd && probeMax > st.absTol)
    throw NonDecayingIntegrandError(
        "integrand grows past kappa_max = " + std::to_string(kmax));

  const EngineResult er = adapt(g, nodes, st, tail);

  QuadratureResult out;
  out.value = er.total.real();
  out.errorEstimate = er.error;
  out.panelsUsed = er.panels;
  out.imagAbs = std::abs(er.total.imag());
  return out;
}

}  // namespace fockcp
