#include "hemifill/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hemifill/errors.hpp"
#include "hemifill/quadrature.hpp"

namespace hemifill {

namespace {

// Defect profile G(theta) = (mu - nu)([0, theta)), piecewise linear between
// merged breakpoints with jumps at atoms. g_left is the left-continuous
// value at a breakpoint, g_start the value just after its jump.
struct Profile {
  std::vector<double> pts;
  std::vector<double> g_left;
  std::vector<double> g_start;
  std::vector<double> slope;
  std::vector<double> len;

  double g_wrap() const {  // left-continuous value at 2*pi
    return g_start.back() + slope.back() * len.back();
  }

  // Left-continuous G at an arbitrary angle in [0, 2*pi).
  double at(double theta) const {
    auto it = std::upper_bound(pts.begin(), pts.end(), theta);
    const std::size_t i = static_cast<std::size_t>(it - pts.begin()) - 1;
    if (theta == pts[i]) return g_left[i];
    return g_start[i] + slope[i] * (theta - pts[i]);
  }
};

std::vector<double> merged_breakpoints(const CircularMeasure& mu,
                                       const CircularMeasure& nu) {
  std::vector<double> pts;
  pts.reserve(mu.grid_size() + nu.grid_size() + mu.atoms().size() +
              nu.atoms().size());
  const double wm = mu.cell_width();
  for (std::size_t k = 0; k < mu.grid_size(); ++k)
    pts.push_back(static_cast<double>(k) * wm);
  const double wn = nu.cell_width();
  for (std::size_t k = 0; k < nu.grid_size(); ++k)
    pts.push_back(static_cast<double>(k) * wn);
  for (const auto& a : mu.atoms()) pts.push_back(a.pos);
  for (const auto& a : nu.atoms()) pts.push_back(a.pos);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double atom_mass_at(const std::vector<Atom>& atoms, double pos) {
  auto it = std::lower_bound(
      atoms.begin(), atoms.end(), pos,
      [](const Atom& a, double p) { return a.pos < p; });
  double m = 0.0;
  for (; it != atoms.end() && it->pos == pos; ++it) m += it->mass;
  return m;
}

double density_at(const CircularMeasure& mu, double theta) {
  const double w = mu.cell_width();
  const std::size_t k = std::min(static_cast<std::size_t>(theta / w),
                                 mu.grid_size() - 1);
  return mu.density()[k];
}

Profile build_profile(const CircularMeasure& mu, const CircularMeasure& nu) {
  Profile p;
  p.pts = merged_breakpoints(mu, nu);
  const std::size_t k = p.pts.size();
  p.g_left.resize(k);
  p.g_start.resize(k);
  p.slope.resize(k);
  p.len.resize(k);
  double g = 0.0;  // G(0) = 0 by definition; pts[0] == 0 (cell boundary)
  for (std::size_t i = 0; i < k; ++i) {
    p.g_left[i] = g;
    g += atom_mass_at(mu.atoms(), p.pts[i]) -
         atom_mass_at(nu.atoms(), p.pts[i]);
    p.g_start[i] = g;
    const double next = i + 1 < k ? p.pts[i + 1] : kTwoPi;
    p.len[i] = next - p.pts[i];
    const double mid = p.pts[i] + 0.5 * p.len[i];
    p.slope[i] = density_at(mu, mid) - density_at(nu, mid);
    g += p.slope[i] * p.len[i];
  }
  return p;
}

// Lebesgue measure of {G <= level}.
double measure_below(const Profile& p, double level) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.pts.size(); ++i) {
    const double g0 = p.g_start[i];
    const double g1 = p.g_start[i] + p.slope[i] * p.len[i];
    const double lo = std::min(g0, g1);
    const double hi = std::max(g0, g1);
    if (hi <= level) {
      acc += p.len[i];
    } else if (lo < level) {
      acc += p.len[i] * (level - lo) / (hi - lo);
    }
  }
  return acc;
}

// Smallest level whose sublevel set has measure >= pi. The measure function
// is piecewise linear in the level with kinks at segment endpoint values, so
// a kink scan plus one linear solve is exact.
double median_level(const Profile& p) {
  std::vector<double> lv;
  lv.reserve(2 * p.pts.size());
  for (std::size_t i = 0; i < p.pts.size(); ++i) {
    lv.push_back(p.g_start[i]);
    lv.push_back(p.g_start[i] + p.slope[i] * p.len[i]);
  }
  std::sort(lv.begin(), lv.end());
  lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
  if (measure_below(p, lv.front()) >= kPi) return lv.front();
  std::size_t lo = 0, hi = lv.size() - 1;  // m(lv[lo]) < pi <= m(lv[hi])
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (measure_below(p, lv[mid]) >= kPi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double coef = 0.0;  // d(measure)/d(level) on the open interval
  for (std::size_t i = 0; i < p.pts.size(); ++i) {
    const double g0 = p.g_start[i];
    const double g1 = p.g_start[i] + p.slope[i] * p.len[i];
    const double a = std::min(g0, g1);
    const double b = std::max(g0, g1);
    if (a <= lv[lo] && b >= lv[hi] && b > a) coef += p.len[i] / (b - a);
  }
  if (coef <= 0.0) return lv[hi];
  const double mid = 0.5 * (lv[lo] + lv[hi]);
  const double c = mid + (kPi - measure_below(p, mid)) / coef;
  return std::clamp(c, lv[lo], lv[hi]);
}

struct RefinedArcs {
  // Tagged half-open arcs covering [0, 2*pi) in order.
  std::vector<double> start;
  std::vector<double> end;
  std::vector<int> tag;  // 0 = M (defect <= 0), 1 = N
  std::vector<double> candidates;
};

RefinedArcs build_arcs(const Profile& p, double level) {
  constexpr double kLevelEps = 1e-13;
  struct Piece {
    double a, b;
    int kind;  // 0 below, 1 above, 2 at level
  };
  std::vector<Piece> pieces;
  std::vector<double> cand;
  for (std::size_t i = 0; i < p.pts.size(); ++i) {
    if (p.len[i] == 0.0) continue;
    const double a = p.pts[i];
    const double b = a + p.len[i];
    const double g0 = p.g_start[i] - level;
    const double g1 = p.g_start[i] + p.slope[i] * p.len[i] - level;
    if (std::fabs(p.g_left[i] - level) <= kLevelEps) cand.push_back(a);
    if (std::fabs(g0) <= kLevelEps && std::fabs(g1) <= kLevelEps) {
      pieces.push_back({a, b, 2});
    } else if (g0 <= 0.0 && g1 <= 0.0) {
      pieces.push_back({a, b, 0});
    } else if (g0 >= 0.0 && g1 >= 0.0) {
      pieces.push_back({a, b, 1});
    } else {
      const double x = a + p.len[i] * g0 / (g0 - g1);
      cand.push_back(x);
      pieces.push_back({a, x, g0 < 0.0 ? 0 : 1});
      pieces.push_back({x, b, g1 < 0.0 ? 0 : 1});
    }
  }
  if (std::fabs(p.g_wrap() - level) <= kLevelEps) cand.push_back(0.0);

  double below_len = 0.0, equal_len = 0.0;
  for (const auto& q : pieces) {
    if (q.kind == 0) below_len += q.b - q.a;
    if (q.kind == 2) equal_len += q.b - q.a;
  }
  double need = kPi - below_len;
  if (need < -1e-9 || need > equal_len + 1e-9) {
    std::ostringstream msg;
    msg << "balanced cut partition failed: below " << below_len
        << ", at level " << equal_len;
    throw SolverError(msg.str());
  }
  need = std::clamp(need, 0.0, equal_len);

  RefinedArcs out;
  for (const auto& q : pieces) {
    double a = q.a;
    const double len = q.b - q.a;
    int tag;
    if (q.kind == 2) {
      // Points at the median level carry no defect either way; split them so
      // the two sides have arc length pi each, earlier coordinates first.
      cand.push_back(wrap_angle(q.b));
      if (need >= len) {
        tag = 0;
        need -= len;
      } else if (need > 0.0) {
        const double x = q.a + need;
        cand.push_back(x);
        out.start.push_back(q.a);
        out.end.push_back(x);
        out.tag.push_back(0);
        a = x;
        need = 0.0;
        tag = 1;
      } else {
        tag = 1;
      }
    } else {
      tag = q.kind;
    }
    out.start.push_back(a);
    out.end.push_back(q.b);
    out.tag.push_back(tag);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  out.candidates = std::move(cand);
  return out;
}

DualPotential build_potential(const RefinedArcs& arcs) {
  std::vector<double> nodes, values;
  std::vector<int> slopes;
  double v = 0.0;
  for (std::size_t i = 0; i < arcs.start.size(); ++i) {
    const int s = arcs.tag[i] == 0 ? 1 : -1;
    if (!slopes.empty() && slopes.back() == s) {
      v += s * (arcs.end[i] - arcs.start[i]);
      continue;
    }
    nodes.push_back(arcs.start[i]);
    values.push_back(v);
    slopes.push_back(s);
    v += s * (arcs.end[i] - arcs.start[i]);
  }
  return DualPotential(std::move(nodes), std::move(values), std::move(slopes));
}

double integrate_potential(const DualPotential& f, const CircularMeasure& mu) {
  double acc = 0.0;
  for (const auto& a : mu.atoms()) acc += a.mass * f(a.pos);
  const double w = mu.cell_width();
  for (std::size_t k = 0; k < mu.grid_size(); ++k) {
    const double rho = mu.density()[k];
    if (rho == 0.0) continue;
    const double a = static_cast<double>(k) * w;
    acc += rho * f.integral(a, a + w);
  }
  return acc;
}

}  // namespace

DualPotential::DualPotential(std::vector<double> nodes,
                             std::vector<double> values,
                             std::vector<int> slopes)
    : nodes_(std::move(nodes)),
      values_(std::move(values)),
      slopes_(std::move(slopes)) {
  if (nodes_.empty() || nodes_.size() != values_.size() ||
      nodes_.size() != slopes_.size() || nodes_[0] != 0.0) {
    throw InputError("malformed dual potential");
  }
}

std::size_t DualPotential::locate(double theta) const {
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), theta);
  return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

double DualPotential::operator()(double theta) const {
  const double t = wrap_angle(theta);
  const std::size_t i = locate(t);
  return values_[i] + slopes_[i] * (t - nodes_[i]);
}

double DualPotential::integral(double a, double b) const {
  if (b < a || b - a > kTwoPi + kSeamTol) {
    throw InputError("potential integral needs a <= b <= a + 2*pi");
  }
  if (a < 0.0 || b > kTwoPi) {
    const double s = wrap_angle(a);
    const double split = std::min(s + (b - a), kTwoPi);
    double acc = integral(s, split);
    if (split < s + (b - a)) acc += integral(0.0, s + (b - a) - kTwoPi);
    return acc;
  }
  double acc = 0.0;
  std::size_t i = locate(a);
  double x = a;
  double fx = values_[i] + slopes_[i] * (x - nodes_[i]);
  while (x < b) {
    const double arc_end = i + 1 < nodes_.size() ? nodes_[i + 1] : kTwoPi;
    const double xe = std::min(b, arc_end);
    const double fe = values_[i] + slopes_[i] * (xe - nodes_[i]);
    acc += 0.5 * (fx + fe) * (xe - x);
    x = xe;
    fx = fe;
    ++i;
  }
  return acc;
}

double BalancedCut::m_length() const {
  double acc = 0.0;
  for (const auto& [a, b] : m_arcs) acc += b - a;
  return acc;
}

double BalancedCut::n_length() const {
  double acc = 0.0;
  for (const auto& [a, b] : n_arcs) acc += b - a;
  return acc;
}

TransportResult w1_circle(const CircularMeasure& mu,
                          const CircularMeasure& nu) {
  const Profile profile = build_profile(mu, nu);
  const double level = median_level(profile);
  const RefinedArcs arcs = build_arcs(profile, level);

  TransportResult out;
  out.cut.level = level;
  if (arcs.candidates.empty()) {
    // Numerically the level can sit a hair off every breakpoint value; fall
    // back to the nearest one.
    double best = 0.0, gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < profile.pts.size(); ++i) {
      const double d = std::fabs(profile.g_left[i] - level);
      if (d < gap) {
        gap = d;
        best = profile.pts[i];
      }
    }
    if (gap > 1e-9) throw SolverError("no balanced cut candidate found");
    out.cut.cut = best;
  } else {
    out.cut.cut = arcs.candidates.front();
  }
  for (std::size_t i = 0; i < arcs.start.size(); ++i) {
    auto& side = arcs.tag[i] == 0 ? out.cut.m_arcs : out.cut.n_arcs;
    if (!side.empty() && side.back().second == arcs.start[i]) {
      side.back().second = arcs.end[i];
    } else {
      side.emplace_back(arcs.start[i], arcs.end[i]);
    }
  }
  out.potential = build_potential(arcs);
  out.distance =
      integrate_potential(out.potential, mu) - integrate_potential(out.potential, nu);
  return out;
}

std::vector<double> balanced_cut_candidates(const CircularMeasure& mu,
                                            const CircularMeasure& nu) {
  const Profile profile = build_profile(mu, nu);
  const double level = median_level(profile);
  return build_arcs(profile, level).candidates;
}

bool validate_balanced_cut(const CircularMeasure& mu, const CircularMeasure& nu,
                           const BalancedCut& cut, double tol) {
  if (std::fabs(cut.m_length() - kPi) > tol ||
      std::fabs(cut.n_length() - kPi) > tol) {
    return false;
  }
  const Profile profile = build_profile(mu, nu);
  const double level = profile.at(wrap_angle(cut.cut));

  // G jumps at atoms, so each arc is judged by one-sided limits into it: the
  // right limit at its start, the left limit at its end, and both limits at
  // every breakpoint strictly inside. G is linear in between, so these points
  // carry the extrema.
  auto left_at = [&profile](double x) {
    return x >= kTwoPi ? profile.g_wrap() : profile.at(x);
  };
  auto right_at = [&profile](double x) {
    auto it = std::upper_bound(profile.pts.begin(), profile.pts.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - profile.pts.begin()) - 1;
    if (x == profile.pts[i]) return profile.g_start[i];
    return profile.g_start[i] + profile.slope[i] * (x - profile.pts[i]);
  };
  auto arcs_hold = [&](const std::vector<std::pair<double, double>>& arcs,
                       double sign) {
    for (const auto& [a, b] : arcs) {
      if (b <= a) return false;
      if (sign * (right_at(a) - level) > tol) return false;
      if (sign * (left_at(b) - level) > tol) return false;
      for (double p : profile.pts) {
        if (p <= a || p >= b) continue;
        if (sign * (left_at(p) - level) > tol) return false;
        if (sign * (right_at(p) - level) > tol) return false;
      }
    }
    return true;
  };
  return arcs_hold(cut.m_arcs, 1.0) && arcs_hold(cut.n_arcs, -1.0);
}

double w1_cdf_shift(const CircularMeasure& mu, const CircularMeasure& nu) {
  // CDF difference profile D = F_mu - F_nu as linear segments; atoms only
  // produce jumps between segments and carry no arc length themselves.
  const std::vector<double> pts = merged_breakpoints(mu, nu);
  const std::size_t k = pts.size();
  std::vector<double> d0(k), d1(k), len(k);
  double running = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    running += atom_mass_at(mu.atoms(), pts[i]) -
               atom_mass_at(nu.atoms(), pts[i]);
    d0[i] = running;
    const double next = i + 1 < k ? pts[i + 1] : kTwoPi;
    len[i] = next - pts[i];
    const double mid = pts[i] + 0.5 * len[i];
    running += (density_at(mu, mid) - density_at(nu, mid)) * len[i];
    d1[i] = running;
  }

  // Weighted median of D under arc length: sweep the candidate shift values
  // keeping the measure of {D <= c} as a running linear function of c.
  struct Event {
    double level;
    double flat_len;   // flat segments finishing at this level
    double coef_in;    // slope-density entering
    double coef_out;   // slope-density leaving (segment fully below)
    double lin_in;     // entering coef * lo
    double lin_out;
  };
  std::vector<double> levels;
  levels.reserve(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (len[i] == 0.0) continue;
    levels.push_back(std::min(d0[i], d1[i]));
    levels.push_back(std::max(d0[i], d1[i]));
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto level_index = [&levels](double v) {
    return static_cast<std::size_t>(
        std::lower_bound(levels.begin(), levels.end(), v) - levels.begin());
  };
  std::vector<Event> ev(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) ev[i].level = levels[i];
  for (std::size_t i = 0; i < k; ++i) {
    if (len[i] == 0.0) continue;
    const double lo = std::min(d0[i], d1[i]);
    const double hi = std::max(d0[i], d1[i]);
    if (hi == lo) {
      ev[level_index(lo)].flat_len += len[i];
    } else {
      const double c = len[i] / (hi - lo);
      ev[level_index(lo)].coef_in += c;
      ev[level_index(lo)].lin_in += c * lo;
      ev[level_index(hi)].coef_out += c;
      ev[level_index(hi)].lin_out += c * lo;
    }
  }
  double shift = levels.back();
  double finished = 0.0, coef = 0.0, lin = 0.0;
  bool found = false;
  for (std::size_t i = 0; i < ev.size() && !found; ++i) {
    finished += ev[i].flat_len + ev[i].coef_out * ev[i].level - ev[i].lin_out;
    coef += ev[i].coef_in - ev[i].coef_out;
    lin += ev[i].lin_in - ev[i].lin_out;
    const double here = finished + coef * ev[i].level - lin;
    if (here >= kPi) {
      shift = ev[i].level;
      found = true;
      break;
    }
    if (i + 1 < ev.size() && coef > 0.0) {
      const double there = finished + coef * ev[i + 1].level - lin;
      if (there >= kPi) {
        shift = (kPi - finished + lin) / coef;
        found = true;
      }
    }
  }

  double acc = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (len[i] == 0.0) continue;
    const double u0 = d0[i] - shift;
    const double u1 = d1[i] - shift;
    if (u0 * u1 >= 0.0) {
      acc += len[i] * 0.5 * (std::fabs(u0) + std::fabs(u1));
    } else {
      acc += len[i] * 0.5 * (u0 * u0 + u1 * u1) / std::fabs(u1 - u0);
    }
  }
  return acc;
}

LpSolution transport_lp(const std::vector<double>& cost,
                        const std::vector<double>& supply,
                        const std::vector<double>& demand) {
  const std::size_t m = supply.size();
  const std::size_t n = demand.size();
  if (m == 0 || n == 0 || cost.size() != m * n) {
    throw InputError("transport LP shape mismatch");
  }
  double total_a = 0.0, total_b = 0.0;
  for (double v : supply) {
    if (v < 0.0) throw InputError("negative supply");
    total_a += v;
  }
  for (double v : demand) {
    if (v < 0.0) throw InputError("negative demand");
    total_b += v;
  }
  for (double c : cost) {
    if (!(c >= 0.0)) throw InputError("transport costs must be nonnegative");
  }
  if (std::fabs(total_a - total_b) > 1e-12 * std::max(1.0, total_a)) {
    throw InputError("transport LP supplies and demands do not balance");
  }

  LpSolution sol;
  sol.rows = m;
  sol.cols = n;
  sol.coupling.assign(m * n, 0.0);

  constexpr double kActive = 1e-15;
  const std::size_t v = m + n;
  std::vector<double> a(supply), b(demand), pot(v, 0.0), dist(v);
  std::vector<int> parent(v);
  std::vector<char> done(v);
  double remaining = total_a;
  const std::size_t max_phase = 64 * v + 256;
  const double inf = std::numeric_limits<double>::infinity();

  for (std::size_t phase = 0; remaining > 1e-14; ++phase) {
    if (phase >= max_phase) {
      throw SolverError("transport LP exceeded its augmentation budget");
    }
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] > kActive) dist[i] = 0.0;
    }
    // Dense Dijkstra over sources and sinks with reduced costs.
    for (std::size_t round = 0; round < v; ++round) {
      std::size_t u = v;
      double best = inf;
      for (std::size_t w = 0; w < v; ++w) {
        if (!done[w] && dist[w] < best) {
          best = dist[w];
          u = w;
        }
      }
      if (u == v) break;
      done[u] = 1;
      if (u < m) {
        for (std::size_t j = 0; j < n; ++j) {
          const double rc =
              std::max(0.0, cost[u * n + j] + pot[u] - pot[m + j]);
          if (dist[u] + rc < dist[m + j]) {
            dist[m + j] = dist[u] + rc;
            parent[m + j] = static_cast<int>(u);
          }
        }
      } else {
        const std::size_t j = u - m;
        for (std::size_t i = 0; i < m; ++i) {
          if (sol.coupling[i * n + j] <= 0.0) continue;
          const double rc =
              std::max(0.0, -cost[i * n + j] + pot[m + j] - pot[i]);
          if (dist[u] + rc < dist[i]) {
            dist[i] = dist[u] + rc;
            parent[i] = static_cast<int>(u);
          }
        }
      }
    }
    std::size_t t = v;
    double best = inf;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] > kActive && dist[m + j] < best) {
        best = dist[m + j];
        t = m + j;
      }
    }
    if (t == v) {
      throw SolverError("transport LP ran out of augmenting paths");
    }
    for (std::size_t w = 0; w < v; ++w) {
      pot[w] += std::min(dist[w], dist[t]);
    }
    double delta = b[t - m];
    std::size_t node = t;
    while (parent[node] >= 0) {
      const std::size_t prev = static_cast<std::size_t>(parent[node]);
      if (prev >= m && node < m) {
        delta = std::min(delta, sol.coupling[node * n + (prev - m)]);
      }
      node = prev;
    }
    delta = std::min(delta, a[node]);
    if (!(delta > 0.0)) {
      throw SolverError("transport LP produced an empty augmentation");
    }
    std::size_t cur = t;
    while (parent[cur] >= 0) {
      const std::size_t prev = static_cast<std::size_t>(parent[cur]);
      if (prev < m) {
        sol.coupling[prev * n + (cur - m)] += delta;
      } else {
        sol.coupling[cur * n + (prev - m)] -= delta;
      }
      cur = prev;
    }
    a[cur] -= delta;
    b[t - m] -= delta;
    remaining -= delta;
  }

  sol.cost = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sol.cost += sol.coupling[i * n + j] * cost[i * n + j];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += sol.coupling[i * n + j];
    if (std::fabs(row - supply[i]) > 1e-12) {
      throw SolverError("transport LP row marginal drifted past 1e-12");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m; ++i) col += sol.coupling[i * n + j];
    if (std::fabs(col - demand[j]) > 1e-12) {
      throw SolverError("transport LP column marginal drifted past 1e-12");
    }
  }
  return sol;
}

LpSolution lp_oracle(const CircularMeasure& mu, const CircularMeasure& nu) {
  if (mu.density_cdf(kTwoPi) > 1e-15 || nu.density_cdf(kTwoPi) > 1e-15) {
    throw InputError("lp_oracle handles atoms-only measures");
  }
  const auto& am = mu.atoms();
  const auto& an = nu.atoms();
  if (am.size() > 256 || an.size() > 256) {
    throw InputError("lp_oracle instances are capped at 256 atoms per side");
  }
  if (am.empty() || an.empty()) throw InputError("lp_oracle needs atoms");
  std::vector<double> cost(am.size() * an.size());
  std::vector<double> supply(am.size()), demand(an.size());
  for (std::size_t i = 0; i < am.size(); ++i) supply[i] = am[i].mass;
  for (std::size_t j = 0; j < an.size(); ++j) demand[j] = an[j].mass;
  for (std::size_t i = 0; i < am.size(); ++i) {
    for (std::size_t j = 0; j < an.size(); ++j) {
      cost[i * an.size() + j] = circle_distance(am[i].pos, an[j].pos);
    }
  }
  return transport_lp(cost, supply, demand);
}

double dirac_distance_formula(double x, const CircularMeasure& mu) {
  const double pos = wrap_angle(x);
  return integrate_against(
      mu, [pos](double t) { return circle_distance(pos, t); }, 1e-10);
}

}  // namespace hemifill
