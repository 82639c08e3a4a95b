#include "vgt/scan.hpp"

#include <algorithm>
#include <sstream>

#include "vgt/scidec.hpp"

namespace vgt {

namespace {

// rational stand-in for (v/u)^(1/segments), good enough for grid layout
Rat geometric_ratio(const Rat& u, const Rat& v, unsigned segments) {
  return root_enclosure(v / u, segments, Rat(Int(1), Int::ten_pow(12))).mid();
}

std::vector<Rat> geometric_points(const Rat& c_lo, const Rat& c_hi, unsigned count) {
  std::vector<Rat> pts;
  pts.reserve(count);
  Rat u = c_lo - Rat(1);
  Rat v = c_hi - Rat(1);
  if (count == 1 || !(u < v)) {
    pts.push_back(c_lo);
    return pts;
  }
  Rat r = geometric_ratio(u, v, count - 1);
  Rat acc = u;
  pts.push_back(c_lo);
  for (unsigned i = 1; i + 1 < count; ++i) {
    acc = acc * r;
    pts.push_back(Rat(1) + acc);
  }
  pts.push_back(c_hi);
  return pts;
}

Enc beta_value(unsigned k, unsigned n, const Rat& c, Variant v, const Rat& rel_width) {
  return beta_eval(k, n, c, v, rel_width).value;
}

// single dip: midpoints never rise before the minimum and never fall after
bool single_dip(const std::vector<ProfilePoint>& profile) {
  bool rising = false;
  for (size_t i = 1; i < profile.size(); ++i) {
    Rat prev = profile[i - 1].beta.mid();
    Rat cur = profile[i].beta.mid();
    if (cur > prev) rising = true;
    if (cur < prev && rising) return false;
  }
  return true;
}

std::string beta_str(const Rat& v, unsigned digits) {
  bool om = Rat(1, 2) < v && v < Rat(1);
  return to_scidec(v, digits, om).str();
}

}  // namespace

std::string spacing_name(GridSpacing s) {
  switch (s) {
    case GridSpacing::LinearC: return "linear-c";
    case GridSpacing::LinearInverse: return "linear-inv";
    default: return "log";
  }
}

GridSpacing spacing_from_string(const std::string& s) {
  if (s == "linear-c") return GridSpacing::LinearC;
  if (s == "linear-inv") return GridSpacing::LinearInverse;
  if (s == "log") return GridSpacing::LogC1;
  throw usage_error("unknown spacing '" + s + "' (expected linear-c, linear-inv or log)");
}

std::vector<Rat> make_grid(const GridSpec& g) {
  if (!(g.c_min > Rat(1))) throw domain_error("grid requires c_min > 1");
  if (g.c_max < g.c_min) throw domain_error("grid requires c_max >= c_min");
  if (g.steps < 1) throw domain_error("grid requires at least one step");
  std::vector<Rat> pts;
  if (g.steps == 1 || g.c_min == g.c_max) {
    pts.push_back(g.c_min);
    return pts;
  }
  switch (g.spacing) {
    case GridSpacing::LinearC: {
      Rat step = (g.c_max - g.c_min) / Rat(static_cast<long>(g.steps - 1));
      for (unsigned i = 0; i < g.steps; ++i)
        pts.push_back(i + 1 == g.steps ? g.c_max : g.c_min + step * Rat(static_cast<long>(i)));
      break;
    }
    case GridSpacing::LinearInverse: {
      Rat w_hi = (g.c_min - Rat(1)).inverse();
      Rat w_lo = (g.c_max - Rat(1)).inverse();
      Rat step = (w_hi - w_lo) / Rat(static_cast<long>(g.steps - 1));
      for (unsigned i = 0; i < g.steps; ++i) {
        if (i + 1 == g.steps) {
          pts.push_back(g.c_max);
        } else {
          Rat w = w_hi - step * Rat(static_cast<long>(i));
          pts.push_back(Rat(1) + w.inverse());
        }
      }
      break;
    }
    case GridSpacing::LogC1:
      pts = geometric_points(g.c_min, g.c_max, g.steps);
      break;
  }
  return pts;
}

std::string ScanResult::csv(unsigned digits) const {
  std::ostringstream os;
  os << "c,beta_lo,beta_hi\n";
  auto row = [&os, digits](const ProfilePoint& p) {
    os << p.c.str() << "," << beta_str(p.beta.lo(), digits) << ","
       << beta_str(p.beta.hi(), digits) << "\n";
  };
  size_t ri = 0;
  for (const auto& p : profile) {
    while (ri < refined.size() && refined[ri].c < p.c) row(refined[ri++]);
    row(p);
  }
  while (ri < refined.size()) row(refined[ri++]);
  return os.str();
}

ScanResult scan(unsigned k, unsigned n, Variant v, const GridSpec& g, const Rat& rel_width) {
  ScanResult res;
  res.k = k;
  res.n = n;
  res.variant = v;
  res.grid = g;

  std::vector<Rat> pts = make_grid(g);
  res.profile.reserve(pts.size());
  for (const Rat& c : pts) res.profile.push_back({c, beta_value(k, n, c, v, rel_width)});

  auto better = [](const ProfilePoint& a, const ProfilePoint& b) {
    return a.beta.hi() < b.beta.hi();
  };
  size_t best = 0;
  for (size_t i = 1; i < res.profile.size(); ++i)
    if (better(res.profile[i], res.profile[best])) best = i;

  res.best_c = res.profile[best].c;
  res.best_beta = res.profile[best].beta;
  for (const auto& p : res.profile) res.best_beta = Enc::min(res.best_beta, p.beta);

  res.unimodal = single_dip(res.profile);
  if (!res.unimodal || res.profile.size() < 3) return res;

  // three rounds of 21-point shrink around the best point: bracket width
  // drops by roughly a decade per round
  Rat lo_c = res.profile[best > 0 ? best - 1 : 0].c;
  Rat hi_c = res.profile[std::min(best + 1, res.profile.size() - 1)].c;
  ProfilePoint champion = res.profile[best];
  for (int round = 0; round < 3; ++round) {
    std::vector<Rat> sub = geometric_points(lo_c, hi_c, 21);
    std::vector<ProfilePoint> vals;
    vals.reserve(sub.size());
    for (const Rat& c : sub) {
      ProfilePoint p{c, beta_value(k, n, c, v, rel_width)};
      res.best_beta = Enc::min(res.best_beta, p.beta);
      vals.push_back(std::move(p));
    }
    size_t b = 0;
    for (size_t i = 1; i < vals.size(); ++i)
      if (better(vals[i], vals[b])) b = i;
    if (better(vals[b], champion)) champion = vals[b];
    lo_c = vals[b > 0 ? b - 1 : 0].c;
    hi_c = vals[std::min(b + 1, vals.size() - 1)].c;
    for (auto& p : vals) res.refined.push_back(std::move(p));
  }
  std::sort(res.refined.begin(), res.refined.end(),
            [](const ProfilePoint& a, const ProfilePoint& b) { return a.c < b.c; });
  res.refined.erase(std::unique(res.refined.begin(), res.refined.end(),
                                [](const ProfilePoint& a, const ProfilePoint& b) {
                                  return a.c == b.c;
                                }),
                    res.refined.end());
  res.best_c = champion.c;
  return res;
}

std::string GapReport::text(unsigned digits) const {
  std::ostringstream os;
  os << "gap report k=" << k << " n=" << n << " variant=" << variant_name(variant) << "\n";
  os << "  scanned inf: " << enc_str(inf_estimate, digits, true) << "\n";
  os << "  1 - eps:     " << enc_str(one_minus_eps, digits, true) << "\n";
  os << "  relative gap ((inf - (1-eps))/eps) in [" << beta_str(rel_gap_lo, digits) << ", "
     << beta_str(rel_gap_hi, digits) << "]\n";
  os << "  inf >= 1 - eps: " << (certified_lower_bound ? "certified" : "not certified") << "\n";
  return os.str();
}

GapReport gap_report(unsigned k, unsigned n, Variant v) {
  if (k < 2) throw domain_error("gap report requires k >= 2");
  GapReport rep;
  rep.k = k;
  rep.n = n;
  rep.variant = v;

  ScanResult sc = scan(k, n, v);
  Enc eps = epsilon_kn(k, n, v);
  rep.inf_estimate = sc.best_beta;
  rep.one_minus_eps = Enc::one_minus(eps);

  Enc gap = rep.inf_estimate - rep.one_minus_eps;
  Rat a = gap.lo() / eps.lo();
  Rat b = gap.lo() / eps.hi();
  rep.rel_gap_lo = a < b ? a : b;
  a = gap.hi() / eps.lo();
  b = gap.hi() / eps.hi();
  rep.rel_gap_hi = a > b ? a : b;
  rep.certified_lower_bound = rep.inf_estimate.lo() >= rep.one_minus_eps.hi();
  return rep;
}

}  // namespace vgt
