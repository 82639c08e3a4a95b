#pragma once

#include <string>
#include <vector>

#include "vgt/beta.hpp"

namespace vgt {

enum class GridSpacing { LinearC, LinearInverse, LogC1 };
std::string spacing_name(GridSpacing s);
GridSpacing spacing_from_string(const std::string& s);

// Defaults follow the crossing-point scale: log-spaced in c-1 over
// [10^-3, 10^9].
struct GridSpec {
  Rat c_min = Rat(1) + Rat(Int(1), Int::ten_pow(3));
  Rat c_max = Rat(1) + Rat(Int::ten_pow(9));
  unsigned steps = 49;
  GridSpacing spacing = GridSpacing::LogC1;
};

// exact rational grid points, ascending; c_min > 1 required
std::vector<Rat> make_grid(const GridSpec& g);

struct ProfilePoint {
  Rat c;
  Enc beta;
};

struct ScanResult {
  unsigned k = 0;
  unsigned n = 0;
  Variant variant = Variant::Section3;
  GridSpec grid;
  std::vector<ProfilePoint> profile;  // base grid, ascending in c
  std::vector<ProfilePoint> refined;  // refinement points, ascending in c
  Rat best_c;
  Enc best_beta;        // endpoint-wise minimum over every evaluated point
  bool unimodal = true; // false: profile returned with a warning, no refinement

  // columns: c (rational string), beta_lo, beta_hi (SciDec)
  std::string csv(unsigned digits = 3) const;
};

// Evaluates beta over the grid and, when the profile has the expected
// single-dip shape, shrinks around the best grid point for three extra
// decades of bracket width.
ScanResult scan(unsigned k, unsigned n, Variant v, const GridSpec& g = GridSpec{},
                const Rat& rel_width = default_rel_width());

struct GapReport {
  unsigned k = 0;
  unsigned n = 0;
  Variant variant = Variant::Section3;
  Enc inf_estimate;
  Enc one_minus_eps;
  Rat rel_gap_lo;  // (inf - (1 - eps)) / eps, outer bounds
  Rat rel_gap_hi;
  bool certified_lower_bound = false;  // inf >= 1 - eps proven endpoint-wise

  std::string text(unsigned digits = 3) const;
};

// Quantifies the gap between the scanned infimum of beta and the unattained
// limit 1 - eps_{k,n}; k >= 2.
GapReport gap_report(unsigned k, unsigned n, Variant v);

}  // namespace vgt
