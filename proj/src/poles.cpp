// Copyright 2026 the recurzeta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "recurzeta/poles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "recurzeta/errors.hpp"

namespace recurzeta {

namespace {

BallReal root_arg_or_throw(const BallComplex& z, Prec prec) {
  try {
    if (z.is_real_exact()) {
      if (z.re.is_positive()) return BallReal(prec);
      if (z.re.is_negative()) return BallReal::pi(prec);
      throw DomainError("root enclosure contains zero");
    }
    return carg(z);
  } catch (const DomainError&) {
    throw PrecisionExhausted("root argument straddles the branch cut");
  }
}

struct PoleGeometry {
  Prec prec;
  BallReal log_a1;
  BallReal two_pi;
  std::vector<BallReal> logmods;  // log |alpha_i|, i >= 2
  std::vector<BallReal> args;     // arg alpha_i, i >= 2

  explicit PoleGeometry(const RootSet& roots) : prec(std::max<Prec>(roots.precision_bits + 64, 128)) {
    const BallComplex& a1 = roots.roots[0];
    if (!a1.is_real_exact() || !a1.re.is_positive())
      throw HypothesesNotMet("pole formulas require a certified real dominant root > 1");
    log_a1 = log(a1.re);
    two_pi = BallReal::pi(prec) + BallReal::pi(prec);
    for (int i = 1; i < roots.count(); ++i) {
      logmods.push_back(log(roots.roots[i].abs()));
      args.push_back(root_arg_or_throw(roots.roots[i], prec));
    }
  }

  // numerators of Re and Im/2pi-part for a multi-index
  std::pair<BallReal, BallReal> numerators(const MultiIndex& k, int r) const {
    std::vector<long> e = multi_index_exponents(k, r);
    const long k1 = k.k.empty() ? 0 : k.k[0];
    BallReal lnum = BallReal::from_si(-k1, prec) * log_a1;
    BallReal anum(prec);
    for (size_t i = 0; i < e.size(); ++i) {
      lnum += BallReal::from_si(e[i], prec) * logmods[i];
      anum += BallReal::from_si(e[i], prec) * args[i];
    }
    return {lnum, anum};
  }

  BallComplex location(const MultiIndex& k, long n, int r) const {
    auto [lnum, anum] = numerators(k, r);
    BallReal re = lnum / log_a1;
    BallReal im = (anum + BallReal::from_si(n, prec) * two_pi) / log_a1;
    return {re, im};
  }
};

}  // namespace

std::string to_string(Classification c) {
  return c == Classification::SimplePole ? "simple_pole" : "removable_candidate";
}

BallComplex pole_location(const RootSet& roots, const PoleTuple& t) {
  PoleGeometry g(roots);
  return g.location(t.k, t.n, roots.count());
}

std::vector<PoleGroup> enumerate_poles(const NormalizedSequence& ns, const Window& w,
                                       double merge_tol, long max_tuples) {
  if (!(w.re_min <= w.re_max && w.im_min <= w.im_max))
    throw ValidationError("window bounds must be ordered");
  const int r = ns.roots.count();
  PoleGeometry geom(ns.roots);
  const Prec prec = geom.prec;

  // k1 is bounded through Re(s) <= -k1 (1 - log mu / log alpha_1).
  long k1_max = 0;
  if (r > 1 && w.re_min < 0) {
    BallReal mu(prec);
    for (int i = 1; i < r; ++i) mu = max_upper(mu, ns.roots.roots[i].abs());
    BallReal delta = BallReal::from_si(1, prec) - log(mu) / geom.log_a1;
    double dl = delta.lower().mid_d();
    if (dl <= 0) throw PrecisionExhausted("no certified modulus gap for enumeration");
    k1_max = static_cast<long>(std::floor(-w.re_min / dl)) + 1;
  }

  struct Located {
    PoleTuple t;
    BallComplex loc;
  };
  std::vector<Located> found;
  mpq_class re_min_q(w.re_min), re_max_q(w.re_max), im_min_q(w.im_min), im_max_q(w.im_max);

  auto consider = [&](const MultiIndex& mi) {
    auto [lnum, anum] = geom.numerators(mi, r);
    BallReal re = lnum / geom.log_a1;
    auto [re_lo, re_hi] = re.interval_q();
    if (re_hi < re_min_q || re_lo > re_max_q) return;
    // n range: im = (anum + 2 pi n)/log a1 in [im_min, im_max]
    double la = geom.log_a1.mid_d();
    double an = anum.mid_d();
    long n_lo = static_cast<long>(std::floor((w.im_min * la - an) / (2 * M_PI))) - 1;
    long n_hi = static_cast<long>(std::ceil((w.im_max * la - an) / (2 * M_PI))) + 1;
    for (long n = n_lo; n <= n_hi; ++n) {
      BallReal im = (anum + BallReal::from_si(n, prec) * geom.two_pi) / geom.log_a1;
      auto [im_lo, im_hi] = im.interval_q();
      if (im_hi < im_min_q || im_lo > im_max_q) continue;
      if (static_cast<long>(found.size()) >= max_tuples)
        throw WindowTooLarge("pole tuple count exceeds the cap");
      found.push_back({PoleTuple{n, mi}, BallComplex{re, im}});
    }
  };

  if (r == 1) {
    consider(MultiIndex{});
  } else {
    for (long k1 = 0; k1 <= k1_max; ++k1) {
      std::vector<long> chain{k1};
      // complete all descending chains below k1
      struct Rec {
        int r;
        std::function<void(const std::vector<long>&)> leaf;
        void go(std::vector<long>& k) {
          if (static_cast<int>(k.size()) == r - 1) {
            leaf(k);
            return;
          }
          for (long v = 0; v <= k.back(); ++v) {
            k.push_back(v);
            go(k);
            k.pop_back();
          }
        }
      } rec{r, [&](const std::vector<long>& kk) { consider(MultiIndex{kk}); }};
      rec.go(chain);
    }
  }

  // merge coinciding locations (within merge_tol plus enclosure radii)
  const size_t m = found.size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  mpq_class tol_q(merge_tol);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      BallComplex d = found[i].loc - found[j].loc;
      BallReal dist = d.abs().lower();
      mpq_class sep = dist.interval_q().first;
      if (!(sep > tol_q)) parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
    }
  }
  std::vector<PoleGroup> groups;
  std::vector<int> group_of(m, -1);
  for (size_t i = 0; i < m; ++i) {
    int root_i = find(static_cast<int>(i));
    if (group_of[root_i] == -1) {
      group_of[root_i] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    PoleGroup& g = groups[group_of[root_i]];
    if (g.tuples.empty()) {
      g.location = found[i].loc;
    } else {
      g.location = BallComplex{ball_union(g.location.re, found[i].loc.re),
                               ball_union(g.location.im, found[i].loc.im)};
    }
    g.tuples.push_back(found[i].t);
  }
  for (auto& g : groups) {
    g.residue = residue(ns, g);
    g.classification = classify_singularity(g, 0.0);
  }
  // deterministic report order: by Re desc, then Im asc
  std::sort(groups.begin(), groups.end(), [](const PoleGroup& a, const PoleGroup& b) {
    double ar = a.location.re.mid_d(), br = b.location.re.mid_d();
    if (ar != br) return ar > br;
    return a.location.im.mid_d() < b.location.im.mid_d();
  });
  return groups;
}

BallComplex residue(const NormalizedSequence& ns, const PoleGroup& g) {
  if (g.tuples.empty()) throw ValidationError("residue of an empty pole group");
  const Prec prec = std::max<Prec>(ns.precision_bits + 64, 128);
  const BallReal log_a1 = log(ns.roots.roots[0].re);
  BallComplex sum(prec);
  for (const auto& t : g.tuples) sum += lambda_term_shifted(ns, g.location, t.k);
  return sum / BallComplex::from_real(log_a1);
}

Classification classify_singularity(const PoleGroup& g, double zero_tol) {
  BallComplex mid{g.residue.re.midpoint(), g.residue.im.midpoint()};
  BallReal dist0 = mid.abs().lower();
  BallReal barrier = (g.residue.disk_radius() + BallReal::from_mpq(mpq_class(zero_tol), 64)).upper();
  if (dist0.certainly_gt(barrier)) return Classification::SimplePole;
  return Classification::RemovableCandidate;
}

namespace {

std::string num_str(const BallReal& b) { return b.mid_str(20); }

}  // namespace

std::string export_pole_map(const std::vector<PoleGroup>& groups, MapFormat format) {
  std::ostringstream os;
  if (format == MapFormat::CSV) {
    os << "re,im,radius,residue_re,residue_im,classification,tuple_count\n";
    for (const auto& g : groups) {
      os << num_str(g.location.re) << "," << num_str(g.location.im) << ","
         << g.location.disk_radius().mid_str(3) << "," << num_str(g.residue.re) << ","
         << num_str(g.residue.im) << "," << to_string(g.classification) << ","
         << g.tuples.size() << "\n";
    }
    return os.str();
  }
  if (format != MapFormat::SVG) throw UnsupportedFormat("unknown pole map format");

  double re_lo = -1, re_hi = 1, im_lo = -1, im_hi = 1;
  bool first = true;
  for (const auto& g : groups) {
    double x = g.location.re.mid_d(), y = g.location.im.mid_d();
    if (first) {
      re_lo = x - 1;
      re_hi = x + 1;
      im_lo = y - 1;
      im_hi = y + 1;
      first = false;
    }
    re_lo = std::min(re_lo, x - 0.5);
    re_hi = std::max(re_hi, x + 0.5);
    im_lo = std::min(im_lo, y - 0.5);
    im_hi = std::max(im_hi, y + 0.5);
  }
  const double width = 640, height = 480, margin = 40;
  auto sx = [&](double x) {
    return margin + (x - re_lo) / (re_hi - re_lo) * (width - 2 * margin);
  };
  auto sy = [&](double y) {
    return height - margin - (y - im_lo) / (im_hi - im_lo) * (height - 2 * margin);
  };
  char buf[256];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (re_lo <= 0 && re_hi >= 0) {
    snprintf(buf, sizeof buf,
             "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#ccc\"/>\n",
             sx(0), sy(im_lo), sx(0), sy(im_hi));
    os << buf;
  }
  if (im_lo <= 0 && im_hi >= 0) {
    snprintf(buf, sizeof buf,
             "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#ccc\"/>\n",
             sx(re_lo), sy(0), sx(re_hi), sy(0));
    os << buf;
  }
  for (const auto& g : groups) {
    double x = sx(g.location.re.mid_d());
    double y = sy(g.location.im.mid_d());
    double mag = std::hypot(g.residue.re.mid_d(), g.residue.im.mid_d());
    double rr = 2.0 + 2.0 * std::min(mag, 5.0);
    bool hollow = g.classification == Classification::RemovableCandidate;
    snprintf(buf, sizeof buf,
             "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\" stroke=\"black\"/>\n",
             x, y, rr, hollow ? "none" : "#30507a");
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace recurzeta
