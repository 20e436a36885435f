#pragma once
/**
 * Weight-shifting insertion maps between consecutive families and their
 * machine verification.
 *
 * Each map sends a pair (lambda, s) — a member of the smaller family plus a
 * free nonnegative integer — to a member mu of the larger family:
 *
 *   bme       : full lecture hall, length n-1  ->  length n
 *   bme_nk    : exactly k-1 positive entries, ramp n-1  ->  exactly k, ramp n
 *   theta_nk  : anti lecture hall, length k-1  ->  length k   (same n)
 *
 * Even positions of mu copy the odd-indexed entries of lambda; odd positions
 * combine ceiling/floor divisions of neighboring entries, with s added to the
 * first entry.  Verification enumerates the domain, applies the map for every
 * s that can land within the image weight bound, and checks injectivity,
 * surjectivity onto all codomain members within the bound, and the index-sum
 * laws  |mu_even| = |lambda_odd|  and
 * |mu_odd| = 2 |lambda_odd| - |lambda_even| + s + corr.
 */

#include <string>
#include <vector>

#include "qhall/enumerate.hpp"

namespace qhall {

enum class MapId { bme, bme_nk, theta_nk };

std::string map_name(MapId id);
MapId map_from_name(const std::string& name);

struct MapInstance {
  MapId id = MapId::bme;
  int n = 0;
  int k = 0;  // unused for bme
};

FamilySpec map_domain(const MapInstance& m);
FamilySpec map_codomain(const MapInstance& m);

/**
 * Apply the map.  Throws std::domain_error when lambda is not a member of
 * the domain family or s < 0, and std::logic_error if the computed image
 * ever escaped the codomain (an internal invariant).
 */
PartSequence apply_map(const MapInstance& m, const std::vector<int>& lambda, long long s);

/** The correction term in the odd-index-sum law, from the image's last entry. */
long long law_correction(const MapInstance& m, const PartSequence& mu);

struct BijectionReport {
  MapInstance map;
  long long max_weight = 0;  // image weight bound of the sweep
  long long pairs_checked = 0;
  long long codomain_size = 0;
  bool injective = false;
  bool surjective = false;
  bool laws_hold = false;
  bool pass = false;
  std::string failure;  // first failure, empty when pass
};

/**
 * Check bijectivity onto all codomain members of weight <= max_weight,
 * along with the statistic laws for every pair applied.
 */
BijectionReport verify_bijection(const MapInstance& m, long long max_weight);

/** One-line rendering: "(lambda; s=..) -> mu [weight=.. ...]". */
std::string trace_map(const MapInstance& m, const std::vector<int>& lambda, long long s);

}  // namespace qhall
