#include "qhall/bijections.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qhall {

namespace {

long long get(const std::vector<int>& v, int i) {
  return (i >= 1 && i <= static_cast<int>(v.size())) ? v[static_cast<size_t>(i - 1)] : 0;
}

// Ceiling/floor division with the convention 0/0 = 0; a nonzero numerator
// over a zero denominator marks a position the map never produces.
long long cd(long long num, long long den) {
  if (den == 0) {
    if (num == 0) return 0;
    throw std::logic_error("bijection: nonzero numerator over zero denominator");
  }
  return (num + den - 1) / den;
}

long long fd(long long num, long long den) {
  if (den == 0) {
    if (num == 0) return 0;
    throw std::logic_error("bijection: nonzero numerator over zero denominator");
  }
  return num / den;
}

void validate_params(const MapInstance& m) {
  switch (m.id) {
    case MapId::bme:
      if (m.n < 1) throw std::domain_error("bme: need n >= 1");
      break;
    case MapId::bme_nk:
      if (m.k < 1 || m.k > m.n) throw std::domain_error("bme_nk: need 1 <= k <= n");
      break;
    case MapId::theta_nk:
      if (m.k < 1 || m.n < m.k - 1) throw std::domain_error("theta_nk: need 1 <= k <= n+1");
      break;
  }
}

bool in_family(const FamilySpec& f, const std::vector<int>& parts) {
  switch (f.kind) {
    case FamilySpec::Kind::L:
      return static_cast<int>(parts.size()) == f.k && in_lecture_hall(parts, f.n);
    case FamilySpec::Kind::Lbar: {
      if (static_cast<int>(parts.size()) != f.k || !in_lecture_hall(parts, f.n)) return false;
      for (int p : parts)
        if (p <= 0) return false;
      return true;
    }
    case FamilySpec::Kind::A:
      return static_cast<int>(parts.size()) == f.k && in_anti_lecture_hall(parts, f.n, f.k);
    default:
      throw std::logic_error("in_family: unsupported family");
  }
}

}  // namespace

std::string map_name(MapId id) {
  switch (id) {
    case MapId::bme:
      return "bme";
    case MapId::bme_nk:
      return "bme_nk";
    case MapId::theta_nk:
      return "theta_nk";
  }
  throw std::logic_error("map_name: unknown id");
}

MapId map_from_name(const std::string& name) {
  if (name == "bme") return MapId::bme;
  if (name == "bme_nk") return MapId::bme_nk;
  if (name == "theta_nk") return MapId::theta_nk;
  throw std::invalid_argument("map_from_name: unknown map '" + name + "'");
}

FamilySpec map_domain(const MapInstance& m) {
  validate_params(m);
  FamilySpec f{};
  switch (m.id) {
    case MapId::bme:
      f.kind = FamilySpec::Kind::L;
      f.n = f.k = m.n - 1;
      break;
    case MapId::bme_nk:
      f.kind = FamilySpec::Kind::Lbar;
      f.n = m.n - 1;
      f.k = m.k - 1;
      break;
    case MapId::theta_nk:
      f.kind = FamilySpec::Kind::A;
      f.n = m.n;
      f.k = m.k - 1;
      break;
  }
  return f;
}

FamilySpec map_codomain(const MapInstance& m) {
  validate_params(m);
  FamilySpec f{};
  switch (m.id) {
    case MapId::bme:
      f.kind = FamilySpec::Kind::L;
      f.n = f.k = m.n;
      break;
    case MapId::bme_nk:
      f.kind = FamilySpec::Kind::Lbar;
      f.n = m.n;
      f.k = m.k;
      break;
    case MapId::theta_nk:
      f.kind = FamilySpec::Kind::A;
      f.n = m.n;
      f.k = m.k;
      break;
  }
  return f;
}

PartSequence apply_map(const MapInstance& m, const std::vector<int>& lambda, long long s) {
  validate_params(m);
  if (s < 0) throw std::domain_error("apply_map: need s >= 0");
  FamilySpec dom = map_domain(m);
  if (!in_family(dom, lambda))
    throw std::domain_error("apply_map: input is not a member of " + dom.to_text());

  const long long n = m.n;
  const long long len = m.id == MapId::bme ? n : m.k;
  std::vector<int> mu(static_cast<size_t>(len), 0);
  auto put = [&](long long i, long long v) { mu[static_cast<size_t>(i - 1)] = static_cast<int>(v); };

  for (long long i = 1; i <= len; ++i) {
    long long v = 0;
    if (m.id == MapId::theta_nk) {
      const long long k = m.k;
      if (i == 1) {
        v = cd((n - k + 1) * get(lambda, 1), n - k + 2) + s;
      } else if (i % 2 == 0) {
        v = get(lambda, static_cast<int>(i - 1));
      } else {
        long long l2 = i - 1;  // i = 2l + 1
        v = cd((n + l2 - k + 1) * get(lambda, static_cast<int>(i)), n + l2 - k + 2) +
            fd((n + l2 - k + 1) * get(lambda, static_cast<int>(i - 2)), n + l2 - k) -
            get(lambda, static_cast<int>(i - 1));
      }
    } else {
      bool last_odd_override =
          m.id == MapId::bme_nk && i == m.k && m.k % 2 == 1 && m.k >= 3;
      if (m.id == MapId::bme_nk && m.k == 1) {
        v = s + 1;
      } else if (i == 1) {
        v = cd(n * get(lambda, 1), n - 1) + s;
      } else if (i % 2 == 0) {
        v = get(lambda, static_cast<int>(i - 1));
      } else if (last_odd_override) {
        long long l2 = i - 1;
        v = fd((n - l2) * get(lambda, static_cast<int>(i - 2)), n - l2 + 1) -
            get(lambda, static_cast<int>(i - 1)) + 1;
      } else {
        long long l2 = i - 1;
        v = cd((n - l2) * get(lambda, static_cast<int>(i)), n - l2 - 1) +
            fd((n - l2) * get(lambda, static_cast<int>(i - 2)), n - l2 + 1) -
            get(lambda, static_cast<int>(i - 1));
      }
    }
    put(i, v);
  }

  FamilySpec cod = map_codomain(m);
  PartSequence out{cod.kind == FamilySpec::Kind::A ? SeqFamily::anti_lecture_hall
                                                   : SeqFamily::lecture_hall,
                   cod.n, cod.k, mu};
  if (!in_family(cod, mu))
    throw std::logic_error("apply_map: image escaped " + cod.to_text());
  return out;
}

long long law_correction(const MapInstance& m, const PartSequence& mu) {
  switch (m.id) {
    case MapId::bme:
      return 0;
    case MapId::bme_nk: {
      if (m.k % 2 == 1) return 1;
      // -floor((n-k) i / (n-k+1)), i.e. ceil(i/(n-k+1)) - i
      long long i = mu.parts.back();
      long long den = m.n - m.k + 1;
      return (i + den - 1) / den - i;
    }
    case MapId::theta_nk: {
      if (m.k % 2 == 1) return 0;
      long long i = mu.parts.back();
      return -i - i / m.n;
    }
  }
  throw std::logic_error("law_correction: unknown map");
}

BijectionReport verify_bijection(const MapInstance& m, long long max_weight) {
  validate_params(m);
  BijectionReport rep;
  rep.map = m;
  rep.max_weight = max_weight;

  // Image weight <= W bounds the domain weight: even positions of mu carry
  // |lambda_odd|, so |lambda| <= 2 |lambda_odd| <= 2W for the lecture hall
  // maps (where entries are nonincreasing) and <= 3 |lambda_odd| <= 3W for
  // the anti map (where an even entry is at most twice its left neighbor).
  long long domain_sweep = max_weight;
  if (m.id == MapId::bme_nk) domain_sweep = 2 * max_weight;
  if (m.id == MapId::theta_nk) domain_sweep = 3 * max_weight;

  std::map<std::vector<int>, std::pair<std::vector<int>, long long>> image;
  auto fail = [&](const std::string& why) {
    if (rep.failure.empty()) rep.failure = why;
  };

  rep.injective = true;
  rep.laws_hold = true;
  for (const PartSequence& lam : generate(map_domain(m), domain_sweep)) {
    PartSequence mu0;
    try {
      mu0 = apply_map(m, lam.parts, 0);
    } catch (const std::logic_error& e) {
      fail(std::string("apply failed for ") + sequence_to_text(lam) + ": " + e.what());
      rep.laws_hold = false;
      continue;
    }
    if (mu0.weight() > max_weight) continue;
    for (long long s = 0; s + mu0.weight() <= max_weight; ++s) {
      PartSequence mu;
      try {
        mu = apply_map(m, lam.parts, s);
      } catch (const std::logic_error& e) {
        fail(std::string("apply failed for ") + sequence_to_text(lam) + ": " + e.what());
        rep.laws_hold = false;
        continue;
      }
      ++rep.pairs_checked;

      // only the first entry depends on s
      std::vector<int> shifted = mu0.parts;
      if (!shifted.empty()) shifted[0] += static_cast<int>(s);
      if (mu.parts != shifted) {
        rep.laws_hold = false;
        fail("image is not mu(0) shifted by s at " + sequence_to_text(lam));
      }

      StatVector slam = statistics(lam), smu = statistics(mu);
      if (smu.even_index_sum != slam.odd_index_sum) {
        rep.laws_hold = false;
        fail("even-index law failed at " + trace_map(m, lam.parts, s));
      }
      long long expect_odd =
          2 * slam.odd_index_sum - slam.even_index_sum + s + law_correction(m, mu);
      if (smu.odd_index_sum != expect_odd) {
        rep.laws_hold = false;
        fail("odd-index law failed at " + trace_map(m, lam.parts, s));
      }

      auto [it, inserted] = image.try_emplace(mu.parts, lam.parts, s);
      if (!inserted) {
        rep.injective = false;
        fail("collision at image " + sequence_to_text(mu));
      }
    }
  }

  rep.surjective = true;
  for (const PartSequence& mu : generate(map_codomain(m), max_weight)) {
    ++rep.codomain_size;
    if (!image.count(mu.parts)) {
      rep.surjective = false;
      fail("codomain member " + sequence_to_text(mu) + " has no preimage");
    }
  }

  rep.pass = rep.injective && rep.surjective && rep.laws_hold;
  return rep;
}

std::string trace_map(const MapInstance& m, const std::vector<int>& lambda, long long s) {
  PartSequence mu = apply_map(m, lambda, s);
  StatVector st = statistics(mu);
  PartSequence lam{SeqFamily::plain_partition, 0, static_cast<int>(lambda.size()), lambda};
  std::ostringstream os;
  os << '(' << sequence_to_text(lam) << "; s=" << s << ") -> " << sequence_to_text(mu)
     << " [weight=" << st.weight << " odd_index_sum=" << st.odd_index_sum
     << " even_index_sum=" << st.even_index_sum << ']';
  return os.str();
}

}  // namespace qhall
