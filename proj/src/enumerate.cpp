#include "qhall/enumerate.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qhall {

long long PartSequence::weight() const {
  long long w = 0;
  for (int p : parts) w += p;
  return w;
}

bool PartSequence::operator<(const PartSequence& o) const {
  long long wa = weight(), wb = o.weight();
  if (wa != wb) return wa < wb;
  return parts > o.parts;  // within a weight, largest first entry first
}

std::string sequence_to_text(const PartSequence& s) {
  bool all_zero = true;
  for (int p : s.parts)
    if (p != 0) all_zero = false;
  if (all_zero) return "()";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < s.parts.size(); ++i) {
    if (i) os << ',';
    os << s.parts[i];
  }
  os << ')';
  return os.str();
}

std::vector<int> parse_parts(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw std::invalid_argument("parse_parts: unbalanced parentheses in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  std::string token;
  std::istringstream is(body);
  while (std::getline(is, token, ',')) {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw std::invalid_argument("parse_parts: bad entry '" + token + "'");
    out.push_back(v);
  }
  return out;
}

long long family_ramp(SeqFamily family, int n, int k, int i) {
  if (i < 1 || i > k) throw std::domain_error("family_ramp: position out of range");
  switch (family) {
    case SeqFamily::lecture_hall:
      return n - i + 1;
    case SeqFamily::anti_lecture_hall:
      return n - k + i;
    default:
      throw std::domain_error("family_ramp: family has no ramp");
  }
}

bool in_lecture_hall(const std::vector<int>& parts, int n) {
  int k = static_cast<int>(parts.size());
  if (k > n || n < 0) throw std::invalid_argument("in_lecture_hall: need 0 <= length <= n");
  for (int p : parts)
    if (p < 0) return false;
  // lambda_i / (n-i+1) >= lambda_{i+1} / (n-i), cross-multiplied
  for (int i = 1; i < k; ++i) {
    long long lhs = static_cast<long long>(parts[i - 1]) * (n - i);
    long long rhs = static_cast<long long>(parts[i]) * (n - i + 1);
    if (lhs < rhs) return false;
  }
  return true;
}

bool in_anti_lecture_hall(const std::vector<int>& parts, int n, int k) {
  if (static_cast<int>(parts.size()) != k)
    throw std::invalid_argument("in_anti_lecture_hall: length must equal k");
  if (n < k - 1 || k < 0) throw std::invalid_argument("in_anti_lecture_hall: need n >= k-1");
  for (int p : parts)
    if (p < 0) return false;
  // lambda_i / (n-k+i) >= lambda_{i+1} / (n-k+i+1); a zero ramp entry makes
  // the cross-multiplied inequality vacuous automatically.
  for (int i = 1; i < k; ++i) {
    long long lhs = static_cast<long long>(parts[i - 1]) * (n - k + i + 1);
    long long rhs = static_cast<long long>(parts[i]) * (n - k + i);
    if (lhs < rhs) return false;
  }
  return true;
}

namespace {

void sort_canonical(std::vector<PartSequence>& v) { std::sort(v.begin(), v.end()); }

}  // namespace

std::vector<PartSequence> gen_lecture_hall(int n, int k, bool exactly_k_positive,
                                           long long max_weight, int last_part) {
  if (k < 0 || k > n) throw std::invalid_argument("gen_lecture_hall: need 0 <= k <= n");
  if (max_weight < 0) throw std::invalid_argument("gen_lecture_hall: negative weight bound");
  std::vector<PartSequence> out;
  std::vector<int> parts(k);
  std::function<void(int, long long)> rec = [&](int i, long long budget) {
    if (i > k) {
      out.push_back({SeqFamily::lecture_hall, n, k, parts});
      return;
    }
    long long ub = budget;
    if (i > 1) {
      long long prev = parts[i - 2];
      ub = std::min(ub, prev * (n - i + 1) / (n - i + 2));
    }
    long long lo = exactly_k_positive ? 1 : 0;
    if (i == k && last_part >= 0) {
      if (last_part >= lo && last_part <= ub) {
        parts[i - 1] = last_part;
        rec(i + 1, budget - last_part);
      }
      return;
    }
    for (long long v = lo; v <= ub; ++v) {
      parts[i - 1] = static_cast<int>(v);
      rec(i + 1, budget - v);
    }
  };
  if (!(exactly_k_positive && k == 0 && last_part > 0)) rec(1, max_weight);
  sort_canonical(out);
  return out;
}

std::vector<PartSequence> gen_anti_lecture_hall(int n, int k, long long max_weight,
                                                int last_part) {
  if (k < 0 || n < k - 1) throw std::invalid_argument("gen_anti_lecture_hall: need n >= k-1");
  if (max_weight < 0) throw std::invalid_argument("gen_anti_lecture_hall: negative weight bound");
  std::vector<PartSequence> out;
  std::vector<int> parts(k);
  std::function<void(int, long long)> rec = [&](int i, long long budget) {
    if (i > k) {
      out.push_back({SeqFamily::anti_lecture_hall, n, k, parts});
      return;
    }
    long long ub = budget;
    if (i > 1) {
      long long ramp_prev = n - k + i - 1;
      if (ramp_prev > 0) {
        long long prev = parts[i - 2];
        ub = std::min(ub, prev * (n - k + i) / ramp_prev);
      }
    }
    if (i == k && last_part >= 0) {
      if (last_part <= ub) {
        parts[i - 1] = last_part;
        rec(i + 1, budget - last_part);
      }
      return;
    }
    for (long long v = 0; v <= ub; ++v) {
      parts[i - 1] = static_cast<int>(v);
      rec(i + 1, budget - v);
    }
  };
  rec(1, max_weight);
  sort_canonical(out);
  return out;
}

namespace {

/**
 * Partitions into odd parts <= cap, written nonincreasing, subject to a
 * per-partition predicate on the number of parts inside [range_lo, range_hi]
 * (an inclusive interval of odd values; empty if range_lo > range_hi).
 * `count_ub` prunes branches whose in-range count already exceeds it; the
 * final filter receives the exact count.
 */
std::vector<PartSequence> gen_odd_filtered(int cap, long long max_weight, int range_lo,
                                           int range_hi, long long count_ub,
                                           const std::function<bool(long long)>& accept,
                                           int family_n) {
  std::vector<PartSequence> out;
  std::vector<int> parts;
  std::function<void(int, long long, long long)> rec = [&](int val, long long budget,
                                                           long long in_range) {
    if (val < 1) {
      if (accept(in_range))
        out.push_back({SeqFamily::odd_restricted, family_n, static_cast<int>(parts.size()), parts});
      return;
    }
    bool in_set = (val >= range_lo && val <= range_hi);
    for (long long m = 0;; ++m) {
      long long used = m * val;
      if (used > budget) break;
      long long count = in_range + (in_set ? m : 0);
      if (count > count_ub) break;
      size_t mark = parts.size();
      for (long long t = 0; t < m; ++t) parts.push_back(val);
      rec(val - 2, budget - used, count);
      parts.resize(mark);
    }
  };
  rec(cap % 2 == 0 ? cap - 1 : cap, max_weight, 0);
  sort_canonical(out);
  return out;
}

}  // namespace

std::vector<PartSequence> gen_restricted_odd(int n, int k, long long max_weight) {
  if (n < 0 || k < 0) throw std::invalid_argument("gen_restricted_odd: negative parameter");
  if (max_weight < 0) throw std::invalid_argument("gen_restricted_odd: negative weight bound");
  int half_up = (k + 1) / 2, half_down = k / 2;
  int lo = 2 * half_up + 1;
  int hi = 2 * (n - half_down) - 1;
  return gen_odd_filtered(2 * n - 1, max_weight, lo, hi, half_down,
                          [&](long long c) { return c <= half_down; }, n);
}

std::vector<PartSequence> gen_restricted_odd_exact_t(int n, int t, int j, int l,
                                                     long long max_weight) {
  if (n < 0 || t < 0) throw std::invalid_argument("gen_restricted_odd_exact_t: negative parameter");
  if (max_weight < 0)
    throw std::invalid_argument("gen_restricted_odd_exact_t: negative weight bound");
  return gen_odd_filtered(2 * n - 1, max_weight, 2 * j + 1, 2 * l - 1, t,
                          [&](long long c) { return c == t; }, n);
}

std::vector<PartSequence> gen_odd_parts(int max_part, long long max_weight) {
  if (max_weight < 0) throw std::invalid_argument("gen_odd_parts: negative weight bound");
  return gen_odd_filtered(max_part, max_weight, 1, 0, LLONG_MAX,
                          [](long long) { return true; }, max_part);
}

std::vector<PartSequence> gen_plain_fixed(int k, long long max_weight) {
  if (k < 0) throw std::invalid_argument("gen_plain_fixed: negative length");
  if (max_weight < 0) throw std::invalid_argument("gen_plain_fixed: negative weight bound");
  std::vector<PartSequence> out;
  std::vector<int> parts(k);
  std::function<void(int, long long)> rec = [&](int i, long long budget) {
    if (i > k) {
      out.push_back({SeqFamily::plain_partition, 0, k, parts});
      return;
    }
    long long ub = budget;
    if (i > 1) ub = std::min<long long>(ub, parts[i - 2]);
    for (long long v = 0; v <= ub; ++v) {
      parts[i - 1] = static_cast<int>(v);
      rec(i + 1, budget - v);
    }
  };
  rec(1, max_weight);
  sort_canonical(out);
  return out;
}

std::vector<PartSequence> gen_plain_exact_positive(int n, int m, long long max_weight) {
  if (m < 0 || m > n) throw std::invalid_argument("gen_plain_exact_positive: need 0 <= m <= n");
  if (max_weight < 0) throw std::invalid_argument("gen_plain_exact_positive: negative weight bound");
  std::vector<PartSequence> out;
  std::vector<int> parts(n);
  std::function<void(int, long long)> rec = [&](int i, long long budget) {
    if (i > m) {
      out.push_back({SeqFamily::plain_partition, 0, n, parts});
      return;
    }
    long long ub = budget - (m - i);  // each later entry needs at least 1
    if (i > 1) ub = std::min<long long>(ub, parts[i - 2]);
    for (long long v = 1; v <= ub; ++v) {
      parts[i - 1] = static_cast<int>(v);
      rec(i + 1, budget - v);
    }
  };
  rec(1, max_weight);
  sort_canonical(out);
  return out;
}

std::vector<PartSequence> gen_max_part(int k, long long max_weight) {
  if (k < 0) throw std::invalid_argument("gen_max_part: negative part bound");
  if (max_weight < 0) throw std::invalid_argument("gen_max_part: negative weight bound");
  std::vector<PartSequence> out;
  std::vector<int> parts;
  std::function<void(int, long long)> rec = [&](int val, long long budget) {
    if (val < 1) {
      out.push_back({SeqFamily::plain_partition, k, static_cast<int>(parts.size()), parts});
      return;
    }
    for (long long m = 0; m * val <= budget; ++m) {
      size_t mark = parts.size();
      for (long long t = 0; t < m; ++t) parts.push_back(val);
      rec(val - 1, budget - m * val);
      parts.resize(mark);
    }
  };
  rec(k, max_weight);
  sort_canonical(out);
  return out;
}

std::vector<PartSequence> gen_distinct(int k, long long max_weight) {
  if (k < 0) throw std::invalid_argument("gen_distinct: negative length");
  if (max_weight < 0) throw std::invalid_argument("gen_distinct: negative weight bound");
  std::vector<PartSequence> out;
  std::vector<int> parts(k);
  std::function<void(int, long long)> rec = [&](int i, long long budget) {
    if (i > k) {
      out.push_back({SeqFamily::distinct_parts, 0, k, parts});
      return;
    }
    int remaining = k - i;  // entries after this one: distinct, positive
    long long tail_min = static_cast<long long>(remaining) * (remaining + 1) / 2;
    long long ub = budget - tail_min;
    if (i > 1) ub = std::min<long long>(ub, parts[i - 2] - 1);
    for (long long v = remaining + 1; v <= ub; ++v) {
      parts[i - 1] = static_cast<int>(v);
      rec(i + 1, budget - v);
    }
  };
  rec(1, max_weight);
  sort_canonical(out);
  return out;
}

StatVector statistics(const PartSequence& s) {
  StatVector st;
  int k = static_cast<int>(s.parts.size());
  for (int i = 1; i <= k; ++i) {
    long long v = s.parts[i - 1];
    st.weight += v;
    (i % 2 == 1 ? st.odd_index_sum : st.even_index_sum) += v;
    if (v > 0) ++st.positive_parts;
    if (v % 2 != 0) ++st.odd_parts;
  }
  st.last_part = k > 0 ? s.parts.back() : 0;

  bool ramped = s.family == SeqFamily::lecture_hall || s.family == SeqFamily::anti_lecture_hall;
  if (ramped) {
    bool all_positive = true;
    for (int i = 1; i <= k; ++i)
      if (family_ramp(s.family, s.n, s.k, i) <= 0) all_positive = false;
    if (all_positive) {
      st.has_ramp_images = true;
      for (int i = 1; i <= k; ++i) {
        long long ramp = family_ramp(s.family, s.n, s.k, i);
        long long v = s.parts[i - 1];
        long long fl = v / ramp;
        long long ce = (v + ramp - 1) / ramp;
        st.floor_image.push_back(static_cast<int>(fl));
        st.ceil_image.push_back(static_cast<int>(ce));
        st.floor_weight += fl;
        st.ceil_weight += ce;
        if (fl % 2 != 0) ++st.floor_odd_count;
        if (ce % 2 != 0) ++st.ceil_odd_count;
      }
    }
  }
  return st;
}

long long StatVector::stat(const std::string& name) const {
  if (name == "weight") return weight;
  if (name == "odd_index_sum") return odd_index_sum;
  if (name == "even_index_sum") return even_index_sum;
  if (name == "odd_even_diff") return odd_index_sum - even_index_sum;
  if (name == "positive_parts") return positive_parts;
  if (name == "last_part") return last_part;
  if (name == "odd_parts") return odd_parts;
  if (name == "ceil_weight" || name == "ceil_odd_count" || name == "floor_weight" ||
      name == "floor_odd_count") {
    if (!has_ramp_images)
      throw std::domain_error("stat: '" + name + "' needs ramp images, which are undefined here");
    if (name == "ceil_weight") return ceil_weight;
    if (name == "ceil_odd_count") return ceil_odd_count;
    if (name == "floor_weight") return floor_weight;
    return floor_odd_count;
  }
  throw std::invalid_argument("stat: unknown statistic '" + name + "'");
}

MuRDecomposition mu_r_decompose(const PartSequence& s) {
  bool lh = s.family == SeqFamily::lecture_hall;
  bool anti = s.family == SeqFamily::anti_lecture_hall;
  if (!lh && !anti) throw std::domain_error("mu_r_decompose: family has no ramp");
  int k = static_cast<int>(s.parts.size());
  for (int i = 1; i <= k; ++i)
    if (family_ramp(s.family, s.n, s.k, i) <= 0)
      throw std::domain_error("mu_r_decompose: zero ramp entry, decomposition undefined");

  MuRDecomposition d;
  for (int i = 1; i <= k; ++i) {
    long long ramp = family_ramp(s.family, s.n, s.k, i);
    long long v = s.parts[i - 1];
    if (v < 0) throw std::domain_error("mu_r_decompose: negative entry");
    long long mu = lh ? (v + ramp - 1) / ramp : v / ramp;
    long long r = lh ? ramp * mu - v : v - ramp * mu;
    d.mu.push_back(static_cast<int>(mu));
    d.r.push_back(static_cast<int>(r));
  }

  d.valid = true;
  for (int i = 1; i < k; ++i) {
    if (d.mu[i - 1] < d.mu[i]) d.valid = false;
    if (d.mu[i - 1] == d.mu[i]) {
      if (lh && d.r[i - 1] > d.r[i]) d.valid = false;
      if (anti && d.r[i - 1] < d.r[i]) d.valid = false;
    }
  }

  int top = 0;
  for (int m : d.mu) top = std::max(top, m);
  d.multiplicity.assign(top + 1, 0);
  for (int m : d.mu) ++d.multiplicity[m];

  d.ell.assign(top + 1, 0);
  if (lh) {
    // ell[i] counts the entries of mu exceeding top - i
    for (int i = 1; i <= top; ++i) d.ell[i] = d.ell[i - 1] + d.multiplicity[top - i + 1];
  } else {
    d.ell[0] = s.n;
    for (int i = 1; i <= top; ++i) d.ell[i] = d.ell[i - 1] - d.multiplicity[i - 1];
  }
  return d;
}

FamilySpec FamilySpec::parse(const std::string& text) {
  size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw std::invalid_argument("FamilySpec: expected Name(args) in '" + text + "'");
  std::string name = text.substr(0, open);
  std::string body = text.substr(open + 1, text.size() - open - 2);

  int last = -1;
  size_t semi = body.find(';');
  if (semi != std::string::npos) {
    std::string tail = body.substr(semi + 1);
    body = body.substr(0, semi);
    size_t eq = tail.find('=');
    if (eq == std::string::npos || tail.substr(0, eq) != "last")
      throw std::invalid_argument("FamilySpec: expected last=<value> in '" + text + "'");
    last = std::stoi(tail.substr(eq + 1));
  }

  std::vector<int> args;
  std::string token;
  std::istringstream is(body);
  while (std::getline(is, token, ',')) args.push_back(std::stoi(token));

  auto need = [&](size_t c) {
    if (args.size() != c)
      throw std::invalid_argument("FamilySpec: wrong argument count in '" + text + "'");
  };
  FamilySpec f{};
  f.last = last;
  if (name == "L" || name == "Lbar" || name == "A" || name == "R") {
    need(2);
    f.kind = name == "L"      ? Kind::L
             : name == "Lbar" ? Kind::Lbar
             : name == "A"    ? Kind::A
                              : Kind::R;
    f.n = args[0];
    f.k = args[1];
    if (f.kind == Kind::R && last >= 0)
      throw std::invalid_argument("FamilySpec: last= not supported for R");
  } else if (name == "Rt") {
    need(4);
    f.kind = Kind::Rt;
    f.n = args[0];
    f.t = args[1];
    f.j = args[2];
    f.l = args[3];
  } else if (name == "P") {
    if (args.size() == 1) {
      f.kind = Kind::P_len;
      f.k = args[0];
    } else {
      need(2);
      f.kind = Kind::P_pos;
      f.n = args[0];
      f.m = args[1];
    }
  } else if (name == "Pmax") {
    need(1);
    f.kind = Kind::Pmax;
    f.k = args[0];
  } else if (name == "D") {
    need(1);
    f.kind = Kind::D;
    f.k = args[0];
  } else {
    throw std::invalid_argument("FamilySpec: unknown family '" + name + "'");
  }
  if (f.kind != Kind::L && f.kind != Kind::Lbar && f.kind != Kind::A && last >= 0 &&
      f.kind != Kind::R)
    throw std::invalid_argument("FamilySpec: last= not supported for '" + name + "'");
  return f;
}

std::string FamilySpec::to_text() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::L:
      os << "L(" << n << ',' << k;
      break;
    case Kind::Lbar:
      os << "Lbar(" << n << ',' << k;
      break;
    case Kind::A:
      os << "A(" << n << ',' << k;
      break;
    case Kind::R:
      os << "R(" << n << ',' << k;
      break;
    case Kind::Rt:
      os << "Rt(" << n << ',' << t << ',' << j << ',' << l;
      break;
    case Kind::P_len:
      os << "P(" << k;
      break;
    case Kind::P_pos:
      os << "P(" << n << ',' << m;
      break;
    case Kind::Pmax:
      os << "Pmax(" << k;
      break;
    case Kind::D:
      os << "D(" << k;
      break;
  }
  if (last >= 0) os << ";last=" << last;
  os << ')';
  return os.str();
}

std::vector<PartSequence> generate(const FamilySpec& fam, long long max_weight) {
  switch (fam.kind) {
    case FamilySpec::Kind::L:
      return gen_lecture_hall(fam.n, fam.k, false, max_weight, fam.last);
    case FamilySpec::Kind::Lbar:
      return gen_lecture_hall(fam.n, fam.k, true, max_weight, fam.last);
    case FamilySpec::Kind::A:
      return gen_anti_lecture_hall(fam.n, fam.k, max_weight, fam.last);
    case FamilySpec::Kind::R:
      return gen_restricted_odd(fam.n, fam.k, max_weight);
    case FamilySpec::Kind::Rt:
      return gen_restricted_odd_exact_t(fam.n, fam.t, fam.j, fam.l, max_weight);
    case FamilySpec::Kind::P_len:
      return gen_plain_fixed(fam.k, max_weight);
    case FamilySpec::Kind::P_pos:
      return gen_plain_exact_positive(fam.n, fam.m, max_weight);
    case FamilySpec::Kind::Pmax:
      return gen_max_part(fam.k, max_weight);
    case FamilySpec::Kind::D:
      return gen_distinct(fam.k, max_weight);
  }
  throw std::logic_error("generate: unreachable");
}

GradedSeries gf_oracle(const FamilySpec& fam,
                       const std::vector<std::pair<std::string, Var>>& assign,
                       const Grading& g) {
  // The weight budget equals the grading bound, which is sound only when the
  // assignment forces grade >= weight on every member monomial.
  bool weight_covered = false, odd_covered = false, even_covered = false;
  for (const auto& [name, var] : assign) {
    bool positive = g.weight[static_cast<size_t>(var)] >= 1;
    if (name == "weight" && positive) weight_covered = true;
    if (name == "odd_index_sum" && positive) odd_covered = true;
    if (name == "even_index_sum" && positive) even_covered = true;
  }
  if (!weight_covered && !(odd_covered && even_covered))
    throw std::invalid_argument(
        "gf_oracle: assignment must send the weight (or both index sums) to "
        "positively weighted variables");

  GradedSeries s = GradedSeries::zero(g);
  for (const PartSequence& seq : generate(fam, g.bound)) {
    StatVector st = statistics(seq);
    Exps e{};
    for (const auto& [name, var] : assign)
      e[static_cast<size_t>(var)] += static_cast<int>(st.stat(name));
    s.add_term(e, Int(1));
  }
  return s;
}

}  // namespace qhall
