#include "qhall/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qhall/bijections.hpp"
#include "qhall/closedform.hpp"
#include "qhall/enumerate.hpp"
#include "qhall/qseries.hpp"
#include "qhall/series.hpp"
#include "qhall/text_io.hpp"
#include "qhall/verify.hpp"

namespace qhall {
namespace {

/** A problem with the command line itself (as opposed to parameters that are
 *  syntactically fine but outside a module's domain): exits with code 2 and
 *  the usage text. */
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char kUsage[] = R"USAGE(usage: qhall <verb> <spec> [key=value]... [flags]

verbs:
  enum <family> [n= k= m= t= j= l= last=] maxw=W [--format=plain|json]
      List every family member of weight at most W together with its
      statistics.  <family> is a designator letter (L, Lbar, A, R, Rt, P,
      Pmax, D) with key=value parameters, or the full text form such as
      "A(2,2)" or "Lbar(3,2;last=1)".  P with k= is the fixed-length kind;
      P with n= and m= counts sequences of length n with exactly m positive
      entries.

  gf <form> [key=value]... [order=N] [stats=q|uvq|xy|zdiff|zodd] [vars=..]
      [--format=plain|json|csv]
      Expand a generating function to the given order (default 15).
      A lowercase <form> names a closed formula (for example lhp_q, or the
      full text form "tlh_xy_bar(n=3,k=2;x->x^2*y,y->x^-1)"); parameters are
      n, k, t, j, l, mu=(..), len_k=0|1.  An uppercase <form> names a family
      whose members are enumerated and summed; stats picks the weighting
      (default q): q tracks weight, uvq adds the ramp-image weight and odd
      count (ceiling images for L and Lbar, floor images for A), xy tracks
      the odd/even index sums, zdiff marks their difference, zodd marks the
      number of odd entries.  vars= overrides the truncation variables for
      substituted closed forms (letters with weight one, e.g. vars=aq).

  check <ID> [key=value]... [order=N] [--fin3-reading=bounded|unbounded]
      Run one catalogued check (default order 15).  Exits 1 when the check
      fails; the first differing coefficient is reported as a witness.  For
      the BIJ_* ids the order is the image weight bound.

  bijection <map> n=N [k=K] [lambda=(..) s=S] [maxw=W] [--format=plain|json]
      <map> is bme, bme_nk, or theta_nk.  With lambda= (and optional s=,
      default 0) prints the image of one application.  Without lambda= it
      sweeps every (domain member, shift) pair whose image weight is at most
      W (default 8) and verifies bijectivity and the index-sum laws; exits 1
      on any violation.

  suite [--only=ID] [--nmax=N] [--order=N] [--bijection-weight=W]
        [--irecurr-imax=I] [--config=FILE] [--format=plain|json]
      Run the whole catalog over a parameter grid.  Exits 0 only if every
      check passes.  --config reads the same keys (nmax, order,
      bijection_weight, irecurr_imax, only) from a JSON object; explicit
      flags override the file.

common flags:
  --format=F   plain (default), json, or csv (csv: gf only)
  --out=FILE   write the result to FILE instead of standard output
  --order=N    truncation order (also accepted bare: order=N)

exit codes: 0 ok, 1 check failed, 2 usage error, 3 domain error
)USAGE";

// ---------------------------------------------------------------------------
// argument scanning

struct Options {
  std::string verb;
  std::vector<std::string> positional;
  std::map<std::string, std::string> kv;  // --key=value and bare key=value alike
};

bool identifier_like(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

Options scan_args(const std::vector<std::string>& args) {
  Options o;
  if (args.empty()) throw UsageError("missing verb");
  o.verb = args[0];
  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& tok = args[i];
    const bool is_flag = tok.rfind("--", 0) == 0;
    const std::string body = is_flag ? tok.substr(2) : tok;
    const auto eq = body.find('=');
    const auto par = body.find('(');
    // key=value only when '=' comes before any '(' — spec text such as
    // "tlh_uvq(n=4,k=2)" stays positional.
    if (eq != std::string::npos && (par == std::string::npos || eq < par) &&
        identifier_like(body.substr(0, eq))) {
      std::string key = body.substr(0, eq);
      std::string value = body.substr(eq + 1);
      if (value.empty()) throw UsageError("argument '" + tok + "' has an empty value");
      if (!o.kv.emplace(key, value).second)
        throw UsageError("duplicate argument '" + key + "'");
    } else if (is_flag) {
      throw UsageError("flag '" + tok + "' needs =value");
    } else {
      o.positional.push_back(body);
    }
  }
  return o;
}

long long int_value(const std::string& key, const std::string& text) {
  try {
    size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw UsageError("argument '" + key + "' needs an integer value, got '" + text + "'");
  }
}

/** Consumes key=value pairs; anything left over at the end is an error. */
class KeyBag {
 public:
  explicit KeyBag(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  std::optional<std::string> take(const std::string& key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) return std::nullopt;
    std::string v = it->second;
    kv_.erase(it);
    return v;
  }

  std::optional<long long> take_int(const std::string& key) {
    auto v = take(key);
    if (!v) return std::nullopt;
    return int_value(key, *v);
  }

  /** Remaining pairs as an integer parameter map (for `check`). */
  std::map<std::string, long long> drain_ints() {
    std::map<std::string, long long> out;
    for (const auto& [k, v] : kv_) out[k] = int_value(k, v);
    kv_.clear();
    return out;
  }

  void expect_empty(const std::string& verb) const {
    if (!kv_.empty())
      throw UsageError("unknown argument '" + kv_.begin()->first + "' for " + verb);
  }

 private:
  std::map<std::string, std::string> kv_;
};

enum class Format { plain, json, csv };

Format parse_format(const std::optional<std::string>& text, bool csv_ok) {
  if (!text || *text == "plain") return Format::plain;
  if (*text == "json") return Format::json;
  if (*text == "csv") {
    if (csv_ok) return Format::csv;
    throw UsageError("csv output is only available for gf");
  }
  throw UsageError("unknown format '" + *text + "'");
}

std::vector<int> parts_value(const std::string& key, const std::string& text) {
  try {
    return parse_parts(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("argument '" + key + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// spec resolution

FamilySpec family_from_args(const std::string& text, KeyBag& bag) {
  if (text.find('(') != std::string::npos) {
    try {
      return FamilySpec::parse(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  FamilySpec f{};
  auto geti = [&](const char* key, int dflt) {
    auto v = bag.take_int(key);
    return v ? static_cast<int>(*v) : dflt;
  };
  if (text == "L" || text == "Lbar" || text == "A") {
    f.kind = text == "L"      ? FamilySpec::Kind::L
             : text == "Lbar" ? FamilySpec::Kind::Lbar
                              : FamilySpec::Kind::A;
    f.n = geti("n", 0);
    f.k = geti("k", 0);
    f.last = geti("last", -1);
  } else if (text == "R") {
    f.kind = FamilySpec::Kind::R;
    f.n = geti("n", 0);
    f.k = geti("k", 0);
  } else if (text == "Rt") {
    f.kind = FamilySpec::Kind::Rt;
    f.n = geti("n", 0);
    f.t = geti("t", 0);
    f.j = geti("j", 0);
    f.l = geti("l", 0);
  } else if (text == "P") {
    if (auto m = bag.take_int("m")) {
      f.kind = FamilySpec::Kind::P_pos;
      f.n = geti("n", 0);
      f.m = static_cast<int>(*m);
    } else {
      f.kind = FamilySpec::Kind::P_len;
      f.k = geti("k", 0);
    }
  } else if (text == "Pmax") {
    f.kind = FamilySpec::Kind::Pmax;
    f.k = geti("k", 0);
  } else if (text == "D") {
    f.kind = FamilySpec::Kind::D;
    f.k = geti("k", 0);
  } else {
    throw UsageError("unknown family designator '" + text + "'");
  }
  return f;
}

ClosedForm form_from_args(const std::string& text, KeyBag& bag) {
  if (text.find('(') != std::string::npos) {
    try {
      return ClosedForm::parse(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  ClosedForm cf{};
  try {
    cf.id = closed_form_from_name(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (auto v = bag.take_int("n")) cf.n = *v;
  if (auto v = bag.take_int("k")) cf.k = *v;
  if (auto v = bag.take_int("t")) cf.t = *v;
  if (auto v = bag.take_int("j")) cf.j = *v;
  if (auto v = bag.take_int("l")) cf.l = *v;
  if (auto v = bag.take("mu")) cf.mu = parts_value("mu", *v);
  if (auto v = bag.take_int("len_k")) cf.len_k = (*v != 0);
  return cf;
}

bool xy_weighted(ClosedFormId id) {
  return id == ClosedFormId::lhp_xy || id == ClosedFormId::tlh_xy ||
         id == ClosedFormId::tlh_xy_bar || id == ClosedFormId::talh_xy;
}

Grading grading_from_vars(const std::string& letters, long long order) {
  if (letters.empty()) throw UsageError("vars= needs at least one variable letter");
  Grading g{};
  g.bound = order;
  for (char ch : letters) {
    try {
      g.weight[static_cast<int>(var_from_name(ch))] = 1;
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("vars=: ") + e.what());
    }
  }
  return g;
}

struct StatChoice {
  std::vector<std::pair<std::string, Var>> assign;
  bool xy = false;
};

StatChoice stats_assignment(const std::string& name, const FamilySpec& fam) {
  if (name == "q") return {{{"weight", Var::q}}, false};
  if (name == "xy") return {{{"odd_index_sum", Var::x}, {"even_index_sum", Var::y}}, true};
  if (name == "uvq") {
    if (fam.kind == FamilySpec::Kind::A)
      return {{{"weight", Var::q}, {"floor_weight", Var::u}, {"floor_odd_count", Var::v}}, false};
    return {{{"weight", Var::q}, {"ceil_weight", Var::u}, {"ceil_odd_count", Var::v}}, false};
  }
  if (name == "zdiff") return {{{"weight", Var::q}, {"odd_even_diff", Var::z}}, false};
  if (name == "zodd") return {{{"weight", Var::q}, {"odd_parts", Var::z}}, false};
  throw UsageError("unknown stats assignment '" + name + "' (use q, uvq, xy, zdiff, zodd)");
}

// ---------------------------------------------------------------------------
// rendering

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parts_json(const std::vector<int>& parts) {
  Json a = Json::array();
  for (int p : parts) a.push_back(p);
  return a;
}

std::string parts_text(const std::vector<int>& parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Json exps_json(const Exps& e) {
  Json j = Json::object();
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] != 0) j[std::string(1, kVarName[i])] = e[i];
  return j;
}

std::string exps_text(const Exps& e) { return monomial_to_text(Monomial(Int(1), e)); }

Json report_json(const CheckReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j = Json::object();
  j["check_id"] = r.check_id;
  j["params"] = params;
  j["order"] = r.order;
  j["pass"] = r.pass;
  if (r.witness) {
    Json w = Json::object();
    w["exps"] = exps_json(r.witness->exps);
    w["lhs"] = r.witness->lhs.str();
    w["rhs"] = r.witness->rhs.str();
    j["witness"] = w;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string check_headline(const CheckReport& r) {
  std::string s = r.check_id;
  if (!r.params.empty()) {
    s += '(';
    for (size_t i = 0; i < r.params.size(); ++i) {
      if (i) s += ',';
      s += r.params[i].first + "=" + std::to_string(r.params[i].second);
    }
    s += ')';
  }
  s += " order=" + std::to_string(r.order);
  return s;
}

std::string witness_text(const Witness& w) {
  return "first difference at " + exps_text(w.exps) + ": lhs=" + w.lhs.str() +
         " rhs=" + w.rhs.str();
}

std::string report_plain(const CheckReport& r) {
  std::string s = check_headline(r) + ": " + (r.pass ? "PASS" : "FAIL") + "\n";
  if (r.witness) s += "  witness: " + witness_text(*r.witness) + "\n";
  if (!r.note.empty()) s += "  note: " + r.note + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// verbs

struct Command {
  Options opts;
  Format format = Format::plain;
  std::optional<std::string> out_file;
};

int do_enum(Command& cmd, std::string& result, std::ostream&) {
  if (cmd.opts.positional.size() != 1)
    throw UsageError("enum needs exactly one family spec");
  KeyBag bag(std::move(cmd.opts.kv));
  cmd.format = parse_format(bag.take("format"), /*csv_ok=*/false);
  cmd.out_file = bag.take("out");
  FamilySpec fam = family_from_args(cmd.opts.positional[0], bag);
  auto maxw = bag.take_int("maxw");
  if (!maxw) throw UsageError("enum needs maxw=W");
  bag.expect_empty("enum");

  auto members = generate(fam, *maxw);
  const bool ramped = fam.kind == FamilySpec::Kind::L ||
                      fam.kind == FamilySpec::Kind::Lbar ||
                      fam.kind == FamilySpec::Kind::A;
  if (cmd.format == Format::json) {
    Json rows = Json::array();
    for (const auto& seq : members) {
      StatVector st = statistics(seq);
      Json row = Json::object();
      row["parts"] = parts_json(seq.parts);
      row["weight"] = st.weight;
      row["odd_index_sum"] = st.odd_index_sum;
      row["even_index_sum"] = st.even_index_sum;
      row["positive_parts"] = st.positive_parts;
      row["odd_parts"] = st.odd_parts;
      row["last_part"] = st.last_part;
      if (ramped && st.has_ramp_images) {
        row["ceil_image"] = parts_json(st.ceil_image);
        row["ceil_weight"] = st.ceil_weight;
        row["ceil_odd_count"] = st.ceil_odd_count;
        row["floor_image"] = parts_json(st.floor_image);
        row["floor_weight"] = st.floor_weight;
        row["floor_odd_count"] = st.floor_odd_count;
      }
      rows.push_back(row);
    }
    result = dump(rows);
  } else {
    std::ostringstream os;
    for (const auto& seq : members) {
      StatVector st = statistics(seq);
      os << sequence_to_text(seq) << " weight=" << st.weight
         << " odd_index_sum=" << st.odd_index_sum
         << " even_index_sum=" << st.even_index_sum
         << " positive_parts=" << st.positive_parts
         << " odd_parts=" << st.odd_parts << " last_part=" << st.last_part;
      if (ramped && st.has_ramp_images) {
        os << " ceil_image=" << parts_text(st.ceil_image)
           << " ceil_weight=" << st.ceil_weight
           << " ceil_odd_count=" << st.ceil_odd_count
           << " floor_image=" << parts_text(st.floor_image)
           << " floor_weight=" << st.floor_weight
           << " floor_odd_count=" << st.floor_odd_count;
      }
      os << '\n';
    }
    result = os.str();
  }
  return 0;
}

int do_gf(Command& cmd, std::string& result, std::ostream&) {
  if (cmd.opts.positional.size() != 1)
    throw UsageError("gf needs exactly one form or family spec");
  KeyBag bag(std::move(cmd.opts.kv));
  cmd.format = parse_format(bag.take("format"), /*csv_ok=*/true);
  cmd.out_file = bag.take("out");
  const long long order = bag.take_int("order").value_or(15);
  if (order < 0) throw UsageError("order must be nonnegative");
  const std::string& spec = cmd.opts.positional[0];
  if (spec.empty()) throw UsageError("empty spec");

  GradedSeries s = GradedSeries::zero(Grading::q_grading(order));
  if (std::isupper(static_cast<unsigned char>(spec[0]))) {
    FamilySpec fam = family_from_args(spec, bag);
    StatChoice choice = stats_assignment(bag.take("stats").value_or("q"), fam);
    auto vars = bag.take("vars");
    bag.expect_empty("gf");
    Grading g = vars               ? grading_from_vars(*vars, order)
                : choice.xy        ? Grading::xy_grading(order)
                                   : Grading::q_grading(order);
    s = gf_oracle(fam, choice.assign, g);
  } else {
    ClosedForm cf = form_from_args(spec, bag);
    auto vars = bag.take("vars");
    bag.expect_empty("gf");
    Grading g = vars                   ? grading_from_vars(*vars, order)
                : xy_weighted(cf.id)   ? Grading::xy_grading(order)
                                       : Grading::q_grading(order);
    s = closed_form(cf, g);
  }

  switch (cmd.format) {
    case Format::plain:
      result = series_to_text(s) + "\n";
      break;
    case Format::json:
      result = dump(series_to_json(s));
      break;
    case Format::csv:
      result = series_to_csv(s);
      break;
  }
  return 0;
}

int do_check(Command& cmd, std::string& result, std::ostream& err) {
  if (cmd.opts.positional.size() != 1) throw UsageError("check needs exactly one check id");
  const std::string& id = cmd.opts.positional[0];
  const auto& ids = all_check_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw UsageError("unknown check id '" + id + "' (see qhall help for the catalog)");
  KeyBag bag(std::move(cmd.opts.kv));
  cmd.format = parse_format(bag.take("format"), /*csv_ok=*/false);
  cmd.out_file = bag.take("out");
  const long long order = bag.take_int("order").value_or(15);
  auto reading = bag.take("fin3-reading");
  std::map<std::string, long long> params = bag.drain_ints();
  if (reading) {
    if (*reading == "unbounded")
      params["unbounded"] = 1;
    else if (*reading == "bounded")
      params["unbounded"] = 0;
    else
      throw UsageError("--fin3-reading must be bounded or unbounded");
  }

  CheckReport r = run_check(id, params, order);
  err << "# elapsed_ms " << r.elapsed_ms << "\n";
  result = cmd.format == Format::json ? dump(report_json(r)) : report_plain(r);
  return r.pass ? 0 : 1;
}

int do_bijection(Command& cmd, std::string& result, std::ostream&) {
  if (cmd.opts.positional.size() != 1) throw UsageError("bijection needs exactly one map name");
  KeyBag bag(std::move(cmd.opts.kv));
  cmd.format = parse_format(bag.take("format"), /*csv_ok=*/false);
  cmd.out_file = bag.take("out");
  MapInstance m{};
  try {
    m.id = map_from_name(cmd.opts.positional[0]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto n = bag.take_int("n");
  if (!n) throw UsageError("bijection needs n=N");
  m.n = static_cast<int>(*n);
  m.k = static_cast<int>(bag.take_int("k").value_or(0));
  auto lambda = bag.take("lambda");
  const long long s = bag.take_int("s").value_or(0);
  const long long maxw = bag.take_int("maxw").value_or(8);
  bag.expect_empty("bijection");

  const bool has_k = m.id != MapId::bme;
  if (lambda) {
    std::vector<int> lam = parts_value("lambda", *lambda);
    PartSequence image = apply_map(m, lam, s);
    std::string line = trace_map(m, lam, s);
    if (cmd.format == Format::json) {
      Json j = Json::object();
      j["map"] = map_name(m.id);
      j["n"] = m.n;
      if (has_k) j["k"] = m.k;
      j["lambda"] = parts_json(lam);
      j["s"] = s;
      j["image"] = parts_json(image.parts);
      j["image_weight"] = image.weight();
      j["trace"] = line;
      result = dump(j);
    } else {
      result = line + "\n";
    }
    return 0;
  }

  BijectionReport r = verify_bijection(m, maxw);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (cmd.format == Format::json) {
    Json j = Json::object();
    j["map"] = map_name(m.id);
    j["n"] = m.n;
    if (has_k) j["k"] = m.k;
    j["max_weight"] = r.max_weight;
    j["pairs_checked"] = r.pairs_checked;
    j["codomain_size"] = r.codomain_size;
    j["injective"] = r.injective;
    j["surjective"] = r.surjective;
    j["laws_hold"] = r.laws_hold;
    j["pass"] = r.pass;
    if (!r.failure.empty()) j["failure"] = r.failure;
    result = dump(j);
  } else {
    std::ostringstream os;
    os << map_name(m.id) << "(n=" << m.n;
    if (has_k) os << ",k=" << m.k;
    os << ") image weights <= " << r.max_weight << ": " << (r.pass ? "PASS" : "FAIL")
       << " pairs=" << r.pairs_checked << " codomain=" << r.codomain_size
       << " injective=" << yn(r.injective) << " surjective=" << yn(r.surjective)
       << " laws=" << yn(r.laws_hold) << "\n";
    if (!r.failure.empty()) os << "  failure: " << r.failure << "\n";
    result = os.str();
  }
  return r.pass ? 0 : 1;
}

SuiteConfig config_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file '" + path + "' must hold a JSON object");
  SuiteConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "nmax")
      cfg.nmax = value.get<long long>();
    else if (key == "order")
      cfg.order = value.get<long long>();
    else if (key == "bijection_weight")
      cfg.bijection_weight = value.get<long long>();
    else if (key == "irecurr_imax")
      cfg.irecurr_imax = value.get<long long>();
    else if (key == "only")
      cfg.only = value.get<std::string>();
    else
      throw UsageError("config file '" + path + "': unknown key '" + key + "'");
  }
  return cfg;
}

int do_suite(Command& cmd, std::string& result, std::ostream& err) {
  if (!cmd.opts.positional.empty())
    throw UsageError("suite takes flags only, got '" + cmd.opts.positional[0] + "'");
  KeyBag bag(std::move(cmd.opts.kv));
  cmd.format = parse_format(bag.take("format"), /*csv_ok=*/false);
  cmd.out_file = bag.take("out");
  SuiteConfig cfg;
  if (auto path = bag.take("config")) cfg = config_from_file(*path);
  if (auto v = bag.take_int("nmax")) cfg.nmax = *v;
  if (auto v = bag.take_int("order")) cfg.order = *v;
  if (auto v = bag.take_int("bijection-weight")) cfg.bijection_weight = *v;
  if (auto v = bag.take_int("irecurr-imax")) cfg.irecurr_imax = *v;
  if (auto v = bag.take("only")) cfg.only = *v;
  bag.expect_empty("suite");

  std::vector<CheckReport> reports;
  try {
    reports = run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    // an --only id that is not in the catalog is a command line mistake
    throw UsageError(e.what());
  }
  long long failures = 0;
  double total_ms = 0.0;
  for (const auto& r : reports) {
    if (!r.pass) ++failures;
    total_ms += r.elapsed_ms;
  }
  err << "# checks=" << reports.size() << " failures=" << failures
      << " elapsed_ms=" << total_ms << "\n";

  if (cmd.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    result = dump(arr);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.pass ? "PASS " : "FAIL ") << check_headline(r);
      if (!r.pass && r.witness) os << " " << witness_text(*r.witness);
      if (!r.pass && !r.note.empty()) os << " [" << r.note << "]";
      os << '\n';
    }
    os << "checks: " << reports.size() << "  failures: " << failures << '\n';
    result = os.str();
  }
  return failures == 0 ? 0 : 1;
}

void deliver(const std::string& text, const std::optional<std::string>& out_file,
             std::ostream& out) {
  if (out_file) {
    std::ofstream f(*out_file, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + *out_file + "'");
    f << text;
    f.flush();
    if (!f.good()) throw UsageError("failed writing output file '" + *out_file + "'");
  } else {
    out << text;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Command cmd;
    cmd.opts = scan_args(args);
    if (cmd.opts.verb == "help" || cmd.opts.verb == "--help" || cmd.opts.verb == "-h") {
      out << kUsage;
      return 0;
    }
    std::string result;
    int code = 0;
    if (cmd.opts.verb == "enum")
      code = do_enum(cmd, result, err);
    else if (cmd.opts.verb == "gf")
      code = do_gf(cmd, result, err);
    else if (cmd.opts.verb == "check")
      code = do_check(cmd, result, err);
    else if (cmd.opts.verb == "bijection")
      code = do_bijection(cmd, result, err);
    else if (cmd.opts.verb == "suite")
      code = do_suite(cmd, result, err);
    else
      throw UsageError("unknown verb '" + cmd.opts.verb + "'");
    deliver(result, cmd.out_file, out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << kUsage;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace qhall
