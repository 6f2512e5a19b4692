// Copyright 2026 The Puiseux Authors
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

#include "puiseux/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "puiseux/cache.hpp"
#include "puiseux/checks.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/invariants.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/serialize.hpp"

namespace puiseux {

namespace {

struct Request {
  std::string command;
  std::string r_text;
  std::string n_text = "gens:1";
  std::string element_text;
  AtomIndex exp_cap = 64;
  Multiplicity len_cap = 512;
  bool no_len_cap = false;
  std::uint64_t index_cap = 16;
  Multiplicity size_cap = 16;
  double budget = 1e7;
  bool json = false;
  std::string cache_path;
  Multiplicity k = 2;
  std::optional<AtomIndex> atom_index;
  std::uint64_t count = 8;
  std::uint64_t samples = 20;
  std::uint64_t seed = 1;
  std::vector<std::string> pool;
};

struct Rendered {
  Json result = Json::object();
  Json flags = Json::object();  // copied to the top level of the record
  Json witnesses = Json::array();
  std::string text;
  int exit_code = 0;
};

// Thrown once an error record has been written.
struct Reported {
  int code;
};

std::string show(const Factorization& z) { return z.to_string(); }

std::string show_lengths(const std::vector<Multiplicity>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

std::string show_set(const std::set<Multiplicity>& v) {
  return show_lengths(std::vector<Multiplicity>(v.begin(), v.end()));
}

class Runner {
 public:
  explicit Runner(const Request& req) : req_(req) {}

  EnumerationCaps caps() const {
    EnumerationCaps c;
    c.exp_cap = req_.exp_cap;
    c.len_cap = req_.no_len_cap ? std::nullopt : std::optional<Multiplicity>(req_.len_cap);
    c.budget = static_cast<std::uint64_t>(req_.budget);
    return c;
  }

  Json caps_json() const {
    Json j = caps();
    j["index_cap"] = req_.index_cap;
    j["size_cap"] = req_.size_cap;
    return j;
  }

  void load() {
    if (req_.command == "verify") return;
    if (req_.r_text.empty()) throw ParseError("--r is required", 0);
    r_ = Rational::parse(req_.r_text);
    monoid_ = std::make_unique<NumericalMonoid>(parse_monoid(req_.n_text));
    semiring_ = std::make_unique<Semiring>(*r_, *monoid_);
    if (!req_.element_text.empty()) element_ = parse_element(*semiring_, req_.element_text);
  }

  Json inputs() const {
    Json j = Json::object();
    if (r_) j["r"] = *r_;
    if (monoid_) {
      j["N"] = Json{{"gens", monoid_->min_generators()}, {"frobenius", monoid_->frobenius()}};
    }
    j["element"] = element_ ? Json(*element_) : Json(nullptr);
    if (req_.command == "uk") j["k"] = req_.k;
    if (req_.command == "omega") j["atom_index"] = atom_index();
    if (req_.command == "betti" || req_.command == "info") j["count"] = req_.count;
    if (req_.command == "delta" && !element_) {
      j["samples"] = req_.samples;
      j["seed"] = req_.seed;
    }
    if (req_.command == "verify") j["pool"] = req_.pool;
    return j;
  }

  Json cache_key_json() const {
    Json j = inputs();
    j["command"] = req_.command;
    j["caps"] = caps_json();
    j["json"] = req_.json;
    j["version"] = kVersion;
    return j;
  }

  Rendered dispatch() {
    const auto& c = req_.command;
    if (c == "info") return info();
    if (c == "member") return member_cmd();
    if (c == "factorize") return factorize();
    if (c == "lengths") return lengths();
    if (c == "delta") return delta();
    if (c == "catenary") return catenary();
    if (c == "betti") return betti();
    if (c == "uk") return uk();
    if (c == "omega") return omega_cmd();
    if (c == "classify") return classify_cmd();
    if (c == "verify") return verify();
    throw Error(ErrorKind::InvalidArgument, "unknown command " + c);
  }

 private:
  const Semiring& s() const { return *semiring_; }

  const Rational& need_element() const {
    if (!element_) throw Error(ErrorKind::InvalidArgument, "--element is required");
    return *element_;
  }

  void need_member(const Rational& x) const {
    if (!member(s(), x)) throw Error(ErrorKind::NotMember, x.to_string() + " is not in the semiring");
  }

  AtomIndex atom_index() const {
    return req_.atom_index.value_or(monoid_ ? monoid_->conductor_index() : 0);
  }

  Rendered info() {
    Rendered out;
    const auto& m = s().monoid();
    Json atoms = Json::array();
    std::ostringstream text;
    text << "r = " << s().base().to_string() << " (n = " << s().num().get_str()
         << ", d = " << s().den().get_str() << ")\n"
         << "N = " << m.to_string() << ", Frobenius " << m.frobenius() << ", conductor "
         << m.conductor() << ", multiplicity " << m.multiplicity() << "\n"
         << "class " << to_string(s().kind()) << "\n";
    if (s().is_atomic()) {
      const std::uint64_t shown = s().kind() == SemiringClass::Trivial ? 1 : req_.count;
      text << "atoms:";
      for (AtomIndex k = 0; k < shown; ++k) {
        atoms.push_back(Json{{"index", k}, {"exponent", m.element(k)}, {"value", s().atom(k)}});
        text << " " << s().atom(k).to_string();
      }
      text << "\n";
    }
    out.result = Json{{"n", big_to_json(s().num())},
                      {"d", big_to_json(s().den())},
                      {"class", std::string(to_string(s().kind()))},
                      {"monoid",
                       {{"gens", m.min_generators()},
                        {"frobenius", m.frobenius()},
                        {"conductor", m.conductor()},
                        {"multiplicity", m.multiplicity()},
                        {"small_elements", m.small_elements()}}},
                      {"atoms", atoms}};
    out.text = text.str();
    return out;
  }

  Rendered member_cmd() {
    Rendered out;
    const Rational& x = need_element();
    s().require_atomic();
    const auto shortest = member(s(), x);
    out.result["member"] = shortest.has_value();
    out.result["exponent_bound"] = nullptr;
    if (s().is_nontrivial_atomic()) {
      if (auto e = exponent_bound(s(), x)) out.result["exponent_bound"] = *e;
    }
    if (!shortest) {
      out.result["min"] = nullptr;
      out.result["max"] = nullptr;
      out.result["elasticity"] = nullptr;
      out.text = x.to_string() + " is not a member\n";
      return out;
    }
    const auto longest = extremal(s(), *shortest, Extremum::Max);
    out.result["min"] = *shortest;
    out.result["max"] = longest ? Json(*longest) : Json(nullptr);
    out.result["elasticity"] = elasticity_to_json(elasticity(s(), x));
    out.text = x.to_string() + " is a member\nmin " + show(*shortest) + "\nmax " +
               (longest ? show(*longest) : std::string("none (lengths unbounded)")) + "\n";
    return out;
  }

  Rendered factorize() {
    Rendered out;
    const Rational& x = need_element();
    s().require_atomic();
    need_member(x);
    const FactorizationSet set = factorizations(s(), x, caps());
    out.result = set;
    out.flags["complete"] = set.complete;
    std::ostringstream text;
    for (const auto& z : set.items) text << show(z) << "  (length " << z.length() << ")\n";
    text << set.items.size() << " factorizations, " << (set.complete ? "complete" : "truncated")
         << "\n";
    out.text = text.str();
    return out;
  }

  Rendered lengths() {
    Rendered out;
    const Rational& x = need_element();
    s().require_atomic();
    need_member(x);
    const LengthSet ls = length_set(s(), x, caps());
    out.result = ls;
    out.result["delta"] = delta_of(ls.lengths);
    out.result["proven_delta"] = proven_delta(ls);
    out.result["aap"] = nullptr;
    if (ls.complete && s().is_nontrivial_atomic() && !ls.lengths.empty()) {
      out.result["aap"] = aap_decompose(ls.lengths, s().length_step().get_ui());
    }
    out.flags["complete"] = ls.complete;
    out.text = show_lengths(ls.lengths) + (ls.complete ? "" : " (truncated)") + "\n";
    return out;
  }

  Rendered delta() {
    Rendered out;
    s().require_atomic();
    if (element_) {
      need_member(*element_);
      const LengthSet ls = length_set(s(), *element_, caps());
      const auto proven = proven_delta(ls);
      out.result = Json{{"lengths", ls.lengths},
                        {"delta", delta_of(ls.lengths)},
                        {"proven", proven},
                        {"exact_through", ls.exact_through ? Json(*ls.exact_through) : Json(nullptr)}};
      out.flags["complete"] = ls.complete;
      out.text = show_set(proven) + (ls.complete ? "" : " (proven part of a truncated set)") + "\n";
      return out;
    }
    const DeltaReport report = delta_semiring(s(), req_.index_cap, req_.samples, caps(), req_.seed);
    out.result = report;
    out.flags["complete"] = false;
    out.witnesses = Json::array({report.min_witness, report.max_witness});
    std::ostringstream text;
    text << "proven " << show_set(report.proven) << "\n"
         << "interval [" << report.interval_low.get_str() << ", " << report.interval_high.get_str()
         << "]\n"
         << "min witness " << report.min_witness.element.to_string()
         << (report.min_witness.attained ? " attains " : " does not show ")
         << report.min_witness.distance.get_str() << "\n"
         << "max witness " << report.max_witness.element.to_string()
         << (report.max_witness.attained ? " attains " : " does not show ")
         << report.max_witness.distance.get_str() << "\n";
    out.text = text.str();
    return out;
  }

  Rendered catenary() {
    Rendered out;
    if (element_) {
      s().require_atomic();
      need_member(*element_);
      const CatenaryResult c = catenary_element(s(), *element_, caps());
      out.result = c;
      out.flags["exact"] = c.exact;
      out.text = std::to_string(c.value) + (c.exact ? "" : " (lower bound)") + "\n";
      return out;
    }
    const BigInt c = catenary_semiring(s());
    out.result = Json{{"value", big_to_json(c)}};
    out.flags["exact"] = true;
    out.text = c.get_str() + "\n";
    return out;
  }

  Rendered betti() {
    Rendered out;
    const auto list = betti_elements(s(), req_.count);
    out.result = Json{{"betti", list}};
    std::ostringstream text;
    for (const auto& b : list) {
      text << b.index << "  " << b.multiplicity.get_str() << "*r^" << s().monoid().element(b.index)
           << " = " << b.element.to_string() << "\n";
    }
    out.text = text.str();
    return out;
  }

  Rendered uk() {
    Rendered out;
    const UnionWindow u = union_k(s(), req_.k, req_.index_cap, caps());
    out.result = u;
    out.text = show_lengths(u.lengths) + " (exact through " +
               (u.exact_through ? std::to_string(*u.exact_through) : std::string("-")) +
               ", claimed difference " + u.claimed_difference.get_str() + ")\n";
    return out;
  }

  Rendered omega_cmd() {
    Rendered out;
    const OmegaResult r =
        omega(s(), atom_index(), req_.exp_cap, req_.size_cap, static_cast<std::uint64_t>(req_.budget));
    out.result = r;
    out.flags["exact"] = r.status != OmegaStatus::BoundedEstimate;
    out.witnesses = r.witnesses;
    std::ostringstream text;
    if (r.status == OmegaStatus::Infinite) {
      text << "infinite\n";
    } else {
      text << (r.status == OmegaStatus::Finite ? "" : ">= ") << r.lower;
      if (r.upper) text << " (bound " << r.upper->get_str() << ")";
      text << "\n";
    }
    out.text = text.str();
    return out;
  }

  Rendered classify_cmd() {
    Rendered out;
    const Classification c = classify(s());
    out.result = c;
    out.result["class"] = std::string(to_string(s().kind()));
    out.result["catenary"] = nullptr;
    out.result["elasticity"] = nullptr;
    if (s().is_atomic()) {
      out.result["catenary"] = big_to_json(catenary_semiring(s()));
      out.result["elasticity"] = elasticity_to_json(elasticity(s()));
    }
    std::ostringstream text;
    text << "class " << to_string(s().kind()) << "\n";
    for (auto it = out.result.begin(); it != out.result.end(); ++it) {
      if (it.value().is_boolean()) text << it.key() << " " << (it.value().get<bool>() ? "yes" : "no") << "\n";
    }
    out.text = text.str();
    return out;
  }

  Rendered verify() {
    Rendered out;
    std::vector<checks::Instance> pool;
    if (req_.pool.empty()) {
      pool = checks::default_pool();
    } else {
      for (const auto& entry : req_.pool) pool.push_back(checks::parse_instance(entry));
    }
    Json instances = Json::array();
    std::ostringstream text;
    bool failed = false;
    for (const auto& inst : pool) {
      Json list = Json::array();
      for (const auto& o : checks::verify_instance(inst.semiring, req_.seed)) {
        failed = failed || o.status == checks::Status::Fail;
        list.push_back(Json{{"claim", o.claim},
                            {"status", std::string(checks::to_string(o.status))},
                            {"detail", o.detail}});
        text << "[" << checks::to_string(o.status) << "] " << inst.label << ": " << o.claim;
        if (!o.detail.empty()) text << " (" << o.detail << ")";
        text << "\n";
      }
      instances.push_back(Json{{"label", inst.label}, {"checks", list}});
    }
    out.result = Json{{"instances", instances}, {"passed", !failed}};
    out.text = text.str() + (failed ? "verify: FAILED\n" : "verify: all checks passed\n");
    out.exit_code = failed ? 3 : 0;
    return out;
  }

  const Request& req_;
  std::optional<Rational> r_;
  std::unique_ptr<NumericalMonoid> monoid_;
  std::unique_ptr<Semiring> semiring_;
  std::optional<Rational> element_;
};

void add_common(CLI::App* cmd, Request& req) {
  cmd->add_option("--r", req.r_text, "base r as a or a/b");
  cmd->add_option("--N", req.n_text, "numerical monoid: gens:a,b,... or elems:...;cond:c")
      ->capture_default_str();
  cmd->add_option("--element", req.element_text, "rational or sum of c*r^e terms");
  cmd->add_option("--exp-cap", req.exp_cap, "largest atom index enumerated (r < 1)")
      ->capture_default_str();
  cmd->add_option("--len-cap", req.len_cap, "largest length enumerated (r < 1)")
      ->capture_default_str();
  cmd->add_flag("--no-len-cap", req.no_len_cap, "drop the length cap");
  cmd->add_option("--index-cap", req.index_cap, "largest atom / Betti index examined")
      ->capture_default_str();
  cmd->add_option("--size-cap", req.size_cap, "largest bouquet size (omega)")->capture_default_str();
  cmd->add_option("--budget", req.budget, "search node budget")->capture_default_str();
  cmd->add_flag("--json", req.json, "emit a JSON record");
  cmd->add_option("--cache", req.cache_path, "result cache file (PUISEUX_CACHE overrides)");
}

std::string render(const Request& req, Runner& runner, const Rendered& r) {
  if (!req.json) return r.text;
  Json record = Json{{"schema", kSchemaVersion},
                     {"op", req.command},
                     {"inputs", runner.inputs()},
                     {"caps", runner.caps_json()},
                     {"result", r.result},
                     {"witnesses", r.witnesses}};
  for (auto it = r.flags.begin(); it != r.flags.end(); ++it) record[it.key()] = it.value();
  return record.dump() + "\n";
}

void report_error(const Request& req, std::ostream& out, std::ostream& err, const Error& e,
                  std::optional<std::size_t> position) {
  if (position) {
    err << "parse error at position " << *position << ": " << e.what() << "\n";
  } else {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  }
  if (req.json) {
    Json error{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (position) error["position"] = *position;
    out << Json{{"schema", kSchemaVersion}, {"op", req.command}, {"error", error}}.dump() << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Exponential Puiseux semirings: factorizations and invariants", "puiseux"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"info", "base, monoid and first atoms"},
      {"member", "membership and extremal factorizations"},
      {"factorize", "set of factorizations"},
      {"lengths", "set of lengths with AAP structure"},
      {"delta", "set of distances of an element or of the semiring"},
      {"catenary", "catenary degree of an element or of the semiring"},
      {"betti", "first Betti elements"},
      {"uk", "window of the union of sets of lengths U_k"},
      {"omega", "omega primality of an atom"},
      {"classify", "ACCP, tameness and related flags"},
      {"verify", "run the property checks over an instance pool"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, req);
    if (name == "uk") cmd->add_option("--k", req.k, "length k")->capture_default_str();
    if (name == "omega") cmd->add_option("--atom-index", req.atom_index, "atom index (default: r^{F+1})");
    if (name == "betti" || name == "info") {
      cmd->add_option("--count", req.count, "how many to list")->capture_default_str();
    }
    if (name == "delta" || name == "verify") {
      cmd->add_option("--samples", req.samples, "random elements examined")->capture_default_str();
      cmd->add_option("--seed", req.seed, "random seed")->capture_default_str();
    }
    if (name == "verify") cmd->add_option("--pool", req.pool, "instance R@NSPEC (repeatable)");
    cmd->callback([&req, name = name] { req.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return 1;
  }

  Runner runner(req);
  try {
    runner.load();
  } catch (const ParseError& e) {
    report_error(req, out, err, e, e.position());
    return 1;
  } catch (const Error& e) {
    report_error(req, out, err, e, std::nullopt);
    return 2;
  }

  std::string cache_path = req.cache_path;
  if (const char* env = std::getenv("PUISEUX_CACHE"); env && *env) cache_path = env;
  std::unique_ptr<ResultCache> cache;
  std::string key;
  if (!cache_path.empty() && req.command != "verify") {
    cache = std::make_unique<ResultCache>(cache_path, err);
    key = cache_key(runner.cache_key_json());
    if (auto hit = cache->get(key)) {
      out << *hit;
      return 0;
    }
  }

  try {
    const Rendered r = runner.dispatch();
    const std::string text = render(req, runner, r);
    out << text;
    if (cache && r.exit_code == 0) cache->put(key, text);
    return r.exit_code;
  } catch (const ParseError& e) {
    report_error(req, out, err, e, e.position());
    return 1;
  } catch (const Error& e) {
    report_error(req, out, err, e, std::nullopt);
    return 2;
  }
}

}  // namespace puiseux
