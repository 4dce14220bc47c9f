// cpt: experiment drivers over the apartment and rigidity machinery.
//
// Every subcommand writes one JSON document (to --out, or stdout) and a short
// human summary (to stdout when --out is given, stderr otherwise).
// Exit codes: 0 ok, 1 violation / negative result, 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpt/apartment.hpp"
#include "cpt/compatibility.hpp"
#include "cpt/error.hpp"
#include "cpt/generators.hpp"
#include "cpt/io.hpp"
#include "cpt/pair_scan.hpp"
#include "cpt/rigidity.hpp"

namespace {

using cpt::io::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string n;
  std::string alphas;
  std::string dims;
  std::size_t k = 0;
  std::size_t max_rank = 3;
  std::uint64_t seed = 1;
  std::string frame;
  std::string out;
  std::string name;
  std::string input;
  bool random = false;
  std::size_t count = 4;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t parse_size(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || s.front() == '-') throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  if (s.empty()) throw ConfigError("--n is required");
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const std::size_t n = parse_size(s, "--n");
    return {n, n};
  }
  const std::size_t lo = parse_size(s.substr(0, colon), "--n");
  const std::size_t hi = parse_size(s.substr(colon + 1), "--n");
  if (lo > hi) throw ConfigError("--n: empty range " + s);
  return {lo, hi};
}

std::size_t parse_n(const Options& o) {
  const auto [lo, hi] = parse_range(o.n);
  if (lo != hi) throw ConfigError("--n must be a single dimension for this command");
  return lo;
}

std::vector<std::size_t> parse_dims(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_size(item, "--dims entry"));
  return out;
}

/// Class from --alphas/--dims; alphas default to 1..m.
cpt::ClassDescriptor make_class(std::size_t n, const std::vector<std::size_t>& dims, const std::string& alphas) {
  if (dims.empty()) throw ConfigError("--dims is required");
  std::vector<cpt::Rational> a;
  if (alphas.empty()) {
    for (std::size_t t = 0; t < dims.size(); ++t) a.emplace_back(static_cast<long>(t + 1));
  } else {
    for (const auto& item : split(alphas, ',')) a.push_back(cpt::parse_rational(item));
  }
  try {
    return cpt::ClassDescriptor(n, std::move(a), dims);
  } catch (const cpt::Error& e) {
    throw ConfigError(std::string("class infeasible: ") + e.what());
  }
}

/// The classes a scan covers: the one given by --dims, else every partition of
/// every rank up to --max-rank.
std::vector<cpt::ClassDescriptor> classes_for(std::size_t n, const Options& o) {
  if (!o.dims.empty()) return {make_class(n, parse_dims(o.dims), o.alphas)};
  if (!o.alphas.empty()) throw ConfigError("--alphas needs --dims");
  std::vector<cpt::ClassDescriptor> out;
  for (std::size_t k = 1; k <= o.max_rank; ++k) {
    for (const auto& dims : cpt::integer_partitions(k)) {
      if (k <= n) out.push_back(cpt::class_with_dims(n, dims));
    }
  }
  return out;
}

cpt::Apartment make_apartment(const cpt::ClassDescriptor& cls, const Options& o) {
  if (o.frame.empty()) return cpt::Apartment::standard(cls);
  const cpt::Frame f = cpt::io::frame_from_json(cpt::io::read_json_file(o.frame));
  if (f.ambient_dim() != cls.n()) throw ConfigError("--frame: dimension does not match --n");
  return {f, cls};
}

json histogram_json(const cpt::CountHistogram& h) {
  json out = json::object();
  for (const auto& [m, counts] : h) {
    json row = json::array();
    for (const auto& [count, pairs] : counts) row.push_back({{"count", count}, {"pairs", pairs}});
    out[std::to_string(m)] = row;
  }
  return out;
}

json pair_json(const std::vector<cpt::Labeling>& members, std::size_t a, std::size_t b) {
  return json::array({cpt::io::to_json(members[a]), cpt::io::to_json(members[b])});
}

void emit(const json& doc, const std::string& summary, const Options& o) {
  const std::string text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    std::cerr << summary;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + o.out);
  file << text;
  std::cout << summary;
}

json class_report_header(const cpt::ClassDescriptor& cls) {
  return {{"schema_version", cpt::io::kSchemaVersion}, {"n", cls.n()}, {"k", cls.rank()}, {"class", cpt::io::to_json(cls)}};
}

int cmd_verify_lemma3(const Options& o) {
  const std::size_t n = parse_n(o);
  json reports = json::array();
  std::ostringstream summary;
  std::uint64_t total_violations = 0;
  for (const auto& cls : classes_for(n, o)) {
    if (n < 2 * cls.rank() + 1) {
      throw ConfigError("verify-lemma3 needs n >= 2k+1 (n=" + std::to_string(n) + ", k=" + std::to_string(cls.rank()) + ")");
    }
    const cpt::Apartment ap = make_apartment(cls, o);
    const auto members = cpt::enumerate_members(ap);
    const cpt::CountScan scan = cpt::scan_counts_parallel(ap, members);

    json report = class_report_header(cls);
    report["members"] = members.size();
    report["pairs_checked"] = scan.pairs_checked;
    report["orthogonal_pairs"] = scan.orthogonal_pairs;
    report["orthogonal_pairs_at_k2"] = scan.orthogonal_at_k2;
    json violations = json::array();
    for (const auto& v : scan.violations) {
      violations.push_back({{"pair", pair_json(members, v.first, v.second)},
                            {"overlap", v.overlap},
                            {"count", v.count},
                            {"expected", v.expected},
                            {"kind", v.kind}});
    }
    report["violations"] = violations;
    report["counts_histogram"] = histogram_json(scan.histogram);
    reports.push_back(report);

    total_violations += scan.violations.size();
    summary << "verify-lemma3 n=" << n << " dims=" << report["class"]["dims"].dump() << ": " << scan.pairs_checked
            << " pairs, " << scan.orthogonal_pairs << " orthogonal (" << scan.orthogonal_at_k2 << " at k^2), "
            << scan.violations.size() << " violations\n";
  }
  json doc = reports.size() == 1 ? reports[0] : json{{"schema_version", cpt::io::kSchemaVersion}, {"n", n}, {"reports", reports}};
  emit(doc, summary.str(), o);
  return total_violations == 0 ? kOk : kViolation;
}

int cmd_verify_lemma4(const Options& o) {
  const std::size_t n = parse_n(o);
  json reports = json::array();
  std::ostringstream summary;
  std::uint64_t total = 0;
  for (const auto& cls : classes_for(n, o)) {
    if (n < 4 * cls.rank()) {
      throw ConfigError("verify-lemma4 needs n >= 4k (n=" + std::to_string(n) + ", k=" + std::to_string(cls.rank()) + ")");
    }
    const cpt::Apartment ap = make_apartment(cls, o);
    const auto members = cpt::enumerate_members(ap);
    const auto ops = cpt::materialize_members(ap, members);
    const auto agreement = cpt::scan_orthogonality_parallel(ap, members, ops);

    json report = class_report_header(cls);
    report["members"] = members.size();
    report["pairs_checked"] = agreement.pairs_checked;
    report["orthogonal_pairs"] = agreement.orthogonal_pairs;
    json violations = json::array();
    for (const auto& [a, b] : agreement.disagreements) {
      violations.push_back({{"pair", pair_json(members, a, b)}, {"kind", "count-decision-disagrees"}});
    }
    report["violations"] = violations;
    reports.push_back(report);

    total += agreement.disagreements.size();
    summary << "verify-lemma4 n=" << n << " dims=" << report["class"]["dims"].dump() << ": " << agreement.pairs_checked
            << " pairs, " << agreement.disagreements.size() << " disagreements\n";
  }
  json doc = reports.size() == 1 ? reports[0] : json{{"schema_version", cpt::io::kSchemaVersion}, {"n", n}, {"reports", reports}};
  emit(doc, summary.str(), o);
  return total == 0 ? kOk : kViolation;
}

int cmd_scan_boundary(const Options& o) {
  if (o.k == 0) throw ConfigError("--k is required");
  const std::size_t k = o.k;
  const auto [lo, hi] = parse_range(o.n);
  std::vector<std::size_t> ns;
  for (std::size_t n = lo; n <= hi; ++n) {
    if (2 * k < n && n < 4 * k) ns.push_back(n);
  }
  if (ns.empty()) throw ConfigError("--n range has no n with 2k < n < 4k");
  if (!o.dims.empty()) {
    const auto dims = parse_dims(o.dims);
    std::size_t rank = 0;
    for (auto d : dims) rank += d;
    if (rank != k) throw ConfigError("--dims must sum to --k");
  }

  json rows = json::array();
  std::ostringstream summary;
  bool all_equal = true;
  for (std::size_t n : ns) {
    const auto nk = static_cast<long long>(k);
    const auto nn = static_cast<long long>(n);
    json row{{"n", n}, {"c0", cpt::rational_str(cpt::c_eval(0, nk, nn))}};
    if ((4 * k - n) % 2 == 0) {
      const long long m = (4 * nk - nn) / 2;
      const cpt::Rational cm = cpt::c_eval(cpt::Rational(static_cast<long>(m)), nk, nn);
      const bool equal = cm == cpt::c_eval(0, nk, nn);
      all_equal = all_equal && equal;
      row["m"] = m;
      row["cm"] = cpt::rational_str(cm);
      row["c0_equals_cm"] = equal;
    } else {
      row["m"] = nullptr;
      row["m_value"] = cpt::rational_str(cpt::Rational(static_cast<long>(4 * nk - nn), 2));
    }
    json bounds = json::array();
    for (long long m = 0; m <= nk; ++m) bounds.push_back({{"m", m}, {"bound", cpt::lemma3_bound(nk, m, nn)}});
    row["bounds"] = bounds;

    json searches = json::array();
    Options scope = o;
    scope.max_rank = k;
    for (const auto& cls : classes_for(n, scope)) {
      if (cls.rank() != k) continue;
      const cpt::Apartment ap = make_apartment(cls, o);
      const auto members = cpt::enumerate_members(ap);
      const cpt::CountScan scan = cpt::scan_counts_parallel(ap, members);
      json examples = json::array();
      for (const auto& [a, b] : scan.nonorthogonal_at_k2_examples) examples.push_back(pair_json(members, a, b));
      searches.push_back({{"class", cpt::io::to_json(cls)},
                          {"pairs_checked", scan.pairs_checked},
                          {"nonorthogonal_at_k2", scan.nonorthogonal_at_k2},
                          {"found", scan.nonorthogonal_at_k2 > 0},
                          {"examples", examples}});
      summary << "scan-boundary k=" << k << " n=" << n << " dims=" << searches.back()["class"]["dims"].dump()
              << ": non-orthogonal pairs at k^2: " << scan.nonorthogonal_at_k2 << "\n";
    }
    row["search"] = searches;
    rows.push_back(row);
  }
  const json doc{{"schema_version", cpt::io::kSchemaVersion}, {"k", k}, {"rows", rows}};
  emit(doc, summary.str(), o);
  return all_equal ? kOk : kViolation;
}

json witness_json(const std::optional<cpt::TraceWitness>& w) {
  if (!w) return nullptr;
  return {{"s", w->s + 1}, {"t", w->t + 1}, {"lhs", cpt::rational_str(w->lhs)}, {"rhs", cpt::rational_str(w->rhs)}};
}

cpt::Subspace coordinate_span(std::size_t n, std::size_t first, std::size_t count) {
  std::vector<cpt::Vector> vs;
  for (std::size_t i = first; i < first + count; ++i) vs.push_back(cpt::unit_vector(n, i));
  return cpt::projection_of(n, vs);
}

int cmd_counterexample(const Options& o) {
  std::optional<cpt::FiniteTransformation> t;
  cpt::Relation relation = cpt::Relation::commute;
  try {
    if (o.name == "orth") {
      const std::size_t n = parse_n(o);
      const cpt::ClassDescriptor cls = make_class(n, parse_dims(o.dims), o.alphas);
      t = cpt::example_orth_swap(cls, coordinate_span(n, 0, cls.rank()));
      relation = cpt::Relation::orthogonal;
    } else if (o.name == "comm") {
      const std::size_t n = o.n.empty() ? 4 : parse_n(o);
      const auto dims = o.dims.empty() ? std::vector<std::size_t>{1} : parse_dims(o.dims);
      if (dims.size() != 1) throw ConfigError("comm: --dims takes one eigenspace dimension");
      std::vector<cpt::Rational> ab{1, 2};
      if (!o.alphas.empty()) {
        ab.clear();
        for (const auto& item : split(o.alphas, ',')) ab.push_back(cpt::parse_rational(item));
        if (ab.size() != 2) throw ConfigError("comm: --alphas takes two values");
      }
      if (2 * dims[0] > n) throw ConfigError("comm: needs n >= 2 * dims");
      t = cpt::example_comm_swap(ab[0], ab[1], dims[0], coordinate_span(n, 0, dims[0]), coordinate_span(n, dims[0], dims[0]));
    } else {
      throw ConfigError("counterexample name must be orth or comm");
    }
  } catch (const cpt::InvalidArgument& e) {
    throw ConfigError(e.what());
  } catch (const cpt::ProjectionClass& e) {
    throw ConfigError(e.what());
  }

  const bool commute = cpt::check_preservation(*t, cpt::Relation::commute);
  const bool orth = cpt::check_preservation(*t, cpt::Relation::orthogonal);
  const auto w = cpt::gram_obstruction(*t);
  const json doc{{"schema_version", cpt::io::kSchemaVersion},
                 {"name", o.name},
                 {"class", cpt::io::to_json(t->source(0).descriptor())},
                 {"domain_size", t->size()},
                 {"swapped", {cpt::io::to_json(t->source(0)), cpt::io::to_json(t->source(1))}},
                 {"preserves", {{"commute", commute}, {"orthogonal", orth}}},
                 {"witness", witness_json(w)}};
  const bool ok = (relation == cpt::Relation::commute ? commute : orth) && w.has_value();
  std::ostringstream summary;
  summary << "counterexample " << o.name << ": domain " << t->size() << ", preserves "
          << (relation == cpt::Relation::commute ? "commutativity " : "orthogonality ") << (ok ? "yes" : "no");
  if (w) summary << ", trace witness (" << w->s + 1 << "," << w->t + 1 << "): " << w->lhs << " vs " << w->rhs;
  summary << "\n";
  emit(doc, summary.str(), o);
  return ok ? kOk : kViolation;
}

int cmd_refine(const Options& o) {
  std::size_t n = 0;
  std::vector<cpt::Subspace> family;
  if (o.random) {
    n = parse_n(o);
    if (n == 0) throw ConfigError("--n must be positive");
    cpt::Rng rng(o.seed);
    family = cpt::random_compatible_family(n, o.count, rng).family;
  } else {
    if (o.input.empty()) throw ConfigError("refine needs a family file or --random");
    auto file = cpt::io::family_from_json(cpt::io::read_json_file(o.input));
    n = file.n;
    family = std::move(file.family);
  }
  try {
    const cpt::Frame f = cpt::refine_to_frame(n, family);
    json doc = cpt::io::to_json(f);
    doc["schema_version"] = cpt::io::kSchemaVersion;
    json spans = json::array();
    for (const auto& x : family) {
      json lines = json::array();
      for (std::size_t i : f.lines_in(x)) lines.push_back(i + 1);
      spans.push_back(lines);
    }
    doc["member_lines"] = spans;
    if (o.random) doc["family"] = [&] {
      json fam = json::array();
      for (const auto& x : family) fam.push_back(cpt::io::subspace_to_json(x));
      return fam;
    }();
    emit(doc, "refine: " + std::to_string(family.size()) + " subspaces -> frame of " + std::to_string(n) + " lines\n", o);
    return kOk;
  } catch (const cpt::IncompatibleFamily& e) {
    const std::string message = "subspaces " + std::to_string(e.first + 1) + " and " + std::to_string(e.second + 1) +
                                " are not compatible";
    const json doc{{"schema_version", cpt::io::kSchemaVersion},
                   {"error", "incompatible"},
                   {"pair", {e.first + 1, e.second + 1}},
                   {"message", message}};
    emit(doc, "refine: " + message + "\n", o);
    return kViolation;
  }
}

int cmd_inexact(const Options& o) {
  if (o.input.empty()) throw ConfigError("inexact needs a member-set file");
  const auto file = cpt::io::member_set_from_json(cpt::io::read_json_file(o.input));
  std::optional<cpt::Apartment> ap;
  if (!o.frame.empty()) {
    ap.emplace(make_apartment(file.cls, o));
  } else if (file.frame) {
    ap.emplace(*file.frame, file.cls);
  } else {
    ap.emplace(cpt::Apartment::standard(file.cls));
  }
  const auto decision = cpt::is_orthogonally_inexact(file.members, *ap);
  json supports = json::array();
  for (cpt::IndexMask mask : decision.supports) {
    json lines = json::array();
    for (std::size_t i = 0; i < ap->n(); ++i) {
      if (mask >> i & 1U) lines.push_back(i + 1);
    }
    supports.push_back(lines);
  }
  json witness = nullptr;
  if (decision.witness) witness = {{"i", decision.witness->i + 1}, {"j", decision.witness->j + 1}};
  const json doc{{"schema_version", cpt::io::kSchemaVersion},
                 {"class", cpt::io::to_json(file.cls)},
                 {"members", file.members.size()},
                 {"inexact", decision.inexact},
                 {"witness", witness},
                 {"supports", supports}};
  emit(doc, std::string("inexact: ") + (decision.inexact ? "orthogonally inexact" : "exact") + "\n", o);
  return kOk;
}

void add_class_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Ambient dimension");
  cmd->add_option("--alphas", o.alphas, "Comma-separated eigenvalues, p/q form (default 1..m)");
  cmd->add_option("--dims", o.dims, "Comma-separated eigenspace dimensions");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on conjugacy classes of finite-rank self-adjoint operators"};
  app.require_subcommand(1);
  Options o;

  auto* lemma3 = app.add_subcommand("verify-lemma3", "Orthocomplementary-count bound over all member pairs");
  add_class_flags(lemma3, o);
  lemma3->add_option("--max-rank", o.max_rank, "Rank cap when --dims is omitted (all classes)");
  lemma3->add_option("--frame", o.frame, "Frame file (default: standard basis)");
  lemma3->add_option("--out", o.out, "Report path");

  auto* lemma4 = app.add_subcommand("verify-lemma4", "Orthogonality decided by count, n >= 4k");
  add_class_flags(lemma4, o);
  lemma4->add_option("--max-rank", o.max_rank, "Rank cap when --dims is omitted (all classes)");
  lemma4->add_option("--frame", o.frame, "Frame file (default: standard basis)");
  lemma4->add_option("--out", o.out, "Report path");

  auto* boundary = app.add_subcommand("scan-boundary", "c(0) vs c(m) and k^2 search for 2k < n < 4k");
  boundary->add_option("--k", o.k, "Rank")->required();
  boundary->add_option("--n", o.n, "Dimension or lo:hi range")->required();
  boundary->add_option("--dims", o.dims, "Restrict the search to one class");
  boundary->add_option("--frame", o.frame, "Frame file (default: standard basis)");
  boundary->add_option("--out", o.out, "Report path");

  auto* counter = app.add_subcommand("counterexample", "Swap constructions with a trace-pairing certificate");
  counter->add_option("name", o.name, "orth | comm")->required()->check(CLI::IsMember({"orth", "comm"}));
  add_class_flags(counter, o);
  counter->add_option("--out", o.out, "Certificate path");

  auto* refine = app.add_subcommand("refine", "Common orthogonal frame of a compatible family");
  refine->add_option("family", o.input, "Family JSON file");
  refine->add_flag("--random", o.random, "Generate a random compatible family");
  refine->add_option("--seed", o.seed, "Seed for --random");
  refine->add_option("--n", o.n, "Dimension for --random");
  refine->add_option("--count", o.count, "Family size for --random");
  refine->add_option("--out", o.out, "Frame path");

  auto* inexact = app.add_subcommand("inexact", "Orthogonal-inexactness decision for a member-set file");
  inexact->add_option("members", o.input, "Member-set JSON file")->required();
  inexact->add_option("--frame", o.frame, "Frame file overriding the one in the member set");
  inexact->add_option("--out", o.out, "Decision path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lemma3) return cmd_verify_lemma3(o);
    if (*lemma4) return cmd_verify_lemma4(o);
    if (*boundary) return cmd_scan_boundary(o);
    if (*counter) return cmd_counterexample(o);
    if (*refine) return cmd_refine(o);
    if (*inexact) return cmd_inexact(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const cpt::ThresholdViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const cpt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}
