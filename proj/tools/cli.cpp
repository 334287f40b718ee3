#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "poset_assoc/comparability.hpp"
#include "poset_assoc/error.hpp"
#include "poset_assoc/face_lattice.hpp"
#include "poset_assoc/flip_map.hpp"
#include "poset_assoc/poset.hpp"
#include "poset_assoc/serialization.hpp"
#include "poset_assoc/tubing.hpp"

namespace poset_assoc::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kSizeGuard = 12;
constexpr std::string_view kGradedPrefix = "graded:";

// Usage problems detected after CLI11 parsing succeeded.
struct UsageError {
  std::string message;
};

// Failures outside the library's error codes (unreadable files).
struct IoError {
  std::string message;
};

enum class Format { Json, Csv };

struct Options {
  Format format = Format::Json;
  std::vector<std::string> sources;
  std::string graded;
  bool force = false;
  bool count_only = false;
  unsigned threads = 1;
  std::string subset;
  std::string tubing;
  std::size_t permutohedron = 0;
  std::size_t max_depth = 8;
  std::string composition;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Poset load_source(const std::string& source) {
  if (source.rfind(kGradedPrefix, 0) == 0) {
    return complete_graded(Composition::parse(source.substr(kGradedPrefix.size())));
  }
  return parse_poset(read_file(source));
}

Poset primary_poset(const Options& o) {
  if (!o.graded.empty()) {
    if (!o.sources.empty()) throw UsageError{"give either a poset file or --graded, not both"};
    return complete_graded(Composition::parse(o.graded));
  }
  if (o.sources.empty()) throw UsageError{"missing poset source (file, graded:LIST or --graded)"};
  return load_source(o.sources.front());
}

void guard_size(const Poset& p, const Options& o) {
  if (p.size() > kSizeGuard && !o.force) {
    throw Error(ErrorCode::SizeGuard, "poset has " + std::to_string(p.size()) +
                                          " elements; enumeration above " +
                                          std::to_string(kSizeGuard) + " needs --force");
  }
}

ElementSet parse_subset(const Poset& p, const std::string& text) {
  if (text.empty()) throw UsageError{"--subset is required"};
  std::vector<std::string> labels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) labels.push_back(item);
  return subset_from_labels(p, labels);
}

json load_json_argument(const std::string& text) {
  const std::string raw =
      (!text.empty() && (text.front() == '{' || text.front() == '[')) ? text : read_file(text);
  try {
    return json::parse(raw);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

json with_schema(json body) {
  body["schema_version"] = kSchemaVersion;
  return body;
}

std::string join(const json& labels, char sep) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += sep;
    out += l.get<std::string>();
  }
  return out;
}

std::string tubing_cell(const Poset& p, const Tubing& t) {
  std::string out;
  for (const Tube& tube : t) {
    if (!out.empty()) out += '|';
    out += join(subset_to_json(p, tube.members), ';');
  }
  return out;
}

void require_json(const Options& o, std::string_view verb) {
  if (o.format == Format::Csv) {
    throw UsageError{"--format csv is not available for '" + std::string(verb) + "'"};
  }
}

// ---------------------------------------------------------------- verbs

void cmd_fvector(const Options& o, std::ostream& out) {
  const Poset p = primary_poset(o);
  guard_size(p, o);
  const FVector f = f_vector(p);
  if (o.format == Format::Csv) {
    out << "dimension,count\n";
    for (std::size_t i = 0; i < f.counts.size(); ++i) out << i << ',' << f.counts[i] << '\n';
    return;
  }
  out << with_schema({{"elements", p.size()},
                      {"dimension", f.dimension()},
                      {"f", f.counts},
                      {"convention", "f[i] counts i-dimensional faces; f[d] = 1"}})
             .dump()
      << '\n';
}

void cmd_hvector(const Options& o, std::ostream& out) {
  const Poset p = primary_poset(o);
  guard_size(p, o);
  const FVector f = f_vector(p);
  const auto h = h_vector(f);
  if (o.format == Format::Csv) {
    out << "k,h\n";
    for (std::size_t k = 0; k < h.size(); ++k) out << k << ',' << h[k] << '\n';
    return;
  }
  out << with_schema({{"f", f.counts}, {"h", h}}).dump() << '\n';
}

void cmd_tubes(const Options& o, std::ostream& out) {
  const Poset p = primary_poset(o);
  const auto tubes = enumerate_tubes(p);
  if (o.format == Format::Csv) {
    out << "index,members\n";
    for (std::size_t i = 0; i < tubes.size(); ++i) {
      out << i << ',' << join(subset_to_json(p, tubes[i].members), ';') << '\n';
    }
    return;
  }
  json list = json::array();
  for (const Tube& t : tubes) list.push_back(subset_to_json(p, t.members));
  out << with_schema({{"count", tubes.size()}, {"tubes", std::move(list)}}).dump() << '\n';
}

void cmd_tubings(const Options& o, std::ostream& out) {
  const Poset p = primary_poset(o);
  guard_size(p, o);
  if (o.count_only) {
    const auto by_size = tubing_size_counts(p, o.threads);
    std::uint64_t total = 0;
    for (auto c : by_size) total += c;
    if (o.format == Format::Csv) {
      out << "tubes,count\n";
      for (std::size_t k = 0; k < by_size.size(); ++k) out << k << ',' << by_size[k] << '\n';
      return;
    }
    out << with_schema({{"count", total}, {"by_size", by_size}}).dump() << '\n';
    return;
  }
  const auto tubings = enumerate_tubings(p);
  if (o.format == Format::Csv) {
    out << "index,tubes\n";
    for (std::size_t i = 0; i < tubings.size(); ++i) out << i << ',' << tubing_cell(p, tubings[i]) << '\n';
    return;
  }
  json list = json::array();
  for (const auto& t : tubings) list.push_back(tubing_to_json(p, t));
  out << with_schema({{"count", tubings.size()}, {"tubings", std::move(list)}}).dump() << '\n';
}

void cmd_maximal(const Options& o, std::ostream& out) {
  const Poset p = primary_poset(o);
  guard_size(p, o);
  const auto tubings = maximal_tubings(p);
  if (o.format == Format::Csv) {
    out << "index,tubes\n";
    for (std::size_t i = 0; i < tubings.size(); ++i) out << i << ',' << tubing_cell(p, tubings[i]) << '\n';
    return;
  }
  json list = json::array();
  for (const auto& t : tubings) list.push_back(tubing_to_json(p, t));
  out << with_schema({{"count", tubings.size()}, {"tubings", std::move(list)}}).dump() << '\n';
}

void cmd_decompose(const Options& o, std::ostream& out) {
  require_json(o, "decompose");
  const Poset p = primary_poset(o);
  const ElementSet s = parse_subset(p, o.subset);
  if (o.tubing.empty()) throw UsageError{"--tubing is required"};
  const Tubing t = tubing_from_json(p, load_json_argument(o.tubing));
  const auto cls = classify_tubes(p, s, t);
  out << with_schema(decomposition_to_json(p, decompose(p, s, cls))).dump() << '\n';
}

void cmd_flip_map(const Options& o, std::ostream& out) {
  require_json(o, "flip-map");
  const Poset p = primary_poset(o);
  const ElementSet s = parse_subset(p, o.subset);
  if (o.tubing.empty()) throw UsageError{"--tubing is required"};
  const Tubing t = tubing_from_json(p, load_json_argument(o.tubing));
  const Tubing image = flip_tubing(p, s, t);
  const Poset flipped = flip(p, s);
  const auto source_decomposition = decompose(p, s, classify_tubes(p, s, t));
  const auto image_decomposition = decompose(flipped, s, classify_tubes(flipped, s, image));
  out << with_schema({{"flipped_poset", poset_to_json(flipped)},
                      {"subset", subset_to_json(p, s)},
                      {"tubing", tubing_to_json(p, t)},
                      {"image", tubing_to_json(flipped, image)},
                      {"source_decomposition", decomposition_to_json(p, source_decomposition)},
                      {"decomposition", decomposition_to_json(flipped, image_decomposition)}})
             .dump()
      << '\n';
}

struct SubsetReport {
  ElementSet subset = 0;
  FVector flipped;
  bool preserved = false;
  bool round_trip = false;
};

SubsetReport check_subset(const Poset& p, const FVector& f, ElementSet s) {
  SubsetReport r;
  r.subset = s;
  const Poset flipped = flip(p, s);
  r.flipped = f_vector(flipped);
  r.preserved = r.flipped == f;
  r.round_trip = true;
  for_each_tubing(p, [&](const Tubing& t) {
    if (!r.round_trip) return;
    const Tubing image = flip_tubing(p, s, t);
    r.round_trip = image.size() == t.size() && flip_tubing(flipped, s, image) == t;
  });
  return r;
}

void cmd_check_invariance(const Options& o, std::ostream& out) {
  const Poset p = primary_poset(o);
  guard_size(p, o);
  const FVector f = f_vector(p);
  const auto subsets = autonomous_subsets(p, 2);
  std::vector<SubsetReport> reports(subsets.size());
  const unsigned threads = std::max(1U, o.threads);
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < threads; ++w) {
    jobs.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, [&, w] {
      for (std::size_t i = w; i < subsets.size(); i += threads) {
        reports[i] = check_subset(p, f, subsets[i]);
      }
    }));
  }
  for (auto& j : jobs) j.get();

  bool all = true;
  for (const auto& r : reports) all = all && r.preserved && r.round_trip;
  if (o.format == Format::Csv) {
    out << "subset,f_vector_preserved,phi_round_trip\n";
    for (const auto& r : reports) {
      out << join(subset_to_json(p, r.subset), ';') << ',' << (r.preserved ? "true" : "false")
          << ',' << (r.round_trip ? "true" : "false") << '\n';
    }
    return;
  }
  json list = json::array();
  for (const auto& r : reports) {
    list.push_back({{"subset", subset_to_json(p, r.subset)},
                    {"f_flipped", r.flipped.counts},
                    {"f_vector_preserved", r.preserved},
                    {"phi_round_trip", r.round_trip},
                    {"verdict", std::string("f-vector preserved: ") + (r.preserved ? "true" : "false")}});
  }
  out << with_schema({{"f", f.counts}, {"subsets", std::move(list)}, {"all_preserved", all}}).dump()
      << '\n';
}

void cmd_equiv(const Options& o, std::ostream& out) {
  // The first poset is --graded when given, otherwise the first positional.
  const std::size_t first_positional = o.graded.empty() ? 1 : 0;
  if (o.sources.size() < first_positional) throw UsageError{"missing poset source"};
  if (o.sources.size() > first_positional + 1) throw UsageError{"equiv takes at most two posets"};
  const bool has_second = o.sources.size() == first_positional + 1;
  if (has_second == (o.permutohedron != 0)) {
    throw UsageError{"equiv needs a second poset or --permutohedron N"};
  }
  const Poset a = o.graded.empty() ? load_source(o.sources.front())
                                   : complete_graded(Composition::parse(o.graded));
  guard_size(a, o);
  std::optional<Poset> second;
  if (has_second) second = load_source(o.sources.back());
  const FaceLattice la = face_lattice(a);
  FaceLattice lb;
  if (second) {
    guard_size(*second, o);
    lb = face_lattice(*second);
  } else {
    lb = permutohedron_lattice(o.permutohedron);
  }
  const bool eq = lattices_equivalent(la, lb);
  if (o.format == Format::Csv) {
    out << "equivalent\n" << (eq ? "true" : "false") << '\n';
    return;
  }
  out << with_schema({{"equivalent", eq},
                      {"f_a", la.rank_counts().counts},
                      {"f_b", lb.rank_counts().counts}})
             .dump()
      << '\n';
}

void cmd_polygons(const Options& o, std::ostream& out) {
  PolygonCensus census;
  if (o.permutohedron != 0) {
    if (!o.sources.empty() || !o.graded.empty()) {
      throw UsageError{"give either a poset or --permutohedron N"};
    }
    census = two_face_census(permutohedron_lattice(o.permutohedron));
  } else {
    const Poset p = primary_poset(o);
    guard_size(p, o);
    census = two_face_census(p);
  }
  const auto hist = census.histogram();
  if (o.format == Format::Csv) {
    out << "vertices,count\n";
    for (const auto& [k, c] : hist) out << k << ',' << c << '\n';
    return;
  }
  json h = json::object();
  for (const auto& [k, c] : hist) h[std::to_string(k)] = c;
  out << with_schema({{"census", census.sizes},
                      {"histogram", std::move(h)},
                      {"has_octagon", census.contains(8)}})
             .dump()
      << '\n';
}

void cmd_flip_seq(const Options& o, std::ostream& out) {
  if (o.sources.size() != 2) throw UsageError{"flip-seq needs exactly two posets"};
  const Poset a = load_source(o.sources[0]);
  const Poset b = load_source(o.sources[1]);
  const auto result = flip_sequence(a, b, o.max_depth);
  if (const auto* seq = std::get_if<FlipSequence>(&result)) {
    const Poset end = replay(a, *seq);
    if (o.format == Format::Csv) {
      out << "step,subset\n";
      for (std::size_t i = 0; i < seq->steps.size(); ++i) {
        out << i << ',' << join(subset_to_json(a, seq->steps[i]), ';') << '\n';
      }
      return;
    }
    json steps = json::array();
    for (ElementSet s : seq->steps) steps.push_back(subset_to_json(a, s));
    json mapping = json::object();
    for (std::size_t i = 0; i < seq->mapping.size(); ++i) {
      mapping[end.label(i)] = b.label(seq->mapping[i]);
    }
    out << with_schema({{"found", true}, {"steps", std::move(steps)}, {"isomorphism", std::move(mapping)}})
               .dump()
        << '\n';
    return;
  }
  const auto reason = std::get<FlipSearchFailure>(result);
  const char* name = reason == FlipSearchFailure::GraphsDiffer ? "GraphsDiffer" : "DepthExhausted";
  if (o.format == Format::Csv) {
    out << "found,reason\nfalse," << name << '\n';
    return;
  }
  out << with_schema({{"found", false}, {"reason", name}}).dump() << '\n';
}

void cmd_graded(const Options& o, std::ostream& out) {
  require_json(o, "graded");
  const Poset p = complete_graded(Composition::parse(o.composition));
  json doc = poset_to_json(p);
  doc["name"] = "P_(" + o.composition + ")";
  out << with_schema(std::move(doc)).dump() << '\n';
}

void emit_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poset associahedra: tubings, f-vectors, face lattices and flip maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  const auto add_source = [&](CLI::App* sub) {
    sub->add_option("poset", o.sources, "Poset JSON file or graded:LIST");
    sub->add_option("--graded", o.graded, "Use the complete graded poset of this composition");
  };
  const auto add_force = [&](CLI::App* sub) {
    sub->add_flag("--force", o.force, "Allow enumeration above 12 elements");
  };

  auto* fvector = app.add_subcommand("fvector", "f-vector of the poset associahedron");
  add_source(fvector);
  add_force(fvector);
  auto* hvector = app.add_subcommand("hvector", "h-vector, the coefficients of f(z-1)");
  add_source(hvector);
  add_force(hvector);
  auto* tubes = app.add_subcommand("tubes", "List proper tubes");
  add_source(tubes);
  auto* tubings = app.add_subcommand("tubings", "List proper tubings");
  add_source(tubings);
  add_force(tubings);
  tubings->add_flag("--count-only", o.count_only, "Only count tubings by size");
  tubings->add_option("--threads", o.threads, "Worker threads for --count-only")
      ->check(CLI::Range(1U, 256U));
  auto* maximal = app.add_subcommand("maximal", "List maximal tubings (vertices)");
  add_source(maximal);
  add_force(maximal);
  auto* flipmap = app.add_subcommand("flip-map", "Apply the flip map to a tubing");
  add_source(flipmap);
  flipmap->add_option("--subset", o.subset, "Autonomous subset, comma-separated labels");
  flipmap->add_option("--tubing", o.tubing, "Tubing JSON file (or inline JSON)");
  auto* decomp = app.add_subcommand("decompose", "Decompose the bad tubes of a tubing");
  add_source(decomp);
  decomp->add_option("--subset", o.subset, "Autonomous subset, comma-separated labels");
  decomp->add_option("--tubing", o.tubing, "Tubing JSON file (or inline JSON)");
  auto* check = app.add_subcommand("check-invariance",
                                   "Compare f-vectors across every flip of an autonomous subset");
  add_source(check);
  add_force(check);
  check->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  auto* equiv = app.add_subcommand("equiv", "Test combinatorial equivalence of face lattices");
  add_source(equiv);
  add_force(equiv);
  equiv->add_option("--permutohedron", o.permutohedron, "Compare with the permutohedron on N")
      ->check(CLI::Range(std::size_t{1}, std::size_t{7}));
  auto* polygons = app.add_subcommand("polygons", "Vertex counts of all 2-dimensional faces");
  add_source(polygons);
  add_force(polygons);
  polygons->add_option("--permutohedron", o.permutohedron, "Census of the permutohedron on N")
      ->check(CLI::Range(std::size_t{1}, std::size_t{7}));
  auto* flipseq = app.add_subcommand("flip-seq", "Search for a sequence of flips between posets");
  flipseq->add_option("posets", o.sources, "Two poset sources")->expected(2);
  flipseq->add_option("--max-depth", o.max_depth, "Search depth bound");
  auto* graded = app.add_subcommand("graded", "Emit the complete graded poset of a composition");
  graded->add_option("composition", o.composition, "Comma-separated parts")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "UsageError", e.what());
    return kExitUsage;
  }
  o.format = format == "csv" ? Format::Csv : Format::Json;

  try {
    if (fvector->parsed()) cmd_fvector(o, out);
    else if (hvector->parsed()) cmd_hvector(o, out);
    else if (tubes->parsed()) cmd_tubes(o, out);
    else if (tubings->parsed()) cmd_tubings(o, out);
    else if (maximal->parsed()) cmd_maximal(o, out);
    else if (flipmap->parsed()) cmd_flip_map(o, out);
    else if (decomp->parsed()) cmd_decompose(o, out);
    else if (check->parsed()) cmd_check_invariance(o, out);
    else if (equiv->parsed()) cmd_equiv(o, out);
    else if (polygons->parsed()) cmd_polygons(o, out);
    else if (flipseq->parsed()) cmd_flip_seq(o, out);
    else if (graded->parsed()) cmd_graded(o, out);
  } catch (const UsageError& e) {
    emit_error(err, "UsageError", e.message);
    return kExitUsage;
  } catch (const IoError& e) {
    emit_error(err, "IOError", e.message);
    return kExitDomainError;
  } catch (const Error& e) {
    emit_error(err, to_string(e.code()), e.what());
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace poset_assoc::cli
