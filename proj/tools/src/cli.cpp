// Copyright 2026 The Authors.
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

#include "lpm_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lpm/decompose.hpp"
#include "lpm/error.hpp"
#include "lpm/matroid.hpp"
#include "lpm/polytope.hpp"
#include "lpm/triangulate.hpp"
#include "lpm/volume_ehrhart.hpp"
#include "lpm_cli/errata.hpp"
#include "lpm_cli/serialize.hpp"
#include "lpm_cli/verify.hpp"

namespace lpm::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RegionInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lower;
  std::string upper;
  std::string file;
  std::string format;  // empty: the verb's default
  int max_size = -1;
  int t_max = -1;
  int k = -1;
  int n = -1;
  int r = -1;
  std::string target;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooLarge:
      return kExitTooLarge;
    case ErrorCode::kWrongCardinality:
    case ErrorCode::kNotAFacet:
    case ErrorCode::kInvalidSplit:
    case ErrorCode::kWrongChamber:
    case ErrorCode::kBadK:
      return kExitUsage;
    case ErrorCode::kNonUnimodularCell:
      return kExitVerifyFailed;
    default:
      return kExitBadRegion;
  }
}

Region LoadRegion(const Options& opt) {
  const bool inline_source = !opt.lower.empty() || !opt.upper.empty();
  const bool file_source = !opt.file.empty();
  if (inline_source && file_source) {
    throw UsageError("give either --lower/--upper or --file, not both");
  }
  if (file_source) {
    std::ifstream in(opt.file);
    if (!in) throw UsageError("cannot read " + opt.file);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::exception& e) {
      throw RegionInputError(opt.file + ": " + e.what());
    }
    try {
      return RegionFromJson(doc);
    } catch (const std::invalid_argument& e) {
      throw RegionInputError(e.what());
    }
  }
  if (opt.lower.empty() || opt.upper.empty()) {
    throw UsageError("a region needs both --lower and --upper (or --file)");
  }
  return MakeRegion(opt.lower, opt.upper);
}

void CheckSize(int size, int cap) {
  if (size > cap) {
    throw Error(ErrorCode::kTooLarge,
                "size " + std::to_string(size) + " exceeds --max-size " +
                    std::to_string(cap));
  }
}

std::string Csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    const bool quote = fields[i].find_first_of(",\"") != std::string::npos;
    if (!quote) {
      line += fields[i];
      continue;
    }
    line += '"';
    for (char c : fields[i]) line += c == '"' ? std::string("\"\"") : std::string(1, c);
    line += '"';
  }
  return line + "\n";
}

std::string JoinInts(const std::vector<int>& values, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// Renders one verb's JSON document in the requested format.
void Emit(const std::string& verb, const Json& doc, const std::string& format,
          std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  const bool csv = format == "csv";
  auto row = [&](const std::vector<std::string>& fields) {
    if (csv) {
      out << Csv(fields);
    } else {
      std::string line;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        line += (i ? "  " : "") + fields[i];
      }
      out << line << "\n";
    }
  };
  auto str = [](const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  if (verb == "bases") {
    if (csv) row({"index", "vector", "support"});
    int k = 0;
    for (std::size_t i = 0; i < doc["vectors"].size(); ++i) {
      row({std::to_string(k++), str(doc["vectors"][i]),
           JoinInts(doc["bases"][i].get<std::vector<int>>())});
    }
  } else if (verb == "dim") {
    if (csv) row({"ground_size", "dimension", "components"});
    row({str(doc["ground_size"]), str(doc["dimension"]),
         std::to_string(doc["components"].size())});
  } else if (verb == "edges") {
    if (csv) row({"a", "b", "vector_a", "vector_b"});
    for (const auto& e : doc["edges"]) {
      const int a = e[0], b = e[1];
      row({std::to_string(a), std::to_string(b), str(doc["vertices"][a]),
           str(doc["vertices"][b])});
    }
  } else if (verb == "hrep" || verb == "facets") {
    if (csv) row({"kind", "index", "rel", "rhs", "label"});
    auto emit = [&](const Json& list) {
      for (const auto& f : list) {
        row({str(f["kind"]), str(f["index"]), str(f["rel"]), str(f["rhs"]),
             str(f["label"])});
      }
    };
    if (verb == "hrep") emit(doc["equalities"]);
    emit(verb == "hrep" ? doc["inequalities"] : doc["facets"]);
  } else if (verb == "decompose") {
    if (csv) row({"lower", "upper", "strip", "volume"});
    std::vector<const Json*> stack{&doc};
    std::vector<const Json*> leaves;
    while (!stack.empty()) {
      const Json* node = stack.back();
      stack.pop_back();
      if (node->contains("children")) {
        const auto& kids = (*node)["children"];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(&*it);
      } else {
        leaves.push_back(node);
      }
    }
    for (const Json* leaf : leaves) {
      row({str((*leaf)["region"]["lower"]), str((*leaf)["region"]["upper"]),
           str((*leaf)["strip"]), str((*leaf)["volume"])});
    }
  } else if (verb == "volume") {
    if (csv) row({"volume_normalized"});
    row({str(doc["volume_normalized"])});
  } else if (verb == "ehrhart") {
    if (csv) row({"t", "count"});
    std::vector<std::pair<int, std::string>> values;
    for (const auto& [t, count] : doc["values"].items()) {
      values.emplace_back(std::stoi(t), str(count));
    }
    std::sort(values.begin(), values.end());
    if (!csv) {
      std::string coeffs;
      for (const auto& c : doc["coeffs"]) coeffs += (coeffs.empty() ? "" : " ") + str(c);
      out << "coeffs  " << coeffs << "\n";
      out << "volume_normalized  " << str(doc["volume_normalized"]) << "\n";
    }
    for (const auto& [t, count] : values) row({std::to_string(t), count});
  } else if (verb == "triangulate") {
    if (csv) row({"perm", "det"});
    for (const auto& c : doc["cells"]) {
      row({JoinInts(c["perm"].get<std::vector<int>>()), str(c["det"])});
    }
  } else {
    if (csv) row({"key", "value"});
    for (const auto& [key, value] : doc.items()) row({key, str(value)});
  }
}

Json TriangulateRegion(const Region& region) {
  std::vector<SimplexCell> cells;
  for (const auto& strip : BorderStrips(region)) {
    for (auto& cell : StripTriangulation(strip)) cells.push_back(std::move(cell));
  }
  Json doc{{"region", RegionToJson(region)},
           {"count", cells.size()},
           {"cells", CellsToJson(cells)}};
  return doc;
}

Json Catalan(int n, int r, int max_size) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (r >= 1) {
    if (n < 2) throw UsageError("--n must be at least 2 with --r");
    const Region region = KCatalanRegion(r, n);
    CheckSize(region.size(), max_size);
    return Json{{"r", r},
                {"n", n},
                {"region", RegionToJson(region)},
                {"dimension", Dimension(region)},
                {"facets", Facets(region).facets.size()},
                {"facet_formula", KCatalanFacetCount(r, n)}};
  }
  Json doc{{"n", n},
           {"area", ToString(CatalanArea(n))},
           {"edge_formula", ToString(CatalanEdgeFormula(n))}};
  const Region dyck = DyckRegion(n);
  if (dyck.size() <= max_size) {
    doc["region"] = RegionToJson(dyck);
    doc["dimension"] = Dimension(dyck);
    doc["edges"] = Edges(dyck).size();
  }
  if (n >= 2 && 2 * n <= max_size) {
    doc["facets"] = Facets(CatalanFacetRegion(n)).facets.size();
    doc["facet_formula"] = CatalanFacetCount(n);
  }
  return doc;
}

Json ChecksToJson(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name},
                   {"cases", c.cases},
                   {"failures", c.failures},
                   {"samples", c.samples}});
  }
  return out;
}

int Verify(const Options& opt, std::ostream& out) {
  const int max_size = opt.max_size < 0 ? 6 : opt.max_size;
  if (opt.target == "ehrhart-formula") {
    const int t_max = opt.t_max < 0 ? 4 : opt.t_max;
    const auto rows = EhrhartFormulaTable(max_size, t_max);
    const std::string format = opt.format.empty() ? "csv" : opt.format;
    if (format == "json") {
      Json list = Json::array();
      for (const auto& row : rows) {
        list.push_back({{"region", RegionToJson(row.region)},
                        {"t", row.t},
                        {"formula", ToString(row.formula)},
                        {"truth", ToString(row.truth)},
                        {"match", row.match()}});
      }
      out << Json{{"max_size", max_size}, {"t_max", t_max}, {"rows", list}}.dump(2)
          << "\n";
    } else {
      const bool csv = format == "csv";
      if (csv) out << Csv({"region", "t", "formula_value", "true_value", "match"});
      for (const auto& row : rows) {
        std::vector<std::string> fields{
            row.region.str(), std::to_string(row.t), ToString(row.formula),
            ToString(row.truth), row.match() ? "true" : "false"};
        if (csv) {
          out << Csv(fields);
        } else {
          out << fields[0] << "  t=" << fields[1] << "  formula=" << fields[2]
              << "  truth=" << fields[3] << (row.match() ? "" : "  MISMATCH")
              << "\n";
        }
      }
    }
    return kExitOk;
  }

  const std::string format = opt.format.empty() ? "json" : opt.format;
  const bool csv = format == "csv";
  std::vector<CheckResult> checks;
  std::vector<ErrataEntry> errata;
  if (opt.target == "all") {
    checks = VerifyAll(max_size);
    errata = ErrataReport(max_size);
  } else if (opt.target == "facets") {
    checks = VerifyFacets(max_size);
  } else if (opt.target == "volume") {
    checks = VerifyVolume(max_size);
  } else if (opt.target == "errata") {
    errata = ErrataReport(max_size);
  } else {
    throw UsageError("unknown verify target " + opt.target);
  }
  const bool passed = std::all_of(checks.begin(), checks.end(),
                                  [](const CheckResult& c) { return c.passed(); });
  if (format == "json") {
    Json doc{{"target", opt.target},
             {"max_size", max_size},
             {"passed", passed},
             {"checks", ChecksToJson(checks)}};
    if (!errata.empty()) doc["errata"] = ErrataToJson(errata);
    out << doc.dump(2) << "\n";
  } else if (csv) {
    if (!checks.empty()) {
      out << Csv({"check", "cases", "failures", "status"});
      for (const auto& c : checks) {
        out << Csv({c.name, std::to_string(c.cases), std::to_string(c.failures),
                    c.passed() ? "PASS" : "FAIL"});
      }
    }
    if (!errata.empty()) {
      out << Csv({"claim", "verdict", "stated", "computed", "detail"});
      for (const auto& e : errata) {
        out << Csv({e.id, VerdictName(e.verdict), e.stated, e.computed, e.detail});
      }
    }
  } else {
    for (const auto& c : checks) {
      out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases
          << " cases, " << c.failures << " failures)\n";
      for (const auto& s : c.samples) out << "    " << s << "\n";
    }
    for (const auto& e : errata) {
      out << "[" << VerdictName(e.verdict) << "] " << e.id << "\n"
          << "    stated:   " << e.stated << "\n"
          << "    computed: " << e.computed << "\n";
      if (!e.detail.empty()) out << "    " << e.detail << "\n";
    }
  }
  return passed ? kExitOk : kExitVerifyFailed;
}

int Dispatch(const std::string& verb, Options opt, std::ostream& out) {
  if (verb == "verify") return Verify(opt, out);
  if (opt.format.empty()) opt.format = "json";
  const int cap = opt.max_size < 0 ? 10 : opt.max_size;
  if (verb == "catalan") {
    if (!opt.lower.empty() || !opt.upper.empty() || !opt.file.empty()) {
      throw UsageError("catalan takes --n and --r, not a region");
    }
    if (opt.n < 0) throw UsageError("catalan needs --n");
    Emit(verb, Catalan(opt.n, opt.r, cap), opt.format, out);
    return kExitOk;
  }
  if (verb == "triangulate" && (opt.k >= 0 || opt.n >= 0)) {
    if (!opt.lower.empty() || !opt.upper.empty() || !opt.file.empty()) {
      throw UsageError("triangulate takes either --k/--n or a region");
    }
    if (opt.k < 0 || opt.n < 0) throw UsageError("triangulate needs both --k and --n");
    CheckSize(opt.n, cap);
    const auto cells = HypersimplexTriangulation(opt.k, opt.n);
    Emit(verb,
         Json{{"k", opt.k},
              {"n", opt.n},
              {"count", cells.size()},
              {"cells", CellsToJson(cells)}},
         opt.format, out);
    return kExitOk;
  }

  const Region region = LoadRegion(opt);
  CheckSize(region.size(), cap);
  Json doc;
  if (verb == "bases") {
    doc = BasesToJson(region);
  } else if (verb == "dim") {
    doc = DimensionToJson(region);
  } else if (verb == "edges") {
    doc = EdgesToJson(region);
  } else if (verb == "hrep") {
    doc = HRepToJson(region);
  } else if (verb == "facets") {
    doc = FacetsToJson(region);
  } else if (verb == "decompose") {
    doc = DecompositionToJson(Decompose(region));
  } else if (verb == "volume") {
    if (!IsConnected(region)) {
      throw Error(ErrorCode::kDisconnectedRegion,
                  "volume needs a connected region; " + region.str() +
                      " splits into " +
                      std::to_string(Components(region).count()) +
                      " blocks (see `lpm dim`), compute each block separately");
    }
    doc = VolumeToJson(region);
  } else if (verb == "ehrhart") {
    doc = EhrhartToJson(region, opt.t_max);
  } else if (verb == "triangulate") {
    doc = TriangulateRegion(region);
  } else {
    throw UsageError("unknown verb " + verb);
  }
  Emit(verb, doc, opt.format, out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lattice path matroid polytopes: bases, facets, volumes, "
               "Ehrhart polynomials and triangulations.",
               "lpm"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::string> formats{"json", "csv", "text"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format: json, csv or text (default json; csv for the Ehrhart formula table)")
        ->check(CLI::IsMember(formats));
    sub->add_option("--max-size", opt.max_size,
                    "Largest m+r accepted (default 10; 6 for verify)");
  };
  auto add_region = [&](CLI::App* sub) {
    sub->add_option("--lower", opt.lower, "Lower boundary path, e.g. EENN");
    sub->add_option("--upper", opt.upper, "Upper boundary path, e.g. NENE");
    sub->add_option("--file", opt.file,
                    "JSON file {\"lower\": ..., \"upper\": ...}");
    add_common(sub);
  };

  const std::vector<std::pair<std::string, std::string>> region_verbs{
      {"bases", "List the bases as incidence vectors"},
      {"dim", "Dimension and connected components"},
      {"edges", "Edges of the matroid polytope"},
      {"hrep", "Full inequality description"},
      {"facets", "Facet-defining inequalities"},
      {"decompose", "Recursive hyperplane splits down to border strips"},
      {"volume", "Normalized volume"},
  };
  for (const auto& [name, help] : region_verbs) add_region(app.add_subcommand(name, help));

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and counts");
  add_region(ehrhart);
  ehrhart->add_option("--t-max", opt.t_max, "Largest dilation listed (default d+2)");

  auto* tri = app.add_subcommand(
      "triangulate", "Unimodular triangulation of a hypersimplex or region");
  add_region(tri);
  tri->add_option("--k", opt.k, "Hypersimplex parameter k");
  tri->add_option("--n", opt.n, "Hypersimplex parameter n");

  auto* catalan = app.add_subcommand("catalan", "Catalan region statistics");
  add_common(catalan);
  catalan->add_option("--n", opt.n, "Index n")->required();
  catalan->add_option("--r", opt.r, "Generalized Catalan parameter r");

  auto* verify = app.add_subcommand("verify", "Exhaustive oracle agreement sweeps");
  add_common(verify);
  verify->add_option("target", opt.target, "What to verify")
      ->required()
      ->check(CLI::IsMember(
          std::vector<std::string>{"all", "facets", "volume", "ehrhart-formula",
                                   "errata"}));
  verify->add_option("--t-max", opt.t_max,
                     "Largest dilation in the formula table (default 4)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "lpm: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return Dispatch(verb, opt, out);
  } catch (const Error& e) {
    err << "lpm: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const UsageError& e) {
    err << "lpm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RegionInputError& e) {
    err << "lpm: " << e.what() << "\n";
    return kExitBadRegion;
  } catch (const std::exception& e) {
    err << "lpm: internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace lpm::cli
