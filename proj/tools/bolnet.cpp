// bolnet: verification suites, loop analysis, collineation reports and the
// Bol loop search.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bolnet/io.hpp"
#include "bolnet/verify.hpp"

namespace {

using nlohmann::json;
using namespace bolnet;

enum Exit { kOk = 0, kClaimFailed = 1, kInputError = 2, kResourceLimit = 3 };

json claims_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.claims)
    out.push_back({{"id", c.id},
                   {"statement", c.statement},
                   {"anchor", c.anchor},
                   {"status", to_string(c.status)},
                   {"value", c.value}});
  return out;
}

json summary_json(const Report& r) {
  std::size_t pass = 0, fail = 0, computed = 0;
  for (const auto& c : r.claims) {
    if (c.status == ClaimStatus::Pass) ++pass;
    if (c.status == ClaimStatus::Fail) ++fail;
    if (c.status == ClaimStatus::Computed) ++computed;
  }
  return {{"pass", pass}, {"fail", fail}, {"computed", computed}};
}

json document(const std::string& command, const Report& r, json data, double millis) {
  return {{"schema", kReportSchema},
          {"tool_version", r.tool_version},
          {"command", command},
          {"input", r.input},
          {"claims", claims_json(r)},
          {"summary", summary_json(r)},
          {"data", std::move(data)},
          {"timing_ms", millis}};
}

void print_claims(std::ostream& os, const Report& r) {
  for (const auto& c : r.claims) {
    const char* tag = c.status == ClaimStatus::Pass ? "PASS    " : c.status == ClaimStatus::Fail ? "FAIL    " : "COMPUTED";
    os << tag << "  " << c.id << "  " << c.statement;
    if (!c.value.empty()) os << "  [" << c.value << "]";
    os << '\n';
  }
  auto s = summary_json(r);
  os << s["pass"] << " passed, " << s["fail"] << " failed, " << s["computed"] << " computed\n";
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json fingerprint_json(const GroupFingerprint& f) {
  json hist = json::object();
  for (auto [order, count] : f.element_order_histogram) hist[std::to_string(order)] = count;
  return {{"order", f.order},
          {"abelian", f.abelian},
          {"element_orders", hist},
          {"center_order", f.center_order},
          {"derived_length", f.derived_length},
          {"abelianization", f.abelian_invariants_of_abelianization}};
}

json names_json(const LoopTable& l, const std::vector<Element>& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(l.name(x));
  return out;
}

json table_json(const LoopTable& l) {
  json rows = json::array();
  for (Element x = 0; x < l.order(); ++x) {
    json row = json::array();
    for (Element y = 0; y < l.order(); ++y) row.push_back(l.mul(x, y));
    rows.push_back(row);
  }
  return rows;
}

LoopTable load_target(const std::string& target, bool normalize) {
  if (target == "b1") return builtin("B1");
  if (target == "b2") return builtin("B2");
  if (target == "b2-printed") return builtin("B2-printed");
  return read_loop_file(target, normalize);
}

int cmd_verify(const std::string& target, const std::string& format, const std::string& corrupt,
               unsigned jobs) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyHooks hooks;
  if (corrupt == "b1") hooks.b1 = corrupted_builtin("B1");
  if (corrupt == "b2") hooks.b2 = corrupted_builtin("B2");
  Report r = verify(target, hooks, jobs);
  if (!corrupt.empty()) r.input += " (corrupted " + corrupt + ")";
  if (format == "json")
    std::cout << document("verify", r, json::object(), millis_since(t0)).dump(2) << '\n';
  else
    print_claims(std::cout, r);
  return r.passed() ? kOk : kClaimFailed;
}

int cmd_analyze(const std::string& path, bool normalize, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  LoopTable l = read_loop_file(path, normalize);
  Report r;
  r.input = path;
  json data;
  data["order"] = l.order();
  data["table"] = table_json(l);
  data["properties"] = {{"left_bol", check_property(l, LoopProperty::LeftBol).holds},
                        {"lcc", check_property(l, LoopProperty::Lcc).holds},
                        {"lip", check_property(l, LoopProperty::Lip).holds},
                        {"associative", check_property(l, LoopProperty::Associative).holds}};
  data["nuclei"] = {{"left", names_json(l, nucleus(l, NucleusSide::Left))},
                    {"middle", names_json(l, nucleus(l, NucleusSide::Middle))},
                    {"right", names_json(l, nucleus(l, NucleusSide::Right))}};
  auto j = lip_inverse_map(l);
  data["J"] = j ? json(j->cycle_string()) : json(nullptr);
  GeneratedGroup aut = automorphism_group(l);
  data["automorphism_group"] = fingerprint_json(fingerprint(aut));
  for (auto [side, key] : {std::pair{PseudoSide::Left, "left"}, std::pair{PseudoSide::Right, "right"}}) {
    auto pas = pseudo_automorphisms(l, side);
    data["pseudo_automorphisms"][key] = {{"count", pas.size()},
                                         {"companions", names_json(l, companion_set(l, side))}};
  }
  if (as_json) {
    std::cout << document("analyze", r, data, millis_since(t0)).dump(2) << '\n';
    return kOk;
  }
  std::cout << "order: " << l.order() << '\n';
  for (auto& [k, v] : data["properties"].items()) std::cout << k << ": " << v << '\n';
  for (auto& [k, v] : data["nuclei"].items()) std::cout << "nucleus " << k << ": " << v.dump() << '\n';
  std::cout << "J: " << (j ? j->cycle_string() : "none (no left inverse property)") << '\n';
  std::cout << "|Aut|: " << aut.order() << '\n';
  std::cout << "Aut fingerprint: " << data["automorphism_group"].dump() << '\n';
  for (auto& [k, v] : data["pseudo_automorphisms"].items())
    std::cout << k << " pseudo-automorphisms: " << v["count"] << ", companions " << v["companions"].dump()
              << '\n';
  return kOk;
}

int cmd_collineations(const std::string& target, const std::string& format, bool normalize, unsigned jobs) {
  auto t0 = std::chrono::steady_clock::now();
  LoopTable l = load_target(target, normalize);
  NetGroupReport nr = structure_report(l, jobs);
  Report r;
  r.input = target;
  for (const auto& c : nr.checks) r.check(c.id, "collineations", c.statement, c.passed, c.value);
  json data = {{"loop_order", nr.loop_order},
               {"left_bol", nr.left_bol},
               {"identified", to_string(nr.identified)},
               {"gamma_order", nr.gamma_order},
               {"orbit_P", nr.orbit_P},
               {"stabilizers", {{"origin", nr.gamma0_order}, {"l_h", nr.gammaH_order}, {"l_v", nr.gammaV_order}}},
               {"gamma", fingerprint_json(nr.gamma_fingerprint)},
               {"commutator", fingerprint_json(nr.commutator_fingerprint)}};
  if (nr.frattini_fingerprint) data["frattini"] = fingerprint_json(*nr.frattini_fingerprint);
  if (nr.left_bol) {
    data["N_order"] = nr.N_order;
    data["kernel_order"] = nr.kernel_order;
    data["H_order"] = nr.H_order;
    data["full_order"] = nr.full_order;
  }
  const double ms = millis_since(t0);
  if (format == "json") {
    std::cout << document("collineations", r, data, ms).dump(2) << '\n';
  } else {
    std::cout << "loop order " << nr.loop_order << (nr.left_bol ? ", left Bol" : ", not left Bol (reduced report)")
              << ", identified as " << to_string(nr.identified) << '\n';
    std::cout << "|Gamma| = " << nr.gamma_order << ", |P| = " << nr.orbit_P.size() << ", |Gamma_0| = "
              << nr.gamma0_order << ", |Gamma_H| = " << nr.gammaH_order << ", |Gamma_V| = " << nr.gammaV_order
              << '\n';
    if (nr.left_bol)
      std::cout << "|N| = " << nr.N_order << ", |ker phi| = " << nr.kernel_order << ", |H| = " << nr.H_order
                << ", |full| = " << nr.full_order << '\n';
    print_claims(std::cout, r);
    std::cout << "time " << ms << " ms\n";
  }
  return r.passed() ? kOk : kClaimFailed;
}

int cmd_search(std::size_t order, bool nonassoc, const std::string& relation, unsigned jobs,
               const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<LoopTable> found;
  enumerate_bol(order, nonassoc, jobs, [&](const LoopTable& l) {
    found.push_back(l);
    if (found.size() % 1000 == 0) std::cerr << "found " << found.size() << '\n';
  });
  std::cerr << "found " << found.size() << " total\n";
  Report r;
  r.input = "search --order " + std::to_string(order) + (nonassoc ? " --nonassoc" : "");
  json data = {{"order", order}, {"nonassociative_only", nonassoc}, {"total_found", found.size()}};
  if (!relation.empty() && !found.empty()) {
    auto cls = classify(found, relation == "isotopy" ? Relation::Isotopy : Relation::Isomorphism);
    data["nonassociative_count"] = cls.nonassociative_count;
    json reps = json::array();
    for (std::size_t i = 0; i < cls.isomorphism_class_count(); ++i)
      reps.push_back({{"size", cls.isomorphism_class_sizes[i]}, {"table", table_json(cls.isomorphism_representatives[i])}});
    data["isomorphism_classes"] = {{"count", cls.isomorphism_class_count()}, {"representatives", reps}};
    r.computed("search.isomorphism-classes", "classification", "isomorphism classes found",
               std::to_string(cls.isomorphism_class_count()));
    if (relation == "isotopy") {
      data["isotopy_classes"] = {{"count", cls.isotopy_class_count()}, {"members", cls.isotopy_classes}};
      r.computed("search.isotopy-classes", "classification", "isotopy classes found",
                 std::to_string(cls.isotopy_class_count()));
    }
  }
  r.computed("search.total", "search", "tables found", std::to_string(found.size()));
  const double ms = millis_since(t0);
  if (format == "json") {
    std::cout << document("search", r, data, ms).dump(2) << '\n';
  } else {
    std::cout << found.size() << (nonassoc ? " non-associative" : "") << " left Bol loops of order " << order
              << '\n';
    if (data.contains("isomorphism_classes"))
      std::cout << data["isomorphism_classes"]["count"] << " isomorphism classes (computed)\n";
    if (data.contains("isotopy_classes")) std::cout << data["isotopy_classes"]["count"] << " isotopy classes\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bol loops of order 8 and the collineations of their 3-nets"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for enumeration")->check(CLI::Range(1u, 64u));

  std::string target = "all", format = "text", corrupt;
  auto* verify_cmd = app.add_subcommand("verify", "run the claim suite");
  verify_cmd->add_option("target", target, "b1, b2, search or all")
      ->check(CLI::IsMember({"b1", "b2", "search", "all"}));
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--corrupt", corrupt, "test hook: corrupt a builtin")
      ->check(CLI::IsMember({"b1", "b2"}))
      ->group("");

  std::string path;
  bool normalize = false, as_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "properties of a loop file");
  analyze_cmd->add_option("path", path)->required();
  analyze_cmd->add_flag("--normalize", normalize, "move a non-zero unit to 0");
  analyze_cmd->add_flag("--json", as_json);

  std::string coll_target, report = "text";
  auto* coll_cmd = app.add_subcommand("collineations", "collineation group report");
  coll_cmd->add_option("target", coll_target, "b1, b2, b2-printed or a loop file")->required();
  coll_cmd->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
  coll_cmd->add_flag("--normalize", normalize);

  std::size_t order = 0;
  bool nonassoc = false;
  std::string relation, search_format = "text";
  auto* search_cmd = app.add_subcommand("search", "enumerate left Bol loops");
  search_cmd->add_option("--order", order)->required();
  search_cmd->add_flag("--nonassoc", nonassoc);
  search_cmd->add_option("--classify", relation)->check(CLI::IsMember({"iso", "isotopy"}));
  search_cmd->add_option("--jobs", jobs)->check(CLI::Range(1u, 64u));
  search_cmd->add_option("--format", search_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*verify_cmd) return cmd_verify(target, format, corrupt, jobs);
    if (*analyze_cmd) return cmd_analyze(path, normalize, as_json);
    if (*coll_cmd) return cmd_collineations(coll_target, report, normalize, jobs);
    if (*search_cmd) return cmd_search(order, nonassoc, relation, jobs, search_format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::NoUnit) std::cerr << "hint: pass --normalize to move the unit to 0\n";
    return e.code() == ErrorCode::OrderTooLarge ? kResourceLimit : kInputError;
  }
  return kInputError;
}
