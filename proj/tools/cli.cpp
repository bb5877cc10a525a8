#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "archcat/archimedean.hpp"
#include "archcat/arrow.hpp"
#include "archcat/category.hpp"
#include "archcat/io.hpp"
#include "archcat/preorder.hpp"
#include "archcat/semigroup.hpp"

namespace archcat::cli {

namespace {

using nlohmann::json;

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

std::vector<std::string> morphism_names(const FiniteCategory& c, const std::vector<MorphismId>& ms) {
  std::vector<std::string> out;
  for (MorphismId m : ms) out.push_back(c.morphism_name(m));
  return out;
}

struct Outcome {
  int status = 0;
  json result;
  std::string text;
};

struct Options {
  std::string format = "text";
  std::string file;
  std::string f, g, v, x;
  std::vector<std::string> ms;
  bool ms_given = false;
  bool close = false;
  bool monotone = false;
  bool bound_in_e = false;
  std::string check;
  std::string target;
  int size = 0;
};

// ---- input loading ----------------------------------------------------

ParsedInput load_input(const std::string& path, std::string& digest) {
  std::string text = read_file(path);
  digest = fnv1a64(text);
  return parse_input_text(text);
}

// Categories may be given directly or as a preorder (converted via its thin
// category); semigroup documents are rejected here.
FiniteCategory load_as_category(const std::string& path, std::string& digest) {
  ParsedInput input = load_input(path, digest);
  if (auto* cat = std::get_if<CategoryData>(&input)) {
    return FiniteCategory::from_data(std::move(*cat));
  }
  if (auto* pre = std::get_if<PreorderData>(&input)) {
    return to_category(Preorder::from_data(std::move(*pre)));
  }
  throw std::invalid_argument("expected a category or preorder document, got a semigroup");
}

MorphismId resolve_morphism(const FiniteCategory& c, const std::string& name) {
  if (auto m = c.morphism(name)) return *m;
  throw std::invalid_argument("unknown morphism '" + name + "'");
}

json report_json(const ArchReport& report) {
  json j;
  j["holds"] = report.holds;
  if (report.witness) j["witness"] = *report.witness;
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  j["stats"] = {{"candidates", report.stats.candidates},
                {"submorphism_checks", report.stats.submorphism_checks}};
  return j;
}

std::string report_text(const ArchReport& report) {
  std::ostringstream out;
  out << "holds: " << yn(report.holds) << "\n";
  if (report.witness) out << "witness: " << *report.witness << "\n";
  if (report.counterexample) out << "counterexample: " << *report.counterexample << "\n";
  out << "candidates: " << report.stats.candidates << "\n";
  out << "submorphism checks: " << report.stats.submorphism_checks << "\n";
  return out.str();
}

json violations_json(const ValidationResult& result) {
  json list = json::array();
  for (const auto& v : result.violations) {
    list.push_back({{"rule", v.rule}, {"message", v.message}});
  }
  return list;
}

std::string violations_text(const ValidationResult& result) {
  std::ostringstream out;
  for (const auto& v : result.violations) {
    out << "violation: [" << v.rule << "] " << v.message << "\n";
  }
  return out.str();
}

// ---- handlers ---------------------------------------------------------

Outcome handle_validate(const Options& opt, std::string& digest) {
  ParsedInput input = load_input(opt.file, digest);
  Outcome o;
  std::string kind;
  ValidationResult check;
  if (auto* cat = std::get_if<CategoryData>(&input)) {
    kind = "category";
    check = validate_category(*cat);
  } else if (auto* pre = std::get_if<PreorderData>(&input)) {
    kind = "preorder";
    check = validate_preorder(*pre);
  } else {
    kind = "semigroup";
    check = validate_semigroup(std::get<SemigroupData>(input));
  }
  o.status = check.ok() ? 0 : 1;
  o.result = {{"kind", kind}, {"valid", check.ok()}, {"violations", violations_json(check)}};
  o.text = "kind: " + kind + "\nvalid: " + yn(check.ok()) + "\n" + violations_text(check);
  return o;
}

Outcome handle_arrow(const Options& opt, std::string& digest) {
  FiniteCategory base = load_as_category(opt.file, digest);
  ArrowCategory arrows = build_arrow_category(base);
  Outcome o;
  std::string doc = to_text(arrows.derived.data());
  o.result = {{"objects", arrows.derived.object_count()},
              {"squares", arrows.derived.morphism_count()},
              {"category", json::parse(doc)}};
  o.text = "objects: " + std::to_string(arrows.derived.object_count()) +
           "\nsquares: " + std::to_string(arrows.derived.morphism_count()) + "\n" + doc;
  return o;
}

Outcome handle_unit_equiv(const Options& opt, std::string& digest) {
  FiniteCategory c = load_as_category(opt.file, digest);
  MorphismId f = resolve_morphism(c, opt.f);
  MorphismId g = resolve_morphism(c, opt.g);
  EquivalenceResult r = is_unitary_equivalent(c, f, g);
  Outcome o;
  o.status = r.holds ? 0 : 1;
  o.result = {{"f", opt.f}, {"g", opt.g}, {"equivalent", r.holds}};
  o.text = "equivalent: " + yn(r.holds) + "\n";
  if (r.holds) {
    o.result["forward"] = {{"a", c.morphism_name(r.forward->a)}, {"b", c.morphism_name(r.forward->b)}};
    o.result["inverse"] = {{"a", c.morphism_name(r.inverse->a)}, {"b", c.morphism_name(r.inverse->b)}};
    o.text += "forward: a=" + c.morphism_name(r.forward->a) + ", b=" + c.morphism_name(r.forward->b) + "\n";
    o.text += "inverse: a=" + c.morphism_name(r.inverse->a) + ", b=" + c.morphism_name(r.inverse->b) + "\n";
  }
  return o;
}

Outcome handle_submorphism(const Options& opt, std::string& digest) {
  FiniteCategory c = load_as_category(opt.file, digest);
  MorphismId f = resolve_morphism(c, opt.f);
  MorphismId g = resolve_morphism(c, opt.g);
  SubmorphismResult r = is_submorphism(c, f, g);
  Outcome o;
  o.status = r.holds ? 0 : 1;
  o.result = {{"f", opt.f}, {"g", opt.g}, {"holds", r.holds}};
  o.text = "holds: " + yn(r.holds) + "\n";
  if (r.holds) {
    o.result["witness"] = {{"a", c.morphism_name(*r.a)}, {"b", c.morphism_name(*r.b)}};
    o.text += "witness: a=" + c.morphism_name(*r.a) + ", b=" + c.morphism_name(*r.b) + "\n";
  }
  return o;
}

Outcome handle_nv(const Options& opt, std::string& digest) {
  FiniteCategory c = load_as_category(opt.file, digest);
  NvClosure closure = nv_closure(c, resolve_morphism(c, opt.v));
  Outcome o;
  auto generators = morphism_names(c, closure.generators);
  auto members = morphism_names(c, closure.members);
  o.result = {{"unit", opt.v}, {"generators", generators}, {"members", members}};
  o.text = "unit: " + opt.v + "\ngenerators: " + join(generators) + "\nmembers: " + join(members) + "\n";
  return o;
}

Outcome handle_bounded(const Options& opt, std::string& digest) {
  FiniteCategory c = load_as_category(opt.file, digest);
  std::vector<MorphismId> ms;
  if (opt.ms_given) {
    for (const auto& name : opt.ms) ms.push_back(resolve_morphism(c, name));
  } else {
    for (MorphismId m = 0; m < c.morphism_count(); ++m) ms.push_back(m);
  }
  ArchReport r = is_bounded_class(c, ms);
  Outcome o;
  o.status = r.holds ? 0 : 1;
  o.result = report_json(r);
  o.result["class"] = morphism_names(c, ms);
  o.text = "class: " + join(morphism_names(c, ms)) + "\n" + report_text(r);
  return o;
}

Outcome handle_arch(const Options& opt, std::string& digest, bool composition) {
  FiniteCategory c = load_as_category(opt.file, digest);
  ArchReport r = composition ? is_archimedean_composition(c) : is_archimedean_bounded(c);
  Outcome o;
  o.status = r.holds ? 0 : 1;
  o.result = report_json(r);
  o.text = report_text(r);
  return o;
}

Preorder load_preorder(const Options& opt, std::string& digest) {
  ParsedInput input = load_input(opt.file, digest);
  auto* pre = std::get_if<PreorderData>(&input);
  if (!pre) throw std::invalid_argument("expected a preorder document");
  if (opt.close) return Preorder::from_data(reflexive_transitive_closure(*pre));
  return Preorder::from_data(std::move(*pre));
}

Outcome handle_preorder(const Options& opt, std::string& digest) {
  Outcome o;
  if (opt.check == "validate") {
    ParsedInput input = load_input(opt.file, digest);
    auto* pre = std::get_if<PreorderData>(&input);
    if (!pre) throw std::invalid_argument("expected a preorder document");
    PreorderData data = opt.close ? reflexive_transitive_closure(*pre) : *pre;
    ValidationResult check = validate_preorder(data);
    o.status = check.ok() ? 0 : 1;
    o.result = {{"kind", "preorder"}, {"closed", opt.close}, {"valid", check.ok()},
                {"violations", violations_json(check)}};
    o.text = "valid: " + yn(check.ok()) + "\n" + violations_text(check);
    return o;
  }

  Preorder p = load_preorder(opt, digest);
  if (opt.check == "bounded") {
    PreorderBound b = is_bounded_preorder(p);
    o.status = b.holds ? 0 : 1;
    o.result = {{"closed", opt.close}, {"holds", b.holds}};
    o.text = "holds: " + yn(b.holds) + "\n";
    if (b.witness) {
      o.result["witness"] = {{"lower", p.element_name(b.witness->first)},
                             {"upper", p.element_name(b.witness->second)}};
      o.text += "witness: lower=" + p.element_name(b.witness->first) +
                ", upper=" + p.element_name(b.witness->second) + "\n";
    }
  } else if (opt.check == "discrete") {
    bool d = is_discrete(p);
    o.status = d ? 0 : 1;
    o.result = {{"closed", opt.close}, {"discrete", d}};
    o.text = "discrete: " + yn(d) + "\n";
  } else if (opt.check == "classes") {
    EquivClasses classes = equiv_classes(p);
    json list = json::array();
    std::string text;
    for (int rep = 0; rep < p.size(); ++rep) {
      if (classes.representative[rep] != rep) continue;
      std::vector<std::string> members;
      for (int x = 0; x < p.size(); ++x) {
        if (classes.representative[x] == rep) members.push_back(p.element_name(x));
      }
      list.push_back(members);
      text += "class: " + join(members) + "\n";
    }
    o.result = {{"closed", opt.close}, {"classes", list}};
    o.text = text;
  } else {  // category
    std::string doc = to_text(to_category_data(p));
    o.result = {{"closed", opt.close}, {"category", json::parse(doc)}};
    o.text = doc;
  }
  return o;
}

Outcome handle_semigroup(const Options& opt, std::string& digest) {
  Outcome o;
  ParsedInput input = load_input(opt.file, digest);
  auto* data = std::get_if<SemigroupData>(&input);
  if (!data) throw std::invalid_argument("expected a semigroup document");

  if (opt.check == "validate") {
    ValidationResult check = validate_semigroup(*data, opt.monotone);
    o.status = check.ok() ? 0 : 1;
    o.result = {{"kind", "semigroup"}, {"monotone", opt.monotone}, {"valid", check.ok()},
                {"violations", violations_json(check)}};
    o.text = "valid: " + yn(check.ok()) + "\n" + violations_text(check);
    return o;
  }

  OrderedSemigroup s = OrderedSemigroup::from_data(std::move(*data), opt.monotone);
  BoundRange range = opt.bound_in_e ? BoundRange::all_elements : BoundRange::positives;
  std::string range_name = opt.bound_in_e ? "all" : "positives";

  if (opt.check == "positives") {
    std::vector<std::string> names;
    for (int x : s.positives()) names.push_back(s.element_name(x));
    o.result = {{"positives", names}, {"zero_neutral", s.zero_is_neutral()}};
    o.text = "positives: " + join(names) + "\nzero neutral: " + yn(s.zero_is_neutral()) + "\n";
  } else if (opt.check == "multiples") {
    if (opt.x.empty()) throw std::invalid_argument("multiples needs -x <element>");
    auto x = s.element(opt.x);
    if (!x) throw std::invalid_argument("unknown element '" + opt.x + "'");
    MultipleSet m = multiples(s, *x);
    std::vector<std::string> names;
    for (int v : m.members) names.push_back(s.element_name(v));
    o.result = {{"base", opt.x}, {"members", names}};
    o.text = "base: " + opt.x + "\nmembers: " + join(names) + "\n";
  } else if (opt.check == "arch-unit") {
    SemigroupReport r = archimedean_unit(s);
    o.status = r.holds ? 0 : 1;
    o.result = {{"holds", r.holds}};
    o.text = "holds: " + yn(r.holds) + "\n";
    if (r.witness) {
      o.result["witness"] = *r.witness;
      o.text += "witness: " + *r.witness + "\n";
    }
    if (r.counterexample) {
      o.result["counterexample"] = *r.counterexample;
      o.text += "counterexample: " + *r.counterexample + "\n";
    }
  } else if (opt.check == "arch-bounded") {
    SemigroupReport r = archimedean_bounded_multiples(s, range);
    o.status = r.holds ? 0 : 1;
    o.result = {{"holds", r.holds}, {"range", range_name}};
    o.text = "holds: " + yn(r.holds) + "\n";
    if (r.counterexample) {
      o.result["counterexample"] = *r.counterexample;
      o.text += "counterexample: " + *r.counterexample + "\n";
    }
  } else {  // equiv
    bool implication = archimedean_bounded_multiples(s, range).holds;
    bool agree = check_13_14_equiv(s, range);
    // reconstruct the biconditional form for the report
    bool biconditional = agree ? implication : !implication;
    o.status = agree ? 0 : 1;
    o.result = {{"agree", agree}, {"implication", implication},
                {"biconditional", biconditional}, {"range", range_name}};
    o.text = "agree: " + yn(agree) + "\nimplication form: " + yn(implication) +
             "\nbiconditional form: " + yn(biconditional) + "\n";
  }
  return o;
}

Outcome handle_verify(const Options& opt) {
  Outcome o;
  if (opt.target == "lemma1") {
    Lemma1Report r = verify_lemma1(opt.size);
    o.status = r.pass ? 0 : 1;
    long long good = r.instances - r.implication_failures - r.agreement_failures;
    if (good < 0) good = 0;
    o.result = {{"target", "lemma1"}, {"size", opt.size}, {"pass", r.pass},
                {"instances", r.instances}, {"zero_neutral", r.zero_neutral},
                {"implication_failures", r.implication_failures},
                {"agreement_failures", r.agreement_failures}};
    o.text = "lemma1 size " + std::to_string(opt.size) + ": " + std::to_string(good) + "/" +
             std::to_string(r.instances) + " pass\nzero-neutral instances: " +
             std::to_string(r.zero_neutral) + "\n";
    if (r.counterexample) {
      o.result["counterexample"] = json::parse(to_text(*r.counterexample));
      o.result["detail"] = r.detail;
      o.text += "detail: " + r.detail + "\ncounterexample:\n" + to_text(*r.counterexample);
    }
    return o;
  }

  SweepReport r = opt.target == "prop1" ? verify_prop1(opt.size) : verify_prop2(opt.size);
  o.status = r.pass ? 0 : 1;
  o.result = {{"target", opt.target}, {"size", opt.size}, {"pass", r.pass},
              {"checked", r.checked}, {"mismatches", r.mismatches}};
  o.text = opt.target + " size " + std::to_string(opt.size) + ": " +
           std::to_string(r.checked - r.mismatches) + "/" + std::to_string(r.checked) + " pass\n";
  if (r.counterexample) {
    o.result["counterexample"] = json::parse(to_text(*r.counterexample));
    o.result["detail"] = r.detail;
    o.text += "detail: " + r.detail + "\ncounterexample:\n" + to_text(*r.counterexample);
  }
  return o;
}

Outcome handle_enumerate(const Options& opt) {
  Outcome o;
  std::vector<Preorder> all = enumerate_preorders(opt.size);
  json docs = json::array();
  std::string text = "count: " + std::to_string(all.size()) + "\n";
  for (size_t i = 0; i < all.size(); ++i) {
    docs.push_back(json::parse(to_text(all[i].data())));
    text += "preorder " + std::to_string(i) + ":";
    for (const auto& [x, y] : all[i].data().pairs) text += " (" + x + "," + y + ")";
    text += "\n";
  }
  o.result = {{"size", opt.size}, {"count", all.size()}, {"preorders", docs}};
  o.text = text;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto started = std::chrono::steady_clock::now();

  CLI::App app{"exact deciders for two Archimedean-style conditions on finite categories, "
               "with thin-category and ordered-semigroup specializations"};
  app.name("archcat");
  Options opt;
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.require_subcommand(1);

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "input document")->required();
    sub->fallthrough();
    return sub;
  };

  add_file(app.add_subcommand("validate", "check a document against its structural laws"));
  add_file(app.add_subcommand("arrow", "build the category of commuting squares"));
  auto* unit_equiv = add_file(app.add_subcommand("unit-equiv", "decide unitary equivalence of two morphisms"));
  unit_equiv->add_option("-f", opt.f, "first morphism")->required();
  unit_equiv->add_option("-g", opt.g, "second morphism")->required();
  auto* submorphism = add_file(app.add_subcommand("submorphism", "decide whether -f is a submorphism of -g"));
  submorphism->add_option("-f", opt.f, "candidate submorphism")->required();
  submorphism->add_option("-g", opt.g, "enclosing morphism")->required();
  auto* nv = add_file(app.add_subcommand("nv", "closure of a unit under composition of equivalent factors"));
  nv->add_option("-v", opt.v, "unit morphism")->required();
  auto* bounded = add_file(app.add_subcommand("bounded", "decide whether a morphism class has a common bound"));
  bounded->add_option("-m", opt.ms, "class member (repeatable; default: every morphism)");
  add_file(app.add_subcommand("arch1", "Archimedean condition: some unit's closure covers every morphism"));
  add_file(app.add_subcommand("arch2", "Archimedean condition: bounded closures only for identities"));
  auto* preorder = add_file(app.add_subcommand("preorder", "preorder-specific checks"));
  preorder->add_flag("--close", opt.close, "apply reflexive-transitive closure first");
  preorder->add_option("check", opt.check, "what to check")
      ->required()
      ->check(CLI::IsMember({"validate", "bounded", "discrete", "classes", "category"}));
  auto* semigroup = add_file(app.add_subcommand("semigroup", "ordered-semigroup checks"));
  semigroup->add_flag("--monotone", opt.monotone, "also require + monotone in <=");
  semigroup->add_flag("--bound-in-E", opt.bound_in_e, "search bounds in all of E, not just the positive cone");
  semigroup->add_option("check", opt.check, "what to check")
      ->required()
      ->check(CLI::IsMember({"validate", "positives", "multiples", "arch-unit", "arch-bounded", "equiv"}));
  semigroup->add_option("-x", opt.x, "base element for multiples");
  auto* verify = app.add_subcommand("verify", "exhaustive verification sweeps");
  verify->fallthrough();
  verify->add_option("target", opt.target, "what to verify")
      ->required()
      ->check(CLI::IsMember({"prop1", "prop2", "lemma1"}));
  verify->add_option("--size", opt.size, "number of elements")->required();
  auto* enumerate = app.add_subcommand("enumerate", "enumerate labeled preorders");
  enumerate->fallthrough();
  enumerate->add_option("kind", opt.target, "what to enumerate")
      ->required()
      ->check(CLI::IsMember({"preorders"}));
  enumerate->add_option("--size", opt.size, "number of elements")->required();

  std::vector<const char*> argv;
  argv.push_back("archcat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string digest;
  Outcome outcome;
  try {
    if (command == "validate") {
      outcome = handle_validate(opt, digest);
    } else if (command == "arrow") {
      outcome = handle_arrow(opt, digest);
    } else if (command == "unit-equiv") {
      outcome = handle_unit_equiv(opt, digest);
    } else if (command == "submorphism") {
      outcome = handle_submorphism(opt, digest);
    } else if (command == "nv") {
      outcome = handle_nv(opt, digest);
    } else if (command == "bounded") {
      opt.ms_given = bounded->count("-m") > 0;
      outcome = handle_bounded(opt, digest);
    } else if (command == "arch1") {
      outcome = handle_arch(opt, digest, true);
    } else if (command == "arch2") {
      outcome = handle_arch(opt, digest, false);
    } else if (command == "preorder") {
      outcome = handle_preorder(opt, digest);
    } else if (command == "semigroup") {
      outcome = handle_semigroup(opt, digest);
    } else if (command == "verify") {
      outcome = handle_verify(opt);
    } else {
      outcome = handle_enumerate(opt);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  if (opt.format == "machine") {
    json doc;
    doc["command"] = command;
    if (!digest.empty()) doc["digest"] = digest;
    doc["elapsed_ms"] = elapsed;
    doc["result"] = outcome.result;
    out << doc.dump(2) << "\n";
  } else {
    out << "command: " << command << "\n";
    if (!digest.empty()) out << "input: " << digest << "\n";
    out << outcome.text;
    out << "elapsed: " << elapsed << " ms\n";
  }
  return outcome.status;
}

}  // namespace archcat::cli
