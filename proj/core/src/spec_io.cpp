#include "equisep/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "equisep/constructions.hpp"
#include "equisep/indices.hpp"
#include "equisep/isomorphism.hpp"
#include "equisep/profile.hpp"

namespace equisep {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError("construction spec is not valid JSON");
  }
  return doc;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(std::string("spec: missing field '") + name + "'");
  }
  return *it;
}

int int_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("spec: field '") + name +
                     "' must be an integer");
  }
  return v.get<int>();
}

Tree tree_field(const json& obj, const std::filesystem::path& base_dir,
                const char* name) {
  const json& v = field(obj, name);
  if (!v.is_object() || !v.contains("file") || !v["file"].is_string()) {
    throw ParseError(std::string("spec: field '") + name +
                     "' must be an object with a \"file\" string");
  }
  std::filesystem::path p = v["file"].get<std::string>();
  if (p.is_relative()) p = base_dir / p;
  return load_tree_file(p);
}

AttachmentSpec fragment_field(const json& doc,
                              const std::filesystem::path& base_dir,
                              const char* name) {
  const json& v = field(doc, name);
  if (!v.is_object()) {
    throw ParseError(std::string("spec: field '") + name +
                     "' must be an object");
  }
  Tree frag = tree_field(doc, base_dir, name);
  if (!v.contains("attach") || !v["attach"].is_number_integer()) {
    throw ParseError(std::string("spec: fragment '") + name +
                     "' needs an integer \"attach\" vertex");
  }
  return AttachmentSpec{std::move(frag), v["attach"].get<int>()};
}

std::vector<int> int_array(const json& v, const char* what) {
  if (!v.is_array()) {
    throw ParseError(std::string("spec: ") + what + " must be an array");
  }
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) {
      throw ParseError(std::string("spec: ") + what +
                       " must contain integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<Tree> dispatch(const std::string& theorem, const json& spec,
                           const std::filesystem::path& base_dir,
                           Hypotheses hyp) {
  if (theorem == "thm1" || theorem == "thm2") {
    Tree host = tree_field(spec, base_dir, "host");
    int u = int_field(spec, "u"), v = int_field(spec, "v");
    AttachmentSpec x = fragment_field(spec, base_dir, "x");
    AttachmentSpec y = fragment_field(spec, base_dir, "y");
    TreePair pair = theorem == "thm1" ? construct_thm1(host, u, v, x, y, hyp)
                                      : construct_thm2(host, u, v, x, y, hyp);
    return {std::move(pair.first), std::move(pair.second)};
  }
  if (theorem == "partition") {
    const json& first = field(spec, "first");
    const json& second = field(spec, "second");
    auto sizes1 = int_array(field(first, "sizes"), "first.sizes");
    auto attach1 = int_array(field(first, "attach"), "first.attach");
    auto sizes2 = int_array(field(second, "sizes"), "second.sizes");
    auto attach2 = int_array(field(second, "attach"), "second.attach");
    if (sizes1.size() != 2 || attach1.size() != 2 || sizes2.size() != 2 ||
        attach2.size() != 2) {
      throw ParseError("spec: partition sizes/attach must have 2 entries");
    }
    TreePair pair = construct_partition_pair(sizes1[0], sizes1[1], sizes2[0],
                                             sizes2[1], attach1[0], attach1[1],
                                             attach2[0], attach2[1], hyp);
    return {std::move(pair.first), std::move(pair.second)};
  }
  if (theorem == "thm3") {
    Tree host = tree_field(spec, base_dir, "host");
    TreePair pair =
        construct_thm3(host, int_field(spec, "i"), int_field(spec, "j"),
                       fragment_field(spec, base_dir, "z"), hyp);
    return {std::move(pair.first), std::move(pair.second)};
  }
  if (theorem == "thm4") {
    Tree host = tree_field(spec, base_dir, "host");
    const json& anchors_json = field(spec, "anchors");
    if (!anchors_json.is_array() || anchors_json.empty()) {
      throw ParseError("spec: anchors must be a nonempty array");
    }
    std::vector<Thm4Anchor> anchors;
    for (const json& a : anchors_json) {
      anchors.push_back(
          {int_field(a, "i"), fragment_field(a, base_dir, "z")});
    }
    TreePair pair = construct_thm4(host, anchors, int_field(spec, "j"), hyp);
    return {std::move(pair.first), std::move(pair.second)};
  }
  if (theorem == "stw") {
    int k = int_field(spec, "k");
    AttachmentSpec x = fragment_field(spec, base_dir, "x");
    AttachmentSpec y = fragment_field(spec, base_dir, "y");
    const json& assignments = field(spec, "assignments");
    if (assignments.is_string() && assignments.get<std::string>() == "all") {
      return stw_family_all(k, x, y, hyp);
    }
    if (!assignments.is_array() || assignments.empty()) {
      throw ParseError(
          "spec: assignments must be \"all\" or a nonempty array of arrays");
    }
    std::vector<Tree> out;
    for (const json& a : assignments) {
      out.push_back(stw_member({k, x, y, int_array(a, "assignment")}, hyp));
    }
    return out;
  }
  if (theorem == "thm7") {
    Tree host = tree_field(spec, base_dir, "host");
    TreePair pair =
        construct_thm7(host, int_field(spec, "u"), int_field(spec, "v"),
                       fragment_field(spec, base_dir, "fragment"), hyp);
    return {std::move(pair.first), std::move(pair.second)};
  }
  if (theorem == "thm8") {
    Tree first = tree_field(spec, base_dir, "first");
    Tree second = tree_field(spec, base_dir, "second");
    TreePair pair = construct_thm8(
        first, int_field(spec, "u"), second, int_field(spec, "v"),
        fragment_field(spec, base_dir, "fragment"), hyp);
    return {std::move(pair.first), std::move(pair.second)};
  }
  throw ParseError("unknown theorem '" + theorem + "'");
}

bool profile_guarantee(const std::string& theorem) {
  return theorem == "thm1" || theorem == "partition" || theorem == "stw";
}

}  // namespace

Tree load_tree_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open tree file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_tree(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ConstructionOutcome run_construction_spec(
    const std::string& theorem, const std::string& spec_json,
    const std::filesystem::path& base_dir, bool force) {
  json spec = parse_json(spec_json);
  if (!spec.is_object()) {
    throw ParseError("construction spec must be a JSON object");
  }
  if (spec.contains("theorem")) {
    if (!spec["theorem"].is_string() ||
        spec["theorem"].get<std::string>() != theorem) {
      throw ParseError("spec names theorem '" +
                       spec["theorem"].dump() + "' but '" + theorem +
                       "' was requested");
    }
  }

  ConstructionOutcome out;
  out.theorem = theorem;
  try {
    out.outputs = dispatch(theorem, spec, base_dir, Hypotheses::enforce);
  } catch (const PreconditionError& e) {
    if (!force) throw;
    out.hypotheses_ok = false;
    out.hypothesis_diagnostic = e.what();
    out.outputs = dispatch(theorem, spec, base_dir, Hypotheses::skip);
  }

  // measure, never trust the closed forms
  for (const Tree& t : out.outputs) {
    out.tw.push_back(terminal_wiener_pairwise(t));
    out.codes.push_back(canonical_code(t).code);
  }
  for (std::size_t i = 1; i < out.outputs.size(); ++i) {
    if (out.tw[i] != out.tw[0]) out.tw_all_equal = false;
    if (!are_equiseparable(out.outputs[0], out.outputs[i])) {
      out.equiseparable = false;
    }
  }
  std::vector<std::string> distinct = out.codes;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  out.isomorphism_classes = static_cast<int>(distinct.size());
  out.guarantee_ok = profile_guarantee(theorem)
                         ? (out.equiseparable && out.tw_all_equal)
                         : out.tw_all_equal;
  return out;
}

ConstructionOutcome run_construction_file(
    const std::string& theorem, const std::filesystem::path& spec_path,
    bool force) {
  std::ifstream in(spec_path);
  if (!in) {
    throw ParseError("cannot open spec file " + spec_path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_construction_spec(theorem, buf.str(),
                               spec_path.parent_path(), force);
}

}  // namespace equisep
