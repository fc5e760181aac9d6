#include "rescoh/document.hpp"

#include <algorithm>
#include <set>

namespace rescoh {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::vector<std::string> parse_labels(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw ParseError(where + "[" + std::to_string(i) + "]: expected a string label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

TermList parse_terms(const json& j, std::uint32_t p, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of [label, coefficient] pairs");
  TermList out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& t = j[i];
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_number_integer())
      throw ParseError(at + ": expected [label, integer coefficient]");
    out.terms.emplace_back(t[0].get<std::string>(),
                           modp::reduce(t[1].get<std::int64_t>(), p));
  }
  return out;
}

json terms_to_json(const TermList& terms) {
  json out = json::array();
  for (const auto& [label, coeff] : terms.terms) out.push_back(json::array({label, coeff}));
  return out;
}

void check_known_keys(const json& j, std::initializer_list<const char*> keys,
                      const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw ParseError(where + ": unknown field '" + it.key() + "'");
  }
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  check_known_keys(j, {"p", "even_basis", "odd_basis", "brackets", "p_operator"}, "document");

  AlgebraDocument doc;
  const json& pj = require_field(j, "p", "document");
  if (!pj.is_number_integer() || pj.get<std::int64_t>() < 2)
    throw ParseError("p: expected an integer >= 2");
  const std::int64_t p_raw = pj.get<std::int64_t>();
  if (p_raw == 2) throw ParseError("p: characteristic 2 is not supported (p > 2 required)");
  if (p_raw > 0x7fffffff || !is_prime(static_cast<std::uint32_t>(p_raw)))
    throw ParseError("p: " + std::to_string(p_raw) + " is not prime");
  doc.p = static_cast<std::uint32_t>(p_raw);

  doc.even_basis = parse_labels(require_field(j, "even_basis", "document"), "even_basis");
  doc.odd_basis = parse_labels(require_field(j, "odd_basis", "document"), "odd_basis");

  SuperBasis basis{doc.even_basis, doc.odd_basis};
  if (!basis.labels_unique()) throw ParseError("basis: duplicate label");
  auto resolve = [&](const std::string& label, const std::string& where) {
    const auto idx = basis.index_of(label);
    if (!idx) throw ParseError(where + ": unknown label '" + label + "'");
    return *idx;
  };

  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  if (j.contains("brackets")) {
    const json& bj = j.at("brackets");
    if (!bj.is_array()) throw ParseError("brackets: expected an array");
    for (std::size_t i = 0; i < bj.size(); ++i) {
      const std::string where = "brackets[" + std::to_string(i) + "]";
      const json& e = bj[i];
      if (!e.is_object()) throw ParseError(where + ": expected an object");
      check_known_keys(e, {"left", "right", "value"}, where);
      BracketEntry entry;
      const json& lj = require_field(e, "left", where);
      const json& rj = require_field(e, "right", where);
      if (!lj.is_string() || !rj.is_string())
        throw ParseError(where + ": 'left' and 'right' must be labels");
      entry.left = lj.get<std::string>();
      entry.right = rj.get<std::string>();
      const std::size_t li = resolve(entry.left, where + ".left");
      const std::size_t ri = resolve(entry.right, where + ".right");
      if (!seen_pairs.insert({li, ri}).second)
        throw ParseError(where + ": duplicate bracket entry for (" + entry.left + "," +
                         entry.right + ")");
      entry.value = parse_terms(require_field(e, "value", where), doc.p, where + ".value");
      for (const auto& [label, coeff] : entry.value.terms) resolve(label, where + ".value");
      doc.brackets.push_back(std::move(entry));
    }
  }

  std::set<std::size_t> seen_images;
  if (j.contains("p_operator")) {
    const json& pj2 = j.at("p_operator");
    if (!pj2.is_array()) throw ParseError("p_operator: expected an array");
    for (std::size_t i = 0; i < pj2.size(); ++i) {
      const std::string where = "p_operator[" + std::to_string(i) + "]";
      const json& e = pj2[i];
      if (!e.is_object()) throw ParseError(where + ": expected an object");
      check_known_keys(e, {"on", "value"}, where);
      PImageEntry entry;
      const json& oj = require_field(e, "on", where);
      if (!oj.is_string()) throw ParseError(where + ": 'on' must be a label");
      entry.on = oj.get<std::string>();
      const std::size_t oi = resolve(entry.on, where + ".on");
      if (basis.parity(oi) != 0)
        throw ParseError(where + ": '" + entry.on + "' is odd; [p] acts on the even part");
      if (!seen_images.insert(oi).second)
        throw ParseError(where + ": duplicate image for '" + entry.on + "'");
      entry.value = parse_terms(require_field(e, "value", where), doc.p, where + ".value");
      for (const auto& [label, coeff] : entry.value.terms) {
        const std::size_t vi = resolve(label, where + ".value");
        if (basis.parity(vi) != 0)
          throw ParseError(where + ".value: image term '" + label + "' is odd");
      }
      doc.p_operator.push_back(std::move(entry));
    }
  }
  return doc;
}

std::string serialize_document(const AlgebraDocument& doc) {
  const SuperBasis basis{doc.even_basis, doc.odd_basis};
  auto index_of = [&](const std::string& label) { return basis.index_of(label).value_or(~0ull); };

  auto canonical_terms = [&](const TermList& terms) {
    TermList out;
    for (const auto& t : terms.terms)
      if (t.second % doc.p != 0) out.terms.emplace_back(t.first, t.second % doc.p);
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const auto& a, const auto& b) { return index_of(a.first) < index_of(b.first); });
    return out;
  };

  json j;
  j["p"] = doc.p;
  j["even_basis"] = doc.even_basis;
  j["odd_basis"] = doc.odd_basis;

  std::vector<BracketEntry> brackets = doc.brackets;
  std::sort(brackets.begin(), brackets.end(), [&](const auto& a, const auto& b) {
    return std::make_pair(index_of(a.left), index_of(a.right)) <
           std::make_pair(index_of(b.left), index_of(b.right));
  });
  j["brackets"] = json::array();
  for (const auto& e : brackets) {
    const TermList terms = canonical_terms(e.value);
    if (terms.terms.empty()) continue;
    j["brackets"].push_back({{"left", e.left}, {"right", e.right}, {"value", terms_to_json(terms)}});
  }

  std::vector<PImageEntry> images = doc.p_operator;
  std::sort(images.begin(), images.end(),
            [&](const auto& a, const auto& b) { return index_of(a.on) < index_of(b.on); });
  j["p_operator"] = json::array();
  for (const auto& e : images) {
    const TermList terms = canonical_terms(e.value);
    if (terms.terms.empty()) continue;
    j["p_operator"].push_back({{"on", e.on}, {"value", terms_to_json(terms)}});
  }
  return j.dump(2) + "\n";
}

std::shared_ptr<const LieSuperalgebra> algebra_from(const AlgebraDocument& doc) {
  auto alg = std::make_shared<LieSuperalgebra>(SuperBasis{doc.even_basis, doc.odd_basis}, doc.p);
  const auto& basis = alg->basis();

  std::set<std::pair<std::size_t, std::size_t>> listed;
  for (const auto& e : doc.brackets)
    listed.insert({*basis.index_of(e.left), *basis.index_of(e.right)});

  for (const auto& e : doc.brackets) {
    const std::size_t i = *basis.index_of(e.left);
    const std::size_t j = *basis.index_of(e.right);
    for (const auto& [label, coeff] : e.value.terms)
      alg->set_structure_constant(i, j, *basis.index_of(label), coeff);
    // Fill the super-skew counterpart unless the document pins it explicitly.
    if (i != j && !listed.contains({j, i})) {
      const bool both_odd = basis.parity(i) == 1 && basis.parity(j) == 1;
      for (const auto& [label, coeff] : e.value.terms) {
        const std::uint32_t v = both_odd ? coeff % doc.p : modp::neg(coeff % doc.p, doc.p);
        alg->set_structure_constant(j, i, *basis.index_of(label), v);
      }
    }
  }
  return alg;
}

bool has_p_operator(const AlgebraDocument& doc) { return !doc.p_operator.empty(); }

POperator p_operator_from(const AlgebraDocument& doc,
                          std::shared_ptr<const LieSuperalgebra> alg) {
  std::vector<Vec> images(alg->even_dim(), Vec(alg->dim(), 0));
  for (const auto& e : doc.p_operator) {
    const std::size_t i = *alg->basis().index_of(e.on);
    for (const auto& [label, coeff] : e.value.terms)
      images[i][*alg->basis().index_of(label)] = coeff;
  }
  return POperator(std::move(alg), std::move(images));
}

AlgebraDocument document_from(const POperator& op) {
  const auto& alg = op.algebra();
  AlgebraDocument doc;
  doc.p = alg.p();
  doc.even_basis = alg.basis().even;
  doc.odd_basis = alg.basis().odd;

  // List each bracket once per canonical pair; parse refills the skew side.
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i; j < alg.dim(); ++j) {
      if (i == j && alg.parity(i) == 0) continue;
      const Vec w = alg.bracket_of_basis(i, j);
      if (vec_is_zero(w)) continue;
      BracketEntry entry{alg.basis().label(i), alg.basis().label(j), {}};
      for (std::size_t k = 0; k < alg.dim(); ++k)
        if (w[k] != 0) entry.value.terms.emplace_back(alg.basis().label(k), w[k]);
      doc.brackets.push_back(std::move(entry));
    }
  for (std::size_t i = 0; i < alg.even_dim(); ++i) {
    const Vec& img = op.image(i);
    if (vec_is_zero(img)) continue;
    PImageEntry entry{alg.basis().label(i), {}};
    for (std::size_t k = 0; k < alg.dim(); ++k)
      if (img[k] != 0) entry.value.terms.emplace_back(alg.basis().label(k), img[k]);
    doc.p_operator.push_back(std::move(entry));
  }
  return doc;
}

json algebra_json(const LieSuperalgebra& alg) {
  json j;
  j["p"] = alg.p();
  j["even_basis"] = alg.basis().even;
  j["odd_basis"] = alg.basis().odd;
  j["sdim"] = json::array({alg.even_dim(), alg.odd_dim()});
  return j;
}

json validation_json(const ValidationReport& rep) {
  json j;
  j["skew_ok"] = rep.skew_ok;
  j["grading_ok"] = rep.grading_ok;
  j["jacobi_ok"] = rep.jacobi_ok;
  j["cube_ok"] = rep.cube_ok;
  j["ok"] = rep.ok();
  json issues = json::array();
  for (const auto& issue : rep.issues) issues.push_back({{"axiom", issue.axiom}, {"at", issue.where}});
  j["issues"] = issues;
  return j;
}

json restrictedness_json(const RestrictednessReport& rep) {
  json j;
  j["axiom1_ok"] = rep.axiom1_ok;
  j["axiom2_ok"] = rep.axiom2_ok;
  j["axiom3_ok"] = rep.axiom3_ok;
  j["odd_module_ok"] = rep.odd_module_ok;
  j["ok"] = rep.ok();
  j["failures"] = rep.failures;
  return j;
}

json cohomology_json(const CohomologyReport& rep, const RestrictedComplex* rc) {
  json j;
  j["degree"] = rep.degree;
  j["restricted"] = rep.restricted;
  j["sdim"] = json::array({rep.sdim.even, rep.sdim.odd});
  json reps = json::array();
  for (const auto& r : rep.reps) {
    json e;
    e["name"] = r.name;
    e["parity"] = r.parity == 0 ? "even" : "odd";
    if (rep.restricted && rep.degree == 2 && rc != nullptr) {
      const auto z = rc->unflatten(r.coords);
      e["phi"] = z.phi;
      e["frob"] = z.frob;
    } else {
      e["coords"] = r.coords;
    }
    reps.push_back(std::move(e));
  }
  j["representatives"] = reps;
  return j;
}

json sixterm_json(const SixTermReport& rep) {
  json j;
  j["dims"] = {{"H1_res", rep.dims[0]}, {"H1", rep.dims[1]},          {"HomFr", rep.dims[2]},
               {"H2_res", rep.dims[3]}, {"H2", rep.dims[4]},          {"HomFr_H1", rep.dims[5]}};
  j["ranks"] = {{"iota1", rep.ranks[0]},
                {"D", rep.ranks[1]},
                {"iota2", rep.ranks[2]},
                {"pi", rep.ranks[3]},
                {"H", rep.ranks[4]}};
  j["exact"] = {{"at_H1", rep.exact[0]},
                {"at_HomFr", rep.exact[1]},
                {"at_H2_res", rep.exact[2]},
                {"at_H2", rep.exact[3]}};
  j["exact_all"] = rep.exact_all();
  j["D_is_zero"] = rep.ranks[1] == 0;
  j["H_is_zero"] = rep.ranks[4] == 0;
  return j;
}

RestrictedCochain2 parse_cocycle_name(const RestrictedComplex& rc, const std::string& name) {
  const auto& alg = rc.algebra();
  RestrictedCochain2 z{Vec(rc.cochains().dim2(), 0), Vec(alg.even_dim(), 0)};

  auto resolve = [&](const std::string& label) {
    const auto idx = alg.basis().index_of(label);
    if (!idx) throw ParseError("cocycle: unknown label '" + label + "'");
    return *idx;
  };

  if (name.rfind("frob:", 0) == 0) {
    const std::string arg = name.substr(5);
    std::size_t i;
    if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(c); })) {
      const std::size_t k = std::stoul(arg);
      if (k < 1 || k > alg.even_dim())
        throw ParseError("cocycle: even basis index out of range in '" + name + "'");
      i = k - 1;
    } else {
      i = resolve(arg);
      if (alg.parity(i) != 0) throw ParseError("cocycle: '" + arg + "' is not an even label");
    }
    z.frob[i] = 1;
    return z;
  }

  // Sugar L^{i,j} for the wedge of the duals of labels Li and Lj.
  const auto brace = name.find("^{");
  std::string left, right;
  if (brace != std::string::npos && name.back() == '}') {
    const std::string stem = name.substr(0, brace);
    const std::string inner = name.substr(brace + 2, name.size() - brace - 3);
    const auto comma = inner.find(',');
    if (stem.empty() || comma == std::string::npos)
      throw ParseError("cocycle: cannot parse '" + name + "'");
    left = stem + inner.substr(0, comma);
    right = stem + inner.substr(comma + 1);
  } else {
    const auto caret = name.find('^');
    if (caret == std::string::npos)
      throw ParseError("cocycle: expected '<label>^<label>', '<L>^{i,j}' or 'frob:<label>'");
    left = name.substr(0, caret);
    right = name.substr(caret + 1);
  }
  std::size_t a = resolve(left), b = resolve(right);
  if (a > b) std::swap(a, b);
  if (a == b && alg.parity(a) == 0)
    throw ParseError("cocycle: '" + name + "' vanishes (even diagonal)");
  z.phi[rc.cochains().pair_position(a, b)] = 1;
  return z;
}

}  // namespace rescoh
