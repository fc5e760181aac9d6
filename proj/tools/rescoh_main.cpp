#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rescoh/document.hpp"

namespace {

using namespace rescoh;
using nlohmann::json;

// Command-line / input-combination mistakes (exit code 2, unlike input
// validation failures which exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  std::string file;
  std::string family;
  std::size_t m = 1, n = 1;
  std::uint32_t p = 3;
  std::string lambda;
  std::uint64_t seed = 0;
  std::string format = "json";
};

void attach_input(CLI::App* cmd, CommonOpts& o, bool with_file = true) {
  if (with_file) cmd->add_option("file", o.file, "algebra document (JSON)");
  cmd->add_option("--family", o.family, "built-in family")
      ->check(CLI::IsMember({"heisenberg-even", "heisenberg-odd"}));
  cmd->add_option("--m", o.m, "family parameter m");
  cmd->add_option("--n", o.n, "family parameter n");
  cmd->add_option("--p", o.p, "field characteristic");
  cmd->add_option("--lambda", o.lambda,
                  "p-operator parameters: comma-separated residues or 'random'");
  cmd->add_option("--seed", o.seed, "seed for --lambda random");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
}

Vec parse_lambda(const CommonOpts& o) {
  if (o.lambda.empty()) return Vec(2 * o.m + 1, 0);
  if (o.lambda == "random") return lambda_from_seed(o.m, o.p, o.seed);
  Vec out;
  std::stringstream ss(o.lambda);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(modp::reduce(std::stoll(tok), o.p));
    } catch (const std::exception&) {
      throw UsageError("--lambda: cannot parse '" + tok + "'");
    }
  }
  return out;
}

struct Input {
  std::optional<FamilyAlgebra> fam;
  std::optional<POperator> op;  // present for both file and family inputs
  const LieSuperalgebra& algebra() const { return op->algebra(); }
};

Input resolve_input(const CommonOpts& o) {
  if (!o.file.empty() && !o.family.empty())
    throw UsageError("give either a document file or --family, not both");
  Input in;
  if (!o.family.empty()) {
    if (o.family == "heisenberg-even")
      in.fam = heisenberg_even({o.m, o.n, o.p, parse_lambda(o)});
    else
      in.fam = heisenberg_odd({o.n, o.p});
    in.op = in.fam->op;
    return in;
  }
  if (o.file.empty()) throw UsageError("an algebra document file or --family is required");
  std::ifstream f(o.file);
  if (!f) throw ParseError("cannot open '" + o.file + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const AlgebraDocument doc = parse_document(buf.str());
  // An absent or empty p_operator section means [p] = 0.
  in.op = p_operator_from(doc, algebra_from(doc));
  return in;
}

json closed_form_json(const FamilyAlgebra& fam, const std::string& which, const SdimPair& computed) {
  SdimPair expected;
  if (fam.kind == FamilyKind::HeisenbergEven) {
    if (which == "h1" || which == "h1_res") expected = expected_sdim_h1_even_family(fam.m, fam.n);
    if (which == "h2") expected = expected_sdim_h2_even_family(fam.m, fam.n);
    if (which == "h2_res") expected = expected_sdim_h2res_even_family(fam.m, fam.n);
  } else {
    if (which == "h1" || which == "h1_res") expected = expected_sdim_h1_odd_family(fam.n);
    if (which == "h2") expected = expected_sdim_h2_odd_family(fam.n);
    if (which == "h2_res") expected = expected_sdim_h2res_odd_family(fam.n);
  }
  json j;
  j["space"] = which;
  j["expected_sdim"] = json::array({expected.even, expected.odd});
  j["computed_sdim"] = json::array({computed.even, computed.odd});
  j["match"] = expected == SdimPair{computed.even, computed.odd};
  return j;
}

json family_header_json(const FamilyAlgebra& fam) {
  json j;
  j["name"] = fam.kind == FamilyKind::HeisenbergEven ? "heisenberg-even" : "heisenberg-odd";
  if (fam.kind == FamilyKind::HeisenbergEven) j["m"] = fam.m;
  j["n"] = fam.n;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string sdim_str(const SdimPair& s) {
  return "(" + std::to_string(s.even) + ", " + std::to_string(s.odd) + ")";
}

void print_cohomology_table(const std::string& title, const CohomologyReport& rep) {
  std::cout << title << "  sdim = " << sdim_str(rep.sdim) << "\n";
  for (const auto& r : rep.reps)
    std::cout << "  [" << (r.parity == 0 ? "even" : "odd ") << "] " << r.name << "\n";
}

int run_validate(const CommonOpts& o) {
  Input in = resolve_input(o);
  const auto& alg = in.algebra();
  const auto vrep = alg.validate();
  const auto rrep = in.op->validate();
  const bool ok = vrep.ok() && rrep.ok();
  if (o.format == "table") {
    auto line = [&](const char* name, bool pass) {
      std::cout << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    };
    line("skew", vrep.skew_ok);
    line("grading", vrep.grading_ok);
    line("jacobi", vrep.jacobi_ok);
    line("cube (p=3)", vrep.cube_ok);
    line("p-operator axiom 1", rrep.axiom1_ok);
    line("p-operator axiom 2", rrep.axiom2_ok);
    line("p-operator axiom 3", rrep.axiom3_ok);
    line("odd module condition", rrep.odd_module_ok);
  } else {
    json j;
    j["command"] = "validate";
    j["algebra"] = algebra_json(alg);
    j["superalgebra"] = validation_json(vrep);
    j["restricted"] = restrictedness_json(rrep);
    j["ok"] = ok;
    emit(j);
  }
  return ok ? 0 : 1;
}

int run_cohomology(const CommonOpts& o, int degree) {
  Input in = resolve_input(o);
  const CochainBasis cb(in.algebra());
  const auto rep = cb.cohomology(degree);
  if (o.format == "table") {
    print_cohomology_table("H^" + std::to_string(degree), rep);
    return 0;
  }
  json j;
  j["command"] = "cohomology";
  j["algebra"] = algebra_json(in.algebra());
  j[degree == 1 ? "h1" : "h2"] = cohomology_json(rep, nullptr);
  if (in.fam) {
    j["family"] = family_header_json(*in.fam);
    j["closed_form"] = json::array({closed_form_json(*in.fam, degree == 1 ? "h1" : "h2", rep.sdim)});
  }
  emit(j);
  return 0;
}

int run_res_cohomology(const CommonOpts& o) {
  Input in = resolve_input(o);
  const RestrictedComplex rc(*in.op);
  const auto h1 = rc.h1_res();
  const auto h2 = rc.h2_res();
  if (o.format == "table") {
    print_cohomology_table("H^1_res", h1);
    print_cohomology_table("H^2_res", h2);
    return 0;
  }
  json j;
  j["command"] = "res-cohomology";
  j["algebra"] = algebra_json(in.algebra());
  j["h1_res"] = cohomology_json(h1, &rc);
  j["h2_res"] = cohomology_json(h2, &rc);
  if (in.fam) {
    j["family"] = family_header_json(*in.fam);
    j["closed_form"] = json::array({closed_form_json(*in.fam, "h1_res", h1.sdim),
                                    closed_form_json(*in.fam, "h2_res", h2.sdim)});
  }
  emit(j);
  return 0;
}

int run_sixterm(const CommonOpts& o) {
  Input in = resolve_input(o);
  const RestrictedComplex rc(*in.op);
  const auto rep = rc.sixterm_verify();
  if (o.format == "table") {
    const char* names[6] = {"H1_res", "H1", "HomFr", "H2_res", "H2", "HomFr(g0,H1)"};
    const char* maps[5] = {"iota1", "D", "iota2", "pi", "H"};
    for (int i = 0; i < 6; ++i) std::cout << names[i] << " dim = " << rep.dims[i] << "\n";
    for (int i = 0; i < 5; ++i) std::cout << "rank " << maps[i] << " = " << rep.ranks[i] << "\n";
    std::cout << "exact: " << (rep.exact_all() ? "yes" : "NO") << "\n";
  } else {
    json j;
    j["command"] = "sixterm";
    j["algebra"] = algebra_json(in.algebra());
    j["sixterm"] = sixterm_json(rep);
    if (in.fam) j["family"] = family_header_json(*in.fam);
    emit(j);
  }
  return rep.exact_all() ? 0 : 1;
}

int run_extend(const CommonOpts& o, const std::string& cocycle, const std::string& phi_csv,
               const std::string& frob_csv) {
  Input in = resolve_input(o);
  const RestrictedComplex rc(*in.op);

  RestrictedCochain2 z{Vec(rc.cochains().dim2(), 0), Vec(in.algebra().even_dim(), 0)};
  if (!cocycle.empty()) {
    if (!phi_csv.empty() || !frob_csv.empty())
      throw UsageError("give either --cocycle or explicit --phi/--frob coordinates");
    z = parse_cocycle_name(rc, cocycle);
  } else {
    auto parse_csv = [&](const std::string& csv, Vec& out, const char* what) {
      if (csv.empty()) return;
      std::stringstream ss(csv);
      std::string tok;
      std::size_t k = 0;
      while (std::getline(ss, tok, ',')) {
        if (k >= out.size()) throw UsageError(std::string(what) + ": too many coordinates");
        out[k++] = modp::reduce(std::stoll(tok), in.algebra().p());
      }
      if (k != out.size()) throw UsageError(std::string(what) + ": expected " +
                                            std::to_string(out.size()) + " coordinates");
    };
    if (phi_csv.empty() && frob_csv.empty())
      throw UsageError("a cocycle is required: --cocycle NAME or --phi/--frob");
    parse_csv(phi_csv, z.phi, "--phi");
    parse_csv(frob_csv, z.frob, "--frob");
  }

  const auto ext = central_extension(*in.op, z);
  const auto vrep = ext.extended.algebra().validate();
  const auto rrep = ext.extended.validate();
  json j;
  j["command"] = "extend";
  j["algebra"] = algebra_json(in.algebra());
  j["cocycle"] = {{"name", rc.pretty(z)}, {"phi", z.phi}, {"frob", z.frob}};
  j["split_ordinary"] = ext.split_ordinary;
  j["extension"] = json::parse(serialize_document(document_from(ext.extended)));
  j["extension_valid"] = vrep.ok() && rrep.ok();
  if (o.format == "table") {
    std::cout << "cocycle: " << rc.pretty(z) << "\n"
              << "split as ordinary extension: " << (ext.split_ordinary ? "yes" : "no") << "\n"
              << serialize_document(document_from(ext.extended));
  } else {
    emit(j);
  }
  return vrep.ok() && rrep.ok() ? 0 : 1;
}

int run_catalog(const CommonOpts& o) {
  Input in = resolve_input(o);
  if (!in.fam) throw UsageError("catalog requires --family (named extensions exist per family)");
  const auto catalog = extension_catalog(*in.fam);
  const RestrictedComplex rc(*in.op);

  std::size_t split = 0, nonsplit = 0;
  bool all_valid = true;
  json entries = json::array();
  for (const auto& ext : catalog) {
    (ext.split_ordinary ? split : nonsplit) += 1;
    const bool valid = ext.extended.algebra().validate().ok() && ext.extended.validate().ok();
    all_valid = all_valid && valid;
    entries.push_back({{"name", ext.name},
                       {"cocycle", rc.pretty(ext.cocycle)},
                       {"split_ordinary", ext.split_ordinary},
                       {"valid", valid}});
  }
  bool inequivalent = true;
  for (std::size_t a = 0; a < catalog.size() && inequivalent; ++a)
    for (std::size_t b = a + 1; b < catalog.size(); ++b)
      if (cocycles_equivalent(*in.op, catalog[a].cocycle, catalog[b].cocycle)) {
        inequivalent = false;
        break;
      }

  if (o.format == "table") {
    for (const auto& e : entries)
      std::cout << e["name"].get<std::string>() << "  "
                << (e["split_ordinary"].get<bool>() ? "split    " : "non-split") << "  "
                << e["cocycle"].get<std::string>() << "\n";
    std::cout << "split " << split << ", non-split " << nonsplit << "\n";
  } else {
    json j;
    j["command"] = "catalog";
    j["family"] = family_header_json(*in.fam);
    j["extensions"] = entries;
    j["counts"] = {{"split", split}, {"non_split", nonsplit}};
    j["pairwise_inequivalent"] = inequivalent;
    j["all_valid"] = all_valid;
    emit(j);
  }
  return all_valid && inequivalent ? 0 : 1;
}

int run_family(const CommonOpts& o) {
  if (o.family.empty()) throw UsageError("family: --family is required");
  Input in = resolve_input(o);
  std::cout << serialize_document(document_from(*in.op));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology of restricted Lie superalgebras over F_p"};
  app.require_subcommand(1);

  CommonOpts o;
  int degree = 0;
  std::string cocycle, phi_csv, frob_csv;

  auto* validate = app.add_subcommand("validate", "check the superalgebra and [p]-operator axioms");
  attach_input(validate, o);
  auto* coh = app.add_subcommand("cohomology", "ordinary cohomology with trivial coefficients");
  attach_input(coh, o);
  coh->add_option("--degree", degree, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  auto* rescoh_cmd = app.add_subcommand("res-cohomology", "restricted cohomology in degrees 1, 2");
  attach_input(rescoh_cmd, o);
  auto* sixterm = app.add_subcommand("sixterm", "verify the six-term exact sequence");
  attach_input(sixterm, o);
  auto* extend = app.add_subcommand("extend", "build a restricted one-dimensional central extension");
  attach_input(extend, o);
  extend->add_option("--cocycle", cocycle, "named cocycle, e.g. x1^x2, x^{1,2} or frob:3");
  extend->add_option("--phi", phi_csv, "explicit 2-cochain coordinates (wedge-basis order)");
  extend->add_option("--frob", frob_csv, "explicit Frobenius coordinates (even basis order)");
  auto* catalog = app.add_subcommand("catalog", "named extensions of a family member");
  attach_input(catalog, o);
  auto* family = app.add_subcommand("family", "print a family member as an algebra document");
  attach_input(family, o, /*with_file=*/false);

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return run_validate(o);
    if (coh->parsed()) return run_cohomology(o, degree);
    if (rescoh_cmd->parsed()) return run_res_cohomology(o);
    if (sixterm->parsed()) return run_sixterm(o);
    if (extend->parsed()) return run_extend(o, cocycle, phi_csv, frob_csv);
    if (catalog->parsed()) return run_catalog(o);
    if (family->parsed()) return run_family(o);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const rescoh::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
