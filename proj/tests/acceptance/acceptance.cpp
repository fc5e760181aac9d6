// Acceptance suite: every release criterion, one pass/fail line each.
// Usage: acceptance <cli-binary> <golden-dir> <scratch-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "../corpus.hpp"
#include "../oracles.hpp"
#include "rescoh/document.hpp"

using namespace rescoh;
using namespace rescoh::testing;

namespace {

struct Criterion {
  std::string label;
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string cell_tag(std::size_t m, std::size_t n, std::uint32_t p, const std::string& lam) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " p=" + std::to_string(p) +
         (lam.empty() ? "" : " lambda=" + lam);
}

std::vector<std::pair<std::string, Vec>> lambda_panel(std::size_t m, std::uint32_t p) {
  Vec e1(2 * m + 1, 0), elast(2 * m + 1, 0);
  e1[0] = 1;
  elast[2 * m] = 1;
  return {{"zero", Vec(2 * m + 1, 0)},
          {"e1", e1},
          {"e_last", elast},
          {"seeded", lambda_from_seed(m, p, 20240809)}};
}

// ---- criteria 1-5: the family sweeps ---------------------------------------

void sweep_families(Criterion& c1, Criterion& c2, Criterion& c3, Criterion& c4, Criterion& c5) {
  using clock = std::chrono::steady_clock;
  const auto sweep_start = clock::now();

  auto check_degree1 = [&](const RestrictedComplex& rc, const SdimPair& expect,
                           const std::string& tag) {
    const auto h1 = rc.cochains().cohomology(1);
    const auto h1r = rc.h1_res();
    c3.require(h1.sdim == expect, "H1 sdim mismatch at " + tag);
    c3.require(h1r.sdim == expect, "H1_res sdim mismatch at " + tag);
    std::vector<Vec> a, b;
    for (const auto& r : h1.reps) a.push_back(r.coords);
    for (const auto& r : h1r.reps) b.push_back(r.coords);
    c3.require(same_span(a, b, rc.algebra().dim(), rc.algebra().p()),
               "H1_res != H1 as subspaces at " + tag);
  };

  auto check_gap = [&](const RestrictedComplex& rc, const SdimPair& h2_expect,
                       const std::string& tag) {
    const auto h2 = rc.cochains().cohomology(2);
    c4.require(h2.sdim == h2_expect, "H2 sdim mismatch at " + tag);
    const auto h2r = rc.h2_res();
    c4.require(h2r.sdim.even - h2.sdim.even == rc.algebra().even_dim(),
               "dim H2_res(even) - dim H2(even) != dim g_0 at " + tag);
  };

  auto check_sixterm = [&](const RestrictedComplex& rc, bool expect_d_zero,
                           const std::string& tag) {
    const auto st = rc.sixterm_verify();
    c5.require(st.exact_all(), "six-term sequence not exact at " + tag);
    c5.require(st.ranks[4] == 0, "H != 0 at " + tag);
    if (expect_d_zero) c5.require(st.ranks[1] == 0, "D != 0 at " + tag);
  };

  for (std::size_t m : {1u, 2u})
    for (std::size_t n : {1u, 2u, 3u})
      for (std::uint32_t p : {3u, 5u, 7u})
        for (const auto& [lam_name, lambda] : lambda_panel(m, p)) {
          const std::string tag = cell_tag(m, n, p, lam_name) + " (even family)";
          const auto cell_start = clock::now();
          const auto fam = heisenberg_even({m, n, p, lambda});
          const RestrictedComplex rc(fam.op);
          c1.require(rc.h2_res().sdim == expected_sdim_h2res_even_family(m, n),
                     "H2_res sdim mismatch at " + tag);
          check_degree1(rc, expected_sdim_h1_even_family(m, n), tag);
          check_gap(rc, expected_sdim_h2_even_family(m, n), tag);
          check_sixterm(rc, false, tag);
          const double secs = std::chrono::duration<double>(clock::now() - cell_start).count();
          c1.require(secs < 10.0, "cell exceeded 10 s at " + tag);
        }

  for (std::size_t n : {1u, 2u, 3u, 4u})
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const std::string tag = cell_tag(0, n, p, "") + " (odd family)";
      const auto fam = heisenberg_odd({n, p});
      const RestrictedComplex rc(fam.op);
      c2.require(rc.h2_res().sdim == expected_sdim_h2res_odd_family(n),
                 "H2_res sdim mismatch at " + tag);
      check_degree1(rc, expected_sdim_h1_odd_family(n), tag);
      check_gap(rc, expected_sdim_h2_odd_family(n), tag);
      check_sixterm(rc, true, tag);
    }

  const double total = std::chrono::duration<double>(clock::now() - sweep_start).count();
  c1.require(total < 300.0, "full sweep exceeded 5 minutes");
}

// ---- criterion 6: complex identities ---------------------------------------

void complex_properties(Criterion& c) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::vector<std::pair<std::string, POperator>> corpus;
    corpus.emplace_back("h_{1,1}", heisenberg_even({1, 1, p, lambda_from_seed(1, p, 2)}).op);
    corpus.emplace_back("h_{2,2}", heisenberg_even({2, 2, p, lambda_from_seed(2, p, 3)}).op);
    corpus.emplace_back("ba_1", heisenberg_odd({1, p}).op);
    corpus.emplace_back("ba_3", heisenberg_odd({3, p}).op);
    for (std::size_t k = 0; k <= 2; ++k)
      for (std::size_t l = 0; l <= 2; ++l) {
        if (k == 0 && l == 0) continue;
        corpus.emplace_back("abelian(" + std::to_string(k) + "|" + std::to_string(l) + ")",
                            zero_p_operator(abelian(k, l, p)));
      }
    corpus.emplace_back("solvable2", solvable2_p_operator(p));

    for (const auto& [name, op] : corpus) {
      const std::string tag = name + " p=" + std::to_string(p);
      const RestrictedComplex rc(op);
      const auto& cb = rc.cochains();
      c.require((cb.d2_matrix() * cb.d1_matrix()).is_zero(), "d2 d1 != 0 on " + tag);
      for (std::size_t k = 0; k < op.algebra().dim(); ++k) {
        const auto z = rc.d1_res(op.algebra().basis_vector(k));
        std::string why;
        c.require(rc.in_z2(z, &why),
                  "d2_res d1_res != 0 on " + tag + " at basis cochain " + std::to_string(k) +
                      " (" + why + ")");
      }
    }
  }

  // ind^2 is blind to the omega component: 200 seeded random 1-cochains.
  std::mt19937 gen(20240809);
  for (int round = 0; round < 200; ++round) {
    const std::uint32_t p = round % 2 == 0 ? 3u : 5u;
    const POperator op = round % 4 < 2 ? heisenberg_even({1, 2, p, lambda_from_seed(1, p, round)}).op
                                       : heisenberg_odd({2, p}).op;
    const RestrictedComplex rc(op);
    Vec psi(op.algebra().dim());
    for (auto& x : psi) x = gen() % p;
    c.require(rc.lemma_swap_holds(psi), "ind2 swap regression failed at round " +
                                            std::to_string(round));
  }
}

// ---- criterion 7: exhaustive enumeration at p = 3 --------------------------

void brute_force_oracle(Criterion& c) {
  std::vector<std::pair<std::string, POperator>> subjects;
  subjects.emplace_back("h_{1,1}", heisenberg_even({1, 1, 3, Vec(3, 0)}).op);
  subjects.emplace_back("ba_1", heisenberg_odd({1, 3}).op);

  for (const auto& [name, op] : subjects) {
    const auto& alg = op.algebra();
    const RestrictedComplex rc(op);
    const auto& cb = rc.cochains();
    const std::uint32_t p = 3;
    const std::size_t k2 = cb.dim2(), n = alg.dim(), m = alg.even_dim();

    // Ordinary cocycles: direct three-term test on every ordered triple.
    std::set<Vec> z2_brute;
    for_all_vectors(k2, p, [&](const Vec& phi) {
      if (bf_is_cocycle(cb, phi)) z2_brute.insert(phi);
    });
    c.require(z2_brute == span_set(cb.z2_basis(), k2, p), "Z2 sets differ on " + name);

    // Ordinary coboundaries: d1 evaluated pointwise from the brackets.
    auto d1_direct = [&](const Vec& psi) {
      Vec out(k2, 0);
      for (std::size_t t = 0; t < k2; ++t) {
        const auto [i, j] = cb.pairs()[t];
        const Vec br = alg.bracket_of_basis(i, j);
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc = modp::add(acc, modp::mul(psi[k], br[k], p), p);
        out[t] = acc;
      }
      return out;
    };
    std::set<Vec> b2_brute;
    for_all_vectors(n, p, [&](const Vec& psi) { b2_brute.insert(d1_direct(psi)); });
    c.require(b2_brute == span_set(cb.b2_basis(), k2, p), "B2 sets differ on " + name);

    // Restricted cocycles: all (phi, frob) pairs; the conditions only
    // constrain phi, and every frob completes a passing phi.
    std::set<Vec> z2res_brute;
    for_all_vectors(k2, p, [&](const Vec& phi) {
      if (!bf_is_cocycle(cb, phi) || !bf_ind2_vanishes(rc, phi)) return;
      for_all_vectors(m, p, [&](const Vec& frob) {
        Vec flat = phi;
        flat.insert(flat.end(), frob.begin(), frob.end());
        z2res_brute.insert(std::move(flat));
      });
    });
    std::vector<Vec> z2res_flat;
    for (const auto& z : rc.z2_basis()) z2res_flat.push_back(rc.flatten(z));
    c.require(z2res_brute == span_set(z2res_flat, k2 + m, p), "Z2_res sets differ on " + name);

    // Restricted coboundaries: pairs (d1 psi, psi(e_i^[p])).
    std::set<Vec> b2res_brute;
    for_all_vectors(n, p, [&](const Vec& psi) {
      Vec flat = d1_direct(psi);
      for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          acc = modp::add(acc, modp::mul(psi[k], op.image(i)[k], p), p);
        flat.push_back(acc);
      }
      b2res_brute.insert(std::move(flat));
    });
    std::vector<Vec> b2res_flat;
    for (const auto& b : rc.b2_basis()) b2res_flat.push_back(rc.flatten(b));
    c.require(b2res_brute == span_set(b2res_flat, k2 + m, p), "B2_res sets differ on " + name);
  }
}

// ---- criterion 8: extension catalogs ----------------------------------------

void extension_catalogs(Criterion& c) {
  struct Subject {
    std::string name;
    FamilyAlgebra fam;
    std::size_t split, nonsplit;
  };
  std::vector<Subject> subjects;
  for (std::uint32_t p : {3u, 5u})
    for (std::size_t m : {1u, 2u})
      for (std::size_t n : {1u, 2u}) {
        subjects.push_back({"even " + cell_tag(m, n, p, "seeded"),
                            heisenberg_even({m, n, p, lambda_from_seed(m, p, 77)}), 2 * m + 1,
                            2 * m * m - m + (n * n + n) / 2 - 1});
      }
  for (std::uint32_t p : {3u, 5u})
    for (std::size_t n : {1u, 2u, 3u})
      subjects.push_back({"odd " + cell_tag(0, n, p, ""), heisenberg_odd({n, p}), n, n * n});

  for (const auto& s : subjects) {
    const auto catalog = extension_catalog(s.fam);
    std::size_t split = 0, nonsplit = 0;
    for (const auto& ext : catalog) {
      (ext.split_ordinary ? split : nonsplit) += 1;
      const auto& big = ext.extended.algebra();
      c.require(big.validate().ok(), ext.name + " fails superalgebra axioms on " + s.name);
      c.require(ext.extended.validate().ok(), ext.name + " fails [p] axioms on " + s.name);
      const auto c_idx = big.basis().index_of("c");
      c.require(c_idx.has_value(), "missing central generator on " + s.name);
      bool central = true;
      for (std::size_t i = 0; i < big.dim(); ++i)
        central = central && vec_is_zero(big.bracket_of_basis(*c_idx, i)) &&
                  vec_is_zero(big.bracket_of_basis(i, *c_idx));
      c.require(central, ext.name + ": c is not central on " + s.name);
      c.require(vec_is_zero(ext.extended.image(*c_idx)), ext.name + ": c^[p] != 0 on " + s.name);
    }
    c.require(split == s.split, "split count mismatch on " + s.name + ": got " +
                                    std::to_string(split) + ", want " + std::to_string(s.split));
    c.require(nonsplit == s.nonsplit,
              "non-split count mismatch on " + s.name + ": got " + std::to_string(nonsplit) +
                  ", want " + std::to_string(s.nonsplit));
    for (std::size_t a = 0; a < catalog.size(); ++a)
      for (std::size_t b = a + 1; b < catalog.size(); ++b)
        c.require(!cocycles_equivalent(s.fam.op, catalog[a].cocycle, catalog[b].cocycle),
                  catalog[a].name + " ~ " + catalog[b].name + " on " + s.name);
  }
}

// ---- criterion 9: the CLI contract ------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cmd(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void cli_contract(Criterion& c, const std::string& cli, const std::filesystem::path& golden,
                  const std::filesystem::path& scratch) {
  std::filesystem::create_directories(scratch);

  const std::vector<std::pair<std::string, std::string>> cases = {
      {"validate " + (golden / "h11_algebra.json").string(), "validate_h11.json"},
      {"res-cohomology --family heisenberg-even --m 1 --n 1 --p 3 --lambda 0,0,0",
       "rescoh_even_m1_n1_p3.json"},
      {"sixterm --family heisenberg-odd --n 2 --p 5", "sixterm_odd_n2_p5.json"},
  };
  for (const auto& [args, golden_name] : cases) {
    const auto first = run_cmd(cli + " " + args);
    c.require(first.exit_code == 0, args + ": exit code " + std::to_string(first.exit_code));
    const std::string want = slurp(golden / golden_name);
    c.require(!want.empty(), "missing golden file " + golden_name);
    c.require(first.out == want, args + ": output differs from " + golden_name);
    const auto second = run_cmd(cli + " " + args);
    c.require(first.out == second.out, args + ": output is not deterministic");
  }

  // Round-trip: the emitted family document is a canonical fixed point and
  // validates cleanly when fed back in.
  const std::string fam_cmd = cli + " family --family heisenberg-even --m 1 --n 2 --p 5"
                              " --lambda 1,2,3";
  const auto fam_out = run_cmd(fam_cmd);
  c.require(fam_out.exit_code == 0, "family subcommand failed");
  const AlgebraDocument doc = parse_document(fam_out.out);
  c.require(serialize_document(doc) == fam_out.out, "family output is not canonical");
  const auto path = scratch / "family_roundtrip.json";
  std::ofstream(path, std::ios::binary) << fam_out.out;
  const auto val = run_cmd(cli + " validate " + path.string());
  c.require(val.exit_code == 0, "re-validating the emitted family document failed");

  // Usage errors exit with 2, validation failures with 1.
  c.require(run_cmd(cli + " cohomology --family heisenberg-even").exit_code == 2,
            "missing --degree should be a usage error");
  const auto bad = scratch / "bad_p.json";
  std::ofstream(bad) << R"({"p":2, "even_basis":[], "odd_basis":[]})";
  c.require(run_cmd(cli + " validate " + bad.string()).exit_code == 1,
            "p = 2 should be an input error");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> cs(9);
  cs[0].label = "even-centre family: restricted H^2 dimensions over the sweep";
  cs[1].label = "odd-centre family: restricted H^2 dimensions over the sweep";
  cs[2].label = "degree-1 cohomology: dimensions and H^1_res = H^1";
  cs[3].label = "ordinary H^2 dimensions and the restricted/ordinary even gap";
  cs[4].label = "six-term sequence exactness (H = 0; D = 0 on the odd family)";
  cs[5].label = "complex identities and the ind^2 swap regression";
  cs[6].label = "exhaustive enumeration cross-check at p = 3";
  cs[7].label = "extension catalogs: counts, validity, inequivalence";
  cs[8].label = "CLI contract: golden files, determinism, round-trip";

  sweep_families(cs[0], cs[1], cs[2], cs[3], cs[4]);
  complex_properties(cs[5]);
  brute_force_oracle(cs[6]);
  extension_catalogs(cs[7]);

  if (argc >= 3) {
    cli_contract(cs[8], argv[1], argv[2], argc >= 4 ? argv[3] : "acceptance_scratch");
  } else {
    cs[8].require(false, "usage: acceptance <cli-binary> <golden-dir> [scratch-dir]");
  }

  bool all = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    all = all && cs[i].ok;
    std::cout << (cs[i].ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << cs[i].label;
    if (!cs[i].ok) std::cout << " -- " << cs[i].detail;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
