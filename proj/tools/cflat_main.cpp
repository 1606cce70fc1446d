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

// Command-line front end. Exit status: 0 success or true, 1 false or
// violation, 2 input error.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cflat/cflat.hpp"

namespace {

using namespace cflat;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  if (text.back() == ',') out.emplace_back();
  return out;
}

Subset parse_set(const GroundSet& ground, const std::string& text) {
  return ground.subset_of(split_labels(text));
}

Matroid load(const std::string& path) { return Matroid::from_family(read_matroid_file(path)); }

std::string spec_line(const GroundSet& ground, const MinorSpec& spec) {
  return "contract " + emit_set(ground, spec.contraction) + " delete " +
         emit_set(ground, spec.deletion);
}

struct Options {
  std::string file, file2;
  std::string set, contract, del, flat;
  std::string method = "brute";
  bool whitney = false;
  bool all = false;
  bool sublattice = false;
  int max_ground = 12;
  int cap = kDefaultIngletonCap;
  int k = 1;
  // gen
  int r = 0, n = 0;
  std::string sigma, seq, name;
  std::uint64_t seed = 0;
  bool width2 = false;
};

int run_validate(const Options& o) {
  const RankedFamily family = read_matroid_file(o.file);
  if (o.all) {
    const auto violations = audit(family);
    if (violations.empty()) {
      std::cout << "valid, rank " << Matroid::from_family(family).rank() << "\n";
      return kOk;
    }
    for (const auto& v : violations) std::cout << "invalid: " << v.describe(family.ground()) << "\n";
    return kFalse;
  }
  auto result = validate(family);
  if (auto* m = std::get_if<Matroid>(&result)) {
    std::cout << "valid, rank " << m->rank() << "\n";
    return kOk;
  }
  std::cout << "invalid: " << std::get<AxiomViolation>(result).describe(family.ground()) << "\n";
  return kFalse;
}

int run_tutte(const Options& o) {
  RankGenMatrix r;
  if (o.method == "brute") {
    if (!o.file2.empty()) {
      throw Error(Errc::kInvalidParameters, "--method brute takes a single matroid");
    }
    r = rank_gen_brute(load(o.file));
  } else {
    if (o.file2.empty()) {
      throw Error(Errc::kInvalidParameters, "--method convolution needs two matroids M and N");
    }
    const Matroid m = load(o.file);
    const Matroid n = load(o.file2);
    r = rank_gen_convolution(rank_gen_brute(m), m.rank(), rank_gen_brute(n));
  }
  std::cout << emit_polynomial(o.whitney ? r.coeffs : tutte_from_rank_gen(r));
  return kOk;
}

int run_gen(const std::string& kind, const Options& o) {
  if (kind == "uniform") {
    std::cout << emit_matroid(uniform(o.r, o.n));
  } else if (kind == "pn") {
    std::cout << emit_matroid(excluded_minor_pn(o.n));
  } else if (kind == "gimenez") {
    std::vector<int> sigma;
    for (const auto& s : split_labels(o.sigma)) {
      try {
        sigma.push_back(std::stoi(s));
      } catch (const std::exception&) {
        throw Error(Errc::kInvalidParameters, "--sigma expects comma-separated integers");
      }
    }
    if (sigma.empty()) {
      for (int i = 1; i <= o.n; ++i) sigma.push_back(i);
    }
    std::cout << emit_matroid(gimenez_family(o.n, sigma));
  } else if (kind == "nested") {
    std::cout << emit_matroid(nested_from_sequence(IFSequence(o.seq)));
  } else if (kind == "catalog") {
    std::cout << emit_matroid(catalog(o.name));
  } else {
    const int bound = o.n > 0 ? o.n : 10;
    std::cout << emit_matroid(o.width2 ? random_width2_matroid(o.seed, bound)
                                       : random_matroid(o.seed, bound));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroids through their lattices of cyclic flats"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("matroid", o.file, "Matroid document")->required()->check(CLI::ExistingFile);
  };
  auto pair_args = [&](CLI::App* sub) {
    sub->add_option("m", o.file, "First matroid document")->required()->check(CLI::ExistingFile);
    sub->add_option("n", o.file2, "Second matroid document")->required()->check(CLI::ExistingFile);
  };
  auto emit = [](const Matroid& m) {
    std::cout << emit_matroid(m);
    return kOk;
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the cyclic-flat axioms");
  file_arg(validate_cmd);
  validate_cmd->add_flag("--all", o.all, "Report every violation");
  validate_cmd->callback([&] { action = [&] { return run_validate(o); }; });

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a subset");
  file_arg(rank_cmd);
  rank_cmd->add_option("--set", o.set, "Comma-separated labels")->required();
  rank_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      std::cout << m.rank(parse_set(m.ground(), o.set)) << "\n";
      return kOk;
    };
  });

  auto* indep_cmd = app.add_subcommand("independent", "Independence test");
  file_arg(indep_cmd);
  indep_cmd->add_option("--set", o.set, "Comma-separated labels")->required();
  indep_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      const bool ok = is_independent(m, parse_set(m.ground(), o.set));
      std::cout << (ok ? "independent" : "dependent") << "\n";
      return ok ? kOk : kFalse;
    };
  });

  auto* circuits_cmd = app.add_subcommand("circuits", "List the circuits");
  file_arg(circuits_cmd);
  circuits_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      for (Subset c : circuits(m)) std::cout << emit_set(m.ground(), c) << "\n";
      return kOk;
    };
  });

  auto* flats_cmd =
      app.add_subcommand("cyclic-flats", "Recompute the cyclic flats from the rank function");
  file_arg(flats_cmd);
  flats_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      const RankedFamily again = cyclic_flats_recompute(m);
      std::cout << emit_matroid(again);
      if (again == m.family()) return kOk;
      std::cerr << "recomputed cyclic flats differ from the input\n";
      return kFalse;
    };
  });

  auto* stats_cmd = app.add_subcommand("stats", "Rank, nullity, loops, isthmuses, width");
  file_arg(stats_cmd);
  stats_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      const BasicStats s = basic_stats(m);
      std::cout << "elements " << m.ground_size() << "\nrank " << s.rank << "\nnullity "
                << s.nullity << "\nloops " << emit_set(m.ground(), s.loops) << "\nisthmuses "
                << emit_set(m.ground(), s.isthmuses) << "\ncyclic_flats " << s.num_cyclic_flats
                << "\ncyclic_width " << cyclic_width(m) << "\n";
      return kOk;
    };
  });

  auto* dual_cmd = app.add_subcommand("dual", "Dual matroid");
  file_arg(dual_cmd);
  dual_cmd->callback([&] { action = [&] { return emit(dual(load(o.file))); }; });

  auto* minor_cmd = app.add_subcommand("minor", "M / C \\ D");
  file_arg(minor_cmd);
  minor_cmd->add_option("--contract", o.contract, "Comma-separated labels to contract");
  minor_cmd->add_option("--delete", o.del, "Comma-separated labels to delete");
  minor_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      return emit(minor(m, {parse_set(m.ground(), o.contract), parse_set(m.ground(), o.del)}));
    };
  });

  auto* relax_cmd = app.add_subcommand("relax", "Relax an isolated cyclic flat");
  file_arg(relax_cmd);
  relax_cmd->add_option("--flat", o.flat, "Comma-separated labels")->required();
  relax_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      return emit(relax(m, parse_set(m.ground(), o.flat)));
    };
  });

  auto* sum_cmd = app.add_subcommand("directsum", "Direct sum M ⊕ N");
  pair_args(sum_cmd);
  sum_cmd->callback([&] { action = [&] { return emit(direct_sum(load(o.file), load(o.file2))); }; });

  auto* fp_cmd = app.add_subcommand("freeprod", "Free product M □ N");
  pair_args(fp_cmd);
  fp_cmd->callback([&] { action = [&] { return emit(free_product(load(o.file), load(o.file2))); }; });

  auto* trunc_cmd = app.add_subcommand("truncate", "Truncation");
  file_arg(trunc_cmd);
  trunc_cmd->callback([&] { action = [&] { return emit(truncate(load(o.file))); }; });

  auto* lift_cmd = app.add_subcommand("lift", "Higgs lift");
  file_arg(lift_cmd);
  lift_cmd->callback([&] { action = [&] { return emit(higgs_lift(load(o.file))); }; });

  auto* tutte_cmd = app.add_subcommand(
      "tutte", "Tutte polynomial of M, or of M □ N with --method convolution");
  tutte_cmd->add_option("m", o.file, "Matroid document")->required()->check(CLI::ExistingFile);
  tutte_cmd->add_option("n", o.file2, "Second factor for the convolution")
      ->check(CLI::ExistingFile);
  tutte_cmd->add_option("--method", o.method, "brute or convolution")
      ->check(CLI::IsMember({"brute", "convolution"}));
  tutte_cmd->add_flag("--whitney", o.whitney, "Print the rank generating function instead");
  tutte_cmd->callback([&] { action = [&] { return run_tutte(o); }; });

  auto* width_cmd = app.add_subcommand("width", "Cyclic width");
  file_arg(width_cmd);
  width_cmd->callback([&] {
    action = [&] {
      std::cout << cyclic_width(load(o.file)) << "\n";
      return kOk;
    };
  });

  auto* nested_cmd = app.add_subcommand("nested", "Nested test and i/f sequence");
  file_arg(nested_cmd);
  nested_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      if (!is_chain(m.family().sets())) {
        std::cout << "not nested: cyclic width " << cyclic_width(m) << "\n";
        return kFalse;
      }
      std::cout << "nested " << nested_sequence_of(m).str() << "\n";
      return kOk;
    };
  });

  auto* has_minor_cmd = app.add_subcommand("minor-test", "Does M have a minor isomorphic to N");
  pair_args(has_minor_cmd);
  has_minor_cmd->add_option("--max-ground", o.max_ground, "Search limit on |E(M)|");
  has_minor_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      const auto found = find_minor(m, load(o.file2), {o.max_ground});
      if (!found) {
        std::cout << "no minor\n";
        return kFalse;
      }
      std::cout << "minor: " << spec_line(m.ground(), *found) << "\n";
      return kOk;
    };
  });

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test");
  pair_args(iso_cmd);
  iso_cmd->add_option("--max-ground", o.max_ground, "Search limit for the generic path");
  iso_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      const Matroid n = load(o.file2);
      IsoOptions options;
      options.max_ground = o.max_ground;
      const auto map = isomorphism(m, n, options);
      if (!map) {
        std::cout << "not isomorphic\n";
        return kFalse;
      }
      std::cout << "isomorphic\n";
      for (int x = 0; x < m.ground_size(); ++x) {
        std::cout << m.ground().label(x) << " -> " << n.ground().label((*map)[x]) << "\n";
      }
      return kOk;
    };
  });

  auto* realize_cmd = app.add_subcommand("realize", "Transversal matroid with Z(M) ≅ L");
  realize_cmd->add_option("lattice", o.file, "Lattice document")
      ->required()
      ->check(CLI::ExistingFile);
  realize_cmd->add_flag("--sublattice", o.sublattice, "Realize L as a sublattice of subsets");
  realize_cmd->callback([&] {
    action = [&] {
      const auto variant =
          o.sublattice ? RealizationVariant::kSublattice : RealizationVariant::kPlain;
      return emit(realize_lattice(read_lattice_file(o.file), variant).matroid);
    };
  });

  auto* gen_cmd = app.add_subcommand("gen", "Generate a matroid document");
  gen_cmd->require_subcommand(1);
  auto* gen_uniform = gen_cmd->add_subcommand("uniform", "U_{r,n}");
  gen_uniform->add_option("--r", o.r)->required();
  gen_uniform->add_option("--n", o.n)->required();
  auto* gen_pn = gen_cmd->add_subcommand("pn", "Excluded minor P_n");
  gen_pn->add_option("--n", o.n)->required();
  auto* gen_gimenez = gen_cmd->add_subcommand("gimenez", "Gimenez family member");
  gen_gimenez->add_option("--n", o.n)->required();
  gen_gimenez->add_option("--sigma", o.sigma, "Permutation of 1..n, comma-separated");
  auto* gen_nested = gen_cmd->add_subcommand("nested", "Nested matroid from an i/f sequence");
  gen_nested->add_option("--seq", o.seq, "Steps over {i, f}")->required();
  auto* gen_catalog = gen_cmd->add_subcommand("catalog", "Named matroid");
  gen_catalog->add_option("--name", o.name)->required()->check(CLI::IsMember(catalog_names()));
  auto* gen_random = gen_cmd->add_subcommand("random", "Seeded random matroid");
  gen_random->add_option("--seed", o.seed, "Generator seed");
  gen_random->add_option("--n", o.n, "Largest ground set size (default 10)");
  gen_random->add_flag("--width2", o.width2, "Cyclic width exactly 2");
  for (auto* sub : gen_cmd->get_subcommands({})) {
    sub->callback([&, sub] {
      action = [&, name = sub->get_name()] { return run_gen(name, o); };
    });
  }

  auto* ingleton_cmd = app.add_subcommand("ingleton", "Ingleton test over antichains");
  file_arg(ingleton_cmd);
  ingleton_cmd->add_option("--cap", o.cap, "Largest number of cyclic flats");
  ingleton_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      const IngletonResult r = ingleton_transversal(m, o.cap);
      if (r.ok) {
        std::cout << "pass: " << r.checked << " antichains checked\n";
        return kOk;
      }
      std::cout << "fail:";
      for (int i : r.antichain) std::cout << " " << emit_set(m.ground(), m.flat(i).set);
      std::cout << "\nlhs " << r.sides.lhs << " rhs " << r.sides.rhs << "\n";
      return kFalse;
    };
  });

  auto* bt_cmd = app.add_subcommand("bitransversal", "Ingleton test on M and its dual");
  file_arg(bt_cmd);
  bt_cmd->add_option("--cap", o.cap, "Largest number of cyclic flats");
  bt_cmd->callback([&] {
    action = [&] {
      const BitransversalResult r = bitransversal_cert(load(o.file), o.cap);
      std::cout << "transversal " << (r.primal.ok ? "pass" : "fail") << "\ncotransversal "
                << (r.dual.ok ? "pass" : "fail") << "\n";
      return r.ok() ? kOk : kFalse;
    };
  });

  auto* chain_cmd =
      app.add_subcommand("chain-minor", "U_{k,k+2} minor of a nested matroid with a long chain");
  file_arg(chain_cmd);
  chain_cmd->add_option("--k", o.k)->required();
  chain_cmd->callback([&] {
    action = [&] {
      const Matroid m = load(o.file);
      const ChainMinor c = uniform_minor_from_chain(m, o.k);
      std::cout << "proof: " << spec_line(m.ground(), c.proof_spec) << "\n";
      std::cout << "uniform: " << spec_line(m.ground(), c.trimmed_spec) << "\n";
      std::cout << emit_matroid(minor(m, c.trimmed_spec));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  }
}
