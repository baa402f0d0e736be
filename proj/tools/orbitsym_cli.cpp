#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "orbitsym/builtin.hpp"
#include "orbitsym/classifier.hpp"
#include "orbitsym/error.hpp"
#include "orbitsym/generic_symmetry.hpp"
#include "orbitsym/io.hpp"
#include "orbitsym/orbit_oracle.hpp"
#include "orbitsym/structure.hpp"

using namespace orbitsym;

namespace {

struct Options {
  std::string group;
  std::string character;
  std::string rep;
  std::string mode = "affine";
  int trials = 3;
  std::uint64_t seed = 1;
  long bound = 10;
  std::uint64_t budget = 50'000'000;
  std::size_t max_points = 5040;
  int retries = 5;
  std::uint64_t samples = 2000;
  std::string out;
  std::string format = "json";
  int max_order = 64;
};

GroupPtr load_group(const Options &o) {
  if (o.group.empty()) fail(ErrorCode::BadParameter, "--group is required");
  return std::make_shared<const FiniteGroup>(builtin_group(o.group));
}

Json header(const std::string &command, const FiniteGroup &g) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["group"] = group_spec_of(g);
  return j;
}

RationalRepresentation load_rep(const Options &o, const CharacterTable &t) {
  if (o.rep.empty() || o.rep == "regular") return regular_representation(t.classes);
  if (o.rep.rfind("ideal:", 0) == 0) return ideal_component_rep(t, parse_character(t, o.rep.substr(6)));
  return representation_from_json(t, read_json_file(o.rep));
}

SearchOptions search_options(const Options &o) {
  SearchOptions s;
  s.node_budget = o.budget;
  return s;
}

Json matrix_json(const RationalMatrix &m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

Json vector_json(const RationalVector &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(x.str());
  return a;
}

Json run_group(const Options &o) {
  if (o.group.empty()) {
    Json j{{"schema", kSchema}, {"command", "group"}};
    j["catalog"] = catalog(o.max_order);
    return j;
  }
  GroupPtr g = load_group(o);
  StructureSummary s = structure_predicates(*g);
  ClassDataPtr cd = conjugacy_classes(g);
  Json j = header("group", *g);
  j["order"] = g->order();
  j["exponent"] = g->exponent();
  j["abelian"] = s.is_abelian;
  j["elementary_abelian"] = s.is_elementary_abelian;
  j["center_order"] = s.center.order();
  j["commutator_order"] = s.commutator_subgroup.order();
  j["class_sizes"] = cd->sizes;
  j["generalized_dicyclic"] = is_generalized_dicyclic(*g).has_value();
  j["generators"] = generating_set(*g);
  return j;
}

Json run_chartable(const Options &o) { return table_to_json(*character_table(load_group(o))); }

Json run_gensym(const Options &o) {
  TablePtr t = character_table(load_group(o));
  if (o.character.empty()) fail(ErrorCode::BadParameter, "--char is required");
  Character chi = parse_character(*t, o.character);
  IdealPartDecomposition d = ideal_part(*t, chi);
  SymmetryOptions so;
  so.search = search_options(o);
  GenericSymmetryResult r = sym_group_of_character(*t, chi, so);
  Json j = header("gensym", *t->group);
  j["character"] = character_to_json(chi);
  j["multiplicities"] = d.multiplicities;
  j["ideal_part"] = character_to_json(d.chi_I);
  j["residual_kernel"] = d.N.elements();
  j["order"] = r.group.order().get_str();
  j["group_order"] = t->group->order();
  j["generically_closed"] = r.is_generically_closed;
  j["closed_form"] = r.closed_form;
  j["symmetries"] = perm_group_to_json(r.group);
  j["search_nodes"] = r.stats.nodes;
  return j;
}

Json run_classify(const Options &o) {
  GroupPtr g = load_group(o);
  if (o.mode == "euclidean") return verdict_to_json(*g, classify_euclidean(*g));
  if (o.mode == "affine") return verdict_to_json(*g, classify_affine(*g));
  if (o.mode == "rational") return verdict_to_json(*g, classify_rational(*g));
  fail(ErrorCode::BadParameter, "--mode must be euclidean, affine or rational");
}

Json run_oracle(const Options &o) {
  TablePtr t = character_table(load_group(o));
  RationalRepresentation rep = load_rep(o, *t);
  OrbitData orb = sample_generic_point(rep, o.seed, o.bound);
  LinearSymmetryGroup l = linear_symmetry_group(orb, search_options(o));
  ClosureOptions co;
  co.seed = o.seed;
  co.bound = o.bound;
  co.max_points = o.max_points;
  co.search = search_options(o);
  ClosureReport c = closure_iterate(orb, co);
  Json j = header("oracle", *t->group);
  j["representation"] = representation_to_json(rep);
  j["point"] = vector_json(orb.base_point);
  j["orbit_size"] = orb.points.size();
  j["stabilizer_order"] = orb.stabilizer.order();
  j["oracle_order"] = l.order.get_str();
  Json mats = Json::array();
  for (const auto &m : l.matrices) mats.push_back(matrix_json(m));
  j["generator_matrices"] = mats;
  Json chain = Json::array();
  for (const auto &x : c.chain) chain.push_back(x.get_str());
  j["closure_chain"] = chain;
  j["closure_stabilized"] = c.stabilized;
  j["closure_budget_exceeded"] = c.budget_exceeded;
  return j;
}

Json run_verify(const Options &o) {
  TablePtr t = character_table(load_group(o));
  RationalRepresentation rep = load_rep(o, *t);
  Character chi = o.character.empty() ? rep.character : parse_character(*t, o.character);
  OracleOptions oo;
  oo.trials = o.trials;
  oo.seed = o.seed;
  oo.bound = o.bound;
  oo.retries = o.retries;
  oo.search = search_options(o);
  OracleReport r = verify_theory_vs_oracle(*t, rep, chi, oo);
  Json j = header("verify", *t->group);
  j["character"] = character_to_json(chi);
  Json trials = Json::array();
  for (const auto &tr : r.trials)
    trials.push_back(Json{{"point", vector_json(tr.point)},
                          {"attempts", tr.attempts},
                          {"theory_order", tr.theory_order.get_str()},
                          {"oracle_order", tr.oracle_order.get_str()},
                          {"stabilizer_order", tr.stabilizer_order},
                          {"groups_equal", tr.groups_equal},
                          {"order_formula", tr.order_formula},
                          {"traces_agree", tr.traces_agree}});
  j["trials"] = trials;
  j["passed"] = r.passed;
  return j;
}

Json run_explore(const Options &o) {
  TablePtr t = character_table(load_group(o));
  ExploreOptions eo;
  eo.search = search_options(o);
  eo.seed = o.seed;
  eo.samples = o.samples;
  AbelianExploration e = explore_abelian_closure(*t, eo);
  Json j = header("explore", *t->group);
  j["closed"] = e.closed ? character_to_json(*e.closed) : Json(nullptr);
  j["candidates"] = e.candidates;
  j["examined"] = e.examined;
  j["searched"] = e.searched;
  j["exhaustive"] = e.exhaustive;
  return j;
}

void render_text(const Json &j, std::ostream &os) {
  for (const auto &[k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int emit(const Json &j, const Options &o) {
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      std::cerr << "cannot write '" << o.out << "'\n";
      return 2;
    }
  }
  std::ostream &os = o.out.empty() ? std::cout : file;
  if (o.format == "text") render_text(j, os);
  else os << j.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generic symmetry groups of orbits of finite linear groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--group", o.group, "group spec, e.g. product(quaternion8,cyclic(4))");
    sub->add_option("--out", o.out, "write the report to this file");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", o.budget, "search node budget");
  };
  auto *group = app.add_subcommand("group", "group structure, or the catalog when --group is omitted");
  common(group);
  group->add_option("--max-order", o.max_order, "largest catalog order to list");
  auto *chartable = app.add_subcommand("chartable", "exact character table");
  common(chartable);
  auto *gensym = app.add_subcommand("gensym", "generic symmetry group of a character");
  common(gensym);
  gensym->add_option("--char", o.character, "character expression")->required();
  auto *classify = app.add_subcommand("classify", "realizability classification");
  common(classify);
  classify->add_option("--mode", o.mode, "euclidean, affine or rational")
      ->check(CLI::IsMember({"euclidean", "affine", "rational"}));
  auto *oracle = app.add_subcommand("oracle", "brute-force linear symmetries of a generic orbit");
  common(oracle);
  auto *verify = app.add_subcommand("verify", "theory against oracle at sampled generic points");
  common(verify);
  verify->add_option("--char", o.character, "character (defaults to that of the representation)");
  verify->add_option("--trials", o.trials, "number of sampled points");
  verify->add_option("--retries", o.retries, "resamples per point before reporting a mismatch");
  for (auto *sub : {oracle, verify}) {
    sub->add_option("--rep", o.rep, "regular, ideal:<character>, or a representation JSON file");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--bound", o.bound, "coordinates are drawn from [-bound, bound]");
  }
  oracle->add_option("--max-points", o.max_points, "orbit size budget for the closure iteration");
  auto *explore = app.add_subcommand("explore", "search for a generically closed sum of linear characters");
  common(explore);
  explore->add_option("--seed", o.seed, "random seed");
  explore->add_option("--samples", o.samples, "random subsets tried for larger groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Json report;
    if (*group) report = run_group(o);
    else if (*chartable) report = run_chartable(o);
    else if (*gensym) report = run_gensym(o);
    else if (*classify) report = run_classify(o);
    else if (*oracle) report = run_oracle(o);
    else if (*verify) report = run_verify(o);
    else report = run_explore(o);
    return emit(report, o);
  } catch (const Error &e) {
    emit(error_to_json(e), o);
    std::cerr << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  }
}
