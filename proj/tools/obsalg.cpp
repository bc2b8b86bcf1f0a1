/*
 * Copyright 2026 The obsalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// obsalg command-line front end.
//
// Exit codes: 0 success or all laws pass, 1 law violation or axiom failure,
// 2 usage, parse or algebra-mismatch error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <obsalg/obsalg.hpp>

namespace {

using obsalg::json;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

/// Raised for bad flag values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string path;
  std::string format = "json";

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw UsageError("cannot open output file " + path);
    out << text;
  }
};

std::string catalog_listing() {
  std::string s;
  for (const auto& l : obsalg::law_catalog)
    s += "  " + std::string(l.name) + "  " + std::string(l.statement) + "\n";
  return s;
}

std::vector<obsalg::LawId> parse_laws(const std::vector<std::string>& names) {
  std::vector<obsalg::LawId> ids;
  for (const auto& n : names) {
    if (n == "all")
      return obsalg::all_laws();
    auto id = obsalg::parse_law(n);
    if (!id)
      throw UsageError("unknown law '" + n + "'; catalog:\n" + catalog_listing());
    ids.push_back(*id);
  }
  if (ids.empty())
    throw UsageError("no laws selected; use --suite all or --law ID");
  return ids;
}

/// Element given on the command line: JSON ("[1,0]", "2", "\"a\"") or a bare name.
obsalg::Element parse_element(const obsalg::EffectAlgebra& e, const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    j = text;
  return obsalg::element_from_json(e, j, "--element");
}

/// Function for `obs compose`: id, negate, one-minus, square, scale:N,
/// affine:P,Q or table:t=v;t=v;...
obsalg::PointMap parse_function(const std::string& text) {
  namespace m = obsalg::maps;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (head == "id")
      return m::identity();
    if (head == "negate")
      return m::negate();
    if (head == "one-minus")
      return m::one_minus();
    if (head == "square")
      return m::square();
    if (head == "scale")
      return m::scale(std::stoll(arg));
    if (head == "affine") {
      auto comma = arg.find(',');
      if (comma == std::string::npos)
        throw UsageError("affine needs P,Q");
      return m::affine(obsalg::Rational::parse(arg.substr(0, comma)), obsalg::Rational::parse(arg.substr(comma + 1)));
    }
    if (head == "table") {
      obsalg::FiniteMap table;
      std::stringstream ss(arg);
      std::string item;
      while (std::getline(ss, item, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
          throw UsageError("table entries look like t=v");
        table.emplace(obsalg::Rational::parse(item.substr(0, eq)), obsalg::Rational::parse(item.substr(eq + 1)));
      }
      return m::from_table(std::move(table));
    }
  } catch (const std::invalid_argument& ex) {
    throw UsageError("bad --fn '" + text + "': " + ex.what());
  } catch (const std::out_of_range& ex) {
    throw UsageError("bad --fn '" + text + "': " + ex.what());
  }
  throw UsageError("unknown --fn '" + text + "' (id, negate, one-minus, square, scale:N, affine:P,Q, table:t=v;...)");
}

int cmd_alg_check(const std::string& path, const Output& out) {
  obsalg::AlgebraPtr e;
  try {
    e = obsalg::read_algebra(path);
  } catch (const obsalg::AxiomViolation& v) {
    if (v.axiom() == "structure")
      throw;
    json j{{"valid", false}, {"axiom", v.axiom()}, {"witness", v.witness()}, {"message", v.what()}};
    if (out.format == "table") {
      std::string w;
      for (const auto& s : v.witness())
        w += (w.empty() ? "" : ", ") + s;
      out.write("invalid effect algebra\naxiom: " + v.axiom() + "\nwitness: " + w + "\n" + v.what() + "\n");
    } else {
      out.write(obsalg::dump(j));
    }
    return exit_violation;
  }
  if (out.format == "table") {
    const auto& p = e->properties();
    std::string sharp;
    for (auto a : p.sharp_set)
      sharp += (sharp.empty() ? "" : " ") + e->name(a);
    std::ostringstream os;
    os << "valid effect algebra with " << e->size() << " elements\n"
       << "is_lattice       " << p.is_lattice << "\n"
       << "distributive     " << p.distributive << "\n"
       << "has_rdp          " << p.has_rdp << "\n"
       << "is_mv            " << p.is_mv << "\n"
       << "is_orthoalgebra  " << p.is_orthoalgebra << "\n"
       << "is_boolean       " << p.is_boolean << "\n"
       << "sharp_set        {" << sharp << "}\n";
    out.write(os.str());
  } else {
    out.write(obsalg::dump(
        json{{"valid", true}, {"algebra", obsalg::algebra_to_json(*e)}, {"classification", obsalg::properties_to_json(*e)}}));
  }
  return exit_ok;
}

void write_observable(const obsalg::Observable& x, const Output& out, bool forced) {
  json j = obsalg::observable_to_json(x);
  if (forced)
    j["meta"] = {{"forced", true},
                 {"note", "sum computed on an algebra without the distributive laws; laws of the sum not guaranteed"}};
  if (out.format == "table") {
    std::ostringstream os;
    for (const auto& a : x.atoms())
      os << a.point << "\t" << x.algebra()->name(a.mass) << "\n";
    if (forced)
      os << "# forced sum\n";
    out.write(os.str());
    return;
  }
  out.write(obsalg::dump(j));
}

struct ObsArgs {
  std::vector<std::string> inputs;
  std::string algebra;
  std::string element;
  std::string fn;
  bool force = false;
};

int cmd_obs(const std::string& op, const ObsArgs& a, const Output& out) {
  if (op == "question") {
    if (a.algebra.empty() || a.element.empty())
      throw UsageError("obs question needs --algebra and --element");
    auto e = obsalg::read_algebra(a.algebra);
    write_observable(obsalg::question(e, parse_element(*e, a.element)), out, false);
    return exit_ok;
  }
  std::size_t need = (op == "compose" || op == "negate") ? 1 : 2;
  if (a.inputs.size() != need)
    throw UsageError("obs " + op + " takes " + std::to_string(need) + " observable file(s)");
  std::vector<obsalg::Observable> xs;
  for (const auto& p : a.inputs)
    xs.push_back(obsalg::read_observable(p));
  if (need == 2)
    obsalg::require_same_algebra(xs[0], xs[1]);

  if (op == "sum") {
    obsalg::SumOptions opt{a.force};
    auto z = obsalg::obs_sum(xs[0], xs[1], opt);
    write_observable(z, out, a.force && !obsalg::sum_is_guaranteed(*xs[0].algebra()));
  } else if (op == "meet") {
    write_observable(obsalg::obs_meet(xs[0], xs[1]), out, false);
  } else if (op == "join") {
    write_observable(obsalg::obs_join(xs[0], xs[1]), out, false);
  } else if (op == "order") {
    out.write(std::string(obsalg::to_string(obsalg::olson_compare(xs[0], xs[1]))) + "\n");
  } else if (op == "negate") {
    write_observable(obsalg::negate(xs[0]), out, false);
  } else {
    if (a.fn.empty())
      throw UsageError("obs compose needs --fn");
    write_observable(obsalg::compose(xs[0], parse_function(a.fn)), out, false);
  }
  return exit_ok;
}

struct LawArgs {
  std::string algebra;
  std::vector<std::string> laws;
  std::string suite;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::int64_t grid_denom = 1;
  std::string grid_lo = "-2";
  std::string grid_hi = "2";
  std::size_t max_support = 3;
  std::size_t budget = 100000;
  bool exhaustive = false;
  bool force = false;
};

int cmd_laws(const std::string& op, const LawArgs& a, const Output& out) {
  auto e = obsalg::read_algebra(a.algebra);
  if (op == "run") {
    obsalg::LawSuiteConfig cfg;
    std::vector<std::string> names = a.laws;
    if (!a.suite.empty())
      names.push_back(a.suite);
    cfg.laws = parse_laws(names);
    cfg.sample_count = a.samples;
    cfg.seed = a.seed;
    try {
      cfg.grid = obsalg::GridSpec{a.grid_denom, obsalg::Rational::parse(a.grid_lo), obsalg::Rational::parse(a.grid_hi)};
    } catch (const std::invalid_argument& ex) {
      throw UsageError(std::string("bad grid bound: ") + ex.what());
    }
    cfg.max_support = a.max_support;
    cfg.exhaustive = a.exhaustive;
    cfg.force = a.force;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
    auto rep = obsalg::run_suite(e, cfg);
    out.write(out.format == "table" ? obsalg::report_to_table(rep) : obsalg::dump(obsalg::report_to_json(rep)));
    return rep.all_passed() ? exit_ok : exit_violation;
  }
  if (a.laws.size() != 1)
    throw UsageError("laws search takes exactly one --law; catalog:\n" + catalog_listing());
  auto law = parse_laws(a.laws).front();
  auto res = obsalg::search_counterexample(e, law, a.budget, {a.force, a.seed});
  json j = obsalg::search_to_json(res, *e);
  if (out.format == "table") {
    std::ostringstream os;
    os << std::string(obsalg::law_name(law)) << ": " << j["status"].get<std::string>() << " after " << res.examined
       << " of " << res.budget << " tuples\n";
    for (const auto& st : res.strata)
      os << "  stratum grid=" << st.grid.front() << ".." << st.grid.back() << " (" << st.grid.size()
         << " points) support<=" << st.max_support << " tuples=" << st.tuples
         << (st.complete ? " complete" : " partial") << "\n";
    os << "  random tuples=" << res.random_tuples << " seed=" << res.seed;
    if (res.random_tuples > 0)
      os << " grid=" << res.random_stratum.grid.front() << ".." << res.random_stratum.grid.back() << " ("
         << res.random_stratum.grid.size() << " points) support<=" << res.random_stratum.max_support;
    os << "\n";
    if (res.counterexample)
      os << "  witness: " << obsalg::counterexample_to_json(*res.counterexample).dump() << "\n";
    out.write(os.str());
  } else {
    out.write(obsalg::dump(j));
  }
  return res.counterexample ? exit_violation : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observables on finite effect algebras: sums, Olson order, law checking"};
  app.require_subcommand(1);
  Output out;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", out.path, "Output file (default: standard output)");
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* alg = app.add_subcommand("alg", "Effect algebra files")->require_subcommand(1);
  std::string alg_path;
  auto* alg_check = alg->add_subcommand("check", "Validate an algebra file and print its classification");
  alg_check->add_option("path", alg_path, "Algebra JSON file")->required();
  add_common(alg_check);

  auto* obs = app.add_subcommand("obs", "Operations on observables")->require_subcommand(1);
  ObsArgs oa;
  std::string obs_op;
  for (const char* op : {"question", "sum", "meet", "join", "order", "compose", "negate"}) {
    auto* sub = obs->add_subcommand(op);
    sub->add_option("inputs", oa.inputs, "Observable JSON files");
    add_common(sub);
    if (std::string(op) == "question") {
      sub->add_option("--algebra", oa.algebra, "Algebra JSON file");
      sub->add_option("--element", oa.element, "Element: coordinates like [1,0], an integer, or a name");
    }
    if (std::string(op) == "sum")
      sub->add_flag("--force", oa.force, "Allow the sum on algebras without the distributive laws");
    if (std::string(op) == "compose")
      sub->add_option("--fn", oa.fn, "id, negate, one-minus, square, scale:N, affine:P,Q, table:t=v;...");
    sub->callback([&obs_op, op] { obs_op = op; });
  }

  auto* laws = app.add_subcommand("laws", "Law suites and counterexample search")->require_subcommand(1);
  LawArgs la;
  std::string laws_op;
  for (const char* op : {"run", "search"}) {
    auto* sub = laws->add_subcommand(op);
    sub->add_option("--algebra", la.algebra, "Algebra JSON file")->required();
    sub->add_option("--law", la.laws, "Law id (repeatable)");
    sub->add_option("--seed", la.seed, "Random seed");
    sub->add_flag("--force", la.force, "Evaluate sum laws on algebras without the distributive laws");
    add_common(sub);
    if (std::string(op) == "run") {
      sub->add_option("--suite", la.suite, "'all' for the whole catalog");
      sub->add_option("--samples", la.samples, "Random tuples per law");
      sub->add_option("--grid-denom", la.grid_denom, "Largest denominator of support points");
      sub->add_option("--grid-lo", la.grid_lo, "Smallest support point");
      sub->add_option("--grid-hi", la.grid_hi, "Largest support point");
      sub->add_option("--max-support", la.max_support, "Largest support size");
      sub->add_flag("--exhaustive", la.exhaustive, "Enumerate every tuple instead of sampling");
    } else {
      sub->add_option("--budget", la.budget, "Maximum number of tuples examined");
    }
    sub->callback([&laws_op, op] { laws_op = op; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (alg_check->parsed())
      return cmd_alg_check(alg_path, out);
    if (obs->parsed())
      return cmd_obs(obs_op, oa, out);
    return cmd_laws(laws_op, la, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const obsalg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const obsalg::AxiomViolation& e) {
    std::cerr << "invalid algebra (" << e.axiom() << "): " << e.what() << "\n";
  } catch (const obsalg::AlgebraMismatch& e) {
    std::cerr << "algebra mismatch: " << e.what() << "\n";
  } catch (const obsalg::UnsupportedAlgebra& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
  } catch (const obsalg::ObservableError& e) {
    std::cerr << "invalid observable: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  }
  return exit_usage;
}
