// vtwin: exact computation in virtual twin groups from the command line.
//
// Exit codes: 0 success / property holds, 1 property failure or "false",
// 2 usage or parse error, 3 search budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "vtwin/homs.hpp"
#include "vtwin/racg.hpp"
#include "vtwin/suites.hpp"
#include "vtwin/vtn.hpp"

using namespace vtwin;

namespace {

int run_reduce(int n, const std::string& group, const std::string& word) {
  racg::RacgPresentation p = group == "t" ? racg::RacgPresentation::twin(n) : racg::RacgPresentation::kt(n);
  racg::Word w = racg::parse_word(p, word);
  std::cout << racg::print_word(p, racg::normalize(p, w)) << "\n";
  return 0;
}

int run_equal(int n, const std::string& lhs, const std::string& rhs) {
  VtnContext ctx(n);
  bool eq = equal_vtn(ctx, parse_mixed_word(ctx, lhs), parse_mixed_word(ctx, rhs));
  std::cout << (eq ? "true" : "false") << "\n";
  return eq ? 0 : 1;
}

int run_decompose(int n, const std::string& word) {
  VtnContext ctx(n);
  std::cout << print_semidirect(ctx, decompose(ctx, parse_mixed_word(ctx, word))) << "\n";
  return 0;
}

int run_recompose(int n, const std::string& text) {
  VtnContext ctx(n);
  std::cout << print_word(recompose(ctx, parse_semidirect(ctx, text))) << "\n";
  return 0;
}

std::vector<int> parse_tau_word(const std::string& text, int n) {
  std::vector<int> out;
  std::size_t k = 0;
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    std::string tok = text.substr(start, k - start);
    if (tok == "e") continue;
    if (tok[0] != 't') throw parse_error("expected t<i> token in a symmetric-group word, got '" + tok + "'", start + 1);
    int idx = std::stoi(tok.substr(1));
    if (idx < 1 || idx > n - 1)
      throw parse_error("index out of range at position " + std::to_string(start + 1) + ": token '" + tok + "'", start + 1);
    out.push_back(idx);
  }
  return out;
}

int run_hom(int n, const std::string& name, const std::string& file, bool check, const std::string& word) {
  homs::GenImageMap m;
  if (!name.empty()) {
    m = homs::named_hom(name, n);
  } else {
    std::ifstream in(file);
    if (!in) throw parse_error("cannot open hom file '" + file + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    m = homs::parse_hom(text);
  }
  if (check) {
    homs::HomCheck hc = homs::is_homomorphism(m);
    if (hc.ok) {
      std::cout << "true\n";
      return 0;
    }
    std::cout << "false: relation " << hc.failing_relation << " fails\n";
    return 1;
  }
  if (!word.empty()) {
    homs::TargetValue v;
    if (m.source.family == homs::GroupFamily::VTwin) {
      VtnContext src(m.source.degree);
      v = homs::apply_hom(m, parse_mixed_word(src, word));
    } else {
      v = homs::apply_hom(m, parse_tau_word(word, m.source.degree));
    }
    std::cout << homs::target_str(m.target, v) << "\n";
    return 0;
  }
  std::cout << homs::serialize_hom(m);
  return 0;
}

int run_enum_homs(const std::string& from, const std::string& to, bool classify, long long budget, int jobs) {
  homs::GroupTag src = homs::GroupTag::parse(from);
  homs::GroupTag dst = homs::GroupTag::parse(to);
  if (dst.family != homs::GroupFamily::Sym)
    throw std::invalid_argument("enumeration into VT targets is not supported (infinite target)");
  homs::EnumOptions opt;
  opt.budget = budget;
  opt.jobs = jobs;
  std::vector<homs::GenImageMap> all =
      src.family == homs::GroupFamily::Sym
          ? homs::enumerate_homs_sym_to_sym(src.degree, dst.degree, opt)
          : homs::enumerate_homs_vtn_to_sym(src.degree, dst.degree, opt);
  for (const homs::GenImageMap& h : all) {
    if (classify)
      std::cout << homs::hom_digest(h) << " " << homs::to_string(homs::classify_hom_to_sym(h)) << "\n";
    else
      std::cout << homs::serialize_hom(h) << "\n";
  }
  std::cerr << all.size() << " homomorphisms\n";
  return 0;
}

int run_ball(int n, int radius, const std::string& group, const std::string& letters, int jobs) {
  if (group == "vt") {
    VtnContext ctx(n);
    for (const SemidirectElement& e : ball_vtn(ctx, radius, jobs))
      std::cout << print_semidirect(ctx, e) << "\n";
    return 0;
  }
  racg::RacgPresentation p = group == "t" ? racg::RacgPresentation::twin(n) : racg::RacgPresentation::kt(n);
  racg::LetterSet X;
  if (letters.empty()) {
    X = racg::full_letter_set(p);
  } else {
    for (int id : racg::parse_word(p, letters)) X.push_back(id);
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
  }
  std::vector<racg::Word> elems = racg::ball(p, X, radius, jobs);
  std::sort(elems.begin(), elems.end());  // lexicographic on letter sequences
  for (const racg::Word& w : elems) std::cout << racg::print_word(p, w) << "\n";
  return 0;
}

int run_verify(const std::string& suite, int n, int radius, bool radius_given, int m,
               std::vector<int> phi_list, int samples, std::uint64_t seed, long long budget,
               int jobs, const std::string& out) {
  if (suite == "kt6_h" && !radius_given) radius = 3;  // default ball radius for KT_6
  suites::SuiteReport rep;
  if (suite == "presentation") {
    rep = suites::suite_presentation(n, radius, jobs);
  } else if (suite == "fixed_points") {
    rep = suites::suite_fixed_points(n, radius, jobs);
  } else if (suite == "centralizer") {
    rep = suites::suite_centralizer(n, radius, jobs);
  } else if (suite == "kt6_h") {
    rep = suites::suite_kt6_H(radius, jobs);
  } else if (suite == "nu") {
    rep = suites::suite_nu();
  } else if (suite == "phi_m") {
    if (phi_list.empty()) phi_list = {-3, -1, 1, 2, 3, 5};
    rep = suites::suite_phi_m(n, phi_list, radius, jobs);
  } else if (suite == "hom_classification") {
    rep = suites::suite_hom_classification(n, m > 0 ? m : n, budget, jobs);
  } else if (suite == "serre") {
    rep = suites::suite_serre(n, radius, jobs);
  } else if (suite == "condition_c") {
    rep = suites::suite_condition_c(n, radius, samples, seed, jobs);
  } else if (suite == "twisted") {
    rep = suites::suite_twisted(n, radius, samples, seed, budget, jobs);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  for (const suites::CheckResult& c : rep.checks) {
    if (c.pass)
      std::cout << "PASS " << c.name << "\n";
    else
      std::cout << "FAIL " << c.name << " -- " << c.counterexample << "\n";
  }
  std::string path = out.empty() ? rep.default_filename() : out;
  std::ofstream of(path);
  of << rep.to_json().dump(2) << "\n";
  std::cout << (rep.passed() ? "pass" : "fail") << " (" << path << ")\n";
  if (rep.passed()) return 0;
  if (rep.params.contains("budget_exhausted") && rep.params["budget_exhausted"].get<bool>()) return 3;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in virtual twin groups VT_n"};
  app.require_subcommand(1);

  int n = 3, radius = 4, m = 0, jobs = 0, samples = 10000;
  long long budget = 100'000'000;
  std::uint64_t seed = 12345;
  std::string group = "kt", word, lhs, rhs, text, name, file, from, to, letters, out, suite;
  std::vector<int> phi_list;
  bool classify = false, check = false;

  auto* reduce = app.add_subcommand("reduce", "canonical normal form of a Coxeter word");
  reduce->add_option("-n", n, "strand count")->required();
  reduce->add_option("--group", group, "kt or t")->check(CLI::IsMember({"kt", "t"}));
  reduce->add_option("word", word, "word in the letter grammar")->required();

  auto* equal = app.add_subcommand("equal", "word problem in VT_n");
  equal->add_option("-n", n, "strand count")->required();
  equal->add_option("lhs", lhs)->required();
  equal->add_option("rhs", rhs)->required();

  auto* dec = app.add_subcommand("decompose", "semidirect coordinates of a word");
  dec->add_option("-n", n, "strand count")->required();
  dec->add_option("word", word)->required();

  auto* rec = app.add_subcommand("recompose", "a word with the given semidirect coordinates");
  rec->add_option("-n", n, "strand count")->required();
  rec->add_option("element", text, "\"k = <kword> ; sigma = [images]\"")->required();

  auto* hom = app.add_subcommand("hom", "named or file-defined homomorphisms");
  hom->add_option("-n", n, "strand count");
  auto* name_opt = hom->add_option("--name", name,
                                   "pi|theta|lambda|zeta|phi:<m>|nu|lambda_pi|lambda_theta|"
                                   "lambda_nu_pi|lambda_nu_theta");
  auto* file_opt = hom->add_option("--file", file, "hom serialization file");
  name_opt->excludes(file_opt);
  hom->add_flag("--check", check, "verify the defining relations");
  hom->add_option("word", word, "optional source word to apply the map to");

  auto* enumh = app.add_subcommand("enum-homs", "enumerate homomorphisms into a symmetric group");
  enumh->add_option("--from", from, "source group, e.g. S5 or VT5")->required();
  enumh->add_option("--to", to, "target group, e.g. S5")->required();
  enumh->add_flag("--classify", classify, "print digest and conjugacy class per hom");
  enumh->add_option("--budget", budget, "backtracking node budget");
  enumh->add_option("--jobs", jobs, "parallel workers (never changes output)");

  auto* ball = app.add_subcommand("ball", "enumerate elements up to a word-length radius");
  ball->add_option("-n", n, "strand count")->required();
  ball->add_option("--radius", radius)->required();
  ball->add_option("--group", group, "kt, t or vt")->check(CLI::IsMember({"kt", "t", "vt"}));
  ball->add_option("--letters", letters, "parabolic letter subset, e.g. \"a1,2 a2,1\"");
  ball->add_option("--jobs", jobs);

  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("--suite", suite,
                     "presentation|fixed_points|centralizer|kt6_h|nu|phi_m|hom_classification|"
                     "serre|condition_c|twisted")
      ->required();
  verify->add_option("-n", n, "strand count");
  verify->add_option("--radius", radius, "ball radius");
  verify->add_option("--m", m, "target degree for hom_classification");
  verify->add_option("--phi", phi_list, "phi_m exponent list");
  verify->add_option("--samples", samples, "random sample count where applicable");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--budget", budget, "search budget");
  verify->add_option("--jobs", jobs, "parallel workers (never changes output)");
  verify->add_option("--out", out, "report file (default <suite>-<n>-<radius>.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (reduce->parsed()) return run_reduce(n, group, word);
    if (equal->parsed()) return run_equal(n, lhs, rhs);
    if (dec->parsed()) return run_decompose(n, word);
    if (rec->parsed()) return run_recompose(n, text);
    if (hom->parsed()) {
      if (name.empty() && file.empty()) throw std::invalid_argument("hom needs --name or --file");
      return run_hom(n, name, file, check, word);
    }
    if (enumh->parsed()) return run_enum_homs(from, to, classify, budget, jobs);
    if (ball->parsed()) return run_ball(n, radius, group, letters, jobs);
    if (verify->parsed())
      return run_verify(suite, n, radius, verify->count("--radius") > 0, m, phi_list, samples,
                        seed, budget, jobs, out);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
