#include "vtwin/homs.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vtwin::homs {

std::string GroupTag::str() const {
  return (family == GroupFamily::Sym ? "S" : "VT") + std::to_string(degree);
}

GroupTag GroupTag::parse(const std::string& text) {
  auto degree = [&](std::size_t from) {
    for (std::size_t k = from; k < text.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(text[k])))
        throw parse_error("bad group tag '" + text + "' (expected S<n> or VT<n>)");
    int d = std::stoi(text.substr(from));
    if (d < 2) throw parse_error("group tag degree must be at least 2 in '" + text + "'");
    return d;
  };
  if (text.size() >= 3 && text[0] == 'V' && text[1] == 'T') return {GroupFamily::VTwin, degree(2)};
  if (text.size() >= 2 && text[0] == 'S') return {GroupFamily::Sym, degree(1)};
  throw parse_error("bad group tag '" + text + "' (expected S<n> or VT<n>)");
}

int GroupTag::generator_count() const {
  return family == GroupFamily::Sym ? degree - 1 : 2 * (degree - 1);
}

namespace {

struct Relator {
  std::string name;
  std::vector<int> gens;  // 0-based generator indices, all letters involutions
};

// tau_1..tau_{n-1}
std::vector<Relator> sym_relators(int n) {
  std::vector<Relator> out;
  for (int i = 1; i <= n - 1; ++i)
    out.push_back({"t" + std::to_string(i) + "^2", {i - 1, i - 1}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({"(t" + std::to_string(i) + " t" + std::to_string(j) + ")^2", {i - 1, j - 1, i - 1, j - 1}});
  for (int i = 1; i <= n - 2; ++i)
    out.push_back({"(t" + std::to_string(i) + " t" + std::to_string(i + 1) + ")^3",
                   {i - 1, i, i - 1, i, i - 1, i}});
  return out;
}

// s_1..s_{n-1}, rho_1..rho_{n-1}
std::vector<Relator> vtn_relators(int n) {
  auto s = [&](int i) { return i - 1; };
  auto r = [&](int i) { return (n - 1) + i - 1; };
  std::vector<Relator> out;
  for (int i = 1; i <= n - 1; ++i) out.push_back({"s" + std::to_string(i) + "^2", {s(i), s(i)}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({"(s" + std::to_string(i) + " s" + std::to_string(j) + ")^2", {s(i), s(j), s(i), s(j)}});
  for (int i = 1; i <= n - 1; ++i) out.push_back({"r" + std::to_string(i) + "^2", {r(i), r(i)}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({"(r" + std::to_string(i) + " r" + std::to_string(j) + ")^2", {r(i), r(j), r(i), r(j)}});
  for (int i = 1; i <= n - 2; ++i)
    out.push_back({"(r" + std::to_string(i) + " r" + std::to_string(i + 1) + ")^3",
                   {r(i), r(i + 1), r(i), r(i + 1), r(i), r(i + 1)}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        out.push_back({"(r" + std::to_string(i) + " s" + std::to_string(j) + ")^2", {r(i), s(j), r(i), s(j)}});
  for (int i = 1; i <= n - 2; ++i)
    out.push_back({"r" + std::to_string(i) + " r" + std::to_string(i + 1) + " s" + std::to_string(i) +
                       " = s" + std::to_string(i + 1) + " r" + std::to_string(i) + " r" + std::to_string(i + 1),
                   {r(i), r(i + 1), s(i), r(i + 1), r(i), s(i + 1)}});
  return out;
}

std::vector<Relator> source_relators(const GroupTag& tag) {
  return tag.family == GroupFamily::Sym ? sym_relators(tag.degree) : vtn_relators(tag.degree);
}

std::vector<int> vword_to_genseq(const GroupTag& tag, const VWord& w) {
  if (tag.family != GroupFamily::VTwin || w.n != tag.degree)
    throw std::invalid_argument("word does not match the source group");
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (const GeneratorLetter& g : w.letters)
    out.push_back(g.kind == LetterKind::S ? g.index - 1 : (tag.degree - 1) + g.index - 1);
  return out;
}

TargetValue eval_genseq(const GenImageMap& m, const std::vector<int>& seq) {
  if (m.target.family == GroupFamily::Sym) {
    Permutation p = Permutation::identity(m.target.degree);
    for (int g : seq) p = p.compose(m.perm_images.at(g));
    return p;
  }
  VtnContext ctx(m.target.degree);
  VWord w;
  w.n = ctx.n;
  for (int g : seq) {
    const VWord& img = m.word_images.at(g);
    w.letters.insert(w.letters.end(), img.letters.begin(), img.letters.end());
  }
  return decompose(ctx, w);
}

bool value_is_identity(const GroupTag& tag, const TargetValue& v) {
  if (tag.family == GroupFamily::Sym) return std::get<Permutation>(v).is_identity();
  return std::get<SemidirectElement>(v).is_identity();
}

}  // namespace

bool target_equal(const GroupTag& tag, const TargetValue& a, const TargetValue& b) {
  if (tag.family == GroupFamily::Sym) return std::get<Permutation>(a) == std::get<Permutation>(b);
  return std::get<SemidirectElement>(a) == std::get<SemidirectElement>(b);
}

std::string target_str(const GroupTag& tag, const TargetValue& v) {
  if (tag.family == GroupFamily::Sym) return std::get<Permutation>(v).cycles();
  VtnContext ctx(tag.degree);
  return print_semidirect(ctx, std::get<SemidirectElement>(v));
}

HomCheck is_homomorphism(const GenImageMap& m) {
  const int count = m.source.generator_count();
  if (m.target.family == GroupFamily::Sym) {
    if (static_cast<int>(m.perm_images.size()) != count || !m.word_images.empty())
      throw std::invalid_argument("image count does not match the source generator count");
    for (const Permutation& p : m.perm_images)
      if (p.degree() != m.target.degree) throw std::invalid_argument("image degree mismatch");
  } else {
    if (static_cast<int>(m.word_images.size()) != count || !m.perm_images.empty())
      throw std::invalid_argument("image count does not match the source generator count");
    for (const VWord& w : m.word_images)
      if (w.n != m.target.degree) throw std::invalid_argument("image strand count mismatch");
  }
  for (const Relator& rel : source_relators(m.source))
    if (!value_is_identity(m.target, eval_genseq(m, rel.gens))) return {false, rel.name};
  return {true, ""};
}

TargetValue apply_hom(const GenImageMap& m, const VWord& w) {
  return eval_genseq(m, vword_to_genseq(m.source, w));
}

TargetValue apply_hom(const GenImageMap& m, const std::vector<int>& tau_word) {
  if (m.source.family != GroupFamily::Sym) throw std::invalid_argument("tau word needs a Sym source");
  std::vector<int> seq;
  seq.reserve(tau_word.size());
  for (int t : tau_word) {
    if (t < 1 || t > m.source.degree - 1) throw std::invalid_argument("tau index out of range");
    seq.push_back(t - 1);
  }
  return eval_genseq(m, seq);
}

namespace {

VWord rho_run(int n, int i, int count_pairs, bool lead_s) {
  // (s_i rho_i)^count rho_i when lead_s, else (rho_i s_i)^count rho_i
  VWord w;
  w.n = n;
  for (int t = 0; t < count_pairs; ++t) {
    if (lead_s) {
      w.letters.push_back({LetterKind::S, i});
      w.letters.push_back({LetterKind::Rho, i});
    } else {
      w.letters.push_back({LetterKind::Rho, i});
      w.letters.push_back({LetterKind::S, i});
    }
  }
  w.letters.push_back({LetterKind::Rho, i});
  return w;
}

const Permutation& nu_image(int i) {
  static const std::vector<Permutation> images = [] {
    std::vector<Permutation> v;
    v.push_back(Permutation::parse_cycles("(1,2)(3,4)(5,6)", 6));
    v.push_back(Permutation::parse_cycles("(2,3)(1,5)(4,6)", 6));
    v.push_back(Permutation::parse_cycles("(1,3)(2,4)(5,6)", 6));
    v.push_back(Permutation::parse_cycles("(1,2)(3,5)(4,6)", 6));
    v.push_back(Permutation::parse_cycles("(2,3)(1,4)(5,6)", 6));
    return v;
  }();
  return images.at(i - 1);
}

}  // namespace

GenImageMap named_hom(const std::string& which, int n) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
  GroupTag sym{GroupFamily::Sym, n};
  GroupTag vt{GroupFamily::VTwin, n};
  GenImageMap m;
  auto r_word = [&](int i) { return VWord{n, {{LetterKind::Rho, i}}}; };
  auto empty_word = [&] { return VWord{n, {}}; };

  if (which == "pi" || which == "theta") {
    m.source = vt;
    m.target = sym;
    for (int i = 1; i <= n - 1; ++i)
      m.perm_images.push_back(which == "pi" ? Permutation::transposition(n, i)
                                            : Permutation::identity(n));
    for (int i = 1; i <= n - 1; ++i) m.perm_images.push_back(Permutation::transposition(n, i));
    return m;
  }
  if (which == "lambda") {
    m.source = sym;
    m.target = vt;
    for (int i = 1; i <= n - 1; ++i) m.word_images.push_back(r_word(i));
    return m;
  }
  if (which == "zeta") {
    m.source = vt;
    m.target = vt;
    for (int i = 1; i <= n - 1; ++i)
      m.word_images.push_back(VWord{n, {{LetterKind::Rho, i}, {LetterKind::S, i}, {LetterKind::Rho, i}}});
    for (int i = 1; i <= n - 1; ++i) m.word_images.push_back(r_word(i));
    return m;
  }
  if (which.rfind("phi:", 0) == 0) {
    int mm = std::stoi(which.substr(4));
    m.source = vt;
    m.target = vt;
    for (int i = 1; i <= n - 1; ++i)
      m.word_images.push_back(rho_run(n, i, std::abs(mm), mm >= 0));
    for (int i = 1; i <= n - 1; ++i) m.word_images.push_back(r_word(i));
    return m;
  }
  if (which == "nu") {
    if (n != 6) throw std::invalid_argument("nu is only defined at n = 6");
    m.source = sym;
    m.target = sym;
    for (int i = 1; i <= 5; ++i) m.perm_images.push_back(nu_image(i));
    return m;
  }
  if (which == "lambda_pi") {
    m.source = vt;
    m.target = vt;
    for (int i = 1; i <= n - 1; ++i) m.word_images.push_back(r_word(i));
    for (int i = 1; i <= n - 1; ++i) m.word_images.push_back(r_word(i));
    return m;
  }
  if (which == "lambda_theta") {
    m.source = vt;
    m.target = vt;
    for (int i = 1; i <= n - 1; ++i) m.word_images.push_back(empty_word());
    for (int i = 1; i <= n - 1; ++i) m.word_images.push_back(r_word(i));
    return m;
  }
  if (which == "lambda_nu_pi" || which == "lambda_nu_theta") {
    if (n != 6) throw std::invalid_argument(which + " is only defined at n = 6");
    VtnContext ctx(6);
    m.source = vt;
    m.target = vt;
    for (int i = 1; i <= 5; ++i)
      m.word_images.push_back(which == "lambda_nu_pi" ? lambda_word(ctx, nu_image(i)) : empty_word());
    for (int i = 1; i <= 5; ++i) m.word_images.push_back(lambda_word(ctx, nu_image(i)));
    return m;
  }
  throw std::invalid_argument("unknown named homomorphism '" + which + "'");
}

GenImageMap compose_homs(const GenImageMap& outer, const GenImageMap& inner) {
  if (inner.target != outer.source) throw std::invalid_argument("composition tag mismatch");
  GenImageMap m;
  m.source = inner.source;
  m.target = outer.target;
  const int count = inner.source.generator_count();
  for (int g = 0; g < count; ++g) {
    std::vector<int> seq;
    if (inner.target.family == GroupFamily::Sym) {
      for (int t : inner.perm_images[g].transposition_word()) seq.push_back(t - 1);
    } else {
      seq = vword_to_genseq(inner.target, inner.word_images[g]);
    }
    TargetValue v = eval_genseq(outer, seq);
    if (m.target.family == GroupFamily::Sym) {
      m.perm_images.push_back(std::get<Permutation>(v));
    } else {
      VtnContext ctx(m.target.degree);
      m.word_images.push_back(recompose(ctx, std::get<SemidirectElement>(v)));
    }
  }
  return m;
}

GenImageMap conjugate_hom(const GenImageMap& m, const TargetValue& x) {
  GenImageMap out = m;
  if (m.target.family == GroupFamily::Sym) {
    const Permutation& p = std::get<Permutation>(x);
    for (Permutation& img : out.perm_images) img = p.compose(img).compose(p.inverse());
  } else {
    VtnContext ctx(m.target.degree);
    const SemidirectElement& e = std::get<SemidirectElement>(x);
    SemidirectElement ei = inverse(ctx, e);
    for (VWord& img : out.word_images) {
      SemidirectElement v = multiply(ctx, multiply(ctx, e, decompose(ctx, img)), ei);
      img = recompose(ctx, v);
    }
  }
  return out;
}

KWord phi_m_on_alpha(int m, const AlphaLetter& a, int n) {
  if (m % 2 == 0) throw std::invalid_argument("phi_m closed form needs odd m");
  if (a.i < 1 || a.j < 1 || a.i > n || a.j > n || a.i == a.j)
    throw std::invalid_argument("bad alpha letter");
  const int t = (m - 1) / 2;
  AlphaLetter fwd = a;
  AlphaLetter rev{a.j, a.i};
  KWord out;
  out.n = n;
  if (t >= 0) {
    out.letters.push_back(fwd);
    for (int c = 0; c < t; ++c) {
      out.letters.push_back(rev);
      out.letters.push_back(fwd);
    }
  } else {
    out.letters.push_back(rev);
    for (int c = 0; c < -t - 1; ++c) {
      out.letters.push_back(fwd);
      out.letters.push_back(rev);
    }
  }
  return out;
}

bool is_abelian_hom(const GenImageMap& m) {
  const int count = m.source.generator_count();
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) {
      TargetValue ab = eval_genseq(m, {a, b});
      TargetValue ba = eval_genseq(m, {b, a});
      if (!target_equal(m.target, ab, ba)) return false;
    }
  return true;
}

bool abelianization_surjective(const GenImageMap& m) {
  if (m.source.family != GroupFamily::VTwin || m.target.family != GroupFamily::VTwin)
    throw std::invalid_argument("abelianization check needs VTwin source and target");
  auto parity = [](const VWord& w) {
    int s = 0, r = 0;
    for (const GeneratorLetter& g : w.letters) (g.kind == LetterKind::S ? s : r) ^= 1;
    return std::pair<int, int>{s, r};
  };
  auto [a, b] = parity(m.word_images.at(0));                          // image of [s]
  auto [c, d] = parity(m.word_images.at(m.source.degree - 1));       // image of [rho]
  return ((a & d) ^ (b & c)) == 1;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> involution_candidates(int m) {
  std::vector<Permutation> out;
  for (const Permutation& p : all_permutations(m))
    if (p.compose(p).is_identity()) out.push_back(p);  // includes identity
  return out;
}

namespace {

struct BudgetCounter {
  std::atomic<long long> nodes{0};
  long long budget;
  explicit BudgetCounter(long long b) : budget(b) {}
  // returns false once the budget is exhausted
  bool tick() { return nodes.fetch_add(1, std::memory_order_relaxed) + 1 <= budget; }
};

// Search over tau images with commutation/braid pruning; gens assigned
// left to right.
void sym_backtrack(int n, int m, const std::vector<Permutation>& cands, int pos,
                   std::vector<Permutation>& images, std::vector<GenImageMap>& out,
                   BudgetCounter& counter, std::atomic<bool>& exhausted) {
  if (pos == n - 1) {
    GenImageMap hom;
    hom.source = {GroupFamily::Sym, n};
    hom.target = {GroupFamily::Sym, m};
    hom.perm_images = images;
    out.push_back(std::move(hom));
    return;
  }
  for (const Permutation& cand : cands) {
    if (exhausted) return;
    if (!counter.tick()) {
      exhausted = true;
      return;
    }
    bool ok = true;
    for (int prev = 0; prev < pos && ok; ++prev) {
      if (pos - prev >= 2) {
        ok = images[prev].compose(cand) == cand.compose(images[prev]);
      } else {
        Permutation braid = images[prev].compose(cand);
        ok = braid.compose(braid).compose(braid).is_identity();
      }
    }
    if (!ok) continue;
    images[pos] = cand;
    sym_backtrack(n, m, cands, pos + 1, images, out, counter, exhausted);
    if (exhausted) return;
  }
}

}  // namespace

std::vector<GenImageMap> enumerate_homs_sym_to_sym(int n, int m, const EnumOptions& opt) {
  if (n < 2 || m < 2) throw std::invalid_argument("degrees must be at least 2");
  const std::vector<Permutation> cands = involution_candidates(m);
  BudgetCounter counter(opt.budget);
  std::atomic<bool> exhausted{false};
  std::vector<std::vector<GenImageMap>> per_first(cands.size());
#ifdef _OPENMP
  const int team = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#endif
  for (long long c = 0; c < static_cast<long long>(cands.size()); ++c) {
    if (exhausted) continue;
    std::vector<Permutation> images(n - 1, Permutation::identity(m));
    if (!counter.tick()) {
      exhausted = true;
      continue;
    }
    images[0] = cands[c];
    if (n == 2) {
      GenImageMap hom;
      hom.source = {GroupFamily::Sym, n};
      hom.target = {GroupFamily::Sym, m};
      hom.perm_images = images;
      per_first[c].push_back(std::move(hom));
      continue;
    }
    sym_backtrack(n, m, cands, 1, images, per_first[c], counter, exhausted);
  }
  if (exhausted) throw budget_error("hom enumeration exceeded the node budget");
  std::vector<GenImageMap> out;
  for (auto& chunk : per_first)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Assignment order rho_1..rho_{n-1}, then s_1..s_{n-1}; the braid and
// mixed-commutation relations prune early and relation (7) pins each s
// image from the previous one.
struct VtnSearch {
  int n;
  int m;
  const std::vector<Permutation>& cands;
  std::vector<Permutation> rho, s;
  std::vector<GenImageMap>& out;
  BudgetCounter& counter;
  std::atomic<bool>& exhausted;

  bool rho_ok(int pos, const Permutation& cand) const {
    for (int prev = 0; prev < pos; ++prev) {
      if (pos - prev >= 2) {
        if (!(rho[prev].compose(cand) == cand.compose(rho[prev]))) return false;
      } else {
        Permutation braid = rho[prev].compose(cand);
        if (!braid.compose(braid).compose(braid).is_identity()) return false;
      }
    }
    return true;
  }

  bool s_ok(int pos, const Permutation& cand) const {
    // vs earlier s images: (s_i s_j)^2 for |i-j| >= 2
    for (int prev = 0; prev < pos; ++prev)
      if (pos - prev >= 2 && !(s[prev].compose(cand) == cand.compose(s[prev]))) return false;
    // vs rho images: (r_j s_i)^2 for |i-j| >= 2
    for (int j = 0; j < n - 1; ++j)
      if (std::abs(j - pos) >= 2 && !(rho[j].compose(cand) == cand.compose(rho[j]))) return false;
    // relation (7) with the previous s image
    if (pos >= 1) {
      Permutation lhs = rho[pos - 1].compose(rho[pos]).compose(s[pos - 1]);
      Permutation rhs = cand.compose(rho[pos - 1]).compose(rho[pos]);
      if (!(lhs == rhs)) return false;
    }
    return true;
  }

  void search_s(int pos) {
    if (pos == n - 1) {
      GenImageMap hom;
      hom.source = {GroupFamily::VTwin, n};
      hom.target = {GroupFamily::Sym, m};
      hom.perm_images = s;
      hom.perm_images.insert(hom.perm_images.end(), rho.begin(), rho.end());
      out.push_back(std::move(hom));
      return;
    }
    for (const Permutation& cand : cands) {
      if (exhausted) return;
      if (!counter.tick()) {
        exhausted = true;
        return;
      }
      if (!s_ok(pos, cand)) continue;
      s[pos] = cand;
      search_s(pos + 1);
      if (exhausted) return;
    }
  }

  void search_rho(int pos) {
    if (pos == n - 1) {
      search_s(0);
      return;
    }
    for (const Permutation& cand : cands) {
      if (exhausted) return;
      if (!counter.tick()) {
        exhausted = true;
        return;
      }
      if (!rho_ok(pos, cand)) continue;
      rho[pos] = cand;
      search_rho(pos + 1);
      if (exhausted) return;
    }
  }
};

}  // namespace

std::vector<GenImageMap> enumerate_homs_vtn_to_sym(int n, int m, const EnumOptions& opt) {
  if (n < 2 || m < 2) throw std::invalid_argument("degrees must be at least 2");
  const std::vector<Permutation> cands = involution_candidates(m);
  BudgetCounter counter(opt.budget);
  std::atomic<bool> exhausted{false};
  std::vector<std::vector<GenImageMap>> per_first(cands.size());
#ifdef _OPENMP
  const int team = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#endif
  for (long long c = 0; c < static_cast<long long>(cands.size()); ++c) {
    if (exhausted) continue;
    if (!counter.tick()) {
      exhausted = true;
      continue;
    }
    std::vector<Permutation> rho(n - 1, Permutation::identity(m));
    std::vector<Permutation> s(n - 1, Permutation::identity(m));
    rho[0] = cands[c];
    VtnSearch search{n, m, cands, std::move(rho), std::move(s), per_first[c], counter, exhausted};
    search.search_rho(1);
  }
  if (exhausted) throw budget_error("hom enumeration exceeded the node budget");
  std::vector<GenImageMap> out;
  for (auto& chunk : per_first)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(HomClass c) {
  switch (c) {
    case HomClass::Abelian: return "abelian";
    case HomClass::ConjId: return "conj_id";
    case HomClass::ConjPi: return "conj_pi";
    case HomClass::ConjTheta: return "conj_theta";
    case HomClass::ConjNu: return "conj_nu";
    case HomClass::ConjNuPi: return "conj_nu_pi";
    case HomClass::ConjNuTheta: return "conj_nu_theta";
    case HomClass::Other: return "other";
  }
  return "other";
}

HomClass classify_hom_to_sym(const GenImageMap& m) {
  if (m.target.family != GroupFamily::Sym) throw std::invalid_argument("classification needs a Sym target");
  if (is_abelian_hom(m)) return HomClass::Abelian;
  const int deg = m.target.degree;
  std::vector<std::pair<HomClass, GenImageMap>> refs;
  if (m.source.family == GroupFamily::Sym) {
    if (m.source.degree == deg) {
      GenImageMap id;
      id.source = id.target = {GroupFamily::Sym, deg};
      for (int i = 1; i <= deg - 1; ++i) id.perm_images.push_back(Permutation::transposition(deg, i));
      refs.emplace_back(HomClass::ConjId, std::move(id));
      if (deg == 6) refs.emplace_back(HomClass::ConjNu, named_hom("nu", 6));
    }
  } else {
    if (m.source.degree == deg) {
      refs.emplace_back(HomClass::ConjPi, named_hom("pi", deg));
      refs.emplace_back(HomClass::ConjTheta, named_hom("theta", deg));
      if (deg == 6) {
        refs.emplace_back(HomClass::ConjNuPi, compose_homs(named_hom("nu", 6), named_hom("pi", 6)));
        refs.emplace_back(HomClass::ConjNuTheta, compose_homs(named_hom("nu", 6), named_hom("theta", 6)));
      }
    }
  }
  for (const Permutation& x : all_permutations(deg)) {
    for (const auto& [label, ref] : refs)
      if (conjugate_hom(ref, TargetValue{x}) == m) return label;
  }
  return HomClass::Other;
}

std::vector<std::pair<std::string, bool>> nu_checks() {
  std::vector<std::pair<std::string, bool>> out;
  GenImageMap nu = named_hom("nu", 6);
  out.emplace_back("nu is a homomorphism", is_homomorphism(nu).ok);

  // images generate S_6, so the endomorphism of a finite group is bijective
  std::vector<Permutation> closure{Permutation::identity(6)};
  std::sort(closure.begin(), closure.end());
  for (;;) {
    std::vector<Permutation> fresh;
    for (const Permutation& g : closure)
      for (const Permutation& img : nu.perm_images) {
        Permutation h = g.compose(img);
        if (!std::binary_search(closure.begin(), closure.end(), h)) fresh.push_back(h);
      }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    if (fresh.empty()) break;
    std::vector<Permutation> merged;
    std::merge(closure.begin(), closure.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    closure = std::move(merged);
  }
  out.emplace_back("nu image generates S_6 (order 720)", closure.size() == 720);

  bool gens_order_two = true;
  for (const Permutation& img : nu.perm_images)
    gens_order_two = gens_order_two && img.compose(img).is_identity() && !img.is_identity();
  out.emplace_back("generator images have order two", gens_order_two);

  bool triple = true;
  for (const Permutation& img : nu.perm_images) {
    int moved = 0;
    for (int x = 1; x <= 6; ++x)
      if (img(x) != x) ++moved;
    triple = triple && moved == 6;
  }
  out.emplace_back("images are products of three disjoint transpositions", triple);

  std::vector<Permutation> squared;
  for (int i = 1; i <= 5; ++i) {
    std::vector<int> word;
    for (int t : nu_image(i).transposition_word()) word.push_back(t);
    squared.push_back(std::get<Permutation>(apply_hom(nu, word)));
  }
  bool order_two_map = true;
  for (int i = 1; i <= 5; ++i)
    order_two_map = order_two_map && squared[i - 1] == Permutation::transposition(6, i);
  out.emplace_back("nu o nu is the identity on generators", order_two_map);

  // the class of nu has order two in Out(S_6): nu o nu agrees with some
  // inner automorphism even when it is not the identity map
  bool square_inner = false;
  for (const Permutation& g : all_permutations(6)) {
    bool matches = true;
    for (int i = 1; i <= 5 && matches; ++i)
      matches = g.compose(Permutation::transposition(6, i)).compose(g.inverse()) == squared[i - 1];
    if (matches) {
      square_inner = true;
      break;
    }
  }
  out.emplace_back("nu o nu is an inner automorphism", square_inner);

  bool non_inner = true;
  for (const Permutation& g : all_permutations(6)) {
    bool matches = true;
    for (int i = 1; i <= 5 && matches; ++i)
      matches = g.compose(Permutation::transposition(6, i)).compose(g.inverse()) == nu_image(i);
    if (matches) {
      non_inner = false;
      break;
    }
  }
  out.emplace_back("nu differs from all 720 inner automorphisms", non_inner);
  return out;
}

std::string serialize_hom(const GenImageMap& m) {
  std::ostringstream out;
  out << "hom " << m.source.str() << " -> " << m.target.str() << "\n";
  const int count = m.source.generator_count();
  for (int g = 0; g < count; ++g) {
    out << "gen_" << (g + 1) << " := ";
    if (m.target.family == GroupFamily::Sym)
      out << m.perm_images[g].cycles();
    else
      out << print_word(m.word_images[g]);
    out << "\n";
  }
  return out.str();
}

GenImageMap parse_hom(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GenImageMap m;
  bool have_header = false;
  int next_gen = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (!have_header) {
      if (word != "hom") throw parse_error("hom file must start with a 'hom <src> -> <dst>' line");
      std::string src, arrow, dst;
      ls >> src >> arrow >> dst;
      if (arrow != "->") throw parse_error("hom header needs '->'");
      m.source = GroupTag::parse(src);
      m.target = GroupTag::parse(dst);
      have_header = true;
      continue;
    }
    std::string expect = "gen_" + std::to_string(next_gen);
    if (word != expect) throw parse_error("expected '" + expect + "' line, got '" + word + "'");
    std::string assign;
    ls >> assign;
    if (assign != ":=") throw parse_error("expected ':=' after " + expect);
    std::string rest;
    std::getline(ls, rest);
    std::size_t first = rest.find_first_not_of(" \t");
    rest = first == std::string::npos ? "" : rest.substr(first);
    if (m.target.family == GroupFamily::Sym)
      m.perm_images.push_back(Permutation::parse_cycles(rest, m.target.degree));
    else
      m.word_images.push_back(parse_vword(rest, m.target.degree));
    ++next_gen;
  }
  if (!have_header) throw parse_error("empty hom file");
  if (next_gen - 1 != m.source.generator_count())
    throw parse_error("hom file has " + std::to_string(next_gen - 1) + " generator lines, expected " +
                      std::to_string(m.source.generator_count()));
  return m;
}

std::string hom_digest(const GenImageMap& m) {
  std::string s = serialize_hom(m);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace vtwin::homs
