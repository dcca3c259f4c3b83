#include "vtwin/vtn.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vtwin {

VtnContext::VtnContext(int strands)
    : n(strands), kt(racg::RacgPresentation::kt(strands)), twin(racg::RacgPresentation::twin(strands)) {}

SemidirectElement decompose(const VtnContext& ctx, const VWord& w) {
  if (w.n != ctx.n) throw std::invalid_argument("strand count mismatch");
  racg::Word acc;
  Permutation sigma = Permutation::identity(ctx.n);
  for (const GeneratorLetter& g : w.letters) {
    if (g.kind == LetterKind::Rho) {
      sigma = sigma.compose(Permutation::transposition(ctx.n, g.index));
    } else {
      acc.push_back(ctx.alpha_id(sigma(g.index), sigma(g.index + 1)));
    }
  }
  return {racg::normalize(ctx.kt, acc), sigma};
}

VWord alpha_word(int n, const AlphaLetter& a) {
  VWord w;
  w.n = n;
  int i = std::min(a.i, a.j);
  int j = std::max(a.i, a.j);
  for (int k = j - 1; k >= i + 1; --k) w.letters.push_back({LetterKind::Rho, k});
  if (a.i > a.j) w.letters.push_back({LetterKind::Rho, i});
  w.letters.push_back({LetterKind::S, i});
  if (a.i > a.j) w.letters.push_back({LetterKind::Rho, i});
  for (int k = i + 1; k <= j - 1; ++k) w.letters.push_back({LetterKind::Rho, k});
  return w;
}

VWord kword_to_vword(const VtnContext& ctx, const racg::Word& k) {
  VWord out;
  out.n = ctx.n;
  for (int id : k) {
    VWord piece = alpha_word(ctx.n, ctx.alpha_of(id));
    out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  return out;
}

VWord lambda_word(const VtnContext& ctx, const Permutation& p) {
  VWord out;
  out.n = ctx.n;
  for (int t : p.transposition_word()) out.letters.push_back({LetterKind::Rho, t});
  return out;
}

VWord recompose(const VtnContext& ctx, const SemidirectElement& e) {
  VWord out = kword_to_vword(ctx, e.k);
  VWord tail = lambda_word(ctx, e.sigma);
  out.letters.insert(out.letters.end(), tail.letters.begin(), tail.letters.end());
  return out;
}

racg::Word relabel(const VtnContext& ctx, const racg::Word& g, const Permutation& p) {
  racg::Word out;
  out.reserve(g.size());
  for (int id : g) {
    AlphaLetter a = alpha_conjugate(p, ctx.alpha_of(id));
    out.push_back(ctx.alpha_id(a.i, a.j));
  }
  return racg::normalize(ctx.kt, out);
}

SemidirectElement multiply(const VtnContext& ctx, const SemidirectElement& a, const SemidirectElement& b) {
  if (a.sigma.degree() != ctx.n || b.sigma.degree() != ctx.n)
    throw std::invalid_argument("degree mismatch");
  racg::Word k = a.k;
  racg::Word bk = relabel(ctx, b.k, a.sigma);
  k.insert(k.end(), bk.begin(), bk.end());
  return {racg::normalize(ctx.kt, k), a.sigma.compose(b.sigma)};
}

SemidirectElement inverse(const VtnContext& ctx, const SemidirectElement& a) {
  // (k sigma)^{-1} = sigma^{-1} k^{-1} sigma sigma^{-1}
  Permutation si = a.sigma.inverse();
  racg::Word rev(a.k.rbegin(), a.k.rend());
  return {relabel(ctx, rev, si), si};
}

SemidirectElement identity_element(const VtnContext& ctx) {
  return {{}, Permutation::identity(ctx.n)};
}

bool equal_vtn(const VtnContext& ctx, const VWord& u, const VWord& v) {
  if (u.n != v.n) throw std::invalid_argument("strand count mismatch");
  return decompose(ctx, u) == decompose(ctx, v);
}

racg::Word embed_twin(const VtnContext& ctx, const racg::Word& twin_word) {
  racg::Word out;
  out.reserve(twin_word.size());
  for (int id : twin_word) {
    if (id < 0 || id >= ctx.twin.size()) throw std::invalid_argument("unknown twin letter");
    out.push_back(ctx.alpha_id(id + 1, id + 2));
  }
  return racg::normalize(ctx.kt, out);
}

bool fixed_by_rho(const VtnContext& ctx, const racg::Word& g, int k) {
  if (k < 1 || k > ctx.n - 1) throw std::invalid_argument("rho index out of range");
  racg::Word nf = racg::normalize(ctx.kt, g);
  return relabel(ctx, nf, Permutation::transposition(ctx.n, k)) == nf;
}

racg::LetterSet set_Xk(const VtnContext& ctx, int k) {
  racg::LetterSet out;
  for (int id = 0; id < ctx.kt.size(); ++id) {
    auto [i, j] = racg::kt_letter_pair(ctx.n, id);
    if (i != k && i != k + 1 && j != k && j != k + 1) out.push_back(id);
  }
  return out;
}

namespace {

// Display order: k-length first, then element order.
std::vector<SemidirectElement> presentation_sort(std::vector<SemidirectElement> v) {
  std::sort(v.begin(), v.end(), [](const SemidirectElement& a, const SemidirectElement& b) {
    if (a.k.size() != b.k.size()) return a.k.size() < b.k.size();
    return a < b;
  });
  return v;
}

}  // namespace

std::vector<SemidirectElement> ball_vtn_serial(const VtnContext& ctx, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::set<SemidirectElement> seen;
  std::vector<SemidirectElement> frontier{identity_element(ctx)};
  seen.insert(frontier[0]);
  std::vector<SemidirectElement> gens;
  for (int i = 1; i <= ctx.n - 1; ++i) {
    VWord s{ctx.n, {{LetterKind::S, i}}};
    VWord r{ctx.n, {{LetterKind::Rho, i}}};
    gens.push_back(decompose(ctx, s));
    gens.push_back(decompose(ctx, r));
  }
  for (int len = 1; len <= radius; ++len) {
    std::vector<SemidirectElement> next;
    for (const SemidirectElement& e : frontier)
      for (const SemidirectElement& g : gens) {
        SemidirectElement v = multiply(ctx, e, g);
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return presentation_sort(std::vector<SemidirectElement>(seen.begin(), seen.end()));
}

std::vector<SemidirectElement> ball_vtn(const VtnContext& ctx, int radius, int jobs) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<SemidirectElement> gens;
  for (int i = 1; i <= ctx.n - 1; ++i) {
    VWord s{ctx.n, {{LetterKind::S, i}}};
    VWord r{ctx.n, {{LetterKind::Rho, i}}};
    gens.push_back(decompose(ctx, s));
    gens.push_back(decompose(ctx, r));
  }
  std::vector<SemidirectElement> all{identity_element(ctx)};
  std::vector<SemidirectElement> frontier = all;
  for (int len = 1; len <= radius; ++len) {
    std::vector<SemidirectElement> next;
#ifdef _OPENMP
    const int team = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(team)
    {
      std::vector<SemidirectElement> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (long long t = 0; t < static_cast<long long>(frontier.size()); ++t)
        for (const SemidirectElement& g : gens) local.push_back(multiply(ctx, frontier[t], g));
#pragma omp critical
      next.insert(next.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
#else
    (void)jobs;
    for (const SemidirectElement& e : frontier)
      for (const SemidirectElement& g : gens) next.push_back(multiply(ctx, e, g));
#endif
    // dedup and membership both use the default element order
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<SemidirectElement> fresh;
    for (SemidirectElement& e : next)
      if (!std::binary_search(all.begin(), all.end(), e)) fresh.push_back(std::move(e));
    std::vector<SemidirectElement> merged;
    std::merge(all.begin(), all.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    all = std::move(merged);
    frontier = std::move(fresh);
    if (frontier.empty()) break;
  }
  return presentation_sort(std::move(all));
}

std::string print_semidirect(const VtnContext& ctx, const SemidirectElement& e) {
  return "k = " + racg::print_word(ctx.kt, e.k) + " ; sigma = " + e.sigma.images_line();
}

SemidirectElement parse_semidirect(const VtnContext& ctx, const std::string& text) {
  std::size_t keq = text.find("k =");
  std::size_t semi = text.find(';');
  std::size_t seq = text.find("sigma =");
  if (keq == std::string::npos || semi == std::string::npos || seq == std::string::npos || seq < semi)
    throw parse_error("expected 'k = <word> ; sigma = [images]'");
  std::string kpart = text.substr(keq + 3, semi - keq - 3);
  std::string spart = text.substr(seq + 7);
  std::size_t lb = spart.find('[');
  std::size_t rb = spart.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw parse_error("expected bracketed image list");
  std::vector<int> images;
  std::string inner = spart.substr(lb + 1, rb - lb - 1);
  std::size_t k = 0;
  while (k < inner.size()) {
    if (std::isspace(static_cast<unsigned char>(inner[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < inner.size() && std::isdigit(static_cast<unsigned char>(inner[k]))) ++k;
    if (k == start) throw parse_error("bad image list entry");
    images.push_back(std::stoi(inner.substr(start, k - start)));
  }
  if (static_cast<int>(images.size()) != ctx.n) throw parse_error("image list has wrong degree");
  racg::Word kw = racg::parse_word(ctx.kt, kpart);
  return {racg::normalize(ctx.kt, kw), Permutation::from_images(images)};
}

VWord parse_mixed_word(const VtnContext& ctx, const std::string& text) {
  VWord out;
  out.n = ctx.n;
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
    try {
      if (tok[0] == 'a') {
        KWord kw = parse_kword(tok, ctx.n);
        VWord piece = alpha_word(ctx.n, kw.letters.at(0));
        out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
      } else {
        VWord piece = parse_vword(tok, ctx.n);
        out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
      }
    } catch (const parse_error&) {
      throw parse_error("syntax error at position " + std::to_string(start + 1) + ": bad token '" + tok + "'",
                        start + 1);
    }
  }
  return out;
}

}  // namespace vtwin
