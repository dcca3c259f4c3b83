#include "vtwin/racg.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vtwin::racg {

RacgPresentation RacgPresentation::kt(int n) {
  if (n < 2) throw std::invalid_argument("kt presentation needs n >= 2");
  RacgPresentation p;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) {
        pairs.emplace_back(i, j);
        p.names.push_back("a" + std::to_string(i) + "," + std::to_string(j));
      }
  const int m = static_cast<int>(pairs.size());
  p.comm.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      bool disjoint = i != k && i != l && j != k && j != l;
      p.comm[static_cast<std::size_t>(a) * m + b] = (a != b && disjoint) ? 1 : 0;
    }
  return p;
}

RacgPresentation RacgPresentation::twin(int n) {
  if (n < 2) throw std::invalid_argument("twin presentation needs n >= 2");
  RacgPresentation p;
  const int m = n - 1;
  for (int i = 1; i <= m; ++i) p.names.push_back("s" + std::to_string(i));
  p.comm.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      p.comm[static_cast<std::size_t>(a) * m + b] = (std::abs(a - b) >= 2) ? 1 : 0;
  return p;
}

int kt_letter_id(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("bad alpha letter indices");
  return (i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0);
}

std::pair<int, int> kt_letter_pair(int n, int id) {
  int i = id / (n - 1) + 1;
  int r = id % (n - 1);
  int j = r + 1 + (r + 1 >= i ? 1 : 0);
  return {i, j};
}

LetterSet full_letter_set(const RacgPresentation& p) {
  LetterSet s(p.size());
  for (int k = 0; k < p.size(); ++k) s[k] = k;
  return s;
}

namespace {

void check_letters(const RacgPresentation& p, const Word& w) {
  for (int x : w)
    if (x < 0 || x >= p.size()) throw std::invalid_argument("unknown letter id " + std::to_string(x));
}

// Stack-based free reduction for partially commutative involutions: a
// letter cancels against an earlier equal letter when everything between
// them commutes with it. The output word is geodesic.
Word reduce(const RacgPresentation& p, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    bool cancelled = false;
    for (int k = static_cast<int>(out.size()) - 1; k >= 0; --k) {
      if (out[k] == x) {
        out.erase(out.begin() + k);
        cancelled = true;
        break;
      }
      if (!p.commutes(out[k], x)) break;
    }
    if (!cancelled) out.push_back(x);
  }
  return out;
}

// Left-greedy canonical permutation of a reduced word: repeatedly emit the
// least letter whose occurrence can be commuted to the front. Equal
// letters never commute past each other, so the chosen occurrence is
// unique and the output is the lexicographic minimum of the commutation
// class.
Word canonicalize(const RacgPresentation& p, Word rem) {
  Word out;
  out.reserve(rem.size());
  while (!rem.empty()) {
    int best_pos = -1;
    for (std::size_t t = 0; t < rem.size(); ++t) {
      bool movable = true;
      for (std::size_t u = 0; u < t; ++u)
        if (!p.commutes(rem[u], rem[t])) {
          movable = false;
          break;
        }
      if (movable && (best_pos < 0 || rem[t] < rem[best_pos])) best_pos = static_cast<int>(t);
    }
    out.push_back(rem[best_pos]);
    rem.erase(rem.begin() + best_pos);
  }
  return out;
}

// Occurrences that can be commuted to the front (resp. back) of w.
std::vector<std::size_t> initial_positions(const RacgPresentation& p, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    bool movable = true;
    for (std::size_t u = 0; u < t; ++u)
      if (!p.commutes(w[u], w[t])) {
        movable = false;
        break;
      }
    if (movable) out.push_back(t);
  }
  return out;
}

std::vector<std::size_t> final_positions(const RacgPresentation& p, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    bool movable = true;
    for (std::size_t u = t + 1; u < w.size(); ++u)
      if (!p.commutes(w[t], w[u])) {
        movable = false;
        break;
      }
    if (movable) out.push_back(t);
  }
  return out;
}

}  // namespace

Word normalize(const RacgPresentation& p, const Word& w) {
  check_letters(p, w);
  return canonicalize(p, reduce(p, w));
}

bool is_canonical(const RacgPresentation& p, const Word& w) { return normalize(p, w) == w; }

bool equal(const RacgPresentation& p, const Word& u, const Word& v) {
  return normalize(p, u) == normalize(p, v);
}

CyclicReduction cyclically_reduce(const RacgPresentation& p, const Word& w) {
  check_letters(p, w);
  CyclicReduction r;
  // peel on the word as given before reducing, so a visible conjugating
  // letter is reported even when it would also cancel across the middle
  Word cur = w;
  for (;;) {
    auto front = initial_positions(p, cur);
    auto back = final_positions(p, cur);
    int peel_letter = -1;
    std::size_t peel_front = 0, peel_back = 0;
    for (std::size_t f : front) {
      for (std::size_t b : back) {
        if (f != b && cur[f] == cur[b] && (peel_letter < 0 || cur[f] < peel_letter)) {
          peel_letter = cur[f];
          peel_front = f;
          peel_back = b;
        }
      }
    }
    if (peel_letter < 0) {
      Word nf = normalize(p, cur);
      if (nf == cur) break;
      cur = std::move(nf);
      continue;
    }
    r.conjugator.push_back(peel_letter);
    // front occurrence precedes the back one: equal letters never commute
    cur.erase(cur.begin() + peel_back);
    cur.erase(cur.begin() + peel_front);
  }
  r.core = cur;
  return r;
}

bool is_involution(const RacgPresentation& p, const Word& w) {
  Word core = cyclically_reduce(p, w).core;
  if (core.empty()) return false;
  for (std::size_t a = 0; a < core.size(); ++a)
    for (std::size_t b = a + 1; b < core.size(); ++b)
      if (!p.commutes(core[a], core[b])) return false;
  return true;
}

LetterSet support(const RacgPresentation& p, const Word& w) {
  Word nf = normalize(p, w);
  LetterSet s(nf.begin(), nf.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool parabolic_member(const RacgPresentation& p, const Word& w, const LetterSet& X) {
  LetterSet s = support(p, w);
  return std::includes(X.begin(), X.end(), s.begin(), s.end());
}

LetterSet parabolic_intersect(const LetterSet& X, const LetterSet& Y) {
  LetterSet out;
  std::set_intersection(X.begin(), X.end(), Y.begin(), Y.end(), std::back_inserter(out));
  return out;
}

CosetDecomposition coset_decompose(const RacgPresentation& p, const Word& g, const LetterSet& H) {
  Word rep = normalize(p, g);
  Word h;
  for (;;) {
    int pick = -1;
    for (std::size_t t : final_positions(p, rep)) {
      if (std::binary_search(H.begin(), H.end(), rep[t]) && (pick < 0 || rep[t] < rep[pick]))
        pick = static_cast<int>(t);
    }
    if (pick < 0) break;
    h.insert(h.begin(), rep[pick]);
    rep.erase(rep.begin() + pick);
  }
  return {canonicalize(p, rep), normalize(p, h)};
}

namespace {

bool in_set(const LetterSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

AmalgamFactorization amalgam_factorize(const RacgPresentation& p, const Word& g,
                                       const std::vector<LetterSet>& factors, const LetterSet& H) {
  // amalgam hypothesis
  for (std::size_t a = 0; a < factors.size(); ++a) {
    if (!std::includes(factors[a].begin(), factors[a].end(), H.begin(), H.end()))
      throw std::invalid_argument("amalgam hypothesis fails: factor " + std::to_string(a + 1) +
                                  " does not contain the amalgamated set");
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      for (int x : factors[a]) {
        if (in_set(H, x)) continue;
        for (int y : factors[b]) {
          if (in_set(H, y)) continue;
          if (x == y)
            throw std::invalid_argument("amalgam hypothesis fails: letter pair (" + p.names[x] +
                                        ", " + p.names[x] + ") shared outside the amalgamated set");
          if (p.commutes(x, y))
            throw std::invalid_argument("amalgam hypothesis fails: commuting letter pair (" +
                                        p.names[x] + ", " + p.names[y] + ")");
        }
      }
    }
  }
  LetterSet uni;
  for (const LetterSet& f : factors) {
    LetterSet merged;
    std::set_union(uni.begin(), uni.end(), f.begin(), f.end(), std::back_inserter(merged));
    uni = std::move(merged);
  }
  if (!parabolic_member(p, g, uni))
    throw std::invalid_argument("amalgam hypothesis fails: word leaves the factor union");

  // Cut raw pieces right-to-left. The remainder is H-minimal on entry to
  // every iteration, so its movable-to-back letters are all outside H and
  // sit in a single factor; the piece peel also swallows the H letters it
  // exposes, which keeps the invariant.
  auto [r, h_acc] = coset_decompose(p, g, H);
  std::vector<std::pair<int, Word>> pieces;  // left-to-right after reversal
  while (!r.empty()) {
    int factor = -1;
    for (std::size_t t : final_positions(p, r)) {
      if (in_set(H, r[t])) throw std::logic_error("amalgam peel lost H-minimality");
      for (std::size_t a = 0; a < factors.size(); ++a)
        if (in_set(factors[a], r[t])) {
          if (factor >= 0 && factor != static_cast<int>(a))
            throw std::logic_error("amalgam peel saw two factors at the back");
          factor = static_cast<int>(a);
        }
    }
    if (factor < 0) throw std::logic_error("amalgam peel found no factor");
    Word piece;
    for (;;) {
      int pick = -1;
      for (std::size_t t : final_positions(p, r))
        if (in_set(factors[factor], r[t]) && (pick < 0 || r[t] < r[pick])) pick = static_cast<int>(t);
      if (pick < 0) break;
      piece.insert(piece.begin(), r[pick]);
      r.erase(r.begin() + pick);
    }
    pieces.emplace_back(factor, std::move(piece));
  }
  std::reverse(pieces.begin(), pieces.end());

  // Left-to-right pass: make each syllable a minimal coset representative,
  // sliding the stripped W[H] part into the next piece.
  AmalgamFactorization out;
  Word carry;
  for (auto& [factor, piece] : pieces) {
    Word merged = carry;
    merged.insert(merged.end(), piece.begin(), piece.end());
    auto [t, c] = coset_decompose(p, merged, H);
    if (t.empty()) throw std::logic_error("amalgam syllable collapsed into the amalgamated subgroup");
    out.syllables.emplace_back(factor + 1, std::move(t));
    carry = std::move(c);
  }
  carry.insert(carry.end(), h_acc.begin(), h_acc.end());
  out.tail = normalize(p, carry);
  return out;
}

bool is_irreducible(const RacgPresentation& p) {
  const int m = p.size();
  if (m <= 1) return true;
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < m; ++b)
      if (!seen[b] && a != b && !p.commutes(a, b)) {
        seen[b] = 1;
        ++count;
        stack.push_back(b);
      }
  }
  return count == m;
}

bool word_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Word> ball_serial(const RacgPresentation& p, const LetterSet& X, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<Word> all{{}};
  std::vector<Word> frontier{{}};
  for (int len = 1; len <= radius; ++len) {
    std::set<Word> next;
    for (const Word& w : frontier) {
      for (int x : X) {
        Word v = w;
        v.push_back(x);
        v = normalize(p, v);
        if (static_cast<int>(v.size()) == len) next.insert(std::move(v));
      }
    }
    frontier.assign(next.begin(), next.end());
    if (frontier.empty()) break;
    all.insert(all.end(), frontier.begin(), frontier.end());
  }
  return all;
}

std::vector<Word> ball(const RacgPresentation& p, const LetterSet& X, int radius, int jobs) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<Word> all{{}};
  std::vector<Word> frontier{{}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<Word> next;
#ifdef _OPENMP
    const int team = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(team)
    {
      std::vector<Word> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (long long k = 0; k < static_cast<long long>(frontier.size()); ++k) {
        for (int x : X) {
          Word v = frontier[k];
          v.push_back(x);
          v = normalize(p, v);
          if (static_cast<int>(v.size()) == len) local.push_back(std::move(v));
        }
      }
#pragma omp critical
      next.insert(next.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
#else
    (void)jobs;
    for (const Word& w : frontier)
      for (int x : X) {
        Word v = w;
        v.push_back(x);
        v = normalize(p, v);
        if (static_cast<int>(v.size()) == len) next.push_back(std::move(v));
      }
#endif
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
    all.insert(all.end(), frontier.begin(), frontier.end());
  }
  return all;
}

std::string print_word(const RacgPresentation& p, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += p.names[w[k]];
  }
  return out;
}

Word parse_word(const RacgPresentation& p, const std::string& text) {
  Word w;
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
    auto it = std::find(p.names.begin(), p.names.end(), tok);
    if (it == p.names.end())
      throw parse_error("unknown letter '" + tok + "' at position " + std::to_string(start + 1), start + 1);
    w.push_back(static_cast<int>(it - p.names.begin()));
  }
  return w;
}

}  // namespace vtwin::racg
