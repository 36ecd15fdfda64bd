#include "ssb/coxeter.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "ssb/errors.hpp"

namespace ssb {

void CoxeterMatrix::validate() const {
  int n = rank();
  if (n == 0) throw ConfigError("coxeter matrix: empty");
  for (int i = 0; i < n; i++) {
    if ((int)m[i].size() != n)
      throw ConfigError("coxeter matrix: not square");
    if (m[i][i] != 1)
      throw ConfigError("coxeter matrix: diagonal entry != 1");
    for (int j = 0; j < n; j++) {
      if (m[i][j] != m[j][i])
        throw ConfigError("coxeter matrix: not symmetric");
      if (i != j && m[i][j] != 0 && m[i][j] < 2)
        throw ConfigError("coxeter matrix: off-diagonal entry < 2");
    }
  }
}

namespace {

// ShortLex comparison for words of possibly different lengths.
bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

// Canonical form of an arbitrary word, by Tits' theorem: the braid-move
// closure of a word either reaches a word with a repeated adjacent letter
// (then cancel and start over with the shorter word) or consists exactly
// of the reduced expressions of the element.
Word CoxeterSystem::canonical_word(const Word& w) const {
  Word cur = w;
restart:
  if (cur.size() <= 1) return cur;
  std::set<Word> seen;
  std::queue<Word> todo;
  seen.insert(cur);
  todo.push(cur);
  while (!todo.empty()) {
    Word u = todo.front();
    todo.pop();
    for (size_t i = 0; i + 1 < u.size(); i++) {
      if (u[i] == u[i + 1]) {
        Word shorter;
        shorter.insert(shorter.end(), u.begin(), u.begin() + i);
        shorter.insert(shorter.end(), u.begin() + i + 2, u.end());
        cur = shorter;
        goto restart;
      }
      int mst = matrix_.m[u[i]][u[i + 1]];
      if (mst == 0) continue;  // infinite: no braid move
      if (i + mst > u.size()) continue;
      bool alternating = true;
      for (int k = 0; k < mst; k++)
        if (u[i + k] != (k % 2 == 0 ? u[i] : u[i + 1])) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      Word moved = u;
      for (int k = 0; k < mst; k++)
        moved[i + k] = (k % 2 == 0 ? u[i + 1] : u[i]);
      if (seen.insert(moved).second) todo.push(moved);
    }
  }
  return *seen.begin();  // set of reduced words, lex order = ShortLex here
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, int length_cap)
    : matrix_(std::move(matrix)), cap_(length_cap) {
  matrix_.validate();
  if (cap_ < 0) throw ConfigError("length cap must be nonnegative");
  int n = rank();

  std::map<Word, Elem> index;
  words_.push_back({});
  index[{}] = 0;
  right_.push_back(std::vector<Elem>(n, -1));

  // pending transitions into the next level: (source, gen, canonical word)
  std::vector<Elem> level = {0};
  for (int L = 0; !level.empty(); L++) {
    std::set<Word> next_words;
    std::vector<std::tuple<Elem, Gen, Word>> pending;
    for (Elem w : level) {
      for (Gen s = 0; s < n; s++) {
        Word cand = words_[w];
        cand.push_back(s);
        Word canon = canonical_word(cand);
        if ((int)canon.size() == L + 1) {
          if (L + 1 > cap_) {
            right_[w][s] = -1;  // escape: product leaves the window
            continue;
          }
          next_words.insert(canon);
          pending.emplace_back(w, s, std::move(canon));
        } else {
          right_[w][s] = index.at(canon);  // length went down
        }
      }
    }
    std::vector<Elem> next_level;
    for (const Word& u : next_words) {
      Elem id = (Elem)words_.size();
      words_.push_back(u);
      index[u] = id;
      right_.push_back(std::vector<Elem>(n, -1));
      next_level.push_back(id);
    }
    for (auto& [w, s, canon] : pending) right_[w][s] = index.at(canon);
    if (next_level.empty() && L + 1 <= cap_) full_group_ = true;
    level = std::move(next_level);
  }

  inverse_.resize(words_.size());
  for (Elem w = 0; w < (int)words_.size(); w++) {
    Word rev(words_[w].rbegin(), words_[w].rend());
    inverse_[w] = from_word(rev);
  }

  // Bruhat order by the lifting property: for s a right descent of y,
  // x <= y iff (xs < x ? xs <= ys : x <= ys).  Ids are sorted by length,
  // so rows for shorter elements are already complete.
  int N = (int)words_.size();
  bruhat_.assign(N, std::vector<bool>(N, false));
  for (Elem y = 0; y < N; y++) {
    bruhat_[y][y] = true;
    if (y == 0) continue;
    Gen s = words_[y].back();
    Elem ys = right_[y][s];
    for (Elem x = 0; x < N; x++) {
      if (length(x) >= length(y)) continue;
      Elem xs = right_[x][s];
      bruhat_[y][x] =
          (xs >= 0 && length(xs) < length(x)) ? bruhat_[ys][xs] : bruhat_[ys][x];
    }
  }
}

std::string CoxeterSystem::name(Elem w) const {
  if (w == 0) return "e";
  std::ostringstream os;
  for (Gen s : words_[w]) os << "s" << (s + 1);
  return os.str();
}

Elem CoxeterSystem::mult_gen(Elem w, Gen s) const {
  Elem r = right_[w][s];
  if (r < 0)
    throw WindowError("product leaves the enumerated length window (cap " +
                      std::to_string(cap_) + ")");
  return r;
}

Elem CoxeterSystem::mult(Elem a, Elem b) const {
  Elem r = a;
  for (Gen s : words_[b]) r = mult_gen(r, s);
  return r;
}

Elem CoxeterSystem::left_mult_gen(Gen s, Elem w) const {
  // s*w = (w^{-1} s)^{-1}; both stay in the window iff l(sw) <= cap.
  return inverse_[mult_gen(inverse_[w], s)];
}

Elem CoxeterSystem::from_word(const Word& w) const {
  Elem r = 0;
  for (Gen s : w) {
    if (s < 0 || s >= rank()) throw ConfigError("generator index out of range");
    r = mult_gen(r, s);
  }
  return r;
}

bool CoxeterSystem::right_descent(Elem w, Gen s) const {
  Elem ws = right_[w][s];
  if (ws < 0) return false;  // length went up and escaped
  return length(ws) < length(w);
}

bool CoxeterSystem::left_descent(Elem w, Gen s) const {
  return right_descent(inverse_[w], s);
}

std::vector<Elem> CoxeterSystem::parabolic_elements(
    const std::vector<Gen>& S0) const {
  std::set<Elem> seen = {0};
  std::queue<Elem> todo;
  todo.push(0);
  while (!todo.empty()) {
    Elem w = todo.front();
    todo.pop();
    for (Gen s : S0) {
      Elem ws = right_[w][s];
      if (ws < 0)
        throw WindowError(
            "parabolic subgroup does not close inside the length window");
      if (seen.insert(ws).second) todo.push(ws);
    }
  }
  return std::vector<Elem>(seen.begin(), seen.end());
}

Elem CoxeterSystem::longest_element(const std::vector<Gen>& S0) const {
  std::vector<Elem> elems = parabolic_elements(S0);
  Elem best = 0;
  for (Elem w : elems)
    if (length(w) > length(best)) best = w;
  for (Elem w : elems)
    if (w != best && length(w) == length(best))
      throw InternalError("longest element not unique");
  for (Gen s : S0)
    if (!right_descent(best, s))
      throw InternalError("longest element misses a descent");
  return best;
}

std::pair<Elem, Elem> CoxeterSystem::coset_decompose(
    const std::vector<Gen>& S0, Elem w) const {
  Word u_letters;
  Elem x = w;
  bool found = true;
  while (found) {
    found = false;
    for (Gen s : S0) {
      if (left_descent(x, s)) {
        u_letters.push_back(s);
        x = left_mult_gen(s, x);
        found = true;
        break;
      }
    }
  }
  Elem u = from_word(u_letters);
  return {u, x};
}

bool CoxeterSystem::is_min_coset_rep(const std::vector<Gen>& S0,
                                     Elem w) const {
  for (Gen s : S0)
    if (left_descent(w, s)) return false;
  return true;
}

std::vector<Word> CoxeterSystem::reduced_words(Elem w) const {
  const Word& c = words_[w];
  if (c.empty()) return {c};
  std::set<Word> seen = {c};
  std::queue<Word> todo;
  todo.push(c);
  while (!todo.empty()) {
    Word u = todo.front();
    todo.pop();
    for (size_t i = 0; i + 1 < u.size(); i++) {
      int mst = matrix_.m[u[i]][u[i + 1]];
      if (mst == 0 || i + mst > u.size()) continue;
      bool alternating = true;
      for (int k = 0; k < mst; k++)
        if (u[i + k] != (k % 2 == 0 ? u[i] : u[i + 1])) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      Word moved = u;
      for (int k = 0; k < mst; k++)
        moved[i + k] = (k % 2 == 0 ? u[i + 1] : u[i]);
      if (seen.insert(moved).second) todo.push(moved);
    }
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

CosetTable::CosetTable(const CoxeterSystem& W, std::vector<Gen> S0)
    : W_(&W), S0_(std::move(S0)) {
  std::sort(S0_.begin(), S0_.end());
  S0_.erase(std::unique(S0_.begin(), S0_.end()), S0_.end());
  for (Gen s : S0_)
    if (s < 0 || s >= W.rank())
      throw ConfigError("S0 generator index out of range");
  coset_of_elem_.assign(W.size(), -1);
  for (Elem w = 0; w < W.size(); w++)
    if (W.is_min_coset_rep(S0_, w)) {
      coset_of_elem_[w] = (int)min_reps_.size();
      min_reps_.push_back(w);
    }
  for (Elem w = 0; w < W.size(); w++)
    if (coset_of_elem_[w] < 0)
      coset_of_elem_[w] = coset_of_elem_[W.coset_decompose(S0_, w).second];
}

bool CosetTable::parabolic_is_all() const {
  return (int)S0_.size() == W_->rank();
}

int CosetTable::coset_of(Elem w) const { return coset_of_elem_[w]; }

CosetTable::GenAction CosetTable::act_gen(int coset, Gen s) const {
  Elem wm = min_reps_[coset];
  Elem x = W_->mult_gen(wm, s);
  if (W_->is_min_coset_rep(S0_, x)) {
    Case k = W_->length(x) > W_->length(wm) ? Case::UpAcross : Case::DownAcross;
    return {k, coset_of_elem_[x]};
  }
  // Deodhar: x = t * wm for a unique t in S0, same coset.
  return {Case::Stay, coset};
}

bool CosetTable::is_closed(const std::vector<int>& I) const {
  std::vector<bool> in(size(), false);
  for (int c : I) in[c] = true;
  for (int c : I)
    for (int d = 0; d < size(); d++)
      if (leq(d, c) && !in[d]) return false;
  return true;
}

bool CosetTable::is_open(const std::vector<int>& I) const {
  std::vector<bool> in(size(), false);
  for (int c : I) in[c] = true;
  for (int c : I)
    for (int d = 0; d < size(); d++)
      if (leq(c, d) && !in[d]) return false;
  return true;
}

}  // namespace ssb
