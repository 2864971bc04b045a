#include "adlv/folding.hpp"

#include <unordered_map>

namespace adlv {

// ---- QPoly ----

QPoly QPoly::constant(Int v) {
  QPoly p;
  if (v != 0) p.c_.push_back(v);
  return p;
}

QPoly QPoly::q_power(int k) {
  QPoly p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, 0);
  p.c_.back() = 1;
  return p;
}

Int QPoly::checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("QPoly add");
  return r;
}

Int QPoly::checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("QPoly mul");
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    c_[k] = checked_add(c_[k], o.c_[k]);
  trim();
  return *this;
}

void QPoly::mul_q() {
  if (c_.empty()) return;
  c_.insert(c_.begin(), 0);
}

void QPoly::mul_q_minus_one() {
  if (c_.empty()) return;
  std::vector<Int> out(c_.size() + 1, 0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    out[k + 1] = checked_add(out[k + 1], c_[k]);
    out[k] = checked_add(out[k], -c_[k]);
  }
  c_ = std::move(out);
  trim();
}

Int QPoly::eval(Int q) const {
  Int acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;)
    acc = checked_add(checked_mul(acc, q), c_[k]);
  return acc;
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    Int c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    Int a = c < 0 ? -c : c;
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

// ---- FoldTable ----

FoldTable::Key FoldTable::key_of(const AffineWeylElt& x) {
  Key k = to_std(x.lambda);
  k.push_back(x.w);
  return k;
}

std::optional<int> FoldTable::dim_at(const AffineWeylElt& y) const {
  auto it = entries_.find(key_of(y));
  if (it == entries_.end()) return std::nullopt;
  return it->second.dim;
}

const QPoly* FoldTable::count_at(const AffineWeylElt& y) const {
  auto it = entries_.find(key_of(y));
  if (it == entries_.end()) return nullptr;
  return &it->second.count;
}

QPoly FoldTable::total() const {
  QPoly t;
  for (const auto& [k, e] : entries_) t += e.count;
  return t;
}

// ---- crossing sign (exact rational reference path) ----

int crossing_sign(const AffineWeylGroup& aw, const AffineWeylElt& z, int i,
                  Orientation o) {
  const RootSystem& rs = aw.rs();
  AffineWeylElt z2 = aw.right_mult_gen(z, i);
  RatVec b1 = aw.barycenter(z);
  RatVec b2 = aw.barycenter(z2);
  int wall = -1;
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    if (rs.pair_pos(a, b1).floor() != rs.pair_pos(a, b2).floor()) {
      if (wall >= 0) throw InvariantError("step crosses more than one wall");
      wall = a;
    }
  }
  if (wall < 0) throw InvariantError("step crosses no wall");
  bool rising = rs.pair_pos(wall, b2) > rs.pair_pos(wall, b1);
  bool wall_neg_for_o = rs.w_neg(o.w, wall);
  return (rising != wall_neg_for_o) ? +1 : -1;
}

// ---- folding automaton ----

namespace {
std::atomic<std::uint64_t> g_fold_calls{0};
}

std::uint64_t fold_invocations() { return g_fold_calls.load(); }

FoldTable fold_all(const AffineWeylGroup& aw, std::span<const int> word,
                   Orientation o, FoldMode mode) {
  g_fold_calls.fetch_add(1, std::memory_order_relaxed);
  const RootSystem& rs = aw.rs();
  if (aw.length(aw.from_word(word)) != static_cast<Int>(word.size()))
    throw ConfigError("fold_all: word is not reduced");

  struct State {
    AffineWeylElt z;
    int dim;
    QPoly poly;
  };
  const bool count_mode = mode == FoldMode::PointCount;

  std::vector<State> cur;
  cur.push_back({aw.identity(), 0, QPoly::constant(1)});

  std::vector<State> next;
  std::unordered_map<AffineWeylElt, int, AffineEltHash> next_index;

  auto emit = [&](const AffineWeylElt& z, int dim, const QPoly* poly) {
    auto it = next_index.find(z);
    if (it == next_index.end()) {
      State s;
      s.z = z;
      s.dim = dim;
      if (poly) s.poly = *poly;
      next_index.emplace(z, static_cast<int>(next.size()));
      next.push_back(std::move(s));
    } else {
      State& s = next[static_cast<std::size_t>(it->second)];
      s.dim = std::max(s.dim, dim);
      if (poly) s.poly += *poly;
    }
  };

  for (int letter : word) {
    next.clear();
    next_index.clear();
    for (State& s : cur) {
      const auto& e = aw.edge(s.z.w, letter);
      bool positive = e.ascending != rs.w_neg(o.w, e.wall_root);
      AffineWeylElt z2{letter == 0
                           ? IntVec(s.z.lambda + rs.w_theta_coroot(s.z.w))
                           : s.z.lambda,
                       e.next_w};
      if (!positive) {
        // whole affine line folds away: one successor, a q-point factor
        if (count_mode) {
          QPoly p = std::move(s.poly);
          p.mul_q();
          emit(z2, s.dim + 1, &p);
        } else {
          emit(z2, s.dim + 1, nullptr);
        }
      } else {
        // one point crosses towards the retraction chamber, the rest fold
        if (count_mode) {
          emit(z2, s.dim, &s.poly);
          QPoly p = std::move(s.poly);
          p.mul_q_minus_one();
          emit(s.z, s.dim + 1, &p);
        } else {
          emit(z2, s.dim, nullptr);
          emit(s.z, s.dim + 1, nullptr);
        }
      }
    }
    std::swap(cur, next);
  }

  FoldTable table;
  for (const State& s : cur) {
    FoldTable::Entry e;
    e.dim = s.dim;
    e.count = s.poly;
    table.entries_.emplace(FoldTable::key_of(s.z), std::move(e));
  }
  return table;
}

std::optional<int> d_dim(const AffineWeylGroup& aw, const AffineWeylElt& x,
                         const AffineWeylElt& y, Orientation o) {
  auto word = aw.reduced_word(x);
  return fold_all(aw, word, o, FoldMode::MaxDim).dim_at(y);
}

QPoly point_count(const AffineWeylGroup& aw, const AffineWeylElt& x,
                  const AffineWeylElt& y, Orientation o) {
  auto word = aw.reduced_word(x);
  FoldTable t = fold_all(aw, word, o, FoldMode::PointCount);
  const QPoly* p = t.count_at(y);
  return p ? *p : QPoly();
}

}  // namespace adlv
